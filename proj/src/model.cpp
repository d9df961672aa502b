#include "csn/model.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace csn {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NodeCount: return "NodeCount";
    case ErrorCode::KRange: return "KRange";
    case ErrorCode::NodeShape: return "NodeShape";
    case ErrorCode::DInvalid: return "DInvalid";
    case ErrorCode::BandwidthOrder: return "BandwidthOrder";
    case ErrorCode::NegativeValue: return "NegativeValue";
    case ErrorCode::DCRange: return "DCRange";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::S0Range: return "S0Range";
    case ErrorCode::PositionRange: return "PositionRange";
    case ErrorCode::UnsupportedE: return "UnsupportedE";
    case ErrorCode::Unstorable: return "Unstorable";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::AlignmentFailure: return "AlignmentFailure";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

void validate_nodes(const NodeParams& p) {
  if (p.L < 1 || p.R < 1 || p.E < 0) {
    throw Error(ErrorCode::NodeShape, "need L >= 1, R >= 1, E >= 0 (got L=" + std::to_string(p.L) +
                                          ", R=" + std::to_string(p.R) + ", E=" + std::to_string(p.E) + ")");
  }
  if (p.n != p.L * p.R + p.E) {
    throw Error(ErrorCode::NodeCount, "n must equal L*R + E = " + std::to_string(p.L * p.R + p.E) +
                                          " (got n=" + std::to_string(p.n) + ")");
  }
  if (p.k < 1 || p.k > p.n - 1) {
    throw Error(ErrorCode::KRange, "k must lie in [1, n-1] = [1, " + std::to_string(p.n - 1) +
                                       "] (got k=" + std::to_string(p.k) + ")");
  }
}

SystemConfig validate_config(const RawConfig& raw) {
  const NodeParams& p = raw.nodes;
  const RepairParams& r = raw.repair;
  validate_nodes(p);
  if (r.d_I != p.R - 1) {
    throw Error(ErrorCode::DInvalid, "d_I must equal R - 1 = " + std::to_string(p.R - 1) +
                                         " (got d_I=" + std::to_string(r.d_I) + ")");
  }
  if (r.alpha.sign() < 0 || r.beta_C.sign() < 0) {
    throw Error(ErrorCode::NegativeValue, "alpha and beta_C must be non-negative (alpha=" + r.alpha.str() +
                                              ", beta_C=" + r.beta_C.str() + ")");
  }
  if (r.beta_I < r.beta_C) {
    throw Error(ErrorCode::BandwidthOrder,
                "beta_I >= beta_C required (beta_I=" + r.beta_I.str() + ", beta_C=" + r.beta_C.str() + ")");
  }
  int lo = std::max(0, p.k - p.R + 1);
  int hi = p.n - p.R;
  if (r.d_C < lo || r.d_C > hi) {
    throw Error(ErrorCode::DCRange, "d_C must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                                        "] so that k <= d <= n-1 (got d_C=" + std::to_string(r.d_C) + ")");
  }
  return SystemConfig(p, r);
}

RawConfig make_raw(int k, int L, int R, int E, int d_C, Rational beta_I, Rational beta_C, Rational alpha) {
  RawConfig raw;
  raw.nodes = NodeParams{L * R + E, k, L, R, E};
  raw.repair = RepairParams{std::move(alpha), R - 1, std::move(beta_I), d_C, std::move(beta_C)};
  return raw;
}

SystemConfig SystemConfig::with_alpha(const Rational& alpha) const {
  if (alpha.sign() < 0) throw Error(ErrorCode::NegativeValue, "alpha must be non-negative");
  SystemConfig copy = *this;
  copy.repair_.alpha = alpha;
  return copy;
}

std::string SystemConfig::describe() const {
  std::ostringstream os;
  os << "n=" << n() << " k=" << k() << " L=" << L() << " R=" << R() << " E=" << E() << " d_I=" << repair_.d_I
     << " d_C=" << repair_.d_C << " beta_I=" << beta_I() << " beta_C=" << beta_C() << " alpha=" << alpha();
  return os.str();
}

int SelectedNodeDistribution::total() const { return s0 + std::accumulate(s.begin(), s.end(), 0); }

std::string SelectedNodeDistribution::str() const {
  std::string out = "(" + std::to_string(s0);
  for (int c : s) out += "," + std::to_string(c);
  return out + ")";
}

std::string ClusterOrder::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(pi[i]);
  }
  return out + ")";
}

bool is_member(const NodeParams& nodes, const SelectedNodeDistribution& s) {
  if (static_cast<int>(s.s.size()) != nodes.L) return false;
  if (s.s0 < 0 || s.s0 > nodes.E) return false;
  for (std::size_t i = 0; i < s.s.size(); ++i) {
    if (s.s[i] < 0 || s.s[i] > nodes.R) return false;
    if (i > 0 && s.s[i] > s.s[i - 1]) return false;
  }
  return s.total() == nodes.k;
}

SelectedNodeDistribution distribution_of(const ClusterOrder& order, int L) {
  SelectedNodeDistribution s;
  s.s.assign(static_cast<std::size_t>(L), 0);
  for (int label : order.pi) {
    if (label < 0 || label > L) {
      throw Error(ErrorCode::InvalidOrder, "label " + std::to_string(label) + " outside [0, " + std::to_string(L) + "]");
    }
    if (label == 0) {
      ++s.s0;
    } else {
      ++s.s[static_cast<std::size_t>(label - 1)];
    }
  }
  return s;
}

namespace {

// Fill cluster slots [index, L) with non-increasing counts bounded by cap,
// largest first so the output is already in descending lexicographic order.
void fill_clusters(const NodeParams& nodes, std::size_t index, int remaining, int cap,
                   SelectedNodeDistribution& current, std::vector<SelectedNodeDistribution>& out) {
  const auto L = static_cast<std::size_t>(nodes.L);
  if (index == L) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  int slots_left = static_cast<int>(L - index);
  for (int v = std::min(cap, remaining); v >= 0; --v) {
    if (v * slots_left < remaining) break;
    current.s[index] = v;
    fill_clusters(nodes, index + 1, remaining - v, v, current, out);
  }
  current.s[index] = 0;
}

}  // namespace

std::vector<SelectedNodeDistribution> enumerate_distributions(const NodeParams& nodes) {
  if (nodes.L < 1 || nodes.R < 1 || nodes.E < 0 || nodes.k < 0) {
    throw Error(ErrorCode::NodeShape, "invalid node parameters");
  }
  if (nodes.k > nodes.E + nodes.L * nodes.R) {
    throw Error(ErrorCode::Infeasible, "cannot select k=" + std::to_string(nodes.k) + " from " +
                                           std::to_string(nodes.E + nodes.L * nodes.R) + " nodes");
  }
  std::vector<SelectedNodeDistribution> out;
  SelectedNodeDistribution current;
  current.s.assign(static_cast<std::size_t>(nodes.L), 0);
  for (int s0 = std::min(nodes.E, nodes.k); s0 >= 0; --s0) {
    current.s0 = s0;
    fill_clusters(nodes, 0, nodes.k - s0, nodes.R, current, out);
  }
  return out;
}

std::vector<ClusterOrder> enumerate_orders(const SelectedNodeDistribution& s) {
  std::vector<int> labels(static_cast<std::size_t>(s.s0), 0);
  for (std::size_t c = 0; c < s.s.size(); ++c) labels.insert(labels.end(), static_cast<std::size_t>(s.s[c]), static_cast<int>(c + 1));
  std::vector<ClusterOrder> out;
  do {
    out.push_back(ClusterOrder{labels});
  } while (std::next_permutation(labels.begin(), labels.end()));
  return out;
}

std::uint64_t count_orders(const SelectedNodeDistribution& s) {
  // Product of binomials C(running_total, part), each step exact.
  uint128 result = 1;
  int running = 0;
  auto take = [&](int part) {
    for (int i = 1; i <= part; ++i) {
      ++running;
      result = result * static_cast<unsigned>(running) / static_cast<unsigned>(i);
      if (result > std::numeric_limits<std::int64_t>::max()) throw std::overflow_error("order count overflow");
    }
  };
  take(s.s0);
  for (int c : s.s) take(c);
  return static_cast<std::uint64_t>(result);
}

}  // namespace csn
