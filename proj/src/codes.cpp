#include "csn/codes.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "csn/error.hpp"

namespace csn {

namespace {

using Row = std::vector<FieldElement>;

// Linear functionals of a node's two symbols over the message
// (x_1, x_2, x_3, y_1, y_2, y_3).
std::array<Row, 2> node_functionals(const CodeInstance& inst, int node) {
  Row x(6, 0);
  Row y(6, 0);
  if (node >= 1 && node <= 3) {
    x[static_cast<std::size_t>(node - 1)] = 1;
    y[static_cast<std::size_t>(node + 2)] = 1;
  } else if (node == 4 || node == 5) {
    const std::size_t col = static_cast<std::size_t>(node - 4);
    for (std::size_t j = 0; j < 3; ++j) {
      x[j] = inst.A[j][col];
      y[j + 3] = inst.B[j][col];
    }
  } else {
    throw std::invalid_argument("node id must be in 1..5");
  }
  return {x, y};
}

Row combine(const PrimeField& f, const Row& a, FieldElement ca, const Row& b, FieldElement cb) {
  Row out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(f.mul(ca, a[i]), f.mul(cb, b[i]));
  return out;
}

std::vector<Row> received_functionals(const CodeInstance& inst, int partner, const std::vector<HelperDownload>& downloads) {
  const PrimeField f(inst.q);
  std::vector<Row> rows;
  if (partner != 0) {
    const auto p = node_functionals(inst, partner);
    rows.push_back(p[0]);
    rows.push_back(p[1]);
  }
  for (const auto& d : downloads) {
    const auto h = node_functionals(inst, d.node);
    rows.push_back(combine(f, h[0], d.c1, h[1], d.c2));
  }
  return rows;
}

const NodeContents& find_node(const std::vector<NodeContents>& nodes, int id) {
  for (const auto& n : nodes) {
    if (n.id == id) return n;
  }
  throw std::invalid_argument("node " + std::to_string(id) + " is not among the survivors");
}

// Helpers outside the failed node's cluster, in node order.
std::vector<int> cross_helpers(int failed) {
  std::vector<int> out;
  for (int node = 1; node <= kCodeNodes; ++node) {
    if (node != failed && node != cluster_partner(failed)) out.push_back(node);
  }
  return out;
}

// splitmix64; fixed arithmetic keeps searches identical across platforms.
class SeededStream {
 public:
  explicit SeededStream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [1, q-1] by rejection.
  FieldElement nonzero(std::uint32_t q) {
    const std::uint64_t span = q - 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t r;
    do {
      r = next();
    } while (r >= limit);
    return static_cast<FieldElement>(1 + r % span);
  }

 private:
  std::uint64_t state_;
};

// Projective representative t of GF(q)^2: (1, t) for t < q, (0, 1) for t = q.
std::pair<FieldElement, FieldElement> projective_point(std::uint32_t q, std::uint32_t t) {
  if (t < q) return {1, t};
  return {0, 1};
}

bool find_cluster_plan(CodeInstance& inst, int failed) {
  const std::uint32_t q = inst.q;
  const std::vector<int> helpers = cross_helpers(failed);
  const int partner = cluster_partner(failed);
  for (std::uint32_t a = 0; a <= q; ++a) {
    for (std::uint32_t b = 0; b <= q; ++b) {
      for (std::uint32_t c = 0; c <= q; ++c) {
        std::vector<HelperDownload> downloads;
        const std::uint32_t pick[3] = {a, b, c};
        for (std::size_t h = 0; h < 3; ++h) {
          const auto [c1, c2] = projective_point(q, pick[h]);
          downloads.push_back({helpers[h], c1, c2});
        }
        try {
          Matrix decode = solve_decode(inst, failed, partner, downloads);
          inst.plans[static_cast<std::size_t>(failed - 1)] = RepairPlan{failed, partner, downloads, decode};
          return true;
        } catch (const Error&) {
        }
      }
    }
  }
  return false;
}

std::uint64_t attempt_seed(std::uint64_t seed, std::uint64_t attempt) {
  SeededStream mix(seed ^ (attempt * 0xd1b54a32d192ed03ULL));
  return mix.next();
}

bool try_attempt(std::uint32_t q, std::uint64_t seed, std::uint64_t attempt, CodeInstance& out) {
  const PrimeField f(q);
  SeededStream rng(attempt_seed(seed, attempt));
  CodeInstance inst;
  inst.q = q;
  inst.A.assign(3, Row(2, 0));
  inst.B.assign(3, Row(2, 0));
  for (auto& row : inst.A) {
    for (auto& v : row) v = rng.nonzero(q);
  }
  for (auto& row : inst.B) {
    for (auto& v : row) v = rng.nonzero(q);
  }
  const auto& A = inst.A;
  auto& B = inst.B;
  // Node 4 and node 5 interference from nodes 1 and 2 can both line up with
  // a single download only if a21 b11 a12 b22 = a11 b21 b12 a22.
  B[1][1] = f.div(f.mul(f.mul(A[0][0], B[1][0]), f.mul(B[0][1], A[1][1])), f.mul(f.mul(A[1][0], B[0][0]), A[0][1]));
  if (!is_mds(f, inst.A) || !is_mds(f, inst.B)) return false;

  const FieldElement c11 = rng.nonzero(q);
  const FieldElement c12 = rng.nonzero(q);
  const FieldElement s4 = rng.nonzero(q);
  const FieldElement s5 = rng.nonzero(q);
  const FieldElement s2 = rng.nonzero(q);
  const FieldElement c41 = f.mul(s4, f.div(c11, A[0][0]));
  const FieldElement c42 = f.mul(s4, f.div(c12, B[0][0]));
  const FieldElement c51 = f.mul(s5, f.div(c11, A[0][1]));
  const FieldElement c52 = f.mul(s5, f.div(c12, B[0][1]));
  const FieldElement c21 = f.mul(s2, f.mul(c41, A[1][0]));
  const FieldElement c22 = f.mul(s2, f.mul(c42, B[1][0]));
  std::vector<HelperDownload> sep = {{1, c11, c12}, {2, c21, c22}, {4, c41, c42}, {5, c51, c52}};
  try {
    Matrix decode = solve_decode(inst, kSeparateNode, 0, sep);
    inst.plans[kSeparateNode - 1] = RepairPlan{kSeparateNode, 0, sep, decode};
  } catch (const Error&) {
    return false;
  }
  if (!check_rank_conditions(inst)) return false;
  for (int node : {1, 2, 4, 5}) {
    if (!find_cluster_plan(inst, node)) return false;
  }
  if (!validation_error(inst).empty()) return false;
  out = std::move(inst);
  return true;
}

}  // namespace

int cluster_partner(int node) {
  switch (node) {
    case 1: return 2;
    case 2: return 1;
    case 3: return 0;
    case 4: return 5;
    case 5: return 4;
  }
  throw std::invalid_argument("node id must be in 1..5");
}

std::array<NodeContents, kCodeNodes> encode(const Message& message, const CodeInstance& inst) {
  const PrimeField f(inst.q);
  std::array<NodeContents, kCodeNodes> out;
  for (int node = 1; node <= kCodeNodes; ++node) {
    const auto fn = node_functionals(inst, node);
    FieldElement x = 0;
    FieldElement y = 0;
    for (std::size_t i = 0; i < 6; ++i) {
      x = f.add(x, f.mul(fn[0][i], message[i] % inst.q));
      y = f.add(y, f.mul(fn[1][i], message[i] % inst.q));
    }
    out[static_cast<std::size_t>(node - 1)] = {node, x, y};
  }
  return out;
}

Message data_collect(const std::vector<NodeContents>& nodes, const CodeInstance& inst) {
  if (nodes.size() != 3) throw Error(ErrorCode::InvalidArgument, "data collection needs exactly 3 nodes");
  std::set<int> ids;
  for (const auto& n : nodes) ids.insert(n.id);
  if (ids.size() != 3) throw Error(ErrorCode::InvalidArgument, "data collection nodes must be distinct");

  const PrimeField f(inst.q);
  Matrix system;
  std::vector<FieldElement> rhs;
  for (const auto& n : nodes) {
    const auto fn = node_functionals(inst, n.id);
    system.push_back(fn[0]);
    rhs.push_back(n.x);
    system.push_back(fn[1]);
    rhs.push_back(n.y);
  }
  if (f.rank(system) != 6) {
    throw Error(ErrorCode::SingularSystem, "nodes do not determine the message");
  }
  const auto x = f.solve(system, rhs);
  Message m{};
  std::copy(x->begin(), x->end(), m.begin());
  return m;
}

Matrix solve_decode(const CodeInstance& inst, int failed, int partner, const std::vector<HelperDownload>& downloads) {
  const PrimeField f(inst.q);
  const Matrix gt = transpose(received_functionals(inst, partner, downloads));
  Matrix decode;
  for (const Row& target : node_functionals(inst, failed)) {
    auto d = f.solve(gt, target);
    if (!d) {
      throw Error(ErrorCode::AlignmentFailure,
                  "downloads for node " + std::to_string(failed) + " do not span its contents");
    }
    decode.push_back(*d);
  }
  return decode;
}

std::vector<FieldElement> repair_downloads(int failed, const CodeInstance& inst,
                                           const std::vector<NodeContents>& surviving) {
  const PrimeField f(inst.q);
  const RepairPlan& plan = inst.plan(failed);
  std::vector<FieldElement> received;
  if (plan.partner != 0) {
    const NodeContents& p = find_node(surviving, plan.partner);
    received.push_back(p.x);
    received.push_back(p.y);
  }
  for (const auto& d : plan.downloads) {
    const NodeContents& h = find_node(surviving, d.node);
    received.push_back(f.add(f.mul(d.c1, h.x), f.mul(d.c2, h.y)));
  }
  return received;
}

NodeContents repair(int failed, const CodeInstance& inst, const std::vector<NodeContents>& surviving) {
  const PrimeField f(inst.q);
  const RepairPlan& plan = inst.plan(failed);
  const std::vector<FieldElement> received = repair_downloads(failed, inst, surviving);
  if (plan.decode.size() != 2) throw Error(ErrorCode::AlignmentFailure, "plan has no decode map");
  // The decode map must reproduce the node's functionals, otherwise the
  // result would only be right for some messages.
  const Matrix g = received_functionals(inst, plan.partner, plan.downloads);
  const auto target = node_functionals(inst, failed);
  if (plan.decode[0].size() != g.size() || plan.decode[1].size() != g.size() ||
      f.multiply(plan.decode, g) != Matrix(target.begin(), target.end())) {
    throw Error(ErrorCode::AlignmentFailure, "decode map does not recover node " + std::to_string(failed));
  }
  NodeContents out{failed, 0, 0};
  for (std::size_t i = 0; i < received.size(); ++i) {
    out.x = f.add(out.x, f.mul(plan.decode[0][i], received[i]));
    out.y = f.add(out.y, f.mul(plan.decode[1][i], received[i]));
  }
  return out;
}

int repair_bandwidth(int failed, const CodeInstance& inst) { return inst.plan(failed).symbols_downloaded(); }

bool check_rank_conditions(const CodeInstance& inst) {
  const RepairPlan& plan = inst.plan(kSeparateNode);
  FieldElement c[6][2] = {};
  std::set<int> seen;
  for (const auto& d : plan.downloads) {
    if (d.node < 1 || d.node > kCodeNodes || d.node == kSeparateNode) return false;
    c[d.node][0] = d.c1;
    c[d.node][1] = d.c2;
    seen.insert(d.node);
  }
  if (seen != std::set<int>{1, 2, 4, 5}) return false;
  const PrimeField f(inst.q);
  const auto& A = inst.A;
  const auto& B = inst.B;
  const Matrix first = {{c[1][0], c[1][1]},
                        {f.mul(c[4][0], A[0][0]), f.mul(c[4][1], B[0][0])},
                        {f.mul(c[5][0], A[0][1]), f.mul(c[5][1], B[0][1])}};
  const Matrix second = {{c[2][0], c[2][1]},
                         {f.mul(c[4][0], A[1][0]), f.mul(c[4][1], B[1][0])},
                         {f.mul(c[5][0], A[1][1]), f.mul(c[5][1], B[1][1])}};
  const Matrix recover = {{f.mul(c[4][0], A[2][0]), f.mul(c[4][1], B[2][0])},
                          {f.mul(c[5][0], A[2][1]), f.mul(c[5][1], B[2][1])}};
  return f.rank(first) == 1 && f.rank(second) == 1 && f.rank(recover) == 2;
}

bool is_mds(const PrimeField& f, const Matrix& M) {
  if (M.size() != 3) return false;
  Matrix gen(3, Row(5, 0));
  for (std::size_t i = 0; i < 3; ++i) {
    if (M[i].size() != 2) return false;
    gen[i][i] = 1;
    gen[i][3] = M[i][0] % f.q();
    gen[i][4] = M[i][1] % f.q();
  }
  for (std::size_t a = 0; a < 5; ++a) {
    for (std::size_t b = a + 1; b < 5; ++b) {
      for (std::size_t c = b + 1; c < 5; ++c) {
        Matrix sub(3, Row(3));
        for (std::size_t i = 0; i < 3; ++i) sub[i] = {gen[i][a], gen[i][b], gen[i][c]};
        if (f.rank(sub) != 3) return false;
      }
    }
  }
  return true;
}

std::string validation_error(const CodeInstance& inst) {
  if (!is_prime(inst.q)) return "modulus " + std::to_string(inst.q) + " is not prime";
  const PrimeField f(inst.q);
  for (const Matrix* m : {&inst.A, &inst.B}) {
    if (m->size() != 3) return "encoding matrix must be 3x2";
    for (const auto& row : *m) {
      if (row.size() != 2) return "encoding matrix must be 3x2";
      for (FieldElement v : row) {
        if (v >= inst.q) return "encoding entry outside the field";
      }
    }
  }
  if (!is_mds(f, inst.A)) return "[I|A] is not MDS";
  if (!is_mds(f, inst.B)) return "[I|B] is not MDS";

  for (int node = 1; node <= kCodeNodes; ++node) {
    const RepairPlan& plan = inst.plan(node);
    if (plan.failed != node) return "plan " + std::to_string(node) + " is stored under the wrong node";
    if (plan.partner != cluster_partner(node)) return "plan " + std::to_string(node) + " has the wrong partner";
    std::vector<int> nodes;
    for (const auto& d : plan.downloads) nodes.push_back(d.node);
    if (nodes != cross_helpers(node)) return "plan " + std::to_string(node) + " breaks the download contract";
    const int expected = node == kSeparateNode ? 4 : 5;
    if (plan.symbols_downloaded() != expected) return "plan " + std::to_string(node) + " has the wrong bandwidth";
  }
  if (!check_rank_conditions(inst)) return "separate-node rank conditions fail";

  // Exactness on the unit-message basis covers every message by linearity.
  for (std::size_t unit = 0; unit < 6; ++unit) {
    Message m{};
    m[unit] = 1;
    const auto stored = encode(m, inst);
    for (int node = 1; node <= kCodeNodes; ++node) {
      std::vector<NodeContents> surviving;
      for (const auto& s : stored) {
        if (s.id != node) surviving.push_back(s);
      }
      try {
        if (repair(node, inst, surviving) != stored[static_cast<std::size_t>(node - 1)]) {
          return "repair of node " + std::to_string(node) + " is not exact";
        }
      } catch (const Error& e) {
        return e.what();
      }
    }
    for (int a = 1; a <= 5; ++a) {
      for (int b = a + 1; b <= 5; ++b) {
        for (int c = b + 1; c <= 5; ++c) {
          const std::vector<NodeContents> pick = {stored[static_cast<std::size_t>(a - 1)],
                                                  stored[static_cast<std::size_t>(b - 1)],
                                                  stored[static_cast<std::size_t>(c - 1)]};
          if (data_collect(pick, inst) != m) return "data collection round trip failed";
        }
      }
    }
  }
  return "";
}

CodeInstance search_construction(std::uint32_t q, std::uint64_t seed, std::uint64_t attempt_budget, SearchStats* stats) {
  const PrimeField field(q);  // validates q
  (void)field;
  CodeInstance found;
  for (std::uint64_t attempt = 0; attempt < attempt_budget; ++attempt) {
    if (try_attempt(q, seed, attempt, found)) {
      if (stats) stats->attempts = attempt + 1;
      return found;
    }
  }
  if (stats) stats->attempts = attempt_budget;
  throw Error(ErrorCode::SearchExhausted,
              "no instance over GF(" + std::to_string(q) + ") in " + std::to_string(attempt_budget) + " attempts");
}

std::string to_text(const CodeInstance& inst) {
  std::ostringstream os;
  os << "csn-code 1\n";
  os << "q " << inst.q << "\n";
  auto matrix = [&](const char* name, const Matrix& m) {
    os << name;
    for (const auto& row : m) {
      for (FieldElement v : row) os << ' ' << v;
    }
    os << "\n";
  };
  matrix("A", inst.A);
  matrix("B", inst.B);
  for (const auto& plan : inst.plans) {
    os << "plan " << plan.failed << " partner " << plan.partner << "\n";
    for (const auto& d : plan.downloads) os << "download " << d.node << ' ' << d.c1 << ' ' << d.c2 << "\n";
    for (const auto& row : plan.decode) {
      os << "decode";
      for (FieldElement v : row) os << ' ' << v;
      os << "\n";
    }
  }
  os << "end\n";
  return os.str();
}

CodeInstance from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  CodeInstance inst;
  RepairPlan* current = nullptr;
  bool header = false;
  bool ended = false;
  auto fail = [](const std::string& why) { return Error(ErrorCode::InvalidArgument, "code text: " + why); };
  auto values = [&](std::istringstream& ls) {
    Row row;
    long long v;
    while (ls >> v) {
      if (v < 0) throw fail("negative field element");
      row.push_back(static_cast<FieldElement>(v));
    }
    if (!ls.eof()) throw fail("malformed number");
    return row;
  };
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (ended) throw fail("content after end");
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (!header) {
      int version = 0;
      if (key != "csn-code" || !(ls >> version) || version != 1) throw fail("missing csn-code 1 header");
      header = true;
    } else if (key == "q") {
      if (!(ls >> inst.q)) throw fail("bad q");
    } else if (key == "A" || key == "B") {
      const Row flat = values(ls);
      if (flat.size() != 6) throw fail(key + " needs 6 entries");
      Matrix m(3, Row(2));
      for (std::size_t i = 0; i < 6; ++i) m[i / 2][i % 2] = flat[i];
      (key == "A" ? inst.A : inst.B) = m;
    } else if (key == "plan") {
      int node = 0;
      std::string word;
      int partner = 0;
      if (!(ls >> node >> word >> partner) || word != "partner" || node < 1 || node > kCodeNodes) throw fail("bad plan line");
      current = &inst.plans[static_cast<std::size_t>(node - 1)];
      *current = RepairPlan{node, partner, {}, {}};
    } else if (key == "download") {
      if (!current) throw fail("download before plan");
      const Row r = values(ls);
      if (r.size() != 3) throw fail("download needs node c1 c2");
      current->downloads.push_back({static_cast<int>(r[0]), r[1], r[2]});
    } else if (key == "decode") {
      if (!current) throw fail("decode before plan");
      current->decode.push_back(values(ls));
    } else if (key == "end") {
      ended = true;
    } else {
      throw fail("unknown key '" + key + "'");
    }
  }
  if (!header || !ended) throw fail("truncated");
  return inst;
}

}  // namespace csn
