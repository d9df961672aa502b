#include "csn/capacity.hpp"

#include <stdexcept>

#include "csn/mincut.hpp"
#include "csn/sequencing.hpp"

namespace csn {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

Rational combo(int intra, int cross, const SystemConfig& cfg) {
  return Rational(intra) * cfg.beta_I() + Rational(cross) * cfg.beta_C();
}

// w*_{k-i+1} for the one-separate system.
Rational csn_weight(const SystemConfig& cfg, int i) {
  const int k = cfg.k();
  const int R = cfg.R();
  const int d_C = cfg.repair().d_C;
  const int full = (k - 1) / R;
  const int split = (full + 1) * (k - 1 - full * R);
  if (i == k) return combo(0, R + d_C - k, cfg);
  if (i <= split) {
    const int c = ceil_div(i, full + 1);
    return combo(R - c, d_C - i + c, cfg);
  }
  // full >= 1 here: full == 0 makes split == k - 1.
  const int f = (k - i - 1) / full;
  return combo(f, d_C + R - i - f, cfg);
}

// w*_{k-i+1} for the cluster-only system.
Rational cluster_weight(const SystemConfig& cfg, int i) {
  const int k = cfg.k();
  const int R = cfg.R();
  const int d_C = cfg.repair().d_C;
  const int full = k / R;
  const int split = (full + 1) * (k - full * R);
  if (i <= split) {
    const int c = ceil_div(i, full + 1);
    return combo(R - c, d_C - i + c, cfg);
  }
  const int f = (k - i) / full;
  return combo(f, d_C + R - i - f, cfg);
}

}  // namespace

const char* to_string(WeightVariant v) {
  switch (v) {
    case WeightVariant::ClusterDSS: return "cluster";
    case WeightVariant::CsnOneSeparate: return "csn";
  }
  return "unknown";
}

const char* to_string(Comparison c) { return c == Comparison::Equal ? "Equal" : "Reduced"; }

WeightVariant variant_for(const SystemConfig& cfg) {
  if (cfg.E() == 0) return WeightVariant::ClusterDSS;
  if (cfg.E() == 1) return WeightVariant::CsnOneSeparate;
  throw Error(ErrorCode::UnsupportedE, "no closed form for E=" + std::to_string(cfg.E()) + "; use the brute-force oracle");
}

Rational WeightSequence::total() const {
  Rational t;
  for (const Rational& w : w_star) t += w;
  return t;
}

WeightSequence weight_sequence(const SystemConfig& cfg, WeightVariant variant) {
  if (cfg.E() >= 2) {
    throw Error(ErrorCode::UnsupportedE, "no closed form for E=" + std::to_string(cfg.E()));
  }
  if (variant == WeightVariant::CsnOneSeparate && cfg.E() < 1) {
    throw Error(ErrorCode::UnsupportedE, "one-separate weights need E >= 1");
  }
  const int k = cfg.k();
  WeightSequence seq;
  seq.variant = variant;
  seq.w_star.resize(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) {
    seq.w_star[static_cast<std::size_t>(k - i)] =
        variant == WeightVariant::CsnOneSeparate ? csn_weight(cfg, i) : cluster_weight(cfg, i);
  }
  return seq;
}

Rational system_capacity(const SystemConfig& cfg) {
  return capped_sum(weight_sequence(cfg, variant_for(cfg)).w_star, cfg.alpha());
}

Rational mincut_by_location(const SystemConfig& cfg, int j) {
  return mincut(cfg, optimal_order_with_separate_at(cfg.nodes(), j)).value;
}

Rational min_alpha(const SystemConfig& cfg, const Rational& file_size) {
  if (file_size.sign() < 0) throw Error(ErrorCode::InvalidArgument, "file size must be non-negative");
  const std::vector<Rational> w = weight_sequence(cfg, variant_for(cfg)).w_star;
  const int k = static_cast<int>(w.size());
  Rational below;  // sum of w*_j for j < i
  for (int i = 1; i <= k; ++i) {
    const Rational& wi = w[static_cast<std::size_t>(i - 1)];
    // Capacity at alpha = w*_i closes segment i.
    const Rational segment_end = below + wi * Rational(k - i + 1);
    if (file_size <= segment_end) return (file_size - below) / Rational(k - i + 1);
    below += wi;
  }
  throw Error(ErrorCode::Unstorable,
              "file size " + file_size.str() + " exceeds the saturated capacity " + below.str());
}

std::vector<Rational> rational_grid(const Rational& start, const Rational& stop, const Rational& step) {
  if (step.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "grid step must be positive");
  std::vector<Rational> grid;
  for (Rational v = start; v <= stop; v += step) grid.push_back(v);
  return grid;
}

TradeoffCurve tradeoff_curve(const NodeParams& nodes, int d_C, const Rational& tau, const Rational& file_size,
                             const std::vector<Rational>& beta_C_grid) {
  if (tau < Rational(1)) throw Error(ErrorCode::BandwidthOrder, "tau = beta_I / beta_C must be >= 1");
  TradeoffCurve curve;
  curve.d_C = d_C;
  for (const Rational& beta_C : beta_C_grid) {
    if (beta_C.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "grid values must be positive");
    RawConfig raw{nodes, RepairParams{Rational(0), nodes.R - 1, tau * beta_C, d_C, beta_C}};
    const SystemConfig cfg = validate_config(raw);
    curve.variant = variant_for(cfg);
    try {
      curve.points.push_back({beta_C, min_alpha(cfg, file_size), file_size});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Unstorable) throw;
      curve.unstorable.push_back(beta_C);
    }
  }
  return curve;
}

ComparisonVerdict compare_separate(const NodeParams& nodes, const RepairParams& repair, const Rational& alpha) {
  if (nodes.E != 0) throw Error(ErrorCode::InvalidArgument, "comparison starts from a cluster-only system (E=0)");
  RepairParams r = repair;
  r.alpha = alpha;
  const SystemConfig without = validate_config(RawConfig{nodes, r});
  NodeParams augmented = nodes;
  augmented.n += 1;
  augmented.E = 1;
  const SystemConfig with = validate_config(RawConfig{augmented, r});
  ComparisonVerdict v;
  v.capacity_without = system_capacity(without);
  v.capacity_with = system_capacity(with);
  if (v.capacity_with > v.capacity_without) {
    // The augmented system minimises over a superset of repair sequences.
    throw std::logic_error("separate node increased capacity");
  }
  v.outcome = v.capacity_with == v.capacity_without ? Comparison::Equal : Comparison::Reduced;
  return v;
}

}  // namespace csn
