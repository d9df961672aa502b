#pragma once

#include <string>
#include <vector>

#include "csn/model.hpp"
#include "csn/rational.hpp"

namespace csn {

enum class WeightVariant {
  ClusterDSS,      // E = 0
  CsnOneSeparate,  // E = 1, separate node repaired last
};

const char* to_string(WeightVariant v);

// Variant matching cfg.E(); throws UnsupportedE for E >= 2.
WeightVariant variant_for(const SystemConfig& cfg);

// Part incoming weights of the capacity-achieving repair sequence, ascending.
struct WeightSequence {
  std::vector<Rational> w_star;
  WeightVariant variant = WeightVariant::ClusterDSS;

  Rational total() const;
};

// Closed-form piecewise weights. Only node params, d_C, beta_I and beta_C
// matter; alpha is ignored.
WeightSequence weight_sequence(const SystemConfig& cfg, WeightVariant variant);

// Sum of min(alpha, w*) for the variant matching E (E in {0, 1}).
Rational system_capacity(const SystemConfig& cfg);

// Min-cut of the one-separate vertical order with the separate node at j.
Rational mincut_by_location(const SystemConfig& cfg, int j);

// Least alpha whose capacity reaches file_size, by inverting the piecewise
// linear capacity curve. Throws Unstorable when file_size exceeds the sum of
// the weights.
Rational min_alpha(const SystemConfig& cfg, const Rational& file_size);

struct TradeoffPoint {
  Rational beta_C;
  Rational alpha_star;
  Rational file_size;
};

struct TradeoffCurve {
  int d_C = 0;
  WeightVariant variant = WeightVariant::ClusterDSS;
  std::vector<TradeoffPoint> points;
  // Grid values where the file cannot be stored at any alpha.
  std::vector<Rational> unstorable;
};

// For each beta_C in the grid sets beta_I = tau * beta_C and solves for the
// least alpha storing file_size.
TradeoffCurve tradeoff_curve(const NodeParams& nodes, int d_C, const Rational& tau, const Rational& file_size,
                             const std::vector<Rational>& beta_C_grid);

// start, start + step, ... up to and including stop.
std::vector<Rational> rational_grid(const Rational& start, const Rational& stop, const Rational& step);

enum class Comparison { Equal, Reduced };

const char* to_string(Comparison c);

struct ComparisonVerdict {
  Comparison outcome = Comparison::Equal;
  Rational capacity_without;
  Rational capacity_with;
};

// Capacity of a cluster-only system against the same system with one extra
// separate node and identical repair parameters, both at the given alpha.
ComparisonVerdict compare_separate(const NodeParams& nodes, const RepairParams& repair, const Rational& alpha);

}  // namespace csn
