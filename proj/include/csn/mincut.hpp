#pragma once

#include <vector>

#include "csn/model.hpp"
#include "csn/rational.hpp"

namespace csn {

// Edge counts from the source side into the i-th cut newcomer. For a cluster
// newcomer these are intra-cluster (beta_I) and cross-cluster (beta_C) edges;
// a separate newcomer has only cross edges.
struct PartCoefficients {
  bool separate = false;
  int intra = 0;
  int cross = 0;

  friend bool operator==(const PartCoefficients&, const PartCoefficients&) = default;
};

struct WeightVector {
  std::vector<Rational> w;

  std::size_t size() const { return w.size(); }
  const Rational& operator[](std::size_t i) const { return w[i]; }
};

struct CutReport {
  Rational value;
  WeightVector weights;
  // True where alpha < w[i], i.e. the storage edge is the cheaper cut.
  std::vector<bool> capped;
};

// h[i] = number of j <= i with pi[j] == pi[i]; separate entries count among
// themselves.
std::vector<int> relative_location(const ClusterOrder& order);

// Throws InvalidOrder unless the order fits the node layout (length k,
// labels in [0, L], per-cluster counts <= R, separate count <= E).
void check_order(const NodeParams& nodes, const ClusterOrder& order);

std::vector<PartCoefficients> part_coefficients(const SystemConfig& cfg, const ClusterOrder& order);

WeightVector part_incoming_weights(const SystemConfig& cfg, const ClusterOrder& order);

CutReport mincut(const SystemConfig& cfg, const ClusterOrder& order);

// Sum of min(alpha, w) over a weight list.
Rational capped_sum(const std::vector<Rational>& weights, const Rational& alpha);

}  // namespace csn
