#pragma once

#include <vector>

#include "csn/model.hpp"

namespace csn {

// 1-based positions in the repair sequence that hold separate nodes.
struct SeparatePositions {
  std::vector<int> positions;

  SeparatePositions() = default;
  SeparatePositions(std::initializer_list<int> p);
  explicit SeparatePositions(std::vector<int> p);

  std::size_t size() const { return positions.size(); }
  bool contains(int position) const;
};

// Fills clusters one after another: full clusters of R, then the remainder.
// Accepts any s0 <= E; the optimality results only cover s0 in {0, 1}, which
// is what horizontal_selection enforces.
SelectedNodeDistribution fill_clusters_horizontally(const NodeParams& nodes, int s0);

// Capacity-achieving distribution for s0 separate selected nodes, s0 in {0, 1}.
SelectedNodeDistribution horizontal_selection(const NodeParams& nodes, int s0);

// Assigns cluster labels column by column: cycles j = 1..L, skipping
// exhausted clusters without consuming a position. Positions in `separate`
// receive label 0.
ClusterOrder vertical_order(const SelectedNodeDistribution& s, const SeparatePositions& separate);

// Vertical order of the one-separate horizontal selection, separate node at j.
ClusterOrder optimal_order_with_separate_at(const NodeParams& nodes, int j);

}  // namespace csn
