#include "csn/sequencing.hpp"

#include <algorithm>

namespace csn {

SeparatePositions::SeparatePositions(std::initializer_list<int> p) : SeparatePositions(std::vector<int>(p)) {}

SeparatePositions::SeparatePositions(std::vector<int> p) : positions(std::move(p)) {
  std::sort(positions.begin(), positions.end());
  if (std::adjacent_find(positions.begin(), positions.end()) != positions.end()) {
    throw Error(ErrorCode::PositionRange, "duplicate separate position");
  }
}

bool SeparatePositions::contains(int position) const {
  return std::binary_search(positions.begin(), positions.end(), position);
}

SelectedNodeDistribution fill_clusters_horizontally(const NodeParams& nodes, int s0) {
  if (s0 < 0 || s0 > nodes.E || s0 > nodes.k) {
    throw Error(ErrorCode::S0Range, "s0=" + std::to_string(s0) + " outside [0, min(E, k)]");
  }
  const int cluster_nodes = nodes.k - s0;
  if (cluster_nodes > nodes.L * nodes.R) {
    throw Error(ErrorCode::Infeasible, "cannot place " + std::to_string(cluster_nodes) + " nodes in " +
                                           std::to_string(nodes.L) + " clusters of " + std::to_string(nodes.R));
  }
  const int full = cluster_nodes / nodes.R;
  SelectedNodeDistribution s;
  s.s0 = s0;
  s.s.assign(static_cast<std::size_t>(nodes.L), 0);
  for (int i = 1; i <= nodes.L; ++i) {
    if (i <= full) {
      s.s[static_cast<std::size_t>(i - 1)] = nodes.R;
    } else if (i == full + 1) {
      s.s[static_cast<std::size_t>(i - 1)] = cluster_nodes - full * nodes.R;
    }
  }
  return s;
}

SelectedNodeDistribution horizontal_selection(const NodeParams& nodes, int s0) {
  if (s0 != 0 && s0 != 1) {
    throw Error(ErrorCode::S0Range, "closed-form selection covers s0 in {0, 1}, got " + std::to_string(s0));
  }
  return fill_clusters_horizontally(nodes, s0);
}

ClusterOrder vertical_order(const SelectedNodeDistribution& s, const SeparatePositions& separate) {
  const int k = s.total();
  if (static_cast<int>(separate.size()) != s.s0) {
    throw Error(ErrorCode::PositionRange, std::to_string(separate.size()) + " separate positions for s0=" +
                                              std::to_string(s.s0));
  }
  for (int p : separate.positions) {
    if (p < 1 || p > k) throw Error(ErrorCode::PositionRange, "separate position " + std::to_string(p) + " outside [1, k]");
  }
  std::vector<int> remaining = s.s;
  const int L = static_cast<int>(remaining.size());
  ClusterOrder order;
  order.pi.reserve(static_cast<std::size_t>(k));
  int j = 1;
  for (int i = 1; i <= k; ++i) {
    if (separate.contains(i)) {
      order.pi.push_back(0);
      continue;
    }
    // Some cluster has nodes left because the counts sum to k.
    while (remaining[static_cast<std::size_t>(j - 1)] == 0) j = j % L + 1;
    order.pi.push_back(j);
    --remaining[static_cast<std::size_t>(j - 1)];
    j = j % L + 1;
  }
  return order;
}

ClusterOrder optimal_order_with_separate_at(const NodeParams& nodes, int j) {
  if (nodes.E < 1) throw Error(ErrorCode::S0Range, "no separate node in the system (E=0)");
  if (j < 1 || j > nodes.k) {
    throw Error(ErrorCode::PositionRange, "position " + std::to_string(j) + " outside [1, " + std::to_string(nodes.k) + "]");
  }
  return vertical_order(horizontal_selection(nodes, 1), SeparatePositions{j});
}

}  // namespace csn
