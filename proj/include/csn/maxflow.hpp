#pragma once

#include <cstdint>
#include <vector>

namespace csn {

// Dinic max-flow on integer capacities. Small graphs only; no scaling.
class MaxFlow {
 public:
  explicit MaxFlow(int vertices);

  int add_edge(int from, int to, std::int64_t capacity);
  std::int64_t run(int source, int sink);

  // Vertices reachable from the source in the residual graph after run().
  std::vector<bool> source_side(int source) const;

  int vertex_count() const { return static_cast<int>(adj_.size()); }

 private:
  struct Arc {
    int to;
    std::int64_t residual;
  };

  bool build_levels(int source, int sink);
  std::int64_t push(int v, int sink, std::int64_t limit);

  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

}  // namespace csn
