#include "csn/maxflow.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace csn {

MaxFlow::MaxFlow(int vertices) : adj_(static_cast<std::size_t>(vertices)) {}

int MaxFlow::add_edge(int from, int to, std::int64_t capacity) {
  if (capacity < 0) throw std::invalid_argument("negative edge capacity");
  if (from < 0 || to < 0 || from >= vertex_count() || to >= vertex_count()) {
    throw std::out_of_range("edge endpoint out of range");
  }
  const int id = static_cast<int>(arcs_.size());
  arcs_.push_back({to, capacity});
  arcs_.push_back({from, 0});
  adj_[static_cast<std::size_t>(from)].push_back(id);
  adj_[static_cast<std::size_t>(to)].push_back(id + 1);
  return id;
}

bool MaxFlow::build_levels(int source, int sink) {
  level_.assign(adj_.size(), -1);
  std::queue<int> frontier;
  level_[static_cast<std::size_t>(source)] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    int v = frontier.front();
    frontier.pop();
    for (int id : adj_[static_cast<std::size_t>(v)]) {
      const Arc& a = arcs_[static_cast<std::size_t>(id)];
      if (a.residual > 0 && level_[static_cast<std::size_t>(a.to)] < 0) {
        level_[static_cast<std::size_t>(a.to)] = level_[static_cast<std::size_t>(v)] + 1;
        frontier.push(a.to);
      }
    }
  }
  return level_[static_cast<std::size_t>(sink)] >= 0;
}

std::int64_t MaxFlow::push(int v, int sink, std::int64_t limit) {
  if (v == sink) return limit;
  auto& it = next_[static_cast<std::size_t>(v)];
  const auto& edges = adj_[static_cast<std::size_t>(v)];
  for (; it < edges.size(); ++it) {
    const int id = edges[it];
    Arc& a = arcs_[static_cast<std::size_t>(id)];
    if (a.residual <= 0 || level_[static_cast<std::size_t>(a.to)] != level_[static_cast<std::size_t>(v)] + 1) continue;
    std::int64_t pushed = push(a.to, sink, std::min(limit, a.residual));
    if (pushed > 0) {
      a.residual -= pushed;
      arcs_[static_cast<std::size_t>(id ^ 1)].residual += pushed;
      return pushed;
    }
  }
  return 0;
}

std::int64_t MaxFlow::run(int source, int sink) {
  std::int64_t total = 0;
  while (build_levels(source, sink)) {
    next_.assign(adj_.size(), 0);
    while (std::int64_t f = push(source, sink, std::numeric_limits<std::int64_t>::max())) total += f;
  }
  return total;
}

std::vector<bool> MaxFlow::source_side(int source) const {
  std::vector<bool> seen(adj_.size(), false);
  std::vector<int> stack{source};
  seen[static_cast<std::size_t>(source)] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int id : adj_[static_cast<std::size_t>(v)]) {
      const Arc& a = arcs_[static_cast<std::size_t>(id)];
      if (a.residual > 0 && !seen[static_cast<std::size_t>(a.to)]) {
        seen[static_cast<std::size_t>(a.to)] = true;
        stack.push_back(a.to);
      }
    }
  }
  return seen;
}

}  // namespace csn
