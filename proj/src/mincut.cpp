#include "csn/mincut.hpp"

#include <algorithm>
#include <stdexcept>

namespace csn {

std::vector<int> relative_location(const ClusterOrder& order) {
  std::vector<int> seen;
  std::vector<int> h(order.pi.size());
  for (std::size_t i = 0; i < order.pi.size(); ++i) {
    auto label = static_cast<std::size_t>(order.pi[i]);
    if (label >= seen.size()) seen.resize(label + 1, 0);
    h[i] = ++seen[label];
  }
  return h;
}

void check_order(const NodeParams& nodes, const ClusterOrder& order) {
  if (order.k() != nodes.k) {
    throw Error(ErrorCode::InvalidOrder,
                "order " + order.str() + " has length " + std::to_string(order.k()) + ", expected k=" + std::to_string(nodes.k));
  }
  SelectedNodeDistribution s = distribution_of(order, nodes.L);
  if (s.s0 > nodes.E) {
    throw Error(ErrorCode::InvalidOrder, "order " + order.str() + " selects more separate nodes than E=" + std::to_string(nodes.E));
  }
  for (int c : s.s) {
    if (c > nodes.R) {
      throw Error(ErrorCode::InvalidOrder, "order " + order.str() + " selects more than R=" + std::to_string(nodes.R) + " nodes of a cluster");
    }
  }
}

std::vector<PartCoefficients> part_coefficients(const SystemConfig& cfg, const ClusterOrder& order) {
  check_order(cfg.nodes(), order);
  const int d_I = cfg.repair().d_I;
  const int d_C = cfg.repair().d_C;
  const std::vector<int> h = relative_location(order);
  std::vector<PartCoefficients> out(h.size());
  for (std::size_t idx = 0; idx < h.size(); ++idx) {
    const int i = static_cast<int>(idx) + 1;
    if (order.pi[idx] == 0) {
      // Every earlier newcomer is a helper on the sink side; d >= k keeps this positive.
      out[idx] = {true, 0, cfg.d() - (i - 1)};
    } else {
      const int intra = d_I + 1 - h[idx];
      if (intra < 0) throw std::logic_error("negative intra-cluster coefficient");
      // Earlier newcomers outside this cluster absorb cross helper slots first.
      const int cross = std::max(d_C - (i - h[idx]), 0);
      out[idx] = {false, intra, cross};
    }
  }
  return out;
}

WeightVector part_incoming_weights(const SystemConfig& cfg, const ClusterOrder& order) {
  WeightVector wv;
  for (const PartCoefficients& p : part_coefficients(cfg, order)) {
    wv.w.push_back(Rational(p.intra) * cfg.beta_I() + Rational(p.cross) * cfg.beta_C());
  }
  return wv;
}

CutReport mincut(const SystemConfig& cfg, const ClusterOrder& order) {
  CutReport report;
  report.weights = part_incoming_weights(cfg, order);
  for (const Rational& w : report.weights.w) {
    report.capped.push_back(cfg.alpha() < w);
    report.value += min(cfg.alpha(), w);
  }
  return report;
}

Rational capped_sum(const std::vector<Rational>& weights, const Rational& alpha) {
  Rational total;
  for (const Rational& w : weights) total += min(alpha, w);
  return total;
}

}  // namespace csn
