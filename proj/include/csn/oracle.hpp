#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "csn/model.hpp"
#include "csn/rational.hpp"

namespace csn {

// Information flow graph for one repair sequence. Capacities are the exact
// rational values multiplied by `scale`; `infinity` exceeds the sum of all
// finite capacities.
struct FlowGraph {
  struct Edge {
    int from;
    int to;
    std::int64_t capacity;
  };

  int vertex_count = 0;
  int source = 0;
  int sink = 1;
  std::vector<Edge> edges;
  std::int64_t scale = 1;
  std::int64_t infinity = 0;
  // Number of storage node instances (originals plus newcomers).
  int storage_nodes = 0;
};

FlowGraph build_ifg(const SystemConfig& cfg, const ClusterOrder& order);

// Exact source to data-collector max-flow of build_ifg(cfg, order).
Rational ifg_mincut(const SystemConfig& cfg, const ClusterOrder& order);

struct SearchOptions {
  std::uint64_t budget = 10'000'000;  // orders evaluated, summed over distributions
  int workers = 1;
};

struct BruteForceResult {
  Rational value;
  SelectedNodeDistribution s;
  ClusterOrder order;
};

// Total number of cluster orders across the distribution set.
std::uint64_t enumeration_size(const NodeParams& nodes);

// Minimum of the formula min-cut over every distribution and order; the
// argmin is the first minimiser in enumeration order. Works for any E.
BruteForceResult brute_force_capacity(const SystemConfig& cfg, const SearchOptions& options = {});

// Same search evaluated at several alphas in one enumeration pass.
std::vector<BruteForceResult> brute_force_capacities(const SystemConfig& cfg, const std::vector<Rational>& alphas,
                                                     const SearchOptions& options = {});

struct VerificationReport {
  std::string instance;
  std::string claim;
  bool passed = true;
  std::string counterexample;  // empty when passed
};

struct VerificationFamily {
  std::string name;
  std::vector<int> L;
  std::vector<int> R;
  std::vector<int> E;
  std::vector<int> k;
  std::vector<std::pair<Rational, Rational>> betas;  // (beta_I, beta_C)
  // Orders per config cross-checked against the flow graph (0 disables).
  std::size_t ifg_orders_per_config = 0;
  SearchOptions search;
};

// Known families: "small-sweep", "acceptance-sweep", "tiny".
VerificationFamily named_family(const std::string& name);

// Every valid (k, L, R, E, d_C, betas) combination of the family.
std::vector<SystemConfig> family_configs(const VerificationFamily& family);

// Alpha probes for a config: 0, every closed-form weight, the midpoints
// between consecutive distinct weights, and the weight total.
std::vector<Rational> alpha_probes(const SystemConfig& cfg);

std::vector<VerificationReport> verify_config(const SystemConfig& cfg, const VerificationFamily& family);

// One report per (claim, config) across the family, in config order.
std::vector<VerificationReport> verify_claims(const VerificationFamily& family);

}  // namespace csn
