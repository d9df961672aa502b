#include "csn/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "csn/capacity.hpp"
#include "csn/maxflow.hpp"
#include "csn/mincut.hpp"
#include "csn/sequencing.hpp"

namespace csn {

// ---------------------------------------------------------------------------
// Flow graph

namespace {

std::int64_t lcm_checked(std::int64_t a, std::int64_t b) {
  std::int64_t g = std::gcd(a, b);
  int128 v = static_cast<int128>(a / g) * b;
  if (v > std::numeric_limits<std::int64_t>::max()) throw std::overflow_error("scale overflow");
  return static_cast<std::int64_t>(v);
}

std::int64_t scaled(const Rational& r, std::int64_t scale) {
  int128 v = static_cast<int128>(r.num()) * (scale / r.den());
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("scaled capacity overflow");
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace

FlowGraph build_ifg(const SystemConfig& cfg, const ClusterOrder& order) {
  check_order(cfg.nodes(), order);
  const int n = cfg.n();
  const int k = cfg.k();
  const int R = cfg.R();
  const int LR = cfg.L() * R;

  FlowGraph g;
  g.scale = lcm_checked(lcm_checked(cfg.alpha().den(), cfg.beta_I().den()), cfg.beta_C().den());
  const std::int64_t alpha = scaled(cfg.alpha(), g.scale);
  const std::int64_t beta_I = scaled(cfg.beta_I(), g.scale);
  const std::int64_t beta_C = scaled(cfg.beta_C(), g.scale);

  g.storage_nodes = n + k;
  g.vertex_count = 2 + 2 * g.storage_nodes;
  g.source = 0;
  g.sink = 1;
  auto in_vertex = [](int instance) { return 2 + 2 * instance; };
  auto out_vertex = [](int instance) { return 3 + 2 * instance; };

  // Infinite edges are patched once every finite capacity is known.
  std::vector<std::size_t> infinite_edges;
  auto add_infinite = [&](int from, int to) {
    infinite_edges.push_back(g.edges.size());
    g.edges.push_back({from, to, 0});
  };

  // active[loc] is the instance currently stored at a location: cluster c
  // column h lives at (c-1)*R + h-1, the e-th separate node at L*R + e-1.
  std::vector<int> active(static_cast<std::size_t>(n));
  std::vector<int> uses(static_cast<std::size_t>(n), 0);  // outgoing helper edges per original
  for (int loc = 0; loc < n; ++loc) {
    active[static_cast<std::size_t>(loc)] = loc;
    add_infinite(g.source, in_vertex(loc));
    g.edges.push_back({in_vertex(loc), out_vertex(loc), alpha});
  }
  auto cluster_of = [&](int loc) { return loc < LR ? loc / R + 1 : 0; };
  auto is_original = [&](int loc) { return active[static_cast<std::size_t>(loc)] < n; };

  const std::vector<int> h = relative_location(order);
  std::vector<int> newcomer_locs;
  for (int idx = 0; idx < k; ++idx) {
    const int label = order.pi[static_cast<std::size_t>(idx)];
    const int rank = h[static_cast<std::size_t>(idx)];
    const int loc = label == 0 ? LR + rank - 1 : (label - 1) * R + rank - 1;
    const int instance = n + idx;
    auto connect = [&](int helper_loc, std::int64_t cap) {
      const int helper = active[static_cast<std::size_t>(helper_loc)];
      g.edges.push_back({out_vertex(helper), in_vertex(instance), cap});
      if (helper < n) ++uses[static_cast<std::size_t>(helper)];
    };

    int cross_slots = 0;
    std::int64_t cross_beta = beta_C;
    if (label != 0) {
      for (int col = 0; col < R; ++col) {
        const int peer = (label - 1) * R + col;
        if (peer != loc) connect(peer, beta_I);
      }
      cross_slots = cfg.repair().d_C;
    } else {
      cross_slots = cfg.d();
    }

    // Earlier newcomers outside the cluster first, then the least used
    // originals that are still active.
    for (int prev : newcomer_locs) {
      if (cross_slots == 0) break;
      if (label != 0 && cluster_of(prev) == label) continue;
      connect(prev, cross_beta);
      --cross_slots;
    }
    std::vector<int> candidates;
    for (int other = 0; other < n; ++other) {
      if (other == loc || !is_original(other)) continue;
      if (label != 0 && cluster_of(other) == label) continue;
      candidates.push_back(other);
    }
    std::stable_sort(candidates.begin(), candidates.end(), [&](int a, int b) {
      return uses[static_cast<std::size_t>(a)] < uses[static_cast<std::size_t>(b)];
    });
    if (static_cast<int>(candidates.size()) < cross_slots) {
      throw std::logic_error("not enough active helpers for newcomer " + std::to_string(idx + 1));
    }
    for (int c = 0; c < cross_slots; ++c) connect(candidates[static_cast<std::size_t>(c)], cross_beta);

    g.edges.push_back({in_vertex(instance), out_vertex(instance), alpha});
    active[static_cast<std::size_t>(loc)] = instance;
    newcomer_locs.push_back(loc);
    add_infinite(out_vertex(instance), g.sink);
  }

  int128 finite = 0;
  for (const auto& e : g.edges) finite += e.capacity;
  if (finite + 1 > std::numeric_limits<std::int64_t>::max()) throw std::overflow_error("flow graph capacity overflow");
  g.infinity = static_cast<std::int64_t>(finite) + 1;
  for (std::size_t id : infinite_edges) g.edges[id].capacity = g.infinity;
  return g;
}

Rational ifg_mincut(const SystemConfig& cfg, const ClusterOrder& order) {
  const FlowGraph g = build_ifg(cfg, order);
  MaxFlow flow(g.vertex_count);
  for (const auto& e : g.edges) flow.add_edge(e.from, e.to, e.capacity);
  return Rational(flow.run(g.source, g.sink), g.scale);
}

// ---------------------------------------------------------------------------
// Exhaustive search

namespace {

// Capacities on a common integer scale so the inner loops avoid gcd work.
struct ScaledParams {
  std::int64_t scale = 1;
  std::int64_t beta_I = 0;
  std::int64_t beta_C = 0;
  std::vector<std::int64_t> alphas;

  ScaledParams(const SystemConfig& cfg, const std::vector<Rational>& alpha_values) {
    scale = lcm_checked(cfg.beta_I().den(), cfg.beta_C().den());
    for (const Rational& a : alpha_values) scale = lcm_checked(scale, a.den());
    beta_I = scaled(cfg.beta_I(), scale);
    beta_C = scaled(cfg.beta_C(), scale);
    for (const Rational& a : alpha_values) alphas.push_back(scaled(a, scale));
  }

  std::vector<std::int64_t> weights(const std::vector<PartCoefficients>& coeffs) const {
    std::vector<std::int64_t> w;
    w.reserve(coeffs.size());
    for (const auto& c : coeffs) w.push_back(c.intra * beta_I + c.cross * beta_C);
    return w;
  }

  Rational unscale(std::int64_t v) const { return Rational(v, scale); }
};

std::int64_t capped(const std::vector<std::int64_t>& w, std::int64_t alpha) {
  std::int64_t total = 0;
  for (std::int64_t x : w) total += std::min(alpha, x);
  return total;
}

template <typename Fn>
void parallel_for(std::size_t count, int workers, Fn&& fn) {
  const std::size_t threads = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(workers, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += threads) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

struct Best {
  std::int64_t value = std::numeric_limits<std::int64_t>::max();
  std::size_t order_index = 0;
  ClusterOrder order;
};

}  // namespace

std::uint64_t enumeration_size(const NodeParams& nodes) {
  std::uint64_t total = 0;
  for (const auto& s : enumerate_distributions(nodes)) {
    const std::uint64_t c = count_orders(s);
    if (total > std::numeric_limits<std::uint64_t>::max() - c) throw std::overflow_error("enumeration size overflow");
    total += c;
  }
  return total;
}

std::vector<BruteForceResult> brute_force_capacities(const SystemConfig& cfg, const std::vector<Rational>& alphas,
                                                     const SearchOptions& options) {
  const std::uint64_t size = enumeration_size(cfg.nodes());
  if (size > options.budget) {
    throw Error(ErrorCode::BudgetExceeded,
                std::to_string(size) + " orders exceed the budget of " + std::to_string(options.budget));
  }
  const std::vector<SelectedNodeDistribution> dists = enumerate_distributions(cfg.nodes());
  const ScaledParams sp(cfg, alphas);

  // best[d][a]: minimiser within distribution d at alpha a.
  std::vector<std::vector<Best>> best(dists.size(), std::vector<Best>(alphas.size()));
  parallel_for(dists.size(), options.workers, [&](std::size_t d) {
    std::size_t index = 0;
    for (const ClusterOrder& order : enumerate_orders(dists[d])) {
      const auto w = sp.weights(part_coefficients(cfg, order));
      for (std::size_t a = 0; a < alphas.size(); ++a) {
        const std::int64_t v = capped(w, sp.alphas[a]);
        if (v < best[d][a].value) best[d][a] = Best{v, index, order};
      }
      ++index;
    }
  });

  std::vector<BruteForceResult> out;
  for (std::size_t a = 0; a < alphas.size(); ++a) {
    std::size_t winner = 0;
    for (std::size_t d = 1; d < dists.size(); ++d) {
      if (best[d][a].value < best[winner][a].value) winner = d;
    }
    out.push_back({sp.unscale(best[winner][a].value), dists[winner], best[winner][a].order});
  }
  return out;
}

BruteForceResult brute_force_capacity(const SystemConfig& cfg, const SearchOptions& options) {
  return brute_force_capacities(cfg, {cfg.alpha()}, options).front();
}

// ---------------------------------------------------------------------------
// Claim verification

VerificationFamily named_family(const std::string& name) {
  VerificationFamily f;
  f.name = name;
  if (name == "tiny") {
    f.L = {1, 2};
    f.R = {1, 2};
    f.E = {0, 1};
    f.k = {1, 2, 3, 4};
    f.betas = {{Rational(1), Rational(1)}, {Rational(2), Rational(1)}};
    f.ifg_orders_per_config = 1000;
  } else if (name == "small-sweep") {
    f.L = {1, 2, 3};
    f.R = {1, 2, 3, 4};
    f.E = {0, 1};
    f.k = {1, 2, 3, 4, 5, 6, 7, 8, 9};
    f.betas = {{Rational(1), Rational(1)}, {Rational(2), Rational(1)}, {Rational(3), Rational(2)}};
    f.ifg_orders_per_config = 8;
  } else if (name == "acceptance-sweep") {
    f.L = {2, 3};
    f.R = {2, 3, 4};
    f.E = {0, 1};
    f.k = {2, 3, 4, 5, 6, 7, 8, 9};
    f.betas = {{Rational(1), Rational(1)}, {Rational(2), Rational(1)}, {Rational(3), Rational(1)}, {Rational(3), Rational(2)}};
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown family '" + name + "' (known: tiny, small-sweep, acceptance-sweep)");
  }
  return f;
}

std::vector<SystemConfig> family_configs(const VerificationFamily& family) {
  std::vector<SystemConfig> out;
  for (int L : family.L) {
    for (int R : family.R) {
      for (int E : family.E) {
        const int n = L * R + E;
        for (int k : family.k) {
          if (k < 1 || k > n - 1) continue;
          for (int d_C = std::max(0, k - R + 1); d_C <= n - R; ++d_C) {
            for (const auto& [beta_I, beta_C] : family.betas) {
              out.push_back(validate_config(make_raw(k, L, R, E, d_C, beta_I, beta_C, Rational(0))));
            }
          }
        }
      }
    }
  }
  return out;
}

std::vector<Rational> alpha_probes(const SystemConfig& cfg) {
  std::vector<Rational> weights;
  if (cfg.E() <= 1) {
    weights = weight_sequence(cfg, variant_for(cfg)).w_star;
  } else {
    const SelectedNodeDistribution s = fill_clusters_horizontally(cfg.nodes(), std::min(cfg.E(), cfg.k()));
    std::vector<int> sep(static_cast<std::size_t>(s.s0));
    std::iota(sep.begin(), sep.end(), cfg.k() - s.s0 + 1);
    weights = part_incoming_weights(cfg, vertical_order(s, SeparatePositions(sep))).w;
  }
  std::sort(weights.begin(), weights.end());
  weights.erase(std::unique(weights.begin(), weights.end()), weights.end());
  std::vector<Rational> probes{Rational(0)};
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (i > 0) probes.push_back((weights[i - 1] + weights[i]) / Rational(2));
    probes.push_back(weights[i]);
  }
  Rational total;
  for (const Rational& w : weights) total += w;
  probes.push_back(total * Rational(cfg.k()));
  std::sort(probes.begin(), probes.end());
  probes.erase(std::unique(probes.begin(), probes.end()), probes.end());
  return probes;
}

namespace {

struct OrderSet {
  SelectedNodeDistribution s;
  std::vector<ClusterOrder> orders;
  std::vector<std::vector<PartCoefficients>> coeffs;
};

std::string instance_name(const SystemConfig& cfg) {
  std::ostringstream os;
  os << "n=" << cfg.n() << " k=" << cfg.k() << " L=" << cfg.L() << " R=" << cfg.R() << " E=" << cfg.E()
     << " d_C=" << cfg.repair().d_C << " beta_I=" << cfg.beta_I() << " beta_C=" << cfg.beta_C();
  return os.str();
}

class ClaimRecorder {
 public:
  ClaimRecorder(std::string instance, std::vector<VerificationReport>& out) : instance_(std::move(instance)), out_(out) {}

  // First failure wins; later failures of the same claim are dropped.
  void check(const std::string& claim, bool ok, const std::string& counterexample) {
    for (auto& r : out_) {
      if (r.claim == claim && r.instance == instance_) {
        if (r.passed && !ok) {
          r.passed = false;
          r.counterexample = counterexample;
        }
        return;
      }
    }
    out_.push_back({instance_, claim, ok, ok ? "" : counterexample});
  }

  void pass(const std::string& claim) { check(claim, true, ""); }

 private:
  std::string instance_;
  std::vector<VerificationReport>& out_;
};

std::string at_alpha(const Rational& a) { return "alpha=" + a.str(); }

}  // namespace

std::vector<VerificationReport> verify_config(const SystemConfig& cfg, const VerificationFamily& family) {
  std::vector<VerificationReport> reports;
  ClaimRecorder rec(instance_name(cfg), reports);

  const std::uint64_t size = enumeration_size(cfg.nodes());
  if (size > family.search.budget) {
    rec.check("enumeration-budget", false, std::to_string(size) + " orders exceed the budget");
    return reports;
  }

  const std::vector<Rational> probes = alpha_probes(cfg);
  const ScaledParams sp(cfg, probes);
  const int k = cfg.k();
  const int d = cfg.d();

  std::vector<OrderSet> sets;
  for (const auto& s : enumerate_distributions(cfg.nodes())) {
    OrderSet set{s, enumerate_orders(s), {}};
    for (const auto& order : set.orders) set.coeffs.push_back(part_coefficients(cfg, order));
    sets.push_back(std::move(set));
  }

  auto mc = [&](const ClusterOrder& order, std::size_t a) {
    return capped(sp.weights(part_coefficients(cfg, order)), sp.alphas[a]);
  };

  // Exhaustive minimum per alpha.
  std::vector<std::int64_t> search_min(probes.size(), std::numeric_limits<std::int64_t>::max());
  std::vector<std::string> search_arg(probes.size());
  for (const auto& set : sets) {
    for (std::size_t o = 0; o < set.orders.size(); ++o) {
      const auto w = sp.weights(set.coeffs[o]);
      for (std::size_t a = 0; a < probes.size(); ++a) {
        const std::int64_t v = capped(w, sp.alphas[a]);
        if (v < search_min[a]) {
          search_min[a] = v;
          search_arg[a] = "s=" + set.s.str() + " pi=" + set.orders[o].str();
        }
      }
    }
  }

  if (cfg.E() <= 1) {
    for (std::size_t a = 0; a < probes.size(); ++a) {
      const Rational closed = system_capacity(cfg.with_alpha(probes[a]));
      const Rational searched = sp.unscale(search_min[a]);
      rec.check("closed-form-equals-search", closed == searched,
                at_alpha(probes[a]) + " closed=" + closed.str() + " search=" + searched.str() + " at " + search_arg[a]);
    }
  }

  // Cluster-only distributions: coefficient multiset and the two minimality
  // results for the vertical order and the horizontal selection.
  std::vector<std::int64_t> vertical_per_s;
  for (const auto& set : sets) {
    if (set.s.s0 != 0) continue;
    std::vector<int> reference;
    for (std::size_t o = 0; o < set.orders.size(); ++o) {
      std::vector<int> intra;
      for (const auto& c : set.coeffs[o]) intra.push_back(c.intra);
      std::sort(intra.begin(), intra.end());
      if (o == 0) reference = intra;
      rec.check("intra-coefficient-multiset", intra == reference,
                "s=" + set.s.str() + " pi=" + set.orders[o].str() + " differs from pi=" + set.orders[0].str());
    }
    const ClusterOrder vertical = vertical_order(set.s, {});
    for (std::size_t a = 0; a < probes.size(); ++a) {
      const std::int64_t v = mc(vertical, a);
      for (std::size_t o = 0; o < set.orders.size(); ++o) {
        const std::int64_t other = capped(sp.weights(set.coeffs[o]), sp.alphas[a]);
        rec.check("order-minimality", v <= other,
                  at_alpha(probes[a]) + " s=" + set.s.str() + " vertical=" + vertical.str() + " (" + sp.unscale(v).str() +
                      ") > pi=" + set.orders[o].str() + " (" + sp.unscale(other).str() + ")");
      }
    }
  }

  if (k <= cfg.L() * cfg.R()) {
    const SelectedNodeDistribution s_star = horizontal_selection(cfg.nodes(), 0);
    const ClusterOrder pi_star = vertical_order(s_star, {});
    const auto coeffs = part_coefficients(cfg, pi_star);
    for (int i = 1; i <= k; ++i) {
      const auto& c = coeffs[static_cast<std::size_t>(i - 1)];
      rec.check("coefficient-sum", c.intra + c.cross == d + 1 - i,
                "pi=" + pi_star.str() + " position " + std::to_string(i) + " intra+cross=" +
                    std::to_string(c.intra + c.cross) + " expected " + std::to_string(d + 1 - i));
    }
    for (std::size_t a = 0; a < probes.size(); ++a) {
      const std::int64_t best = mc(pi_star, a);
      for (const auto& set : sets) {
        if (set.s.s0 != 0) continue;
        const ClusterOrder candidate = vertical_order(set.s, {});
        const std::int64_t other = mc(candidate, a);
        rec.check("distribution-minimality", best <= other,
                  at_alpha(probes[a]) + " s*=" + s_star.str() + " (" + sp.unscale(best).str() + ") > s=" + set.s.str() +
                      " (" + sp.unscale(other).str() + ")");
      }
    }
  }

  if (cfg.E() >= 1) {
    // Minimum over one-separate orders, bucketed by the separate position.
    std::vector<std::vector<std::int64_t>> fixed_min(
        static_cast<std::size_t>(k), std::vector<std::int64_t>(probes.size(), std::numeric_limits<std::int64_t>::max()));
    std::vector<std::vector<std::string>> fixed_arg(static_cast<std::size_t>(k), std::vector<std::string>(probes.size()));
    for (const auto& set : sets) {
      if (set.s.s0 != 1) continue;
      for (std::size_t o = 0; o < set.orders.size(); ++o) {
        const auto& pi = set.orders[o].pi;
        const auto j = static_cast<std::size_t>(std::find(pi.begin(), pi.end(), 0) - pi.begin());
        const auto w = sp.weights(set.coeffs[o]);
        for (std::size_t a = 0; a < probes.size(); ++a) {
          const std::int64_t v = capped(w, sp.alphas[a]);
          if (v < fixed_min[j][a]) {
            fixed_min[j][a] = v;
            fixed_arg[j][a] = "s=" + set.s.str() + " pi=" + set.orders[o].str();
          }
        }
      }
    }
    std::vector<ClusterOrder> by_location;
    for (int j = 1; j <= k; ++j) by_location.push_back(optimal_order_with_separate_at(cfg.nodes(), j));

    for (std::size_t a = 0; a < probes.size(); ++a) {
      std::vector<std::int64_t> per_j;
      for (int j = 1; j <= k; ++j) {
        const ClusterOrder& pj = by_location[static_cast<std::size_t>(j - 1)];
        const std::int64_t v = mc(pj, a);
        per_j.push_back(v);
        const auto jj = static_cast<std::size_t>(j - 1);
        rec.check("fixed-separate-minimality", v <= fixed_min[jj][a],
                  at_alpha(probes[a]) + " j=" + std::to_string(j) + " pi=" + pj.str() + " (" + sp.unscale(v).str() +
                      ") > " + fixed_arg[jj][a] + " (" + sp.unscale(fixed_min[jj][a]).str() + ")");
      }
      for (int j = 1; j < k; ++j) {
        const auto jj = static_cast<std::size_t>(j - 1);
        rec.check("separate-location-monotonicity", per_j[jj] >= per_j[jj + 1],
                  at_alpha(probes[a]) + " MC_" + std::to_string(j) + "=" + sp.unscale(per_j[jj]).str() + " < MC_" +
                      std::to_string(j + 1) + "=" + sp.unscale(per_j[jj + 1]).str());
      }
      if (cfg.E() == 1) {
        const Rational last = sp.unscale(per_j.back());
        const Rational closed = system_capacity(cfg.with_alpha(probes[a]));
        rec.check("capacity-at-last-location", last == closed,
                  at_alpha(probes[a]) + " MC_k=" + last.str() + " capacity=" + closed.str());
      }
    }
  }

  if (cfg.E() == 0) {
    NodeParams augmented = cfg.nodes();
    augmented.n += 1;
    augmented.E = 1;
    const SystemConfig with = validate_config(RawConfig{augmented, cfg.repair()});
    const Rational uncapped =
        weight_sequence(cfg, WeightVariant::ClusterDSS).total() + weight_sequence(with, WeightVariant::CsnOneSeparate).total();
    const ComparisonVerdict v = compare_separate(cfg.nodes(), cfg.repair(), uncapped);
    // Equal bandwidths make both systems homogeneous, so nothing can change.
    const bool expect_equal = cfg.k() % cfg.R() == 0 || cfg.beta_I() == cfg.beta_C();
    const bool ok = expect_equal ? v.outcome == Comparison::Equal
                                 : (v.outcome == Comparison::Reduced && v.capacity_with < v.capacity_without);
    rec.check("separate-node-dichotomy", ok,
              std::string("expected ") + (expect_equal ? "Equal" : "Reduced") + " got " + to_string(v.outcome) +
                  " without=" + v.capacity_without.str() + " with=" + v.capacity_with.str());
  }

  // The capacity-achieving order's flow graph carries exactly the capacity.
  if (cfg.E() <= 1) {
    const ClusterOrder best = cfg.E() == 1 ? optimal_order_with_separate_at(cfg.nodes(), k)
                                           : vertical_order(horizontal_selection(cfg.nodes(), 0), {});
    for (const Rational& alpha : probes) {
      const SystemConfig at = cfg.with_alpha(alpha);
      const Rational graph = ifg_mincut(at, best);
      const Rational closed = system_capacity(at);
      rec.check("flow-graph-optimal-order", graph == closed,
                at_alpha(alpha) + " pi=" + best.str() + " maxflow=" + graph.str() + " capacity=" + closed.str());
    }
  }

  if (family.ifg_orders_per_config > 0) {
    // Evenly strided sample of all orders. The formula value is one cut of
    // the graph, so the max-flow can only be smaller; it can never drop below
    // the searched minimum.
    std::vector<const ClusterOrder*> all;
    for (const auto& set : sets) {
      for (const auto& order : set.orders) all.push_back(&order);
    }
    const std::size_t stride = std::max<std::size_t>(1, all.size() / family.ifg_orders_per_config);
    for (std::size_t i = 0; i < all.size(); i += stride) {
      for (std::size_t a = 0; a < probes.size(); ++a) {
        const SystemConfig at = cfg.with_alpha(probes[a]);
        const Rational formula = mincut(at, *all[i]).value;
        const Rational graph = ifg_mincut(at, *all[i]);
        const Rational floor = sp.unscale(search_min[a]);
        rec.check("flow-graph-cut-bound", graph <= formula,
                  at_alpha(probes[a]) + " pi=" + all[i]->str() + " formula=" + formula.str() + " maxflow=" + graph.str());
        rec.check("flow-graph-above-minimum", graph >= floor,
                  at_alpha(probes[a]) + " pi=" + all[i]->str() + " maxflow=" + graph.str() + " minimum=" + floor.str());
      }
    }
  }

  return reports;
}

std::vector<VerificationReport> verify_claims(const VerificationFamily& family) {
  const std::vector<SystemConfig> configs = family_configs(family);
  std::vector<std::vector<VerificationReport>> per_config(configs.size());
  parallel_for(configs.size(), family.search.workers,
               [&](std::size_t i) { per_config[i] = verify_config(configs[i], family); });
  std::vector<VerificationReport> out;
  for (auto& r : per_config) out.insert(out.end(), r.begin(), r.end());
  return out;
}

}  // namespace csn
