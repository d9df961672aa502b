#include <doctest.h>

#include <algorithm>

#include "csn/capacity.hpp"
#include "csn/mincut.hpp"
#include "csn/oracle.hpp"
#include "csn/sequencing.hpp"

using namespace csn;

TEST_CASE("exhaustive search examples") {
  const SystemConfig a = validate_config(make_raw(2, 2, 2, 0, 2, 2, 1, 10));
  const BruteForceResult ra = brute_force_capacity(a);
  CHECK(ra.value == Rational(6));
  CHECK(ra.s.str() == "(0,2,0)");
  CHECK(ra.order.str() == "(1,1)");

  const SystemConfig b = validate_config(make_raw(3, 2, 2, 1, 3, 2, 1, 100));
  const BruteForceResult rb = brute_force_capacity(b);
  CHECK(rb.value == Rational(10));
  CHECK(rb.value == system_capacity(b));
  CHECK(rb.s.str() == "(1,2,0)");
  CHECK(rb.order.str() == "(0,1,1)");  // first minimiser in enumeration order

  // k = 1: the cheaper of a cluster node and the separate node.
  const SystemConfig c = validate_config(make_raw(1, 2, 2, 1, 1, 3, 1, 100));
  CHECK(brute_force_capacity(c).value == std::min(Rational(3 + 1), Rational(2)));
  CHECK(brute_force_capacity(c.with_alpha(1)).value == Rational(1));
}

TEST_CASE("search budget") {
  const SystemConfig cfg = validate_config(make_raw(9, 3, 4, 1, 7, 2, 1, 10));
  const std::uint64_t size = enumeration_size(cfg.nodes());
  CHECK(size > 1000);
  try {
    brute_force_capacity(cfg, SearchOptions{1000, 1});
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
    CHECK(std::string(e.what()).find(std::to_string(size)) != std::string::npos);
  }
}

TEST_CASE("search results do not depend on the worker count") {
  const SystemConfig cfg = validate_config(make_raw(7, 3, 3, 1, 5, 3, 2, 0));
  const auto probes = alpha_probes(cfg);
  const auto one = brute_force_capacities(cfg, probes, SearchOptions{10'000'000, 1});
  const auto four = brute_force_capacities(cfg, probes, SearchOptions{10'000'000, 4});
  REQUIRE(one.size() == four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].value == four[i].value);
    CHECK(one[i].s == four[i].s);
    CHECK(one[i].order == four[i].order);
    CHECK(one[i].value == system_capacity(cfg.with_alpha(probes[i])));
  }
}

TEST_CASE("search covers several separate nodes") {
  const SystemConfig cfg = validate_config(make_raw(4, 2, 2, 2, 3, 2, 1, 100));
  const BruteForceResult r = brute_force_capacity(cfg);
  CHECK(r.value == mincut(cfg, r.order).value);
  CHECK(r.value <= mincut(cfg, vertical_order(fill_clusters_horizontally(cfg.nodes(), 2), {3, 4})).value);
}

TEST_CASE("flow graph structure") {
  const SystemConfig cfg = validate_config(make_raw(3, 2, 2, 1, 3, Rational(2), Rational(1, 2), Rational(3, 4)));
  const ClusterOrder order{{1, 0, 2}};
  const FlowGraph g = build_ifg(cfg, order);
  CHECK(g.scale == 4);
  CHECK(g.storage_nodes == cfg.n() + cfg.k());
  CHECK(g.vertex_count == 2 + 2 * g.storage_nodes);

  std::int64_t finite = 0;
  int alpha_edges = 0;
  int to_sink = 0;
  std::vector<std::vector<std::int64_t>> incoming(static_cast<std::size_t>(g.vertex_count));
  for (const auto& e : g.edges) {
    if (e.capacity != g.infinity) finite += e.capacity;
    if (e.to == e.from + 1 && e.from % 2 == 0 && e.from >= 2) {
      ++alpha_edges;
      CHECK(e.capacity == 3);
    } else if (e.to == g.sink) {
      ++to_sink;
      CHECK(e.capacity == g.infinity);
    } else if (e.from != g.source) {
      incoming[static_cast<std::size_t>(e.to)].push_back(e.capacity);
    }
  }
  CHECK(g.infinity > finite);
  CHECK(alpha_edges == g.storage_nodes);
  CHECK(to_sink == cfg.k());
  // Newcomer inputs: n + i, in vertex 2 + 2(n + i).
  auto sorted_in = [&](int newcomer) {
    auto v = incoming[static_cast<std::size_t>(2 + 2 * (cfg.n() + newcomer))];
    std::sort(v.begin(), v.end());
    return v;
  };
  CHECK(sorted_in(0) == std::vector<std::int64_t>{2, 2, 2, 8});   // d_I beta_I + d_C beta_C
  CHECK(sorted_in(1) == std::vector<std::int64_t>{2, 2, 2, 2});   // d beta_C
  CHECK(sorted_in(2) == std::vector<std::int64_t>{2, 2, 2, 8});
}

TEST_CASE("flow graph max-flow examples") {
  const SystemConfig one = validate_config(make_raw(1, 2, 2, 0, 1, 2, 1, 100));
  CHECK(ifg_mincut(one, {{1}}) == Rational(2 + 1));
  CHECK(ifg_mincut(one.with_alpha(Rational(5, 2)), {{1}}) == Rational(5, 2));

  const SystemConfig small = validate_config(make_raw(2, 2, 2, 0, 2, 2, 1, 10));
  CHECK(ifg_mincut(small, {{1, 1}}) == Rational(6));
  CHECK(ifg_mincut(small, {{1, 2}}) == Rational(7));

  // Separate node repaired first: the max-flow confirms 4 + 4 + 2.
  const SystemConfig five_node = validate_config(make_raw(3, 2, 2, 1, 3, 2, 1, 100));
  CHECK(ifg_mincut(five_node, optimal_order_with_separate_at(five_node.nodes(), 1)) == Rational(10));
  CHECK(ifg_mincut(five_node.with_alpha(2), optimal_order_with_separate_at(five_node.nodes(), 3)) == Rational(6));
}

TEST_CASE("flow graph can undercut the formula through a shared original helper") {
  // Node B helps both newcomers; cutting its storage edge (2) beats the two
  // helper edges it feeds (1 + 2).
  const SystemConfig cfg = validate_config(make_raw(2, 1, 2, 1, 1, 2, 1, 2));
  const ClusterOrder order{{0, 1}};
  CHECK(mincut(cfg, order).value == Rational(4));
  CHECK(ifg_mincut(cfg, order) == Rational(3));
  CHECK(system_capacity(cfg) == Rational(3));
}

TEST_CASE("property: flow graph never exceeds the formula nor drops below the minimum") {
  for (const auto& cfg : family_configs(named_family("tiny"))) {
    for (const Rational& a : alpha_probes(cfg)) {
      const SystemConfig at = cfg.with_alpha(a);
      const Rational floor = brute_force_capacity(at).value;
      for (const auto& s : enumerate_distributions(at.nodes())) {
        for (const auto& o : enumerate_orders(s)) {
          const Rational graph = ifg_mincut(at, o);
          CHECK(graph <= mincut(at, o).value);
          CHECK(graph >= floor);
        }
      }
    }
  }
}

TEST_CASE("alpha probes") {
  const SystemConfig cfg = validate_config(make_raw(3, 2, 2, 1, 3, 2, 1, 0));
  const auto p = alpha_probes(cfg);
  CHECK(p.front() == Rational(0));
  for (int w : {2, 3, 5}) CHECK(std::find(p.begin(), p.end(), Rational(w)) != p.end());
  CHECK(std::find(p.begin(), p.end(), Rational(5, 2)) != p.end());
  CHECK(std::is_sorted(p.begin(), p.end()));
}

TEST_CASE("claim verification on single configurations") {
  VerificationFamily fam = named_family("tiny");
  const SystemConfig k8 = validate_config(make_raw(8, 3, 4, 0, 7, 2, 1, 0));
  auto reports = verify_config(k8, fam);
  auto find = [&](const std::string& claim) {
    for (const auto& r : reports) {
      if (r.claim == claim) return r;
    }
    FAIL("missing claim " << claim);
    return VerificationReport{};
  };
  CHECK(find("separate-node-dichotomy").passed);
  for (const auto& r : reports) CHECK_MESSAGE(r.passed, r.claim << ": " << r.counterexample);

  const SystemConfig k9 = validate_config(make_raw(9, 3, 4, 0, 7, 2, 1, 0));
  reports = verify_config(k9, fam);
  for (const auto& r : reports) CHECK_MESSAGE(r.passed, r.claim << ": " << r.counterexample);
  const auto v = compare_separate(k9.nodes(), k9.repair(), 1000);
  CHECK(v.outcome == Comparison::Reduced);
}

TEST_CASE("the tiny family passes every claim, independent of workers") {
  VerificationFamily fam = named_family("tiny");
  const auto serial = verify_claims(fam);
  fam.search.workers = 3;
  const auto parallel = verify_claims(fam);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK_MESSAGE(serial[i].passed, serial[i].instance << " " << serial[i].claim << ": " << serial[i].counterexample);
    CHECK(serial[i].claim == parallel[i].claim);
    CHECK(serial[i].instance == parallel[i].instance);
    CHECK(serial[i].passed == parallel[i].passed);
  }
  CHECK_THROWS_AS(named_family("nope"), Error);
}
