#include <doctest.h>

#include <algorithm>

#include "csn/capacity.hpp"
#include "csn/mincut.hpp"
#include "csn/sequencing.hpp"

using namespace csn;

namespace {

SystemConfig five_node(Rational alpha = 2) { return validate_config(make_raw(3, 2, 2, 1, 3, 2, 1, alpha)); }

std::vector<Rational> ints(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("weight sequence examples") {
  const auto csn_seq = weight_sequence(five_node(), WeightVariant::CsnOneSeparate);
  CHECK(csn_seq.w_star == ints({2, 3, 5}));
  CHECK(csn_seq.total() == Rational(10));

  const SystemConfig cluster = validate_config(make_raw(7, 3, 4, 0, 6, 2, 1, 0));
  CHECK(weight_sequence(cluster, WeightVariant::ClusterDSS).w_star == ints({3, 5, 6, 8, 9, 11, 12}));

  CHECK_THROWS_AS(weight_sequence(cluster, WeightVariant::CsnOneSeparate), Error);
  const SystemConfig two = validate_config(make_raw(5, 2, 3, 2, 3, 2, 1, 1));
  CHECK_THROWS_AS(weight_sequence(two, WeightVariant::ClusterDSS), Error);
  CHECK_THROWS_AS(system_capacity(two), Error);
}

TEST_CASE("branch boundaries evaluate the branch that includes them") {
  // Cluster-only, k=7, R=4: split after i=6.
  const SystemConfig c = validate_config(make_raw(7, 3, 4, 0, 6, 2, 1, 0));
  const auto w = weight_sequence(c, WeightVariant::ClusterDSS).w_star;
  CHECK(w[1] == Rational(5));  // i = 6, first branch
  CHECK(w[0] == Rational(3));  // i = 7, second branch
  // One separate node with k-1 < R: every i < k sits in the first branch.
  const SystemConfig s = validate_config(make_raw(3, 2, 4, 1, 2, 2, 1, 0));
  CHECK(weight_sequence(s, WeightVariant::CsnOneSeparate).w_star == ints({3, 6, 8}));
  // k-1 a multiple of R: the first branch is empty.
  CHECK(weight_sequence(five_node(), WeightVariant::CsnOneSeparate).w_star.back() == Rational(5));
}

TEST_CASE("property: weight sequences are ascending and positive") {
  for (int L = 1; L <= 3; ++L) {
    for (int R = 1; R <= 4; ++R) {
      for (int E = 0; E <= 1; ++E) {
        const int n = L * R + E;
        for (int k = 1; k < n; ++k) {
          for (int d_C = std::max(0, k - R + 1); d_C <= n - R; ++d_C) {
            for (auto [bi, bc] : {std::pair{3, 1}, std::pair{5, 2}, std::pair{1, 1}}) {
              const SystemConfig cfg = validate_config(make_raw(k, L, R, E, d_C, bi, bc, 0));
              const auto w = weight_sequence(cfg, variant_for(cfg)).w_star;
              CHECK(std::is_sorted(w.begin(), w.end()));
              CHECK(w.front() > Rational(0));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("property: equal bandwidths reduce both variants to (R+d_C-i) beta") {
  for (int k = 1; k <= 9; ++k) {
    for (int E = 0; E <= 1; ++E) {
      const int L = 3;
      const int R = 4;
      const int n = L * R + E;
      for (int d_C = std::max(0, k - R + 1); d_C <= n - R; ++d_C) {
        const SystemConfig cfg = validate_config(make_raw(k, L, R, E, d_C, Rational(3, 2), Rational(3, 2), 0));
        const auto w = weight_sequence(cfg, variant_for(cfg)).w_star;
        for (int i = 1; i <= k; ++i) {
          CHECK(w[static_cast<std::size_t>(k - i)] == Rational(R + d_C - i) * Rational(3, 2));
        }
      }
    }
  }
}

TEST_CASE("system capacity") {
  CHECK(system_capacity(five_node(2)) == Rational(6));
  CHECK(system_capacity(five_node(100)) == Rational(10));
  CHECK(system_capacity(five_node(0)) == Rational(0));
  CHECK(system_capacity(five_node(Rational(5, 2))) == Rational(2 + Rational(5, 2) * 2));
}

TEST_CASE("min-cut by separate location") {
  const SystemConfig cfg = five_node(100);
  CHECK(mincut_by_location(cfg, 3) == Rational(10));
  CHECK(mincut_by_location(cfg, 3) == system_capacity(cfg));
  // pi(1) = (0,1,1) has weights (4, 4, 2); see the max-flow cross-check in
  // the oracle tests.
  CHECK(optimal_order_with_separate_at(cfg.nodes(), 1).str() == "(0,1,1)");
  CHECK(part_incoming_weights(cfg, optimal_order_with_separate_at(cfg.nodes(), 1)).w == ints({4, 4, 2}));
  CHECK(mincut_by_location(cfg, 1) == Rational(10));
  CHECK(mincut_by_location(cfg, 2) == Rational(10));
  CHECK_THROWS_AS(mincut_by_location(cfg, 4), Error);

  const SystemConfig big = validate_config(make_raw(9, 3, 4, 1, 7, 2, 1, 1000));
  for (int j = 1; j < 9; ++j) CHECK(mincut_by_location(big, j) >= mincut_by_location(big, j + 1));
  CHECK(mincut_by_location(big, 9) == system_capacity(big));
}

TEST_CASE("least alpha for a file size") {
  const SystemConfig cfg = five_node(0);
  CHECK(min_alpha(cfg, 6) == Rational(2));
  CHECK(min_alpha(cfg, 0) == Rational(0));
  CHECK(min_alpha(cfg, 8) == Rational(3));
  CHECK(min_alpha(cfg, 10) == Rational(5));
  // First segment runs up to k * w*_1 = 6, not w*_1 = 2.
  CHECK(min_alpha(cfg, 5) == Rational(5, 3));
  CHECK(system_capacity(cfg.with_alpha(Rational(5, 3))) == Rational(5));
  CHECK_THROWS_AS(min_alpha(cfg, 11), Error);
  CHECK_THROWS_AS(min_alpha(cfg, -1), Error);
}

TEST_CASE("property: min_alpha inverts the capacity curve exactly") {
  const Rational eps(1, 1000);
  for (int k = 2; k <= 9; ++k) {
    for (int E = 0; E <= 1; ++E) {
      const int n = 12 + E;
      for (int d_C = std::max(0, k - 3); d_C <= n - 4; ++d_C) {
        const SystemConfig cfg = validate_config(make_raw(k, 3, 4, E, d_C, 2, 1, 0));
        const Rational top = weight_sequence(cfg, variant_for(cfg)).total();
        for (Rational M(1, 2); M <= top; M += Rational(1, 2)) {
          const Rational a = min_alpha(cfg, M);
          CHECK(system_capacity(cfg.with_alpha(a)) == M);
          CHECK(system_capacity(cfg.with_alpha(a - eps)) < M);
        }
        CHECK_THROWS_AS(min_alpha(cfg, top + eps), Error);
      }
    }
  }
}

TEST_CASE("property: capacity is non-decreasing in alpha and in beta_C at fixed ratio") {
  for (int k = 2; k <= 9; ++k) {
    const SystemConfig base = validate_config(make_raw(k, 3, 4, 1, std::max(k - 3, 0) + 1, 2, 1, 0));
    Rational prev(-1);
    for (Rational a(0); a <= Rational(20); a += Rational(1, 3)) {
      const Rational c = system_capacity(base.with_alpha(a));
      CHECK(c >= prev);
      prev = c;
    }
    prev = Rational(-1);
    for (Rational b(1, 4); b <= Rational(3); b += Rational(1, 4)) {
      const SystemConfig cfg = validate_config(make_raw(k, 3, 4, 1, base.repair().d_C, b * 2, b, 5));
      const Rational c = system_capacity(cfg);
      CHECK(c >= prev);
      prev = c;
    }
  }
}

TEST_CASE("tradeoff curves") {
  const NodeParams nodes{5, 3, 2, 2, 1};
  const TradeoffCurve five_node_curve = tradeoff_curve(nodes, 3, 2, 6, {Rational(1)});
  REQUIRE(five_node_curve.points.size() == 1);
  CHECK(five_node_curve.points[0].beta_C == Rational(1));
  CHECK(five_node_curve.points[0].alpha_star == Rational(2));
  CHECK(five_node_curve.points[0].file_size == Rational(6));
  CHECK(five_node_curve.variant == WeightVariant::CsnOneSeparate);

  const auto grid = rational_grid(Rational(1, 4), Rational(2), Rational(1, 4));
  CHECK(grid.size() == 8);
  for (const auto& p : tradeoff_curve(nodes, 3, 2, 0, grid).points) CHECK(p.alpha_star == Rational(0));

  const TradeoffCurve wide = tradeoff_curve({13, 7, 3, 4, 1}, 9, 2, 32, rational_grid(Rational(1, 8), Rational(4), Rational(1, 8)));
  CHECK_FALSE(wide.unstorable.empty());
  CHECK_FALSE(wide.points.empty());
  for (std::size_t i = 1; i < wide.points.size(); ++i) CHECK(wide.points[i].alpha_star <= wide.points[i - 1].alpha_star);
  for (const auto& p : wide.points) {
    const SystemConfig at = validate_config(make_raw(7, 3, 4, 1, 9, p.beta_C * 2, p.beta_C, p.alpha_star));
    CHECK(system_capacity(at) == Rational(32));
  }

  CHECK_THROWS_AS(tradeoff_curve(nodes, 3, Rational(1, 2), 6, {Rational(1)}), Error);
  CHECK_THROWS_AS(rational_grid(1, 2, 0), Error);
  CHECK(rational_grid(2, 1, 1).empty());
}

TEST_CASE("adding a separate node") {
  const RepairParams r{Rational(1000), 3, Rational(2), 7, Rational(1)};
  auto v = compare_separate({12, 8, 3, 4, 0}, r, 1000);
  CHECK(v.outcome == Comparison::Equal);
  CHECK(v.capacity_with == v.capacity_without);

  v = compare_separate({12, 9, 3, 4, 0}, r, 1000);
  CHECK(v.outcome == Comparison::Reduced);
  CHECK(v.capacity_with < v.capacity_without);

  RepairParams r7 = r;
  r7.d_C = 6;
  v = compare_separate({12, 7, 3, 4, 0}, r7, 1000);
  CHECK(v.outcome == Comparison::Reduced);
  CHECK(v.capacity_with < v.capacity_without);

  // Small alpha caps every weight, hiding the difference.
  CHECK(compare_separate({12, 9, 3, 4, 0}, r, 1).outcome == Comparison::Equal);
  CHECK_THROWS_AS(compare_separate({13, 9, 3, 4, 1}, r, 1000), Error);
}

TEST_CASE("property: separate-node dichotomy at uncapped alpha") {
  for (int L = 1; L <= 3; ++L) {
    for (int R = 1; R <= 4; ++R) {
      const int n = L * R;
      for (int k = 1; k < n; ++k) {
        for (int d_C = std::max(0, k - R + 1); d_C <= n - R; ++d_C) {
          for (auto [bi, bc] : {std::pair{2, 1}, std::pair{3, 2}, std::pair{1, 1}}) {
            const RepairParams r{Rational(0), R - 1, Rational(bi), d_C, Rational(bc)};
            const Rational uncapped = Rational(r.d()) * r.beta_I;
            const auto v = compare_separate({n, k, L, R, 0}, r, uncapped);
            const bool equal = k % R == 0 || bi == bc;
            CHECK(v.outcome == (equal ? Comparison::Equal : Comparison::Reduced));
          }
        }
      }
    }
  }
}
