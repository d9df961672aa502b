#include <doctest.h>

#include "csn/mincut.hpp"
#include "csn/sequencing.hpp"

using namespace csn;

TEST_CASE("horizontal selection examples") {
  CHECK(horizontal_selection({13, 7, 3, 4, 1}, 1).str() == "(1,4,2,0)");
  CHECK(horizontal_selection({13, 9, 3, 4, 1}, 1).str() == "(1,4,4,0)");
  CHECK(horizontal_selection({12, 8, 3, 4, 0}, 0).str() == "(0,4,4,0)");
  CHECK(horizontal_selection({5, 3, 2, 2, 1}, 1).str() == "(1,2,0)");
  CHECK_THROWS_AS(horizontal_selection({14, 7, 3, 4, 2}, 2), Error);
  CHECK_THROWS_AS(horizontal_selection({12, 7, 3, 4, 0}, 1), Error);
  // The unrestricted filler still handles several separate nodes.
  CHECK(fill_clusters_horizontally({14, 7, 3, 4, 2}, 2).str() == "(2,4,1,0)");
}

TEST_CASE("vertical order examples") {
  CHECK(vertical_order({0, {4, 3}}, {}).str() == "(1,2,1,2,1,2,1)");
  CHECK(vertical_order({1, {4, 2, 0}}, {6}).str() == "(1,2,1,2,1,0,1)");
  CHECK(vertical_order({1, {4, 4, 0}}, {9}).str() == "(1,2,1,2,1,2,1,2,0)");
  CHECK(vertical_order({0, {2, 0}}, {}).str() == "(1,1)");
  CHECK(vertical_order({0, {3, 2, 1}}, {}).str() == "(1,2,3,1,2,1)");
  CHECK_THROWS_AS(vertical_order({1, {2, 0}}, {}), Error);
  CHECK_THROWS_AS(vertical_order({1, {2, 0}}, {4}), Error);
  CHECK_THROWS_AS(SeparatePositions({2, 2}), Error);
}

TEST_CASE("orders with the separate node at a fixed location") {
  const NodeParams k8{13, 8, 3, 4, 1};
  CHECK(optimal_order_with_separate_at(k8, 8).str() == "(1,2,1,2,1,2,1,0)");
  CHECK(optimal_order_with_separate_at(k8, 4).str() == "(1,2,1,0,2,1,2,1)");
  CHECK(optimal_order_with_separate_at({13, 7, 3, 4, 1}, 7).str() == "(1,2,1,2,1,1,0)");
  CHECK_THROWS_AS(optimal_order_with_separate_at(k8, 0), Error);
  CHECK_THROWS_AS(optimal_order_with_separate_at(k8, 9), Error);
  CHECK_THROWS_AS(optimal_order_with_separate_at({12, 8, 3, 4, 0}, 1), Error);
}

TEST_CASE("property: constructions stay inside the distribution and order sets") {
  for (int L = 1; L <= 3; ++L) {
    for (int R = 1; R <= 4; ++R) {
      for (int E = 0; E <= 1; ++E) {
        const int n = L * R + E;
        for (int k = 1; k < n; ++k) {
          const NodeParams nodes{n, k, L, R, E};
          for (int s0 = 0; s0 <= E; ++s0) {
            if (k - s0 > L * R || k - s0 < 0) continue;
            const auto s = horizontal_selection(nodes, s0);
            CHECK(is_member(nodes, s));
            for (int j = 1; j <= k && s0 == 1; ++j) {
              const ClusterOrder o = vertical_order(s, {j});
              CHECK(distribution_of(o, L) == s);
              CHECK(o[static_cast<std::size_t>(j - 1)] == 0);
              CHECK_NOTHROW(check_order(nodes, o));
            }
            if (s0 == 0) CHECK(distribution_of(vertical_order(s, {}), L) == s);
          }
        }
      }
    }
  }
}
