#include "doctest.h"
#include "phylotoric/double_description.hpp"
#include "phylotoric/dual.hpp"
#include "phylotoric/exact.hpp"

#include <algorithm>

using namespace phylotoric;

TEST_CASE("double description of simple cones") {
  // Positive orthant.
  auto rays = extreme_rays({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(rays == std::vector<LatticeVector>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
  // Cone over a square: t >= |x|, t >= |y| has 4 rays.
  auto square = extreme_rays({{1, 1, 0}, {1, -1, 0}, {1, 0, 1}, {1, 0, -1}});
  CHECK(square == std::vector<LatticeVector>{{1, -1, -1}, {1, -1, 1}, {1, 1, -1}, {1, 1, 1}});
  CHECK_THROWS(extreme_rays({{1, 0}}));
}

TEST_CASE("dual polytope of the 3-star") {
  auto d = dual_polytope(star(3));
  std::vector<LatticeVector> expected{{-1, -1, -1}, {-1, 1, 1}, {1, -1, 1}, {1, 1, -1}};
  CHECK(d == expected);
  CHECK(dual_polytope(snowflake()).size() == 16);
  CHECK(dual_polytope(caterpillar(3)).size() == 16);
}

TEST_CASE("dual faces have 3n points on the Gorenstein hyperplane") {
  for (const auto& t : all_trees(6))
    for (const auto& u : polytope_of(t).vertices) {
      auto face = dual_face(t, u);
      CHECK(face.size() == static_cast<std::size_t>(3 * t.inner_count()));
      for (const auto& w : dual_polytope(t)) CHECK(dot(w, gorenstein_form(t, u)) >= -2);
    }
}

TEST_CASE("polarity for small trees") {
  for (int l = 3; l <= 5; ++l)
    for (const auto& t : all_trees(l)) {
      auto r = polarity_check(t);
      CHECK(r.polar_matches_dual);
      CHECK(r.facets_match_model);
    }
  CHECK(polarity_check(snowflake()).ok());
  CHECK(polarity_check(caterpillar(3)).ok());
}

TEST_CASE("division of the 3-star and the 4-leaf tree") {
  for (const auto& u : polytope_of(star(3)).vertices) {
    auto d = vertex_link_division(star(3), u);
    CHECK(d.simplices.size() == 1);
    CHECK(verify_division(star(3), d).ok());
  }

  auto t = parse_tree("((1,2),(3,4));");
  auto d = vertex_link_division(t, LatticeVector(5));
  REQUIRE(d.simplices.size() == 2);
  CHECK(verify_division(t, d).ok());
  // The shared facet contains e*_0 / 2 for the inner edge e_0.
  std::vector<LatticeVector> common;
  for (const auto& p : d.simplices[0])
    if (std::find(d.simplices[1].begin(), d.simplices[1].end(), p) != d.simplices[1].end()) common.push_back(p);
  REQUIRE(common.size() == 5);
  IntMatrix diffs;
  for (std::size_t i = 1; i < common.size(); ++i) diffs.push_back((common[i] - common[0]).coords());
  LatticeVector h(kernel_vector(diffs));
  LatticeVector half_e0(5);
  half_e0[t.inner_edges().front()] = 1;
  CHECK(dot(h, half_e0) == dot(h, common[0]));

  CHECK_THROWS(vertex_link_division(t, LatticeVector{1, 0, 0, 0, 0}));
}

TEST_CASE("divisions of 6-leaf trees, other roots included") {
  for (const Tree& t : {snowflake(), caterpillar(3)}) {
    for (const auto& u : polytope_of(t).vertices)
      for (VertexId root : t.inner_nodes()) {
        auto d = vertex_link_division(t, u, root);
        CHECK(d.simplices.size() == 8);
        auto r = verify_division(t, d);
        CHECK_MESSAGE(r.ok(), r.failure());
      }
  }
}

TEST_CASE("a corrupted division is rejected") {
  auto t = caterpillar(3);
  auto d = vertex_link_division(t, LatticeVector(9));
  d.simplices.pop_back();
  auto r = verify_division(t, d);
  CHECK_FALSE(r.ok());
  d = vertex_link_division(t, LatticeVector(9));
  d.simplices.push_back(d.simplices.front());
  CHECK_FALSE(verify_division(t, d).ok());
}

TEST_CASE("Gorenstein certificates") {
  CHECK(gorenstein_check(star(3)).ok);
  auto four = gorenstein_check(parse_tree("((1,2),(3,4));"));
  CHECK(four.ok);
  CHECK(four.certificates.size() == 8);
  for (const auto& t : all_trees(6)) CHECK(gorenstein_check(t).ok);
}
