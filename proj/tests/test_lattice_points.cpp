#include "doctest.h"
#include "phylotoric/lattice_points.hpp"

#include <cstdlib>

using namespace phylotoric;

TEST_CASE("dilations of the tetrahedron") {
  auto p = polytope_of(star(3));
  const std::size_t full[] = {1, 4, 11, 24};
  const std::size_t normalized[] = {1, 4, 10, 20};
  for (int n = 0; n <= 3; ++n) {
    CHECK(count_lattice_points(p, n, LatticeKind::full) == full[n]);
    CHECK(count_lattice_points(p, n, LatticeKind::normalized) == normalized[n]);
  }
  CHECK(lattice_points(p, 0, LatticeKind::full) == std::vector<LatticeVector>{{0, 0, 0}});
}

TEST_CASE("4-leaf tree") {
  auto p = polytope_of(parse_tree("((1,2),(3,4));"));
  const std::size_t expected[] = {1, 8, 34, 104, 259};
  for (int n = 0; n <= 4; ++n) CHECK(count_lattice_points(p, n, LatticeKind::normalized) == expected[n]);
}

TEST_CASE("6-leaf trees") {
  for (const Tree& t : {snowflake(), caterpillar(3)}) {
    auto p = polytope_of(t);
    CHECK(lattice_points(p, 1, LatticeKind::normalized) == p.vertices);
    CHECK(count_lattice_points(p, 2, LatticeKind::normalized) == 396);
    CHECK(count_lattice_points(p, 3, LatticeKind::normalized) == 2848);
  }
  auto p = polytope_of(caterpillar(3));
  CHECK(count_lattice_points(p, 2, LatticeKind::full) == 683);
  CHECK(count_lattice_points(p, 3, LatticeKind::full) == 7424);
}

TEST_CASE("enumeration agrees with a plain box scan") {
  for (const auto& t : all_trees(5)) {
    auto p = polytope_of(t);
    for (int n = 0; n <= 2; ++n)
      for (auto kind : {LatticeKind::full, LatticeKind::normalized}) {
        std::vector<LatticeVector> brute;
        const int dim = t.edge_count();
        std::vector<std::int64_t> x(dim, 0);
        while (true) {
          LatticeVector v(x);
          if (p.contains(v, n) && (kind == LatticeKind::full || p.in_normalized_lattice(v))) brute.push_back(v);
          int i = dim - 1;
          while (i >= 0 && x[i] == n) x[i--] = 0;
          if (i < 0) break;
          ++x[i];
        }
        CHECK(lattice_points(p, n, kind) == brute);
      }
  }
}

TEST_CASE("fiber products with equations") {
  auto tet = polytope_of(star(3));
  auto p = fiber_product(tet, LatticeVector{1, 0, 0}, tet, LatticeVector{1, 0, 0});
  // Same as the 4-leaf tree up to the duplicated glued coordinate.
  for (int n = 0; n <= 3; ++n)
    CHECK(count_lattice_points(p, n, LatticeKind::normalized) ==
          count_lattice_points(polytope_of(caterpillar(1)), n, LatticeKind::normalized));
}

TEST_CASE("output does not depend on the thread count") {
  auto p = polytope_of(snowflake());
  setenv("PHYLOTORIC_THREADS", "1", 1);
  CHECK(worker_count() == 1);
  auto one = lattice_points(p, 3, LatticeKind::normalized);
  setenv("PHYLOTORIC_THREADS", "4", 1);
  auto four = lattice_points(p, 3, LatticeKind::normalized);
  unsetenv("PHYLOTORIC_THREADS");
  CHECK(one == four);
  CHECK(std::is_sorted(one.begin(), one.end()));
}
