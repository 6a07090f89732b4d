#include "doctest.h"

#include "phylotoric/exact.hpp"
#include "phylotoric/gf2.hpp"

#include <limits>

using namespace phylotoric;

TEST_CASE("checked arithmetic throws on overflow") {
  constexpr auto big = std::numeric_limits<std::int64_t>::max();
  CHECK(checked_add(2, 3) == 5);
  CHECK_THROWS(checked_add(big, 1));
  CHECK_THROWS(checked_mul(big / 2 + 1, 2));
}

TEST_CASE("determinant, rank and kernel") {
  CHECK(determinant({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}) == 2);
  CHECK(determinant({{1, 2}, {2, 4}}) == 0);
  CHECK(rank({{1, 2, 3}, {2, 4, 6}, {0, 1, 0}}) == 2);
  CHECK(affine_rank({{0, 0}, {1, 1}, {2, 2}}) == 1);
  auto k = kernel_vector({{1, 1, 0}, {0, 2, 2}});
  CHECK(k[0] + k[1] == 0);
  CHECK(k[1] + k[2] == 0);
  CHECK(std::abs(k[0]) == 1);
}

TEST_CASE("exact solve and lattice index") {
  auto x = solve({{Rational(2), Rational(1)}, {Rational(1), Rational(3)}}, {Rational(1), Rational(2)});
  CHECK(x[0] == Rational(1, 5));
  CHECK(x[1] == Rational(3, 5));
  CHECK(lattice_index({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}, 3) == 2);
  CHECK(lattice_index({{1, 0}}, 2) == 0);
  CHECK(to_string(Rational(-3, 6)) == "-1/2");
}

TEST_CASE("gf2 kernel of the tetrahedron form") {
  gf2::Row r(3);
  r.set();
  auto basis = gf2::kernel_basis({r}, 3);
  CHECK(basis.size() == 2);
  CHECK(gf2::span(basis, 3).size() == 4);
}
