#include "doctest.h"
#include "phylotoric/ehrhart.hpp"

#include <random>

using namespace phylotoric;

namespace {
SymmetricSequence random_symmetric(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(0, 50);
  std::vector<Integer> v(n + 1);
  for (int k = 0; 2 * k <= n; ++k) v[k] = v[n - k] = dist(rng);
  return SymmetricSequence(v);
}
}  // namespace

TEST_CASE("symmetric sequences validate") {
  CHECK_THROWS(SymmetricSequence({1, 2}));
  CHECK_THROWS(SymmetricSequence({-1, -1}));
  CHECK_THROWS(star(SymmetricSequence::ones(2), SymmetricSequence::ones(3)));
  CHECK(SymmetricSequence::ones(4).sum() == 5);
}

TEST_CASE("closed forms of small star powers") {
  for (int n = 0; n <= 50; ++n) {
    auto two = star_power(n, 2), three = star_power(n, 3);
    for (int k = 0; k <= n; ++k) {
      CHECK(two[k] == Integer((k + 1) * (n - k + 1)));
      CHECK(6 * three[k] == Integer((k + 1) * (n - k + 1)) * Integer(n * n + k * n - k * k + 5 * n + 6));
    }
    CHECK(6 * two.sum() == Integer((n + 1) * (n + 2) * (n + 3)));
    CHECK(30 * three.sum() == Integer((n + 1) * (n + 2) * (n + 3)) * Integer(n * n + 4 * n + 5));
  }
  CHECK(star_power(7, 1) == SymmetricSequence::ones(7));
  CHECK(star_power(4, 3).values() == std::vector<Integer>{35, 60, 69, 60, 35});
  CHECK(star_power(6, 5).values() == std::vector<Integer>{14328, 26472, 34584, 37432, 34584, 26472, 14328});
}

TEST_CASE("closed formula equals the lattice sum and commutes") {
  std::mt19937_64 rng(7);
  for (int n = 0; n <= 10; ++n)
    for (int trial = 0; trial < 4; ++trial) {
      auto f = random_symmetric(n, rng), g = random_symmetric(n, rng);
      CHECK(star(f, g) == star_by_lattice_sum(f, g));
    }
  for (int n = 0; n <= 20; ++n) {
    auto f = random_symmetric(n, rng), g = random_symmetric(n, rng);
    CHECK(star(f, g) == star(g, f));
  }
}

TEST_CASE("associativity on relative Ehrhart inputs") {
  for (int n = 0; n <= 12; ++n) {
    auto one = SymmetricSequence::ones(n);
    for (int r = 1; r <= 4; ++r)
      CHECK(star(star(one, one), star_power(n, r)) == star(one, star_power(n, r + 1)));
  }
}

TEST_CASE("relative Ehrhart fast and slow paths agree") {
  for (int l = 3; l <= 6; ++l)
    for (const auto& t : all_trees(l))
      for (int n = 0; n <= (l <= 5 ? 4 : 2); ++n) {
        auto slow = relative_ehrhart_slow_all(t, n);
        for (int leaf = 1; leaf <= l; ++leaf) CHECK(slow[leaf - 1] == relative_ehrhart(PointedTree(t, leaf), n));
      }
  CHECK(relative_ehrhart(PointedTree(snowflake(), 3), 2).sum() == 396);
  CHECK(relative_ehrhart_slow(PointedTree(caterpillar(3), 6), 4) == star_power(4, 5));
}

TEST_CASE("Hilbert-Ehrhart polynomials") {
  auto h3 = hilbert_ehrhart_polynomial(star(3));
  CHECK(h3.factored() == "(1/6)(n+1)(n+2)(n+3)");
  auto h4 = hilbert_ehrhart_polynomial(caterpillar(1));
  CHECK(h4.factored() == "(1/30)(n+1)(n+2)(n+3)(n^2+4n+5)");
  const std::string six = "(1/22680)(n+1)(n+2)(n+3)(31n^6+372n^5+1942n^4+5616n^3+9511n^2+8988n+3780)";
  for (const Tree& t : {snowflake(), caterpillar(3)}) {
    auto h = hilbert_ehrhart_polynomial(t);
    CHECK(h.degree() == 9);
    CHECK(h.leading() == Rational(31, 22680));
    CHECK(h.factored() == six);
  }
  // Exactness beyond the interpolation nodes.
  auto h = hilbert_ehrhart_polynomial(caterpillar(3));
  for (int n = 10; n <= 12; ++n) CHECK(h(Rational(n)) == Rational(hilbert_function(caterpillar(3), n)));

  CHECK(normalized_volume(star(3)) == 1);
  CHECK(normalized_volume(caterpillar(1)) == 4);
  CHECK(normalized_volume(snowflake()) == 496);
  for (int l = 3; l <= 7; ++l)
    for (const auto& t : all_trees(l)) CHECK(hilbert_ehrhart_polynomial(t).degree() == t.edge_count());
}

TEST_CASE("polynomial arithmetic and display") {
  RationalPolynomial p({Rational(5), Rational(4), Rational(1)});
  CHECK(p.to_string() == "n^2+4n+5");
  CHECK(p(Rational(1)) == 10);
  CHECK(RationalPolynomial({Rational(-1), Rational(0), Rational(1, 2)}).to_string("t") == "1/2t^2-1");
  CHECK(RationalPolynomial().to_string() == "0");
  CHECK(RationalPolynomial({Rational(0), Rational(6), Rational(-6)}).factored("t") == "(-6)(t)(t-1)");
  auto q = RationalPolynomial::interpolate({0, 1, 2}, {5, 10, 17});
  CHECK(q == p);
  CHECK(p.integral(0, 1) == Rational(1, 3) + 2 + 5);
}

TEST_CASE("volume distributions") {
  auto d1 = volume_distribution(1);
  CHECK(d1.piece == RationalPolynomial::constant(1));
  auto d2 = volume_distribution(2);
  CHECK(d2.piece == RationalPolynomial({Rational(0), Rational(6), Rational(-6)}));
  for (int r = 1; r <= 8; ++r) {
    auto d = volume_distribution(r);
    CHECK(d.total_integral() == 1);
    for (int i = 0; i <= 1000; ++i) CHECK(d.evaluate(i / 1000.0) >= 0);
    CHECK(d(Rational(1, 3)) == d(Rational(2, 3)));
  }
  for (int r = 2; r <= 6; ++r) CHECK(discrete_deviation(volume_distribution(r), 200) <= 0.05);
}

TEST_CASE("the tree recursion is shape independent") {
  for (int leaves = 3; leaves <= 8; ++leaves)
    for (const auto& t : all_trees(leaves))
      for (int l = 1; l <= leaves; ++l) CHECK(relative_ehrhart(PointedTree(t, l), 5) == star_power(5, leaves - 1));
}
