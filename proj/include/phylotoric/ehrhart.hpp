#pragma once

// Relative Ehrhart functions, the star product that combines them under
// pointed grafting, Hilbert-Ehrhart polynomials and volume distributions.

#include "phylotoric/exact.hpp"
#include "phylotoric/lattice_points.hpp"
#include "phylotoric/rational_polynomial.hpp"
#include "phylotoric/tree.hpp"

#include <vector>

namespace phylotoric {

// Nonnegative integers f(0..n) with f(k) = f(n-k).
class SymmetricSequence {
 public:
  explicit SymmetricSequence(std::vector<Integer> values);
  static SymmetricSequence ones(int n);

  int n() const { return static_cast<int>(values_.size()) - 1; }
  const Integer& operator[](int k) const { return values_.at(k); }
  const std::vector<Integer>& values() const { return values_; }
  Integer sum() const;
  friend bool operator==(const SymmetricSequence&, const SymmetricSequence&) = default;

 private:
  std::vector<Integer> values_;
};

// Closed rectangle formula, O(n^2) with parity prefix sums.
SymmetricSequence star(const SymmetricSequence& f, const SymmetricSequence& g);

// The defining sum over the normalized lattice points u of n times the
// tetrahedron, f(e1*(u)) g(e2*(u)) collected at e0*(u).
SymmetricSequence star_by_lattice_sum(const SymmetricSequence& f, const SymmetricSequence& g);

// (1^n)^{*r} as 1 * (1 * (... * 1)).
SymmetricSequence star_power(int n, int r);

// Fast path: star products nested along the tree, seen from the pointed leaf.
// Shape independence (equal to (1^n)^{*(L-1)}) is a checked property.
SymmetricSequence relative_ehrhart(const PointedTree& t, int n);

// Slow path: normalized lattice points of n Delta bucketed by the petiole
// coordinate of the pointed leaf.
SymmetricSequence relative_ehrhart_slow(const PointedTree& t, int n);

// Slow path for every leaf at once (index label - 1), one enumeration.
std::vector<SymmetricSequence> relative_ehrhart_slow_all(const Tree& t, int n);

// h(n) = sum_k of the relative sequence at leaf 1.
Integer hilbert_function(const Tree& t, int n);

// Interpolated at n = 0..|E|.
RationalPolynomial hilbert_ehrhart_polynomial(const Tree& t);

// |E|! times the leading coefficient of the Hilbert-Ehrhart polynomial.
Rational normalized_volume(const Tree& t);

struct VolumeDistribution {
  int r = 1;
  RationalPolynomial piece;  // valid on [0, 1/2]

  Rational operator()(const Rational& t) const;  // symmetric extension to [0, 1]
  double evaluate(double t) const;
  Rational total_integral() const;  // over [0, 1]
};

// delta^1 = 1 and the normalized recursion on [0, 1/2].
VolumeDistribution volume_distribution(int r);

// max_k |delta^r(k/n) - f(k)(n+1)/sum f| for f = (1^n)^{*r}.
double discrete_deviation(const VolumeDistribution& d, int n);

}  // namespace phylotoric
