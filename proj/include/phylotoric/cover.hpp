#pragma once

// Unimodular covers of fiber products of unimodular simplices and the
// point location that realizes them: each factor contributes the barycentric
// coordinates of the query point, and factors are folded together along
// their shared 0/1 coordinate by the staircase (northwest-corner) rule
// starting from c_{1,1} = min(a_1, b_1).

#include "phylotoric/exact.hpp"
#include "phylotoric/lattice.hpp"
#include "phylotoric/polytope.hpp"
#include "phylotoric/tree.hpp"

#include <cstdint>
#include <vector>

namespace phylotoric {

struct CoverFactor {
  std::vector<int> coords;              // global coordinate ids
  std::vector<LatticeVector> vertices;  // coords.size() + 1 affinely independent local points
};

struct LocatedPoint {
  std::vector<LatticeVector> simplex;       // dim + 1 vertices in global coordinates
  std::vector<Rational> coefficients;       // staircase coefficients of the (perturbed) point
  std::vector<Rational> barycentric;        // coordinates of the query point in `simplex`
  bool perturbed = false;
  int epsilon_exponent = 0;                 // perturbation 2^-k, 0 when none
  Integer determinant = 0;                  // |det| of the edge vectors at simplex[0]
};

class FiberProductCover {
 public:
  // Shared coordinates must take values in {0,1} on every factor using them
  // and the factor/coordinate incidence graph must be a forest.
  FiberProductCover(std::size_t dim, std::vector<CoverFactor> factors);

  // One tetrahedron per inner node, glued along inner edges.
  static FiberProductCover of_tree(const Tree& t);

  std::size_t dim() const { return dim_; }
  const std::vector<CoverFactor>& factors() const { return factors_; }

  // |det| of a unimodular simplex of the fiber product lattice: the product
  // of the factor determinants.
  const Integer& unit_determinant() const { return unit_; }

  // Vertices of the fiber product, sorted.
  std::vector<LatticeVector> vertices() const;

  bool contains(const std::vector<Rational>& x) const;

  // Throws std::domain_error when x lies outside.
  LocatedPoint locate(const std::vector<Rational>& x) const;

  // Locates `count` random rational points.
  std::vector<LocatedPoint> sample(std::size_t count, std::uint64_t seed) const;

 private:
  struct Entry {
    Rational mass;
    std::vector<std::int64_t> point;
    std::vector<bool> assigned;
  };
  std::vector<Rational> factor_barycentric(std::size_t f, const std::vector<Rational>& x) const;
  // Empty result when a tie or a zero mass makes the staircase ambiguous.
  std::vector<Entry> fold(const std::vector<Rational>& x) const;

  std::size_t dim_;
  std::vector<CoverFactor> factors_;
  std::vector<std::size_t> order_;  // folding order
  std::vector<int> glue_;           // per folded factor: shared coordinate with earlier ones, or -1
  Integer unit_;
};

// Lattice points of n P (normalized lattice) that are not sums of n vertices;
// computed by dynamic programming over vertex sums.
std::vector<LatticeVector> normality_counterexamples(const SubcubePolytope& p, int n);

}  // namespace phylotoric
