#pragma once

// Quadratic binomials u1 + u2 = w1 + w2 among the vertices of a tree
// polytope, written in socket coordinates x_{b1...bL}. Only the quadratic
// part of the ideal is produced.

#include "phylotoric/exact.hpp"
#include "phylotoric/polytope.hpp"
#include "phylotoric/tree.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace phylotoric {

// Multiset of exponent vectors with multiplicities, sorted, multiplicities > 0.
using Monomial = std::vector<std::pair<LatticeVector, int>>;

struct BinomialRelation {
  Monomial left;
  Monomial right;

  int degree() const;
  // Equal degrees and equal weighted vertex sums.
  bool balanced() const;
  // Disjoint supports.
  bool primitive() const;
  friend auto operator<=>(const BinomialRelation&, const BinomialRelation&) = default;
};

// Every relation between two distinct vertex pairs with equal sums, once each.
// Sides and relations are ordered by their socket bitstrings when p carries a
// tree and by vertex order otherwise.
std::vector<BinomialRelation> quadratic_relations(const SubcubePolytope& p);

// Sorted socket bitstrings of one side of a relation, e.g. {"0000", "1111"}.
std::vector<std::string> socket_names(const Tree& t, const Monomial& m);

// "x_{0000}*x_{1111} = x_{0011}*x_{1100}", the smaller side on the left.
std::string render(const Tree& t, const BinomialRelation& r);

std::vector<std::string> socket_equations(const Tree& t);

// Evaluates every relation at z_e = a/b with a, b uniform in [1, 10^4] for
// each edge, exactly; true iff all vanish in all trials.
bool vanishing_check(const Tree& t, const std::vector<BinomialRelation>& relations, int trials, std::uint64_t seed);

}  // namespace phylotoric
