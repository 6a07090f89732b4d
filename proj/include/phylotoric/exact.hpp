#pragma once

// Exact arithmetic used throughout: GMP-backed big integers/rationals for
// anything that can grow (Ehrhart data, polynomials, barycentric coordinates)
// and overflow-checked int64 kernels for the small dense matrices that show up
// in lattice geometry (determinants, ranks, normals of simplex facets).

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace phylotoric {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using IntMatrix = std::vector<std::vector<std::int64_t>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

std::int64_t gcd_of(std::span<const std::int64_t> values);

// Divides every entry by the gcd of the vector (no-op for the zero vector).
void make_primitive(std::vector<std::int64_t>& v);

// Fraction-free (Bareiss) determinant of a square matrix.
std::int64_t determinant(IntMatrix m);

std::size_t rank(IntMatrix m);

// Rank of the affine span of a point set.
std::size_t affine_rank(const std::vector<std::vector<std::int64_t>>& points);

// Primitive integer vector orthogonal to the rows of an (n-1) x n matrix of
// rank n-1. Throws if the kernel is not one-dimensional.
std::vector<std::int64_t> kernel_vector(const IntMatrix& rows);

// Solves A x = b exactly; A square and nonsingular.
std::vector<Rational> solve(RationalMatrix a, std::vector<Rational> b);

// Index of the sublattice spanned by `generators` inside Z^dim; 0 when the
// generators do not span a full-rank sublattice.
Integer lattice_index(const std::vector<std::vector<std::int64_t>>& generators, std::size_t dim);

std::string to_string(const Rational& q);

}  // namespace phylotoric
