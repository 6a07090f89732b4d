#pragma once

// The dual polytope in N-hat, faces u-perp of its vertices, simplex divisions
// of vertex links, and the Gorenstein/terminality certificates built on them.
// All N-hat points are doubled: the point v/2 - e* is stored as v - 2e*.

#include "phylotoric/lattice.hpp"
#include "phylotoric/polytope.hpp"
#include "phylotoric/tree.hpp"

#include <string>
#include <vector>

namespace phylotoric {

// For each inner node v (canonical order): -v, v - 2e_0, v - 2e_1, v - 2e_2.
std::vector<LatticeVector> dual_polytope(const Tree& t);

// The all-ones vector sigma-hat.
LatticeVector sigma_hat(const Tree& t);

// 4u - 2 sigma-hat.
LatticeVector gorenstein_form(const Tree& t, const LatticeVector& u);

// Dual points w with w(4u - 2 sigma-hat) = -1, in canonical node order.
std::vector<LatticeVector> dual_face(const Tree& t, const LatticeVector& u);

struct SimplexDivision {
  LatticeVector u;
  VertexId root = -1;
  // Each simplex lists the origin first, then 2n+1 doubled points of u-perp.
  std::vector<std::vector<LatticeVector>> simplices;
};

// Inductive division over inner nodes in breadth-first order from `root`
// (default: the inner end of leaf 1's petiole). Throws if u is not a vertex.
SimplexDivision vertex_link_division(const Tree& t, const LatticeVector& u, VertexId root = -1);

struct DivisionReport {
  std::size_t simplex_count = 0;
  bool count_ok = false;
  bool vertices_ok = false;      // every simplex vertex is 0 or lies in u-perp
  bool unimodular = false;       // |det| = 2^(|E|-n) in doubled coordinates
  bool boundary_once = false;    // facets on the boundary of the cone occur once
  bool interior_paired = false;  // other facets occur twice, on opposite sides
  bool single_cover = false;     // a generic interior point lies in exactly one simplex
  bool ok() const {
    return count_ok && vertices_ok && unimodular && boundary_once && interior_paired && single_cover;
  }
  std::string failure() const;
};

DivisionReport verify_division(const Tree& t, const SimplexDivision& division);

struct GorensteinCertificate {
  LatticeVector u;
  std::size_t face_size = 0;
  bool face_size_ok = false;           // |u-perp| = 3n
  bool dual_values_ok = false;         // every dual point has w(4u - 2 sigma) >= -1
  bool integral_on_generators = false; // 4u - 2 sigma is integral on N-hat
  DivisionReport division;
  bool ok() const { return face_size_ok && dual_values_ok && integral_on_generators && division.ok(); }
};

struct GorensteinResult {
  bool ok = false;
  std::vector<GorensteinCertificate> certificates;  // one per vertex of Delta(T)
};

GorensteinResult gorenstein_check(const Tree& t);

struct PolarityReport {
  std::vector<LatticeVector> polar_vertices;  // vertices of {w : w(4 Delta - 2 sigma) >= -1}, doubled
  std::vector<LatticeVector> dual_facets;     // facet normals (c, a) of conv(dual): c + a.w >= 0
  bool polar_matches_dual = false;
  bool facets_match_model = false;
  bool ok() const { return polar_matches_dual && facets_match_model; }
};

// Exact double description in both directions.
PolarityReport polarity_check(const Tree& t);

}  // namespace phylotoric
