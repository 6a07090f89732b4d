#pragma once

#include "phylotoric/polytope.hpp"

#include <cstdint>
#include <vector>

namespace phylotoric {

// a[i][j] = number of pairs (F, G) of an i-face contained in a j-face for
// i <= j, mirrored below the diagonal; a[i][i] is the number of i-faces.
// Rows and columns run over dimensions 0 .. dim-1.
struct IncidenceMatrix {
  std::vector<std::vector<std::int64_t>> entries;

  std::size_t size() const { return entries.size(); }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return entries.at(i).at(j); }
  std::vector<std::int64_t> f_vector() const;
  friend bool operator==(const IncidenceMatrix&, const IncidenceMatrix&) = default;
};

// Faces are the intersections of facet vertex sets; the polytope must be
// full-dimensional in the affine span of its vertices (throws otherwise).
IncidenceMatrix face_lattice(const SubcubePolytope& p);

}  // namespace phylotoric
