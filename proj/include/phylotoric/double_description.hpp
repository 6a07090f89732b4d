#pragma once

// Extreme rays of a pointed polyhedral cone {y : A y >= 0} by the
// double-description method with the combinatorial adjacency test.

#include "phylotoric/lattice.hpp"

#include <vector>

namespace phylotoric {

// Rows of A; the cone must be pointed (A of full column rank). Rays are
// returned as primitive integer vectors, sorted.
std::vector<LatticeVector> extreme_rays(const std::vector<LatticeVector>& rows);

}  // namespace phylotoric
