#pragma once

// Lattice points of n * P for a subcube polytope P, by a pruned scan of the
// box [0, n]^dim. Coordinates are visited in an order that completes
// constraints early; every partial assignment is checked against the best
// case of the unassigned coordinates.

#include "phylotoric/polytope.hpp"

#include <vector>

namespace phylotoric {

enum class LatticeKind { full, normalized };

// Sorted lexicographically, independent of the number of worker threads.
std::vector<LatticeVector> lattice_points(const SubcubePolytope& p, int n, LatticeKind kind);

std::size_t count_lattice_points(const SubcubePolytope& p, int n, LatticeKind kind);

// Worker threads for parallel scans: PHYLOTORIC_THREADS if set and positive,
// otherwise the hardware concurrency.
unsigned worker_count();

}  // namespace phylotoric
