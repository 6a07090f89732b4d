#pragma once

// Linear algebra over GF(2) on dynamic bitsets.

#include <boost/dynamic_bitset.hpp>

#include <vector>

namespace phylotoric::gf2 {

using Row = boost::dynamic_bitset<>;

// Basis of {x : r . x = 0 for every row r} in GF(2)^columns, one vector per
// free column of the reduced echelon form.
std::vector<Row> kernel_basis(std::vector<Row> rows, std::size_t columns);

// All 2^k vectors of the span of k independent vectors, in Gray-code order.
std::vector<Row> span(const std::vector<Row>& basis, std::size_t columns);

}  // namespace phylotoric::gf2
