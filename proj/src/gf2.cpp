#include "phylotoric/gf2.hpp"

#include <stdexcept>

namespace phylotoric::gf2 {

std::vector<Row> kernel_basis(std::vector<Row> rows, std::size_t columns) {
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < columns && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && !rows[p][c]) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && rows[i][c]) rows[i] ^= rows[r];
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(columns, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<Row> basis;
  for (std::size_t f = 0; f < columns; ++f) {
    if (is_pivot[f]) continue;
    Row v(columns);
    v.set(f);
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      if (rows[i][f]) v.set(pivot_col[i]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Row> span(const std::vector<Row>& basis, std::size_t columns) {
  if (basis.size() >= 8 * sizeof(std::size_t) - 1) throw std::length_error("gf2::span: too many basis vectors");
  const std::size_t count = std::size_t{1} << basis.size();
  std::vector<Row> out;
  out.reserve(count);
  Row cur(columns);
  out.push_back(cur);
  for (std::size_t i = 1; i < count; ++i) {
    // Gray code: flip the basis vector at the lowest set bit of i.
    std::size_t bit = static_cast<std::size_t>(__builtin_ctzll(i));
    cur ^= basis[bit];
    out.push_back(cur);
  }
  return out;
}

}  // namespace phylotoric::gf2
