#include "phylotoric/exact.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

namespace phylotoric {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in multiplication");
  return r;
}

std::int64_t gcd_of(std::span<const std::int64_t> values) {
  std::int64_t g = 0;
  for (auto v : values) g = std::gcd(g, v);
  return g;
}

void make_primitive(std::vector<std::int64_t>& v) {
  auto g = gcd_of(v);
  if (g > 1)
    for (auto& x : v) x /= g;
}

namespace {

// Bareiss elimination in place; returns the rank and the sign-corrected last
// pivot (the determinant when the matrix is square and nonsingular).
std::pair<std::size_t, std::int64_t> bareiss(IntMatrix& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  std::int64_t prev = 1;
  int sign = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(m[p], m[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        __int128 v = static_cast<__int128>(m[i][j]) * m[r][c] - static_cast<__int128>(m[i][c]) * m[r][j];
        v /= prev;
        if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("int64 overflow in Bareiss elimination");
        m[i][j] = static_cast<std::int64_t>(v);
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return {r, sign * prev};
}

}  // namespace

std::int64_t determinant(IntMatrix m) {
  const auto n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant: matrix is not square");
  if (n == 0) return 1;
  auto [r, last] = bareiss(m);
  return r < n ? 0 : last;
}

std::size_t rank(IntMatrix m) { return bareiss(m).first; }

std::size_t affine_rank(const std::vector<std::vector<std::int64_t>>& points) {
  if (points.size() <= 1) return 0;
  IntMatrix diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) {
    std::vector<std::int64_t> d(points[i].size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = checked_add(points[i][j], -points[0][j]);
    diffs.push_back(std::move(d));
  }
  return rank(std::move(diffs));
}

std::vector<std::int64_t> kernel_vector(const IntMatrix& rows) {
  if (rows.empty()) throw std::invalid_argument("kernel_vector: no rows");
  const std::size_t n = rows[0].size();
  if (rows.size() + 1 != n) throw std::invalid_argument("kernel_vector: need n-1 rows in dimension n");
  // Cramer/cofactor expansion: x_j = (-1)^j det(rows without column j).
  std::vector<std::int64_t> x(n);
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix minor(rows.size(), std::vector<std::int64_t>(n - 1));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t k = 0, c = 0; k < n; ++k)
        if (k != j) minor[i][c++] = rows[i][k];
    auto d = determinant(std::move(minor));
    x[j] = (j % 2 == 0) ? d : -d;
  }
  if (std::all_of(x.begin(), x.end(), [](auto v) { return v == 0; }))
    throw std::invalid_argument("kernel_vector: rows are not independent");
  make_primitive(x);
  return x;
}

std::vector<Rational> solve(RationalMatrix a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw std::invalid_argument("solve: singular matrix");
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
      b[i] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

Integer lattice_index(const std::vector<std::vector<std::int64_t>>& generators, std::size_t dim) {
  // Row-style Hermite reduction over big integers: the product of the
  // diagonal of the echelon form is the index of the spanned sublattice.
  std::vector<std::vector<Integer>> rows;
  rows.reserve(generators.size());
  for (const auto& g : generators) rows.emplace_back(g.begin(), g.end());
  Integer index = 1;
  std::size_t top = 0;
  for (std::size_t c = 0; c < dim; ++c) {
    // Euclid on column c among rows top..end until a single nonzero remains.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = top; i < rows.size(); ++i)
        if (rows[i][c] != 0 && (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c]))) best = i;
      if (best == rows.size()) return 0;
      std::swap(rows[top], rows[best]);
      bool done = true;
      for (std::size_t i = top + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        Integer q = rows[i][c] / rows[top][c];
        for (std::size_t j = c; j < dim; ++j) rows[i][j] -= q * rows[top][j];
        if (rows[i][c] != 0) done = false;
      }
      if (done) break;
    }
    index *= abs(rows[top][c]);
    ++top;
  }
  return index;
}

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

}  // namespace phylotoric
