#include "phylotoric/lattice.hpp"

#include "phylotoric/exact.hpp"

#include <stdexcept>

namespace phylotoric {

namespace {
void require_same_size(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("lattice vectors of different dimension");
}
}  // namespace

LatticeVector& LatticeVector::operator+=(const LatticeVector& o) {
  require_same_size(*this, o);
  for (std::size_t i = 0; i < size(); ++i) coords_[i] = checked_add(coords_[i], o[i]);
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& o) {
  require_same_size(*this, o);
  for (std::size_t i = 0; i < size(); ++i) coords_[i] = checked_add(coords_[i], -o[i]);
  return *this;
}

LatticeVector& LatticeVector::operator*=(std::int64_t k) {
  for (auto& c : coords_) c = checked_mul(c, k);
  return *this;
}

std::string LatticeVector::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) s += ',';
    s += std::to_string(coords_[i]);
  }
  return s + "]";
}

std::int64_t dot(const LatticeVector& a, const LatticeVector& b) {
  require_same_size(a, b);
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

std::size_t LatticeVectorHash::operator()(const LatticeVector& v) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto c : v) h = (h ^ static_cast<std::size_t>(c)) * 1099511628211ull;
  return h;
}

}  // namespace phylotoric
