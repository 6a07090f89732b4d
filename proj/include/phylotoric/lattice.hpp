#pragma once

// Integer vectors indexed by the edges of a tree (or by an explicit product
// basis). Points of N-hat are stored doubled so that they stay integral.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace phylotoric {

class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t dim) : coords_(dim, 0) {}
  explicit LatticeVector(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
  LatticeVector(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

  std::size_t size() const { return coords_.size(); }
  std::int64_t& operator[](std::size_t i) { return coords_[i]; }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }
  const std::vector<std::int64_t>& coords() const { return coords_; }

  LatticeVector& operator+=(const LatticeVector& o);
  LatticeVector& operator-=(const LatticeVector& o);
  LatticeVector& operator*=(std::int64_t k);
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator*(std::int64_t k, LatticeVector a) { return a *= k; }
  friend LatticeVector operator-(LatticeVector a) { return a *= -1; }

  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;
  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;

  std::string to_string() const;  // "[a,b,c]"

 private:
  std::vector<std::int64_t> coords_;
};

std::int64_t dot(const LatticeVector& a, const LatticeVector& b);

struct LatticeVectorHash {
  std::size_t operator()(const LatticeVector& v) const noexcept;
};

}  // namespace phylotoric
