#pragma once

#include "phylotoric/exact.hpp"

#include <string>
#include <vector>

namespace phylotoric {

// Univariate polynomial with exact rational coefficients, ascending degree.
// The coefficient list never ends in a zero (the zero polynomial is empty).
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coefficients);
  static RationalPolynomial constant(const Rational& c);
  static RationalPolynomial monomial(const Rational& c, std::size_t degree);

  // Unique polynomial of degree < xs.size() through the given points.
  static RationalPolynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

  const std::vector<Rational>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  Rational coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational operator()(const Rational& x) const;
  double evaluate(double x) const;

  RationalPolynomial antiderivative() const;  // constant term 0
  Rational integral(const Rational& a, const Rational& b) const;

  RationalPolynomial& operator+=(const RationalPolynomial& o);
  RationalPolynomial& operator-=(const RationalPolynomial& o);
  RationalPolynomial& operator*=(const RationalPolynomial& o);
  RationalPolynomial& operator*=(const Rational& k);
  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial& b) { return a *= b; }
  friend RationalPolynomial operator*(const Rational& k, RationalPolynomial a) { return a *= k; }
  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

  // Expanded form in the given variable, highest degree first: "n^2+4n+5",
  // rational coefficients written as "1/30n^2".
  std::string to_string(const std::string& var = "n") const;

  // Content, integer roots and the primitive remainder pulled apart:
  // "(1/30)(n+1)(n+2)(n+3)(n^2+4n+5)".
  std::string factored(const std::string& var = "n") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace phylotoric
