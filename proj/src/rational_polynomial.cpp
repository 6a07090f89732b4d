#include "phylotoric/rational_polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace phylotoric {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }

RationalPolynomial RationalPolynomial::constant(const Rational& c) { return RationalPolynomial({c}); }

RationalPolynomial RationalPolynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return RationalPolynomial(std::move(v));
}

void RationalPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RationalPolynomial RationalPolynomial::interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size() || xs.empty()) throw std::invalid_argument("interpolate: need matching nonempty node lists");
  RationalPolynomial result;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    RationalPolynomial basis = constant(1);
    Rational denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      if (xs[i] == xs[j]) throw std::invalid_argument("interpolate: repeated node");
      basis *= RationalPolynomial({-xs[j], Rational(1)});
      denom *= xs[i] - xs[j];
    }
    result += (ys[i] / denom) * basis;
  }
  return result;
}

Rational RationalPolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double RationalPolynomial::evaluate(double x) const {
  double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->convert_to<double>();
  return acc;
}

RationalPolynomial RationalPolynomial::antiderivative() const {
  std::vector<Rational> v(c_.size() + 1, Rational(0));
  for (std::size_t k = 0; k < c_.size(); ++k) v[k + 1] = c_[k] / static_cast<long>(k + 1);
  return RationalPolynomial(std::move(v));
}

Rational RationalPolynomial::integral(const Rational& a, const Rational& b) const {
  auto p = antiderivative();
  return p(b) - p(a);
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const RationalPolynomial& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  c_ = std::move(v);
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& k) {
  for (auto& c : c_) c *= k;
  trim();
  return *this;
}

namespace {

std::string term(const std::string& var, std::size_t k) {
  if (k == 0) return "";
  return k == 1 ? var : var + "^" + std::to_string(k);
}

}  // namespace

std::string RationalPolynomial::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rational& c = c_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (!s.empty() || c < 0) s += c < 0 ? "-" : "+";
    if (mag != 1 || k == 0) s += phylotoric::to_string(mag);
    s += term(var, k);
  }
  return s;
}

std::string RationalPolynomial::factored(const std::string& var) const {
  if (c_.empty()) return "0";
  if (c_.size() == 1) return phylotoric::to_string(c_[0]);

  // Integer roots r (as factors (var - r)) by exact synthetic division.
  std::vector<Rational> rest = c_;
  std::vector<long> roots;
  auto divide_by_root = [&](long r) {
    // rest(x) = (x - r) q(x) + rem
    std::vector<Rational> q(rest.size() - 1, Rational(0));
    Rational carry = 0;
    for (std::size_t k = rest.size(); k-- > 1;) {
      carry = carry * r + rest[k];
      q[k - 1] = carry;
    }
    if (carry * r + rest[0] != 0) return false;
    rest = std::move(q);
    return true;
  };
  const long bound = 4 * static_cast<long>(c_.size()) + 16;
  for (long m = 0; m <= bound && rest.size() > 1; ++m)
    for (long r : {-m, m}) {
      if (m == 0 && r != 0) continue;
      while (rest.size() > 1 && divide_by_root(r)) roots.push_back(r);
      if (m == 0) break;
    }

  // rest = content * primitive integer polynomial with positive leading coefficient.
  Integer lcm_den = 1, gcd_num = 0;
  for (const auto& c : rest) {
    if (c == 0) continue;
    lcm_den = boost::multiprecision::lcm(lcm_den, Integer(denominator(c)));
    gcd_num = boost::multiprecision::gcd(gcd_num, Integer(numerator(c)));
  }
  Rational content(gcd_num, lcm_den);
  if (rest.back() < 0) content = -content;
  std::vector<Rational> primitive;
  for (const auto& c : rest) primitive.push_back(c / content);

  std::sort(roots.begin(), roots.end(), [](long a, long b) { return std::pair(std::labs(a), -a) < std::pair(std::labs(b), -b); });
  std::string s;
  if (content != 1) s += "(" + phylotoric::to_string(content) + ")";
  for (long r : roots) {
    if (r == 0)
      s += "(" + var + ")";
    else
      s += "(" + var + (r < 0 ? "+" : "-") + std::to_string(std::labs(r)) + ")";
  }
  RationalPolynomial p(std::move(primitive));
  if (p.degree() > 0 || s.empty()) s += "(" + p.to_string(var) + ")";
  return s;
}

}  // namespace phylotoric
