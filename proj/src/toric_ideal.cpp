#include "phylotoric/toric_ideal.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace phylotoric {

int BinomialRelation::degree() const {
  int d = 0;
  for (const auto& [v, k] : left) d += k;
  return d;
}

namespace {

int degree_of(const Monomial& m) {
  int d = 0;
  for (const auto& [v, k] : m) d += k;
  return d;
}

LatticeVector weighted_sum(const Monomial& m) {
  LatticeVector s(m.empty() ? 0 : m.front().first.size());
  for (const auto& [v, k] : m) s += k * v;
  return s;
}

Monomial pair_monomial(const LatticeVector& a, const LatticeVector& b) {
  if (a == b) return {{a, 2}};
  Monomial m{{a, 1}, {b, 1}};
  std::sort(m.begin(), m.end());
  return m;
}

}  // namespace

bool BinomialRelation::balanced() const {
  return degree_of(left) == degree_of(right) && weighted_sum(left) == weighted_sum(right);
}

bool BinomialRelation::primitive() const {
  for (const auto& [u, a] : left)
    for (const auto& [w, b] : right)
      if (u == w) return false;
  return true;
}

std::vector<std::string> socket_names(const Tree& t, const Monomial& m) {
  std::vector<std::string> out;
  for (const auto& [v, k] : m) {
    std::vector<bool> bits(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) bits[i] = v[i] != 0;
    const auto name = socket_of(t, Network(std::move(bits))).to_string();
    out.insert(out.end(), k, name);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BinomialRelation> quadratic_relations(const SubcubePolytope& p) {
  const auto& verts = p.vertices;
  std::map<LatticeVector, std::vector<Monomial>> classes;
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i; j < verts.size(); ++j) classes[verts[i] + verts[j]].push_back(pair_monomial(verts[i], verts[j]));

  // Sort key of a monomial: socket names for trees, exponent vectors otherwise.
  auto key = [&](const Monomial& m) {
    if (p.tree) return socket_names(*p.tree, m);
    std::vector<std::string> k;
    for (const auto& [v, c] : m) k.insert(k.end(), c, v.to_string());
    return k;
  };

  std::vector<std::pair<std::vector<std::vector<std::string>>, BinomialRelation>> keyed;
  for (auto& [sum, monomials] : classes) {
    // Two distinct pairs of 0/1 vectors with the same sum never share a vertex.
    for (std::size_t a = 0; a < monomials.size(); ++a)
      for (std::size_t b = a + 1; b < monomials.size(); ++b) {
        auto ka = key(monomials[a]), kb = key(monomials[b]);
        BinomialRelation r{monomials[a], monomials[b]};
        if (kb < ka) {
          std::swap(ka, kb);
          std::swap(r.left, r.right);
        }
        keyed.push_back({{std::move(ka), std::move(kb)}, std::move(r)});
      }
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<BinomialRelation> out;
  out.reserve(keyed.size());
  for (auto& [k, r] : keyed) out.push_back(std::move(r));
  return out;
}

std::string render(const Tree& t, const BinomialRelation& r) {
  auto side = [&](const Monomial& m) {
    std::string s;
    for (const auto& name : socket_names(t, m)) s += (s.empty() ? "" : "*") + ("x_{" + name + "}");
    return s;
  };
  auto a = side(r.left), b = side(r.right);
  if (b < a) std::swap(a, b);
  return a + " = " + b;
}

std::vector<std::string> socket_equations(const Tree& t) {
  std::vector<std::string> out;
  for (const auto& r : quadratic_relations(polytope_of(t))) out.push_back(render(t, r));
  return out;
}

bool vanishing_check(const Tree& t, const std::vector<BinomialRelation>& relations, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("vanishing_check needs at least one trial");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> draw(1, 10000);
  const std::size_t edges = t.edge_count();
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<Rational> z(edges);
    for (auto& c : z) {
      const long num = draw(rng);
      const long den = draw(rng);
      c = Rational(num, den);
    }
    auto evaluate = [&](const Monomial& m) {
      Rational value = 1;
      for (const auto& [v, k] : m) {
        if (v.size() != edges) throw std::invalid_argument("vanishing_check: exponent length does not match the tree");
        Rational chi = 1;
        for (std::size_t e = 0; e < edges; ++e)
          for (std::int64_t p = 0; p < v[e]; ++p) chi *= z[e];
        for (int i = 0; i < k; ++i) value *= chi;
      }
      return value;
    };
    for (const auto& r : relations)
      if (evaluate(r.left) != evaluate(r.right)) return false;
  }
  return true;
}

}  // namespace phylotoric
