#include "phylotoric/ehrhart.hpp"

#include "phylotoric/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace phylotoric {

SymmetricSequence::SymmetricSequence(std::vector<Integer> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("symmetric sequence needs at least one value");
  const std::size_t n = values_.size() - 1;
  for (std::size_t k = 0; k <= n; ++k) {
    if (values_[k] < 0) throw std::invalid_argument("symmetric sequence has a negative value");
    if (values_[k] != values_[n - k]) throw std::invalid_argument("sequence is not symmetric");
  }
}

SymmetricSequence SymmetricSequence::ones(int n) {
  if (n < 0) throw std::invalid_argument("negative sequence degree");
  return SymmetricSequence(std::vector<Integer>(n + 1, Integer(1)));
}

Integer SymmetricSequence::sum() const {
  Integer s = 0;
  for (const auto& v : values_) s += v;
  return s;
}

SymmetricSequence star(const SymmetricSequence& f, const SymmetricSequence& g) {
  if (f.n() != g.n()) throw std::invalid_argument("star: sequences of different length");
  const int n = f.n();
  // step2[m] = g(m) + g(m-2) + ...; the sum g(a) + g(a-2) + ... + g(b) is
  // step2[a] - step2[b-2].
  std::vector<Integer> step2(n + 1);
  for (int m = 0; m <= n; ++m) step2[m] = g[m] + (m >= 2 ? step2[m - 2] : Integer(0));
  auto run = [&](int a, int b) { return step2[a] - (b >= 2 ? step2[b - 2] : Integer(0)); };

  std::vector<Integer> out(n + 1);
  for (int k = 0; 2 * k <= n; ++k) {
    Integer twice = 0, middle = 0;
    for (int i = 0; i < k; ++i) twice += f[i] * run(k + i, k - i);
    for (int i = k; i <= n - k; ++i) middle += f[i] * run(k + i, i - k);
    out[k] = 2 * twice + middle;
    out[n - k] = out[k];
  }
  return SymmetricSequence(std::move(out));
}

SymmetricSequence star_by_lattice_sum(const SymmetricSequence& f, const SymmetricSequence& g) {
  if (f.n() != g.n()) throw std::invalid_argument("star: sequences of different length");
  const int n = f.n();
  std::vector<Integer> out(n + 1, Integer(0));
  // Canonical order of the 3-star: edge 0 is the petiole of leaf 1.
  for (const auto& u : lattice_points(polytope_of(phylotoric::star(3)), n, LatticeKind::normalized))
    out[u[0]] += f[u[1]] * g[u[2]];
  return SymmetricSequence(std::move(out));
}

SymmetricSequence star_power(int n, int r) {
  if (r < 1) throw std::invalid_argument("star_power: r must be at least 1");
  auto one = SymmetricSequence::ones(n);
  auto acc = one;
  for (int i = 1; i < r; ++i) acc = star(one, acc);
  return acc;
}

namespace {
void require_trivalent(const Tree& t) {
  if (!t.is_trivalent()) throw TreeError(TreeError::Kind::high_valency, "relative Ehrhart functions need a 3-valent tree");
}
}  // namespace

namespace {

// Sequence of the subtree reached through edge e from vertex `from`: a leaf
// contributes 1^n, an inner node the star product of its two far subtrees.
SymmetricSequence subtree_sequence(const Tree& t, EdgeId e, VertexId from, int n) {
  const VertexId v = t.other_end(e, from);
  if (t.is_leaf(v)) return SymmetricSequence::ones(n);
  std::vector<SymmetricSequence> parts;
  for (EdgeId a : t.edges_at(v))
    if (a != e) parts.push_back(subtree_sequence(t, a, v, n));
  return star(parts[0], parts[1]);
}

}  // namespace

SymmetricSequence relative_ehrhart(const PointedTree& t, int n) {
  require_trivalent(t.tree);
  if (n < 0) throw std::invalid_argument("relative_ehrhart: negative n");
  const VertexId leaf = t.tree.leaf(t.point);
  return subtree_sequence(t.tree, t.tree.petiole(t.point), leaf, n);
}

std::vector<SymmetricSequence> relative_ehrhart_slow_all(const Tree& t, int n) {
  require_trivalent(t);
  const int leaves = t.leaf_count();
  std::vector<std::vector<Integer>> buckets(leaves, std::vector<Integer>(n + 1, Integer(0)));
  std::vector<EdgeId> petioles;
  for (int l = 1; l <= leaves; ++l) petioles.push_back(t.petiole(l));
  for (const auto& u : lattice_points(polytope_of(t), n, LatticeKind::normalized))
    for (int l = 0; l < leaves; ++l) buckets[l][u[petioles[l]]] += 1;
  std::vector<SymmetricSequence> out;
  for (auto& b : buckets) out.emplace_back(std::move(b));
  return out;
}

SymmetricSequence relative_ehrhart_slow(const PointedTree& t, int n) {
  return relative_ehrhart_slow_all(t.tree, n).at(t.point - 1);
}

Integer hilbert_function(const Tree& t, int n) {
  return relative_ehrhart(PointedTree(t, 1), n).sum();
}

RationalPolynomial hilbert_ehrhart_polynomial(const Tree& t) {
  require_trivalent(t);
  std::vector<Rational> xs, ys;
  for (int n = 0; n <= t.edge_count(); ++n) {
    xs.emplace_back(n);
    ys.emplace_back(hilbert_function(t, n));
  }
  return RationalPolynomial::interpolate(xs, ys);
}

Rational normalized_volume(const Tree& t) {
  auto h = hilbert_ehrhart_polynomial(t);
  Integer factorial = 1;
  for (int k = 2; k <= t.edge_count(); ++k) factorial *= k;
  return Rational(factorial) * h.coefficient(t.edge_count());
}

Rational VolumeDistribution::operator()(const Rational& t) const {
  if (t < 0 || t > 1) throw std::domain_error("volume distribution evaluated outside [0,1]");
  return piece(t <= Rational(1, 2) ? t : 1 - t);
}

double VolumeDistribution::evaluate(double t) const {
  if (t < 0 || t > 1) throw std::domain_error("volume distribution evaluated outside [0,1]");
  return piece.evaluate(t <= 0.5 ? t : 1 - t);
}

Rational VolumeDistribution::total_integral() const { return 2 * piece.integral(0, Rational(1, 2)); }

VolumeDistribution volume_distribution(int r) {
  if (r < 1) throw std::invalid_argument("volume_distribution: r must be at least 1");
  VolumeDistribution d{1, RationalPolynomial::constant(1)};
  const Rational half(1, 2);
  const auto t = RationalPolynomial::monomial(1, 1);
  for (int k = 1; k < r; ++k) {
    // Q(t) = 2 int_0^t s P(s) ds + t int_t^{1-t} P, and by symmetry
    // int_t^{1-t} P = 2 (I(1/2) - I(t)) with I' = P, I(0) = 0.
    const auto sp = (t * d.piece).antiderivative();
    const auto ip = d.piece.antiderivative();
    auto q = Rational(2) * sp + Rational(2) * t * (RationalPolynomial::constant(ip(half)) - ip);
    const Rational norm = 2 * q.integral(0, half);
    d.piece = (1 / norm) * q;
    d.r = k + 1;
  }
  return d;
}

double discrete_deviation(const VolumeDistribution& d, int n) {
  if (n < 1) throw std::invalid_argument("discrete_deviation: n must be positive");
  auto f = star_power(n, d.r);
  const Rational total(f.sum());
  double worst = 0;
  for (int k = 0; k <= n; ++k) {
    const Rational discrete = Rational(f[k]) * (n + 1) / total;
    const Rational diff = d(Rational(k, n)) - discrete;
    worst = std::max(worst, std::abs(diff.convert_to<double>()));
  }
  return worst;
}

}  // namespace phylotoric
