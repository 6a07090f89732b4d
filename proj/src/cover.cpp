#include "phylotoric/cover.hpp"

#include "phylotoric/lattice_points.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace phylotoric {

namespace {

Integer simplex_determinant(const std::vector<LatticeVector>& s) {
  IntMatrix m;
  for (std::size_t i = 1; i < s.size(); ++i) m.push_back((s[i] - s[0]).coords());
  if (m.empty()) return 1;
  return Integer(std::abs(determinant(std::move(m))));
}

// Barycentric coordinates of x in the simplex s (both in the same ambient space).
std::vector<Rational> barycentric_in(const std::vector<LatticeVector>& s, const std::vector<Rational>& x) {
  const std::size_t d = x.size();
  RationalMatrix a(d, std::vector<Rational>(d));
  std::vector<Rational> b(d);
  for (std::size_t i = 0; i < d; ++i) {
    b[i] = x[i] - s[0][i];
    for (std::size_t j = 0; j < d; ++j) a[i][j] = s[j + 1][i] - s[0][i];
  }
  auto l = d == 0 ? std::vector<Rational>{} : solve(std::move(a), std::move(b));
  Rational head = 1;
  for (const auto& c : l) head -= c;
  l.insert(l.begin(), head);
  return l;
}

}  // namespace

FiberProductCover::FiberProductCover(std::size_t dim, std::vector<CoverFactor> factors)
    : dim_(dim), factors_(std::move(factors)), unit_(1) {
  if (factors_.empty()) throw std::invalid_argument("cover: no factors");
  std::vector<std::vector<std::size_t>> users(dim_);
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    const auto& fac = factors_[f];
    if (fac.vertices.size() != fac.coords.size() + 1) throw std::invalid_argument("cover: factor is not a simplex");
    for (const auto& v : fac.vertices)
      if (v.size() != fac.coords.size()) throw std::invalid_argument("cover: factor vertex has the wrong length");
    for (int c : fac.coords) {
      if (c < 0 || static_cast<std::size_t>(c) >= dim_) throw std::invalid_argument("cover: coordinate out of range");
      users[c].push_back(f);
    }
    Integer det = simplex_determinant(fac.vertices);
    if (det == 0) throw std::invalid_argument("cover: degenerate factor");
    unit_ *= det;
  }
  for (std::size_t c = 0; c < dim_; ++c) {
    if (users[c].empty()) throw std::invalid_argument("cover: coordinate " + std::to_string(c) + " is not covered");
    if (users[c].size() < 2) continue;
    for (std::size_t f : users[c]) {
      const auto& fac = factors_[f];
      auto k = std::find(fac.coords.begin(), fac.coords.end(), static_cast<int>(c)) - fac.coords.begin();
      for (const auto& v : fac.vertices)
        if (v[k] != 0 && v[k] != 1) throw std::invalid_argument("cover: shared coordinate is not 0/1");
    }
  }

  // BFS on the factor/coordinate incidence graph; a forest means every new
  // factor meets the folded part in at most one coordinate.
  std::vector<bool> placed(factors_.size(), false), coord_seen(dim_, false);
  std::vector<int> coord_via(dim_, -1);
  for (std::size_t start = 0; start < factors_.size(); ++start) {
    if (placed[start]) continue;
    std::deque<std::pair<std::size_t, int>> queue{{start, -1}};
    placed[start] = true;
    while (!queue.empty()) {
      auto [f, via] = queue.front();
      queue.pop_front();
      order_.push_back(f);
      glue_.push_back(via);
      for (int c : factors_[f].coords) {
        if (c == via) continue;
        if (coord_seen[c]) throw std::invalid_argument("cover: the factors are not glued along a forest");
        coord_seen[c] = true;
        for (std::size_t g : users[c]) {
          if (g == f) continue;
          if (placed[g]) throw std::invalid_argument("cover: the factors are not glued along a forest");
          placed[g] = true;
          queue.emplace_back(g, c);
        }
      }
    }
  }
}

FiberProductCover FiberProductCover::of_tree(const Tree& t) {
  if (!t.is_trivalent()) throw TreeError(TreeError::Kind::high_valency, "cover: the tree must be 3-valent");
  std::vector<CoverFactor> factors;
  if (t.inner_count() == 0) {
    factors.push_back({{0}, {LatticeVector{0}, LatticeVector{1}}});
    return FiberProductCover(1, std::move(factors));
  }
  for (VertexId v : t.inner_nodes()) {
    CoverFactor f;
    for (EdgeId e : t.edges_at(v)) f.coords.push_back(e);
    f.vertices = {LatticeVector{0, 0, 0}, LatticeVector{0, 1, 1}, LatticeVector{1, 0, 1}, LatticeVector{1, 1, 0}};
    factors.push_back(std::move(f));
  }
  return FiberProductCover(t.edge_count(), std::move(factors));
}

std::vector<LatticeVector> FiberProductCover::vertices() const {
  std::vector<LatticeVector> out;
  std::vector<std::int64_t> point(dim_, 0);
  std::vector<bool> assigned(dim_, false);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == order_.size()) {
      out.emplace_back(point);
      return;
    }
    const auto& fac = factors_[order_[k]];
    for (const auto& v : fac.vertices) {
      bool ok = true;
      for (std::size_t i = 0; i < fac.coords.size(); ++i)
        if (assigned[fac.coords[i]] && point[fac.coords[i]] != v[i]) ok = false;
      if (!ok) continue;
      std::vector<int> fresh;
      for (std::size_t i = 0; i < fac.coords.size(); ++i)
        if (!assigned[fac.coords[i]]) {
          assigned[fac.coords[i]] = true;
          point[fac.coords[i]] = v[i];
          fresh.push_back(fac.coords[i]);
        }
      rec(k + 1);
      for (int c : fresh) assigned[c] = false;
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Rational> FiberProductCover::factor_barycentric(std::size_t f, const std::vector<Rational>& x) const {
  const auto& fac = factors_[f];
  std::vector<Rational> local;
  for (int c : fac.coords) local.push_back(x[c]);
  return barycentric_in(fac.vertices, local);
}

bool FiberProductCover::contains(const std::vector<Rational>& x) const {
  if (x.size() != dim_) return false;
  for (std::size_t f = 0; f < factors_.size(); ++f)
    for (const auto& c : factor_barycentric(f, x))
      if (c < 0) return false;
  return true;
}

std::vector<FiberProductCover::Entry> FiberProductCover::fold(const std::vector<Rational>& x) const {
  auto entries_of = [&](std::size_t f) {
    const auto& fac = factors_[f];
    auto bary = factor_barycentric(f, x);
    std::vector<Entry> out;
    for (std::size_t j = 0; j < fac.vertices.size(); ++j) {
      Entry e{bary[j], std::vector<std::int64_t>(dim_, 0), std::vector<bool>(dim_, false)};
      for (std::size_t i = 0; i < fac.coords.size(); ++i) {
        e.point[fac.coords[i]] = fac.vertices[j][i];
        e.assigned[fac.coords[i]] = true;
      }
      out.push_back(std::move(e));
    }
    return out;
  };
  auto merge = [](const Entry& a, const Entry& b, Rational mass) {
    Entry e{std::move(mass), a.point, a.assigned};
    for (std::size_t i = 0; i < e.point.size(); ++i)
      if (b.assigned[i]) {
        e.point[i] = b.point[i];
        e.assigned[i] = true;
      }
    return e;
  };
  // Staircase over two mass lists of equal total; empty on a tie inside.
  auto staircase = [&](const std::vector<Entry>& a, const std::vector<Entry>& b, std::vector<Entry>& out) {
    if (a.empty() || b.empty()) return a.empty() && b.empty();
    std::size_t i = 0, j = 0;
    Rational ra = a[0].mass, rb = b[0].mass;
    while (true) {
      if (ra == rb) {
        out.push_back(merge(a[i], b[j], ra));
        return i + 1 == a.size() && j + 1 == b.size();
      }
      if (ra < rb) {
        out.push_back(merge(a[i], b[j], ra));
        rb -= ra;
        if (++i == a.size()) return false;
        ra = a[i].mass;
      } else {
        out.push_back(merge(a[i], b[j], rb));
        ra -= rb;
        if (++j == b.size()) return false;
        rb = b[j].mass;
      }
    }
  };

  std::vector<Entry> acc = entries_of(order_[0]);
  for (std::size_t k = 1; k < order_.size(); ++k) {
    auto next = entries_of(order_[k]);
    for (const auto& e : next)
      if (e.mass <= 0) return {};
    for (const auto& e : acc)
      if (e.mass <= 0) return {};
    std::vector<Entry> out;
    const int c = glue_[k];
    if (c < 0) {
      if (!staircase(acc, next, out)) return {};
    } else {
      for (std::int64_t val : {0, 1}) {
        std::vector<Entry> a, b;
        for (const auto& e : acc)
          if (e.point[c] == val) a.push_back(e);
        for (const auto& e : next)
          if (e.point[c] == val) b.push_back(e);
        if (!staircase(a, b, out)) return {};
      }
    }
    acc = std::move(out);
  }
  for (const auto& e : acc)
    if (e.mass <= 0) return {};
  return acc;
}

LocatedPoint FiberProductCover::locate(const std::vector<Rational>& x) const {
  if (!contains(x)) throw std::domain_error("cover: the point lies outside the polytope");

  auto finish = [&](const std::vector<Entry>& entries, bool perturbed, int k) -> std::optional<LocatedPoint> {
    if (entries.size() != dim_ + 1) return std::nullopt;
    LocatedPoint r;
    for (const auto& e : entries) {
      r.simplex.emplace_back(e.point);
      r.coefficients.push_back(e.mass);
    }
    r.determinant = simplex_determinant(r.simplex);
    if (r.determinant == 0) return std::nullopt;
    r.barycentric = barycentric_in(r.simplex, x);
    if (std::any_of(r.barycentric.begin(), r.barycentric.end(), [](const Rational& c) { return c < 0; }))
      return std::nullopt;
    r.perturbed = perturbed;
    r.epsilon_exponent = k;
    return r;
  };

  if (auto r = finish(fold(x), false, 0)) return *r;

  // Move towards a generic interior point; weights 3^-i keep it off every
  // rational hyperplane spanned by few vertices.
  const auto verts = vertices();
  std::vector<Rational> centre(dim_, Rational(0));
  Rational weight = 1, total = 0;
  for (const auto& v : verts) {
    for (std::size_t i = 0; i < dim_; ++i) centre[i] += weight * v[i];
    total += weight;
    weight /= 3;
  }
  for (auto& c : centre) c /= total;

  for (int k = 8; k <= 256; k += 8) {
    Rational eps(1, 1);
    eps /= Rational(Integer(1) << k);
    std::vector<Rational> y(dim_);
    for (std::size_t i = 0; i < dim_; ++i) y[i] = (1 - eps) * x[i] + eps * centre[i];
    if (auto r = finish(fold(y), true, k)) return *r;
  }
  throw std::logic_error("cover: perturbation did not resolve the staircase");
}

std::vector<LocatedPoint> FiberProductCover::sample(std::size_t count, std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> weight(0, 20);
  const auto verts = vertices();
  std::vector<LocatedPoint> out;
  for (std::size_t s = 0; s < count; ++s) {
    std::vector<Rational> x(dim_, Rational(0));
    long total = 0;
    for (const auto& v : verts) {
      int w = weight(rng);
      total += w;
      for (std::size_t i = 0; i < dim_; ++i) x[i] += w * v[i];
    }
    if (total == 0) {
      total = 1;
      for (std::size_t i = 0; i < dim_; ++i) x[i] = verts[0][i];
    }
    for (auto& c : x) c /= total;
    out.push_back(locate(x));
  }
  return out;
}

std::vector<LatticeVector> normality_counterexamples(const SubcubePolytope& p, int n) {
  if (n < 1) throw std::invalid_argument("normality check needs n >= 1");
  std::unordered_set<LatticeVector, LatticeVectorHash> sums(p.vertices.begin(), p.vertices.end());
  for (int k = 2; k <= n; ++k) {
    std::unordered_set<LatticeVector, LatticeVectorHash> next;
    for (const auto& s : sums)
      for (const auto& v : p.vertices) next.insert(s + v);
    sums = std::move(next);
  }
  std::vector<LatticeVector> out;
  for (auto& x : lattice_points(p, n, LatticeKind::normalized))
    if (!sums.contains(x)) out.push_back(std::move(x));
  return out;
}

}  // namespace phylotoric
