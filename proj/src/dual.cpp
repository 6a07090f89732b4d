#include "phylotoric/dual.hpp"

#include "phylotoric/double_description.hpp"
#include "phylotoric/exact.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace phylotoric {

std::vector<LatticeVector> dual_polytope(const Tree& t) {
  std::vector<LatticeVector> out;
  for (VertexId v : t.inner_nodes()) {
    LatticeVector form = node_form(t, v);
    out.push_back(-form);
    for (EdgeId e : t.edges_at(v)) {
      LatticeVector w = form;
      w[e] -= 2;
      out.push_back(std::move(w));
    }
  }
  return out;
}

LatticeVector sigma_hat(const Tree& t) { return LatticeVector(std::vector<std::int64_t>(t.edge_count(), 1)); }

LatticeVector gorenstein_form(const Tree& t, const LatticeVector& u) { return 4 * u - 2 * sigma_hat(t); }

std::vector<LatticeVector> dual_face(const Tree& t, const LatticeVector& u) {
  const LatticeVector g = gorenstein_form(t, u);
  std::vector<LatticeVector> out;
  for (auto& w : dual_polytope(t))
    if (dot(w, g) == -2) out.push_back(std::move(w));
  return out;
}

namespace {

bool is_model_vertex(const Tree& t, const LatticeVector& u) {
  if (u.size() != static_cast<std::size_t>(t.edge_count())) return false;
  for (auto c : u)
    if (c != 0 && c != 1) return false;
  for (VertexId v : t.inner_nodes())
    if (dot(node_form(t, v), u) % 2 != 0) return false;
  return true;
}

// The three points of u-perp among the dual points of inner node v.
std::vector<LatticeVector> face_points_at(const Tree& t, VertexId v, const LatticeVector& g) {
  LatticeVector form = node_form(t, v);
  std::vector<LatticeVector> candidates{-form};
  for (EdgeId e : t.edges_at(v)) {
    LatticeVector w = form;
    w[e] -= 2;
    candidates.push_back(std::move(w));
  }
  std::vector<LatticeVector> out;
  for (auto& w : candidates)
    if (dot(w, g) == -2) out.push_back(std::move(w));
  if (out.size() != 3) throw std::logic_error("u-perp does not meet an inner node in three points");
  return out;
}

}  // namespace

SimplexDivision vertex_link_division(const Tree& t, const LatticeVector& u, VertexId root) {
  if (t.inner_count() == 0) throw std::invalid_argument("vertex_link_division: the tree has no inner node");
  if (!is_model_vertex(t, u)) throw std::invalid_argument("vertex_link_division: " + u.to_string() + " is not a vertex");
  if (root < 0) root = t.other_end(t.petiole(1), t.leaf(1));
  if (root >= t.vertex_count() || t.is_leaf(root)) throw std::invalid_argument("vertex_link_division: root is not an inner node");

  const LatticeVector g = gorenstein_form(t, u);
  SimplexDivision d{u, root, {}};
  d.simplices.push_back(face_points_at(t, root, g));

  std::vector<bool> seen(t.vertex_count(), false);
  std::deque<VertexId> queue{root};
  seen[root] = true;
  while (!queue.empty()) {
    VertexId parent = queue.front();
    queue.pop_front();
    for (EdgeId e0 : t.edges_at(parent)) {
      VertexId v = t.other_end(e0, parent);
      if (t.is_leaf(v) || seen[v]) continue;
      seen[v] = true;
      queue.push_back(v);
      // R is the point whose e0-coordinate sign differs from the other two.
      auto pts = face_points_at(t, v, g);
      std::vector<LatticeVector> plus, minus;
      for (auto& p : pts) (p[e0] > 0 ? plus : minus).push_back(p);
      auto& single = plus.size() == 1 ? plus : minus;
      auto& pair = plus.size() == 1 ? minus : plus;
      if (single.size() != 1 || pair.size() != 2) throw std::logic_error("unexpected sign pattern in u-perp");
      std::vector<std::vector<LatticeVector>> next;
      for (const auto& s : d.simplices)
        for (const auto& p : pair) {
          auto grown = s;
          grown.push_back(p);
          grown.push_back(single[0]);
          next.push_back(std::move(grown));
        }
      d.simplices = std::move(next);
    }
  }
  for (auto& s : d.simplices) s.insert(s.begin(), LatticeVector(t.edge_count()));
  return d;
}

std::string DivisionReport::failure() const {
  if (!count_ok) return "wrong number of simplices";
  if (!vertices_ok) return "simplex vertex outside the cone";
  if (!unimodular) return "simplex is not unimodular";
  if (!boundary_once) return "boundary facet covered more than once";
  if (!interior_paired) return "interior facet not shared by two opposite simplices";
  if (!single_cover) return "generic point covered more than once";
  return "";
}

namespace {

// Barycentric test with the origin as apex: x = sum l_i p_i, l >= 0, sum l <= 1.
bool in_cone_simplex(const std::vector<LatticeVector>& simplex, const std::vector<Rational>& x) {
  const std::size_t dim = x.size();
  RationalMatrix a(dim, std::vector<Rational>(dim));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) a[i][j] = simplex[j + 1][i];
  auto l = solve(std::move(a), x);
  Rational sum = 0;
  for (const auto& c : l) {
    if (c < 0) return false;
    sum += c;
  }
  return sum <= 1;
}

}  // namespace

DivisionReport verify_division(const Tree& t, const SimplexDivision& division) {
  DivisionReport r;
  const std::size_t dim = t.edge_count();
  const int n = t.inner_count();
  r.simplex_count = division.simplices.size();
  r.count_ok = r.simplex_count == (std::size_t{1} << (n - 1));

  auto face = dual_face(t, division.u);
  std::vector<LatticeVector> cone_vertices = face;
  cone_vertices.push_back(LatticeVector(dim));
  std::sort(cone_vertices.begin(), cone_vertices.end());

  r.vertices_ok = true;
  r.unimodular = true;
  const std::int64_t unit = std::int64_t{1} << (dim - n);
  for (const auto& s : division.simplices) {
    if (s.size() != dim + 1) r.vertices_ok = false;
    for (const auto& p : s)
      if (!std::binary_search(cone_vertices.begin(), cone_vertices.end(), p)) r.vertices_ok = false;
    if (!r.vertices_ok) return r;
    IntMatrix m;
    for (std::size_t i = 1; i < s.size(); ++i) m.push_back(s[i].coords());
    if (std::abs(determinant(m)) != unit) r.unimodular = false;
  }
  if (!r.unimodular) return r;

  // Facet -> (simplex, omitted vertex) occurrences.
  std::map<std::vector<LatticeVector>, std::vector<std::pair<std::size_t, std::size_t>>> facets;
  for (std::size_t k = 0; k < division.simplices.size(); ++k) {
    const auto& s = division.simplices[k];
    for (std::size_t omit = 0; omit < s.size(); ++omit) {
      std::vector<LatticeVector> f;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != omit) f.push_back(s[i]);
      std::sort(f.begin(), f.end());
      facets[f].emplace_back(k, omit);
    }
  }
  r.boundary_once = true;
  r.interior_paired = true;
  for (const auto& [f, uses] : facets) {
    IntMatrix diffs;
    for (std::size_t i = 1; i < f.size(); ++i) diffs.push_back((f[i] - f[0]).coords());
    LatticeVector h(kernel_vector(diffs));
    const std::int64_t level = dot(h, f[0]);
    bool below = false, above = false;
    for (const auto& q : cone_vertices) {
      auto val = dot(h, q);
      below |= val < level;
      above |= val > level;
    }
    if (!(below && above)) {
      if (uses.size() != 1) r.boundary_once = false;
      continue;
    }
    if (uses.size() != 2) {
      r.interior_paired = false;
      continue;
    }
    auto side = [&](std::pair<std::size_t, std::size_t> use) {
      return dot(h, division.simplices[use.first][use.second]) - level;
    };
    auto a = side(uses[0]), b = side(uses[1]);
    if (!((a < 0 && b > 0) || (a > 0 && b < 0))) r.interior_paired = false;
  }

  std::vector<Rational> centroid(dim, Rational(0));
  for (const auto& p : division.simplices.front())
    for (std::size_t i = 0; i < dim; ++i) centroid[i] += Rational(p[i], static_cast<long>(dim + 1));
  std::size_t hits = 0;
  for (const auto& s : division.simplices) hits += in_cone_simplex(s, centroid);
  r.single_cover = hits == 1;
  return r;
}

GorensteinResult gorenstein_check(const Tree& t) {
  GorensteinResult result{true, {}};
  const auto dual = dual_polytope(t);
  for (const auto& u : polytope_of(t).vertices) {
    GorensteinCertificate c;
    c.u = u;
    const LatticeVector g = gorenstein_form(t, u);
    c.face_size = dual_face(t, u).size();
    c.face_size_ok = c.face_size == static_cast<std::size_t>(3 * t.inner_count());
    c.dual_values_ok = std::all_of(dual.begin(), dual.end(), [&](const LatticeVector& w) { return dot(w, g) >= -2; });
    // N-hat is generated by the e* and the half node forms v/2.
    c.integral_on_generators = true;
    for (VertexId v : t.inner_nodes())
      if (dot(node_form(t, v), g) % 2 != 0) c.integral_on_generators = false;
    c.division = verify_division(t, vertex_link_division(t, u));
    result.ok = result.ok && c.ok();
    result.certificates.push_back(std::move(c));
  }
  return result;
}

PolarityReport polarity_check(const Tree& t) {
  PolarityReport r;
  const std::size_t dim = t.edge_count();
  const auto model = polytope_of(t).vertices;
  auto dual = dual_polytope(t);
  std::sort(dual.begin(), dual.end());

  auto prepend = [](std::int64_t head, const LatticeVector& tail) {
    std::vector<std::int64_t> c{head};
    c.insert(c.end(), tail.begin(), tail.end());
    return LatticeVector(std::move(c));
  };

  // {w : t + w.(4u - 2 sigma) >= 0, t >= 0}; vertices are rays with t > 0.
  std::vector<LatticeVector> rows{prepend(1, LatticeVector(dim))};
  for (const auto& u : model) rows.push_back(prepend(1, gorenstein_form(t, u)));
  bool bounded = true;
  for (const auto& ray : extreme_rays(rows)) {
    if (ray[0] <= 0) {
      bounded = false;
      continue;
    }
    LatticeVector w(dim);
    bool integral = true;
    for (std::size_t i = 0; i < dim; ++i) {
      if ((2 * ray[i + 1]) % ray[0] != 0) integral = false;
      w[i] = 2 * ray[i + 1] / ray[0];
    }
    if (!integral) bounded = false;
    r.polar_vertices.push_back(std::move(w));
  }
  std::sort(r.polar_vertices.begin(), r.polar_vertices.end());
  r.polar_matches_dual = bounded && r.polar_vertices == dual;

  // Facets c + a.w >= 0 of conv(dual), from the rows (2, d) on (c, a).
  std::vector<LatticeVector> drows;
  for (const auto& d : dual) drows.push_back(prepend(2, d));
  r.dual_facets = extreme_rays(drows);
  std::vector<LatticeVector> expected;
  for (const auto& u : model) expected.push_back(prepend(1, gorenstein_form(t, u)));
  std::sort(expected.begin(), expected.end());
  r.facets_match_model = r.dual_facets == expected;
  return r;
}

}  // namespace phylotoric
