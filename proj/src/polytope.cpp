#include "phylotoric/polytope.hpp"

#include "phylotoric/exact.hpp"
#include "phylotoric/gf2.hpp"

#include <algorithm>
#include <stdexcept>

namespace phylotoric {

LatticeVector Network::vertex() const {
  LatticeVector v(edges_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) v[e] = edges_[e] ? 1 : 0;
  return v;
}

Socket::Socket(std::vector<bool> bits) : bits_(std::move(bits)) {}

Socket Socket::parse(const std::string& bits) {
  std::vector<bool> b;
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("socket bitstring must consist of 0 and 1: " + bits);
    b.push_back(c == '1');
  }
  return Socket(std::move(b));
}

bool Socket::even() const { return std::count(bits_.begin(), bits_.end(), true) % 2 == 0; }

std::string Socket::to_string() const {
  std::string s;
  for (bool b : bits_) s += b ? '1' : '0';
  return s;
}

std::size_t SubcubePolytope::dim() const {
  std::vector<std::vector<std::int64_t>> pts;
  pts.reserve(vertices.size());
  for (const auto& v : vertices) pts.push_back(v.coords());
  return affine_rank(pts);
}

bool SubcubePolytope::contains(const LatticeVector& x, std::int64_t scale) const {
  for (const auto& f : facets)
    if (!f.holds(x, scale)) return false;
  for (const auto& q : equations)
    if (dot(q.normal, x) != scale * q.offset) return false;
  return true;
}

bool SubcubePolytope::in_normalized_lattice(const LatticeVector& x) const {
  for (const auto& f : parity_forms)
    if (dot(f, x) % 2 != 0) return false;
  return true;
}

LatticeVector node_form(const Tree& t, VertexId v) {
  LatticeVector f(t.edge_count());
  for (EdgeId e : t.edges_at(v)) f[e] = 1;
  return f;
}

std::vector<Network> networks_of(const Tree& t) {
  const std::size_t edges = t.edge_count();
  std::vector<gf2::Row> rows;
  for (VertexId v : t.inner_nodes()) {
    gf2::Row r(edges);
    for (EdgeId e : t.edges_at(v)) r.set(e);
    rows.push_back(std::move(r));
  }
  std::vector<Network> out;
  for (const auto& x : gf2::span(gf2::kernel_basis(std::move(rows), edges), edges)) {
    std::vector<bool> bits(edges);
    for (std::size_t e = 0; e < edges; ++e) bits[e] = x[e];
    out.emplace_back(std::move(bits));
  }
  std::sort(out.begin(), out.end(), [](const Network& a, const Network& b) { return a.vertex() < b.vertex(); });
  return out;
}

SubcubePolytope polytope_of(const Tree& t) {
  if (!t.is_trivalent()) throw TreeError(TreeError::Kind::high_valency, "the polytope model needs a 3-valent tree");
  SubcubePolytope p;
  p.tree = t;
  p.ambient_dim = t.edge_count();
  for (const auto& n : networks_of(t)) p.vertices.push_back(n.vertex());
  std::sort(p.vertices.begin(), p.vertices.end());

  if (t.inner_count() == 0) {
    // Single edge: the segment [0, e].
    p.facets.push_back({LatticeVector{2}, 0});
    p.facets.push_back({LatticeVector{-2}, -2});
    return p;
  }
  for (VertexId v : t.inner_nodes()) {
    LatticeVector form = node_form(t, v);
    p.parity_forms.push_back(form);
    p.facets.push_back({-form, -2});
    for (EdgeId e : t.edges_at(v)) {
      LatticeVector n = form;
      n[e] -= 2;
      p.facets.push_back({n, 0});
    }
  }
  return p;
}

Socket socket_of(const Tree& t, const Network& net) {
  if (net.edge_count() != static_cast<std::size_t>(t.edge_count()))
    throw std::invalid_argument("network does not belong to this tree");
  std::vector<bool> bits(t.leaf_count());
  for (int l = 1; l <= t.leaf_count(); ++l) bits[l - 1] = net.contains(t.petiole(l));
  return Socket(std::move(bits));
}

Network vertex_of_socket(const Tree& t, const Socket& s) {
  if (s.leaf_count() != static_cast<std::size_t>(t.leaf_count()))
    throw std::invalid_argument("socket length does not match the leaf count");
  if (!s.even()) throw std::invalid_argument("socket " + s.to_string() + " has odd parity");
  // Preorder numbering: the subtree below edge e is the vertex range
  // [e + 1, e + 1 + size); accumulate socket parity bottom-up.
  std::vector<int> below(t.vertex_count(), 0);
  for (VertexId v = t.vertex_count() - 1; v >= 1; --v) {
    if (t.is_leaf(v) && s.contains(t.label(v))) below[v] ^= 1;
    below[t.parent(v - 1)] ^= below[v];
  }
  std::vector<bool> edges(t.edge_count());
  for (EdgeId e = 0; e < t.edge_count(); ++e) edges[e] = below[t.child(e)] != 0;
  return Network(std::move(edges));
}

LatticeVector petiole_form(const Tree& t, int leaf_label) {
  LatticeVector f(t.edge_count());
  f[t.petiole(leaf_label)] = 1;
  return f;
}

SubcubePolytope fiber_product(const SubcubePolytope& a, const LatticeVector& la, const SubcubePolytope& b,
                              const LatticeVector& lb) {
  if (la.size() != a.ambient_dim || lb.size() != b.ambient_dim)
    throw std::invalid_argument("fiber_product: form dimension mismatch");
  auto check = [](const SubcubePolytope& p, const LatticeVector& l) {
    for (const auto& v : p.vertices) {
      auto x = dot(l, v);
      if (x != 0 && x != 1) throw std::invalid_argument("fiber_product: form takes a value outside [0,1] on a vertex");
    }
  };
  check(a, la);
  check(b, lb);

  const std::size_t da = a.ambient_dim, db = b.ambient_dim;
  auto lift = [&](const LatticeVector& x, bool second) {
    LatticeVector y(da + db);
    for (std::size_t i = 0; i < x.size(); ++i) y[(second ? da : 0) + i] = x[i];
    return y;
  };
  auto concat = [&](const LatticeVector& x, const LatticeVector& z) {
    LatticeVector y(da + db);
    for (std::size_t i = 0; i < da; ++i) y[i] = x[i];
    for (std::size_t i = 0; i < db; ++i) y[da + i] = z[i];
    return y;
  };

  SubcubePolytope p;
  p.ambient_dim = da + db;
  for (const auto& u : a.vertices)
    for (const auto& w : b.vertices)
      if (dot(la, u) == dot(lb, w)) p.vertices.push_back(concat(u, w));
  std::sort(p.vertices.begin(), p.vertices.end());
  for (const auto& f : a.facets) p.facets.push_back({lift(f.normal, false), f.offset});
  for (const auto& f : b.facets) p.facets.push_back({lift(f.normal, true), f.offset});
  for (const auto& q : a.equations) p.equations.push_back({lift(q.normal, false), q.offset});
  for (const auto& q : b.equations) p.equations.push_back({lift(q.normal, true), q.offset});
  if (std::any_of(la.begin(), la.end(), [](auto c) { return c != 0; }) ||
      std::any_of(lb.begin(), lb.end(), [](auto c) { return c != 0; }))
    p.equations.push_back({lift(la, false) - lift(lb, true), 0});
  for (const auto& f : a.parity_forms) p.parity_forms.push_back(lift(f, false));
  for (const auto& f : b.parity_forms) p.parity_forms.push_back(lift(f, true));
  return p;
}

std::vector<LatticeVector> graft_coordinates(const GraftResult& g, const std::vector<LatticeVector>& fiber_vertices,
                                             std::size_t a_edges) {
  std::vector<LatticeVector> out;
  out.reserve(fiber_vertices.size());
  for (const auto& x : fiber_vertices) {
    LatticeVector y(g.edge_origin.size());
    for (std::size_t e = 0; e < g.edge_origin.size(); ++e) {
      auto [side, id] = g.edge_origin[e];
      y[e] = x[(side == 0 ? 0 : a_edges) + id];
    }
    out.push_back(std::move(y));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LatticeVector> draft_vertices(const TreeDraft& d) {
  const std::size_t edges = d.edges.size();
  std::vector<gf2::Row> rows(d.vertex_count, gf2::Row(edges));
  std::vector<int> degree(d.vertex_count, 0);
  for (std::size_t i = 0; i < edges; ++i) {
    auto [a, b] = d.edges[i];
    rows[a].set(i);
    rows[b].set(i);
    ++degree[a];
    ++degree[b];
  }
  std::vector<gf2::Row> inner;
  for (VertexId v = 0; v < d.vertex_count; ++v)
    if (degree[v] > 1) inner.push_back(rows[v]);
  std::vector<LatticeVector> out;
  for (const auto& x : gf2::span(gf2::kernel_basis(std::move(inner), edges), edges)) {
    LatticeVector v(edges);
    for (std::size_t e = 0; e < edges; ++e) v[e] = x[e];
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

LatticeVector Reduction::embed(const LatticeVector& reduced) const {
  LatticeVector x(draft_edge_count);
  for (std::size_t e = 0; e < embedding.size(); ++e)
    for (int d : embedding[e]) x[d] = reduced[e];
  return x;
}

Reduction remove_2valent(const TreeDraft& d) {
  std::vector<std::vector<std::pair<VertexId, int>>> adj(d.vertex_count);
  for (std::size_t i = 0; i < d.edges.size(); ++i) {
    auto [a, b] = d.edges[i];
    adj.at(a).emplace_back(b, static_cast<int>(i));
    adj.at(b).emplace_back(a, static_cast<int>(i));
  }
  if (std::none_of(adj.begin(), adj.end(), [](const auto& n) { return n.size() == 2; }))
    throw TreeError(TreeError::Kind::invalid_argument, "remove_2valent: the tree has no 2-valent vertex");

  std::vector<VertexId> map;
  Reduction r{Tree::build(d, Valency::any, &map), {}, d.edges.size()};
  r.embedding.assign(r.tree.edge_count(), {});
  for (std::size_t i = 0; i < d.edges.size(); ++i) {
    // Walk away from the edge through suppressed vertices to a surviving one.
    auto surviving = [&](VertexId from, VertexId to) {
      while (map[to] < 0) {
        VertexId next = adj[to][0].first == from ? adj[to][1].first : adj[to][0].first;
        from = to;
        to = next;
      }
      return map[to];
    };
    auto [a, b] = d.edges[i];
    EdgeId e = std::max(surviving(a, b), surviving(b, a)) - 1;
    r.embedding[e].push_back(static_cast<int>(i));
  }
  return r;
}

}  // namespace phylotoric
