#include "doctest.h"
#include "phylotoric/polytope.hpp"

#include <set>

using namespace phylotoric;

namespace {
std::set<std::string> sockets(const Tree& t) {
  std::set<std::string> out;
  for (const auto& n : networks_of(t)) out.insert(socket_of(t, n).to_string());
  return out;
}
}  // namespace

TEST_CASE("tetrahedron of the 3-star") {
  auto p = polytope_of(star(3));
  std::vector<LatticeVector> expected{{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
  CHECK(p.vertices == expected);
  CHECK(p.facets.size() == 4);
  CHECK(p.dim() == 3);
}

TEST_CASE("4-leaf sockets") {
  std::set<std::string> expected{"0000", "1100", "0011", "1111", "1010", "1001", "0110", "0101"};
  CHECK(sockets(parse_tree("((1,2),(3,4));")) == expected);
  auto t = parse_tree("((1,2),(3,4));");
  // The path 1-2 uses exactly the two petioles of leaves 1 and 2.
  auto net = vertex_of_socket(t, Socket::parse("1100"));
  CHECK(net.contains(t.petiole(1)));
  CHECK(net.contains(t.petiole(2)));
  CHECK_FALSE(net.contains(t.inner_edges().front()));
  CHECK(socket_of(t, Network(std::vector<bool>(5, false))).to_string() == "0000");
  CHECK_THROWS(vertex_of_socket(t, Socket::parse("1000")));
}

TEST_CASE("vertex counts, facets and dimension") {
  for (int l = 3; l <= 7; ++l)
    for (const auto& t : all_trees(l)) {
      auto p = polytope_of(t);
      CHECK(p.vertices.size() == (std::size_t{1} << (l - 1)));
      CHECK(p.facets.size() == static_cast<std::size_t>(4 * t.inner_count()));
      if (l <= 6) {
        CHECK(p.dim() == static_cast<std::size_t>(t.edge_count()));
        for (const auto& f : p.facets) {
          std::size_t tight = 0;
          for (const auto& v : p.vertices) {
            CHECK(f.holds(v));
            tight += f.tight(v);
          }
          CHECK(tight >= p.dim());
        }
      }
    }
  auto s = polytope_of(snowflake());
  CHECK(s.vertices.size() == 32);
  CHECK(s.facets.size() == 16);
  CHECK_THROWS_AS(polytope_of(star(4)), TreeError);
}

TEST_CASE("vertex set equals the even 0/1 vectors") {
  for (const auto& t : all_trees(6)) {
    auto p = polytope_of(t);
    std::set<LatticeVector> brute;
    for (unsigned mask = 0; mask < (1u << t.edge_count()); ++mask) {
      LatticeVector x(t.edge_count());
      for (int e = 0; e < t.edge_count(); ++e) x[e] = (mask >> e) & 1;
      if (p.in_normalized_lattice(x)) brute.insert(x);
    }
    CHECK(std::vector<LatticeVector>(brute.begin(), brute.end()) == p.vertices);
  }
}

TEST_CASE("sockets and networks are inverse bijections") {
  auto check = [](const Tree& t) {
    auto nets = networks_of(t);
    CHECK(nets.size() == (std::size_t{1} << (t.leaf_count() - 1)));
    std::set<std::string> seen;
    for (const auto& n : nets) {
      auto s = socket_of(t, n);
      CHECK(s.even());
      CHECK(vertex_of_socket(t, s) == n);
      seen.insert(s.to_string());
    }
    CHECK(seen.size() == nets.size());
  };
  for (int l = 2; l <= 7; ++l)
    for (const auto& t : all_trees(l)) check(t);
  auto eight = all_trees(8);
  for (std::size_t i = 0; i < eight.size(); i += 97) check(eight[i]);
  check(caterpillar(5));
}

TEST_CASE("fiber product of two tetrahedra") {
  auto tet = polytope_of(star(3));
  // Glue along edge 0 of each copy.
  auto p = fiber_product(tet, petiole_form(star(3), 1), tet, petiole_form(star(3), 1));
  CHECK(p.vertices.size() == 8);
  for (const auto& v : p.vertices) CHECK(v[0] == v[3]);
  std::set<LatticeVector> expected{{0, 0, 0, 0, 0, 0}, {0, 1, 1, 0, 0, 0}, {0, 0, 0, 0, 1, 1}, {0, 1, 1, 0, 1, 1},
                                   {1, 1, 0, 1, 1, 0}, {1, 1, 0, 1, 0, 1}, {1, 0, 1, 1, 1, 0}, {1, 0, 1, 1, 0, 1}};
  CHECK(std::set<LatticeVector>(p.vertices.begin(), p.vertices.end()) == expected);

  auto full = fiber_product(tet, LatticeVector(3), tet, LatticeVector(3));
  CHECK(full.vertices.size() == 16);
  CHECK(full.equations.empty());
  CHECK_THROWS(fiber_product(tet, LatticeVector{1, 1, 1}, tet, LatticeVector(3)));
}

TEST_CASE("polytope of a graft is the fiber product") {
  std::vector<Tree> pool;
  for (int l = 2; l <= 5; ++l)
    for (const auto& t : all_trees(l)) pool.push_back(t);
  int compared = 0;
  for (const auto& a : pool)
    for (const auto& b : pool) {
      if (a.leaf_count() + b.leaf_count() - 2 > 6 || a.leaf_count() + b.leaf_count() - 2 < 3) continue;
      for (int la = 1; la <= a.leaf_count(); ++la) {
        int lb = 1 + (la % b.leaf_count());
        auto g = graft_detailed(PointedTree(a, la), PointedTree(b, lb));
        auto fp = fiber_product(polytope_of(a), petiole_form(a, la), polytope_of(b), petiole_form(b, lb));
        CHECK(graft_coordinates(g, fp.vertices, a.edge_count()) == polytope_of(g.tree).vertices);
        ++compared;
      }
    }
  CHECK(compared > 100);
}

TEST_CASE("fiber product is associative on vertex multisets") {
  auto tet = polytope_of(star(3));
  LatticeVector e0{1, 0, 0}, e1{0, 1, 0};
  auto left = fiber_product(fiber_product(tet, e0, tet, e0), LatticeVector{0, 1, 0, 0, 0, 0}, tet, e1);
  auto right = fiber_product(tet, e1, fiber_product(tet, e0, tet, e0), LatticeVector{0, 1, 0, 0, 0, 0});
  CHECK(left.vertices.size() == right.vertices.size());
  auto coord_multiset = [](const SubcubePolytope& p) {
    std::multiset<std::int64_t> sums;
    for (const auto& v : p.vertices) {
      std::int64_t s = 0;
      for (auto c : v) s += c;
      sums.insert(s);
    }
    return sums;
  };
  CHECK(coord_multiset(left) == coord_multiset(right));
  CHECK(left.vertices.size() == 16);
}

TEST_CASE("removing 2-valent vertices") {
  TreeDraft path;
  VertexId a = path.add_vertex(1), mid = path.add_vertex(), b = path.add_vertex(2);
  path.add_edge(a, mid);
  path.add_edge(mid, b);
  auto r = remove_2valent(path);
  CHECK(r.tree == single_edge());
  CHECK(r.embed(LatticeVector{1}) == LatticeVector{1, 1});
  auto reduced = polytope_of(r.tree).vertices;
  CHECK(reduced == std::vector<LatticeVector>{{0}, {1}});

  // Subdivide every edge of the 5-leaf caterpillar and compare vertex sets.
  for (const auto& t : all_trees(5)) {
    TreeDraft d = t.draft();
    const auto original_edges = d.edges;
    d.edges.clear();
    for (auto [u, v] : original_edges) {
      VertexId m = d.add_vertex();
      d.add_edge(u, m);
      d.add_edge(m, v);
    }
    auto red = remove_2valent(d);
    CHECK(red.tree == t);
    std::vector<LatticeVector> embedded;
    for (const auto& v : polytope_of(red.tree).vertices) embedded.push_back(red.embed(v));
    std::sort(embedded.begin(), embedded.end());
    CHECK(embedded == draft_vertices(d));
  }
  CHECK_THROWS_AS(remove_2valent(star(3).draft()), TreeError);
}
