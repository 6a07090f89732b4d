#pragma once

// The polytope model Delta(T): the convex hull of the 0/1 vectors over the
// edges of T whose value under every inner-node form is even.
//
// Inequalities are stored doubled (normal . x >= offset with integer data),
// so the inner-node facet -v/2 >= -1 appears as (-1,-1,-1) . x >= -2.

#include "phylotoric/lattice.hpp"
#include "phylotoric/tree.hpp"

#include <optional>
#include <string>
#include <vector>

namespace phylotoric {

// normal . x >= offset
struct Inequality {
  LatticeVector normal;
  std::int64_t offset = 0;

  bool holds(const LatticeVector& x, std::int64_t scale = 1) const { return dot(normal, x) >= scale * offset; }
  bool tight(const LatticeVector& x, std::int64_t scale = 1) const { return dot(normal, x) == scale * offset; }
  friend bool operator==(const Inequality&, const Inequality&) = default;
};

// normal . x == offset
struct Equation {
  LatticeVector normal;
  std::int64_t offset = 0;
  friend bool operator==(const Equation&, const Equation&) = default;
};

class Network {
 public:
  explicit Network(std::vector<bool> edges) : edges_(std::move(edges)) {}
  bool contains(EdgeId e) const { return edges_.at(e); }
  std::size_t edge_count() const { return edges_.size(); }
  LatticeVector vertex() const;
  friend auto operator<=>(const Network&, const Network&) = default;

 private:
  std::vector<bool> edges_;
};

class Socket {
 public:
  // bits[i] refers to leaf label i + 1.
  explicit Socket(std::vector<bool> bits);
  // Parses a bitstring such as "1100".
  static Socket parse(const std::string& bits);
  bool contains(int label) const { return bits_.at(label - 1); }
  std::size_t leaf_count() const { return bits_.size(); }
  bool even() const;
  std::string to_string() const;
  friend auto operator<=>(const Socket&, const Socket&) = default;

 private:
  std::vector<bool> bits_;
};

struct SubcubePolytope {
  std::optional<Tree> tree;
  std::size_t ambient_dim = 0;
  std::vector<LatticeVector> vertices;  // sorted lexicographically
  std::vector<Inequality> facets;
  std::vector<Equation> equations;
  // Forms that must be even on the normalized lattice (inner-node forms).
  std::vector<LatticeVector> parity_forms;

  std::size_t dim() const;
  bool contains(const LatticeVector& x, std::int64_t scale = 1) const;
  bool in_normalized_lattice(const LatticeVector& x) const;
};

// Inner-node form v: the sum of the coordinates on the edges at v.
LatticeVector node_form(const Tree& t, VertexId v);

SubcubePolytope polytope_of(const Tree& t);
std::vector<Network> networks_of(const Tree& t);

Socket socket_of(const Tree& t, const Network& net);
Network vertex_of_socket(const Tree& t, const Socket& s);

// Fiber product over linear forms taking values in {0,1} on the vertices.
// Coordinates of `a` come first, then those of `b`; the glueing condition is
// kept as the equation la(x) - lb(y) = 0.
SubcubePolytope fiber_product(const SubcubePolytope& a, const LatticeVector& la, const SubcubePolytope& b,
                              const LatticeVector& lb);

// Coordinate form picking the petiole of the given leaf.
LatticeVector petiole_form(const Tree& t, int leaf_label);

// Projects a fiber product of two tree polytopes onto the coordinates of
// their graft (dropping b's copy of the glued petiole) so that it can be
// compared with polytope_of(graft(a, b)).
std::vector<LatticeVector> graft_coordinates(const GraftResult& g, const std::vector<LatticeVector>& fiber_vertices,
                                             std::size_t a_edges);

// Polytope of a tree given as a draft that may contain 2-valent vertices
// (all non-leaf vertices contribute a parity form).
std::vector<LatticeVector> draft_vertices(const TreeDraft& d);

struct Reduction {
  Tree tree;
  // For each edge of the reduced tree, the draft edges whose sum it maps to.
  std::vector<std::vector<int>> embedding;

  std::size_t draft_edge_count = 0;

  LatticeVector embed(const LatticeVector& reduced) const;
};

// Suppresses every 2-valent vertex of the draft, recording the embedding
// M(reduced) -> M(draft) given by e0 -> e1 + e2.
Reduction remove_2valent(const TreeDraft& d);

}  // namespace phylotoric
