#pragma once

// Unrooted leaf-labelled trees.
//
// A Tree is always stored in canonical form: vertex 0 is leaf 1, the remaining
// vertices are numbered in depth-first preorder from leaf 1 with children
// visited in order of the smallest leaf label they can reach, and edge e joins
// parent(e) to vertex e + 1. Two trees compare equal exactly when they are
// isomorphic as labelled trees, and every edge-indexed vector elsewhere in the
// library (lattice coordinates, networks, dual points) uses this edge order.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace phylotoric {

using VertexId = int;
using EdgeId = int;

enum class Valency { trivalent, any };

class TreeError : public std::runtime_error {
 public:
  enum class Kind { syntax, cycle, disconnected, high_valency, duplicate_label, bad_labels, invalid_argument };

  TreeError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

// Unvalidated graph with optional leaf labels (0 = unlabelled). Parsers and
// tree surgery produce drafts; Tree::build validates and canonicalises them.
// Drafts may contain 2-valent vertices.
struct TreeDraft {
  int vertex_count = 0;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<int> labels;

  VertexId add_vertex(int label = 0) {
    labels.push_back(label);
    return vertex_count++;
  }
  void add_edge(VertexId a, VertexId b) { edges.emplace_back(a, b); }
};

class Tree {
 public:
  // Validates the draft, suppresses 2-valent vertices and canonicalises.
  // When `vertex_map` is given it receives, for every draft vertex, its id in
  // the result (-1 for suppressed vertices).
  static Tree build(const TreeDraft& draft, Valency valency = Valency::trivalent,
                    std::vector<VertexId>* vertex_map = nullptr);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  int edge_count() const { return static_cast<int>(edge_parent_.size()); }
  int leaf_count() const { return static_cast<int>(leaf_vertex_.size()); }
  int inner_count() const { return static_cast<int>(inner_.size()); }

  VertexId parent(EdgeId e) const { return edge_parent_.at(e); }
  VertexId child(EdgeId e) const { return e + 1; }
  VertexId other_end(EdgeId e, VertexId v) const { return v == child(e) ? parent(e) : child(e); }

  // Edges at a vertex, ascending; for inner vertices the first is the edge
  // towards leaf 1.
  std::span<const EdgeId> edges_at(VertexId v) const { return incident_.at(v); }
  int valency(VertexId v) const { return static_cast<int>(incident_.at(v).size()); }

  bool is_leaf(VertexId v) const { return labels_.at(v) != 0; }
  int label(VertexId v) const { return labels_.at(v); }
  VertexId leaf(int label) const;
  EdgeId petiole(int label) const;

  // Inner vertices in canonical (preorder) order.
  std::span<const VertexId> inner_nodes() const { return inner_; }
  bool is_inner_edge(EdgeId e) const { return !is_leaf(parent(e)) && !is_leaf(child(e)); }
  std::vector<EdgeId> inner_edges() const;

  int max_valency() const;
  bool is_trivalent() const { return max_valency() <= 3; }
  bool is_caterpillar() const;

  // Smallest leaf label reachable from `v` without crossing edge `via`.
  int min_label_beyond(VertexId v, EdgeId via) const;

  TreeDraft draft() const;

  friend bool operator==(const Tree&, const Tree&) = default;

 private:
  Tree() = default;

  std::vector<VertexId> edge_parent_;
  std::vector<int> labels_;
  std::vector<std::vector<EdgeId>> incident_;
  std::vector<VertexId> inner_;
  std::vector<VertexId> leaf_vertex_;  // label - 1 -> vertex
};

struct PointedTree {
  Tree tree;
  int point;  // leaf label

  PointedTree(Tree t, int leaf_label);
};

// Tree sources: a Newick subset "((1,2),(3,4));", an edge list with one
// "u v" pair per line, or a generator name star:d, caterpillar:k, snowflake.
Tree parse_tree(std::string_view text, Valency valency = Valency::trivalent);
TreeDraft parse_newick(std::string_view text);
TreeDraft parse_edge_list(std::string_view text);

Tree star(int leaves);
// k inner edges, k + 1 inner nodes, k + 3 leaves. Leaves 1,2 hang off one
// end of the spine, k+2,k+3 off the other, and the rest in order along it.
Tree caterpillar(int k);
// Centre node joined to three cherries (1,2), (3,4), (5,6).
Tree snowflake();
// Two leaves joined by a single edge; the trivial tree whose polytope is a segment.
Tree single_edge();

// Every labelled tree with `leaves` leaves (all 3-valent), obtained by
// inserting leaf L on each edge of every tree with L-1 leaves.
std::vector<Tree> all_trees(int leaves);

// Newick rooted at the inner end of leaf 1's petiole, children ordered by
// smallest reachable label, e.g. "(1,2,(3,4));". Equal strings iff the trees
// are isomorphic as labelled trees.
std::string canonical_form(const Tree& t);

// Label-blind canonical string; equal iff the trees have the same shape.
std::string shape_signature(const Tree& t);

struct GraftResult {
  Tree tree;
  // For each edge of the result: which input it came from (0 = a, 1 = b) and
  // its edge id there. The fused edge reports a's petiole.
  std::vector<std::pair<int, EdgeId>> edge_origin;
  // The edge of the result formed by the two fused petioles.
  EdgeId fused_edge;
};

// T_a ∨ T_b: the pointed leaves are removed and their petioles fused into a
// single edge. Leaves are renumbered a's remaining leaves first (in label
// order), then b's.
Tree graft(const PointedTree& a, const PointedTree& b);
GraftResult graft_detailed(const PointedTree& a, const PointedTree& b);

// (T_a, l_a) ⋆ (T_b, l_b): both trees grafted onto two leaves of a 3-star
// whose third leaf becomes the new point. Labels: a's remaining leaves, then
// the new point, then b's remaining leaves.
PointedTree pointed_graft(const PointedTree& a, const PointedTree& b);

struct MutationResult {
  Tree tree;
  EdgeId edge;  // the mutated edge, re-indexed in `tree`
};

// The two regroupings of the four subtrees around an inner edge. With the
// current grouping written (p1 p2)(q1 q2), where each pair is ordered by
// smallest leaf label and p holds the subtree with the globally smallest
// label, choice 0 gives (p1 q1)(p2 q2) and choice 1 gives (p1 q2)(p2 q1).
std::vector<MutationResult> elementary_mutations(const Tree& t, EdgeId inner_edge);
MutationResult mutate(const Tree& t, EdgeId inner_edge, int choice);

struct MutationStep {
  EdgeId edge;
  int choice;
  friend bool operator==(const MutationStep&, const MutationStep&) = default;
};

// Sequence of elementary mutations (edge ids relative to the tree at each
// step) turning `t` into a caterpillar. Replay-verified before returning.
std::vector<MutationStep> mutation_path_to_caterpillar(const Tree& t);
Tree replay(const Tree& t, std::span<const MutationStep> steps);

// All trees reachable from `t` by elementary mutations.
std::vector<Tree> mutation_orbit(const Tree& t);

}  // namespace phylotoric
