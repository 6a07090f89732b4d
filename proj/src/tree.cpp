#include "phylotoric/tree.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>

namespace phylotoric {

namespace {

using Kind = TreeError::Kind;

[[noreturn]] void fail(Kind kind, const std::string& what) { throw TreeError(kind, what); }

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

Tree Tree::build(const TreeDraft& draft, Valency valency, std::vector<VertexId>* vertex_map) {
  const int n = draft.vertex_count;
  if (n < 2) fail(Kind::bad_labels, "a tree needs at least two leaves");
  if (static_cast<int>(draft.labels.size()) != n) fail(Kind::invalid_argument, "label table size mismatch");

  DisjointSets sets(n);
  std::vector<std::vector<VertexId>> adj(n);
  for (auto [a, b] : draft.edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) fail(Kind::invalid_argument, "edge endpoint out of range");
    if (a == b) fail(Kind::cycle, "self-loop at a vertex");
    if (!sets.unite(a, b)) fail(Kind::cycle, "cycle detected");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  if (static_cast<int>(draft.edges.size()) != n - 1) fail(Kind::disconnected, "graph is disconnected");

  for (VertexId v = 0; v < n; ++v) {
    const bool labelled = draft.labels[v] != 0;
    if (labelled && adj[v].size() != 1) fail(Kind::bad_labels, "labelled vertex is not a leaf");
    if (!labelled && adj[v].size() == 1) fail(Kind::bad_labels, "leaf without a label");
  }

  // Suppress 2-valent vertices; a tree has no parallel edges so the merged
  // edge never duplicates an existing one.
  std::vector<bool> alive(n, true);
  for (VertexId v = 0; v < n; ++v) {
    if (adj[v].size() != 2) continue;
    VertexId a = adj[v][0], b = adj[v][1];
    std::replace(adj[a].begin(), adj[a].end(), v, b);
    std::replace(adj[b].begin(), adj[b].end(), v, a);
    adj[v].clear();
    alive[v] = false;
  }

  std::map<int, VertexId> by_label;
  for (VertexId v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    if (valency == Valency::trivalent && adj[v].size() > 3)
      fail(Kind::high_valency, "inner vertex of valency " + std::to_string(adj[v].size()) + " in 3-valent mode");
    if (int l = draft.labels[v]; l != 0) {
      if (!by_label.emplace(l, v).second) fail(Kind::duplicate_label, "duplicate leaf label " + std::to_string(l));
    }
  }
  const int leaves = static_cast<int>(by_label.size());
  if (by_label.begin()->first != 1 || by_label.rbegin()->first != leaves)
    fail(Kind::bad_labels, "leaf labels must be exactly 1.." + std::to_string(leaves));

  // Smallest reachable label of the subtree below each vertex when rooted at leaf 1.
  const VertexId root = by_label.at(1);
  std::vector<int> subtree_min(n, 0);
  std::vector<VertexId> up(n, -1);
  std::vector<VertexId> order;
  order.reserve(n);
  {
    std::vector<VertexId> stack{root};
    up[root] = root;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (VertexId w : adj[v])
        if (w != up[v]) {
          up[w] = v;
          stack.push_back(w);
        }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      VertexId v = *it;
      int m = draft.labels[v] != 0 && v != root ? draft.labels[v] : INT32_MAX;
      for (VertexId w : adj[v])
        if (w != up[v]) m = std::min(m, subtree_min[w]);
      subtree_min[v] = m;
    }
  }

  Tree t;
  std::vector<VertexId> new_id(n, -1);
  std::function<void(VertexId, VertexId)> visit = [&](VertexId v, VertexId parent_new) {
    const VertexId id = static_cast<VertexId>(t.labels_.size());
    new_id[v] = id;
    t.labels_.push_back(draft.labels[v]);
    t.incident_.emplace_back();
    if (parent_new >= 0) {
      t.edge_parent_.push_back(parent_new);
      t.incident_[parent_new].push_back(id - 1);
      t.incident_[id].push_back(id - 1);
    }
    std::vector<VertexId> children;
    for (VertexId w : adj[v])
      if (w != up[v] || v == root) children.push_back(w);
    std::sort(children.begin(), children.end(), [&](VertexId x, VertexId y) { return subtree_min[x] < subtree_min[y]; });
    for (VertexId w : children)
      if (new_id[w] < 0) visit(w, id);
  };
  visit(root, -1);

  t.leaf_vertex_.assign(leaves, -1);
  for (VertexId v = 0; v < t.vertex_count(); ++v) {
    std::sort(t.incident_[v].begin(), t.incident_[v].end());
    if (t.labels_[v] != 0)
      t.leaf_vertex_[t.labels_[v] - 1] = v;
    else
      t.inner_.push_back(v);
  }
  if (vertex_map) *vertex_map = std::move(new_id);
  return t;
}

VertexId Tree::leaf(int label) const {
  if (label < 1 || label > leaf_count()) throw TreeError(Kind::invalid_argument, "no leaf labelled " + std::to_string(label));
  return leaf_vertex_[label - 1];
}

EdgeId Tree::petiole(int label) const { return incident_[leaf(label)].front(); }

std::vector<EdgeId> Tree::inner_edges() const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < edge_count(); ++e)
    if (is_inner_edge(e)) out.push_back(e);
  return out;
}

int Tree::max_valency() const {
  int m = 0;
  for (VertexId v : inner_) m = std::max(m, valency(v));
  return m;
}

bool Tree::is_caterpillar() const {
  for (VertexId v : inner_) {
    int inner_neighbours = 0;
    for (EdgeId e : incident_[v]) inner_neighbours += !is_leaf(other_end(e, v));
    if (inner_neighbours > 2) return false;
  }
  return true;
}

int Tree::min_label_beyond(VertexId v, EdgeId via) const {
  int m = INT32_MAX;
  std::vector<std::pair<VertexId, EdgeId>> stack{{v, via}};
  while (!stack.empty()) {
    auto [x, from] = stack.back();
    stack.pop_back();
    if (is_leaf(x)) m = std::min(m, label(x));
    for (EdgeId e : incident_[x])
      if (e != from) stack.emplace_back(other_end(e, x), e);
  }
  return m;
}

TreeDraft Tree::draft() const {
  TreeDraft d;
  for (int l : labels_) d.add_vertex(l);
  for (EdgeId e = 0; e < edge_count(); ++e) d.add_edge(parent(e), child(e));
  return d;
}

PointedTree::PointedTree(Tree t, int leaf_label) : tree(std::move(t)), point(leaf_label) {
  if (leaf_label < 1 || leaf_label > tree.leaf_count())
    throw TreeError(Kind::invalid_argument, "pointed leaf " + std::to_string(leaf_label) + " is not a leaf");
}

// ---------------------------------------------------------------- parsing

namespace {

class NewickReader {
 public:
  explicit NewickReader(std::string_view s) : s_(s) {}

  TreeDraft read() {
    skip();
    if (peek() != '(') error("expected '('");
    node();
    skip();
    if (peek() != ';') error("expected ';' terminator");
    ++pos_;
    skip();
    if (pos_ != s_.size()) error("trailing characters after ';'");
    return std::move(draft_);
  }

 private:
  VertexId node() {
    skip();
    if (peek() == '(') {
      ++pos_;
      VertexId v = draft_.add_vertex();
      while (true) {
        VertexId c = node();
        draft_.add_edge(v, c);
        skip();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        if (peek() == ')') {
          ++pos_;
          return v;
        }
        error("expected ',' or ')'");
      }
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected an integer leaf label");
    int label = 0;
    auto [p, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, label);
    if (ec != std::errc() || label <= 0) error("leaf labels must be positive integers");
    return draft_.add_vertex(label);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  [[noreturn]] void error(const std::string& msg) const {
    fail(Kind::syntax, "newick: " + msg + " at offset " + std::to_string(pos_));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  TreeDraft draft_;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

TreeDraft parse_newick(std::string_view text) { return NewickReader(text).read(); }

TreeDraft parse_edge_list(std::string_view text) {
  std::map<long long, VertexId> ids;
  std::vector<long long> names;
  TreeDraft d;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  auto id_of = [&](long long name) {
    auto [it, fresh] = ids.emplace(name, d.vertex_count);
    if (fresh) {
      d.add_vertex();
      names.push_back(name);
    }
    return it->second;
  };
  while (std::getline(in, line)) {
    ++line_no;
    auto body = trim(std::string_view(line).substr(0, line.find('#')));
    if (body.empty()) continue;
    std::istringstream fields{std::string(body)};
    long long u, v;
    std::string extra;
    if (!(fields >> u >> v) || (fields >> extra))
      fail(Kind::syntax, "edge list: line " + std::to_string(line_no) + " is not a 'u v' pair");
    d.add_edge(id_of(u), id_of(v));
  }
  if (d.edges.empty()) fail(Kind::syntax, "edge list: no edges");
  std::vector<int> degree(d.vertex_count, 0);
  for (auto [a, b] : d.edges) ++degree[a], ++degree[b];
  for (VertexId v = 0; v < d.vertex_count; ++v) {
    if (degree[v] != 1) continue;
    if (names[v] <= 0 || names[v] > INT32_MAX) fail(Kind::bad_labels, "leaf names must be positive integers");
    d.labels[v] = static_cast<int>(names[v]);
  }
  return d;
}

Tree parse_tree(std::string_view text, Valency valency) {
  auto s = trim(text);
  if (s.empty()) fail(Kind::syntax, "empty tree source");
  if (s.front() == '(') return Tree::build(parse_newick(s), valency);

  static const std::regex generator(R"((star|caterpillar):(\d+)|snowflake)");
  std::cmatch m;
  if (std::regex_match(s.begin(), s.end(), m, generator)) {
    if (m[0] == "snowflake") return snowflake();
    int k = 0;
    try {
      k = std::stoi(m[2].str());
    } catch (const std::out_of_range&) {
      fail(Kind::invalid_argument, "generator parameter out of range");
    }
    return m[1] == "star" ? star(k) : caterpillar(k);
  }
  return Tree::build(parse_edge_list(s), valency);
}

// ---------------------------------------------------------------- generators

Tree star(int leaves) {
  if (leaves < 2) fail(Kind::invalid_argument, "star:d needs d >= 2");
  TreeDraft d;
  VertexId c = d.add_vertex();
  for (int l = 1; l <= leaves; ++l) d.add_edge(c, d.add_vertex(l));
  return Tree::build(d, Valency::any);
}

Tree caterpillar(int k) {
  if (k < 1) fail(Kind::invalid_argument, "caterpillar:k needs k >= 1");
  TreeDraft d;
  std::vector<VertexId> spine;
  for (int i = 0; i <= k; ++i) spine.push_back(d.add_vertex());
  for (int i = 0; i < k; ++i) d.add_edge(spine[i], spine[i + 1]);
  int label = 1;
  d.add_edge(spine[0], d.add_vertex(label++));
  d.add_edge(spine[0], d.add_vertex(label++));
  for (int i = 1; i < k; ++i) d.add_edge(spine[i], d.add_vertex(label++));
  d.add_edge(spine[k], d.add_vertex(label++));
  d.add_edge(spine[k], d.add_vertex(label++));
  return Tree::build(d);
}

Tree snowflake() {
  TreeDraft d;
  VertexId centre = d.add_vertex();
  int label = 1;
  for (int arm = 0; arm < 3; ++arm) {
    VertexId a = d.add_vertex();
    d.add_edge(centre, a);
    d.add_edge(a, d.add_vertex(label++));
    d.add_edge(a, d.add_vertex(label++));
  }
  return Tree::build(d);
}

Tree single_edge() {
  TreeDraft d;
  d.add_edge(d.add_vertex(1), d.add_vertex(2));
  return Tree::build(d);
}

std::vector<Tree> all_trees(int leaves) {
  if (leaves < 2) fail(Kind::invalid_argument, "all_trees needs at least two leaves");
  std::vector<Tree> current{single_edge()};
  for (int l = 3; l <= leaves; ++l) {
    std::vector<Tree> next;
    for (const Tree& t : current) {
      for (EdgeId e = 0; e < t.edge_count(); ++e) {
        TreeDraft d = t.draft();
        VertexId mid = d.add_vertex();
        VertexId leaf = d.add_vertex(l);
        d.edges[e] = {t.parent(e), mid};
        d.add_edge(mid, t.child(e));
        d.add_edge(mid, leaf);
        next.push_back(Tree::build(d));
      }
    }
    current = std::move(next);
  }
  return current;
}

// ---------------------------------------------------------------- canonical strings

namespace {

void newick_below(const Tree& t, VertexId v, EdgeId from, std::string& out) {
  if (t.is_leaf(v)) {
    out += std::to_string(t.label(v));
    return;
  }
  out += '(';
  bool first = true;
  for (EdgeId e : t.edges_at(v)) {
    if (e == from) continue;
    if (!first) out += ',';
    first = false;
    newick_below(t, t.other_end(e, v), e, out);
  }
  out += ')';
}

std::string shape_below(const Tree& t, VertexId v, VertexId from) {
  std::vector<std::string> parts;
  for (EdgeId e : t.edges_at(v)) {
    VertexId w = t.other_end(e, v);
    if (w != from) parts.push_back(shape_below(t, w, v));
  }
  std::sort(parts.begin(), parts.end());
  std::string s = "(";
  for (auto& p : parts) s += p;
  return s + ")";
}

}  // namespace

std::string canonical_form(const Tree& t) {
  // Vertex 1 is the other end of leaf 1's petiole (edge 0).
  if (t.is_leaf(1)) return "(1," + std::to_string(t.label(1)) + ");";
  std::string out = "(1";
  for (EdgeId e : t.edges_at(1)) {
    if (e == 0) continue;
    out += ',';
    newick_below(t, t.child(e), e, out);
  }
  return out + ");";
}

std::string shape_signature(const Tree& t) {
  // Root at the centre (or central edge) found by peeling leaves.
  const int n = t.vertex_count();
  std::vector<int> degree(n);
  std::vector<VertexId> layer;
  for (VertexId v = 0; v < n; ++v) {
    degree[v] = t.valency(v);
    if (degree[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<VertexId> next;
    for (VertexId v : layer)
      for (EdgeId e : t.edges_at(v)) {
        VertexId w = t.other_end(e, v);
        if (--degree[w] == 1) next.push_back(w);
      }
    layer = std::move(next);
  }
  if (layer.size() == 1) return shape_below(t, layer[0], -1);
  auto a = shape_below(t, layer[0], layer[1]);
  auto b = shape_below(t, layer[1], layer[0]);
  if (b < a) std::swap(a, b);
  return "[" + a + b + "]";
}

// ---------------------------------------------------------------- grafting

GraftResult graft_detailed(const PointedTree& a, const PointedTree& b) {
  TreeDraft d;
  std::vector<VertexId> id_a(a.tree.vertex_count(), -1), id_b(b.tree.vertex_count(), -1);
  const VertexId drop_a = a.tree.leaf(a.point), drop_b = b.tree.leaf(b.point);

  int next_label = 1;
  auto copy_vertices = [&](const Tree& t, VertexId drop, std::vector<VertexId>& ids) {
    // Leaves first in label order so that labels come out consecutive.
    for (int l = 1; l <= t.leaf_count(); ++l) {
      VertexId v = t.leaf(l);
      if (v != drop) ids[v] = d.add_vertex(next_label++);
    }
    for (VertexId v : t.inner_nodes()) ids[v] = d.add_vertex();
  };
  copy_vertices(a.tree, drop_a, id_a);
  copy_vertices(b.tree, drop_b, id_b);

  std::vector<std::pair<int, EdgeId>> draft_origin;
  auto copy_edges = [&](const Tree& t, VertexId drop, const std::vector<VertexId>& ids, int side) {
    for (EdgeId e = 0; e < t.edge_count(); ++e) {
      if (t.parent(e) == drop || t.child(e) == drop) continue;
      d.add_edge(ids[t.parent(e)], ids[t.child(e)]);
      draft_origin.emplace_back(side, e);
    }
  };
  copy_edges(a.tree, drop_a, id_a, 0);
  copy_edges(b.tree, drop_b, id_b, 1);
  const EdgeId pet_a = a.tree.petiole(a.point), pet_b = b.tree.petiole(b.point);
  d.add_edge(id_a[a.tree.other_end(pet_a, drop_a)], id_b[b.tree.other_end(pet_b, drop_b)]);
  draft_origin.emplace_back(0, pet_a);

  std::vector<VertexId> map;
  Tree t = Tree::build(d, Valency::any, &map);
  GraftResult r{t, std::vector<std::pair<int, EdgeId>>(t.edge_count()), -1};
  for (std::size_t i = 0; i < d.edges.size(); ++i) {
    auto [u, v] = d.edges[i];
    EdgeId e = std::max(map[u], map[v]) - 1;
    r.edge_origin[e] = draft_origin[i];
    if (i + 1 == d.edges.size()) r.fused_edge = e;
  }
  return r;
}

Tree graft(const PointedTree& a, const PointedTree& b) { return graft_detailed(a, b).tree; }

PointedTree pointed_graft(const PointedTree& a, const PointedTree& b) {
  Tree joined = graft(a, PointedTree(star(3), 1));
  const int o2 = a.tree.leaf_count();  // star leaf 2 after renumbering
  Tree result = graft(PointedTree(joined, o2), b);
  return PointedTree(std::move(result), a.tree.leaf_count());
}

// ---------------------------------------------------------------- mutations

MutationResult mutate(const Tree& t, EdgeId inner_edge, int choice) {
  if (inner_edge < 0 || inner_edge >= t.edge_count()) fail(Kind::invalid_argument, "edge id out of range");
  if (!t.is_inner_edge(inner_edge)) fail(Kind::invalid_argument, "mutation edge is a petiole");
  if (choice != 0 && choice != 1) fail(Kind::invalid_argument, "mutation choice must be 0 or 1");
  const VertexId ends[2] = {t.parent(inner_edge), t.child(inner_edge)};
  if (t.valency(ends[0]) != 3 || t.valency(ends[1]) != 3)
    fail(Kind::invalid_argument, "mutation edge endpoints must be 3-valent");

  struct Arm {
    EdgeId edge;
    VertexId far;
    int min_label;
  };
  std::vector<Arm> arms[2];
  for (int s = 0; s < 2; ++s) {
    for (EdgeId e : t.edges_at(ends[s])) {
      if (e == inner_edge) continue;
      VertexId far = t.other_end(e, ends[s]);
      arms[s].push_back({e, far, t.min_label_beyond(far, e)});
    }
    std::sort(arms[s].begin(), arms[s].end(), [](const Arm& x, const Arm& y) { return x.min_label < y.min_label; });
  }
  const int p = arms[0][0].min_label < arms[1][0].min_label ? 0 : 1;
  const int q = 1 - p;
  const Arm& p1 = arms[p][0];
  const Arm& p2 = arms[p][1];
  const Arm& q1 = arms[q][choice == 0 ? 0 : 1];
  const Arm& q2 = arms[q][choice == 0 ? 1 : 0];

  TreeDraft d;
  for (VertexId v = 0; v < t.vertex_count(); ++v) d.add_vertex(t.label(v));
  for (EdgeId e = 0; e < t.edge_count(); ++e) {
    if (e == p1.edge || e == p2.edge || e == q1.edge || e == q2.edge) continue;
    d.add_edge(t.parent(e), t.child(e));
  }
  const VertexId x = ends[p], y = ends[q];
  d.add_edge(x, p1.far);
  d.add_edge(x, q1.far);
  d.add_edge(y, p2.far);
  d.add_edge(y, q2.far);

  std::vector<VertexId> map;
  Tree out = Tree::build(d, Valency::any, &map);
  return {out, std::max(map[x], map[y]) - 1};
}

std::vector<MutationResult> elementary_mutations(const Tree& t, EdgeId inner_edge) {
  return {mutate(t, inner_edge, 0), mutate(t, inner_edge, 1)};
}

Tree replay(const Tree& t, std::span<const MutationStep> steps) {
  Tree cur = t;
  for (const auto& s : steps) cur = mutate(cur, s.edge, s.choice).tree;
  return cur;
}

std::vector<MutationStep> mutation_path_to_caterpillar(const Tree& t) {
  if (!t.is_trivalent()) fail(Kind::high_valency, "mutation paths need a 3-valent tree");
  std::vector<MutationStep> steps;
  Tree cur = t;
  while (!cur.is_caterpillar()) {
    // Farthest inner node from `from` through inner edges, with the path to it.
    auto farthest = [&](VertexId from) {
      std::vector<VertexId> prev(cur.vertex_count(), -2);
      std::deque<VertexId> queue{from};
      prev[from] = -1;
      VertexId last = from;
      while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        last = v;
        for (EdgeId e : cur.edges_at(v)) {
          VertexId w = cur.other_end(e, v);
          if (!cur.is_leaf(w) && prev[w] == -2) {
            prev[w] = v;
            queue.push_back(w);
          }
        }
      }
      std::vector<VertexId> path;
      for (VertexId v = last; v != -1; v = prev[v]) path.push_back(v);
      return path;
    };
    auto spine = farthest(farthest(cur.inner_nodes().front()).front());
    std::vector<bool> on_spine(cur.vertex_count(), false);
    for (VertexId v : spine) on_spine[v] = true;
    EdgeId chosen = -1;
    for (VertexId v : spine) {
      for (EdgeId e : cur.edges_at(v)) {
        VertexId w = cur.other_end(e, v);
        if (!cur.is_leaf(w) && !on_spine[w]) {
          chosen = e;
          break;
        }
      }
      if (chosen >= 0) break;
    }
    steps.push_back({chosen, 0});
    cur = mutate(cur, chosen, 0).tree;
  }
  if (!replay(t, steps).is_caterpillar()) throw std::logic_error("mutation path replay did not reach a caterpillar");
  return steps;
}

std::vector<Tree> mutation_orbit(const Tree& t) {
  std::map<std::string, Tree> seen;
  std::deque<Tree> queue{t};
  seen.emplace(canonical_form(t), t);
  while (!queue.empty()) {
    Tree cur = queue.front();
    queue.pop_front();
    for (EdgeId e : cur.inner_edges())
      for (auto& m : elementary_mutations(cur, e))
        if (seen.emplace(canonical_form(m.tree), m.tree).second) queue.push_back(m.tree);
  }
  std::vector<Tree> out;
  for (auto& [_, tree] : seen) out.push_back(tree);
  return out;
}

}  // namespace phylotoric
