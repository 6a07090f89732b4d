#include "doctest.h"

#include "phylotoric/toric_ideal.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

using namespace phylotoric;

namespace {

std::string golden(const std::string& name) {
  std::ifstream in(std::string(PHYLOTORIC_GOLDEN_DIR) + "/" + name);
  REQUIRE(in);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string joined(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

}  // namespace

TEST_CASE("4-leaf sockets match the golden listing") {
  Tree t = parse_tree("((1,2),(3,4));");
  std::vector<std::string> lines;
  for (const auto& n : networks_of(t)) lines.push_back(socket_of(t, n).to_string() + " " + n.vertex().to_string());
  std::sort(lines.begin(), lines.end());
  CHECK(joined(lines) == golden("four_leaf_sockets.txt"));
}

TEST_CASE("4-leaf equations for the three labelings") {
  CHECK(joined(socket_equations(parse_tree("((1,2),(3,4));"))) == golden("four_leaf_12_34.txt"));
  CHECK(joined(socket_equations(parse_tree("((1,3),(2,4));"))) == golden("four_leaf_13_24.txt"));
  CHECK(joined(socket_equations(parse_tree("((1,4),(2,3));"))) == golden("four_leaf_14_23.txt"));
}

TEST_CASE("the tetrahedron has no quadrics") {
  CHECK(quadratic_relations(polytope_of(star(3))).empty());
  CHECK(socket_equations(star(3)).empty());
}

TEST_CASE("relations are balanced, primitive and vanish") {
  for (int leaves = 4; leaves <= 6; ++leaves)
    for (const auto& t : all_trees(leaves)) {
      auto rels = quadratic_relations(polytope_of(t));
      CHECK_FALSE(rels.empty());
      for (const auto& r : rels) {
        CHECK(r.degree() == 2);
        CHECK(r.balanced());
        CHECK(r.primitive());
      }
      CHECK(vanishing_check(t, rels, 3, 7));
    }
  Tree t = parse_tree("((1,2),(3,4));");
  CHECK(vanishing_check(t, quadratic_relations(polytope_of(t)), 100, 1));
  CHECK(vanishing_check(snowflake(), quadratic_relations(polytope_of(snowflake())), 20, 1));
}

TEST_CASE("corrupted relations are caught") {
  Tree t = parse_tree("((1,2),(3,4));");
  auto rels = quadratic_relations(polytope_of(t));
  auto bad = rels;
  bad[0].left[0].first[0] ^= 1;
  CHECK_FALSE(bad[0].balanced());
  CHECK_FALSE(vanishing_check(t, bad, 5, 1));

  // x_{1001} x_{0110} = x_{1010} x_{0101} does not hold on ((1,4),(2,3)).
  Tree u = parse_tree("((1,4),(2,3));");
  auto v = [&](const char* s) { return vertex_of_socket(u, Socket::parse(s)).vertex(); };
  BinomialRelation wrong{{{v("1001"), 1}, {v("0110"), 1}}, {{v("1010"), 1}, {v("0101"), 1}}};
  std::sort(wrong.left.begin(), wrong.left.end());
  std::sort(wrong.right.begin(), wrong.right.end());
  CHECK_FALSE(wrong.balanced());
  CHECK_FALSE(vanishing_check(u, {wrong}, 5, 1));
}

TEST_CASE("counts depend only on the shape") {
  std::map<std::string, std::size_t> counts;
  for (const auto& t : all_trees(6)) {
    auto n = quadratic_relations(polytope_of(t)).size();
    auto [it, fresh] = counts.emplace(shape_signature(t), n);
    if (!fresh) CHECK(it->second == n);
  }
  CHECK(counts.size() == 2);
}

TEST_CASE("leaf weights are constant across each relation") {
  for (const auto& t : {parse_tree("((1,2),(3,4));"), snowflake(), caterpillar(3)}) {
    for (const auto& r : quadratic_relations(polytope_of(t))) {
      auto l = socket_names(t, r.left), rr = socket_names(t, r.right);
      for (int leaf = 0; leaf < t.leaf_count(); ++leaf)
        CHECK((l[0][leaf] - '0') + (l[1][leaf] - '0') == (rr[0][leaf] - '0') + (rr[1][leaf] - '0'));
    }
  }
}
