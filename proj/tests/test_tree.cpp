#include "doctest.h"
#include "phylotoric/tree.hpp"

#include <set>

using namespace phylotoric;

TEST_CASE("generators have the expected counts") {
  auto s = parse_tree("star:3");
  CHECK(s.inner_count() == 1);
  CHECK(s.leaf_count() == 3);
  CHECK(s.edge_count() == 3);

  auto f = parse_tree("snowflake");
  CHECK(f.leaf_count() == 6);
  CHECK(f.inner_count() == 4);
  CHECK(f.edge_count() == 9);
  CHECK(f.inner_edges().size() == 3);

  for (int k = 1; k <= 6; ++k) {
    auto c = caterpillar(k);
    CHECK(c.edge_count() == 2 * c.leaf_count() - 3);
    CHECK(c.inner_count() == k + 1);
    CHECK(c.leaf_count() == k + 3);
    CHECK(c.is_caterpillar());
  }
  CHECK_THROWS_AS(caterpillar(0), TreeError);
  CHECK_FALSE(snowflake().is_caterpillar());
}

TEST_CASE("canonical edge order") {
  auto t = parse_tree("((1,2),(3,4));");
  CHECK(t.label(0) == 1);
  CHECK(t.petiole(1) == 0);
  for (EdgeId e = 0; e < t.edge_count(); ++e) CHECK(t.parent(e) < t.child(e));
  CHECK(canonical_form(star(3)) == "(1,2,3);");
  CHECK(canonical_form(t) == "(1,2,(3,4));");
}

TEST_CASE("parser accepts equivalent inputs and rejects malformed ones") {
  auto a = parse_tree("((1,2),(3,4));");
  auto b = parse_tree("((4,3),(2,1));");
  auto c = parse_tree("1 10\n2 10\n10 11\n11 3\n11 4\n");
  auto d = parse_tree("(1,2,(3,4));");
  CHECK(a == b);
  CHECK(a == c);
  CHECK(a == d);
  CHECK(canonical_form(parse_tree("((1,3),(2,4));")) != canonical_form(a));

  auto kind = [](const char* src) {
    try {
      parse_tree(src);
    } catch (const TreeError& e) {
      return e.kind();
    }
    FAIL("expected a TreeError");
    return TreeError::Kind::invalid_argument;
  };
  CHECK(kind("((1,2),(3,4))") == TreeError::Kind::syntax);
  CHECK(kind("((1,2),(3,4):0.5);") == TreeError::Kind::syntax);
  CHECK(kind("((1,2),(1,4));") == TreeError::Kind::duplicate_label);
  CHECK(kind("(1,2,3,4);") == TreeError::Kind::high_valency);
  CHECK(kind("((1,2),(3,5));") == TreeError::Kind::bad_labels);
  CHECK(kind("1 10\n10 11\n11 1\n") == TreeError::Kind::cycle);
  CHECK(kind("1 10\n2 10\n3 11\n4 11\n") == TreeError::Kind::disconnected);
  CHECK(parse_tree("(1,2,3,4);", Valency::any).max_valency() == 4);
}

TEST_CASE("2-valent vertices are suppressed") {
  auto t = parse_tree("((1,2),3);");
  CHECK(t == star(3));
  auto e = parse_tree("1 5\n5 2\n");
  CHECK(e.edge_count() == 1);
  CHECK(e == single_edge());
}

TEST_CASE("round trip through canonical form") {
  for (int l = 3; l <= 6; ++l)
    for (const auto& t : all_trees(l)) CHECK(parse_tree(canonical_form(t)) == t);
}

TEST_CASE("all_trees counts and distinctness") {
  const int expected[] = {1, 1, 3, 15, 105, 945};
  for (int l = 2; l <= 7; ++l) {
    auto trees = all_trees(l);
    CHECK(static_cast<int>(trees.size()) == expected[l - 2]);
    std::set<std::string> forms;
    for (const auto& t : trees) {
      forms.insert(canonical_form(t));
      CHECK(t.edge_count() == 2 * l - 3);
      CHECK(t.inner_count() == l - 2);
    }
    CHECK(forms.size() == trees.size());
  }
}

TEST_CASE("graft") {
  auto four = graft(PointedTree(star(3), 3), PointedTree(star(3), 1));
  CHECK(four.leaf_count() == 4);
  CHECK(four == parse_tree("((1,2),(3,4));"));

  auto five = graft(PointedTree(four, 2), PointedTree(star(3), 1));
  CHECK(five.leaf_count() == 5);
  CHECK(five.edge_count() == 7);

  // Snowflake assembled from stars: cherries grafted onto each leaf of a star.
  PointedTree cherry(star(3), 3);
  auto one = graft(cherry, PointedTree(star(3), 1));
  auto two = graft(PointedTree(one, 3), cherry);
  auto snow = graft(PointedTree(two, 3), cherry);
  CHECK(shape_signature(snow) == shape_signature(snowflake()));

  auto detailed = graft_detailed(PointedTree(star(3), 3), PointedTree(star(3), 1));
  CHECK(detailed.tree.is_inner_edge(detailed.fused_edge));
  CHECK(detailed.edge_origin.size() == 5);
}

TEST_CASE("graft associativity along disjoint leaves") {
  for (const auto& a : all_trees(4))
    for (const auto& c : all_trees(4)) {
      auto b = star(3);
      // (a @4 + b @1) @ leaf 5 (was b's leaf 3) + c @1  vs  a @4 + (b @3 + c @1) @1
      auto left = graft(PointedTree(graft(PointedTree(a, 4), PointedTree(b, 1)), 5), PointedTree(c, 1));
      auto right = graft(PointedTree(a, 4), PointedTree(graft(PointedTree(b, 3), PointedTree(c, 1)), 1));
      CHECK(canonical_form(left) == canonical_form(right));
    }
}

TEST_CASE("pointed graft") {
  auto p = pointed_graft(PointedTree(star(3), 3), PointedTree(star(3), 1));
  CHECK(p.tree.leaf_count() == 5);
  CHECK(p.tree.edge_count() == 7);
  CHECK(p.point == 3);

  auto e = single_edge();
  auto q = pointed_graft(PointedTree(e, 2), PointedTree(e, 1));
  CHECK(q.tree == star(3));
  CHECK(q.point == 2);

  auto r = pointed_graft(PointedTree(snowflake(), 2), PointedTree(caterpillar(2), 5));
  CHECK(r.tree.leaf_count() == 5 + 4 + 1);
}

TEST_CASE("elementary mutations") {
  auto t = parse_tree("((1,2),(3,4));");
  auto m = elementary_mutations(t, t.inner_edges().front());
  REQUIRE(m.size() == 2);
  CHECK(m[0].tree == parse_tree("((1,3),(2,4));"));
  CHECK(m[1].tree == parse_tree("((1,4),(2,3));"));
  CHECK_THROWS_AS(elementary_mutations(t, 0), TreeError);

  bool found = false;
  auto cat = caterpillar(3);
  auto middle = cat.inner_edges();
  for (EdgeId e : middle)
    for (auto& r : elementary_mutations(cat, e)) found |= shape_signature(r.tree) == shape_signature(snowflake());
  CHECK(found);

  for (const auto& tree : all_trees(6))
    for (EdgeId e : tree.inner_edges())
      for (int choice = 0; choice < 2; ++choice) {
        auto once = mutate(tree, e, choice);
        CHECK(once.tree.leaf_count() == 6);
        CHECK(once.tree.edge_count() == 9);
        auto back = elementary_mutations(once.tree, once.edge);
        CHECK((back[0].tree == tree || back[1].tree == tree));
      }
}

TEST_CASE("mutation paths to a caterpillar") {
  CHECK(mutation_path_to_caterpillar(caterpillar(3)).empty());
  auto steps = mutation_path_to_caterpillar(snowflake());
  CHECK(steps.size() == 1);
  for (const auto& t : all_trees(7)) {
    auto path = mutation_path_to_caterpillar(t);
    CHECK(path.size() <= t.inner_edges().size());
    CHECK(shape_signature(replay(t, path)) == shape_signature(caterpillar(4)));
  }
}

TEST_CASE("mutation orbit covers every tree of the same leaf count") {
  CHECK(mutation_orbit(caterpillar(1)).size() == 3);
  CHECK(mutation_orbit(caterpillar(3)).size() == 105);
}
