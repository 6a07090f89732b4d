#include "doctest.h"
#include "phylotoric/face_lattice.hpp"

#include <fstream>
#include <sstream>

using namespace phylotoric;

namespace {
IncidenceMatrix golden(const std::string& name) {
  std::ifstream in(std::string(PHYLOTORIC_GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  IncidenceMatrix m;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::vector<std::int64_t> r;
    for (std::int64_t x; row >> x;) r.push_back(x);
    if (!r.empty()) m.entries.push_back(r);
  }
  return m;
}
}  // namespace

TEST_CASE("tetrahedron") {
  auto m = face_lattice(polytope_of(star(3)));
  REQUIRE(m.size() == 3);
  CHECK(m(0, 0) == 4);
  CHECK(m(1, 1) == 6);
  CHECK(m(2, 2) == 4);
  CHECK(m(0, 1) == 12);
  CHECK(m(1, 0) == 12);
  CHECK(m(0, 2) == 12);
  CHECK(m(1, 2) == 12);
}

TEST_CASE("segment and cube-like cases") {
  auto seg = face_lattice(polytope_of(single_edge()));
  CHECK(seg.entries == std::vector<std::vector<std::int64_t>>{{2}});

  // Unit square as a product of two segments.
  auto s = polytope_of(single_edge());
  auto sq = face_lattice(fiber_product(s, LatticeVector(1), s, LatticeVector(1)));
  CHECK(sq.entries == std::vector<std::vector<std::int64_t>>{{4, 8}, {8, 4}});
}

TEST_CASE("4-leaf tree polytope") {
  auto m = face_lattice(polytope_of(parse_tree("((1,2),(3,4));")));
  REQUIRE(m.size() == 5);
  CHECK(m(0, 0) == 8);
  CHECK(m(4, 4) == 8);
  // Euler characteristic of the boundary of a 5-polytope: f0 - f1 + f2 - f3 + f4 = 2.
  auto f = m.f_vector();
  CHECK(f[0] - f[1] + f[2] - f[3] + f[4] == 2);
}

TEST_CASE("6-leaf incidence matrices") {
  auto snow = face_lattice(polytope_of(snowflake()));
  auto cat = face_lattice(polytope_of(caterpillar(3)));
  CHECK(snow == golden("incidence_snowflake.txt"));
  CHECK(cat == golden("incidence_caterpillar3.txt"));
  CHECK(snow(1, 4) == 19920);
  CHECK(cat(1, 4) == 19904);
  CHECK(snow.f_vector() == cat.f_vector());
  CHECK_FALSE(snow == cat);
}
