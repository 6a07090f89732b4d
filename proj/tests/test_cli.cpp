#include "doctest.h"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(PHYLOTORIC_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("ehrhart prints the 6-leaf polynomial") {
  auto r = run("ehrhart --tree caterpillar:3");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "(1/22680)(n+1)(n+2)(n+3)(31n^6+372n^5+1942n^4+5616n^3+9511n^2+8988n+3780)"));
  CHECK(contains(r.out, "h(3) = 2848"));
}

TEST_CASE("faces prints the snowflake matrix") {
  auto r = run("faces --tree snowflake --format csv");
  CHECK(r.status == 0);
  std::ifstream in(std::string(PHYLOTORIC_GOLDEN_DIR) + "/incidence_snowflake.txt");
  std::string expected, line;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string cells;
    for (std::string x; row >> x;) cells += (cells.empty() ? "" : ",") + x;
    if (!cells.empty()) expected += cells + "\n";
  }
  CHECK(r.out == expected);
}

TEST_CASE("ideal prints the two quadrics") {
  auto r = run("ideal --tree \"((1,2),(3,4));\"");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "x_{0000}*x_{1111} = x_{0011}*x_{1100}"));
  CHECK(contains(r.out, "x_{0101}*x_{1010} = x_{0110}*x_{1001}"));
  auto j = run("ideal --tree \"((1,2),(3,4));\" --format json");
  CHECK(contains(j.out, "\"description\": \"quadratic part of the ideal\""));
  CHECK(contains(j.out, "\"generator_degree_bound\": \"open\""));
}

TEST_CASE("json output is byte stable") {
  for (const char* args : {"polytope --tree snowflake --format json", "ideal --tree caterpillar:3 --format json --seed 9",
                           "mutate --tree caterpillar:3 --format json", "dual --tree \"((1,2),(3,4));\" --format json"}) {
    auto a = run(args), b = run(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.front() == '{');
  }
}

TEST_CASE("describe, polytope and dual") {
  auto d = run("describe --tree snowflake");
  CHECK(d.status == 0);
  CHECK(contains(d.out, "vertices:       32"));
  auto p = run("polytope --tree star:3 --format csv");
  CHECK(p.status == 0);
  CHECK(contains(p.out, "vertex,011,,0,1,1"));
  auto q = run("dual --tree star:3");
  CHECK(q.status == 0);
  CHECK(contains(q.out, "[-1/2,-1/2,-1/2]"));
  CHECK(contains(q.out, "polarity: verified"));
}

TEST_CASE("mutate reaches a caterpillar") {
  auto r = run("mutate --tree snowflake");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "path to a caterpillar (1 steps)"));
}

TEST_CASE("volume-dist writes a CSV and a script that only names it") {
  const auto dir = std::filesystem::temp_directory_path() / "phylotoric-cli-test";
  std::filesystem::create_directories(dir);
  auto r = run("volume-dist --r 20 --out " + (dir / "plot").string());
  CHECK(r.status == 0);
  const auto csv = slurp(dir / "plot.csv");
  const auto gp = slurp(dir / "plot.gp");
  CHECK(csv.rfind("t,delta2,delta20\n0,0,0\n", 0) == 0);
  CHECK(contains(gp, "\"plot.csv\""));
  CHECK_FALSE(contains(gp, dir.string()));
  std::filesystem::remove_all(dir);
}

TEST_CASE("exit codes") {
  CHECK(run("").status == 2);
  CHECK(run("describe").status == 2);
  CHECK(run("describe --tree \"((1,2);\"").status == 2);
  CHECK(run("describe --tree snowflake --format xml").status == 2);
  CHECK(run("ehrhart --tree snowflake --leaf 9").status == 2);
  CHECK(run("polytope --tree star:4").status == 2);
  CHECK(run("--help").status == 0);
}

TEST_CASE("verify runs the acceptance suite") {
  auto r = run("verify");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "11/11 criteria passed"));
}
