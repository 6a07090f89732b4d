#include "phylotoric/acceptance.hpp"

#include "phylotoric/cover.hpp"
#include "phylotoric/dual.hpp"
#include "phylotoric/ehrhart.hpp"
#include "phylotoric/face_lattice.hpp"
#include "phylotoric/lattice_points.hpp"
#include "phylotoric/polytope.hpp"
#include "phylotoric/toric_ideal.hpp"
#include "phylotoric/tree.hpp"
#include "phylotoric/volume_plot.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <unistd.h>

#ifndef PHYLOTORIC_DEFAULT_GOLDEN_DIR
#define PHYLOTORIC_DEFAULT_GOLDEN_DIR ""
#endif

namespace phylotoric {

namespace {

// Collects failed expectations; the first few are kept for the report.
class Expectations {
 public:
  void expect(bool ok, const std::string& what) {
    ++checked_;
    if (ok) return;
    ++failed_;
    if (messages_.size() < 3) messages_.push_back(what);
  }
  bool ok() const { return failed_ == 0; }
  std::string summary(const std::string& success) const {
    if (ok()) return success;
    std::string s = std::to_string(failed_) + "/" + std::to_string(checked_) + " checks failed";
    for (const auto& m : messages_) s += "; " + m;
    return s;
  }

 private:
  std::size_t checked_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> messages_;
};

struct Outcome {
  bool passed;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::filesystem::path golden_dir(const AcceptanceOptions& o) {
  if (!o.golden_dir.empty()) return o.golden_dir;
  if (const char* env = std::getenv("PHYLOTORIC_GOLDEN_DIR"); env && *env) return env;
  return PHYLOTORIC_DEFAULT_GOLDEN_DIR;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read golden file " + p.string());
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

IncidenceMatrix read_matrix(const std::filesystem::path& p) {
  std::istringstream in(read_file(p));
  IncidenceMatrix m;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::vector<std::int64_t> r;
    for (std::int64_t x; row >> x;) r.push_back(x);
    if (!r.empty()) m.entries.push_back(std::move(r));
  }
  return m;
}

std::string lines_of(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

Tree four_leaf() { return parse_tree("((1,2),(3,4));"); }
Tree five_leaf() { return caterpillar(2); }

std::vector<Tree> trees_up_to(int leaves) {
  std::vector<Tree> out;
  for (int l = 3; l <= leaves; ++l)
    for (auto& t : all_trees(l)) out.push_back(std::move(t));
  return out;
}

RationalPolynomial linear(int root) { return RationalPolynomial({Rational(root), Rational(1)}); }

RationalPolynomial rising3() { return linear(1) * linear(2) * linear(3); }

Outcome vertex_counts() {
  const auto start = Clock::now();
  Expectations e;
  const std::vector<std::pair<std::string, Tree>> cases{{"star:3", star(3)},
                                                        {"4-leaf", four_leaf()},
                                                        {"5-leaf", five_leaf()},
                                                        {"snowflake", snowflake()},
                                                        {"caterpillar:3", caterpillar(3)}};
  const std::vector<std::size_t> expected{4, 8, 16, 32, 32};
  std::string counts;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto n = polytope_of(cases[i].second).vertices.size();
    counts += (i ? "," : "") + std::to_string(n);
    e.expect(n == expected[i], cases[i].first + " has " + std::to_string(n) + " vertices");
  }
  const double s = seconds_since(start);
  e.expect(s < 1.0, "took " + std::to_string(s) + " s");
  return {e.ok(), e.summary("vertex counts " + counts)};
}

Outcome four_leaf_goldens(const AcceptanceOptions& o) {
  const auto dir = golden_dir(o);
  Expectations e;
  Tree t = four_leaf();
  std::vector<std::string> sockets;
  for (const auto& n : networks_of(t)) sockets.push_back(socket_of(t, n).to_string() + " " + n.vertex().to_string());
  std::sort(sockets.begin(), sockets.end());
  e.expect(sockets.size() == 8, "expected 8 sockets");
  e.expect(lines_of(sockets) == read_file(dir / "four_leaf_sockets.txt"), "sockets differ from four_leaf_sockets.txt");
  const std::vector<std::pair<std::string, std::string>> labelings{
      {"((1,2),(3,4));", "four_leaf_12_34.txt"}, {"((1,3),(2,4));", "four_leaf_13_24.txt"}, {"((1,4),(2,3));", "four_leaf_14_23.txt"}};
  for (const auto& [spec, file] : labelings) {
    Tree u = parse_tree(spec);
    const auto eqs = socket_equations(u);
    e.expect(eqs.size() == 2, spec + " does not give two quadrics");
    e.expect(lines_of(eqs) == read_file(dir / file), spec + " differs from " + file);
    e.expect(vanishing_check(u, quadratic_relations(polytope_of(u)), 100, o.seed), spec + " fails the vanishing check");
  }
  return {e.ok(), e.summary("8 sockets and 3x2 quadrics match goldens")};
}

Outcome closed_forms() {
  Expectations e;
  for (int n = 0; n <= 50; ++n) {
    const auto two = star_power(n, 2);
    const auto three = star_power(n, 3);
    for (int k = 0; k <= n; ++k) {
      const Integer a = Integer(k + 1) * (n - k + 1);
      e.expect(two[k] == a, "(1^n)^*2 at n=" + std::to_string(n) + " k=" + std::to_string(k));
      const Integer b = a * (Integer(n) * n + k * n - k * k + 5 * n + 6);
      e.expect(6 * three[k] == b, "(1^n)^*3 at n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  }
  return {e.ok(), e.summary("both closed forms hold for 0 <= k <= n <= 50")};
}

Outcome hilbert_polynomials() {
  const auto start = Clock::now();
  Expectations e;
  const auto p3 = Rational(1, 6) * rising3();
  const auto p4 = Rational(1, 30) * rising3() * RationalPolynomial({Rational(5), Rational(4), Rational(1)});
  const auto p6 = Rational(1, 22680) * rising3() *
                  RationalPolynomial({Rational(3780), Rational(8988), Rational(9511), Rational(5616), Rational(1942),
                                      Rational(372), Rational(31)});
  e.expect(hilbert_ehrhart_polynomial(star(3)) == p3, "star:3 polynomial");
  e.expect(hilbert_ehrhart_polynomial(four_leaf()) == p4, "4-leaf polynomial");
  for (const auto& t : {snowflake(), caterpillar(3)}) {
    const auto h = hilbert_ehrhart_polynomial(t);
    e.expect(h == p6, canonical_form(t) + " polynomial is " + h.factored());
    e.expect(h.leading() == Rational(31, 22680), "leading coefficient");
  }
  const double s = seconds_since(start);
  e.expect(s < 5.0, "took " + std::to_string(s) + " s");
  return {e.ok(), e.summary("6-leaf h(n) = " + p6.factored())};
}

Outcome oracle_equivalence() {
  const auto start = Clock::now();
  Expectations e;
  std::string values;
  for (const auto& t : {snowflake(), caterpillar(3)}) {
    const auto p = polytope_of(t);
    const auto h = hilbert_ehrhart_polynomial(t);
    for (int n = 0; n <= 3; ++n) {
      const Integer brute = count_lattice_points(p, n, LatticeKind::normalized);
      const Integer formula = star_power(n, 5).sum();
      e.expect(brute == formula, "n=" + std::to_string(n) + ": enumeration " + brute.str() + " vs " + formula.str());
      e.expect(Rational(brute) == h(Rational(n)), "polynomial value at n=" + std::to_string(n));
      if (t == snowflake()) values += (n ? "," : "") + brute.str();
    }
  }
  e.expect(count_lattice_points(polytope_of(snowflake()), 1, LatticeKind::normalized) == 32, "h(1) != 32");
  e.expect(count_lattice_points(polytope_of(snowflake()), 2, LatticeKind::normalized) == 396, "h(2) != 396");
  const double s = seconds_since(start);
  e.expect(s < 30.0, "took " + std::to_string(s) + " s");
  return {e.ok(), e.summary("h(0..3) = " + values + " by enumeration and by the star product")};
}

Outcome incidence_matrices(const AcceptanceOptions& o) {
  const auto start = Clock::now();
  const auto dir = golden_dir(o);
  Expectations e;
  const auto snow = face_lattice(polytope_of(snowflake()));
  const auto cat = face_lattice(polytope_of(caterpillar(3)));
  e.expect(snow == read_matrix(dir / "incidence_snowflake.txt"), "snowflake matrix differs from golden");
  e.expect(cat == read_matrix(dir / "incidence_caterpillar3.txt"), "caterpillar matrix differs from golden");
  e.expect(snow.size() == 9 && snow(1, 4) == 19920, "snowflake a14");
  e.expect(cat.size() == 9 && cat(1, 4) == 19904, "caterpillar a14");
  e.expect(!(snow == cat), "matrices coincide");
  const double s = seconds_since(start);
  e.expect(s < 60.0, "took " + std::to_string(s) + " s");
  return {e.ok(), e.summary("both 9x9 matrices match; a14 = 19920 vs 19904")};
}

Outcome polarity() {
  Expectations e;
  const auto trees = trees_up_to(6);
  for (const auto& t : trees) {
    const auto r = polarity_check(t);
    e.expect(r.polar_matches_dual, canonical_form(t) + ": polar vertices differ from the dual polytope");
    e.expect(r.facets_match_model, canonical_form(t) + ": dual facets differ from the model vertices");
  }
  return {e.ok(), e.summary("polarity holds for all " + std::to_string(trees.size()) + " trees with 3..6 leaves")};
}

Outcome gorenstein() {
  Expectations e;
  const auto trees = trees_up_to(6);
  std::size_t vertices = 0;
  for (const auto& t : trees) {
    const auto r = gorenstein_check(t);
    for (const auto& c : r.certificates) {
      ++vertices;
      std::string where = canonical_form(t) + " at " + c.u.to_string() + ": ";
      e.expect(c.face_size_ok, where + "u-perp has the wrong size");
      e.expect(c.dual_values_ok, where + "dual point below the face");
      e.expect(c.integral_on_generators, where + "form not integral");
      e.expect(c.division.ok(), where + c.division.failure());
    }
  }
  return {e.ok(), e.summary("index-4 faces and unimodular divisions verified at " + std::to_string(vertices) + " vertices of " +
                             std::to_string(trees.size()) + " trees")};
}

Outcome normality() {
  Expectations e;
  std::size_t points = 0;
  for (const auto& t : {snowflake(), caterpillar(3)}) {
    const auto p = polytope_of(t);
    for (int n : {2, 3}) {
      const auto bad = normality_counterexamples(p, n);
      points += count_lattice_points(p, n, LatticeKind::normalized);
      e.expect(bad.empty(), canonical_form(t) + " n=" + std::to_string(n) + ": " + std::to_string(bad.size()) +
                                " points are not sums of vertices");
    }
  }
  return {e.ok(), e.summary("all " + std::to_string(points) + " points decompose; 0 counterexamples")};
}

Outcome mutation_shadow() {
  Expectations e;
  constexpr int max_n = 4;
  std::size_t trees_checked = 0, enumerated = 0;
  for (int k = 1; caterpillar(k).leaf_count() <= 7; ++k) {
    const Tree base = caterpillar(k);
    const int leaves = base.leaf_count();
    const auto reference_poly = hilbert_ehrhart_polynomial(base);
    std::vector<SymmetricSequence> reference;
    for (int n = 0; n <= max_n; ++n) reference.push_back(relative_ehrhart(PointedTree(base, 1), n));

    // Brute force for every tree up to 6 leaves, once per shape beyond.
    std::map<std::string, bool> shape_done;
    for (const auto& t : mutation_orbit(base)) {
      ++trees_checked;
      const std::string name = canonical_form(t);
      e.expect(hilbert_ehrhart_polynomial(t) == reference_poly, name + ": Hilbert-Ehrhart polynomial differs");
      for (int n = 0; n <= max_n; ++n)
        for (int l = 1; l <= leaves; ++l)
          e.expect(relative_ehrhart(PointedTree(t, l), n) == reference[n],
                   name + ": relative sequence at leaf " + std::to_string(l) + " differs");
      const auto shape = shape_signature(t);
      if (leaves <= 6 || !shape_done[shape]) {
        shape_done[shape] = true;
        ++enumerated;
        for (int n = 0; n <= max_n; ++n) {
          const auto slow = relative_ehrhart_slow_all(t, n);
          for (int l = 1; l <= leaves; ++l)
            e.expect(slow[l - 1] == reference[n], name + ": enumerated sequence at leaf " + std::to_string(l) + " differs");
        }
      }
    }
  }
  // Star associativity and commutativity on all-ones and mixed inputs.
  for (int n = 0; n <= 12; ++n) {
    const auto one = SymmetricSequence::ones(n);
    std::vector<SymmetricSequence> powers{one};
    for (int r = 2; r <= 4; ++r) powers.push_back(star(one, powers.back()));
    for (std::size_t a = 0; a < powers.size(); ++a)
      for (std::size_t b = 0; b < powers.size(); ++b) {
        e.expect(star(powers[a], powers[b]) == star(powers[b], powers[a]), "star is not commutative");
        for (std::size_t c = 0; c < powers.size(); ++c)
          e.expect(star(star(powers[a], powers[b]), powers[c]) == star(powers[a], star(powers[b], powers[c])),
                   "star is not associative at n=" + std::to_string(n));
      }
  }
  return {e.ok(), e.summary("orbits of caterpillars with <= 7 leaves: " + std::to_string(trees_checked) + " trees agree (" +
                             std::to_string(enumerated) + " enumerated), star associative for n <= 12")};
}

Outcome volume() {
  Expectations e;
  const auto d2 = volume_distribution(2);
  e.expect(d2.piece == RationalPolynomial({Rational(0), Rational(6), Rational(-6)}), "delta^2 is " + d2.piece.to_string("t"));
  for (int r = 1; r <= 8; ++r)
    e.expect(volume_distribution(r).total_integral() == 1, "integral of delta^" + std::to_string(r) + " is not 1");
  double worst = 0;
  for (int r = 2; r <= 6; ++r) {
    const double dev = discrete_deviation(volume_distribution(r), 200);
    worst = std::max(worst, dev);
    e.expect(dev <= 0.05, "r=" + std::to_string(r) + " deviation " + std::to_string(dev));
  }

  const auto dir = std::filesystem::temp_directory_path() / ("phylotoric-accept-" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const auto files = write_volume_plot(dir / "volume", 100);
  const auto script = read_file(files.script);
  const auto csv = read_file(files.csv);
  e.expect(csv.rfind("t,delta2,delta100\n", 0) == 0, "CSV header");
  e.expect(script.find("\"volume.csv\"") != std::string::npos, "script does not plot the CSV");
  // Every quoted file name in the script is the CSV.
  for (std::size_t pos = script.find("plot"); (pos = script.find('"', pos)) != std::string::npos;) {
    const auto end = script.find('"', pos + 1);
    e.expect(script.substr(pos + 1, end - pos - 1) == "volume.csv", "script references another file");
    pos = end + 1;
  }
  std::filesystem::remove_all(dir);

  std::ostringstream s;
  s << "delta^2 = 6t(1-t), integrals 1 for r <= 8, max deviation " << worst << ", plot files written";
  return {e.ok(), e.summary(s.str())};
}

const char* title_of(int id) {
  static const char* titles[] = {"vertex counts",          "4-leaf golden data",   "star product closed forms",
                                 "Hilbert-Ehrhart polynomials", "oracle equivalence", "incidence matrices",
                                 "polarity",               "Gorenstein and terminality witnesses",
                                 "normality",              "mutation invariance",  "volume distribution"};
  return titles[id - 1];
}

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
  if (id < 1 || id > criterion_count) throw std::out_of_range("no acceptance criterion " + std::to_string(id));
  CriterionResult r;
  r.id = id;
  r.title = title_of(id);
  const auto start = Clock::now();
  try {
    Outcome o{false, ""};
    switch (id) {
      case 1: o = vertex_counts(); break;
      case 2: o = four_leaf_goldens(options); break;
      case 3: o = closed_forms(); break;
      case 4: o = hilbert_polynomials(); break;
      case 5: o = oracle_equivalence(); break;
      case 6: o = incidence_matrices(options); break;
      case 7: o = polarity(); break;
      case 8: o = gorenstein(); break;
      case 9: o = normality(); break;
      case 10: o = mutation_shadow(); break;
      case 11: o = volume(); break;
    }
    r.passed = o.passed;
    r.detail = o.detail;
  } catch (const std::exception& ex) {
    r.passed = false;
    r.detail = std::string("exception: ") + ex.what();
  }
  r.seconds = seconds_since(start);
  return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= criterion_count; ++id) out.push_back(run_criterion(id, options));
  return out;
}

}  // namespace phylotoric
