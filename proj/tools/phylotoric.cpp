// phylotoric: command-line front end.
// Exit status: 0 success, 1 failed verification, 2 usage or input error.

#include "phylotoric/acceptance.hpp"
#include "phylotoric/dual.hpp"
#include "phylotoric/ehrhart.hpp"
#include "phylotoric/face_lattice.hpp"
#include "phylotoric/polytope.hpp"
#include "phylotoric/toric_ideal.hpp"
#include "phylotoric/tree.hpp"
#include "phylotoric/volume_plot.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using namespace phylotoric;
using nlohmann::json;

enum class Format { human, json, csv };

struct Options {
  std::string tree;
  int n = 3;
  int leaf = 1;
  int r = 100;
  int trials = 20;
  Format format = Format::human;
  std::uint64_t seed = default_seed;
  std::string out;
};

// Input errors that map to exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  std::ostringstream text;
  bool ok = true;
};

Tree load_tree(const Options& o) {
  if (o.tree.empty()) throw UsageError("--tree is required");
  try {
    return parse_tree(o.tree);
  } catch (const TreeError& e) {
    throw UsageError(std::string("invalid tree: ") + e.what());
  }
}

json to_json(const LatticeVector& v) { return json(v.coords()); }

std::string half(std::int64_t doubled) { return to_string(Rational(doubled, 2)); }

std::string halved(const LatticeVector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + half(v[i]);
  return s + "]";
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string s;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto& c = cells[i];
    const bool quote = c.find_first_of(",\"\n") != std::string::npos;
    std::string cell = c;
    if (quote) {
      cell.clear();
      for (char ch : c) cell += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      cell = "\"" + cell + "\"";
    }
    s += (i ? "," : "") + cell;
  }
  return s + "\n";
}

std::vector<std::string> cells_of(const LatticeVector& v) {
  std::vector<std::string> out;
  for (auto c : v) out.push_back(std::to_string(c));
  return out;
}

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::string socket_name(const Tree& t, const LatticeVector& v) {
  std::vector<bool> bits(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) bits[i] = v[i] != 0;
  return socket_of(t, Network(std::move(bits))).to_string();
}

void emit_json(Output& out, const json& j) { out.text << j.dump(2) << "\n"; }

// Key/value records rendered in all three formats.
void emit_record(Output& out, Format f, const std::vector<std::pair<std::string, json>>& fields) {
  if (f == Format::json) {
    json j = json::object();
    for (const auto& [k, v] : fields) j[k] = v;
    emit_json(out, j);
    return;
  }
  if (f == Format::csv) out.text << csv_row({"key", "value"});
  for (const auto& [k, v] : fields) {
    const std::string value = v.is_string() ? v.get<std::string>() : v.dump();
    if (f == Format::csv)
      out.text << csv_row({k, value});
    else
      out.text << std::left << std::setw(16) << (k + ":") << value << "\n";
  }
}

void cmd_describe(const Options& o, Output& out) {
  const Tree t = load_tree(o);
  std::vector<std::pair<std::string, json>> fields{{"canonical_form", canonical_form(t)},
                                                   {"leaves", t.leaf_count()},
                                                   {"edges", t.edge_count()},
                                                   {"inner_nodes", t.inner_count()},
                                                   {"inner_edges", t.inner_edges().size()},
                                                   {"caterpillar", t.is_caterpillar()},
                                                   {"shape", shape_signature(t)}};
  if (t.is_trivalent()) {
    const auto p = polytope_of(t);
    fields.emplace_back("vertices", p.vertices.size());
    fields.emplace_back("dimension", p.dim());
  }
  emit_record(out, o.format, fields);
}

void cmd_polytope(const Options& o, Output& out) {
  const Tree t = load_tree(o);
  const auto p = polytope_of(t);
  if (o.format == Format::json) {
    json vertices = json::array(), facets = json::array();
    for (const auto& v : p.vertices) vertices.push_back({{"socket", socket_name(t, v)}, {"vertex", to_json(v)}});
    for (const auto& f : p.facets) facets.push_back({{"normal", to_json(f.normal)}, {"offset", f.offset}});
    emit_json(out, {{"tree", canonical_form(t)},
                    {"dimension", p.dim()},
                    {"vertices", vertices},
                    {"facets", facets},
                    {"facet_convention", "normal . x >= offset"}});
    return;
  }
  if (o.format == Format::csv) {
    std::vector<std::string> header{"kind", "socket", "offset"};
    for (int e = 0; e < t.edge_count(); ++e) header.push_back("e" + std::to_string(e));
    out.text << csv_row(header);
    for (const auto& v : p.vertices) out.text << csv_row(concat({"vertex", socket_name(t, v), ""}, cells_of(v)));
    for (const auto& f : p.facets) out.text << csv_row(concat({"facet", "", std::to_string(f.offset)}, cells_of(f.normal)));
    return;
  }
  out.text << "tree " << canonical_form(t) << ", dimension " << p.dim() << "\n";
  out.text << "vertices (" << p.vertices.size() << "), socket and edge coordinates:\n";
  for (const auto& v : p.vertices) out.text << "  " << socket_name(t, v) << "  " << v.to_string() << "\n";
  out.text << "facets (" << p.facets.size() << "), normal . x >= offset:\n";
  for (const auto& f : p.facets) out.text << "  " << f.normal.to_string() << " . x >= " << f.offset << "\n";
}

void cmd_faces(const Options& o, Output& out) {
  const Tree t = load_tree(o);
  const auto m = face_lattice(polytope_of(t));
  if (o.format == Format::json) {
    emit_json(out, {{"tree", canonical_form(t)}, {"f_vector", m.f_vector()}, {"incidence", m.entries}});
    return;
  }
  if (o.format == Format::csv) {
    for (const auto& row : m.entries) out.text << csv_row(cells_of(LatticeVector(row)));
    return;
  }
  std::size_t width = 1;
  for (const auto& row : m.entries)
    for (auto x : row) width = std::max(width, std::to_string(x).size());
  for (const auto& row : m.entries) {
    for (std::size_t j = 0; j < row.size(); ++j) out.text << (j ? " " : "") << std::setw(static_cast<int>(width)) << row[j];
    out.text << "\n";
  }
}

void cmd_dual(const Options& o, Output& out) {
  const Tree t = load_tree(o);
  auto dual = dual_polytope(t);
  std::sort(dual.begin(), dual.end());
  const auto report = polarity_check(t);
  out.ok = report.ok();
  if (o.format == Format::json) {
    json pts = json::array();
    for (const auto& w : dual) pts.push_back(to_json(w));
    emit_json(out, {{"tree", canonical_form(t)},
                    {"scale", 2},
                    {"vertices_doubled", pts},
                    {"polarity", {{"polar_matches_dual", report.polar_matches_dual},
                                  {"facets_match_model", report.facets_match_model}}}});
    return;
  }
  if (o.format == Format::csv) {
    std::vector<std::string> header;
    for (int e = 0; e < t.edge_count(); ++e) header.push_back("e" + std::to_string(e));
    out.text << csv_row(header);
    for (const auto& w : dual) {
      std::vector<std::string> row;
      for (auto c : w) row.push_back(half(c));
      out.text << csv_row(row);
    }
    return;
  }
  out.text << "dual polytope of " << canonical_form(t) << ", " << dual.size() << " vertices:\n";
  for (const auto& w : dual) out.text << "  " << halved(w) << "\n";
  out.text << "polarity: " << (report.ok() ? "verified" : "FAILED") << " (polar vertices "
           << (report.polar_matches_dual ? "match" : "differ") << ", dual facets "
           << (report.facets_match_model ? "match" : "differ") << " the model vertices)\n";
}

void cmd_ideal(const Options& o, Output& out) {
  const Tree t = load_tree(o);
  if (o.trials < 1) throw UsageError("--trials must be positive");
  const auto p = polytope_of(t);
  const auto relations = quadratic_relations(p);
  const bool vanishes = relations.empty() || vanishing_check(t, relations, o.trials, o.seed);
  out.ok = vanishes;

  std::vector<std::string> sockets;
  for (const auto& v : p.vertices) sockets.push_back(socket_name(t, v));
  std::sort(sockets.begin(), sockets.end());
  auto index_of = [&](const std::string& s) {
    return std::lower_bound(sockets.begin(), sockets.end(), s) - sockets.begin();
  };

  if (o.format == Format::json) {
    json rels = json::array();
    for (const auto& r : relations) {
      auto l = socket_names(t, r.left), rr = socket_names(t, r.right);
      if (rr < l) std::swap(l, rr);
      rels.push_back({{"equation", render(t, r)},
                      {"sockets", {index_of(l[0]), index_of(l[1]), index_of(rr[0]), index_of(rr[1])}}});
    }
    emit_json(out, {{"tree", canonical_form(t)},
                    {"description", "quadratic part of the ideal"},
                    {"generator_degree_bound", "open"},
                    {"socket_index", sockets},
                    {"relations", rels},
                    {"vanishing_check", {{"trials", o.trials}, {"seed", o.seed}, {"passed", vanishes}}}});
    return;
  }
  if (o.format == Format::csv) {
    out.text << csv_row({"equation"});
    for (const auto& r : relations) out.text << csv_row({render(t, r)});
    return;
  }
  out.text << "quadratic part of the ideal of " << canonical_form(t) << " (" << relations.size() << " relations):\n";
  for (const auto& r : relations) out.text << "  " << render(t, r) << "\n";
  out.text << "vanishing check (" << o.trials << " trials, seed " << o.seed << "): " << (vanishes ? "passed" : "FAILED")
           << "\n";
}

void cmd_ehrhart(const Options& o, Output& out) {
  const Tree t = load_tree(o);
  if (o.n < 0) throw UsageError("--n must be non-negative");
  if (o.leaf < 1 || o.leaf > t.leaf_count()) throw UsageError("--leaf must name a leaf of the tree");
  const auto h = hilbert_ehrhart_polynomial(t);
  const auto rel = relative_ehrhart(PointedTree(t, o.leaf), o.n);
  std::vector<std::string> values;
  for (const auto& v : rel.values()) values.push_back(v.str());
  const std::string volume = to_string(normalized_volume(t));

  if (o.format == Format::json) {
    json coeffs = json::array();
    for (const auto& c : h.coefficients()) coeffs.push_back(to_string(c));
    emit_json(out, {{"tree", canonical_form(t)},
                    {"polynomial", h.factored()},
                    {"coefficients", coeffs},
                    {"normalized_volume", volume},
                    {"relative", {{"leaf", o.leaf}, {"n", o.n}, {"values", values}, {"sum", rel.sum().str()}}}});
    return;
  }
  if (o.format == Format::csv) {
    out.text << csv_row({"k", "count"});
    for (std::size_t k = 0; k < values.size(); ++k) out.text << csv_row({std::to_string(k), values[k]});
    return;
  }
  out.text << "h(n) = " << h.factored() << "\n";
  out.text << "     = " << h.to_string() << "\n";
  out.text << "normalized volume: " << volume << "\n";
  out.text << "relative Ehrhart sequence at leaf " << o.leaf << ", n = " << o.n << ":";
  for (const auto& v : values) out.text << " " << v;
  out.text << "\nh(" << o.n << ") = " << rel.sum().str() << "\n";
}

void cmd_volume(const Options& o, Output& out) {
  if (o.r < 2) throw UsageError("--r must be at least 2");
  const std::string stem = o.out.empty() ? "volume" : o.out;
  const auto files = write_volume_plot(stem, o.r);
  const auto d2 = volume_distribution(2);
  if (o.format == Format::json) {
    emit_json(out, {{"delta2", d2.piece.to_string("t")},
                    {"r", o.r},
                    {"csv", files.csv.string()},
                    {"script", files.script.string()}});
    return;
  }
  out.text << "delta^2(t) = " << d2.piece.to_string("t") << " on [0,1/2], symmetric about 1/2\n";
  out.text << "wrote " << files.csv.string() << " (t, delta2, delta" << o.r << ")\n";
  out.text << "wrote " << files.script.string() << "\n";
}

void cmd_mutate(const Options& o, Output& out) {
  const Tree t = load_tree(o);
  json mutations = json::array();
  for (EdgeId e : t.inner_edges()) {
    const auto results = elementary_mutations(t, e);
    for (std::size_t c = 0; c < results.size(); ++c)
      mutations.push_back({{"edge", e}, {"choice", c}, {"tree", canonical_form(results[c].tree)}});
  }
  const auto path = mutation_path_to_caterpillar(t);
  json steps = json::array();
  Tree current = t;
  for (const auto& s : path) {
    current = mutate(current, s.edge, s.choice).tree;
    steps.push_back({{"edge", s.edge}, {"choice", s.choice}, {"tree", canonical_form(current)}});
  }

  if (o.format == Format::json) {
    emit_json(out, {{"tree", canonical_form(t)}, {"mutations", mutations}, {"path_to_caterpillar", steps}});
    return;
  }
  if (o.format == Format::csv) {
    out.text << csv_row({"kind", "step", "edge", "choice", "tree"});
    for (const auto& m : mutations)
      out.text << csv_row({"mutation", "", m["edge"].dump(), m["choice"].dump(), m["tree"].get<std::string>()});
    for (std::size_t i = 0; i < steps.size(); ++i)
      out.text << csv_row({"path", std::to_string(i + 1), steps[i]["edge"].dump(), steps[i]["choice"].dump(),
                           steps[i]["tree"].get<std::string>()});
    return;
  }
  out.text << "elementary mutations of " << canonical_form(t) << ":\n";
  if (mutations.empty()) out.text << "  none (no inner edge)\n";
  for (const auto& m : mutations)
    out.text << "  edge " << m["edge"] << " choice " << m["choice"] << ": " << m["tree"].get<std::string>() << "\n";
  out.text << "path to a caterpillar (" << steps.size() << " steps):\n";
  for (const auto& s : steps)
    out.text << "  edge " << s["edge"] << " choice " << s["choice"] << " -> " << s["tree"].get<std::string>() << "\n";
}

void cmd_verify(const Options& o, Output& out) {
  AcceptanceOptions options;
  options.seed = o.seed;
  std::vector<CriterionResult> results;
  for (int id = 1; id <= criterion_count; ++id) {
    results.push_back(run_criterion(id, options));
    out.ok = out.ok && results.back().passed;
  }
  if (o.format == Format::json) {
    json rows = json::array();
    for (const auto& r : results)
      rows.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
    emit_json(out, {{"criteria", rows}, {"passed", out.ok}});
    return;
  }
  if (o.format == Format::csv) {
    out.text << csv_row({"id", "title", "passed", "detail"});
    for (const auto& r : results) out.text << csv_row({std::to_string(r.id), r.title, r.passed ? "true" : "false", r.detail});
    return;
  }
  int passed = 0;
  for (const auto& r : results) {
    passed += r.passed;
    out.text << (r.passed ? "PASS" : "FAIL") << "  " << std::setw(2) << r.id << "  " << std::left << std::setw(38) << r.title
             << std::right << std::fixed << std::setprecision(2) << std::setw(7) << r.seconds << "s  " << r.detail << "\n";
  }
  out.text << passed << "/" << results.size() << " criteria passed\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice polytopes, toric ideals and Ehrhart data of 3-valent phylogenetic trees"};
  app.require_subcommand(1);
  Options o;
  const std::map<std::string, Format> formats{{"human", Format::human}, {"json", Format::json}, {"csv", Format::csv}};

  auto add_common = [&](CLI::App* sub, bool needs_tree) {
    auto* tree = sub->add_option("--tree", o.tree, "Newick string, edge list, or generator (star:d, caterpillar:k, snowflake)");
    if (needs_tree) tree->required();
    sub->add_option("--format", o.format, "Output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--seed", o.seed, "Random seed")->capture_default_str();
    sub->add_option("--out", o.out, "Write output to this file (volume-dist: file stem)");
  };

  struct Command {
    const char* name;
    const char* help;
    void (*run)(const Options&, Output&);
    bool needs_tree;
  };
  const std::vector<Command> commands{
      {"describe", "Tree statistics and canonical form", cmd_describe, true},
      {"polytope", "Vertices, sockets and facets", cmd_polytope, true},
      {"faces", "Face incidence matrix", cmd_faces, true},
      {"dual", "Dual polytope and polarity check", cmd_dual, true},
      {"ideal", "Quadratic relations and vanishing check", cmd_ideal, true},
      {"ehrhart", "Hilbert-Ehrhart polynomial and relative sequence", cmd_ehrhart, true},
      {"volume-dist", "CSV and gnuplot script for the volume distributions", cmd_volume, false},
      {"mutate", "Elementary mutations and a path to a caterpillar", cmd_mutate, true},
      {"verify", "Run the acceptance suite", cmd_verify, false},
  };
  std::map<CLI::App*, const Command*> dispatch;
  for (const auto& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    add_common(sub, c.needs_tree);
    dispatch[sub] = &c;
  }
  for (auto* sub : app.get_subcommands({})) {
    const std::string name = sub->get_name();
    if (name == "ehrhart") {
      sub->add_option("--n", o.n, "Dilation for the relative sequence")->capture_default_str();
      sub->add_option("--leaf", o.leaf, "Pointed leaf label")->capture_default_str();
    } else if (name == "volume-dist") {
      sub->add_option("--r", o.r, "Order of the high distribution")->capture_default_str();
    } else if (name == "ideal") {
      sub->add_option("--trials", o.trials, "Random evaluations in the vanishing check")->capture_default_str();
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const Command* cmd = nullptr;
  for (auto* sub : app.get_subcommands()) cmd = dispatch.at(sub);

  Output out;
  try {
    cmd->run(o, out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const TreeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }

  const bool to_file = !o.out.empty() && std::string(cmd->name) != "volume-dist";
  if (to_file) {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << o.out << "\n";
      return 2;
    }
    f << out.text.str();
  } else {
    std::cout << out.text.str();
  }
  return out.ok ? 0 : 1;
}
