// cgk: chain graph essential-graph toolkit.
//
// Exit status: 0 success or true verdict, 1 false verdict, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "cgk/census.hpp"
#include "cgk/chain_graph.hpp"
#include "cgk/equivalence.hpp"
#include "cgk/error.hpp"
#include "cgk/io.hpp"
#include "cgk/patterns.hpp"
#include "cgk/validate.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw cgk::Error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

cgk::MixedGraph load(const std::string& path) {
  try {
    return cgk::parse_graph(read_input(path)).graph;
  } catch (const cgk::ParseError& e) {
    throw cgk::Error(path + ": " + e.what());
  }
}

std::string set_text(const cgk::MixedGraph& g, cgk::VertexSet s) {
  std::string out = "{";
  for (cgk::Vertex v : s) out += (out.size() > 1 ? "," : "") + g.label(v);
  return out + "}";
}

std::string triple_text(const cgk::MixedGraph& g, const cgk::ClassifiedTriple& t, const char* left,
                        const char* right) {
  return g.label(t.a) + left + g.label(t.b) + right + g.label(t.c);
}

std::string join_path(const cgk::MixedGraph& g, const std::vector<cgk::Vertex>& path) {
  std::string out;
  for (cgk::Vertex v : path) out += (out.empty() ? "" : " -- ") + g.label(v);
  return out;
}

int run_check(const std::string& file) {
  const cgk::MixedGraph g = load(file);
  if (!cgk::is_chain_graph(g)) {
    std::cout << "chain graph: no\n";
    for (const cgk::Arrow& a : g.arrows()) {
      if (cgk::arrow_on_semidirected_cycle(g, a)) {
        std::cout << "arrow on a semi-directed cycle: " << g.label(a.tail) << " -> " << g.label(a.head) << "\n";
      }
    }
    return kFalse;
  }
  std::cout << "chain graph: yes\n";
  for (const auto& comp : cgk::classify_chain_components(g)) {
    std::cout << "component " << set_text(g, comp.members) << ": " << cgk::to_string(comp.kind) << "\n";
  }
  return kOk;
}

int run_patterns(const std::string& file) {
  const cgk::MixedGraph g = load(file);
  for (const cgk::Triplex& t : cgk::find_triplexes(g)) {
    std::cout << "triplex ({" << g.label(t.a) << "," << g.label(t.c) << "}," << g.label(t.center) << ")\n";
  }
  for (const auto& t : cgk::find_immoralities(g)) std::cout << "immorality " << triple_text(g, t, " -> ", " <- ") << "\n";
  for (const auto& t : cgk::find_flags(g)) std::cout << "flag " << triple_text(g, t, " -> ", " -- ") << "\n";
  for (const auto& t : cgk::find_antiflags(g)) std::cout << "antiflag " << triple_text(g, t, " -- ", " <- ") << "\n";
  for (const auto& t : cgk::find_chordless_2dipaths(g)) {
    std::cout << "chordless 2-dipath " << triple_text(g, t, " -> ", " -> ") << "\n";
  }
  for (const auto& c : cgk::find_chordless_undirected_cycles(g)) {
    std::cout << "chordless cycle " << join_path(g, c) << " -- " << g.label(c.front()) << "\n";
  }
  for (const cgk::Biflag& b : cgk::find_biflags(g)) {
    std::cout << "biflag [" << g.label(b.first_parent);
    if (!b.single_parent()) std::cout << "," << g.label(b.second_parent);
    std::cout << "; " << join_path(g, b.spine) << "]\n";
  }
  return kOk;
}

int run_equiv(const std::string& f1, const std::string& f2) {
  const bool same = cgk::amp_equivalent(load(f1), load(f2));
  std::cout << (same ? "equivalent" : "not equivalent") << "\n";
  return same ? kOk : kFalse;
}

int run_class(const std::string& file, std::size_t cap) {
  const cgk::EquivalenceClass cls = cgk::enumerate_class(load(file), cap);
  std::cout << "# class size " << cls.members.size() << "\n";
  for (std::size_t i = 0; i < cls.members.size(); ++i) {
    std::cout << "\n# member " << i + 1 << "\n";
    const std::string text = cgk::render_graph(cls.members[i]);
    if (!text.empty()) std::cout << text << "\n";
  }
  return kOk;
}

int run_essential(const std::string& file, const std::string& format, std::size_t cap) {
  const cgk::GraphFormat fmt = cgk::graph_format_from_string(format);
  const cgk::StrengthLabeledGraph e = cgk::essential_graph(cgk::enumerate_class(load(file), cap));
  const std::string text = cgk::render_graph(e, fmt);
  if (!text.empty()) std::cout << text << "\n";
  return kOk;
}

int run_validate(const std::string& file) {
  const cgk::MixedGraph g = load(file);
  const cgk::ValidationVerdict v = cgk::validate_essential(g);
  std::cout << (v.is_essential ? "essential" : "not essential") << "\n";
  for (const auto& f : v.failures) std::cout << cgk::describe(g, f) << "\n";
  return v.is_essential ? kOk : kFalse;
}

int run_census(std::size_t n, std::size_t jobs, std::size_t cap, const std::string& format) {
  if (format != "csv" && format != "json") throw cgk::Error("unknown census format '" + format + "'");
  cgk::CensusOptions opts;
  opts.jobs = jobs;
  opts.cap = cap;
  const cgk::CensusReport r = cgk::census(n, opts);
  std::cout << (format == "csv" ? cgk::census_csv(r) : cgk::census_json(r) + "\n");
  return kOk;
}

int run_selftest(std::size_t n, std::size_t jobs, const std::vector<std::string>& names) {
  std::vector<cgk::Property> props;
  for (const auto& name : names) props.push_back(cgk::property_from_string(name));
  if (props.empty()) props = cgk::all_properties();
  const cgk::CrossValidationReport r = cgk::cross_validate(n, props, jobs);
  std::cout << "graphs checked: " << r.graphs_checked << "\nclasses checked: " << r.classes_checked << "\n";
  for (cgk::Property p : props) {
    std::size_t count = 0;
    for (const auto& v : r.violations) count += v.property == p;
    std::cout << (count ? "FAIL " : "ok   ") << cgk::to_string(p);
    if (count) std::cout << " (" << count << " violations)";
    std::cout << "\n";
  }
  constexpr std::size_t kShown = 10;
  for (std::size_t i = 0; i < r.violations.size() && i < kShown; ++i) {
    const auto& v = r.violations[i];
    std::cout << "\n[" << cgk::to_string(v.property) << "] " << v.detail << "\n" << v.graph << "\n";
  }
  return r.ok() ? kOk : kFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chain graph essential-graph toolkit"};
  app.require_subcommand(1);

  std::string file, file2, format = "text", census_format = "csv";
  std::size_t class_cap = cgk::kDefaultClassEdgeCap, n = 0, jobs = 1, census_cap = cgk::kDefaultCensusCap;
  std::vector<std::string> properties;

  auto* check = app.add_subcommand("check", "Chain-graph test and component classes");
  check->add_option("file", file, "Graph file, '-' for stdin")->required();
  auto* patterns = app.add_subcommand("patterns", "Triplexes, flags, chordless cycles, biflags");
  patterns->add_option("file", file, "Graph file, '-' for stdin")->required();
  auto* equiv = app.add_subcommand("equiv", "Markov equivalence of two chain graphs");
  equiv->add_option("file1", file)->required();
  equiv->add_option("file2", file2)->required();
  auto* cls = app.add_subcommand("class", "Enumerate the equivalence class");
  cls->add_option("file", file, "Graph file, '-' for stdin")->required();
  cls->add_option("--cap", class_cap, "Maximum skeleton edges")->capture_default_str();
  auto* essential = app.add_subcommand("essential", "Essential graph with edge strengths");
  essential->add_option("file", file, "Graph file, '-' for stdin")->required();
  essential->add_option("--format", format, "text, dot or json")
      ->check(CLI::IsMember({"text", "dot", "json"}))
      ->capture_default_str();
  essential->add_option("--cap", class_cap, "Maximum skeleton edges")->capture_default_str();
  auto* validate = app.add_subcommand("validate", "Decide whether a graph is an essential graph");
  validate->add_option("file", file, "Graph file, '-' for stdin")->required();
  auto* census = app.add_subcommand("census", "Count chain graphs and classes on N labeled vertices");
  census->add_option("n", n)->required();
  census->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  census->add_option("--format", census_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  census->add_option("--cap", census_cap, "Largest N accepted")->capture_default_str();
  auto* selftest = app.add_subcommand("selftest", "Cross-validate invariants on N vertices");
  selftest->add_option("n", n)->required();
  selftest->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  selftest->add_option("--property", properties, "Restrict to the named suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*check) return run_check(file);
    if (*patterns) return run_patterns(file);
    if (*equiv) return run_equiv(file, file2);
    if (*cls) return run_class(file, class_cap);
    if (*essential) return run_essential(file, format, class_cap);
    if (*validate) return run_validate(file);
    if (*census) return run_census(n, jobs, census_cap, census_format);
    if (*selftest) return run_selftest(n, jobs, properties);
  } catch (const cgk::Error& e) {
    std::cerr << "cgk: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
