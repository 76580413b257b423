#include "cgk/census.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <tuple>

#include "cgk/chain_graph.hpp"
#include "cgk/equivalence.hpp"
#include "cgk/error.hpp"
#include "cgk/io.hpp"
#include "cgk/patterns.hpp"
#include "cgk/validate.hpp"
#include "parallel.hpp"

namespace cgk {

namespace {

void check_census_cap(std::size_t n, std::size_t cap) {
  if (n > cap || n > kMaxCensusVertices) {
    throw CapExceeded("census on " + std::to_string(n) + " vertices refused; cap is " +
                      std::to_string(std::min(cap, kMaxCensusVertices)));
  }
}

std::uint64_t candidate_count(std::size_t n, std::size_t base) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < pair_count(n); ++i) total *= base;
  return total;
}

std::size_t pair_index(std::size_t n, Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return u * n - u * (u + 1) / 2 + (v - u - 1);
}

void decode_into(std::uint64_t index, std::size_t base, std::vector<EdgeState>& states) {
  for (std::size_t p = states.size(); p-- > 0;) {
    states[p] = static_cast<EdgeState>(index % base);
    index /= base;
  }
}

std::uint64_t encode(const MixedGraph& g) {
  std::uint64_t index = 0;
  for (EdgeState s : g.pair_states()) index = index * 4 + static_cast<std::uint64_t>(s);
  return index;
}

// Skeleton bits, then triplex bits: pair index of the ends times n plus the
// center. 15 * 6 = 90 triplex slots at most.
using ClassKey = std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>;

ClassKey class_key(const MixedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::uint64_t skel = 0;
  std::array<std::uint64_t, 2> trip{0, 0};
  const auto states = g.pair_states();
  for (std::size_t p = 0; p < states.size(); ++p) {
    if (states[p] != EdgeState::Absent) skel |= std::uint64_t{1} << p;
  }
  for (const Triplex& t : find_triplexes(g)) {
    const std::size_t bit = pair_index(n, t.a, t.c) * n + t.center;
    trip[bit / 64] |= std::uint64_t{1} << (bit % 64);
  }
  return {skel, trip[0], trip[1]};
}

}  // namespace

MixedGraph decode_candidate(std::size_t n, std::uint64_t index) {
  if (n > kMaxCensusVertices) throw CapExceeded("candidate decoding is limited to small vertex counts");
  if (index >= candidate_count(n, 4)) throw Error("candidate index out of range");
  std::vector<EdgeState> states(pair_count(n));
  decode_into(index, 4, states);
  return MixedGraph::from_pair_states(MixedGraph(numbered_labels(n)), states);
}

void for_each_chain_graph(std::size_t n, const std::function<void(const MixedGraph&)>& visit, std::size_t cap) {
  check_census_cap(n, cap);
  const MixedGraph base(numbered_labels(n));
  std::vector<EdgeState> states(pair_count(n));
  const std::uint64_t total = candidate_count(n, 4);
  for (std::uint64_t k = 0; k < total; ++k) {
    decode_into(k, 4, states);
    const MixedGraph g = MixedGraph::from_pair_states(base, states);
    if (is_chain_graph(g)) visit(g);
  }
}

std::vector<MixedGraph> enumerate_chain_graphs(std::size_t n, std::size_t cap) {
  std::vector<MixedGraph> out;
  for_each_chain_graph(n, [&](const MixedGraph& g) { out.push_back(g); }, cap);
  return out;
}

std::vector<CensusClass> partition_chain_graphs(std::size_t n, const CensusOptions& options) {
  check_census_cap(n, options.cap);
  const MixedGraph base(numbered_labels(n));
  using Entry = std::pair<ClassKey, std::uint64_t>;
  auto parts = detail::parallel_ranges<std::vector<Entry>>(
      candidate_count(n, 4), options.jobs, [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<Entry> found;
        std::vector<EdgeState> states(pair_count(n));
        for (std::uint64_t k = lo; k < hi; ++k) {
          decode_into(k, 4, states);
          const MixedGraph g = MixedGraph::from_pair_states(base, states);
          if (is_chain_graph(g)) found.emplace_back(class_key(g), k);
        }
        return found;
      });
  std::vector<Entry> all;
  for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  std::sort(all.begin(), all.end());
  std::vector<CensusClass> classes;
  for (std::size_t i = 0; i < all.size();) {
    CensusClass c;
    std::size_t j = i;
    for (; j < all.size() && std::get<0>(all[j]) == std::get<0>(all[i]); ++j) c.members.push_back(all[j].second);
    classes.push_back(std::move(c));
    i = j;
  }
  std::sort(classes.begin(), classes.end(),
            [](const CensusClass& x, const CensusClass& y) { return x.members.front() < y.members.front(); });
  return classes;
}

CensusReport census(std::size_t n, const CensusOptions& options) {
  const std::vector<CensusClass> classes = partition_chain_graphs(n, options);
  if (options.verify_classes) {
    detail::parallel_ranges<int>(classes.size(), options.jobs, [&](std::uint64_t lo, std::uint64_t hi) {
      for (std::uint64_t i = lo; i < hi; ++i) {
        const CensusClass& c = classes[i];
        const EquivalenceClass cls = enumerate_class(decode_candidate(n, c.members.front()), pair_count(n));
        std::vector<std::uint64_t> derived;
        for (const MixedGraph& m : cls.members) derived.push_back(encode(m));
        std::sort(derived.begin(), derived.end());
        if (derived != c.members) {
          throw Error("census class of candidate " + std::to_string(c.members.front()) +
                      " disagrees with brute-force class enumeration");
        }
      }
      return 0;
    });
  }
  CensusReport r;
  r.n = n;
  r.total_classes = classes.size();
  for (const CensusClass& c : classes) {
    r.total_cgs += c.members.size();
    ++r.class_size_histogram[c.members.size()];
  }
  const std::uint64_t g = std::gcd(r.total_classes, r.total_cgs);
  r.ratio_num = r.total_classes / g;
  r.ratio_den = r.total_cgs / g;
  return r;
}

std::vector<Property> all_properties() {
  return {Property::ProtectionMatchesIrreversibility,
          Property::ClosurePropertiesAgree,
          Property::ValidatorAcceptsEssentials,
          Property::ValidatorAcceptsOnlyEssentials,
          Property::ComponentDichotomy,
          Property::ArrowsWellProtected,
          Property::StrongClosureHolds,
          Property::AdgCriterion,
          Property::FlagsStrong,
          Property::BiflagAndCycleStrength,
          Property::WeakLineBlocks,
          Property::ReducedGraphClean,
          Property::EssentialInClass,
          Property::DirectedValidatorAgrees};
}

namespace {

constexpr std::pair<Property, const char*> kPropertyNames[] = {
    {Property::ProtectionMatchesIrreversibility, "protection-matches-irreversibility"},
    {Property::ClosurePropertiesAgree, "closure-properties-agree"},
    {Property::ValidatorAcceptsEssentials, "validator-accepts-essentials"},
    {Property::ValidatorAcceptsOnlyEssentials, "validator-accepts-only-essentials"},
    {Property::ComponentDichotomy, "component-dichotomy"},
    {Property::ArrowsWellProtected, "arrows-well-protected"},
    {Property::StrongClosureHolds, "strong-closure-holds"},
    {Property::AdgCriterion, "adg-criterion"},
    {Property::FlagsStrong, "flags-strong"},
    {Property::BiflagAndCycleStrength, "biflag-and-cycle-strength"},
    {Property::WeakLineBlocks, "weak-line-blocks"},
    {Property::ReducedGraphClean, "reduced-graph-clean"},
    {Property::EssentialInClass, "essential-in-class"},
    {Property::DirectedValidatorAgrees, "directed-validator-agrees"},
};

}  // namespace

std::string to_string(Property p) {
  for (const auto& [prop, name] : kPropertyNames) {
    if (prop == p) return name;
  }
  return "?";
}

Property property_from_string(const std::string& name) {
  for (const auto& [prop, n] : kPropertyNames) {
    if (name == n) return prop;
  }
  throw Error("unknown property '" + name + "'");
}

namespace {

std::string arrow_text(const MixedGraph& g, Arrow a) { return g.label(a.tail) + " -> " + g.label(a.head); }

// Per-graph suites, run on every chain graph.
void check_graph(const MixedGraph& g, const std::set<Property>& props, std::vector<Violation>& out) {
  auto report = [&](Property p, std::string detail) { out.push_back({p, render_graph(g), std::move(detail)}); };
  if (props.contains(Property::ProtectionMatchesIrreversibility)) {
    for (const Arrow& a : g.arrows()) {
      const bool prot = is_protected_arrow(g, a), irr = is_irreversible_arrow(g, a);
      if (prot != irr) {
        report(Property::ProtectionMatchesIrreversibility,
               "arrow " + arrow_text(g, a) + (prot ? " protected but reversible" : " irreversible but unprotected"));
      }
    }
  }
  if (props.contains(Property::ClosurePropertiesAgree)) {
    for (VertexSet block : chain_components(g).blocks) {
      if (block.size() < 2) continue;
      const bool s = property_s(g, block).holds, s_prime = property_s_prime(g, block).holds;
      if (s != s_prime) {
        report(Property::ClosurePropertiesAgree, std::string("property over complete sets ") +
                                                      (s ? "holds" : "fails") + ", over connected sets " +
                                                      (s_prime ? "holds" : "fails"));
      }
    }
  }
}

std::vector<VertexSet> strong_line_masks(const StrengthLabeledGraph& e) {
  std::vector<VertexSet> masks(e.graph.vertex_count());
  for (const auto& [pair, s] : e.strength) {
    if (s != EdgeStrength::StrongLine) continue;
    masks[pair.first].insert(pair.second);
    masks[pair.second].insert(pair.first);
  }
  return masks;
}

// Per-class suites, run on the essential graph of each class.
void check_class(std::size_t n, const CensusClass& cc, const std::set<Property>& props, std::vector<Violation>& out) {
  EquivalenceClass cls;
  for (std::uint64_t k : cc.members) cls.members.push_back(decode_candidate(n, k));
  const StrengthLabeledGraph e = essential_graph(cls);
  const MixedGraph& eg = e.graph;
  const std::string text = render_graph(e);
  auto report = [&](Property p, std::string detail) { out.push_back({p, text, std::move(detail)}); };

  if (props.contains(Property::ValidatorAcceptsEssentials)) {
    const ValidationVerdict v = validate_essential(eg);
    if (!v.is_essential) report(Property::ValidatorAcceptsEssentials, describe(eg, v.failures.front()));
  }
  if (props.contains(Property::EssentialInClass)) {
    if (!is_chain_graph(eg)) {
      report(Property::EssentialInClass, "essential graph is not a chain graph");
    } else {
      const EquivalenceClass again = enumerate_class(eg, pair_count(n));
      std::vector<std::uint64_t> idx;
      for (const MixedGraph& m : again.members) idx.push_back(encode(m));
      std::sort(idx.begin(), idx.end());
      if (idx != cc.members) report(Property::EssentialInClass, "class of the essential graph differs");
    }
  }
  const bool is_cg = is_chain_graph(eg);
  if (!is_cg) return;  // reported above when requested; the rest needs a chain graph

  const auto components = classify_chain_components(eg);
  if (props.contains(Property::ComponentDichotomy)) {
    for (const auto& comp : components) {
      if (comp.kind == ComponentClass::Trivial) continue;
      bool any_strong = false, any_weak = false;
      for (Vertex u : comp.members) {
        for (Vertex v : eg.neighbors(u)) (e.strength_of(u, v) == EdgeStrength::StrongLine ? any_strong : any_weak) = true;
      }
      if (any_strong && any_weak) report(Property::ComponentDichotomy, "component mixes strong and weak lines");
      const bool intrinsic_strong = comp.kind == ComponentClass::Strong;
      if (intrinsic_strong != any_strong) {
        report(Property::ComponentDichotomy, std::string("component classified ") + to_string(comp.kind) +
                                                 " but its lines are " + (any_strong ? "strong" : "weak"));
      }
    }
  }
  if (props.contains(Property::ArrowsWellProtected)) {
    const StrongLines derived(strong_line_masks(e));
    for (const Arrow& a : eg.arrows()) {
      if (!is_well_protected_arrow(eg, a, derived)) {
        report(Property::ArrowsWellProtected, "arrow " + arrow_text(eg, a) + " is not well protected");
      }
    }
  }
  if (props.contains(Property::StrongClosureHolds)) {
    for (const auto& comp : components) {
      if (comp.kind == ComponentClass::Strong && !property_s(eg, comp.members).holds) {
        report(Property::StrongClosureHolds, "strong component fails the closure property");
      }
    }
  }
  if (props.contains(Property::AdgCriterion)) {
    bool all_chordal = true;
    for (const auto& comp : components) all_chordal = all_chordal && lines_chordal(eg, comp.members);
    const bool predicted = all_chordal && find_biflags(eg, 1).empty();
    const std::optional<MixedGraph> adg = class_contains_adg(cls);
    if (predicted != adg.has_value()) {
      report(Property::AdgCriterion, std::string("criterion predicts ") + (predicted ? "an" : "no") +
                                         " acyclic directed member, class has " + (adg ? "one" : "none"));
    } else if (adg && !(adg_essential_graph(*adg, pair_count(n)).graph == eg)) {
      report(Property::AdgCriterion, "essential graph differs from the directed essential graph");
    }
  }
  if (props.contains(Property::FlagsStrong)) {
    for (const ClassifiedTriple& f : find_flags(eg)) {
      const std::string flag = eg.label(f.a) + " -> " + eg.label(f.b) + " -- " + eg.label(f.c);
      if (e.strength_of(f.b, f.c) != EdgeStrength::StrongLine) report(Property::FlagsStrong, "flag " + flag + ": line is weak");
      if (e.strength_of(f.a, f.b) != EdgeStrength::StrongArrow) report(Property::FlagsStrong, "flag " + flag + ": arrow is weak");
      for (const MixedGraph& m : cls.members) {
        if (!m.has_arrow(f.a, f.b) || !m.has_line(f.b, f.c)) {
          report(Property::FlagsStrong, "flag " + flag + " missing from a class member");
          break;
        }
      }
    }
  }
  if (props.contains(Property::BiflagAndCycleStrength)) {
    auto check_path = [&](const std::vector<Vertex>& path, bool closed, const char* what) {
      for (std::size_t i = 0; i + (closed ? 0 : 1) < path.size(); ++i) {
        const Vertex u = path[i], v = path[(i + 1) % path.size()];
        if (e.strength_of(u, v) != EdgeStrength::StrongLine) {
          report(Property::BiflagAndCycleStrength,
                 std::string(what) + " line " + eg.label(u) + " -- " + eg.label(v) + " is weak");
        }
      }
    };
    for (const auto& cycle : find_chordless_undirected_cycles(eg)) check_path(cycle, true, "chordless cycle");
    for (const Biflag& b : find_biflags(eg)) {
      check_path(b.spine, false, "biflag");
      for (Vertex c : b.spine) {
        for (Vertex p : {b.first_parent, b.second_parent}) {
          if (eg.has_arrow(p, c) && e.strength_of(p, c) != EdgeStrength::StrongArrow) {
            report(Property::BiflagAndCycleStrength, "biflag arrow " + eg.label(p) + " -> " + eg.label(c) + " is weak");
          }
        }
      }
    }
  }
  const StrongEquivalencePartition sigma = strong_equivalence_classes(e);
  if (props.contains(Property::WeakLineBlocks)) {
    for (const auto& [pair, s] : e.strength) {
      if (s != EdgeStrength::WeakLine) continue;
      const VertexSet x = sigma.blocks[sigma.block_of[pair.first]], y = sigma.blocks[sigma.block_of[pair.second]];
      bool ok = is_complete(eg, x) && is_complete(eg, y);
      for (Vertex a : x) {
        for (Vertex b : y) ok = ok && eg.has_line(a, b) && e.strength_of(a, b) == EdgeStrength::WeakLine;
      }
      if (!ok) {
        report(Property::WeakLineBlocks, "weak line " + eg.label(pair.first) + " -- " + eg.label(pair.second) +
                                             " does not join two complete, fully weakly joined blocks");
      }
    }
  }
  if (props.contains(Property::ReducedGraphClean)) {
    try {
      const MixedGraph r = reduced_graph(e, sigma);
      if (!is_chain_graph(r)) {
        report(Property::ReducedGraphClean, "reduced graph has a semi-directed cycle");
      } else if (!find_flags(r).empty()) {
        report(Property::ReducedGraphClean, "reduced graph has a flag");
      } else if (!find_chordless_undirected_cycles(r, 1).empty()) {
        report(Property::ReducedGraphClean, "reduced graph has a chordless undirected cycle");
      }
    } catch (const GraphError& err) {
      report(Property::ReducedGraphClean, err.what());
    }
  }
}

}  // namespace

CrossValidationReport cross_validate(std::size_t n, const std::vector<Property>& properties, std::size_t jobs) {
  check_census_cap(n, kDefaultCensusCap);
  const std::set<Property> props(properties.begin(), properties.end());
  CrossValidationReport report;
  const MixedGraph base(numbered_labels(n));

  CensusOptions opts;
  opts.jobs = jobs;
  const std::vector<CensusClass> classes = partition_chain_graphs(n, opts);
  std::uint64_t cg_count = 0;
  for (const auto& c : classes) cg_count += c.members.size();

  const bool per_graph = props.contains(Property::ProtectionMatchesIrreversibility) ||
                         props.contains(Property::ClosurePropertiesAgree);
  if (per_graph) {
    std::vector<std::uint64_t> cgs;
    for (const auto& c : classes) cgs.insert(cgs.end(), c.members.begin(), c.members.end());
    std::sort(cgs.begin(), cgs.end());
    auto parts = detail::parallel_ranges<std::vector<Violation>>(cgs.size(), jobs, [&](std::uint64_t lo, std::uint64_t hi) {
      std::vector<Violation> found;
      for (std::uint64_t i = lo; i < hi; ++i) check_graph(decode_candidate(n, cgs[i]), props, found);
      return found;
    });
    for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(report.violations));
  }
  report.graphs_checked = cg_count;

  auto parts = detail::parallel_ranges<std::vector<Violation>>(classes.size(), jobs, [&](std::uint64_t lo, std::uint64_t hi) {
    std::vector<Violation> found;
    for (std::uint64_t i = lo; i < hi; ++i) check_class(n, classes[i], props, found);
    return found;
  });
  for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(report.violations));
  report.classes_checked = classes.size();

  if (props.contains(Property::ValidatorAcceptsOnlyEssentials)) {
    // Every mixed graph, chain graph or not: accepted iff it is some class's essential graph.
    std::vector<std::uint64_t> essentials;
    for (const auto& c : classes) {
      EquivalenceClass cls;
      for (std::uint64_t k : c.members) cls.members.push_back(decode_candidate(n, k));
      essentials.push_back(encode(essential_graph(cls).graph));
    }
    std::sort(essentials.begin(), essentials.end());
    const std::uint64_t total = candidate_count(n, 4);
    auto found = detail::parallel_ranges<std::vector<Violation>>(total, jobs, [&](std::uint64_t lo, std::uint64_t hi) {
      std::vector<Violation> v;
      std::vector<EdgeState> states(pair_count(n));
      for (std::uint64_t k = lo; k < hi; ++k) {
        decode_into(k, 4, states);
        const MixedGraph g = MixedGraph::from_pair_states(base, states);
        const bool accepted = validate_essential(g).is_essential;
        const bool essential = std::binary_search(essentials.begin(), essentials.end(), k);
        if (accepted != essential) {
          v.push_back({Property::ValidatorAcceptsOnlyEssentials, render_graph(g),
                       accepted ? "accepted but not an essential graph" : "essential graph rejected"});
        }
      }
      return v;
    });
    for (auto& p : found) std::move(p.begin(), p.end(), std::back_inserter(report.violations));
    report.graphs_checked = std::max<std::size_t>(report.graphs_checked, total);
  }

  if (props.contains(Property::DirectedValidatorAgrees)) {
    // Every fully directed graph: pair digits 0 absent, 1 forward, 2 backward.
    const std::uint64_t total = candidate_count(n, 3);
    auto found = detail::parallel_ranges<std::vector<Violation>>(total, jobs, [&](std::uint64_t lo, std::uint64_t hi) {
      std::vector<Violation> v;
      std::vector<EdgeState> states(pair_count(n));
      for (std::uint64_t k = lo; k < hi; ++k) {
        decode_into(k, 3, states);
        for (EdgeState& s : states) {
          if (s != EdgeState::Absent) s = static_cast<EdgeState>(static_cast<int>(s) + 1);
        }
        const MixedGraph d = MixedGraph::from_pair_states(base, states);
        const bool directed = validate_directed_essential(d);
        const bool general = validate_essential(d).is_essential;
        const bool fixed_point =
            is_acyclic_directed(d) && adg_essential_graph(d, pair_count(n)).graph == d;
        if (directed != general || directed != fixed_point) {
          v.push_back({Property::DirectedValidatorAgrees, render_graph(d),
                       std::string("directed ") + (directed ? "accepts" : "rejects") + ", general " +
                           (general ? "accepts" : "rejects") + ", fixed point " + (fixed_point ? "yes" : "no")});
        }
      }
      return v;
    });
    for (auto& p : found) std::move(p.begin(), p.end(), std::back_inserter(report.violations));
  }
  return report;
}

}  // namespace cgk
