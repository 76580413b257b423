#include "cgk/validate.hpp"

#include <algorithm>

#include "cgk/chain_graph.hpp"
#include "cgk/error.hpp"
#include "cgk/patterns.hpp"

namespace cgk {

namespace {

bool closure_has_flag(const MixedGraph& g, VertexSet component) {
  for (Vertex u : component) {
    for (Vertex t : g.parents(u)) {
      if (!(g.neighbors(u) - g.adjacent_set(t)).empty()) return true;
    }
  }
  return false;
}

void require_nontrivial_component(const MixedGraph& g, VertexSet component, std::size_t size_cap) {
  if (!is_chain_graph(g)) throw GraphError("closure property needs a chain graph");
  const auto blocks = chain_components(g).blocks;
  if (std::find(blocks.begin(), blocks.end(), component) == blocks.end()) {
    throw GraphError("vertex set is not a chain component");
  }
  if (component.size() < 2) throw GraphError("closure property needs a nontrivial chain component");
  if (component.size() > size_cap) {
    throw CapExceeded("chain component has " + std::to_string(component.size()) + " vertices; cap is " +
                      std::to_string(size_cap));
  }
}

// Calls visit(subset) for every nonempty proper subset of `whole`.
template <typename Visit>
void for_each_proper_subset(VertexSet whole, Visit&& visit) {
  const std::uint64_t all = whole.bits();
  for (std::uint64_t sub = (all - 1) & all; sub != 0; sub = (sub - 1) & all) visit(VertexSet{sub});
}

void keep_least(std::optional<ClosureWitness>& best, ClosureWitness candidate) {
  if (!best || lexicographically_less(candidate.alpha, best->alpha) ||
      (candidate.alpha == best->alpha && lexicographically_less(candidate.kappa, best->kappa))) {
    best = candidate;
  }
}

void require_arrow(const MixedGraph& g, Arrow arrow) {
  if (arrow.tail >= g.vertex_count() || arrow.head >= g.vertex_count() || !g.has_arrow(arrow.tail, arrow.head)) {
    throw GraphError("not an arrow of the graph");
  }
}

bool any_nonadjacent_pair(const MixedGraph& g, VertexSet s) {
  for (Vertex c : s) {
    if (!(s - g.adjacent_set(c) - VertexSet::single(c)).empty()) return true;
  }
  return false;
}

std::string set_text(const MixedGraph& g, VertexSet s) {
  std::string out = "{";
  for (Vertex v : s) {
    if (out.size() > 1) out += ",";
    out += g.label(v);
  }
  return out + "}";
}

}  // namespace

std::vector<ClassifiedComponent> classify_chain_components(const MixedGraph& g) {
  if (!is_chain_graph(g)) throw GraphError("component classification needs a chain graph");
  std::vector<ClassifiedComponent> out;
  for (VertexSet block : chain_components(g).blocks) {
    ComponentClass kind = ComponentClass::Trivial;
    if (block.size() >= 2) {
      // Lines of the closure all lie inside the component, so a chordless
      // undirected cycle there is exactly a non-chordal component.
      const bool strong = !lines_chordal(g, block) || closure_has_flag(g, block);
      kind = strong ? ComponentClass::Strong : ComponentClass::Weak;
    }
    out.push_back({block, kind});
  }
  return out;
}

StrongLines::StrongLines(const MixedGraph& g) : strong_(g.vertex_count()) {
  for (const auto& comp : classify_chain_components(g)) {
    if (comp.kind != ComponentClass::Strong) continue;
    for (Vertex v : comp.members) strong_[v] = g.neighbors(v);
  }
}

ClosurePropertyResult property_s(const MixedGraph& g, VertexSet component, std::size_t size_cap) {
  require_nontrivial_component(g, component, size_cap);
  ClosurePropertyResult result;
  for_each_proper_subset(component, [&](VertexSet alpha) {
    if (!is_complete(g, alpha)) return;
    const VertexSet kappa = covering_neighbors_of(g, alpha) & component;
    if (kappa.empty()) return;
    const VertexSet alpha_parents = parents_of(g, alpha);
    for (VertexSet piece : line_components(g, kappa)) {
      const bool escapes = !((neighbors_of(g, piece) & component) - alpha).empty();
      const bool missed_parent = !(alpha_parents - covering_parents_of(g, piece)).empty();
      if (!escapes && !missed_parent) {
        result.holds = false;
        keep_least(result.witness, {alpha, piece});
      }
    }
  });
  return result;
}

ClosurePropertyResult property_s_prime(const MixedGraph& g, VertexSet component, std::size_t size_cap) {
  require_nontrivial_component(g, component, size_cap);
  ClosurePropertyResult result;
  for_each_proper_subset(component, [&](VertexSet kappa) {
    if (line_components(g, kappa).size() != 1) return;
    const VertexSet alpha = covering_neighbors_of(g, kappa) & component;
    if (alpha.empty() || !is_complete(g, alpha)) return;
    const bool noncovering = !((neighbors_of(g, kappa) & component) - alpha).empty();
    const bool missed_parent = !(parents_of(g, alpha) - covering_parents_of(g, kappa)).empty();
    if (!noncovering && !missed_parent) {
      result.holds = false;
      keep_least(result.witness, {alpha, kappa});
    }
  });
  return result;
}

bool is_irreversible_arrow(const MixedGraph& g, Arrow arrow) {
  require_arrow(g, arrow);
  const MixedGraph flipped = g.with_edge(arrow.head, arrow.tail, EdgeState::ArrowForward);
  return find_triplexes(flipped) != find_triplexes(g) || !is_chain_graph(flipped);
}

bool is_protected_arrow(const MixedGraph& g, Arrow arrow) {
  require_arrow(g, arrow);
  const Vertex u = arrow.tail, v = arrow.head;
  const VertexSet u_only = VertexSet::single(u);
  const VertexSet into_v = g.parents(v) - u_only;
  return !(g.parents(u) - g.adjacent_set(v)).empty()        // c -> u -> v
         || !(into_v - g.adjacent_set(u)).empty()           // u -> v <- c
         || into_v.intersects(g.children(u))                // u -> c -> v
         || into_v.intersects(g.neighbors(u))               // u - c -> v
         || !(g.neighbors(u) - g.adjacent_set(v)).empty()   // c - u -> v
         || !(g.neighbors(v) - g.adjacent_set(u)).empty()   // u -> v - c
         || g.children(u).intersects(g.neighbors(v));       // u -> c - v
}

bool is_well_protected_arrow(const MixedGraph& g, Arrow arrow, const StrongLines& strong) {
  require_arrow(g, arrow);
  const Vertex u = arrow.tail, v = arrow.head;
  const VertexSet u_only = VertexSet::single(u);
  const VertexSet into_v = g.parents(v) - u_only;
  VertexSet strong_u, strong_v;
  for (Vertex c : g.neighbors(u)) {
    if (strong.contains(u, c)) strong_u.insert(c);
  }
  for (Vertex c : g.neighbors(v)) {
    if (strong.contains(v, c)) strong_v.insert(c);
  }
  return !(g.parents(u) - g.adjacent_set(v)).empty()           // c -> u -> v
         || !(into_v - g.adjacent_set(u)).empty()              // u -> v <- c
         || into_v.intersects(g.children(u))                   // u -> c -> v
         || any_nonadjacent_pair(g, into_v & g.neighbors(u))   // immorality c -> v <- d, u - c, u - d
         || into_v.intersects(strong_u)                        // u -s c -> v
         || !(strong_u - g.adjacent_set(v)).empty()            // c -s u -> v
         || !(strong_v - g.adjacent_set(u)).empty()            // u -> v -s c
         || g.children(u).intersects(strong_v);                // u -> c -s v
}

bool is_well_protected_arrow(const MixedGraph& g, Arrow arrow) {
  return is_well_protected_arrow(g, arrow, StrongLines(g));
}

ValidationVerdict validate_essential(const MixedGraph& g, std::size_t component_cap) {
  ValidationVerdict verdict;
  for (const Arrow& a : g.arrows()) {
    if (arrow_on_semidirected_cycle(g, a)) verdict.failures.push_back({Condition::ChainGraph, CycleWitness{a}});
  }
  if (verdict.failures.empty()) {
    for (const auto& comp : classify_chain_components(g)) {
      if (comp.kind != ComponentClass::Strong) continue;
      ClosurePropertyResult r = property_s(g, comp.members, component_cap);
      if (!r.holds) {
        verdict.failures.push_back({Condition::StrongClosure, ComponentWitness{comp.members, *r.witness}});
      }
    }
    const StrongLines strong(g);
    for (const Arrow& a : g.arrows()) {
      if (!is_well_protected_arrow(g, a, strong)) {
        verdict.failures.push_back({Condition::WellProtected, ArrowWitness{a}});
      }
    }
  }
  verdict.is_essential = verdict.failures.empty();
  return verdict;
}

bool validate_directed_essential(const MixedGraph& d) {
  if (d.has_lines()) throw GraphError("directed validator needs a fully directed graph");
  if (!is_acyclic_directed(d)) return false;
  for (const Arrow& a : d.arrows()) {
    const Vertex u = a.tail, v = a.head;
    const VertexSet into_v = d.parents(v) - VertexSet::single(u);
    const bool pinned = !(d.parents(u) - d.adjacent_set(v)).empty() ||
                        !(into_v - d.adjacent_set(u)).empty() || into_v.intersects(d.children(u));
    if (!pinned) return false;
  }
  return true;
}

std::string to_string(Condition c) {
  switch (c) {
    case Condition::ChainGraph: return "G1";
    case Condition::StrongClosure: return "G2";
    case Condition::WellProtected: return "G3";
  }
  return "?";
}

std::string to_string(ComponentClass c) {
  switch (c) {
    case ComponentClass::Strong: return "strong";
    case ComponentClass::Weak: return "weak";
    case ComponentClass::Trivial: return "trivial";
  }
  return "?";
}

std::string describe(const MixedGraph& g, const Failure& f) {
  std::string out = to_string(f.condition) + ": ";
  if (const auto* w = std::get_if<CycleWitness>(&f.witness)) {
    out += "arrow " + g.label(w->arrow.tail) + " -> " + g.label(w->arrow.head) + " lies on a semi-directed cycle";
  } else if (const auto* w = std::get_if<ComponentWitness>(&f.witness)) {
    out += "component " + set_text(g, w->component) + " fails the closure property at alpha " +
           set_text(g, w->violation.alpha) + ", kappa " + set_text(g, w->violation.kappa);
  } else if (const auto* w = std::get_if<ArrowWitness>(&f.witness)) {
    out += "arrow " + g.label(w->arrow.tail) + " -> " + g.label(w->arrow.head) + " is not well protected";
  }
  return out;
}

}  // namespace cgk
