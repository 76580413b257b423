#include "cgk/equivalence.hpp"

#include <algorithm>

#include "cgk/chain_graph.hpp"
#include "cgk/error.hpp"
#include "cgk/patterns.hpp"

namespace cgk {

namespace {

void check_edge_cap(std::size_t edges, std::size_t cap) {
  if (edges > cap) {
    throw CapExceeded("skeleton has " + std::to_string(edges) + " edges; cap is " + std::to_string(cap));
  }
}

// Visits every assignment of `choices` to the edges of `skel`, first edge most
// significant, and hands each resulting graph to `visit`.
template <typename Visit>
void for_each_orientation(const MixedGraph& skel, std::span<const EdgeState> choices, Visit&& visit) {
  const std::vector<Edge> edges = skel.edges();
  std::vector<EdgeState> states(pair_count(skel.vertex_count()), EdgeState::Absent);
  std::vector<std::size_t> slot;
  const std::size_t n = skel.vertex_count();
  for (const Edge& e : edges) {
    // Index of pair (u, v) in canonical pair order.
    slot.push_back(e.u * n - e.u * (e.u + 1) / 2 + (e.v - e.u - 1));
  }
  std::vector<std::size_t> digit(edges.size(), 0);
  for (std::size_t i = 0; i < edges.size(); ++i) states[slot[i]] = choices[0];
  while (true) {
    visit(MixedGraph::from_pair_states(skel, states));
    std::size_t pos = edges.size();
    while (pos > 0) {
      --pos;
      if (++digit[pos] < choices.size()) {
        states[slot[pos]] = choices[digit[pos]];
        break;
      }
      digit[pos] = 0;
      states[slot[pos]] = choices[0];
      if (pos == 0) return;
    }
    if (edges.empty()) return;
  }
}

constexpr EdgeState kMixedChoices[] = {EdgeState::Line, EdgeState::ArrowForward, EdgeState::ArrowBackward};
constexpr EdgeState kDirectedChoices[] = {EdgeState::ArrowForward, EdgeState::ArrowBackward};

StrengthLabeledGraph union_of(const std::vector<MixedGraph>& members) {
  const MixedGraph& first = members.front();
  StrengthLabeledGraph out{first, {}};
  std::vector<Edge> edges;
  for (const Edge& e : first.edges()) {
    bool line = false, forward = false, backward = false;
    for (const MixedGraph& m : members) {
      switch (m.edge_state(e.u, e.v)) {
        case EdgeState::Line: line = true; break;
        case EdgeState::ArrowForward: forward = true; break;
        case EdgeState::ArrowBackward: backward = true; break;
        case EdgeState::Absent: throw GraphError("class members have different skeletons");
      }
    }
    EdgeState state;
    EdgeStrength strength;
    if (forward && backward) {
      state = EdgeState::Line;
      strength = EdgeStrength::WeakLine;
    } else if (forward || backward) {
      state = forward ? EdgeState::ArrowForward : EdgeState::ArrowBackward;
      strength = line ? EdgeStrength::WeakArrow : EdgeStrength::StrongArrow;
    } else {
      state = EdgeState::Line;
      strength = EdgeStrength::StrongLine;
    }
    edges.push_back({e.u, e.v, state});
    out.strength[{e.u, e.v}] = strength;
  }
  out.graph = MixedGraph::from_edges(std::vector<std::string>(first.labels().begin(), first.labels().end()), edges);
  return out;
}

}  // namespace

EdgeStrength StrengthLabeledGraph::strength_of(Vertex u, Vertex v) const {
  auto it = strength.find({std::min(u, v), std::max(u, v)});
  if (it == strength.end()) throw GraphError("no edge between the given vertices");
  return it->second;
}

bool amp_equivalent(const MixedGraph& g1, const MixedGraph& g2) {
  if (!g1.same_vertices(g2)) throw GraphError("equivalence test on different vertex sets");
  if (!is_chain_graph(g1) || !is_chain_graph(g2)) throw GraphError("equivalence test needs chain graphs");
  return skeleton(g1) == skeleton(g2) && find_triplexes(g1) == find_triplexes(g2);
}

EquivalenceClass enumerate_class(const MixedGraph& g, std::size_t edge_cap) {
  if (!is_chain_graph(g)) throw GraphError("class enumeration needs a chain graph");
  check_edge_cap(g.edge_count(), edge_cap);
  const TriplexSet target = find_triplexes(g);
  EquivalenceClass cls;
  for_each_orientation(skeleton(g), kMixedChoices, [&](MixedGraph candidate) {
    if (is_chain_graph(candidate) && find_triplexes(candidate) == target) cls.members.push_back(std::move(candidate));
  });
  return cls;
}

StrengthLabeledGraph essential_graph(const EquivalenceClass& cls) {
  if (cls.members.empty()) throw GraphError("essential graph of an empty class");
  return union_of(cls.members);
}

std::pair<VertexSet, VertexSet> strength_parent_sets(const StrengthLabeledGraph& e, VertexSet subset) {
  if (!e.graph.all_vertices().contains(subset)) throw GraphError("parent sets: subset outside the vertex set");
  VertexSet strong, weak;
  for (Vertex b : subset) {
    for (Vertex p : e.graph.parents(b) - subset) {
      (is_strong(e.strength_of(p, b)) ? strong : weak).insert(p);
    }
  }
  return {strong, weak};
}

StrongEquivalencePartition strong_equivalence_classes(const StrengthLabeledGraph& e) {
  const std::size_t n = e.graph.vertex_count();
  std::vector<VertexSet> strong_nb(n);
  for (const auto& [pair, s] : e.strength) {
    if (s == EdgeStrength::StrongLine) {
      strong_nb[pair.first].insert(pair.second);
      strong_nb[pair.second].insert(pair.first);
    }
  }
  StrongEquivalencePartition p;
  p.block_of.resize(n);
  VertexSet rest = e.graph.all_vertices();
  while (!rest.empty()) {
    VertexSet block = VertexSet::single(rest.front());
    VertexSet frontier = block;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex x : frontier) next |= strong_nb[x];
      frontier = next - block;
      block |= frontier;
    }
    for (Vertex v : block) p.block_of[v] = p.blocks.size();
    p.blocks.push_back(block);
    rest -= block;
  }
  return p;
}

MixedGraph reduced_graph(const StrengthLabeledGraph& e, const StrongEquivalencePartition& partition) {
  const std::size_t k = partition.blocks.size();
  std::vector<std::string> names;
  for (VertexSet b : partition.blocks) names.push_back(e.graph.label(b.front()));
  // Blocks are ordered by least member, so names are already in label order.
  std::vector<EdgeState> between(k * k, EdgeState::Absent);
  for (const Edge& edge : e.graph.edges()) {
    std::size_t bu = partition.block_of[edge.u], bv = partition.block_of[edge.v];
    if (bu == bv) continue;
    EdgeState s = edge.state;
    if (bu > bv) {
      std::swap(bu, bv);
      s = reversed(s);
    }
    EdgeState& slot = between[bu * k + bv];
    if (slot != EdgeState::Absent && slot != s) {
      throw GraphError("blocks '" + names[bu] + "' and '" + names[bv] + "' are joined by conflicting edges");
    }
    slot = s;
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (between[i * k + j] != EdgeState::Absent) {
        edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j), between[i * k + j]});
      }
    }
  }
  return MixedGraph::from_edges(std::move(names), edges);
}

std::optional<MixedGraph> class_contains_adg(const EquivalenceClass& cls) {
  for (const MixedGraph& m : cls.members) {
    if (!m.has_lines()) return m;
  }
  return std::nullopt;
}

StrengthLabeledGraph adg_essential_graph(const MixedGraph& d, std::size_t edge_cap) {
  if (d.has_lines()) throw GraphError("ADG essential graph needs a fully directed graph");
  if (!is_acyclic_directed(d)) throw GraphError("ADG essential graph needs an acyclic graph");
  check_edge_cap(d.edge_count(), edge_cap);
  const auto target = find_immoralities(d);
  std::vector<MixedGraph> members;
  for_each_orientation(skeleton(d), kDirectedChoices, [&](MixedGraph candidate) {
    if (is_acyclic_directed(candidate) && find_immoralities(candidate) == target) members.push_back(std::move(candidate));
  });
  return union_of(members);
}

}  // namespace cgk
