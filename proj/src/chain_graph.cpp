#include "cgk/chain_graph.hpp"

#include "cgk/error.hpp"

namespace cgk {

MixedGraph skeleton(const MixedGraph& g) {
  std::vector<EdgeState> states = g.pair_states();
  for (EdgeState& s : states) {
    if (s != EdgeState::Absent) s = EdgeState::Line;
  }
  return MixedGraph::from_pair_states(g, states);
}

MixedGraph induced_subgraph(const MixedGraph& g, VertexSet subset) {
  if (!g.all_vertices().contains(subset)) throw GraphError("induced subgraph: subset outside the vertex set");
  std::vector<std::string> labels;
  for (Vertex v : subset) labels.push_back(g.label(v));
  // Label order is preserved, so the k-th member of `subset` becomes vertex k.
  const std::vector<Vertex> members = subset.to_vector();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      EdgeState s = g.edge_state(members[i], members[j]);
      if (s != EdgeState::Absent) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j), s});
    }
  }
  return MixedGraph::from_edges(std::move(labels), edges);
}

VertexSet semidirected_reach(const MixedGraph& g, Vertex start) {
  VertexSet seen = VertexSet::single(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex x : frontier) next |= g.neighbors(x) | g.children(x);
    frontier = next - seen;
    seen |= frontier;
  }
  return seen;
}

bool arrow_on_semidirected_cycle(const MixedGraph& g, Arrow arrow) {
  return semidirected_reach(g, arrow.head).contains(arrow.tail);
}

bool is_chain_graph(const MixedGraph& g) {
  for (Vertex head = 0; head < g.vertex_count(); ++head) {
    if (g.parents(head).empty()) continue;
    if (semidirected_reach(g, head).intersects(g.parents(head))) return false;
  }
  return true;
}

std::vector<VertexSet> line_components(const MixedGraph& g, VertexSet subset) {
  std::vector<VertexSet> out;
  VertexSet rest = subset;
  while (!rest.empty()) {
    VertexSet comp = VertexSet::single(rest.front());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex x : frontier) next |= g.neighbors(x) & subset;
      frontier = next - comp;
      comp |= frontier;
    }
    out.push_back(comp);
    rest -= comp;
  }
  return out;
}

ChainComponentPartition chain_components(const MixedGraph& g) {
  ChainComponentPartition p;
  p.blocks = line_components(g, g.all_vertices());
  p.component_of.resize(g.vertex_count());
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    for (Vertex v : p.blocks[i]) p.component_of[v] = i;
  }
  return p;
}

MixedGraph closure(const MixedGraph& g) {
  std::vector<VertexSet> reach;
  reach.reserve(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) reach.push_back(semidirected_reach(g, v));
  MixedGraph out = g;
  for (const Arrow& a : g.arrows()) {
    if (reach[a.head].contains(a.tail)) out = out.with_edge(a.tail, a.head, EdgeState::Line);
  }
  return out;
}

VertexSet parents_of(const MixedGraph& g, VertexSet subset) {
  VertexSet out;
  for (Vertex v : subset) out |= g.parents(v);
  return out - subset;
}

VertexSet neighbors_of(const MixedGraph& g, VertexSet subset) {
  VertexSet out;
  for (Vertex v : subset) out |= g.neighbors(v);
  return out - subset;
}

VertexSet covering_neighbors_of(const MixedGraph& g, VertexSet subset) {
  VertexSet out = g.all_vertices();
  for (Vertex v : subset) out &= g.neighbors(v);
  return out - subset;
}

VertexSet covering_parents_of(const MixedGraph& g, VertexSet subset) {
  VertexSet out = g.all_vertices();
  for (Vertex v : subset) out &= g.parents(v);
  return out - subset;
}

VertexSet boundary_set(const MixedGraph& g, VertexSet subset, BoundaryKind kind) {
  if (!g.all_vertices().contains(subset)) throw GraphError("boundary set: subset outside the vertex set");
  const bool covering = kind == BoundaryKind::CoveringNeighbors || kind == BoundaryKind::CoveringParents ||
                        kind == BoundaryKind::NoncoveringNeighbors;
  if (covering && subset.empty()) throw GraphError("covering boundary sets need a nonempty subset");
  switch (kind) {
    case BoundaryKind::Parents: return parents_of(g, subset);
    case BoundaryKind::Neighbors: return neighbors_of(g, subset);
    case BoundaryKind::CoveringNeighbors: return covering_neighbors_of(g, subset);
    case BoundaryKind::CoveringParents: return covering_parents_of(g, subset);
    case BoundaryKind::NoncoveringNeighbors: return neighbors_of(g, subset) - covering_neighbors_of(g, subset);
    case BoundaryKind::ClosureSet: return subset | parents_of(g, subset);
  }
  return {};
}

bool is_complete(const MixedGraph& g, VertexSet subset) {
  for (Vertex v : subset) {
    if (!g.adjacent_set(v).contains(subset - VertexSet::single(v))) return false;
  }
  return true;
}

}  // namespace cgk
