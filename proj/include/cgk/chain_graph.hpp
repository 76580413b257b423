#pragma once

#include <vector>

#include "cgk/mixed_graph.hpp"

namespace cgk {

/// Connected components of the line-only subgraph.
struct ChainComponentPartition {
  /// Ordered by least member.
  std::vector<VertexSet> blocks;
  /// Block index of every vertex.
  std::vector<std::size_t> component_of;
};

/// Every edge turned into a line.
MixedGraph skeleton(const MixedGraph& g);

/// Subgraph on `subset`, with vertices renumbered in label order.
MixedGraph induced_subgraph(const MixedGraph& g, VertexSet subset);

/// Vertices reachable from `start` (itself included) by steps along lines or
/// forward arrows.
VertexSet semidirected_reach(const MixedGraph& g, Vertex start);

/// True iff the arrow tail -> head lies on a semi-directed cycle, i.e. head
/// reaches tail through lines and forward arrows.
bool arrow_on_semidirected_cycle(const MixedGraph& g, Arrow arrow);

/// No semi-directed cycle exists.
bool is_chain_graph(const MixedGraph& g);

ChainComponentPartition chain_components(const MixedGraph& g);

/// Smallest chain graph containing g: arrows on semi-directed cycles become lines.
MixedGraph closure(const MixedGraph& g);

enum class BoundaryKind {
  Parents,
  Neighbors,
  CoveringNeighbors,
  CoveringParents,
  NoncoveringNeighbors,
  ClosureSet,
};

/// Boundary queries of a vertex set. Members of `subset` are never returned
/// except by ClosureSet (subset plus its parents). Covering variants reject an
/// empty subset; any subset outside the vertex range is rejected.
VertexSet boundary_set(const MixedGraph& g, VertexSet subset, BoundaryKind kind);

// Unchecked helpers used by the algorithms.
VertexSet parents_of(const MixedGraph& g, VertexSet subset);
VertexSet neighbors_of(const MixedGraph& g, VertexSet subset);
VertexSet covering_neighbors_of(const MixedGraph& g, VertexSet subset);
VertexSet covering_parents_of(const MixedGraph& g, VertexSet subset);

/// Every pair of distinct members adjacent.
bool is_complete(const MixedGraph& g, VertexSet subset);

/// Connected components of the line subgraph induced by `subset`, ordered by least member.
std::vector<VertexSet> line_components(const MixedGraph& g, VertexSet subset);

}  // namespace cgk
