#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cgk/mixed_graph.hpp"

namespace cgk {

/// Default guardrail on skeleton edges for brute-force class enumeration.
inline constexpr std::size_t kDefaultClassEdgeCap = 12;

/// Chain graphs sharing one skeleton and one triplex set, in lexicographic
/// pair-state order.
struct EquivalenceClass {
  std::vector<MixedGraph> members;
};

enum class EdgeStrength { StrongLine, WeakLine, StrongArrow, WeakArrow };

constexpr bool is_strong(EdgeStrength s) { return s == EdgeStrength::StrongLine || s == EdgeStrength::StrongArrow; }

/// A mixed graph with a strength on every edge, keyed by the canonical pair (u < v).
struct StrengthLabeledGraph {
  MixedGraph graph;
  std::map<std::pair<Vertex, Vertex>, EdgeStrength> strength;

  /// Throws GraphError if u, v are not adjacent.
  EdgeStrength strength_of(Vertex u, Vertex v) const;
  bool operator==(const StrengthLabeledGraph&) const = default;
};

/// Vertices joined by paths of strong lines.
struct StrongEquivalencePartition {
  std::vector<VertexSet> blocks;  // ordered by least member
  std::vector<std::size_t> block_of;
};

/// Same skeleton and same triplexes. Throws GraphError for non-chain-graph
/// input or different vertex sets.
bool amp_equivalent(const MixedGraph& g1, const MixedGraph& g2);

/// Every chain graph equivalent to `g`, found by trying all 3^|E| line/arrow
/// assignments on its skeleton. Throws CapExceeded above `edge_cap` skeleton
/// edges and GraphError for non-chain-graph input.
EquivalenceClass enumerate_class(const MixedGraph& g, std::size_t edge_cap = kDefaultClassEdgeCap);

/// Arrow where some member has it and none has the reverse; line otherwise.
/// Throws GraphError on an empty class.
StrengthLabeledGraph essential_graph(const EquivalenceClass& cls);

/// (strong parents, weak parents) of `subset`; a vertex can be in both.
std::pair<VertexSet, VertexSet> strength_parent_sets(const StrengthLabeledGraph& e, VertexSet subset);

StrongEquivalencePartition strong_equivalence_classes(const StrengthLabeledGraph& e);

/// Quotient graph over the blocks, each block named by its least label.
/// Throws GraphError when two blocks are joined by conflicting edge kinds.
MixedGraph reduced_graph(const StrengthLabeledGraph& e, const StrongEquivalencePartition& partition);

/// A fully directed member, if the class has one.
std::optional<MixedGraph> class_contains_adg(const EquivalenceClass& cls);

/// Union over all acyclic orientations of the skeleton with the same
/// immoralities as `d`: common arrows stay (strong), the rest become weak
/// lines. Throws GraphError for cyclic or non-directed input and CapExceeded
/// above `edge_cap` edges.
StrengthLabeledGraph adg_essential_graph(const MixedGraph& d, std::size_t edge_cap = kDefaultClassEdgeCap);

}  // namespace cgk
