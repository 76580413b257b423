#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cgk/vertex_set.hpp"

namespace cgk {

/// State of an unordered vertex pair, read relative to an ordered query (u, v).
enum class EdgeState : std::uint8_t {
  Absent = 0,
  Line = 1,
  ArrowForward = 2,   // u -> v
  ArrowBackward = 3,  // u <- v
};

/// The same pair read from the other end: arrows flip, lines and absences stay.
constexpr EdgeState reversed(EdgeState s) {
  switch (s) {
    case EdgeState::ArrowForward: return EdgeState::ArrowBackward;
    case EdgeState::ArrowBackward: return EdgeState::ArrowForward;
    default: return s;
  }
}

/// An edge stored on its canonical pair u < v.
struct Edge {
  Vertex u;
  Vertex v;
  EdgeState state;

  bool operator==(const Edge&) const = default;
};

/// A directed edge tail -> head.
struct Arrow {
  Vertex tail;
  Vertex head;

  bool operator==(const Arrow&) const = default;
  auto operator<=>(const Arrow&) const = default;
};

/// Graph with lines and arrows, at most one edge per unordered vertex pair.
///
/// Vertices are opaque labels kept in sorted order; a vertex's index in that
/// order is its `Vertex` id. Values are immutable: every "modifying" operation
/// returns a new graph. Copies share the label table.
class MixedGraph {
 public:
  /// The graph with no vertices.
  MixedGraph();

  /// Edgeless graph on the given labels. Throws GraphError on duplicate,
  /// empty or malformed labels, or more than kMaxVertices labels.
  explicit MixedGraph(std::vector<std::string> labels);

  /// Graph on `labels` with the listed edges. Edge endpoints index the sorted
  /// label order. Throws GraphError on self-edges or repeated pairs.
  static MixedGraph from_edges(std::vector<std::string> labels, std::span<const Edge> edges);

  /// Graph over an existing graph's vertex set whose pair states are given in
  /// canonical pair order (0,1), (0,2), ..., (1,2), ... .
  static MixedGraph from_pair_states(const MixedGraph& vertices, std::span<const EdgeState> states);

  std::size_t vertex_count() const { return labels_->size(); }
  std::span<const std::string> labels() const { return *labels_; }
  const std::string& label(Vertex v) const { return (*labels_)[v]; }
  std::optional<Vertex> find_vertex(std::string_view label) const;
  /// Throws GraphError for an unknown label.
  Vertex vertex(std::string_view label) const;
  VertexSet all_vertices() const { return VertexSet::first(vertex_count()); }
  bool same_vertices(const MixedGraph& other) const;

  /// State of the pair relative to the order (u, v). Throws GraphError when
  /// u == v or either index is out of range.
  EdgeState edge_state(Vertex u, Vertex v) const;
  EdgeState edge_state(std::string_view u, std::string_view v) const;

  bool adjacent(Vertex u, Vertex v) const { return adjacent_[u].contains(v); }
  bool has_line(Vertex u, Vertex v) const { return lines_[u].contains(v); }
  /// True iff u -> v.
  bool has_arrow(Vertex u, Vertex v) const { return children_[u].contains(v); }

  /// Line neighbours of v.
  VertexSet neighbors(Vertex v) const { return lines_[v]; }
  VertexSet parents(Vertex v) const { return parents_[v]; }
  VertexSet children(Vertex v) const { return children_[v]; }
  VertexSet adjacent_set(Vertex v) const { return adjacent_[v]; }

  /// Edges in canonical pair order.
  std::vector<Edge> edges() const;
  std::vector<Arrow> arrows() const;
  std::size_t edge_count() const;
  bool has_lines() const;
  bool has_arrows() const;
  /// Pair states in canonical pair order (absent pairs included).
  std::vector<EdgeState> pair_states() const;

  /// Copy with the state of pair (u, v) replaced; `state` is relative to (u, v).
  MixedGraph with_edge(Vertex u, Vertex v, EdgeState state) const;

  bool operator==(const MixedGraph& other) const;

 private:
  MixedGraph(std::shared_ptr<const std::vector<std::string>> labels);
  void set_pair(Vertex u, Vertex v, EdgeState state);
  void check_vertex(Vertex v) const;

  std::shared_ptr<const std::vector<std::string>> labels_;
  std::vector<VertexSet> lines_;
  std::vector<VertexSet> children_;
  std::vector<VertexSet> parents_;
  std::vector<VertexSet> adjacent_;
};

/// Number of unordered pairs on n vertices.
constexpr std::size_t pair_count(std::size_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

/// Labels v1..vn, zero-padded so that label order equals numeric order.
std::vector<std::string> numbered_labels(std::size_t n);

/// True iff `label` is a legal vertex token.
bool is_valid_label(std::string_view label);

}  // namespace cgk
