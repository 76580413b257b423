#include "cgk/mixed_graph.hpp"

#include <algorithm>
#include <cctype>

#include "cgk/error.hpp"

namespace cgk {

namespace {

std::shared_ptr<const std::vector<std::string>> sorted_labels(std::vector<std::string> labels) {
  if (labels.size() > kMaxVertices) {
    throw GraphError("a graph holds at most " + std::to_string(kMaxVertices) + " vertices");
  }
  for (const auto& l : labels) {
    if (!is_valid_label(l)) throw GraphError("invalid vertex label '" + l + "'");
  }
  std::sort(labels.begin(), labels.end());
  if (auto dup = std::adjacent_find(labels.begin(), labels.end()); dup != labels.end()) {
    throw GraphError("duplicate vertex label '" + *dup + "'");
  }
  return std::make_shared<const std::vector<std::string>>(std::move(labels));
}

}  // namespace

bool is_valid_label(std::string_view label) {
  if (label.empty()) return false;
  for (char ch : label) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == '#' || ch == '[' || ch == ']' ||
        ch == '"') {
      return false;
    }
  }
  return label.find("--") == std::string_view::npos && label.find("->") == std::string_view::npos;
}

std::vector<std::string> numbered_labels(std::size_t n) {
  const std::size_t width = std::to_string(n).size();
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    std::string digits = std::to_string(i);
    out.push_back("v" + std::string(width - digits.size(), '0') + digits);
  }
  return out;
}

MixedGraph::MixedGraph() : MixedGraph(std::make_shared<const std::vector<std::string>>()) {}

MixedGraph::MixedGraph(std::vector<std::string> labels) : MixedGraph(sorted_labels(std::move(labels))) {}

MixedGraph::MixedGraph(std::shared_ptr<const std::vector<std::string>> labels)
    : labels_(std::move(labels)),
      lines_(labels_->size()),
      children_(labels_->size()),
      parents_(labels_->size()),
      adjacent_(labels_->size()) {}

MixedGraph MixedGraph::from_edges(std::vector<std::string> labels, std::span<const Edge> edges) {
  MixedGraph g(std::move(labels));
  for (const Edge& e : edges) {
    g.check_vertex(e.u);
    g.check_vertex(e.v);
    if (e.u == e.v) throw GraphError("self-edge on '" + g.label(e.u) + "'");
    if (g.adjacent(e.u, e.v)) {
      throw GraphError("duplicate edge for pair '" + g.label(e.u) + "', '" + g.label(e.v) + "'");
    }
    g.set_pair(e.u, e.v, e.state);
  }
  return g;
}

MixedGraph MixedGraph::from_pair_states(const MixedGraph& vertices, std::span<const EdgeState> states) {
  const std::size_t n = vertices.vertex_count();
  if (states.size() != pair_count(n)) throw GraphError("pair-state vector has the wrong length");
  MixedGraph g(vertices.labels_);
  std::size_t k = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.set_pair(u, v, states[k++]);
  }
  return g;
}

std::optional<Vertex> MixedGraph::find_vertex(std::string_view label) const {
  auto it = std::lower_bound(labels_->begin(), labels_->end(), label);
  if (it == labels_->end() || *it != label) return std::nullopt;
  return static_cast<Vertex>(it - labels_->begin());
}

Vertex MixedGraph::vertex(std::string_view label) const {
  if (auto v = find_vertex(label)) return *v;
  throw GraphError("unknown vertex '" + std::string(label) + "'");
}

bool MixedGraph::same_vertices(const MixedGraph& other) const {
  return labels_ == other.labels_ || *labels_ == *other.labels_;
}

void MixedGraph::check_vertex(Vertex v) const {
  if (v >= vertex_count()) throw GraphError("vertex index " + std::to_string(v) + " out of range");
}

EdgeState MixedGraph::edge_state(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw GraphError("edge query on a single vertex '" + label(u) + "'");
  if (lines_[u].contains(v)) return EdgeState::Line;
  if (children_[u].contains(v)) return EdgeState::ArrowForward;
  if (parents_[u].contains(v)) return EdgeState::ArrowBackward;
  return EdgeState::Absent;
}

EdgeState MixedGraph::edge_state(std::string_view u, std::string_view v) const {
  return edge_state(vertex(u), vertex(v));
}

void MixedGraph::set_pair(Vertex u, Vertex v, EdgeState state) {
  for (auto* sets : {&lines_, &children_, &parents_, &adjacent_}) {
    (*sets)[u].erase(v);
    (*sets)[v].erase(u);
  }
  switch (state) {
    case EdgeState::Absent:
      return;
    case EdgeState::Line:
      lines_[u].insert(v);
      lines_[v].insert(u);
      break;
    case EdgeState::ArrowForward:
      children_[u].insert(v);
      parents_[v].insert(u);
      break;
    case EdgeState::ArrowBackward:
      children_[v].insert(u);
      parents_[u].insert(v);
      break;
  }
  adjacent_[u].insert(v);
  adjacent_[v].insert(u);
}

std::vector<Edge> MixedGraph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : adjacent_[u] - VertexSet::first(u + 1)) out.push_back({u, v, edge_state(u, v)});
  }
  return out;
}

std::vector<Arrow> MixedGraph::arrows() const {
  std::vector<Arrow> out;
  for (const Edge& e : edges()) {
    if (e.state == EdgeState::ArrowForward) out.push_back({e.u, e.v});
    if (e.state == EdgeState::ArrowBackward) out.push_back({e.v, e.u});
  }
  return out;
}

std::size_t MixedGraph::edge_count() const {
  std::size_t twice = 0;
  for (VertexSet s : adjacent_) twice += s.size();
  return twice / 2;
}

bool MixedGraph::has_lines() const {
  return std::any_of(lines_.begin(), lines_.end(), [](VertexSet s) { return !s.empty(); });
}

bool MixedGraph::has_arrows() const {
  return std::any_of(children_.begin(), children_.end(), [](VertexSet s) { return !s.empty(); });
}

std::vector<EdgeState> MixedGraph::pair_states() const {
  std::vector<EdgeState> out;
  out.reserve(pair_count(vertex_count()));
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v = u + 1; v < vertex_count(); ++v) out.push_back(edge_state(u, v));
  }
  return out;
}

MixedGraph MixedGraph::with_edge(Vertex u, Vertex v, EdgeState state) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw GraphError("self-edge on '" + label(u) + "'");
  MixedGraph g = *this;
  g.set_pair(u, v, state);
  return g;
}

bool MixedGraph::operator==(const MixedGraph& other) const {
  return same_vertices(other) && lines_ == other.lines_ && children_ == other.children_;
}

}  // namespace cgk
