#include "cgk/patterns.hpp"

#include <algorithm>
#include <functional>

#include "cgk/chain_graph.hpp"
#include "cgk/error.hpp"

namespace cgk {

namespace {

TripleShape shape_of(const MixedGraph& g, Vertex a, Vertex b, Vertex c) {
  const EdgeState ab = g.edge_state(a, b);
  const EdgeState bc = g.edge_state(b, c);
  if (ab == EdgeState::ArrowForward && bc == EdgeState::ArrowBackward) return TripleShape::Immorality;
  if (ab == EdgeState::ArrowForward && bc == EdgeState::Line) return TripleShape::Flag;
  if (ab == EdgeState::Line && bc == EdgeState::ArrowForward) return TripleShape::Antiflag;
  if (ab == EdgeState::ArrowForward && bc == EdgeState::ArrowForward) return TripleShape::Chordless2Dipath;
  return TripleShape::Other;
}

std::vector<ClassifiedTriple> triples_of_shape(const MixedGraph& g, TripleShape shape) {
  std::vector<ClassifiedTriple> out;
  for (const auto& t : classify_triples(g)) {
    if (t.shape == shape) out.push_back(t);
  }
  return out;
}

void require_undirected(const MixedGraph& g, const char* what) {
  if (g.has_arrows()) throw GraphError(std::string(what) + " needs an undirected graph");
}

// MCS over the line subgraph on `subset`; prefix is assumed valid.
std::vector<Vertex> mcs_over(const MixedGraph& g, VertexSet subset, std::span<const Vertex> prefix) {
  std::vector<Vertex> order(prefix.begin(), prefix.end());
  VertexSet visited;
  for (Vertex v : prefix) visited.insert(v);
  while (visited != subset) {
    Vertex best = 0;
    std::size_t best_count = 0;
    bool found = false;
    for (Vertex v : subset - visited) {
      std::size_t count = (g.neighbors(v) & visited).size();
      if (!found || count > best_count) {
        best = v;
        best_count = count;
        found = true;
      }
    }
    order.push_back(best);
    visited.insert(best);
  }
  return order;
}

bool lines_complete(const MixedGraph& g, VertexSet subset) {
  for (Vertex v : subset) {
    if (!g.neighbors(v).contains(subset - VertexSet::single(v))) return false;
  }
  return true;
}

}  // namespace

std::vector<ClassifiedTriple> classify_triples(const MixedGraph& g) {
  std::vector<ClassifiedTriple> out;
  for (Vertex b = 0; b < g.vertex_count(); ++b) {
    const VertexSet around = g.adjacent_set(b);
    for (Vertex a : around) {
      for (Vertex c : around - g.adjacent_set(a) - VertexSet::single(a)) {
        out.push_back({a, b, c, shape_of(g, a, b, c)});
      }
    }
  }
  return out;
}

TriplexSet find_triplexes(const MixedGraph& g) {
  TriplexSet out;
  for (Vertex b = 0; b < g.vertex_count(); ++b) {
    const VertexSet into = g.parents(b);
    if (into.empty()) continue;
    const VertexSet around = into | g.neighbors(b);
    // Ends are nonadjacent, at least one of them points into b.
    for (Vertex a : around) {
      for (Vertex c : around - g.adjacent_set(a) - VertexSet::first(a + 1)) {
        if (into.contains(a) || into.contains(c)) out.push_back({a, c, b});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ClassifiedTriple> find_flags(const MixedGraph& g) { return triples_of_shape(g, TripleShape::Flag); }

std::vector<ClassifiedTriple> find_immoralities(const MixedGraph& g) {
  std::vector<ClassifiedTriple> out;
  for (const auto& t : triples_of_shape(g, TripleShape::Immorality)) {
    if (t.a < t.c) out.push_back(t);
  }
  return out;
}

std::vector<ClassifiedTriple> find_antiflags(const MixedGraph& g) {
  return triples_of_shape(g, TripleShape::Antiflag);
}

std::vector<ClassifiedTriple> find_chordless_2dipaths(const MixedGraph& g) {
  return triples_of_shape(g, TripleShape::Chordless2Dipath);
}

bool lines_chordal(const MixedGraph& g, VertexSet subset) {
  const std::vector<Vertex> order = mcs_over(g, subset, {});
  VertexSet visited;
  for (Vertex v : order) {
    if (!lines_complete(g, g.neighbors(v) & visited)) return false;
    visited.insert(v);
  }
  return true;
}

bool is_chordal(const MixedGraph& g) {
  require_undirected(g, "chordality test");
  return lines_chordal(g, g.all_vertices());
}

std::vector<std::vector<Vertex>> find_chordless_undirected_cycles(const MixedGraph& g, std::size_t limit) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> path;
  // `inner` holds path members other than the start and the current tip.
  std::function<void(VertexSet)> extend = [&](VertexSet inner) {
    if (out.size() >= limit) return;
    const Vertex start = path.front();
    const Vertex tip = path.back();
    for (Vertex w : g.neighbors(tip) - VertexSet::first(start + 1)) {
      if (out.size() >= limit) return;
      if (g.adjacent_set(w).intersects(inner) || inner.contains(w)) continue;
      if (g.adjacent(w, start)) {
        // Closing vertex: the cycle ends here whether or not it qualifies.
        if (path.size() >= 3 && g.has_line(w, start) && path[1] < w) {
          path.push_back(w);
          out.push_back(path);
          path.pop_back();
        }
        continue;
      }
      path.push_back(w);
      extend(inner | VertexSet::single(tip));
      path.pop_back();
    }
  };
  for (Vertex s = 0; s < g.vertex_count() && out.size() < limit; ++s) {
    for (Vertex w : g.neighbors(s) - VertexSet::first(s + 1)) {
      path.assign({s, w});
      extend(VertexSet{});
    }
  }
  return out;
}

std::vector<Biflag> find_biflags(const MixedGraph& g, std::size_t limit) {
  std::vector<Biflag> out;
  std::vector<Vertex> spine;

  auto emit = [&] {
    const std::size_t k = spine.size();
    VertexSet members;
    for (Vertex v : spine) members.insert(v);
    const VertexSet first = g.parents(spine[1]) - g.adjacent_set(spine[0]) - members;
    const VertexSet second = g.parents(spine[k - 2]) - g.adjacent_set(spine[k - 1]) - members;
    for (Vertex x : first) {
      for (Vertex y : second) {
        if (out.size() >= limit) return;
        if (x == y && k < 3) continue;
        out.push_back({x, y, spine});
      }
    }
  };

  // Chordless line paths, extended one vertex at a time; `earlier` holds all
  // path members except the tip.
  std::function<void(VertexSet)> extend = [&](VertexSet earlier) {
    if (out.size() >= limit) return;
    const Vertex tip = spine.back();
    for (Vertex w : g.neighbors(tip)) {
      if (earlier.contains(w) || g.adjacent_set(w).intersects(earlier)) continue;
      spine.push_back(w);
      if (spine.front() < w) emit();
      extend(earlier | VertexSet::single(tip));
      spine.pop_back();
    }
  };
  for (Vertex s = 0; s < g.vertex_count() && out.size() < limit; ++s) {
    spine.assign(1, s);
    extend(VertexSet{});
  }
  return out;
}

std::vector<Vertex> mcs_order(const MixedGraph& g, std::span<const Vertex> prefix) {
  require_undirected(g, "maximum cardinality search");
  VertexSet seen;
  for (Vertex v : prefix) {
    if (v >= g.vertex_count()) throw GraphError("MCS prefix names an unknown vertex");
    if (seen.contains(v)) throw GraphError("MCS prefix repeats vertex '" + g.label(v) + "'");
    seen.insert(v);
  }
  if (!lines_complete(g, seen)) throw GraphError("MCS prefix is not a complete set");
  if (!lines_chordal(g, g.all_vertices())) throw GraphError("MCS needs a chordal graph");
  return mcs_over(g, g.all_vertices(), prefix);
}

MixedGraph mcs_perfect_orientation(const MixedGraph& g, std::span<const Vertex> prefix) {
  const std::vector<Vertex> order = mcs_order(g, prefix);
  std::vector<std::size_t> number(g.vertex_count());
  for (std::size_t i = 0; i < order.size(); ++i) number[order[i]] = i;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    edges.push_back({e.u, e.v, number[e.u] < number[e.v] ? EdgeState::ArrowForward : EdgeState::ArrowBackward});
  }
  return MixedGraph::from_edges(std::vector<std::string>(g.labels().begin(), g.labels().end()), edges);
}

bool is_acyclic_directed(const MixedGraph& g) {
  VertexSet removed;
  bool progress = true;
  while (progress && removed != g.all_vertices()) {
    progress = false;
    for (Vertex v : g.all_vertices() - removed) {
      if ((g.parents(v) - removed).empty()) {
        removed.insert(v);
        progress = true;
      }
    }
  }
  return removed == g.all_vertices();
}

bool is_perfect_orientation(const MixedGraph& g) {
  if (g.has_lines()) throw GraphError("perfect-orientation test needs a fully directed graph");
  return is_acyclic_directed(g) && find_immoralities(g).empty();
}

}  // namespace cgk
