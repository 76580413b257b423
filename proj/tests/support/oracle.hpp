#pragma once

// Slow, independent reference implementations. They share nothing with the
// library except the MixedGraph value type used for conversion: cycles are
// found by enumerating simple paths, triplexes by reading the definition, and
// classes by filtering every mixed graph on the vertex set.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "cgk/mixed_graph.hpp"

namespace oracle {

// e[u * n + v]: 0 none, 1 line, 2 u -> v, 3 v -> u.
struct Graph {
  int n = 0;
  std::vector<int> e;

  int at(int u, int v) const { return e[u * n + v]; }
  bool adj(int u, int v) const { return at(u, v) != 0; }
  bool line(int u, int v) const { return at(u, v) == 1; }
  bool arrow(int u, int v) const { return at(u, v) == 2; }
  void set(int u, int v, int s) {
    e[u * n + v] = s;
    e[v * n + u] = s == 2 ? 3 : s == 3 ? 2 : s;
  }
  bool operator==(const Graph&) const = default;
  bool operator<(const Graph& o) const { return e < o.e; }
};

inline Graph from(const cgk::MixedGraph& g) {
  Graph o{static_cast<int>(g.vertex_count()), std::vector<int>(g.vertex_count() * g.vertex_count(), 0)};
  for (int u = 0; u < o.n; ++u) {
    for (int v = u + 1; v < o.n; ++v) o.set(u, v, static_cast<int>(g.edge_state(u, v)));
  }
  return o;
}

inline cgk::MixedGraph to(const Graph& o, const cgk::MixedGraph& vertices) {
  std::vector<cgk::EdgeState> states;
  for (int u = 0; u < o.n; ++u) {
    for (int v = u + 1; v < o.n; ++v) states.push_back(static_cast<cgk::EdgeState>(o.at(u, v)));
  }
  return cgk::MixedGraph::from_pair_states(vertices, states);
}

// Steps allowed along a semi-directed path: lines and forward arrows.
inline bool step(const Graph& g, int u, int v) { return g.line(u, v) || g.arrow(u, v); }

/// Some simple cycle of length >= 3 following lines and forward arrows uses an arrow.
inline bool has_semidirected_cycle(const Graph& g) {
  std::vector<int> path;
  std::vector<bool> on(g.n, false);
  std::function<bool(int, bool)> dfs = [&](int cur, bool used_arrow) {
    for (int w = 0; w < g.n; ++w) {
      if (w == cur || !step(g, cur, w)) continue;
      const bool arrow = used_arrow || g.arrow(cur, w);
      if (w == path.front() && path.size() >= 3 && arrow) return true;
      if (on[w]) continue;
      on[w] = true;
      path.push_back(w);
      if (dfs(w, arrow)) return true;
      path.pop_back();
      on[w] = false;
    }
    return false;
  };
  for (int s = 0; s < g.n; ++s) {
    path.assign({s});
    std::fill(on.begin(), on.end(), false);
    on[s] = true;
    if (dfs(s, false)) return true;
  }
  return false;
}

/// Vertices reachable from s by a semi-directed walk (s itself included).
inline std::set<int> reach(const Graph& g, int s) {
  std::set<int> seen{s};
  std::vector<int> todo{s};
  while (!todo.empty()) {
    int u = todo.back();
    todo.pop_back();
    for (int w = 0; w < g.n; ++w) {
      if (w != u && step(g, u, w) && seen.insert(w).second) todo.push_back(w);
    }
  }
  return seen;
}

/// A simple path of at least two steps from `from` to `to`, by exhaustive DFS.
inline bool long_simple_path(const Graph& g, int from, int to) {
  std::vector<bool> on(g.n, false);
  std::function<bool(int, int)> dfs = [&](int cur, int steps) {
    for (int w = 0; w < g.n; ++w) {
      if (w == cur || !step(g, cur, w)) continue;
      if (w == to) {
        if (steps + 1 >= 2) return true;
        continue;
      }
      if (on[w]) continue;
      on[w] = true;
      if (dfs(w, steps + 1)) return true;
      on[w] = false;
    }
    return false;
  };
  on[from] = true;
  return dfs(from, 0);
}

using Triplexes = std::set<std::tuple<int, int, int>>;  // (a, c, center), a < c

inline Triplexes triplexes(const Graph& g) {
  Triplexes out;
  for (int a = 0; a < g.n; ++a) {
    for (int c = a + 1; c < g.n; ++c) {
      if (g.adj(a, c)) continue;
      for (int b = 0; b < g.n; ++b) {
        if (b == a || b == c || !g.adj(a, b) || !g.adj(b, c)) continue;
        const bool ab = g.arrow(a, b), cb = g.arrow(c, b);
        const bool immorality = ab && cb;
        const bool flag = ab && g.line(b, c);
        const bool antiflag = g.line(a, b) && cb;
        if (immorality || flag || antiflag) out.insert({a, c, b});
      }
    }
  }
  return out;
}

inline std::vector<int> skeleton_bits(const Graph& g) {
  std::vector<int> out;
  for (int x : g.e) out.push_back(x != 0);
  return out;
}

/// Every mixed graph on n vertices.
inline void for_each_graph(int n, const std::function<void(const Graph&)>& visit) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }
  Graph g{n, std::vector<int>(n * n, 0)};
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == pairs.size()) {
      visit(g);
      return;
    }
    for (int s = 0; s < 4; ++s) {
      g.set(pairs[i].first, pairs[i].second, s);
      rec(i + 1);
    }
    g.set(pairs[i].first, pairs[i].second, 0);
  };
  rec(0);
}

/// Equivalence class by definition: chain graphs with the same skeleton and triplexes.
inline std::vector<Graph> equivalence_class(const Graph& g) {
  const auto skel = skeleton_bits(g);
  const auto trip = triplexes(g);
  std::vector<Graph> out;
  for_each_graph(g.n, [&](const Graph& h) {
    if (skeleton_bits(h) == skel && !has_semidirected_cycle(h) && triplexes(h) == trip) out.push_back(h);
  });
  return out;
}

// Strength codes: 0 strong line, 1 weak line, 2 strong arrow, 3 weak arrow.
struct Essential {
  Graph graph;
  std::map<std::pair<int, int>, int> strength;
};

inline Essential essential(const std::vector<Graph>& cls) {
  Essential out{cls.front(), {}};
  const int n = out.graph.n;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!cls.front().adj(u, v)) continue;
      bool line = false, fwd = false, bwd = false;
      for (const Graph& m : cls) {
        line |= m.line(u, v);
        fwd |= m.arrow(u, v);
        bwd |= m.arrow(v, u);
      }
      if (fwd && bwd) {
        out.graph.set(u, v, 1);
        out.strength[{u, v}] = 1;
      } else if (fwd || bwd) {
        out.graph.set(u, v, fwd ? 2 : 3);
        out.strength[{u, v}] = line ? 3 : 2;
      } else {
        out.graph.set(u, v, 1);
        out.strength[{u, v}] = 0;
      }
    }
  }
  return out;
}

/// Induced line cycles of length >= 4 with no extra adjacency, by vertex subsets.
inline bool has_chordless_line_cycle(const Graph& g) {
  for (std::uint32_t mask = 0; mask < (1U << g.n); ++mask) {
    if (__builtin_popcount(mask) < 4) continue;
    bool ok = true;
    int first = -1;
    for (int u = 0; u < g.n && ok; ++u) {
      if (!(mask >> u & 1U)) continue;
      if (first < 0) first = u;
      int lines = 0, adjs = 0;
      for (int v = 0; v < g.n; ++v) {
        if (v == u || !(mask >> v & 1U)) continue;
        lines += g.line(u, v);
        adjs += g.adj(u, v);
      }
      ok = lines == 2 && adjs == 2;
    }
    if (!ok) continue;
    // Connected 2-regular means a single cycle.
    std::set<int> seen{first};
    std::vector<int> todo{first};
    while (!todo.empty()) {
      int u = todo.back();
      todo.pop_back();
      for (int v = 0; v < g.n; ++v) {
        if ((mask >> v & 1U) && g.line(u, v) && seen.insert(v).second) todo.push_back(v);
      }
    }
    if (static_cast<int>(seen.size()) == __builtin_popcount(mask)) return true;
  }
  return false;
}

inline bool directed_acyclic(const Graph& g) {
  std::vector<int> state(g.n, 0);
  std::function<bool(int)> dfs = [&](int u) {
    state[u] = 1;
    for (int w = 0; w < g.n; ++w) {
      if (!g.arrow(u, w)) continue;
      if (state[w] == 1) return false;
      if (state[w] == 0 && !dfs(w)) return false;
    }
    state[u] = 2;
    return true;
  };
  for (int u = 0; u < g.n; ++u) {
    if (state[u] == 0 && !dfs(u)) return false;
  }
  return true;
}

}  // namespace oracle
