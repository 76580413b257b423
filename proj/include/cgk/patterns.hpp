#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "cgk/mixed_graph.hpp"

namespace cgk {

/// Nonadjacent ends {a, c} meeting at center b as a->b<-c, a->b-c or a-b<-c.
struct Triplex {
  Vertex a;  // a < c
  Vertex c;
  Vertex center;

  bool operator==(const Triplex&) const = default;
  auto operator<=>(const Triplex&) const = default;
};

/// Sorted, duplicate-free.
using TriplexSet = std::vector<Triplex>;

enum class TripleShape { Immorality, Flag, Antiflag, Chordless2Dipath, Other };

/// Induced path a ~ b ~ c with a and c nonadjacent, read in the given order.
struct ClassifiedTriple {
  Vertex a;
  Vertex b;
  Vertex c;
  TripleShape shape;

  bool operator==(const ClassifiedTriple&) const = default;
};

/// Chordless undirected spine c1 - ... - ck with a flag x -> c2 - c1 at one end
/// and a flag y -> c(k-1) - ck at the other. For k = 2 that is x -> c2 and
/// y -> c1. The two parents coincide only when k >= 3.
struct Biflag {
  Vertex first_parent;
  Vertex second_parent;
  std::vector<Vertex> spine;

  bool single_parent() const { return first_parent == second_parent; }
  bool operator==(const Biflag&) const = default;
};

/// Every induced two-edge path with nonadjacent ends, in both reading
/// directions, ordered by (b, a, c).
std::vector<ClassifiedTriple> classify_triples(const MixedGraph& g);

TriplexSet find_triplexes(const MixedGraph& g);

/// a -> b - c with a, c nonadjacent.
std::vector<ClassifiedTriple> find_flags(const MixedGraph& g);
/// a -> b <- c with a, c nonadjacent; reported once with a < c.
std::vector<ClassifiedTriple> find_immoralities(const MixedGraph& g);
/// a - b -> c with a, c nonadjacent.
std::vector<ClassifiedTriple> find_antiflags(const MixedGraph& g);
/// a -> b -> c with a, c nonadjacent.
std::vector<ClassifiedTriple> find_chordless_2dipaths(const MixedGraph& g);

/// No chordless cycle of length >= 4. Throws GraphError if `g` has an arrow.
bool is_chordal(const MixedGraph& g);

/// Chordality of the line subgraph induced by `subset`; arrows are ignored.
bool lines_chordal(const MixedGraph& g, VertexSet subset);

/// Cycles of length >= 4 made of lines in which no two nonconsecutive
/// vertices are adjacent by any edge. Each cycle is reported once, starting
/// at its least vertex and continuing towards the smaller of its two
/// neighbours. Stops after `limit` cycles.
std::vector<std::vector<Vertex>> find_chordless_undirected_cycles(
    const MixedGraph& g, std::size_t limit = std::numeric_limits<std::size_t>::max());

/// All biflags, spines read from the smaller end. Stops after `limit`.
std::vector<Biflag> find_biflags(const MixedGraph& g,
                                 std::size_t limit = std::numeric_limits<std::size_t>::max());

/// Maximum cardinality search visiting order: `prefix` first, then always a
/// vertex with the most visited neighbours, ties to the smallest index.
/// Throws GraphError if `g` has an arrow, is not chordal, or `prefix` is not
/// a complete set of distinct vertices.
std::vector<Vertex> mcs_order(const MixedGraph& g, std::span<const Vertex> prefix = {});

/// Every line oriented from the earlier to the later vertex of `mcs_order`.
MixedGraph mcs_perfect_orientation(const MixedGraph& g, std::span<const Vertex> prefix = {});

/// Acyclic with no immoralities. Throws GraphError if `g` has a line.
bool is_perfect_orientation(const MixedGraph& g);

/// No directed cycle (lines ignored).
bool is_acyclic_directed(const MixedGraph& g);

}  // namespace cgk
