#include "doctest.h"

#include "cgk/chain_graph.hpp"
#include "cgk/error.hpp"
#include "cgk/patterns.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace cgk;
using fx::G;

namespace {

std::vector<Vertex> labels_to(const MixedGraph& g, std::initializer_list<std::string_view> names) {
  std::vector<Vertex> out;
  for (auto n : names) out.push_back(g.vertex(n));
  return out;
}

}  // namespace

TEST_CASE("flag, immorality and antiflag shapes") {
  const MixedGraph flag = G(fx::kFlag);
  const auto flags = find_flags(flag);
  REQUIRE(flags.size() == 1);
  CHECK(flags[0] == ClassifiedTriple{0, 1, 2, TripleShape::Flag});
  CHECK(find_immoralities(flag).empty());

  const MixedGraph imm = G(fx::kImmorality);
  CHECK(find_immoralities(imm) == std::vector<ClassifiedTriple>{{0, 1, 2, TripleShape::Immorality}});
  CHECK(find_flags(imm).empty());

  CHECK(find_immoralities(G("a -> b\nc -> b\na -> c")).empty());
  CHECK(find_flags(G("a -> b\nc -> b\na -> c")).empty());

  const MixedGraph anti = G("a -- b\nb -> c");
  CHECK(find_antiflags(anti) == std::vector<ClassifiedTriple>{{0, 1, 2, TripleShape::Antiflag}});
  CHECK(find_triplexes(anti).empty());
  // a - b <- c is the flag c -> b - a read backwards.
  CHECK(find_antiflags(G(fx::kReverseFlag)).empty());
  CHECK(find_flags(G(fx::kReverseFlag)) == std::vector<ClassifiedTriple>{{2, 1, 0, TripleShape::Flag}});
}

TEST_CASE("triplexes") {
  CHECK(find_triplexes(G(fx::kFlag)) == TriplexSet{{0, 2, 1}});
  CHECK(find_triplexes(G(fx::kReverseFlag)) == TriplexSet{{0, 2, 1}});
  CHECK(find_triplexes(G(fx::kImmorality)) == TriplexSet{{0, 2, 1}});
  CHECK(find_triplexes(G(fx::kPath)).empty());
  CHECK(find_triplexes(G(fx::kDipath)).empty());
  CHECK(find_triplexes(G(fx::kTriangle)).empty());
}

TEST_CASE("chordless two-edge directed paths") {
  const auto d = find_chordless_2dipaths(G(fx::kDipath));
  CHECK(d == std::vector<ClassifiedTriple>{{0, 1, 2, TripleShape::Chordless2Dipath}});
  CHECK(find_chordless_2dipaths(G("a -> b\nb -> c\na -> c")).empty());
}

TEST_CASE("chordality") {
  CHECK_FALSE(is_chordal(G(fx::kFourCycle)));
  CHECK(is_chordal(G("a -- b\nb -- c\nc -- d\na -- d\na -- c")));
  CHECK(is_chordal(G(fx::kTriangle)));
  CHECK_THROWS_AS(is_chordal(G(fx::kFlag)), GraphError);
  const MixedGraph g = G("a -- b\nb -- c\nc -- d\na -- d\ne -> a");
  CHECK_FALSE(lines_chordal(g, g.all_vertices()));
  CHECK(lines_chordal(g, fx::S(g, {"a", "b", "c"})));
}

TEST_CASE("chordless undirected cycles") {
  const MixedGraph cyc = G(fx::kFourCycle);
  const auto cycles = find_chordless_undirected_cycles(cyc);
  CHECK(cycles == std::vector<std::vector<Vertex>>{labels_to(cyc, {"a", "b", "c", "d"})});
  CHECK(find_chordless_undirected_cycles(G("a -- b\nb -- c\nc -- d\na -- d\na -> c")).empty());
  CHECK(find_chordless_undirected_cycles(G("a -- b\nb -- c\nc -- d\na -- d\na -- c")).empty());
  // Two 4-cycles sharing an edge, plus the 6-cycle around them.
  const MixedGraph two = G("a -- b\nb -- c\nc -- d\nd -- a\nc -- e\ne -- f\nf -- d");
  CHECK(find_chordless_undirected_cycles(two).size() == 2);
  CHECK(find_chordless_undirected_cycles(two, 1).size() == 1);
  const MixedGraph hexagon = G("a -- b\nb -- c\nc -- d\nd -- e\ne -- f\nf -- a");
  CHECK(find_chordless_undirected_cycles(hexagon).size() == 1);
}

TEST_CASE("biflags") {
  const MixedGraph bf = G(fx::kBiflag);
  const auto found = find_biflags(bf);
  REQUIRE(found.size() == 1);
  CHECK(found[0].spine == labels_to(bf, {"c1", "c2"}));
  CHECK_FALSE(found[0].single_parent());
  CHECK(find_biflags(G(fx::kFlag)).empty());
  CHECK(find_biflags(G(fx::kFourCycle)).empty());

  // Single parent over a three-vertex spine: a -> c2 with c1 - c2 - c3.
  const MixedGraph single = G("a -> c2\nc1 -- c2\nc2 -- c3");
  const auto one = find_biflags(single);
  REQUIRE(one.size() == 1);
  CHECK(one[0].single_parent());
  CHECK(one[0].spine == labels_to(single, {"c1", "c2", "c3"}));

  // The same parent cannot close a two-vertex spine.
  CHECK(find_biflags(G("a -> c1\nc1 -- c2")).empty());
}

TEST_CASE("maximum cardinality search") {
  const MixedGraph path = G(fx::kPath);
  const Vertex a = 0, b = 1, c = 2;
  const Vertex pa[] = {a};
  CHECK(mcs_perfect_orientation(path, pa) == G("a -> b\nb -> c"));
  const Vertex pb[] = {b};
  CHECK(mcs_perfect_orientation(path, pb) == G("b -> a\nb -> c"));
  CHECK(mcs_order(path) == std::vector<Vertex>{a, b, c});
  CHECK_THROWS_AS(mcs_order(G(fx::kFourCycle)), GraphError);
  const Vertex bad[] = {a, c};
  CHECK_THROWS_AS(mcs_order(path, bad), GraphError);
  const Vertex dup[] = {a, a};
  CHECK_THROWS_AS(mcs_order(path, dup), GraphError);
  CHECK_THROWS_AS(mcs_order(G(fx::kFlag)), GraphError);
}

TEST_CASE("perfect orientations") {
  CHECK(is_perfect_orientation(G("a -> b\nb -> c\na -> c")));
  CHECK_FALSE(is_perfect_orientation(G(fx::kImmorality)));
  CHECK_FALSE(is_perfect_orientation(G("a -> b\nb -> c\nc -> a")));
  CHECK_THROWS_AS(is_perfect_orientation(G(fx::kPath)), GraphError);
  CHECK(is_acyclic_directed(G(fx::kFlag)));
  CHECK_FALSE(is_acyclic_directed(G("a -> b\nb -> c\nc -> a")));
}

TEST_CASE("triplexes match the definition and survive relabeling") {
  gen::Rng rng(21);
  for (int i = 0; i < 500; ++i) {
    const MixedGraph g = gen::chain_graph(rng, gen::uniform(rng, 1, 7), 0.55);
    oracle::Triplexes want;
    for (const Triplex& t : find_triplexes(g)) want.insert({int(t.a), int(t.c), int(t.center)});
    CHECK(want == oracle::triplexes(oracle::from(g)));

    std::vector<Vertex> image;
    const MixedGraph h = gen::relabel(rng, g, image);
    TriplexSet mapped;
    for (const Triplex& t : find_triplexes(g)) {
      mapped.push_back({std::min(image[t.a], image[t.c]), std::max(image[t.a], image[t.c]), image[t.center]});
    }
    std::sort(mapped.begin(), mapped.end());
    CHECK(mapped == find_triplexes(h));
  }
}

TEST_CASE("triple shapes are exclusive and cover every induced path") {
  gen::Rng rng(22);
  for (int i = 0; i < 300; ++i) {
    const MixedGraph g = gen::mixed_graph(rng, gen::uniform(rng, 3, 6));
    std::set<std::tuple<Vertex, Vertex, Vertex>> seen;
    for (const ClassifiedTriple& t : classify_triples(g)) {
      CHECK(seen.insert({t.a, t.b, t.c}).second);
      CHECK_FALSE(g.adjacent(t.a, t.c));
      CHECK(g.adjacent(t.a, t.b));
      CHECK(g.adjacent(t.b, t.c));
      const bool imm = g.has_arrow(t.a, t.b) && g.has_arrow(t.c, t.b);
      const bool flag = g.has_arrow(t.a, t.b) && g.has_line(t.b, t.c);
      const bool anti = g.has_line(t.a, t.b) && g.has_arrow(t.b, t.c);
      const bool dipath = g.has_arrow(t.a, t.b) && g.has_arrow(t.b, t.c);
      CHECK(imm + flag + anti + dipath <= 1);
      const TripleShape want = imm    ? TripleShape::Immorality
                               : flag ? TripleShape::Flag
                               : anti ? TripleShape::Antiflag
                               : dipath ? TripleShape::Chordless2Dipath
                                        : TripleShape::Other;
      CHECK(t.shape == want);
    }
    std::size_t paths = 0;
    for (Vertex b = 0; b < g.vertex_count(); ++b) {
      for (Vertex a : g.adjacent_set(b)) {
        for (Vertex c : g.adjacent_set(b) - g.adjacent_set(a)) paths += c != a;
      }
    }
    CHECK(seen.size() == paths);
  }
}

TEST_CASE("chordless cycles are empty exactly for chordal graphs") {
  gen::Rng rng(23);
  for (int i = 0; i < 400; ++i) {
    const std::size_t n = gen::uniform(rng, 1, 8);
    std::vector<EdgeState> states(pair_count(n));
    for (auto& s : states) s = gen::coin(rng, 0.4) ? EdgeState::Line : EdgeState::Absent;
    const MixedGraph u = MixedGraph::from_pair_states(gen::vertices(n), states);
    const bool none = find_chordless_undirected_cycles(u, 1).empty();
    CHECK(none == is_chordal(u));
    CHECK(none == !oracle::has_chordless_line_cycle(oracle::from(u)));
  }
}

TEST_CASE("MCS orients chordal graphs perfectly and honours the prefix") {
  gen::Rng rng(24);
  for (int i = 0; i < 200; ++i) {
    const MixedGraph u = gen::chordal_graph(rng, gen::uniform(rng, 1, 12));
    const std::vector<Vertex> prefix = gen::complete_prefix(rng, u);
    const std::vector<Vertex> order = mcs_order(u, prefix);
    CHECK(std::equal(prefix.begin(), prefix.end(), order.begin()));
    const MixedGraph d = mcs_perfect_orientation(u, prefix);
    CHECK(is_perfect_orientation(d));
    CHECK(skeleton(d) == u);
    if (!prefix.empty()) {
      VertexSet clique;
      for (Vertex v : prefix) clique.insert(v);
      for (Vertex v : u.neighbors(prefix.front()) - clique) CHECK(d.has_arrow(prefix.front(), v));
    }
  }
}
