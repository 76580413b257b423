#include "doctest.h"

#include <algorithm>

#include "cgk/census.hpp"
#include "cgk/chain_graph.hpp"
#include "cgk/error.hpp"
#include "support/fixtures.hpp"

using namespace cgk;

namespace {

using Histogram = std::map<std::uint64_t, std::uint64_t>;

// Counts from an independent brute-force enumeration of all mixed graphs.
struct Expected {
  std::size_t n;
  std::uint64_t cgs, classes, num, den;
  Histogram histogram;
};

const Expected kSmall[] = {
    {1, 1, 1, 1, 1, {{1, 1}}},
    {2, 4, 2, 1, 2, {{1, 1}, {3, 1}}},
    {3, 50, 11, 11, 50, {{1, 1}, {3, 6}, {6, 3}, {13, 1}}},
    {4, 1688, 224, 28, 211,
     {{1, 28}, {3, 42}, {4, 28}, {6, 24}, {7, 6}, {8, 24}, {9, 21}, {10, 12}, {11, 4}, {12, 12}, {13, 4},
      {22, 12}, {26, 6}, {75, 1}}},
};

}  // namespace

TEST_CASE("census counts on small vertex sets") {
  for (const Expected& e : kSmall) {
    CAPTURE(e.n);
    const CensusReport r = census(e.n);
    CHECK(r.n == e.n);
    CHECK(r.total_cgs == e.cgs);
    CHECK(r.total_classes == e.classes);
    CHECK(r.ratio_num == e.num);
    CHECK(r.ratio_den == e.den);
    CHECK(r.class_size_histogram == e.histogram);
    std::uint64_t members = 0, classes = 0;
    for (const auto& [size, count] : r.class_size_histogram) {
      members += size * count;
      classes += count;
    }
    CHECK(members == r.total_cgs);
    CHECK(classes == r.total_classes);
  }
}

TEST_CASE("census on five vertices") {
  const CensusReport r = census(5, {.jobs = 2, .verify_classes = false});
  CHECK(r.total_cgs == 142624);
  CHECK(r.total_classes == 14869);
  CHECK(r.ratio_num == 14869);
  CHECK(r.ratio_den == 142624);
  CHECK(r.class_size_histogram.at(1) == 2023);
  CHECK(r.class_size_histogram.at(541) == 1);
  CHECK(r.class_size_histogram.rbegin()->first == 541);
}

TEST_CASE("census is independent of the worker count") {
  const CensusReport one = census(4, {.jobs = 1});
  CHECK(census(4, {.jobs = 3}) == one);
  CHECK(census(4, {.jobs = 64}) == one);
  CHECK(partition_chain_graphs(3, {.jobs = 1}).size() == partition_chain_graphs(3, {.jobs = 4}).size());
}

TEST_CASE("census refuses vertex counts above the cap") {
  CHECK_THROWS_AS(census(6), CapExceeded);
  CHECK_THROWS_AS(census(3, {.cap = 2}), CapExceeded);
  CHECK_THROWS_AS(census(7, {.cap = 9}), CapExceeded);
  CHECK_THROWS_AS(for_each_chain_graph(6, [](const MixedGraph&) {}), CapExceeded);
  CHECK(census(0).total_cgs == 1);
}

TEST_CASE("candidate decoding") {
  // Pairs of three vertices in order (v1,v2), (v1,v3), (v2,v3); digits 0..3 are
  // absent, line, forward arrow, backward arrow, first pair most significant.
  const MixedGraph g = decode_candidate(3, 1 * 16 + 2 * 4 + 3);
  CHECK(std::ranges::equal(g.labels(), std::vector<std::string>{"v1", "v2", "v3"}));
  CHECK(g.has_line(0, 1));
  CHECK(g.has_arrow(0, 2));
  CHECK(g.has_arrow(2, 1));
  CHECK(decode_candidate(3, 0).edge_count() == 0);
  CHECK_THROWS_AS(decode_candidate(2, 4), Error);
}

TEST_CASE("partition groups chain graphs by least member") {
  const auto classes = partition_chain_graphs(2);
  REQUIRE(classes.size() == 2);
  CHECK(classes[0].members == std::vector<std::uint64_t>{0});
  CHECK(classes[1].members == std::vector<std::uint64_t>{1, 2, 3});
  const auto three = partition_chain_graphs(3);
  std::size_t total = 0;
  for (std::size_t i = 0; i < three.size(); ++i) {
    CHECK(std::is_sorted(three[i].members.begin(), three[i].members.end()));
    if (i) CHECK(three[i - 1].members.front() < three[i].members.front());
    total += three[i].members.size();
    for (std::uint64_t m : three[i].members) CHECK(is_chain_graph(decode_candidate(3, m)));
  }
  CHECK(total == 50);
}

TEST_CASE("enumerated chain graphs") {
  const auto all = enumerate_chain_graphs(3);
  CHECK(all.size() == 50);
  for (const MixedGraph& g : all) CHECK(is_chain_graph(g));
  std::size_t visited = 0;
  for_each_chain_graph(2, [&](const MixedGraph&) { ++visited; });
  CHECK(visited == 4);
}

TEST_CASE("invariant suites hold exhaustively on small vertex sets") {
  for (std::size_t n = 1; n <= 4; ++n) {
    CAPTURE(n);
    const CrossValidationReport r = cross_validate(n, all_properties(), 2);
    for (const Violation& v : r.violations) {
      MESSAGE(to_string(v.property) << ": " << v.detail << "\n" << v.graph);
    }
    CHECK(r.ok());
    CHECK(r.graphs_checked > 0);
  }
  CHECK(cross_validate(4, {Property::AdgCriterion}).classes_checked == 224);
}

TEST_CASE("property names") {
  for (Property p : all_properties()) CHECK(property_from_string(to_string(p)) == p);
  CHECK(all_properties().size() == 14);
  CHECK(to_string(Property::WeakLineBlocks) == "weak-line-blocks");
  CHECK_THROWS_AS(property_from_string("no-such-property"), Error);
}
