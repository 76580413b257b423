#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cgk/mixed_graph.hpp"

namespace cgk {

/// Default and hard limits on the census vertex count.
inline constexpr std::size_t kDefaultCensusCap = 5;
inline constexpr std::size_t kMaxCensusVertices = 6;

struct CensusReport {
  std::size_t n = 0;
  std::uint64_t total_cgs = 0;
  std::uint64_t total_classes = 0;
  /// total_classes / total_cgs in lowest terms.
  std::uint64_t ratio_num = 0;
  std::uint64_t ratio_den = 1;
  /// class size -> number of classes of that size
  std::map<std::uint64_t, std::uint64_t> class_size_histogram;

  double ratio() const { return static_cast<double>(ratio_num) / static_cast<double>(ratio_den); }
  bool operator==(const CensusReport&) const = default;
};

struct CensusOptions {
  std::size_t jobs = 1;
  std::size_t cap = kDefaultCensusCap;
  /// Re-derive every class by brute-force enumeration from its first member.
  bool verify_classes = true;
};

/// Calls `visit` on every labeled chain graph on vertices v1..vn, in
/// lexicographic pair-state order. Throws CapExceeded above `cap`.
void for_each_chain_graph(std::size_t n, const std::function<void(const MixedGraph&)>& visit,
                          std::size_t cap = kDefaultCensusCap);

std::vector<MixedGraph> enumerate_chain_graphs(std::size_t n, std::size_t cap = kDefaultCensusCap);

/// The chain graphs of one equivalence class, by candidate index.
struct CensusClass {
  std::vector<std::uint64_t> members;  // ascending candidate indices
};

/// Partition of all chain graphs on n vertices into equivalence classes,
/// ordered by least member. Index k decodes to the graph whose pair states
/// are the base-4 digits of k, first pair most significant.
std::vector<CensusClass> partition_chain_graphs(std::size_t n, const CensusOptions& options = {});

/// Decodes a candidate index into its graph on v1..vn.
MixedGraph decode_candidate(std::size_t n, std::uint64_t index);

/// Counts chain graphs and their equivalence classes on n labeled vertices.
/// Throws CapExceeded above `options.cap`, and Error if a class fails
/// verification.
CensusReport census(std::size_t n, const CensusOptions& options = {});

/// Invariant suites run by `cross_validate`.
enum class Property {
  ProtectionMatchesIrreversibility,
  ClosurePropertiesAgree,
  ValidatorAcceptsEssentials,
  ValidatorAcceptsOnlyEssentials,
  ComponentDichotomy,
  ArrowsWellProtected,
  StrongClosureHolds,
  AdgCriterion,
  FlagsStrong,
  BiflagAndCycleStrength,
  WeakLineBlocks,
  ReducedGraphClean,
  EssentialInClass,
  DirectedValidatorAgrees,
};

std::vector<Property> all_properties();
std::string to_string(Property p);
/// Throws Error for an unknown name.
Property property_from_string(const std::string& name);

struct Violation {
  Property property;
  std::string graph;   // text rendering of the offending graph
  std::string detail;
};

struct CrossValidationReport {
  std::size_t graphs_checked = 0;
  std::size_t classes_checked = 0;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

/// Runs the selected invariant suites over every chain graph on n vertices
/// (every fully directed graph for DirectedValidatorAgrees).
CrossValidationReport cross_validate(std::size_t n, const std::vector<Property>& properties,
                                     std::size_t jobs = 1);

}  // namespace cgk
