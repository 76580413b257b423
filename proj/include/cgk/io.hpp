#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cgk/census.hpp"
#include "cgk/equivalence.hpp"
#include "cgk/mixed_graph.hpp"

namespace cgk {

// Graph text format, one declaration per line:
//
//   node NAME
//   NAME -- NAME [s|w]
//   NAME -> NAME [s|w]
//   # comment
//
// Blank lines are ignored; a trailing `# ...` on a declaration is a comment.

struct NodeDecl {
  std::string name;
  bool operator==(const NodeDecl&) const = default;
};

enum class EdgeKind { Line, Arrow };

struct EdgeDecl {
  std::string from;
  std::string to;
  EdgeKind kind;
  std::optional<char> strength;  // 's' or 'w'
  bool operator==(const EdgeDecl&) const = default;
};

struct CommentDecl {
  std::string text;  // without the leading '#'
  bool trailing = false;  // follows a declaration on the same line
  bool operator==(const CommentDecl&) const = default;
};

using Declaration = std::variant<NodeDecl, EdgeDecl, CommentDecl>;

/// Parsed graph text with its comments, in source order.
struct GraphDocument {
  std::vector<Declaration> declarations;
  std::vector<std::size_t> source_lines;  // 1-based, parallel to declarations
};

/// Syntax check only; throws ParseError.
GraphDocument parse_document(std::string_view text);
/// Declarations and comments back to text.
std::string render_document(const GraphDocument& doc);

struct ParsedGraph {
  MixedGraph graph;
  /// Present iff every edge carried a strength annotation.
  std::optional<StrengthLabeledGraph> labeled;
};

/// Throws ParseError on syntax errors, duplicate pairs, self-edges, unknown
/// annotations, or annotations on only some edges.
ParsedGraph parse_graph(std::string_view text);

enum class GraphFormat { Text, Dot, Json };

/// Isolated vertices as `node` lines, then one edge per line in canonical
/// pair order. No trailing newline.
std::string render_graph(const MixedGraph& g, GraphFormat format = GraphFormat::Text);
/// As above, with `[s]`/`[w]` suffixes (text), bold strong edges (DOT) or a
/// strength field (JSON).
std::string render_graph(const StrengthLabeledGraph& g, GraphFormat format = GraphFormat::Text);

/// Throws Error on an unknown name.
GraphFormat graph_format_from_string(std::string_view name);

/// Header `n,total_cgs,total_classes,ratio_num,ratio_den` plus one row.
std::string census_csv(const CensusReport& report);
std::string census_json(const CensusReport& report);

}  // namespace cgk
