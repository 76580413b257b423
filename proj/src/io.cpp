#include "cgk/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "json.hpp"

#include "cgk/error.hpp"

namespace cgk {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// [begin, end) of a whitespace-delimited token starting at or after `pos`.
struct Token {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::string_view text;
};

std::vector<Token> split_tokens(std::string_view s, std::size_t offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    if (i == s.size()) break;
    std::size_t j = i;
    while (j < s.size() && !is_space(s[j])) ++j;
    out.push_back({offset + i, offset + j, s.substr(i, j - i)});
    i = j;
  }
  return out;
}

[[noreturn]] void fail(std::size_t line, std::size_t column, const std::string& message) {
  throw ParseError(line, column, message);
}

std::string require_label(const Token& t, std::size_t line) {
  if (!is_valid_label(t.text)) fail(line, t.begin + 1, "invalid vertex name '" + std::string(t.text) + "'");
  return std::string(t.text);
}

Declaration parse_declaration(std::string_view decl, std::size_t line) {
  const std::size_t line_op = decl.find("--");
  const std::size_t arrow_op = decl.find("->");
  const std::size_t op = std::min(line_op, arrow_op);
  if (op == std::string_view::npos) {
    const auto tokens = split_tokens(decl, 0);
    if (tokens[0].text != "node") fail(line, tokens[0].begin + 1, "expected 'node NAME' or an edge");
    if (tokens.size() < 2) fail(line, decl.size() + 1, "missing vertex name after 'node'");
    if (tokens.size() > 2) fail(line, tokens[2].begin + 1, "unexpected text after vertex name");
    return NodeDecl{require_label(tokens[1], line)};
  }
  const auto left = split_tokens(decl.substr(0, op), 0);
  if (left.empty()) fail(line, op + 1, "missing source vertex");
  if (left.size() > 1) fail(line, left[1].begin + 1, "unexpected text before edge operator");
  EdgeDecl edge;
  edge.from = require_label(left[0], line);
  edge.kind = op == arrow_op ? EdgeKind::Arrow : EdgeKind::Line;
  const auto right = split_tokens(decl.substr(op + 2), op + 2);
  if (right.empty()) fail(line, decl.size() + 1, "missing target vertex");
  edge.to = require_label(right[0], line);
  if (right.size() >= 2) {
    const Token& a = right[1];
    if (a.text == "[s]") {
      edge.strength = 's';
    } else if (a.text == "[w]") {
      edge.strength = 'w';
    } else {
      fail(line, a.begin + 1, "unknown annotation '" + std::string(a.text) + "'");
    }
  }
  if (right.size() > 2) fail(line, right[2].begin + 1, "unexpected text after edge");
  return edge;
}

std::string edge_line(const std::string& from, const std::string& to, bool arrow, std::optional<char> strength) {
  std::string out = from + (arrow ? " -> " : " -- ") + to;
  if (strength) out += std::string(" [") + *strength + "]";
  return out;
}

char strength_char(EdgeStrength s) { return is_strong(s) ? 's' : 'w'; }

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

// Shared by the plain and strength-labeled renderers; `strength` may be null.
std::string render_impl(const MixedGraph& g, const StrengthLabeledGraph* labeled, GraphFormat format) {
  auto strength_at = [&](const Edge& e) -> std::optional<EdgeStrength> {
    if (!labeled) return std::nullopt;
    return labeled->strength_of(e.u, e.v);
  };
  const std::vector<Edge> edges = g.edges();
  switch (format) {
    case GraphFormat::Text: {
      std::vector<std::string> lines;
      for (Vertex v : g.all_vertices()) {
        if (g.adjacent_set(v).empty()) lines.push_back("node " + g.label(v));
      }
      for (const Edge& e : edges) {
        std::optional<char> s;
        if (auto st = strength_at(e)) s = strength_char(*st);
        switch (e.state) {
          case EdgeState::Line: lines.push_back(edge_line(g.label(e.u), g.label(e.v), false, s)); break;
          case EdgeState::ArrowForward: lines.push_back(edge_line(g.label(e.u), g.label(e.v), true, s)); break;
          case EdgeState::ArrowBackward: lines.push_back(edge_line(g.label(e.v), g.label(e.u), true, s)); break;
          case EdgeState::Absent: break;
        }
      }
      std::string out;
      for (std::size_t i = 0; i < lines.size(); ++i) {
        if (i) out += '\n';
        out += lines[i];
      }
      return out;
    }
    case GraphFormat::Dot: {
      std::string out = "digraph G {\n";
      for (Vertex v : g.all_vertices()) out += "  " + quoted(g.label(v)) + ";\n";
      for (const Edge& e : edges) {
        Vertex from = e.u, to = e.v;
        if (e.state == EdgeState::ArrowBackward) std::swap(from, to);
        std::vector<std::string> attrs;
        if (e.state == EdgeState::Line) attrs.push_back("dir=none");
        if (auto st = strength_at(e); st && is_strong(*st)) attrs.push_back("style=bold");
        out += "  " + quoted(g.label(from)) + " -> " + quoted(g.label(to));
        if (!attrs.empty()) {
          out += " [";
          for (std::size_t i = 0; i < attrs.size(); ++i) out += (i ? ", " : "") + attrs[i];
          out += "]";
        }
        out += ";\n";
      }
      return out + "}";
    }
    case GraphFormat::Json: {
      nlohmann::ordered_json j;
      j["vertices"] = nlohmann::ordered_json::array();
      for (const std::string& l : g.labels()) j["vertices"].push_back(l);
      j["edges"] = nlohmann::ordered_json::array();
      for (const Edge& e : edges) {
        Vertex from = e.u, to = e.v;
        if (e.state == EdgeState::ArrowBackward) std::swap(from, to);
        nlohmann::ordered_json je;
        je["from"] = g.label(from);
        je["to"] = g.label(to);
        je["kind"] = e.state == EdgeState::Line ? "line" : "arrow";
        if (auto st = strength_at(e)) {
          je["strength"] = is_strong(*st) ? "strong" : "weak";
        } else {
          je["strength"] = nullptr;
        }
        j["edges"].push_back(std::move(je));
      }
      return j.dump(2);
    }
  }
  return {};
}

}  // namespace

GraphDocument parse_document(std::string_view text) {
  GraphDocument doc;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    const std::size_t hash = line.find('#');
    std::string_view decl = line.substr(0, hash);
    const bool blank = split_tokens(decl, 0).empty();
    if (!blank) {
      doc.declarations.push_back(parse_declaration(decl, line_no));
      doc.source_lines.push_back(line_no);
    }
    if (hash != std::string_view::npos) {
      std::string_view comment = line.substr(hash + 1);
      if (!comment.empty() && comment.back() == '\r') comment.remove_suffix(1);
      doc.declarations.push_back(CommentDecl{std::string(comment), !blank});
      doc.source_lines.push_back(line_no);
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return doc;
}

std::string render_document(const GraphDocument& doc) {
  std::string out;
  bool first = true;
  for (const Declaration& d : doc.declarations) {
    if (const auto* c = std::get_if<CommentDecl>(&d); c && c->trailing && !first) {
      out += " #" + c->text;
      continue;
    }
    if (!first) out += '\n';
    first = false;
    if (const auto* n = std::get_if<NodeDecl>(&d)) {
      out += "node " + n->name;
    } else if (const auto* e = std::get_if<EdgeDecl>(&d)) {
      out += edge_line(e->from, e->to, e->kind == EdgeKind::Arrow, e->strength);
    } else {
      out += "#" + std::get<CommentDecl>(d).text;
    }
  }
  return out;
}

ParsedGraph parse_graph(std::string_view text) {
  const GraphDocument doc = parse_document(text);
  std::set<std::string> names;
  for (const Declaration& d : doc.declarations) {
    if (const auto* n = std::get_if<NodeDecl>(&d)) names.insert(n->name);
    if (const auto* e = std::get_if<EdgeDecl>(&d)) {
      names.insert(e->from);
      names.insert(e->to);
    }
  }
  if (names.size() > kMaxVertices) {
    fail(1, 1, "graph has " + std::to_string(names.size()) + " vertices; at most " +
                   std::to_string(kMaxVertices) + " are supported");
  }
  std::vector<std::string> labels(names.begin(), names.end());
  std::map<std::string, Vertex> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = static_cast<Vertex>(i);

  std::vector<Edge> edges;
  std::map<std::pair<Vertex, Vertex>, EdgeStrength> strengths;
  std::map<std::pair<Vertex, Vertex>, std::size_t> seen;
  std::optional<std::size_t> annotated_line, bare_line;
  for (std::size_t k = 0; k < doc.declarations.size(); ++k) {
    const auto* e = std::get_if<EdgeDecl>(&doc.declarations[k]);
    if (!e) continue;
    const std::size_t line = doc.source_lines[k];
    const Vertex a = index[e->from], b = index[e->to];
    if (a == b) fail(line, 1, "self-edge on '" + e->from + "'");
    const std::pair<Vertex, Vertex> key{std::min(a, b), std::max(a, b)};
    if (auto it = seen.find(key); it != seen.end()) {
      fail(line, 1, "duplicate edge between '" + e->from + "' and '" + e->to + "' (first declared on line " +
                        std::to_string(it->second) + ")");
    }
    seen[key] = line;
    EdgeState state = EdgeState::Line;
    if (e->kind == EdgeKind::Arrow) state = a < b ? EdgeState::ArrowForward : EdgeState::ArrowBackward;
    edges.push_back({key.first, key.second, state});
    if (e->strength) {
      if (!annotated_line) annotated_line = line;
      const bool strong = *e->strength == 's';
      strengths[key] = e->kind == EdgeKind::Line ? (strong ? EdgeStrength::StrongLine : EdgeStrength::WeakLine)
                                                 : (strong ? EdgeStrength::StrongArrow : EdgeStrength::WeakArrow);
    } else if (!bare_line) {
      bare_line = line;
    }
  }
  if (annotated_line && bare_line) {
    fail(*bare_line, 1, "edge lacks a strength annotation while others have one (line " +
                            std::to_string(*annotated_line) + ")");
  }
  ParsedGraph out{MixedGraph::from_edges(std::move(labels), edges), std::nullopt};
  if (annotated_line) out.labeled = StrengthLabeledGraph{out.graph, std::move(strengths)};
  return out;
}

std::string render_graph(const MixedGraph& g, GraphFormat format) { return render_impl(g, nullptr, format); }

std::string render_graph(const StrengthLabeledGraph& g, GraphFormat format) {
  return render_impl(g.graph, &g, format);
}

GraphFormat graph_format_from_string(std::string_view name) {
  if (name == "text") return GraphFormat::Text;
  if (name == "dot") return GraphFormat::Dot;
  if (name == "json") return GraphFormat::Json;
  throw Error("unknown format '" + std::string(name) + "' (expected text, dot or json)");
}

std::string census_csv(const CensusReport& r) {
  return "n,total_cgs,total_classes,ratio_num,ratio_den\n" + std::to_string(r.n) + "," +
         std::to_string(r.total_cgs) + "," + std::to_string(r.total_classes) + "," + std::to_string(r.ratio_num) +
         "," + std::to_string(r.ratio_den) + "\n";
}

std::string census_json(const CensusReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["total_cgs"] = r.total_cgs;
  j["total_classes"] = r.total_classes;
  j["ratio_num"] = r.ratio_num;
  j["ratio_den"] = r.ratio_den;
  j["ratio"] = r.ratio();
  j["class_size_histogram"] = nlohmann::ordered_json::array();
  for (const auto& [size, count] : r.class_size_histogram) {
    j["class_size_histogram"].push_back({{"size", size}, {"count", count}});
  }
  return j.dump(2);
}

}  // namespace cgk
