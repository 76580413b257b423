#pragma once

#include <string_view>

#include "cgk/io.hpp"
#include "cgk/mixed_graph.hpp"

namespace fx {

inline cgk::MixedGraph G(std::string_view text) { return cgk::parse_graph(text).graph; }

inline cgk::VertexSet S(const cgk::MixedGraph& g, std::initializer_list<std::string_view> labels) {
  cgk::VertexSet s;
  for (auto l : labels) s.insert(g.vertex(l));
  return s;
}

inline constexpr std::string_view kFlag = "a -> b\nb -- c";
inline constexpr std::string_view kReverseFlag = "a -- b\nc -> b";
inline constexpr std::string_view kImmorality = "a -> b\nc -> b";
inline constexpr std::string_view kPath = "a -- b\nb -- c";
inline constexpr std::string_view kDipath = "a -> b\nb -> c";
inline constexpr std::string_view kTriangle = "a -- b\nb -- c\na -- c";
inline constexpr std::string_view kFourCycle = "a -- b\nb -- c\nc -- d\na -- d";
inline constexpr std::string_view kBiflag = "a -> c1\nc1 -- c2\nb -> c2";
inline constexpr std::string_view kSingleArrow = "a -> b";
inline constexpr std::string_view kCyclePendant = "b -- c\nc -- d\nd -- e\nb -- e\nb -- f";

}  // namespace fx
