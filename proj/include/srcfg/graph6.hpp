#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "srcfg/graph.hpp"

namespace srcfg {

inline constexpr std::uint32_t kGraph6MaxOrder = 258047;

/// Standard graph6 encoding (no header, no trailing newline).
std::string encode_graph6(const Graph& g);

/// Decodes one graph6 line. An optional ">>graph6<<" header and trailing
/// newline are accepted. Throws MalformedGraph6.
Graph decode_graph6(std::string_view text);

/// One graph per non-empty line.
std::vector<Graph> read_graph6_file(const std::string& path);
void write_graph6_file(const std::string& path, const std::vector<Graph>& graphs);

}  // namespace srcfg
