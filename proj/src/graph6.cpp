#include "srcfg/graph6.hpp"

#include <fstream>

#include "srcfg/errors.hpp"

namespace srcfg {

std::string encode_graph6(const Graph& g) {
  const std::uint32_t n = g.order();
  if (n > kGraph6MaxOrder) throw MalformedGraph6("graph too large for graph6 (n=" + std::to_string(n) + ")");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int filled = 0;
  int acc = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph decode_graph6(std::string_view text) {
  if (text.substr(0, 10) == ">>graph6<<") text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw MalformedGraph6("empty input");
  for (char c : text)
    if (static_cast<unsigned char>(c) < 63 || static_cast<unsigned char>(c) > 126)
      throw MalformedGraph6("byte outside the printable graph6 range");

  auto val = [&](std::size_t i) { return static_cast<std::uint32_t>(static_cast<unsigned char>(text[i]) - 63); };
  std::uint32_t n = 0;
  std::size_t pos = 0;
  if (val(0) < 63) {
    n = val(0);
    pos = 1;
  } else {
    if (text.size() < 4) throw MalformedGraph6("truncated size field");
    if (val(1) == 63) throw MalformedGraph6("graphs above " + std::to_string(kGraph6MaxOrder) + " vertices are not supported");
    n = (val(1) << 12) | (val(2) << 6) | val(3);
    pos = 4;
    if (n <= 62) throw MalformedGraph6("non-canonical size field");
  }
  const std::uint64_t bits = static_cast<std::uint64_t>(n) * (n ? n - 1 : 0) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes)
    throw MalformedGraph6("expected " + std::to_string(bytes) + " adjacency bytes, found " + std::to_string(text.size() - pos));

  Graph g(n);
  std::uint64_t k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k) {
      const std::uint32_t byte = val(pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1u) g.add_edge(i, j);
    }
  return g;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileNotFound(path);
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.push_back(decode_graph6(line));
  }
  return out;
}

void write_graph6_file(const std::string& path, const std::vector<Graph>& graphs) {
  std::ofstream out(path);
  if (!out) throw FileNotFound(path);
  for (const auto& g : graphs) out << encode_graph6(g) << '\n';
}

}  // namespace srcfg
