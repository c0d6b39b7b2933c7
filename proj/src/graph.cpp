#include "srcfg/graph.hpp"

#include <sstream>

namespace srcfg {

Graph::Graph(std::uint32_t n) : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0) {}

void Graph::add_edge(Vertex a, Vertex b) {
  if (a == b) return;
  bits_[a * words_ + (b >> 6)] |= std::uint64_t{1} << (b & 63);
  bits_[b * words_ + (a >> 6)] |= std::uint64_t{1} << (a & 63);
}

void Graph::remove_edge(Vertex a, Vertex b) {
  bits_[a * words_ + (b >> 6)] &= ~(std::uint64_t{1} << (b & 63));
  bits_[b * words_ + (a >> 6)] &= ~(std::uint64_t{1} << (a & 63));
}

std::uint32_t Graph::degree(Vertex a) const {
  std::uint32_t d = 0;
  for (std::size_t w = 0; w < words_; ++w) d += std::popcount(row(a)[w]);
  return d;
}

std::uint32_t Graph::common_neighbours(Vertex a, Vertex b) const {
  std::uint32_t c = 0;
  const auto* ra = row(a);
  const auto* rb = row(b);
  for (std::size_t w = 0; w < words_; ++w) c += std::popcount(ra[w] & rb[w]);
  return c;
}

std::vector<Vertex> Graph::neighbours(Vertex a) const {
  std::vector<Vertex> out;
  const auto* r = row(a);
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t bits = r[w];
    while (bits) {
      out.push_back(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (Vertex a = 0; a < n_; ++a) total += degree(a);
  return total / 2;
}

std::string SrgParams::str() const {
  std::ostringstream out;
  out << "SRG(" << v << "," << d << "," << lambda << "," << mu << ")";
  return out.str();
}

std::optional<SrgParams> srg_check(const Graph& g) {
  const std::uint32_t n = g.order();
  if (n < 2) return std::nullopt;
  const std::uint32_t d = g.degree(0);
  for (Vertex a = 1; a < n; ++a)
    if (g.degree(a) != d) return std::nullopt;
  if (d == 0 || d == n - 1) return std::nullopt;

  std::optional<std::uint32_t> lambda, mu;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      const std::uint32_t c = g.common_neighbours(a, b);
      auto& slot = g.adjacent(a, b) ? lambda : mu;
      if (!slot) slot = c;
      else if (*slot != c) return std::nullopt;
    }
  // Regular with 0 < d < n-1 means both adjacent and nonadjacent pairs exist.
  return SrgParams{n, d, *lambda, *mu};
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex b = a + 1; b < g.order(); ++b)
      if (!g.adjacent(a, b)) out.add_edge(a, b);
  return out;
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  Graph out(g.order());
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex b : g.neighbours(a))
      if (a < b) out.add_edge(perm[a], perm[b]);
  return out;
}

std::string adjacency_list_text(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (Vertex a = 0; a < g.order(); ++a) {
    out << a << ':';
    for (Vertex b : g.neighbours(a)) out << ' ' << b;
    out << '\n';
  }
  return out.str();
}

}  // namespace srcfg
