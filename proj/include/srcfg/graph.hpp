#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace srcfg {

using Vertex = std::uint32_t;

/// Simple undirected graph with one bitset row per vertex, giving O(1)
/// adjacency queries and word-parallel common-neighbour counts.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::uint32_t n);

  std::uint32_t order() const { return n_; }
  std::size_t words_per_row() const { return words_; }

  bool adjacent(Vertex a, Vertex b) const { return (row(a)[b >> 6] >> (b & 63)) & 1u; }
  void add_edge(Vertex a, Vertex b);
  void remove_edge(Vertex a, Vertex b);

  const std::uint64_t* row(Vertex a) const { return bits_.data() + a * words_; }

  std::uint32_t degree(Vertex a) const;
  std::uint32_t common_neighbours(Vertex a, Vertex b) const;
  std::vector<Vertex> neighbours(Vertex a) const;
  std::size_t edge_count() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::uint32_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// SRG(v, d, lambda, mu).
struct SrgParams {
  std::int64_t v = 0, d = 0, lambda = 0, mu = 0;
  friend bool operator==(const SrgParams&, const SrgParams&) = default;
  std::string str() const;
};

/// Parameters if g is strongly regular. Complete and empty graphs and graphs
/// with fewer than two vertices yield nullopt.
std::optional<SrgParams> srg_check(const Graph& g);

Graph complement(const Graph& g);

/// Graph with vertices relabelled by perm: vertex i becomes perm[i].
Graph relabel(const Graph& g, const std::vector<Vertex>& perm);

/// Debugging format: first line n, then "i: j k ..." per vertex.
std::string adjacency_list_text(const Graph& g);

}  // namespace srcfg
