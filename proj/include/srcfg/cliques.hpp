#pragma once

#include <vector>

#include "srcfg/graph.hpp"

namespace srcfg {

using VertexSet = std::vector<Vertex>;

/// Every clique of exactly k vertices. Each clique is listed once, sorted
/// ascending, and the list is in lexicographic order whatever the thread count.
std::vector<VertexSet> k_cliques(const Graph& g, std::uint32_t k);

/// Number of k-cliques without materialising them.
std::uint64_t count_k_cliques(const Graph& g, std::uint32_t k);

}  // namespace srcfg
