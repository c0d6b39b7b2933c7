#pragma once

#include <cstdint>
#include <vector>

#include "srcfg/cliques.hpp"
#include "srcfg/configuration.hpp"
#include "srcfg/graph.hpp"
#include "srcfg/iso.hpp"

namespace srcfg {

/// k-cliques of a graph and the compatibility graph on them: two cliques are
/// adjacent when they share at most one vertex.
struct CliqueGraphResult {
  Graph source;
  std::uint32_t k = 0;
  std::vector<VertexSet> cliques;
  Graph compat;
};

CliqueGraphResult clique_graph(const Graph& g, std::uint32_t k);

struct FindOptions {
  std::size_t limit = 0;  // stop after this many configurations (0 = all)
};

/// Every set of v pairwise compatible k-cliques, as configurations on the
/// vertices of g. Lines are the cliques in their enumeration order, and the
/// list is sorted. The search is an exact cover of the edges by k-cliques;
/// a graph that is not k(k-1)-regular has no configurations.
std::vector<Configuration> find_configurations(const CliqueGraphResult& cg, const FindOptions& options = {});
std::vector<Configuration> find_configurations(const Graph& g, std::uint32_t k, const FindOptions& options = {});

/// Reference search without edge-cover pruning: v-cliques of the compatibility
/// graph by ordered extension.
std::vector<Configuration> find_configurations_reference(const CliqueGraphResult& cg);

struct IsoClass {
  Configuration representative;
  std::size_t count = 0;
  std::uint64_t aut_order = 0;
  bool self_dual = false;
  CanonicalForm form;
};

/// Groups configurations by canonical form, classes ordered by first
/// occurrence.
std::vector<IsoClass> reduce_isomorphs(const std::vector<Configuration>& configs);

}  // namespace srcfg
