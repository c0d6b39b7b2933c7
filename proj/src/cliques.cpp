#include "srcfg/cliques.hpp"

#include <bit>

#include "srcfg/errors.hpp"
#include "srcfg/parallel.hpp"

namespace srcfg {

namespace {

// Extends `current` by vertices from `candidates` (all larger than the last
// chosen vertex), visiting them in ascending order.
template <typename Emit>
void extend(const Graph& g, std::uint32_t k, std::vector<Vertex>& current, std::vector<std::uint64_t> candidates,
            Emit& emit) {
  if (current.size() == k) {
    emit(current);
    return;
  }
  const std::size_t words = g.words_per_row();
  std::size_t remaining = 0;
  for (auto w : candidates) remaining += std::popcount(w);
  if (current.size() + remaining < k) return;

  std::vector<std::uint64_t> next(words);
  for (std::size_t w = 0; w < words; ++w) {
    while (candidates[w]) {
      const auto bit = std::countr_zero(candidates[w]);
      candidates[w] &= candidates[w] - 1;
      const auto v = static_cast<Vertex>(w * 64 + bit);
      const auto* row = g.row(v);
      for (std::size_t x = 0; x < words; ++x) next[x] = candidates[x] & row[x];
      current.push_back(v);
      extend(g, k, current, next, emit);
      current.pop_back();
    }
  }
}

std::vector<std::uint64_t> later_neighbours(const Graph& g, Vertex v) {
  std::vector<std::uint64_t> cand(g.row(v), g.row(v) + g.words_per_row());
  for (std::size_t w = 0; w < cand.size(); ++w) {
    const std::size_t lo = w * 64;
    if (lo + 63 <= v) cand[w] = 0;
    else if (lo <= v) cand[w] &= ~((std::uint64_t{2} << (v - lo)) - 1);
  }
  return cand;
}

}  // namespace

std::vector<VertexSet> k_cliques(const Graph& g, std::uint32_t k) {
  if (k < 1) throw InvalidSpec("clique size must be positive");
  const std::uint32_t n = g.order();
  std::vector<std::vector<VertexSet>> per_root(n);
  parallel_for(n, [&](std::size_t root) {
    std::vector<Vertex> current{static_cast<Vertex>(root)};
    auto emit = [&](const std::vector<Vertex>& c) { per_root[root].push_back(c); };
    extend(g, k, current, later_neighbours(g, static_cast<Vertex>(root)), emit);
  });
  std::vector<VertexSet> out;
  for (auto& chunk : per_root)
    for (auto& c : chunk) out.push_back(std::move(c));
  return out;
}

std::uint64_t count_k_cliques(const Graph& g, std::uint32_t k) {
  if (k < 1) throw InvalidSpec("clique size must be positive");
  const std::uint32_t n = g.order();
  std::vector<std::uint64_t> per_root(n, 0);
  parallel_for(n, [&](std::size_t root) {
    std::vector<Vertex> current{static_cast<Vertex>(root)};
    auto emit = [&](const std::vector<Vertex>&) { ++per_root[root]; };
    extend(g, k, current, later_neighbours(g, static_cast<Vertex>(root)), emit);
  });
  std::uint64_t total = 0;
  for (auto c : per_root) total += c;
  return total;
}

}  // namespace srcfg
