#include "srcfg/classify.hpp"

#include <algorithm>
#include <map>

#include "srcfg/errors.hpp"
#include "srcfg/parallel.hpp"

namespace srcfg {

CliqueGraphResult clique_graph(const Graph& g, std::uint32_t k) {
  CliqueGraphResult out;
  out.source = g;
  out.k = k;
  out.cliques = k_cliques(g, k);
  const auto m = static_cast<std::uint32_t>(out.cliques.size());
  out.compat = Graph(m);
  // Cliques are sorted, so a merge counts shared vertices.
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> edges(m);
  parallel_for(m, [&](std::size_t i) {
    const auto& a = out.cliques[i];
    for (std::uint32_t j = static_cast<std::uint32_t>(i) + 1; j < m; ++j) {
      const auto& b = out.cliques[j];
      std::size_t x = 0, y = 0, shared = 0;
      while (x < a.size() && y < b.size() && shared < 2) {
        if (a[x] == b[y]) {
          ++shared;
          ++x;
          ++y;
        } else if (a[x] < b[y]) {
          ++x;
        } else {
          ++y;
        }
      }
      if (shared < 2) edges[i].emplace_back(static_cast<std::uint32_t>(i), j);
    }
  });
  for (const auto& list : edges)
    for (auto [a, b] : list) out.compat.add_edge(a, b);
  return out;
}

namespace {

Configuration to_configuration(const CliqueGraphResult& cg, const std::vector<std::uint32_t>& chosen) {
  std::vector<Line> lines;
  for (auto i : chosen) lines.push_back(cg.cliques[i]);
  std::sort(lines.begin(), lines.end());
  return Configuration(cg.source.order(), cg.k, std::move(lines));
}

// Partition of the edges of the source graph into k-cliques.
class EdgeCover {
 public:
  explicit EdgeCover(const CliqueGraphResult& cg) : cg_(cg) {
    const std::uint32_t n = cg.source.order();
    edge_id_.assign(static_cast<std::size_t>(n) * n, -1);
    std::int32_t next = 0;
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b)
        if (cg.source.adjacent(a, b)) edge_id_[a * n + b] = edge_id_[b * n + a] = next++;
    edges_ = static_cast<std::uint32_t>(next);
    clique_edges_.resize(cg.cliques.size());
    by_edge_.resize(edges_);
    for (std::uint32_t i = 0; i < cg.cliques.size(); ++i) {
      const auto& c = cg.cliques[i];
      for (std::size_t x = 0; x < c.size(); ++x)
        for (std::size_t y = x + 1; y < c.size(); ++y) {
          const auto e = static_cast<std::uint32_t>(edge_id_[c[x] * n + c[y]]);
          clique_edges_[i].push_back(e);
          by_edge_[e].push_back(i);
        }
    }
  }

  std::uint32_t edges() const { return edges_; }
  const std::vector<std::uint32_t>& cliques_on(std::uint32_t e) const { return by_edge_[e]; }

  // Every cover that contains `first` as the clique chosen for edge `root`.
  std::vector<std::vector<std::uint32_t>> solve_from(std::uint32_t first, std::size_t limit) const {
    State s(*this);
    std::vector<std::vector<std::uint32_t>> out;
    s.select(first);
    s.run(out, limit);
    return out;
  }

  // The edge with fewest cliques, branched on at the top level.
  std::uint32_t root_edge() const {
    std::uint32_t best = 0;
    for (std::uint32_t e = 1; e < edges_; ++e)
      if (by_edge_[e].size() < by_edge_[best].size()) best = e;
    return best;
  }

 private:
  const CliqueGraphResult& cg_;
  std::vector<std::int32_t> edge_id_;
  std::uint32_t edges_ = 0;
  std::vector<std::vector<std::uint32_t>> clique_edges_;
  std::vector<std::vector<std::uint32_t>> by_edge_;

  struct State {
    const EdgeCover& ec;
    std::vector<bool> alive, covered;
    std::vector<std::uint32_t> alive_count;
    std::vector<std::uint32_t> chosen, killed;
    std::uint32_t uncovered;

    explicit State(const EdgeCover& e)
        : ec(e), alive(e.clique_edges_.size(), true), covered(e.edges_, false), uncovered(e.edges_) {
      for (const auto& list : e.by_edge_) alive_count.push_back(static_cast<std::uint32_t>(list.size()));
    }

    void kill(std::uint32_t j) {
      alive[j] = false;
      killed.push_back(j);
      for (auto e : ec.clique_edges_[j]) --alive_count[e];
    }

    void select(std::uint32_t i) {
      chosen.push_back(i);
      for (auto e : ec.clique_edges_[i]) {
        covered[e] = true;
        --uncovered;
      }
      for (auto e : ec.clique_edges_[i])
        for (auto j : ec.by_edge_[e])
          if (alive[j]) kill(j);
    }

    void undo(std::size_t killed_mark) {
      const auto i = chosen.back();
      chosen.pop_back();
      for (auto e : ec.clique_edges_[i]) {
        covered[e] = false;
        ++uncovered;
      }
      while (killed.size() > killed_mark) {
        const auto j = killed.back();
        killed.pop_back();
        alive[j] = true;
        for (auto e : ec.clique_edges_[j]) ++alive_count[e];
      }
    }

    void run(std::vector<std::vector<std::uint32_t>>& out, std::size_t limit) {
      if (limit && out.size() >= limit) return;
      if (uncovered == 0) {
        out.push_back(chosen);
        return;
      }
      std::uint32_t best = 0, best_count = ~0u;
      for (std::uint32_t e = 0; e < ec.edges_; ++e)
        if (!covered[e] && alive_count[e] < best_count) {
          best = e;
          best_count = alive_count[e];
          if (best_count == 0) return;
        }
      for (auto j : ec.by_edge_[best]) {
        if (!alive[j]) continue;
        const std::size_t mark = killed.size();
        select(j);
        run(out, limit);
        undo(mark);
      }
    }
  };
};

void check_point_graph(const CliqueGraphResult& cg, const Configuration& c) {
  if (!is_valid(c) || !(associated_graph(c, Side::Point) == cg.source))
    throw TheoremViolation("clique set does not reproduce the source graph");
}

}  // namespace

std::vector<Configuration> find_configurations(const CliqueGraphResult& cg, const FindOptions& options) {
  const std::uint32_t v = cg.source.order(), k = cg.k;
  bool regular = v > 0 && k >= 2;
  for (Vertex x = 0; x < v && regular; ++x) regular = cg.source.degree(x) == k * (k - 1);
  if (!regular) return {};
  EdgeCover ec(cg);
  std::vector<Configuration> out;
  if (ec.edges() == 0) return out;
  const auto root = ec.root_edge();
  const auto& firsts = ec.cliques_on(root);
  std::vector<std::vector<std::vector<std::uint32_t>>> per_root(firsts.size());
  if (options.limit) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < firsts.size() && total < options.limit; ++i) {
      per_root[i] = ec.solve_from(firsts[i], options.limit - total);
      total += per_root[i].size();
    }
  } else {
    parallel_for(firsts.size(), [&](std::size_t i) { per_root[i] = ec.solve_from(firsts[i], 0); });
  }
  for (const auto& chunk : per_root)
    for (const auto& chosen : chunk) {
      if (chosen.size() != v) throw TheoremViolation("edge cover with the wrong number of lines");
      out.push_back(to_configuration(cg, chosen));
      check_point_graph(cg, out.back());
    }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.lines < b.lines; });
  return out;
}

std::vector<Configuration> find_configurations(const Graph& g, std::uint32_t k, const FindOptions& options) {
  return find_configurations(clique_graph(g, k), options);
}

std::vector<Configuration> find_configurations_reference(const CliqueGraphResult& cg) {
  std::vector<Configuration> out;
  const std::uint32_t v = cg.source.order();
  if (v == 0 || cg.cliques.size() < v) return out;
  for (const auto& set : k_cliques(cg.compat, v)) {
    Configuration c = to_configuration(cg, set);
    if (is_valid(c) && associated_graph(c, Side::Point) == cg.source) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.lines < b.lines; });
  return out;
}

std::vector<IsoClass> reduce_isomorphs(const std::vector<Configuration>& configs) {
  std::vector<CanonicalForm> forms(configs.size());
  std::vector<std::uint64_t> orders(configs.size());
  parallel_for(configs.size(), [&](std::size_t i) {
    const auto r = canonical_labelling(configs[i]);
    forms[i] = r.form;
    orders[i] = r.aut_order;
  });
  std::vector<IsoClass> out;
  std::map<CanonicalForm, std::size_t> index;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    auto [it, fresh] = index.emplace(forms[i], out.size());
    if (fresh) out.push_back(IsoClass{configs[i], 0, orders[i], false, forms[i]});
    ++out[it->second].count;
  }
  parallel_for(out.size(), [&](std::size_t i) {
    out[i].self_dual = canonical_form(dual(out[i].representative)) == out[i].form;
  });
  return out;
}

}  // namespace srcfg
