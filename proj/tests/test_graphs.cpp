#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <numeric>
#include <random>
#include <set>

#include "srcfg/cliques.hpp"
#include "srcfg/errors.hpp"
#include "srcfg/generators.hpp"
#include "srcfg/graph.hpp"
#include "srcfg/graph6.hpp"

using namespace srcfg;

namespace {

Graph cycle(std::uint32_t n) {
  Graph g(n);
  for (Vertex i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph complete(std::uint32_t n) {
  Graph g(n);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) g.add_edge(a, b);
  return g;
}

Graph random_graph(std::uint32_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (coin(rng)) g.add_edge(a, b);
  return g;
}

// Triangles from per-edge common neighbourhoods: each counted three times.
std::uint64_t triangles_by_edges(const Graph& g) {
  std::uint64_t total = 0;
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex b = a + 1; b < g.order(); ++b)
      if (g.adjacent(a, b)) total += g.common_neighbours(a, b);
  return total / 3;
}

std::uint64_t cliques_brute(const Graph& g, std::uint32_t k) {
  const std::uint32_t n = g.order();
  std::uint64_t count = 0;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + std::min(k, n), true);
  if (k > n) return 0;
  do {
    std::vector<Vertex> s;
    for (Vertex i = 0; i < n; ++i)
      if (pick[i]) s.push_back(i);
    bool ok = true;
    for (std::size_t x = 0; x < s.size() && ok; ++x)
      for (std::size_t y = x + 1; y < s.size() && ok; ++y) ok = g.adjacent(s[x], s[y]);
    count += ok;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return count;
}

}  // namespace

TEST_CASE("basic graph operations") {
  Graph g(70);
  g.add_edge(0, 69);
  g.add_edge(3, 64);
  CHECK(g.adjacent(69, 0));
  CHECK(g.degree(0) == 1);
  CHECK(g.edge_count() == 2);
  g.remove_edge(0, 69);
  CHECK_FALSE(g.adjacent(0, 69));
  CHECK(g.neighbours(3) == std::vector<Vertex>{64});
  CHECK(complement(complement(g)) == g);
  CHECK(complement(g).edge_count() == 70 * 69 / 2 - 1);
}

TEST_CASE("named graphs have the expected parameters") {
  CHECK(srg_check(paley_graph(5))->str() == SrgParams{5, 2, 0, 1}.str());
  CHECK(*srg_check(paley_graph(13)) == SrgParams{13, 6, 2, 3});
  CHECK(*srg_check(paley_graph(9)) == SrgParams{9, 4, 1, 2});
  CHECK(*srg_check(paley_graph(25)) == SrgParams{25, 12, 5, 6});
  CHECK(*srg_check(rook_graph(4)) == SrgParams{16, 6, 2, 2});
  CHECK(*srg_check(rook_graph(5)) == SrgParams{25, 8, 3, 2});
  CHECK(*srg_check(shrikhande_graph()) == SrgParams{16, 6, 2, 2});
  CHECK(*srg_check(petersen_graph()) == SrgParams{10, 3, 0, 1});
  CHECK(*srg_check(hoffman_singleton_graph()) == SrgParams{50, 7, 0, 1});
  CHECK(*srg_check(latin_square_graph(cyclic_latin_square(6))) == SrgParams{36, 15, 6, 6});
  CHECK(*srg_check(complement(latin_square_graph(cyclic_latin_square(6)))) == SrgParams{36, 20, 10, 12});
  // Shrikhande and rook(4) differ: only the rook graph has 4-cliques.
  CHECK(count_k_cliques(rook_graph(4), 4) == 8);
  CHECK(count_k_cliques(shrikhande_graph(), 4) == 0);
}

TEST_CASE("srg_check edge cases") {
  CHECK_FALSE(srg_check(Graph(0)));
  CHECK_FALSE(srg_check(Graph(1)));
  CHECK_FALSE(srg_check(complete(6)));
  CHECK_FALSE(srg_check(Graph(6)));
  CHECK_FALSE(srg_check(cycle(6)));
  CHECK(*srg_check(cycle(5)) == SrgParams{5, 2, 0, 1});
  // Disjoint union of two triangles: imprimitive but strongly regular.
  Graph two(6);
  for (Vertex b : {0u, 3u}) {
    two.add_edge(b, b + 1);
    two.add_edge(b + 1, b + 2);
    two.add_edge(b, b + 2);
  }
  CHECK(*srg_check(two) == SrgParams{6, 2, 1, 0});
}

TEST_CASE("complement parameters and the srg identity") {
  for (const Graph& g : {paley_graph(13), rook_graph(4), shrikhande_graph(), petersen_graph(),
                         hoffman_singleton_graph(), rook_graph(6), latin_square_graph(cyclic_latin_square(5))}) {
    const auto p = srg_check(g);
    REQUIRE(p);
    CHECK((p->v - p->d - 1) * p->mu == p->d * (p->d - 1 - p->lambda));
    const auto c = srg_check(complement(g));
    REQUIRE(c);
    CHECK(*c == SrgParams{p->v, p->v - p->d - 1, p->v - 2 - 2 * p->d + p->mu, p->v - 2 * p->d + p->lambda});
  }
}

TEST_CASE("relabelling preserves structure") {
  std::mt19937_64 rng(7);
  const Graph g = petersen_graph();
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0u);
  std::shuffle(perm.begin(), perm.end(), rng);
  const Graph h = relabel(g, perm);
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex b = 0; b < g.order(); ++b) CHECK(g.adjacent(a, b) == h.adjacent(perm[a], perm[b]));
}

TEST_CASE("generator errors") {
  CHECK_THROWS_AS(paley_graph(7), InvalidSpec);
  CHECK_THROWS_AS(paley_graph(15), InvalidSpec);
  CHECK_THROWS_AS(latin_square_graph({{0, 1}, {0, 1}}), InvalidSpec);
  CHECK_THROWS_AS(latin_square_graph({{0, 1}, {1}}), InvalidSpec);
  CHECK_THROWS_AS(parse_graph_spec("paley:"), InvalidSpec);
  CHECK_THROWS_AS(parse_graph_spec("paley:13x"), InvalidSpec);
  CHECK_THROWS_AS(parse_graph_spec("cube"), InvalidSpec);
}

TEST_CASE("graph specs") {
  CHECK(make_graph(parse_graph_spec("paley:13")) == paley_graph(13));
  CHECK(make_graph(parse_graph_spec("shrikhande")) == shrikhande_graph());
  CHECK(make_graph(parse_graph_spec("complement:petersen")) == complement(petersen_graph()));
  CHECK(make_graph(parse_graph_spec("g6:" + encode_graph6(rook_graph(3)))) == rook_graph(3));
}

TEST_CASE("graph6 known encodings") {
  CHECK(encode_graph6(Graph(1)) == "@");
  CHECK(encode_graph6(Graph(0)) == "?");
  CHECK(encode_graph6(complete(2)) == "A_");
  CHECK(encode_graph6(cycle(5)) == "Dhc");
  CHECK(decode_graph6("Dhc") == cycle(5));
  CHECK(decode_graph6(">>graph6<<Dhc\n") == cycle(5));
  CHECK(decode_graph6("@").order() == 1);
}

TEST_CASE("graph6 round trip") {
  std::mt19937_64 rng(11);
  for (std::uint32_t n : {0u, 1u, 2u, 5u, 6u, 7u, 30u, 62u, 63u, 64u, 100u, 300u}) {
    CAPTURE(n);
    const Graph g = random_graph(n, 0.4, rng);
    const auto text = encode_graph6(g);
    if (n >= 63) CHECK(text[0] == '~');
    CHECK(decode_graph6(text) == g);
  }
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(decode_graph6(""), MalformedGraph6);
  CHECK_THROWS_AS(decode_graph6("D"), MalformedGraph6);
  CHECK_THROWS_AS(decode_graph6("Dhcc"), MalformedGraph6);
  CHECK_THROWS_AS(decode_graph6("D\x01\x02"), MalformedGraph6);
  CHECK_THROWS_AS(decode_graph6("~?"), MalformedGraph6);
  CHECK_THROWS_AS(decode_graph6("~??D"), MalformedGraph6);
  CHECK_THROWS_AS(read_graph6_file("/nonexistent.g6"), FileNotFound);
}

TEST_CASE("graph6 files") {
  const auto path = (std::filesystem::temp_directory_path() / "srcfg_graphs_test.g6").string();
  write_graph6_file(path, {petersen_graph(), paley_graph(13), Graph(1)});
  const auto back = read_graph6_file(path);
  REQUIRE(back.size() == 3);
  CHECK(back[0] == petersen_graph());
  CHECK(back[1] == paley_graph(13));
  CHECK(back[2].order() == 1);
  std::remove(path.c_str());
}

TEST_CASE("k_cliques agrees with independent counts") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_graph(14, 0.5, rng);
    CHECK(count_k_cliques(g, 3) == triangles_by_edges(g));
    for (std::uint32_t k = 1; k <= 5; ++k) {
      const auto list = k_cliques(g, k);
      CHECK(list.size() == cliques_brute(g, k));
      CHECK(count_k_cliques(g, k) == list.size());
      CHECK(std::is_sorted(list.begin(), list.end()));
      CHECK(std::adjacent_find(list.begin(), list.end()) == list.end());
      for (const auto& c : list) {
        CHECK(c.size() == k);
        for (std::size_t x = 0; x < c.size(); ++x)
          for (std::size_t y = x + 1; y < c.size(); ++y) CHECK(g.adjacent(c[x], c[y]));
      }
    }
  }
  CHECK(k_cliques(paley_graph(13), 3).size() == 26);
  CHECK(k_cliques(shrikhande_graph(), 3).size() == 32);
  CHECK(k_cliques(complete(5), 6).empty());
  CHECK_THROWS_AS(k_cliques(complete(3), 0), InvalidSpec);
}
