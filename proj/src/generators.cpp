#include "srcfg/generators.hpp"

#include "srcfg/errors.hpp"
#include "srcfg/field.hpp"
#include "srcfg/graph6.hpp"

namespace srcfg {

Graph paley_graph(std::uint32_t q) {
  if (!prime_power(q)) throw InvalidSpec("Paley graph order " + std::to_string(q) + " is not a prime power");
  if (q % 4 != 1) throw InvalidSpec("Paley graph needs q = 1 mod 4, got " + std::to_string(q));
  const FiniteField f = make_field(q);
  Graph g(q);
  for (FieldElement a = 0; a < q; ++a)
    for (FieldElement b = a + 1; b < q; ++b)
      if (f.is_square(f.sub(a, b))) g.add_edge(a, b);
  return g;
}

Graph rook_graph(std::uint32_t n) {
  Graph g(n * n);
  for (std::uint32_t a = 0; a < n * n; ++a)
    for (std::uint32_t b = a + 1; b < n * n; ++b)
      if (a / n == b / n || a % n == b % n) g.add_edge(a, b);
  return g;
}

Graph latin_square_graph(const std::vector<std::vector<std::uint32_t>>& square) {
  const auto n = static_cast<std::uint32_t>(square.size());
  for (const auto& row : square)
    if (row.size() != n) throw InvalidSpec("Latin square is not square");
  for (std::uint32_t i = 0; i < n; ++i) {
    std::vector<bool> in_row(n, false), in_col(n, false);
    for (std::uint32_t j = 0; j < n; ++j) {
      const auto r = square[i][j], c = square[j][i];
      if (r >= n || c >= n || in_row[r] || in_col[c]) throw InvalidSpec("not a Latin square");
      in_row[r] = in_col[c] = true;
    }
  }
  Graph g(n * n);
  for (std::uint32_t a = 0; a < n * n; ++a)
    for (std::uint32_t b = a + 1; b < n * n; ++b) {
      const std::uint32_t ra = a / n, ca = a % n, rb = b / n, cb = b % n;
      if (ra == rb || ca == cb || square[ra][ca] == square[rb][cb]) g.add_edge(a, b);
    }
  return g;
}

std::vector<std::vector<std::uint32_t>> cyclic_latin_square(std::uint32_t n) {
  std::vector<std::vector<std::uint32_t>> sq(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) sq[i][j] = (i + j) % n;
  return sq;
}

Graph petersen_graph() {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) pairs.emplace_back(a, b);
  Graph g(10);
  for (std::uint32_t x = 0; x < 10; ++x)
    for (std::uint32_t y = x + 1; y < 10; ++y) {
      const auto [a, b] = pairs[x];
      const auto [c, d] = pairs[y];
      if (a != c && a != d && b != c && b != d) g.add_edge(x, y);
    }
  return g;
}

Graph hoffman_singleton_graph() {
  Graph g(50);
  auto P = [](std::uint32_t i, std::uint32_t j) { return 5 * i + j % 5; };
  auto Q = [](std::uint32_t i, std::uint32_t j) { return 25 + 5 * i + j % 5; };
  for (std::uint32_t i = 0; i < 5; ++i)
    for (std::uint32_t j = 0; j < 5; ++j) {
      g.add_edge(P(i, j), P(i, j + 1));
      g.add_edge(Q(i, j), Q(i, j + 2));
      for (std::uint32_t k = 0; k < 5; ++k) g.add_edge(P(i, j), Q(k, i * k + j));
    }
  return g;
}

Graph shrikhande_graph() { return complement(latin_square_graph(cyclic_latin_square(4))); }

Graph make_graph(const GraphSpec& spec) {
  switch (spec.kind) {
    case GraphSpec::Kind::Paley:
      return paley_graph(spec.n);
    case GraphSpec::Kind::Rook:
      return rook_graph(spec.n);
    case GraphSpec::Kind::LatinSquare:
      return latin_square_graph(spec.latin);
    case GraphSpec::Kind::Petersen:
      return petersen_graph();
    case GraphSpec::Kind::HoffmanSingleton:
      return hoffman_singleton_graph();
    case GraphSpec::Kind::Complement:
      return complement(make_graph(*spec.inner));
    case GraphSpec::Kind::Graph6:
      return decode_graph6(spec.text);
  }
  throw InvalidSpec("unknown graph kind");
}

GraphSpec parse_graph_spec(std::string_view text) {
  auto number_after = [&](std::string_view prefix) {
    const std::string rest(text.substr(prefix.size()));
    std::size_t used = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(rest, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != rest.size() || rest.empty()) throw InvalidSpec("bad number in graph spec '" + std::string(text) + "'");
    return static_cast<std::uint32_t>(value);
  };
  auto starts = [&](std::string_view prefix) { return text.substr(0, prefix.size()) == prefix; };

  GraphSpec spec;
  if (starts("paley:")) {
    spec.kind = GraphSpec::Kind::Paley;
    spec.n = number_after("paley:");
  } else if (starts("rook:")) {
    spec.kind = GraphSpec::Kind::Rook;
    spec.n = number_after("rook:");
  } else if (starts("latin-cyclic:")) {
    spec.kind = GraphSpec::Kind::LatinSquare;
    spec.latin = cyclic_latin_square(number_after("latin-cyclic:"));
  } else if (text == "shrikhande") {
    spec.kind = GraphSpec::Kind::Complement;
    spec.inner = std::make_shared<GraphSpec>(parse_graph_spec("latin-cyclic:4"));
  } else if (text == "petersen") {
    spec.kind = GraphSpec::Kind::Petersen;
  } else if (text == "hoffman-singleton") {
    spec.kind = GraphSpec::Kind::HoffmanSingleton;
  } else if (starts("complement:")) {
    spec.kind = GraphSpec::Kind::Complement;
    spec.inner = std::make_shared<GraphSpec>(parse_graph_spec(text.substr(11)));
  } else if (starts("g6:")) {
    spec.kind = GraphSpec::Kind::Graph6;
    spec.text = std::string(text.substr(3));
  } else if (starts("file:")) {
    const auto graphs = read_graph6_file(std::string(text.substr(5)));
    if (graphs.empty()) throw InvalidSpec("graph6 file holds no graphs");
    spec.kind = GraphSpec::Kind::Graph6;
    spec.text = encode_graph6(graphs.front());
  } else {
    throw InvalidSpec("unrecognised graph spec '" + std::string(text) + "'");
  }
  return spec;
}

}  // namespace srcfg
