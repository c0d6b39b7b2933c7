#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "srcfg/graph.hpp"

namespace srcfg {

/// Named graph families. Text form (parse_graph_spec):
///   paley:Q  rook:N  latin-cyclic:N  shrikhande  petersen
///   hoffman-singleton  complement:SPEC  g6:STRING  file:PATH
/// file: reads the first graph of a graph6 file.
struct GraphSpec {
  enum class Kind { Paley, Rook, LatinSquare, Petersen, HoffmanSingleton, Complement, Graph6 };
  Kind kind = Kind::Petersen;
  std::uint32_t n = 0;
  std::vector<std::vector<std::uint32_t>> latin;  // LatinSquare
  std::string text;                                // Graph6
  std::shared_ptr<GraphSpec> inner;                // Complement
};

GraphSpec parse_graph_spec(std::string_view text);
Graph make_graph(const GraphSpec& spec);

/// Vertices are field elements; a ~ b iff a - b is a nonzero square.
Graph paley_graph(std::uint32_t q);
/// Vertex (x, y) has index x*n + y.
Graph rook_graph(std::uint32_t n);
/// Cells r*n + c, adjacent iff same row, column or symbol. Throws InvalidSpec
/// unless square is a Latin square.
Graph latin_square_graph(const std::vector<std::vector<std::uint32_t>>& square);
std::vector<std::vector<std::uint32_t>> cyclic_latin_square(std::uint32_t n);
/// Kneser graph K(5,2) on the 2-subsets of {0..4} in lexicographic order.
Graph petersen_graph();
/// Five pentagons P_i and five pentagrams Q_i; P_{i,j} is vertex 5i+j and
/// Q_{i,j} is 25+5i+j, with P_{i,j} ~ Q_{k, ik+j mod 5}.
Graph hoffman_singleton_graph();
/// Complement of the Latin-square graph of the Cayley table of Z_4, an
/// SRG(16,6,2,2) not isomorphic to rook_graph(4).
Graph shrikhande_graph();

}  // namespace srcfg
