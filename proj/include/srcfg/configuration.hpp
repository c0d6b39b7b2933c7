#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "srcfg/graph.hpp"

namespace srcfg {

using Point = std::uint32_t;
using Line = std::vector<Point>;

/// Symmetric (v_k) configuration: v points and v lines of k points each.
/// Each line is kept sorted; the order of lines is preserved as given so that
/// line indices are stable (dual relies on this). Equality ignores line order.
struct Configuration {
  std::uint32_t v = 0;
  std::uint32_t k = 0;
  std::vector<Line> lines;

  Configuration() = default;
  Configuration(std::uint32_t v, std::uint32_t k, std::vector<Line> lines);

  /// Copy with lines in lexicographic order.
  Configuration sorted() const;

  friend bool operator==(const Configuration& a, const Configuration& b);
};

/// (v_k; lambda, mu): the point graph is SRG(v, k(k-1), lambda, mu).
struct SrcParams {
  std::int64_t v = 0, k = 0, lambda = 0, mu = 0;
  friend bool operator==(const SrcParams&, const SrcParams&) = default;
  friend auto operator<=>(const SrcParams&, const SrcParams&) = default;
  std::int64_t degree() const { return k * (k - 1); }
  /// "(13_3;2,3)"
  std::string str() const;
};

struct Violation {
  enum class Kind { LineCount, PointOutOfRange, RepeatedPoint, LineSize, PointDegree, PairCoveredTwice };
  Kind kind;
  std::string message;
  std::vector<std::uint32_t> where;  // indices of the offending points/lines
};

std::string to_string(Violation::Kind kind);

/// Every violated invariant; empty means the configuration is valid.
std::vector<Violation> validate(const Configuration& c);
bool is_valid(const Configuration& c);

enum class Side { Point, Line };

/// Collinearity graph (points) or concurrence graph (lines).
Graph associated_graph(const Configuration& c, Side side);

/// Parameters if the point graph is strongly regular. The line graph is
/// checked as well and must have the same parameters; a mismatch throws
/// TheoremViolation.
std::optional<SrcParams> src_check(const Configuration& c);

/// Transposed incidence: point i of the dual is line i of c, and line j of the
/// dual collects the lines through point j. dual(dual(c)) == c.
Configuration dual(const Configuration& c);

struct GeometryClass {
  enum class Kind { PartialGeometry, SemipartialGeometry, AlphaBetaGeometry, General };
  Kind kind = Kind::General;
  std::uint32_t alpha = 0;
  std::uint32_t beta = 0;
  std::uint32_t mu = 0;
  /// collinear-point count -> number of antiflags with that count
  std::map<std::uint32_t, std::uint64_t> spectrum;

  std::string str() const;
};

GeometryClass alpha_spectrum(const Configuration& c);

/// True iff the v x v incidence matrix is nonsingular over the rationals.
/// Full rank modulo a large prime settles the question; otherwise an exact
/// fraction-free elimination decides.
bool is_proper(const Configuration& c);

/// Exact rank of the incidence matrix over Q.
std::uint32_t incidence_rank(const Configuration& c);

/// Text format: "v k" then one line of k point indices per line.
std::string format_configuration(const Configuration& c);
Configuration parse_configuration(const std::string& text);
Configuration read_configuration_file(const std::string& path);
void write_configuration_file(const std::string& path, const Configuration& c);

/// JSON mirror {"v":..,"k":..,"lines":[[..],..]}.
std::string configuration_to_json(const Configuration& c);
Configuration configuration_from_json(const std::string& text);

/// Reads either format, choosing JSON when the first non-space byte is '{'.
Configuration load_configuration(const std::string& path);

}  // namespace srcfg
