#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "srcfg/configuration.hpp"
#include "srcfg/graph.hpp"

namespace srcfg {

/// Restricted spectrum of SRG(v, k(k-1), lambda, mu). When the discriminant
/// (lambda-mu)^2 + 4(k(k-1)-mu) is not a perfect square the eigenvalues are
/// the conjugate pair (lambda - mu +- sqrt(discriminant)) / 2 and f = g.
struct Eigendata {
  bool irrational = false;
  std::int64_t discriminant = 0;
  std::int64_t r = 0, s = 0;  // valid when !irrational
  std::int64_t f = 0, g = 0;

  friend bool operator==(const Eigendata&, const Eigendata&) = default;
};

/// Eigenvalues and multiplicities of the point graph. Throws IdentityViolated
/// or NonIntegralMultiplicity.
Eigendata eigendata(const SrcParams& p);

/// Same for an arbitrary SRG parameter tuple.
Eigendata srg_eigendata(const SrgParams& p);

struct SquareResult {
  bool pass = false;
  bool singular = false;  // s + k = 0: determinant zero
  /// A prime with odd total exponent when the check fails; -1 stands for a
  /// negative determinant.
  std::int64_t witness_prime = 0;
  std::int64_t witness_exponent = 0;
};

/// Whether (r+k)^f (s+k)^g is a perfect square, decided from the parity of
/// prime exponents.
SquareResult square_condition(const SrcParams& p);

enum class CliqueStatus { Fail, EqualityPg, StrictPass };
std::string to_string(CliqueStatus s);

/// Compares (v-k)(lambda+1) with k(k-1)^3.
CliqueStatus clique_condition(const SrcParams& p);

/// k > 3 with v = (C(k,2)+1)^2, lambda = C(k,2)-1, mu = 2: the point graph
/// would have to be a rook graph, which carries no such configuration.
bool rook_excluded(const SrcParams& p);

struct SrgFeasibility {
  bool pass = false;
  std::string reason;  // first failed condition
};

/// Standard necessary conditions for SRG parameters: identity, complement
/// parameters, integral multiplicities (with the conference-graph case), the
/// two Krein conditions and the absolute bound.
SrgFeasibility srg_param_feasible(const SrgParams& p);

/// Known nonexistent SRG parameter tuples; matching also covers complements.
struct ExclusionList {
  struct Entry {
    SrgParams params;
    std::string citation;
  };
  std::vector<Entry> entries;

  const Entry* find(const SrgParams& p) const;
  static ExclusionList parse(const std::string& text);
  static ExclusionList load(const std::string& path);
  /// data/srg_nonexistence.txt from SRCFG_DATA_DIR or the source tree.
  static ExclusionList load_default();
};

/// Directory for shipped and external data: $SRCFG_DATA_DIR if set, otherwise
/// the source tree's data/ directory.
std::string data_dir();

enum class Primitivity { UnionOfPlanes, EllipticSemiplane, Primitive };
std::string to_string(Primitivity p);

struct FeasibilityVerdict {
  enum class Overall { Infeasible, PartialGeometryOnly, Feasible };

  SrcParams params;
  bool identity = false;
  SrgFeasibility srg;
  std::optional<std::string> external_exclusion;
  Primitivity primitivity = Primitivity::Primitive;
  std::optional<CliqueStatus> clique;
  std::optional<SquareResult> square;
  bool rook = false;
  Overall overall = Overall::Infeasible;
  std::string reason;
};

std::string to_string(FeasibilityVerdict::Overall o);

/// Runs the full battery on one parameter set, in the order identity,
/// SRG conditions, primitivity, external list, clique bound, square condition.
FeasibilityVerdict evaluate(const SrcParams& p, const ExclusionList& exclusions);

/// Every (v_k; lambda, mu) with v <= v_max, k >= 3 and 0 < mu < k(k-1) whose
/// SRG parameters pass srg_param_feasible, sorted by (v, k, lambda, mu).
/// Rows removed only by the exclusion list are kept and flagged.
std::vector<FeasibilityVerdict> enumerate_feasible(std::uint32_t v_max, const ExclusionList& exclusions);

struct TableSummary {
  std::size_t battery_survivors = 0;
  std::size_t externally_excluded = 0;
  std::size_t candidates = 0;  // survivors minus external exclusions
  std::size_t clique_fail = 0;
  std::size_t partial_geometries = 0;
  std::size_t square_fail = 0;
  std::size_t feasible = 0;
};

TableSummary summarize(const std::vector<FeasibilityVerdict>& rows);

/// Aligned text table: No., parameters, status, reason. Only feasible rows
/// are numbered; with all_rows the eliminated candidates follow.
std::string format_table(const std::vector<FeasibilityVerdict>& rows, bool all_rows);
std::string table_json(const std::vector<FeasibilityVerdict>& rows);

struct PgParams {
  std::int64_t s = 0, t = 0, alpha = 0;
};

struct PgGraph {
  SrgParams params;
  bool degenerate = false;  // complete or complete multipartite
};

/// Point (or line) graph parameters of pg(s,t,alpha). Throws
/// NonIntegralPointCount when alpha does not divide the point count.
PgGraph pg_graph_params(const PgParams& g, Side side);

}  // namespace srcfg
