#include "srcfg/feasibility.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include <json.hpp>

#include "srcfg/errors.hpp"

#ifndef SRCFG_BUILTIN_DATA_DIR
#define SRCFG_BUILTIN_DATA_DIR "data"
#endif

namespace srcfg {

namespace {

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) return -1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_square(std::int64_t n) { return n >= 0 && isqrt(n) * isqrt(n) == n; }

void factor_into(std::int64_t n, std::int64_t weight, std::map<std::int64_t, std::int64_t>& exps) {
  for (std::int64_t p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      exps[p] += weight;
      n /= p;
    }
  if (n > 1) exps[n] += weight;
}

}  // namespace

Eigendata srg_eigendata(const SrgParams& p) {
  const auto [v, d, lambda, mu] = p;
  if ((v - d - 1) * mu != d * (d - 1 - lambda))
    throw IdentityViolated("(v-d-1)mu = d(d-1-lambda) fails for " + p.str());
  if (mu < 1) throw IdentityViolated("mu must be positive for " + p.str());
  Eigendata e;
  e.discriminant = (lambda - mu) * (lambda - mu) + 4 * (d - mu);
  const std::int64_t root = isqrt(e.discriminant);
  if (root * root != e.discriminant) {
    e.irrational = true;
    // f and g can only be integral when they coincide.
    if ((lambda - mu) * (v - 1) + 2 * d != 0 || (v - 1) % 2 != 0)
      throw NonIntegralMultiplicity("irrational eigenvalues with unequal multiplicities for " + p.str());
    e.f = e.g = (v - 1) / 2;
    return e;
  }
  e.r = (lambda - mu + root) / 2;
  e.s = (lambda - mu - root) / 2;
  const std::int64_t num_f = (v - 1) * (-e.s) - d;
  const std::int64_t num_g = d + (v - 1) * e.r;
  const std::int64_t den = e.r - e.s;
  if (den == 0 || num_f % den != 0 || num_g % den != 0)
    throw NonIntegralMultiplicity("multiplicities are not integers for " + p.str());
  e.f = num_f / den;
  e.g = num_g / den;
  if (e.f <= 0 || e.g <= 0) throw NonIntegralMultiplicity("nonpositive multiplicity for " + p.str());
  return e;
}

Eigendata eigendata(const SrcParams& p) { return srg_eigendata(SrgParams{p.v, p.degree(), p.lambda, p.mu}); }

SquareResult square_condition(const SrcParams& p) {
  const Eigendata e = eigendata(p);
  const std::int64_t k = p.k;
  SquareResult out;
  std::map<std::int64_t, std::int64_t> exps;
  bool negative = false;
  if (e.irrational) {
    // (r+k)(s+k) is an integer by Vieta; the product is its f-th power.
    const std::int64_t prod = p.mu - p.degree() + k * (p.lambda - p.mu) + k * k;
    if (prod == 0) {
      out.pass = out.singular = true;
      return out;
    }
    negative = prod < 0 && e.f % 2 == 1;
    factor_into(std::llabs(prod), e.f, exps);
  } else {
    const std::int64_t a = e.r + k, b = e.s + k;
    if (b == 0 || a == 0) {
      out.pass = out.singular = true;
      return out;
    }
    negative = ((a < 0) && e.f % 2 == 1) != ((b < 0) && e.g % 2 == 1);
    factor_into(std::llabs(a), e.f, exps);
    factor_into(std::llabs(b), e.g, exps);
  }
  if (negative) {
    out.witness_prime = -1;
    out.witness_exponent = 1;
    return out;
  }
  for (auto [prime, exponent] : exps)
    if (exponent % 2 != 0) {
      out.witness_prime = prime;
      out.witness_exponent = exponent;
      return out;
    }
  out.pass = true;
  return out;
}

std::string to_string(CliqueStatus s) {
  switch (s) {
    case CliqueStatus::Fail:
      return "fail";
    case CliqueStatus::EqualityPg:
      return "equality_pg";
    case CliqueStatus::StrictPass:
      return "strict_pass";
  }
  return "?";
}

CliqueStatus clique_condition(const SrcParams& p) {
  const std::int64_t lhs = (p.v - p.k) * (p.lambda + 1);
  const std::int64_t rhs = p.k * (p.k - 1) * (p.k - 1) * (p.k - 1);
  if (lhs < rhs) return CliqueStatus::Fail;
  if (lhs == rhs) return CliqueStatus::EqualityPg;
  return CliqueStatus::StrictPass;
}

bool rook_excluded(const SrcParams& p) {
  if (p.k <= 3) return false;
  const std::int64_t c = p.k * (p.k - 1) / 2;
  return p.v == (c + 1) * (c + 1) && p.lambda == c - 1 && p.mu == 2;
}

SrgFeasibility srg_param_feasible(const SrgParams& p) {
  const auto [v, d, lambda, mu] = p;
  if (v < 2 || d <= 0 || d >= v - 1 || lambda < 0 || lambda >= d || mu < 0 || mu > d)
    return {false, "parameters out of range"};
  if ((v - d - 1) * mu != d * (d - 1 - lambda)) return {false, "identity (v-d-1)mu = d(d-1-lambda) violated"};
  const std::int64_t comp_lambda = v - 2 - 2 * d + mu;
  const std::int64_t comp_mu = v - 2 * d + lambda;
  if (comp_lambda < 0 || comp_mu < 0) return {false, "complement parameters negative"};
  if (mu == 0 || mu == d) return {true, ""};  // imprimitive: disjoint cliques or complete multipartite

  Eigendata e;
  try {
    e = srg_eigendata(p);
  } catch (const Error& err) {
    return {false, "multiplicities not integral"};
  }
  if (e.irrational) {
    // Conference graph: v must be a sum of two squares.
    bool sum_of_squares = false;
    for (std::int64_t a = 0; a * a <= v && !sum_of_squares; ++a) sum_of_squares = is_square(v - a * a);
    if (!sum_of_squares) return {false, "conference graph order not a sum of two squares"};
    return {true, ""};
  }
  const std::int64_t r = e.r, s = e.s;
  if ((r + 1) * (d + r + 2 * r * s) > (d + r) * (s + 1) * (s + 1)) return {false, "Krein condition 1"};
  if ((s + 1) * (d + s + 2 * r * s) > (d + s) * (r + 1) * (r + 1)) return {false, "Krein condition 2"};
  if (2 * v > e.f * (e.f + 3) || 2 * v > e.g * (e.g + 3)) return {false, "absolute bound"};
  return {true, ""};
}

const ExclusionList::Entry* ExclusionList::find(const SrgParams& p) const {
  const SrgParams comp{p.v, p.v - p.d - 1, p.v - 2 - 2 * p.d + p.mu, p.v - 2 * p.d + p.lambda};
  for (const auto& e : entries)
    if (e.params == p || e.params == comp) return &e;
  return nullptr;
}

ExclusionList ExclusionList::parse(const std::string& text) {
  ExclusionList out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::string citation;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      citation = line.substr(hash + 1);
      citation.erase(0, citation.find_first_not_of(" \t"));
      while (!citation.empty() && std::isspace(static_cast<unsigned char>(citation.back()))) citation.pop_back();
      line.erase(hash);
    }
    std::istringstream ls(line);
    SrgParams p;
    if (!(ls >> p.v)) continue;
    if (!(ls >> p.d >> p.lambda >> p.mu)) throw ParseError("exclusion list line needs 'v d lambda mu'");
    out.entries.push_back({p, citation});
  }
  return out;
}

ExclusionList ExclusionList::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileNotFound(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string data_dir() {
  if (const char* env = std::getenv("SRCFG_DATA_DIR"); env && *env) return env;
  return SRCFG_BUILTIN_DATA_DIR;
}

ExclusionList ExclusionList::load_default() {
  const std::filesystem::path env_file = std::filesystem::path(data_dir()) / "srg_nonexistence.txt";
  if (std::filesystem::exists(env_file)) return load(env_file.string());
  return load((std::filesystem::path(SRCFG_BUILTIN_DATA_DIR) / "srg_nonexistence.txt").string());
}

std::string to_string(Primitivity p) {
  switch (p) {
    case Primitivity::UnionOfPlanes:
      return "union_of_planes";
    case Primitivity::EllipticSemiplane:
      return "elliptic_semiplane";
    case Primitivity::Primitive:
      return "primitive";
  }
  return "?";
}

std::string to_string(FeasibilityVerdict::Overall o) {
  switch (o) {
    case FeasibilityVerdict::Overall::Infeasible:
      return "infeasible";
    case FeasibilityVerdict::Overall::PartialGeometryOnly:
      return "partial_geometry_only";
    case FeasibilityVerdict::Overall::Feasible:
      return "feasible";
  }
  return "?";
}

FeasibilityVerdict evaluate(const SrcParams& p, const ExclusionList& exclusions) {
  FeasibilityVerdict out;
  out.params = p;
  const std::int64_t d = p.degree();
  const SrgParams srg{p.v, d, p.lambda, p.mu};
  out.identity = (p.v - 1 - d) * p.mu == d * (d - 1 - p.lambda);
  out.rook = rook_excluded(p);
  out.primitivity = p.mu == 0 ? Primitivity::UnionOfPlanes
                    : p.mu == d ? Primitivity::EllipticSemiplane
                                : Primitivity::Primitive;
  if (!out.identity) {
    out.reason = "identity";
    return out;
  }
  out.srg = srg_param_feasible(srg);
  if (!out.srg.pass) {
    out.reason = "srg: " + out.srg.reason;
    return out;
  }
  if (out.primitivity != Primitivity::Primitive) {
    out.reason = "imprimitive (" + to_string(out.primitivity) + ")";
    return out;
  }
  if (const auto* hit = exclusions.find(srg)) {
    out.external_exclusion = hit->citation.empty() ? std::string("listed") : hit->citation;
    out.reason = "no such SRG (" + *out.external_exclusion + ")";
    return out;
  }
  out.clique = clique_condition(p);
  if (*out.clique == CliqueStatus::Fail) {
    out.reason = "clique bound";
    return out;
  }
  if (*out.clique == CliqueStatus::EqualityPg) {
    out.overall = FeasibilityVerdict::Overall::PartialGeometryOnly;
    const std::int64_t alpha = p.mu / p.k;
    out.reason = "partial geometry pg(" + std::to_string(p.k - 1) + "," + std::to_string(p.k - 1) + "," +
                 std::to_string(alpha) + ")";
    return out;
  }
  out.square = square_condition(p);
  if (!out.square->pass) {
    out.reason = "square condition (prime " + std::to_string(out.square->witness_prime) + "^" +
                 std::to_string(out.square->witness_exponent) + ")";
    return out;
  }
  out.overall = FeasibilityVerdict::Overall::Feasible;
  if (out.rook) out.reason = "rook graph: no configuration";
  return out;
}

std::vector<FeasibilityVerdict> enumerate_feasible(std::uint32_t v_max, const ExclusionList& exclusions) {
  std::vector<FeasibilityVerdict> out;
  for (std::int64_t k = 3;; ++k) {
    const std::int64_t d = k * (k - 1);
    if (d + 2 > v_max) break;
    for (std::int64_t mu = 1; mu < d; ++mu)
      for (std::int64_t lambda = 0; lambda < d; ++lambda) {
        const std::int64_t num = d * (d - 1 - lambda);
        if (num <= 0 || num % mu != 0) continue;
        const std::int64_t v = 1 + d + num / mu;
        if (v > v_max) continue;
        if (!srg_param_feasible(SrgParams{v, d, lambda, mu}).pass) continue;
        out.push_back(evaluate(SrcParams{v, k, lambda, mu}, exclusions));
      }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.params < b.params; });
  return out;
}

TableSummary summarize(const std::vector<FeasibilityVerdict>& rows) {
  TableSummary s;
  for (const auto& r : rows) {
    if (!r.identity || !r.srg.pass || r.primitivity != Primitivity::Primitive) continue;
    ++s.battery_survivors;
    if (r.external_exclusion) {
      ++s.externally_excluded;
      continue;
    }
    ++s.candidates;
    if (r.clique == CliqueStatus::Fail) ++s.clique_fail;
    else if (r.clique == CliqueStatus::EqualityPg) ++s.partial_geometries;
    else if (r.square && !r.square->pass) ++s.square_fail;
    else if (r.overall == FeasibilityVerdict::Overall::Feasible) ++s.feasible;
  }
  return s;
}

std::string format_table(const std::vector<FeasibilityVerdict>& rows, bool all_rows) {
  std::ostringstream out;
  out << std::left << std::setw(5) << "No." << std::setw(20) << "(v_k;lambda,mu)" << std::setw(24) << "status"
      << "reason\n";
  int number = 0;
  for (const auto& r : rows) {
    if (r.overall != FeasibilityVerdict::Overall::Feasible) continue;
    out << std::setw(5) << ++number << std::setw(20) << r.params.str() << std::setw(24) << to_string(r.overall)
        << r.reason << '\n';
  }
  if (all_rows) {
    for (const auto& r : rows) {
      if (r.overall == FeasibilityVerdict::Overall::Feasible) continue;
      out << std::setw(5) << "-" << std::setw(20) << r.params.str() << std::setw(24) << to_string(r.overall)
          << r.reason << '\n';
    }
  }
  return out.str();
}

std::string table_json(const std::vector<FeasibilityVerdict>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  int number = 0;
  for (const auto& r : rows) {
    nlohmann::json j;
    j["no"] = r.overall == FeasibilityVerdict::Overall::Feasible ? nlohmann::json(++number) : nlohmann::json();
    j["v"] = r.params.v;
    j["k"] = r.params.k;
    j["lambda"] = r.params.lambda;
    j["mu"] = r.params.mu;
    j["params"] = r.params.str();
    j["status"] = to_string(r.overall);
    j["reason"] = r.reason;
    j["primitivity"] = to_string(r.primitivity);
    j["rook_excluded"] = r.rook;
    j["external_exclusion"] = r.external_exclusion ? nlohmann::json(*r.external_exclusion) : nlohmann::json();
    j["clique_condition"] = r.clique ? nlohmann::json(to_string(*r.clique)) : nlohmann::json();
    if (r.square) {
      j["square_condition"] = r.square->pass ? "pass" : "fail";
      if (!r.square->pass)
        j["square_witness"] = {{"prime", r.square->witness_prime}, {"exponent", r.square->witness_exponent}};
    } else {
      j["square_condition"] = nullptr;
    }
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

PgGraph pg_graph_params(const PgParams& g, Side side) {
  const std::int64_t s = side == Side::Point ? g.s : g.t;
  const std::int64_t t = side == Side::Point ? g.t : g.s;
  const std::int64_t alpha = g.alpha;
  if (alpha <= 0) throw NonIntegralPointCount("alpha must be positive");
  const std::int64_t num = (s + 1) * (s * t + alpha);
  if (num % alpha != 0)
    throw NonIntegralPointCount("pg(" + std::to_string(g.s) + "," + std::to_string(g.t) + "," + std::to_string(alpha) +
                                ") has non-integral point count");
  PgGraph out;
  out.params = SrgParams{num / alpha, s * (t + 1), s - 1 + t * (alpha - 1), alpha * (t + 1)};
  out.degenerate = out.params.d >= out.params.v - 1 || out.params.mu == out.params.d || out.params.mu == 0;
  return out;
}

}  // namespace srcfg
