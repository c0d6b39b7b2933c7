#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdlib>

#include "srcfg/claims.hpp"
#include "srcfg/errors.hpp"
#include "srcfg/feasibility.hpp"

using namespace srcfg;
using boost::multiprecision::cpp_int;

TEST_CASE("eigendata examples") {
  const auto e = eigendata({28, 4, 6, 4});
  CHECK(!e.irrational);
  CHECK(e.r == 4);
  CHECK(e.s == -2);
  CHECK(e.f == 7);
  CHECK(e.g == 20);
  CHECK(eigendata({10, 3, 3, 4}) == Eigendata{false, 9, 1, -2, 4, 5});
  CHECK_THROWS_AS(eigendata({10, 3, 3, 5}), IdentityViolated);
  const auto c = srg_eigendata({13, 6, 2, 3});
  CHECK(c.irrational);
  CHECK(c.f == 6);
  CHECK(c.g == 6);
}

TEST_CASE("square condition examples") {
  const auto s = square_condition({28, 4, 6, 4});
  CHECK_FALSE(s.pass);
  CHECK(s.witness_prime == 2);
  CHECK(s.witness_exponent == 41);
  CHECK(square_condition({10, 3, 3, 4}).pass);
  // pg(2,2,1): s + k = 0.
  const auto z = square_condition({15, 3, 1, 3});
  CHECK(z.pass);
  CHECK(z.singular);
}

TEST_CASE("clique condition examples") {
  CHECK(clique_condition({81, 5, 1, 6}) == CliqueStatus::Fail);
  CHECK(clique_condition({15, 3, 1, 3}) == CliqueStatus::EqualityPg);
  CHECK(clique_condition({13, 3, 2, 3}) == CliqueStatus::StrictPass);
}

TEST_CASE("rook exclusion examples") {
  CHECK(rook_excluded({49, 4, 5, 2}));
  CHECK(rook_excluded({121, 5, 9, 2}));
  CHECK_FALSE(rook_excluded({16, 3, 2, 2}));
  CHECK_FALSE(rook_excluded({49, 4, 5, 3}));
}

TEST_CASE("srg battery examples") {
  CHECK(srg_param_feasible({28, 12, 6, 4}).pass);
  CHECK(srg_param_feasible({50, 42, 35, 36}).pass);
  CHECK_FALSE(srg_param_feasible({10, 6, 3, 5}).pass);
  CHECK_FALSE(srg_param_feasible({28, 9, 0, 4}).pass);  // Krein
  CHECK(srg_param_feasible({13, 6, 2, 3}).pass);        // conference
  CHECK_FALSE(srg_param_feasible({21, 10, 4, 5}).pass); // conference order not a sum of two squares
}

namespace {

// Krein parameters q_11^1 and q_22^2 from the eigenmatrix of the scheme,
// and the absolute bound on both multiplicities.
bool krein_oracle(const SrgParams& p) {
  const double v = p.v, d = p.d, lambda = p.lambda, mu = p.mu;
  const double disc = (lambda - mu) * (lambda - mu) + 4 * (d - mu);
  const double r = (lambda - mu + std::sqrt(disc)) / 2, s = (lambda - mu - std::sqrt(disc)) / 2;
  const double f = -((v - 1) * s + d) / (r - s), g = ((v - 1) * r + d) / (r - s);
  const double P[3][3] = {{1, d, v - d - 1}, {1, r, -1 - r}, {1, s, -1 - s}};
  const double m[3] = {1, f, g}, n[3] = {1, d, v - d - 1};
  auto q = [&](int i) {
    double sum = 0;
    for (int l = 0; l < 3; ++l) sum += P[i][l] * P[i][l] * P[i][l] / (n[l] * n[l]);
    return m[i] * m[i] / v * sum;
  };
  if (q(1) < -1e-9 || q(2) < -1e-9) return false;
  return v <= f * (f + 3) / 2 + 1e-9 && v <= g * (g + 3) / 2 + 1e-9;
}

bool integral_spectrum(const SrgParams& p) {
  try {
    return !srg_eigendata(p).irrational;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

TEST_CASE("Krein and absolute bound agree with the eigenmatrix oracle for v <= 50") {
  std::size_t compared = 0, rejected = 0;
  for (std::int64_t v = 5; v <= 50; ++v)
    for (std::int64_t d = 1; d < v - 1; ++d)
      for (std::int64_t lambda = 0; lambda < d; ++lambda)
        for (std::int64_t mu = 1; mu < d; ++mu) {
          const SrgParams p{v, d, lambda, mu};
          if ((v - d - 1) * mu != d * (d - 1 - lambda)) continue;
          if (v - 2 - 2 * d + mu < 0 || v - 2 * d + lambda < 0) continue;
          if (!integral_spectrum(p)) continue;
          CAPTURE(p.str());
          const auto impl = srg_param_feasible(p);
          CHECK(impl.pass == krein_oracle(p));
          ++compared;
          rejected += !impl.pass;
        }
  CHECK(compared >= 50);
  CHECK(rejected > 0);
}

namespace {

// Exact determinant (r+k)^f (s+k)^g of N N^T without the k^2 factor.
bool determinant_is_square(const SrcParams& p) {
  const auto e = eigendata(p);
  cpp_int det = boost::multiprecision::pow(cpp_int(e.r + p.k), static_cast<unsigned>(e.f)) *
                boost::multiprecision::pow(cpp_int(e.s + p.k), static_cast<unsigned>(e.g));
  if (det < 0) return false;
  const cpp_int root = boost::multiprecision::sqrt(det);
  return root * root == det;
}

}  // namespace

TEST_CASE("square condition agrees with exact determinants") {
  std::size_t compared = 0;
  for (std::int64_t k = 3; k <= 8; ++k)
    for (std::int64_t v = k * (k - 1) + 2; v <= 300; ++v)
      for (std::int64_t lambda = 0; lambda < k * (k - 1); ++lambda)
        for (std::int64_t mu = 1; mu < k * (k - 1); ++mu) {
          const SrcParams p{v, k, lambda, mu};
          const auto d = p.degree();
          if ((v - 1 - d) * mu != d * (d - 1 - lambda)) continue;
          Eigendata e;
          try {
            e = eigendata(p);
          } catch (const Error&) {
            continue;
          }
          if (e.irrational) continue;
          CAPTURE(p.str());
          CHECK(square_condition(p).pass == determinant_is_square(p));
          ++compared;
        }
  CHECK(compared >= 20);
}

TEST_CASE("enumerated rows obey the spectral identities") {
  const auto rows = enumerate_feasible(200, ExclusionList::load_default());
  for (const auto& row : rows) {
    const auto& p = row.params;
    CHECK(p.mu > 0);
    CHECK(p.mu < p.degree());
    const auto e = eigendata(p);
    CHECK(e.f + e.g == p.v - 1);
    if (!e.irrational) CHECK(e.r * e.f + e.s * e.g == -p.degree());
    if (row.clique && *row.clique == CliqueStatus::Fail) CHECK_FALSE(row.rook);
  }
  CHECK(std::is_sorted(rows.begin(), rows.end(),
                       [](const auto& a, const auto& b) { return a.params < b.params; }));
}

TEST_CASE("table regeneration") {
  const auto rows = enumerate_feasible(200, ExclusionList::load_default());
  const auto sum = summarize(rows);
  CHECK(sum.candidates == 64);
  CHECK(sum.clique_fail == 11);
  CHECK(sum.partial_geometries == 6);
  CHECK(sum.square_fail == 6);
  CHECK(sum.feasible == 41);
  std::vector<SrcParams> feasible;
  for (const auto& r : rows)
    if (r.overall == FeasibilityVerdict::Overall::Feasible) feasible.push_back(r.params);
  CHECK(feasible == published_feasible_table());

  for (const auto& r : rows)
    if (r.params == SrcParams{28, 4, 6, 4}) CHECK(r.overall == FeasibilityVerdict::Overall::Infeasible);
  std::size_t pg = 0;
  for (const auto& r : rows) pg += r.overall == FeasibilityVerdict::Overall::PartialGeometryOnly;
  CHECK(pg == 6);
  CHECK(format_table(rows, false).find("(155_7;17,9)") != std::string::npos);
  CHECK(table_json(rows).find("\"feasible\"") != std::string::npos);
}

TEST_CASE("rook rows stay in the table flagged") {
  for (const auto& r : enumerate_feasible(200, ExclusionList::load_default()))
    if (r.params == SrcParams{49, 4, 5, 2}) {
      CHECK(r.rook);
      CHECK(r.overall == FeasibilityVerdict::Overall::Feasible);
    }
}

TEST_CASE("exclusion list") {
  const auto list = ExclusionList::parse("# header\n49 16 3 6  # source A\n\n57 14 1 4\n");
  REQUIRE(list.entries.size() == 2);
  CHECK(list.entries[0].citation == "source A");
  CHECK(list.find({49, 16, 3, 6}) != nullptr);
  CHECK(list.find({49, 32, 21, 20}) != nullptr);  // complement
  CHECK(list.find({50, 7, 0, 1}) == nullptr);
  CHECK_THROWS_AS(ExclusionList::parse("49 16 3\n"), ParseError);
  CHECK_THROWS_AS(ExclusionList::load("/nonexistent/list.txt"), FileNotFound);
  CHECK(ExclusionList::load_default().entries.size() == 8);

  // Without the list, excluded rows come back as feasible.
  const auto rows = enumerate_feasible(200, ExclusionList{});
  CHECK(summarize(rows).feasible > 41);
}

TEST_CASE("data directory follows the environment") {
  const char* old = std::getenv("SRCFG_DATA_DIR");
  const std::string saved = old ? old : "";
  setenv("SRCFG_DATA_DIR", "/some/where", 1);
  CHECK(data_dir() == "/some/where");
  if (old)
    setenv("SRCFG_DATA_DIR", saved.c_str(), 1);
  else
    unsetenv("SRCFG_DATA_DIR");
}

TEST_CASE("partial geometry graph parameters") {
  CHECK(pg_graph_params({7, 8, 4}, Side::Point).params == SrgParams{120, 63, 30, 36});
  CHECK(pg_graph_params({2, 2, 1}, Side::Point).params == SrgParams{15, 6, 1, 3});
  const auto d = pg_graph_params({1, 1, 1}, Side::Point);
  CHECK(d.params == SrgParams{4, 2, 0, 2});
  CHECK(d.degenerate);
  CHECK_THROWS_AS(pg_graph_params({2, 3, 4}, Side::Point), NonIntegralPointCount);
  CHECK_THROWS_AS(pg_graph_params({2, 2, 0}, Side::Point), NonIntegralPointCount);
}
