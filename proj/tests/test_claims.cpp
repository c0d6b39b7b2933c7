#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>

#include "srcfg/claims.hpp"
#include "srcfg/errors.hpp"
#include "srcfg/generators.hpp"
#include "srcfg/graph6.hpp"

using namespace srcfg;

TEST_CASE("registry") {
  const auto& list = claims();
  REQUIRE(list.size() == 13);
  for (std::size_t i = 0; i < list.size(); ++i) CHECK(list[i].number == static_cast<int>(i) + 1);
  CHECK(run_claim("2").id == "square-28-4");
  CHECK(run_claim("square-28-4").match());
  CHECK_THROWS_AS(run_claim("14"), InvalidSpec);
  CHECK_THROWS_AS(run_claim("nope"), InvalidSpec);
}

TEST_CASE("claim json") {
  const auto r = run_claim("clique-81-5");
  const auto j = claim_json(r);
  CHECK(j["id"] == "clique-81-5");
  CHECK(j["status"] == "match");
  CHECK(j["check"]["match"] == true);
  CHECK(j["check"]["expected"] == j["check"]["observed"]);
}

TEST_CASE("graph lists are read from the data directory") {
  const auto dir = std::filesystem::temp_directory_path() / "srcfg_claims_data";
  std::filesystem::create_directories(dir);
  const char* old = std::getenv("SRCFG_DATA_DIR");
  const std::string saved = old ? old : "";
  setenv("SRCFG_DATA_DIR", dir.c_str(), 1);

  std::filesystem::remove(dir / "srg-25-12-5-6.g6");
  std::filesystem::remove(dir / "srg-45-12-3-3.g6");
  CHECK(run_claim("srg-lists").status == ClaimResult::Status::Skipped);

  // Incomplete lists: the counts differ from the published ones.
  write_graph6_file((dir / "srg-25-12-5-6.g6").string(), {paley_graph(25)});
  write_graph6_file((dir / "srg-45-12-3-3.g6").string(), {paley_graph(25)});
  const auto r = run_claim("srg-lists");
  CHECK(r.status == ClaimResult::Status::Mismatch);
  CHECK(r.observed["srg25"]["graphs"] == 1);
  CHECK(r.observed["srg25"]["configurations"] == 0);
  CHECK(r.observed["srg25"]["cliques_in_range"] == true);

  std::filesystem::remove_all(dir);
  if (old)
    setenv("SRCFG_DATA_DIR", saved.c_str(), 1);
  else
    unsetenv("SRCFG_DATA_DIR");
}
