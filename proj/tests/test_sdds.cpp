#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "srcfg/constructions.hpp"
#include "srcfg/errors.hpp"
#include "srcfg/iso.hpp"
#include "srcfg/sdds.hpp"

using namespace srcfg;

namespace {

// Smallest of the translates d^{-1}D, written identity first.
std::vector<GroupElement> normal_form(const Group& g, const std::vector<GroupElement>& set) {
  std::vector<GroupElement> best;
  for (auto d : set) {
    std::vector<GroupElement> t;
    for (auto x : set) t.push_back(g.ldiff(d, x));
    std::sort(t.begin(), t.end());
    t.erase(std::find(t.begin(), t.end(), g.identity()));
    t.insert(t.begin(), g.identity());
    if (best.empty() || t < best) best = t;
  }
  return best;
}

// Direct count of n(x) = |Δ ∩ xΔ| over all pairs.
std::vector<std::uint32_t> overlap_counts(const Group& g, const std::vector<GroupElement>& d) {
  std::vector<bool> in(g.order(), false);
  for (auto a : d)
    for (auto b : d)
      if (a != b) in[g.ldiff(a, b)] = true;
  std::vector<std::uint32_t> n(g.order(), 0);
  for (GroupElement x = 0; x < g.order(); ++x) {
    if (x == g.identity()) continue;
    for (GroupElement y = 0; y < g.order(); ++y)
      if (in[y] && in[g.mul(x, y)]) ++n[x];
  }
  return n;
}

}  // namespace

TEST_CASE("sdds_check examples") {
  const Group z13 = cyclic_group(13);
  CHECK(sdds_check(z13, {7, 8, 11}) == std::pair<std::int64_t, std::int64_t>{2, 3});
  CHECK_FALSE(sdds_check(z13, {0, 1, 2}));
  CHECK_FALSE(sdds_check(z13, {0, 1, 3}));  // deficient but n takes more values
  for (const auto& s : published_sdds()) {
    CAPTURE(s.id);
    const Group g = make_group(parse_group_spec(s.group));
    const auto d = elements_by_name(g, s.labels);
    const auto lm = sdds_check(g, d);
    REQUIRE(lm);
    CHECK(lm->first == s.params.lambda);
    CHECK(lm->second == s.params.mu);
    CHECK(src_check(development(g, d)) == s.params);
  }
  CHECK(published_sdds("z4xs4").params.str() == "(96_5;4,4)");
  CHECK_THROWS_AS(published_sdds("nope"), InvalidSpec);
}

TEST_CASE("difference profiles") {
  const Group z13 = cyclic_group(13);
  const auto p = difference_profile(z13, {7, 8, 11});
  CHECK(p.deficient);
  CHECK(p.delta.size() == 6);
  for (auto x : p.delta) CHECK(std::binary_search(p.delta.begin(), p.delta.end(), z13.inv(x)));
  CHECK(p.n_of == overlap_counts(z13, {7, 8, 11}));
  CHECK(p.n_of[z13.identity()] == 0);
  CHECK_FALSE(difference_profile(z13, {0, 1, 2}).deficient);

  for (const auto& s : published_sdds()) {
    const Group g = make_group(parse_group_spec(s.group));
    const auto d = elements_by_name(g, s.labels);
    const auto prof = difference_profile(g, d);
    CHECK(prof.n_of == overlap_counts(g, d));
    const auto k = static_cast<std::int64_t>(d.size()), delta = k * (k - 1);
    CHECK(static_cast<std::int64_t>(prof.delta.size()) == delta);
    CHECK(s.params.lambda * delta + s.params.mu * (g.order() - 1 - delta) == delta * (delta - 1));
  }
}

TEST_CASE("the sdds property is invariant under left translation") {
  for (const auto& s : published_sdds()) {
    CAPTURE(s.id);
    const Group g = make_group(parse_group_spec(s.group));
    const auto d = elements_by_name(g, s.labels);
    const auto base = sdds_check(g, d);
    for (GroupElement h = 0; h < g.order(); ++h) {
      std::vector<GroupElement> hd;
      for (auto x : d) hd.push_back(g.mul(h, x));
      CHECK(sdds_check(g, hd) == base);
    }
  }
}

TEST_CASE("Z13 search") {
  const Group z13 = cyclic_group(13);
  const auto found = sdds_search(z13, 3, 2, 3);
  CHECK(found == std::vector<std::vector<GroupElement>>{{0, 1, 4}, {0, 1, 10}, {0, 2, 7}, {0, 2, 8}});
  std::set<CanonicalForm> forms;
  for (const auto& d : found) {
    CHECK(src_check(development(z13, d))->str() == "(13_3;2,3)");
    CHECK(normal_form(z13, d) == d);
    forms.insert(canonical_form(development(z13, d)));
  }
  CHECK(forms.size() == 1);
  CHECK(std::find(found.begin(), found.end(), normal_form(z13, {7, 8, 11})) != found.end());

  // Without normalisation every translate of every class appears.
  const auto all = sdds_search(z13, 3, 2, 3, {Normalization::None, 0});
  CHECK(all.size() == found.size() * 13);
  for (const auto& d : all) CHECK(sdds_check(z13, d));
  std::set<std::vector<GroupElement>> classes;
  for (const auto& d : all) classes.insert(normal_form(z13, d));
  CHECK(classes == std::set<std::vector<GroupElement>>(found.begin(), found.end()));

  CHECK(sdds_search(z13, 3, 2, 3, {Normalization::ContainsIdentity, 2}).size() == 2);
}

TEST_CASE("search agrees with brute force in small groups") {
  // Every 3-subset of Z_13 and of Z_4 x Z_4 checked directly.
  for (const char* spec : {"cyclic:13", "product(cyclic:4,cyclic:4)"}) {
    const Group g = make_group(parse_group_spec(spec));
    const std::int64_t v = g.order();
    for (std::int64_t lambda = 0; lambda <= 6; ++lambda)
      for (std::int64_t mu = 1; mu <= 6; ++mu) {
        if ((v - 1 - 6) * mu != 6 * (5 - lambda)) continue;
        std::set<std::vector<GroupElement>> brute;
        for (GroupElement a = 0; a < v; ++a)
          for (GroupElement b = a + 1; b < v; ++b)
            for (GroupElement c = b + 1; c < v; ++c) {
              const auto lm = sdds_check(g, {a, b, c});
              if (lm && lm->first == lambda && lm->second == mu) brute.insert(normal_form(g, {a, b, c}));
            }
        const auto found = sdds_search(g, 3, lambda, mu);
        CHECK(std::set<std::vector<GroupElement>>(found.begin(), found.end()) == brute);
      }
  }
}

TEST_CASE("published S5 set is found by the search") {
  const auto& s = published_sdds("s5");
  const Group g = make_group(parse_group_spec(s.group));
  const auto found = sdds_search(g, 8, 28, 24);
  CHECK(!found.empty());
  const auto target = normal_form(g, elements_by_name(g, s.labels));
  CHECK(std::find(found.begin(), found.end(), target) != found.end());
  for (const auto& d : found) CHECK(sdds_check(g, d) == std::pair<std::int64_t, std::int64_t>{28, 24});
}

TEST_CASE("search parameter errors") {
  CHECK_THROWS_AS(sdds_search(cyclic_group(12), 3, 2, 3), InconsistentParameters);
  CHECK_THROWS_AS(sdds_search(cyclic_group(13), 2, 0, 1), InconsistentParameters);
}
