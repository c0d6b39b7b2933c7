#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "srcfg/configuration.hpp"
#include "srcfg/group.hpp"

namespace srcfg {

/// Left differences of a subset D and the overlap counts n(x) = |Δ ∩ xΔ|.
struct DifferenceProfile {
  bool deficient = false;           // all left differences distinct and nontrivial
  std::vector<GroupElement> delta;  // sorted Δ(D), with repeats when not deficient
  std::vector<std::uint32_t> n_of;  // indexed by element; n_of[identity] = 0
};

DifferenceProfile difference_profile(const Group& g, const std::vector<GroupElement>& d);

/// (lambda, mu) if D is a strong deficient difference set, otherwise nullopt.
std::optional<std::pair<std::int64_t, std::int64_t>> sdds_check(const Group& g, const std::vector<GroupElement>& d);

enum class Normalization { None, ContainsIdentity };

struct SddsSearchOptions {
  Normalization normalization = Normalization::ContainsIdentity;
  std::size_t limit = 0;  // stop after this many results (0 = all)
};

/// Every SDDS for (|G|_k; lambda, mu). With ContainsIdentity one set per left
/// translation class is returned: the translate d^{-1}D that is smallest when
/// written as (identity, remaining elements ascending). With None every SDDS
/// is listed as an ascending index set. Output is sorted. Throws
/// InconsistentParameters when (|G|, k, lambda, mu) violates the parameter
/// identity or k < 3.
std::vector<std::vector<GroupElement>> sdds_search(const Group& g, std::uint32_t k, std::int64_t lambda,
                                                   std::int64_t mu, const SddsSearchOptions& options = {});

/// A difference set quoted in the literature with its group and parameters.
struct PublishedSdds {
  std::string id;
  std::string group;  // parse_group_spec text
  std::vector<std::string> labels;
  SrcParams params;
};

/// z13, z4xs4, s5, frobenius31_5, q8xq8-d1, q8xq8-d2.
const std::vector<PublishedSdds>& published_sdds();
const PublishedSdds& published_sdds(const std::string& id);

}  // namespace srcfg
