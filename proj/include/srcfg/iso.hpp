#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "srcfg/configuration.hpp"

namespace srcfg {

/// Canonical incidence matrix of a configuration: a header with v, k and the
/// line count, then the v x b incidence bits row by row. Equal byte strings
/// mean isomorphic configurations (points to points, lines to lines).
struct CanonicalForm {
  std::string bytes;

  std::string hex() const;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Result of the canonical labelling search on the Levi graph. Vertices
/// 0..v-1 are points and v..v+b-1 are lines.
struct LabellingResult {
  CanonicalForm form;
  std::uint64_t aut_order = 1;
  /// Strong generating set for the automorphism group, as permutations of
  /// the Levi graph vertices.
  std::vector<std::vector<std::uint32_t>> generators;
  /// Canonical position of each Levi vertex.
  std::vector<std::uint32_t> labelling;
  std::uint64_t nodes = 0;  // search tree nodes visited
};

/// Throws InvalidConfiguration on an invalid configuration and Overflow if
/// the group order exceeds 2^64.
LabellingResult canonical_labelling(const Configuration& c);

CanonicalForm canonical_form(const Configuration& c);

/// Order of the group of incidence-preserving point and line permutations.
/// Dualities are not counted.
std::uint64_t aut_order(const Configuration& c);

bool is_self_dual(const Configuration& c);
bool isomorphic(const Configuration& a, const Configuration& b);

}  // namespace srcfg
