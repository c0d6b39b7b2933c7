#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace srcfg {

using GroupElement = std::uint32_t;

/// Finite group as a Cayley table over dense indices 0..n-1.
class Group {
 public:
  /// Validates the table (Latin square, identity, inverses, associativity)
  /// and throws InvalidCayleyTable on failure. Associativity is checked
  /// exhaustively when check_associativity is set.
  Group(std::uint32_t order, std::vector<GroupElement> table, std::vector<std::string> names = {},
        bool check_associativity = true);

  std::uint32_t order() const { return order_; }
  GroupElement identity() const { return identity_; }
  GroupElement mul(GroupElement a, GroupElement b) const { return table_[a * order_ + b]; }
  GroupElement inv(GroupElement a) const { return inverse_[a]; }
  /// Left difference a^{-1} b.
  GroupElement ldiff(GroupElement a, GroupElement b) const { return mul(inverse_[a], b); }

  const std::vector<GroupElement>& table() const { return table_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(GroupElement a) const { return names_[a]; }
  /// Index of the element whose label equals name (whitespace ignored).
  std::optional<GroupElement> find(std::string_view name) const;

  bool is_abelian() const;

 private:
  std::uint32_t order_;
  std::vector<GroupElement> table_;
  std::vector<GroupElement> inverse_;
  GroupElement identity_ = 0;
  std::vector<std::string> names_;
};

/// Description of a group to build. Parsed from text by parse_group_spec:
///   cyclic:N  symmetric:N  quaternion8  frobenius31_5
///   product(A,B)  cayley:PATH
struct GroupSpec {
  enum class Kind { Cyclic, Symmetric, Quaternion8, DirectProduct, Frobenius31_5, CayleyFile };
  Kind kind = Kind::Cyclic;
  std::uint32_t n = 0;
  std::string path;
  std::shared_ptr<GroupSpec> left, right;

  static GroupSpec cyclic(std::uint32_t n);
  static GroupSpec symmetric(std::uint32_t n);
  static GroupSpec quaternion8();
  static GroupSpec frobenius_31_5();
  static GroupSpec direct_product(GroupSpec a, GroupSpec b);
  static GroupSpec cayley_file(std::string path);
};

GroupSpec parse_group_spec(std::string_view text);

Group make_group(const GroupSpec& spec);

Group cyclic_group(std::uint32_t n);
/// Permutations of {1..n} in lexicographic order of their image lists; the
/// product ab applies a first, then b. Labels use cycle notation, "id" for
/// the identity.
Group symmetric_group(std::uint32_t n);
/// Labels 1,-1,i,-i,j,-j,k,-k with ij = k.
Group quaternion_group();
/// Group of maps x -> 2^b (x + a) on Z_31, labelled f^a g^b, where f is
/// x -> x+1 and g is x -> 2x. Products apply the left factor first.
Group frobenius_31_5();
/// Elements (a,b) with index a*|B| + b, labelled "(la,lb)".
Group direct_product(const Group& a, const Group& b);

/// Cayley-table text: first line n, then n rows of n indices, then optional
/// "# i name" lines.
Group read_cayley_file(const std::string& path);
Group parse_cayley_table(std::string_view text);
std::string format_cayley_table(const Group& g);

/// Parses cycle notation such as "(1,4)(2,3)" or "id" into an image list of
/// {1..n} (0-based images).
std::vector<std::uint32_t> parse_permutation(std::string_view text, std::uint32_t n);

}  // namespace srcfg
