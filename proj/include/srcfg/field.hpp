#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace srcfg {

/// Element of a finite field, stored as the index sum c_i * p^i of its
/// coefficient vector in the polynomial basis 1, x, ..., x^(e-1).
using FieldElement = std::uint32_t;

/// q = p^e decomposition; absent when q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);

bool is_prime(std::uint64_t n);

/// GF(q) for q <= 2^16. The modulus is the lexicographically least monic
/// irreducible polynomial of degree e, comparing coefficients from x^(e-1)
/// down to x^0. Multiplication goes through discrete log tables.
class FiniteField {
 public:
  explicit FiniteField(std::uint32_t q);

  std::uint32_t order() const { return q_; }
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return e_; }
  /// Coefficients c_0..c_{e-1} of the modulus x^e + c_{e-1} x^{e-1} + ... + c_0.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  FieldElement primitive_element() const { return primitive_; }

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement inv(FieldElement a) const;
  FieldElement pow(FieldElement a, std::uint64_t n) const;

  /// Discrete log to base primitive_element(); a must be nonzero.
  std::uint32_t log(FieldElement a) const { return log_[a]; }
  FieldElement exp(std::uint64_t n) const { return exp_[n % (q_ - 1)]; }

  bool is_square(FieldElement a) const;

 private:
  std::uint32_t q_, p_, e_;
  std::vector<std::uint32_t> modulus_;
  FieldElement primitive_ = 0;
  std::vector<FieldElement> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> digit_weight_;

  FieldElement slow_mul(FieldElement a, FieldElement b) const;
};

FiniteField make_field(std::uint64_t q);

}  // namespace srcfg
