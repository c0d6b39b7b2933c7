#include "srcfg/field.hpp"

#include <string>

#include "srcfg/errors.hpp"

namespace srcfg {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;  // q itself is prime
  std::uint32_t e = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) return std::nullopt;
  return std::pair{static_cast<std::uint32_t>(p), e};
}

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients, lowest degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over Z_p.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i)
      a[shift + i] = (a[shift + i] + p - (lead * b[i]) % p) % p;
    trim(a);
  }
  return a;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      g[d] = 1;
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

FiniteField::FiniteField(std::uint32_t q) : q_(q) {
  const auto pe = prime_power(q);
  if (!pe) throw NotPrimePower("field order " + std::to_string(q) + " is not a prime power");
  if (q > (1u << 16)) throw InvalidSpec("field order " + std::to_string(q) + " exceeds 2^16");
  p_ = pe->first;
  e_ = pe->second;

  digit_weight_.resize(e_);
  std::uint32_t w = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    digit_weight_[i] = w;
    w *= p_;
  }

  // Monic degree-e polynomials enumerated with c_{e-1} most significant.
  for (std::uint32_t code = 0; code < q_; ++code) {
    Poly f(e_ + 1, 0);
    f[e_] = 1;
    std::uint32_t c = code;
    for (std::uint32_t i = 0; i < e_; ++i) {
      f[i] = c % p_;
      c /= p_;
    }
    if (is_irreducible(f, p_)) {
      modulus_.assign(f.begin(), f.end() - 1);
      break;
    }
  }

  auto slow_pow = [&](FieldElement a, std::uint64_t n) {
    FieldElement r = 1;
    while (n) {
      if (n & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      n >>= 1;
    }
    return r;
  };
  const auto factors = prime_factors(q_ - 1);
  for (FieldElement a = 1; a < q_; ++a) {
    bool primitive = true;
    for (auto r : factors)
      if (slow_pow(a, (q_ - 1) / r) == 1) primitive = false;
    if (primitive) {
      primitive_ = a;
      break;
    }
  }

  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  FieldElement x = 1;
  for (std::uint32_t i = 0; i + 1 < q_; ++i) {
    exp_[i] = x;
    log_[x] = i;
    x = slow_mul(x, primitive_);
  }
}

FieldElement FiniteField::slow_mul(FieldElement a, FieldElement b) const {
  Poly pa(e_), pb(e_);
  for (std::uint32_t i = 0; i < e_; ++i) {
    pa[i] = a % p_;
    a /= p_;
    pb[i] = b % p_;
    b /= p_;
  }
  Poly prod(2 * e_, 0);
  for (std::uint32_t i = 0; i < e_; ++i)
    for (std::uint32_t j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
  Poly mod(modulus_.begin(), modulus_.end());
  mod.push_back(1);
  Poly r = poly_mod(prod, mod, p_);
  FieldElement out = 0;
  for (std::size_t i = 0; i < r.size(); ++i) out += r[i] * digit_weight_[i];
  return out;
}

FieldElement FiniteField::add(FieldElement a, FieldElement b) const {
  if (p_ == 2) return a ^ b;
  FieldElement out = 0;
  for (std::uint32_t i = 0; i < e_; ++i) {
    out += ((a % p_ + b % p_) % p_) * digit_weight_[i];
    a /= p_;
    b /= p_;
  }
  return out;
}

FieldElement FiniteField::neg(FieldElement a) const {
  if (p_ == 2) return a;
  FieldElement out = 0;
  for (std::uint32_t i = 0; i < e_; ++i) {
    out += ((p_ - a % p_) % p_) * digit_weight_[i];
    a /= p_;
  }
  return out;
}

FieldElement FiniteField::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement FiniteField::mul(FieldElement a, FieldElement b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

FieldElement FiniteField::inv(FieldElement a) const {
  if (a == 0) throw InvalidSpec("inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FieldElement FiniteField::pow(FieldElement a, std::uint64_t n) const {
  if (n == 0) return 1;
  if (a == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (n % (q_ - 1))) % (q_ - 1)];
}

bool FiniteField::is_square(FieldElement a) const {
  if (a == 0) return true;
  if (p_ == 2) return true;
  return log_[a] % 2 == 0;
}

FiniteField make_field(std::uint64_t q) {
  if (q < 2 || !prime_power(q)) throw NotPrimePower("field order " + std::to_string(q) + " is not a prime power");
  return FiniteField(static_cast<std::uint32_t>(q));
}

}  // namespace srcfg
