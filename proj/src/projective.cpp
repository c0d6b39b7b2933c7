#include "srcfg/projective.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "srcfg/errors.hpp"

namespace srcfg {

namespace {

const FiniteField& cached_field(std::uint32_t q) {
  static std::mutex mutex;
  static std::map<std::uint32_t, std::unique_ptr<FiniteField>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[q];
  if (!slot) slot = std::make_unique<FiniteField>(make_field(q));
  return *slot;
}

}  // namespace

std::uint64_t gaussian_binomial(std::uint32_t n, std::uint32_t k, std::uint32_t q) {
  if (k > n) return 0;
  // Product formula; exact because each partial quotient is itself a Gaussian binomial.
  std::uint64_t result = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    std::uint64_t num = 1, den = 1;
    for (std::uint32_t j = 0; j < n - i; ++j) num *= q;
    for (std::uint32_t j = 0; j < i + 1; ++j) den *= q;
    result = result * (num - 1) / (den - 1);
  }
  return result;
}

std::uint32_t row_reduce(const FiniteField& f, std::vector<FieldElement>& m, std::uint32_t rows,
                         std::uint32_t cols) {
  std::uint32_t rank = 0;
  for (std::uint32_t c = 0; c < cols && rank < rows; ++c) {
    std::uint32_t pivot = rank;
    while (pivot < rows && m[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::uint32_t j = 0; j < cols; ++j) std::swap(m[pivot * cols + j], m[rank * cols + j]);
    const FieldElement scale = f.inv(m[rank * cols + c]);
    for (std::uint32_t j = 0; j < cols; ++j) m[rank * cols + j] = f.mul(m[rank * cols + j], scale);
    for (std::uint32_t r = 0; r < rows; ++r) {
      if (r == rank || m[r * cols + c] == 0) continue;
      const FieldElement factor = m[r * cols + c];
      for (std::uint32_t j = 0; j < cols; ++j)
        m[r * cols + j] = f.sub(m[r * cols + j], f.mul(factor, m[rank * cols + j]));
    }
    ++rank;
  }
  return rank;
}

Subspace span(const FiniteField& f, std::uint32_t n, std::vector<FieldElement> rows) {
  const std::uint32_t cols = n + 1;
  if (rows.empty() || rows.size() % cols != 0) throw DimensionOutOfRange("span needs at least one vector of length n+1");
  const auto count = static_cast<std::uint32_t>(rows.size() / cols);
  const std::uint32_t rank = row_reduce(f, rows, count, cols);
  if (rank != count) throw DimensionOutOfRange("spanning vectors are linearly dependent");
  return Subspace{n, f.order(), rank - 1, std::move(rows)};
}

std::vector<Subspace> pg_subspaces(const FiniteField& f, std::uint32_t n, std::uint32_t dim) {
  if (dim > n) throw DimensionOutOfRange("subspace dimension " + std::to_string(dim) + " exceeds ambient " + std::to_string(n));
  const std::uint32_t cols = n + 1, rows = dim + 1, q = f.order();
  std::vector<Subspace> out;

  std::vector<std::uint32_t> pivots(rows);
  for (std::uint32_t i = 0; i < rows; ++i) pivots[i] = i;
  for (;;) {
    std::vector<std::uint32_t> free_slots;  // flat positions of unconstrained entries
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::uint32_t r = 0; r < rows; ++r)
      for (std::uint32_t c = pivots[r] + 1; c < cols; ++c)
        if (!is_pivot[c]) free_slots.push_back(r * cols + c);

    std::vector<FieldElement> m(rows * cols, 0);
    for (std::uint32_t r = 0; r < rows; ++r) m[r * cols + pivots[r]] = 1;
    std::vector<FieldElement> digits(free_slots.size(), 0);
    for (;;) {
      for (std::size_t i = 0; i < free_slots.size(); ++i) m[free_slots[i]] = digits[i];
      out.push_back(Subspace{n, q, dim, m});
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == q) digits[i++] = 0;
      if (i == digits.size()) break;
    }

    // next combination of pivot columns
    int i = static_cast<int>(rows) - 1;
    while (i >= 0 && pivots[i] == cols - rows + static_cast<std::uint32_t>(i)) --i;
    if (i < 0) break;
    ++pivots[i];
    for (std::uint32_t j = i + 1; j < rows; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subspace> pg_subspaces(std::uint32_t n, std::uint32_t q, std::uint32_t dim) {
  return pg_subspaces(cached_field(q), n, dim);
}

namespace {

std::uint32_t stacked_rank(const FiniteField& f, const Subspace& a, const Subspace& b) {
  std::vector<FieldElement> m = a.basis;
  m.insert(m.end(), b.basis.begin(), b.basis.end());
  return row_reduce(f, m, a.rows() + b.rows(), a.cols());
}

void check_ambient(const Subspace& a, const Subspace& b) {
  if (a.n != b.n || a.q != b.q) throw AmbientMismatch("subspaces live in different projective spaces");
}

}  // namespace

bool subspace_contains(const FiniteField& f, const Subspace& a, const Subspace& b) {
  check_ambient(a, b);
  if (b.dim > a.dim) return false;
  return stacked_rank(f, a, b) == a.rows();
}

bool subspace_contains(const Subspace& a, const Subspace& b) {
  check_ambient(a, b);
  return subspace_contains(cached_field(a.q), a, b);
}

int intersection_dim(const FiniteField& f, const Subspace& a, const Subspace& b) {
  check_ambient(a, b);
  const auto joined = stacked_rank(f, a, b);
  return static_cast<int>(a.rows() + b.rows()) - static_cast<int>(joined) - 1;
}

Subspace perp(const FiniteField& f, const Subspace& s, const std::vector<FieldElement>& gram) {
  const std::uint32_t cols = s.cols();
  // Rows of s times the Gram matrix; the complement is their null space.
  std::vector<FieldElement> m(s.rows() * cols, 0);
  for (std::uint32_t r = 0; r < s.rows(); ++r)
    for (std::uint32_t j = 0; j < cols; ++j) {
      FieldElement acc = 0;
      for (std::uint32_t i = 0; i < cols; ++i) acc = f.add(acc, f.mul(s.at(r, i), gram[i * cols + j]));
      m[r * cols + j] = acc;
    }
  const std::uint32_t rank = row_reduce(f, m, s.rows(), cols);
  std::vector<std::uint32_t> pivot_of_row;
  std::vector<bool> is_pivot(cols, false);
  for (std::uint32_t r = 0; r < rank; ++r) {
    std::uint32_t c = 0;
    while (m[r * cols + c] == 0) ++c;
    pivot_of_row.push_back(c);
    is_pivot[c] = true;
  }
  std::vector<FieldElement> basis;
  for (std::uint32_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldElement> v(cols, 0);
    v[free] = 1;
    for (std::uint32_t r = 0; r < rank; ++r) v[pivot_of_row[r]] = f.neg(m[r * cols + free]);
    basis.insert(basis.end(), v.begin(), v.end());
  }
  return span(f, s.n, std::move(basis));
}

std::vector<FieldElement> symplectic_gram(const FiniteField& f, std::uint32_t dimension) {
  std::vector<FieldElement> g(dimension * dimension, 0);
  for (std::uint32_t i = 0; i + 1 < dimension; i += 2) {
    g[i * dimension + i + 1] = 1;
    g[(i + 1) * dimension + i] = f.neg(1);
  }
  return g;
}

}  // namespace srcfg
