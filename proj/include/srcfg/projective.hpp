#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "srcfg/field.hpp"

namespace srcfg {

/// A projective subspace of PG(n,q), held as its reduced row echelon basis
/// (dim+1 rows, n+1 columns, row-major). The echelon matrix is the canonical
/// representative, so equality is structural.
struct Subspace {
  std::uint32_t n = 0;
  std::uint32_t q = 0;
  std::uint32_t dim = 0;
  std::vector<FieldElement> basis;

  std::uint32_t rows() const { return dim + 1; }
  std::uint32_t cols() const { return n + 1; }
  FieldElement at(std::uint32_t r, std::uint32_t c) const { return basis[r * cols() + c]; }

  friend bool operator==(const Subspace&, const Subspace&) = default;
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
    if (auto c = a.n <=> b.n; c != 0) return c;
    if (auto c = a.q <=> b.q; c != 0) return c;
    if (auto c = a.dim <=> b.dim; c != 0) return c;
    return a.basis <=> b.basis;
  }
};

/// Gaussian binomial [n choose k]_q.
std::uint64_t gaussian_binomial(std::uint32_t n, std::uint32_t k, std::uint32_t q);

/// Reduces a row-major matrix over the field to reduced row echelon form in
/// place and returns its rank. Zero rows end up at the bottom.
std::uint32_t row_reduce(const FiniteField& f, std::vector<FieldElement>& m, std::uint32_t rows,
                         std::uint32_t cols);

/// Span of the given vectors (rows of length n+1); throws DimensionOutOfRange if
/// the vectors are dependent or empty.
Subspace span(const FiniteField& f, std::uint32_t n, std::vector<FieldElement> rows);

/// All dim-dimensional subspaces of PG(n,q), sorted by their echelon matrices.
std::vector<Subspace> pg_subspaces(const FiniteField& f, std::uint32_t n, std::uint32_t dim);
std::vector<Subspace> pg_subspaces(std::uint32_t n, std::uint32_t q, std::uint32_t dim);

/// True iff b is contained in a (row space inclusion).
bool subspace_contains(const FiniteField& f, const Subspace& a, const Subspace& b);
bool subspace_contains(const Subspace& a, const Subspace& b);

/// Projective dimension of a ∩ b (-1 when they meet trivially).
int intersection_dim(const FiniteField& f, const Subspace& a, const Subspace& b);

/// Orthogonal complement of s with respect to a nondegenerate bilinear form
/// on the ambient space, given by its Gram matrix (row-major, (n+1)^2).
Subspace perp(const FiniteField& f, const Subspace& s, const std::vector<FieldElement>& gram);

/// Gram matrix of the standard symplectic form x1y2 - x2y1 + x3y4 - x4y3 + ...
/// on a space of even dimension.
std::vector<FieldElement> symplectic_gram(const FiniteField& f, std::uint32_t dimension);

}  // namespace srcfg
