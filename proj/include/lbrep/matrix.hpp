#pragma once

/**
 * Dense matrices over a group ring, plus the exact linear algebra the rest of
 * the library leans on: fraction-free (Bareiss) determinants and adjugates,
 * ranks over fields and Smith normal form over the integers.
 */

#include "lbrep/ring.hpp"

#include <optional>
#include <vector>

namespace lbrep {

class RingMatrix {
 public:
  RingMatrix(Context context, std::size_t rows, std::size_t cols);

  static RingMatrix identity(Context context, std::size_t n);
  /// Diagonal matrix from its entries (all in one context).
  static RingMatrix diagonal(const std::vector<GroupRingElement>& entries);

  const Context& context() const { return context_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const GroupRingElement& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  GroupRingElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  RingMatrix operator*(const RingMatrix& other) const;
  RingMatrix operator+(const RingMatrix& other) const;
  RingMatrix operator-(const RingMatrix& other) const;
  std::vector<GroupRingElement> apply(const std::vector<GroupRingElement>& v) const;

  RingMatrix transpose() const;
  /// Entrywise involution.
  RingMatrix involution() const;
  RingMatrix scaled(const GroupRingElement& r) const;

  bool is_identity() const;
  bool is_zero() const;
  /// True when every off-diagonal entry is zero.
  bool is_diagonal() const;
  bool operator==(const RingMatrix& other) const;

  /// Fraction-free determinant (exact coefficient rings).
  GroupRingElement determinant() const;
  /// Adjugate: adj(M)·M = M·adj(M) = det(M)·I. Computed by fraction-free
  /// Gauss-Jordan elimination whose divisions are exact in R.
  RingMatrix adjugate() const;
  /// Inverse over R; nullopt when the determinant is not a unit.
  std::optional<RingMatrix> inverse() const;

 private:
  Context context_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<GroupRingElement> data_;
};

/// Ring homomorphism applied entrywise (see specialize()).
RingMatrix specialize(const RingMatrix& m, const std::map<std::string, Scalar>& values, const Context& target);

/// A matrix of plain coefficients (rank-0 ring elements, or raw scalars).
using ScalarMatrix = std::vector<std::vector<Scalar>>;

/// Rank over a field (rationals or mod p) by exact elimination.
std::size_t field_rank(const ScalarMatrix& m, const CoefficientRing& field);
/// Numerical rank: singular values above tolerance * (largest singular value).
std::size_t numerical_rank(const ScalarMatrix& m, double tolerance);

/// Smith normal form diagonal of an integer matrix: the non-zero invariant
/// factors d_1 | d_2 | ... (positive).
std::vector<Integer> smith_invariant_factors(const std::vector<std::vector<Integer>>& m);

/// Rank-0 evaluation of a matrix: every entry evaluated at the given values.
ScalarMatrix evaluate(const RingMatrix& m, const std::map<std::string, Scalar>& values,
                      const CoefficientRing& target);

}  // namespace lbrep
