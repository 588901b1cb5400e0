#pragma once

#include "corner/rational.hpp"

#include <compare>
#include <vector>

namespace corner {

/// A linear subspace of Q^n held in reduced row-echelon form. RREF is
/// canonical, so equality of subspaces is equality of the stored entries.
class Subspace {
 public:
  static Subspace zero(int ambient_dim);
  static Subspace full(int ambient_dim);
  /// Canonicalizes an arbitrary spanning set (rows may be dependent or zero).
  static Subspace from_span(int ambient_dim, const RatMat& rows);

  int ambient_dim() const { return ambient_dim_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const RatMat& basis() const { return basis_; }
  bool is_zero() const { return basis_.empty(); }
  bool is_full() const { return dim() == ambient_dim_; }

  /// Membership test for a single vector, exact.
  bool contains_vector(const RatVec& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

  /// Canonical total order: ambient, then dimension, then lexicographic on
  /// basis entries. Used for deterministic member lists.
  std::strong_ordering order(const Subspace& other) const;

 private:
  Subspace(int ambient_dim, RatMat basis)
      : ambient_dim_(ambient_dim), basis_(std::move(basis)) {}

  int ambient_dim_ = 0;
  RatMat basis_;  // RREF rows, possibly empty for {0}
};

inline bool operator<(const Subspace& a, const Subspace& b) {
  return a.order(b) == std::strong_ordering::less;
}

/// In-place Gauss-Jordan to reduced row-echelon form; returns the rank.
int rref(RatMat& m);

/// Basis of the kernel {v : m v = 0}, canonicalized (RREF of the nullspace).
RatMat kernel_basis(const RatMat& m, int cols);

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

/// True iff b is contained in a.
bool contains(const Subspace& a, const Subspace& b);

/// The projection X -> X/Y realized on the orthogonal complement of Y: the
/// matrix rows are the RREF basis of Y-perp, so the kernel is exactly Y.
class QuotientMap {
 public:
  QuotientMap(int source_dim, Subspace kernel, RatMat matrix);

  int source_dim() const { return source_dim_; }
  int target_dim() const { return static_cast<int>(matrix_.size()); }
  const Subspace& kernel() const { return kernel_; }
  const RatMat& matrix() const { return matrix_; }
  const std::vector<std::vector<double>>& matrix_d() const { return matrix_d_; }

  RatVec apply(const RatVec& v) const { return rat_mat_apply(matrix_, v); }
  std::vector<double> apply(const std::vector<double>& v) const;

 private:
  int source_dim_;
  Subspace kernel_;
  RatMat matrix_;
  std::vector<std::vector<double>> matrix_d_;
};

/// Throws std::invalid_argument when y is the full ambient space.
QuotientMap quotient_map(int ambient_dim, const Subspace& y);

/// For y inside y_big, the unique R with quotient_map(y_big) = R * quotient_map(y).
RatMat induced_quotient(const QuotientMap& from_y, const QuotientMap& to_y_big);

/// Solves a X = b for X (a of full row rank stacked as rows acting from the
/// left: X satisfies X * a_rows = b_rows). Throws when inconsistent.
RatMat solve_right_factor(const RatMat& a, const RatMat& b);

}  // namespace corner
