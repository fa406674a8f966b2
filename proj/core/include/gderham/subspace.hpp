#pragma once

#include "gderham/linalg.hpp"

namespace gderham {

/// A linear subspace of Q^n held in reduced row-echelon basis form, so two
/// subspaces are equal iff their stored bases are identical.
class Subspace {
 public:
  /// The zero subspace of the given ambient dimension.
  explicit Subspace(Eigen::Index ambient_dim);

  /// Span of the rows of `spanning` (need not be independent).
  static Subspace span_of_rows(Eigen::Index ambient_dim, const RatMat& spanning);

  /// Span of the columns of `spanning`.
  static Subspace span_of_columns(Eigen::Index ambient_dim, const RatMat& spanning);

  /// Kernel of a matrix acting on Q^cols.
  static Subspace kernel(const RatMat& m);

  static Subspace full(Eigen::Index ambient_dim);

  Eigen::Index ambient_dim() const { return ambient_; }
  Eigen::Index dim() const { return basis_.rows(); }

  /// Canonical basis, one vector per row.
  const RatMat& basis() const { return basis_; }
  RatVec basis_vector(Eigen::Index i) const { return basis_.row(i).transpose(); }

  bool contains(const RatVec& v) const;
  bool includes(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;

  bool operator==(const Subspace& other) const;

 private:
  Eigen::Index ambient_;
  RatMat basis_;  // dim x ambient, RREF with unit pivots
};

}  // namespace gderham
