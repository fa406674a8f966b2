#include "gderham/subspace.hpp"

#include "gderham/errors.hpp"

namespace gderham {

Subspace::Subspace(Eigen::Index ambient_dim)
    : ambient_(ambient_dim), basis_(RatMat::Zero(0, ambient_dim)) {}

Subspace Subspace::span_of_rows(Eigen::Index ambient_dim, const RatMat& spanning) {
  if (spanning.cols() != ambient_dim) {
    throw DimensionError("Subspace: spanning vectors have wrong length");
  }
  const Rref e = rref(spanning);
  Subspace s(ambient_dim);
  s.basis_ = e.mat.topRows(e.rank());
  return s;
}

Subspace Subspace::span_of_columns(Eigen::Index ambient_dim, const RatMat& spanning) {
  return span_of_rows(ambient_dim, spanning.transpose());
}

Subspace Subspace::kernel(const RatMat& m) {
  return span_of_columns(m.cols(), nullspace(m));
}

Subspace Subspace::full(Eigen::Index ambient_dim) {
  Subspace s(ambient_dim);
  s.basis_ = RatMat::Identity(ambient_dim, ambient_dim);
  return s;
}

bool Subspace::contains(const RatVec& v) const {
  if (v.size() != ambient_) throw DimensionError("Subspace: vector has wrong length");
  RatVec w = v;
  for (Eigen::Index r = 0; r < basis_.rows(); ++r) {
    // Pivot of row r is its first nonzero entry and equals 1.
    Eigen::Index p = 0;
    while (p < ambient_ && basis_(r, p) == 0) ++p;
    if (p == ambient_) continue;
    if (w(p) != 0) w -= w(p) * basis_.row(r).transpose();
  }
  for (Eigen::Index j = 0; j < ambient_; ++j) {
    if (w(j) != 0) return false;
  }
  return true;
}

bool Subspace::includes(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("Subspace: ambient mismatch");
  for (Eigen::Index r = 0; r < other.basis_.rows(); ++r) {
    if (!contains(other.basis_vector(r))) return false;
  }
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("Subspace: ambient mismatch");
  return span_of_rows(ambient_, vstack(basis_, other.basis_));
}

bool Subspace::operator==(const Subspace& other) const {
  return ambient_ == other.ambient_ && basis_.rows() == other.basis_.rows() &&
         basis_ == other.basis_;
}

}  // namespace gderham
