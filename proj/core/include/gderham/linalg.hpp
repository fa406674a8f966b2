#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gderham/rational.hpp"

namespace gderham {

// Exact linear algebra over the rationals. Pivoting is by fixed column
// order (first nonzero row below the current one), so every result here is
// deterministic across runs and platforms.

struct Rref {
  RatMat mat;
  std::vector<Eigen::Index> pivot_cols;
  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivot_cols.size()); }
};

/// Reduced row echelon form with unit pivots.
Rref rref(RatMat m);

Eigen::Index rank(const RatMat& m);

/// Basis of ker(m) as columns, from the RREF free columns in ascending order.
RatMat nullspace(const RatMat& m);

/// One solution of A x = b (free variables set to zero), or nullopt when the
/// system is inconsistent.
std::optional<RatVec> solve(const RatMat& a, const RatVec& b);

/// Columnwise solve of A X = B; nullopt if any column is inconsistent.
std::optional<RatMat> solve_columns(const RatMat& a, const RatMat& b);

/// Inverse of a square nonsingular matrix; nullopt when singular.
std::optional<RatMat> inverse(const RatMat& a);

RatMat kron(const RatMat& a, const RatMat& b);

RatMat hstack(const RatMat& a, const RatMat& b);
RatMat vstack(const RatMat& a, const RatMat& b);

/// True iff a*b is the zero matrix; never materializes the dense product.
bool product_is_zero(const RatMat& a, const RatMat& b);

bool is_zero(const RatMat& m);

/// Inertia of a symmetric rational matrix, computed exactly by congruence
/// diagonalization.
struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};
Signature signature(RatMat symmetric);

/// Incremental row-echelon rank tracker; add() returns true when the vector
/// enlarged the span. Used for representative selection and span iteration.
class RankTracker {
 public:
  explicit RankTracker(Eigen::Index ambient_dim) : ambient_(ambient_dim) {}

  bool add(RatVec v);
  bool contains(RatVec v) const;
  Eigen::Index rank() const { return static_cast<Eigen::Index>(rows_.size()); }
  Eigen::Index ambient_dim() const { return ambient_; }

 private:
  Eigen::Index ambient_;
  std::map<Eigen::Index, RatVec> rows_;  // pivot column -> row, unit pivot
};

}  // namespace gderham
