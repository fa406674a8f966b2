#include "gderham/linalg.hpp"

#include "gderham/errors.hpp"

namespace gderham {

namespace {

// Subtracts factor * row r from row i, touching columns >= from only and
// skipping zero entries of the pivot row.
void eliminate_row(RatMat& m, Eigen::Index i, Eigen::Index r, const Rat& factor,
                   Eigen::Index from) {
  for (Eigen::Index j = from; j < m.cols(); ++j) {
    if (m(r, j) != 0) m(i, j) -= factor * m(r, j);
  }
}

}  // namespace

Rref rref(RatMat m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  std::vector<Eigen::Index> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index i = r; i < rows; ++i) {
      if (m(i, c) != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != r) m.row(p).swap(m.row(r));
    const Rat inv_pivot = Rat(1) / m(r, c);
    if (inv_pivot != 1) {
      for (Eigen::Index j = c; j < cols; ++j) {
        if (m(r, j) != 0) m(r, j) *= inv_pivot;
      }
    }
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rat factor = m(i, c);
      eliminate_row(m, i, r, factor, c);
    }
    pivots.push_back(c);
    ++r;
  }
  return Rref{std::move(m), std::move(pivots)};
}

Eigen::Index rank(const RatMat& m) {
  RatMat work = m;
  const Eigen::Index rows = work.rows();
  const Eigen::Index cols = work.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index i = r; i < rows; ++i) {
      if (work(i, c) != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != r) work.row(p).swap(work.row(r));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      if (work(i, c) == 0) continue;
      const Rat factor = work(i, c) / work(r, c);
      eliminate_row(work, i, r, factor, c);
    }
    ++r;
  }
  return r;
}

RatMat nullspace(const RatMat& m) {
  const Eigen::Index cols = m.cols();
  const Rref e = rref(m);
  std::vector<Eigen::Index> free_cols;
  {
    std::size_t next_pivot = 0;
    for (Eigen::Index c = 0; c < cols; ++c) {
      if (next_pivot < e.pivot_cols.size() && e.pivot_cols[next_pivot] == c) {
        ++next_pivot;
      } else {
        free_cols.push_back(c);
      }
    }
  }
  RatMat basis = RatMat::Zero(cols, static_cast<Eigen::Index>(free_cols.size()));
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    const Eigen::Index fc = free_cols[f];
    basis(fc, static_cast<Eigen::Index>(f)) = 1;
    for (std::size_t pr = 0; pr < e.pivot_cols.size(); ++pr) {
      basis(e.pivot_cols[pr], static_cast<Eigen::Index>(f)) =
          -e.mat(static_cast<Eigen::Index>(pr), fc);
    }
  }
  return basis;
}

std::optional<RatVec> solve(const RatMat& a, const RatVec& b) {
  if (a.rows() != b.size()) throw DimensionError("solve: shape mismatch");
  auto x = solve_columns(a, b);
  if (!x) return std::nullopt;
  return RatVec(x->col(0));
}

std::optional<RatMat> solve_columns(const RatMat& a, const RatMat& b) {
  if (a.rows() != b.rows()) throw DimensionError("solve_columns: shape mismatch");
  const Rref e = rref(hstack(a, b));
  // Inconsistent iff some pivot lands in the augmented block.
  for (const Eigen::Index p : e.pivot_cols) {
    if (p >= a.cols()) return std::nullopt;
  }
  RatMat x = RatMat::Zero(a.cols(), b.cols());
  for (std::size_t pr = 0; pr < e.pivot_cols.size(); ++pr) {
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      x(e.pivot_cols[pr], j) = e.mat(static_cast<Eigen::Index>(pr), a.cols() + j);
    }
  }
  return x;
}

std::optional<RatMat> inverse(const RatMat& a) {
  if (a.rows() != a.cols()) throw DimensionError("inverse: matrix not square");
  RatMat id = RatMat::Identity(a.rows(), a.cols());
  auto x = solve_columns(a, id);
  if (!x || rank(a) != a.rows()) return std::nullopt;
  return x;
}

RatMat kron(const RatMat& a, const RatMat& b) {
  RatMat out = RatMat::Zero(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (Eigen::Index k = 0; k < b.rows(); ++k) {
        for (Eigen::Index l = 0; l < b.cols(); ++l) {
          if (b(k, l) == 0) continue;
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
      }
    }
  }
  return out;
}

RatMat hstack(const RatMat& a, const RatMat& b) {
  if (a.rows() != b.rows()) throw DimensionError("hstack: row mismatch");
  RatMat out(a.rows(), a.cols() + b.cols());
  out.leftCols(a.cols()) = a;
  out.rightCols(b.cols()) = b;
  return out;
}

RatMat vstack(const RatMat& a, const RatMat& b) {
  if (a.cols() != b.cols()) throw DimensionError("vstack: column mismatch");
  RatMat out(a.rows() + b.rows(), a.cols());
  out.topRows(a.rows()) = a;
  out.bottomRows(b.rows()) = b;
  return out;
}

bool product_is_zero(const RatMat& a, const RatMat& b) {
  if (a.cols() != b.rows()) throw DimensionError("product_is_zero: shape mismatch");
  RatVec acc(a.rows());
  for (Eigen::Index j = 0; j < b.cols(); ++j) {
    acc.setZero();
    bool touched = false;
    for (Eigen::Index k = 0; k < b.rows(); ++k) {
      if (b(k, j) == 0) continue;
      touched = true;
      for (Eigen::Index i = 0; i < a.rows(); ++i) {
        if (a(i, k) != 0) acc(i) += a(i, k) * b(k, j);
      }
    }
    if (!touched) continue;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (acc(i) != 0) return false;
    }
  }
  return true;
}

bool is_zero(const RatMat& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

Signature signature(RatMat m) {
  if (m.rows() != m.cols()) throw DimensionError("signature: matrix not square");
  const Eigen::Index n = m.rows();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      if (m(i, j) != m(j, i)) throw DimensionError("signature: matrix not symmetric");

  Signature sig;
  Eigen::Index i = 0;
  while (i < n) {
    Eigen::Index p = -1;
    for (Eigen::Index j = i; j < n; ++j) {
      if (m(j, j) != 0) {
        p = j;
        break;
      }
    }
    if (p < 0) {
      // All remaining diagonal entries vanish; borrow an off-diagonal one
      // (congruence by adding row+column keeps the signature).
      Eigen::Index r = -1, s = -1;
      for (Eigen::Index a = i; a < n && r < 0; ++a)
        for (Eigen::Index b = a + 1; b < n; ++b)
          if (m(a, b) != 0) {
            r = a;
            s = b;
            break;
          }
      if (r < 0) {
        sig.zero += static_cast<int>(n - i);
        return sig;
      }
      m.row(r) += m.row(s);
      m.col(r) += m.col(s);
      continue;  // diagonal entry at r is now 2*m(r,s) != 0
    }
    if (p != i) {
      m.row(p).swap(m.row(i));
      m.col(p).swap(m.col(i));
    }
    const Rat d = m(i, i);
    for (Eigen::Index r2 = i + 1; r2 < n; ++r2) {
      if (m(r2, i) == 0) continue;
      const Rat f = m(r2, i) / d;
      m.row(r2) -= f * m.row(i);
      m.col(r2) -= f * m.col(i);
    }
    if (d > 0)
      ++sig.positive;
    else
      ++sig.negative;
    ++i;
  }
  return sig;
}

bool RankTracker::add(RatVec v) {
  if (v.size() != ambient_) throw DimensionError("RankTracker: ambient dim mismatch");
  for (const auto& [p, row] : rows_) {
    if (v(p) != 0) v -= v(p) * row;
  }
  Eigen::Index pivot = -1;
  for (Eigen::Index j = 0; j < v.size(); ++j) {
    if (v(j) != 0) {
      pivot = j;
      break;
    }
  }
  if (pivot < 0) return false;
  v /= v(pivot);
  rows_.emplace(pivot, std::move(v));
  return true;
}

bool RankTracker::contains(RatVec v) const {
  if (v.size() != ambient_) throw DimensionError("RankTracker: ambient dim mismatch");
  for (const auto& [p, row] : rows_) {
    if (v(p) != 0) v -= v(p) * row;
  }
  for (Eigen::Index j = 0; j < v.size(); ++j) {
    if (v(j) != 0) return false;
  }
  return true;
}

}  // namespace gderham
