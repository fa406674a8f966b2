#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gderham/subspace.hpp"

namespace gderham {

/// A finite-dimensional real Lie algebra given by exact rational structure
/// constants: [e_i, e_j] = sum_k c(i,j,k) e_k. Construction checks tensor
/// shape only; validate() decides antisymmetry and the Jacobi identity.
class LieAlgebra {
 public:
  LieAlgebra(int dim, std::vector<std::string> basis_labels, std::vector<Rat> structure_constants);

  int dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Rat& c(int i, int j, int k) const { return c_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k]; }

  /// [x, y] for coordinate vectors of length dim.
  RatVec bracket(const RatVec& x, const RatVec& y) const;

  /// ad(e_i) with entries ad(e_i)(k, j) = c(i, j, k).
  RatMat ad(int i) const;
  std::vector<RatMat> adjoint_rep() const;

  bool is_abelian() const;

 private:
  int dim_;
  std::vector<std::string> labels_;
  std::vector<Rat> c_;  // flattened dim^3 tensor
};

struct ValidationReport {
  bool ok = true;
  std::string message;         // empty iff ok
  std::vector<int> indices;    // first failing index tuple, empty iff ok
};

/// Checks antisymmetry and the Jacobi identity exactly; the report cites the
/// first failing index tuple.
ValidationReport validate(const LieAlgebra& L);

/// Center c(g) = {x : [x, e_i] = 0 for all i}, the kernel of the stacked
/// adjoint matrices.
Subspace center(const LieAlgebra& L);

/// Commutator ideal [g, g], the span of all basis brackets.
Subspace derived_subalgebra(const LieAlgebra& L);

/// Centralizer of [g, g]; always contains the center.
Subspace commutator_centralizer(const LieAlgebra& L);

/// Killing form B(i, j) = trace(ad e_i ∘ ad e_j).
RatMat killing_form(const LieAlgebra& L);

/// Cartan's criterion: Killing form nondegenerate.
bool is_semisimple(const LieAlgebra& L);

/// Killing form negative definite — the algebra-level stand-in for
/// compactness of the group.
bool is_compact_type(const LieAlgebra& L);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// Built-in algebras: "abelian:n", "heisenberg3", "sl2", "so3",
/// "upper_triangular:n", and '+'-joined direct sums of these.
LieAlgebra catalog(const std::string& name);
std::vector<std::string> catalog_names();

bool is_ideal(const LieAlgebra& L, const Subspace& a);

/// phi (rows = target coords) preserves brackets on all basis pairs.
bool is_homomorphism(const LieAlgebra& source, const LieAlgebra& target, const RatMat& phi);

/// Quotient algebra L / a for an ideal a, in the coordinates of the
/// non-pivot standard basis vectors.
LieAlgebra quotient_algebra(const LieAlgebra& L, const Subspace& a);

// --- g-modules ------------------------------------------------------------
//
// A finite-dimensional representation given by action matrices rho(e_i).
// These feed the Chevalley-Eilenberg builder and the Bockstein sequences.

struct LieModule {
  int dim = 0;
  std::vector<RatMat> action;  // one dim x dim matrix per basis element of L
};

/// Checks rho([e_i,e_j]) = [rho(e_i), rho(e_j)] exactly on all basis pairs.
bool is_module(const LieAlgebra& L, const LieModule& M);

LieModule adjoint_module(const LieAlgebra& L);

/// The ideal a as a submodule of the adjoint module; throws NotAnIdeal.
LieModule submodule(const LieAlgebra& L, const Subspace& a);

/// The quotient module g/a of the adjoint module; throws NotAnIdeal.
LieModule quotient_module(const LieAlgebra& L, const Subspace& a);

/// Inclusion a -> g as a dim x dim(a) matrix (columns = basis of a).
RatMat ideal_inclusion_matrix(const LieAlgebra& L, const Subspace& a);

/// Projection g -> g/a as a (dim - dim(a)) x dim matrix; kernel is a.
RatMat quotient_projection_matrix(const LieAlgebra& L, const Subspace& a);

/// Section g/a -> g with quotient_projection * section = identity.
RatMat quotient_section_matrix(const LieAlgebra& L, const Subspace& a);

}  // namespace gderham
