#pragma once

// The generator matrices L^± of U_q(gl_n) represented on aux ⊗ (C^n)^{⊗N}.
//
// Single module site: L^+ -> R_{01}, L^- -> R_{10}^{-1} (site 0 is aux).
// N module sites: L^±_{0,(1..N)} = L^±_{01} L^±_{02} ··· L^±_{0N}, which is
// the coproduct Δ(l_ij) = Σ_k l_ik ⊗ l_kj with the first tensor factor on
// module site 1.

#include <string>
#include <vector>

#include "qimm/combinatorics.hpp"
#include "qimm/linalg.hpp"
#include "qimm/tensor.hpp"
#include "qimm/verdict.hpp"

namespace qimm {

struct EvaluatedRep {
  int n = 2;
  int N = 0;
  QConfig cfg;
  TensorOp Lplus;
  TensorOp Lminus;
  TensorOp Lminus_inv;
  TensorOp L;  // L^+ (L^-)^{-1}

  /// [aux, module × N]
  Layout layout() const { return make_layout(1, N); }
  Layout module_layout() const { return make_layout(0, N); }

  /// π(l^±_{ij}) as an operator on the module sites; 1-based i, j.
  TensorOp lplus(int i, int j) const { return site_block(Lplus, 1, i, j); }
  TensorOp lminus(int i, int j) const { return site_block(Lminus, 1, i, j); }
  TensorOp lentry(int i, int j) const { return site_block(L, 1, i, j); }
};

EvaluatedRep build_rep(int n, int N, const QConfig& cfg);

/// R^{-1}, which is R with q replaced by q^{-1}.
TensorOp build_R_inverse(int n, const QConfig& cfg);

/// Checks the RLL relations, triangularity, l^+_ii l^-_ii = 1, the relation
/// L^-_1 L_2 = L_{ō2} L^-_1 and the reflection equation, all exactly.
Verdict verify_rtt(const EvaluatedRep& rep);

/// Projector onto an irreducible submodule of highest weight shape(T),
/// commuting with the representation. Zero when shape(T) has > n rows.
TensorOp module_projector(const EvaluatedRep& rep, const StandardTableau& t);

/// A highest-weight vector of weight λ inside the image of
/// module_projector(rep, first standard λ-tableau); first nonzero entry 1.
/// Throws std::runtime_error if the solution space is not one-dimensional.
Vector highest_weight_vector(const EvaluatedRep& rep, const YoungDiagram& lambda);

/// χ with op·proj = χ·proj. Throws std::runtime_error if op is not scalar on
/// the image of proj or proj is zero.
Scalar central_eigenvalue(const TensorOp& op, const TensorOp& proj);

/// χ with op v = χ v. Throws std::runtime_error otherwise.
Scalar eigenvalue_on_vector(const TensorOp& op, const Vector& v);

/// ℓ_i = λ_i - i + 1 for i = 1..n.
std::vector<int> shifted_weight(const YoungDiagram& lambda, int n);

}  // namespace qimm
