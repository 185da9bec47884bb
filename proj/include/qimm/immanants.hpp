#pragma once

// q-immanant polynomials S_U(z), quantum Gelfand invariants tr_q L^m, the
// generating function E(u), and the checks built on them.

#include <string>
#include <vector>

#include "qimm/combinatorics.hpp"
#include "qimm/exact.hpp"
#include "qimm/hecke.hpp"
#include "qimm/tensor.hpp"
#include "qimm/uqgln_rep.hpp"

namespace qimm {

using OpPoly = Poly<TensorOp>;

struct ImmanantPoly {
  YoungDiagram shape;
  StandardTableau tableau;
  int n = 2;
  int N = 0;
  /// Polynomial in z whose coefficients act on the module sites.
  OpPoly coefficients{Variable::z};

  TensorOp coefficient(int k) const;
  TensorOp at(const Scalar& z) const;
};

struct ImmanantOptions {
  /// Also build S_U(z) from L^± and D, and require an identical result.
  bool cross_check_routes = true;
};

/// S_U(z) = tr_q(1..m) (L_{ō1} + z q^{-2c_1}) ··· (L_{ōm} + z q^{-2c_m}) E_U.
/// Throws std::logic_error if the two construction routes disagree.
ImmanantPoly build_immanant_poly(const EvaluatedRep& rep, const StandardTableau& u, ImmanantOptions opts = {});

/// The second route: tr(1..m) ∏(L^+_k + z q^{-2c_k} L^-_k) (L^-_m)^{-1}···(L^-_1)^{-1} D_1···D_m E_U.
OpPoly build_immanant_poly_via_lpm(const EvaluatedRep& rep, const StandardTableau& u);

/// S_μ = S_U(0) without carrying z.
TensorOp qimmanant(const EvaluatedRep& rep, const StandardTableau& u);

/// χ_λ(S_U(z)) computed by applying the defining product to a highest-weight
/// vector of weight λ, without assembling S_U(z) as an operator.
Scalar immanant_eigenvalue(const EvaluatedRep& rep, const StandardTableau& u, const Scalar& z,
                           const YoungDiagram& lambda);

/// Exponent offset of the sequence a_k = z q^{offset - 2k}. The stated
/// eigenvalue formula uses offset 1; expanding the definition with
/// D = diag(1, q^{-2}, ...) gives offset 2 (see README).
inline constexpr int kStatedOffset = 1;
inline constexpr int kDerivedOffset = 2;

/// s_μ(q^{2ℓ_1}, ..., q^{2ℓ_n} | a) with a_k = z q^{offset-2k}, ℓ_i = λ_i - i + 1.
Scalar immanant_eigenvalue_oracle(const YoungDiagram& mu, const YoungDiagram& lambda, int n, const Scalar& z,
                                  const QConfig& cfg, int offset = kStatedOffset);

Verdict verify_centrality(const ImmanantPoly& poly, const EvaluatedRep& rep);

Verdict verify_tableau_independence(const YoungDiagram& shape, const EvaluatedRep& rep);

struct EigenvalueRow {
  YoungDiagram mu;
  YoungDiagram lambda;
  Scalar z;
  Scalar from_operator;
  Scalar from_oracle;
};

struct EigenvalueReport {
  Verdict verdict;
  std::vector<EigenvalueRow> rows;
};

/// Compares χ_λ(S_U(z)) with the factorial Schur oracle for every λ and z.
/// Requires at least m+1 distinct z samples.
EigenvalueReport verify_eigenvalues(const YoungDiagram& shape, const EvaluatedRep& rep,
                                    const std::vector<Scalar>& z_samples, const std::vector<YoungDiagram>& lambdas,
                                    int offset = kStatedOffset);

/// tr_q L^m for m = 1..M, as module operators (index m-1).
std::vector<TensorOp> gelfand_invariants(const EvaluatedRep& rep, int max_power);

/// E(u) = Σ_{m=0}^{n} S_{(1^m)} (-u)^{-m}, a polynomial in u^{-1}.
OpPoly build_E_poly(const EvaluatedRep& rep);

/// E(u) (1 + (1-q^{-2}) Σ_{m≤M} tr_q L^m u^{-m}) = E(u q^2) modulo u^{-(M+1)},
/// in both multiplication orders.
Verdict verify_newton(const EvaluatedRep& rep, int order);

/// The eigenvalue form on L_q(λ): 1 + (1-q^{-2}) Σ χ(tr_q L^m) u^{-m} against
/// ∏ (1 - q^{2ℓ_i-2} u^{-1}) / (1 - q^{2ℓ_i} u^{-1}) to order M.
Verdict verify_eigenvalue_genfn(const YoungDiagram& lambda, int n, int order, const QConfig& cfg);

/// Rows: shapes μ (|μ| ≤ max_m, ≤ n rows, including the empty diagram);
/// columns: weights λ (|λ| ≤ max_N, ≤ n rows); entries χ_λ(S_μ).
struct EigenvalueMatrix {
  std::vector<YoungDiagram> shapes;
  std::vector<YoungDiagram> weights;
  std::vector<std::vector<Scalar>> values;
};

EigenvalueMatrix eigenvalue_matrix(int n, int max_m, int max_N, const QConfig& cfg);

}  // namespace qimm
