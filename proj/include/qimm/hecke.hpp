#pragma once

// Hecke algebra H_m acting on (C^n)^{⊗m} through T_k -> Ř_k.

#include <map>
#include <utility>
#include <vector>

#include "qimm/combinatorics.hpp"
#include "qimm/tensor.hpp"
#include "qimm/verdict.hpp"

namespace qimm {

class HeckeAction {
 public:
  /// Acts on the first m sites of `layout` (m <= layout.size()); the
  /// remaining sites are spectators. The default layout is m aux sites.
  HeckeAction(int n, int m, QConfig cfg);
  HeckeAction(int n, int m, QConfig cfg, Layout layout);

  int n() const { return n_; }
  int m() const { return m_; }
  const QConfig& config() const { return cfg_; }
  const Layout& layout() const { return layout_; }

  /// Image of T_k, k = 1..m-1.
  const TensorOp& generator(int k) const;
  const TensorOp& generator_inverse(int k) const;

  /// Image of the Jucys–Murphy element y_k (y_1 = 1, y_{k+1} = T_k y_k T_k).
  const TensorOp& jm_operator(int k) const;

  /// Image E_U of the primitive idempotent e_U, with U standard on m boxes.
  /// E_U = E_V ∏_{c} (y_m - q^{2c}) / (q^{2c_m(U)} - q^{2c}), c over the
  /// addable contents of shape(V) other than c_m(U), V = U minus box m.
  /// Throws std::domain_error if an interpolation denominator vanishes.
  TensorOp primitive_idempotent(const StandardTableau& u) const;

  TensorOp identity() const { return TensorOp::identity(n_, layout_); }

 private:
  int n_;
  int m_;
  QConfig cfg_;
  Layout layout_;
  std::vector<TensorOp> generators_;
  std::vector<TensorOp> inverses_;
  std::vector<TensorOp> jm_;
};

struct RankCheck {
  std::size_t rank;
  long long expected;
  bool ok() const { return static_cast<long long>(rank) == expected; }
};

/// rank(E_U) against the number of semistandard tableaux of shape(U) with
/// entries ≤ n.
RankCheck idempotent_rank_check(const HeckeAction& act, const StandardTableau& u);

/// Yang–Baxter for R, the braid relation and the Hecke quadratic relation
/// (Ř - q)(Ř + q^{-1}) = 0, plus Ř Ř^{-1} = 1.
Verdict verify_rmatrix(int n, const QConfig& cfg);

/// For every standard tableau on m boxes: E_U^2 = E_U, y_k E_U = q^{2c_k} E_U,
/// E_U E_V = 0 for U != V, Σ E_U = 1 and rank E_U = number of SSYT.
Verdict verify_hecke(const HeckeAction& act);

}  // namespace qimm
