#include "qimm/hecke.hpp"

#include <stdexcept>

#include "qimm/linalg.hpp"

namespace qimm {

HeckeAction::HeckeAction(int n, int m, QConfig cfg) : HeckeAction(n, m, cfg, make_layout(m, 0)) {}

HeckeAction::HeckeAction(int n, int m, QConfig cfg, Layout layout)
    : n_(n), m_(m), cfg_(std::move(cfg)), layout_(std::move(layout)) {
  if (n < 1) throw std::invalid_argument("HeckeAction: n must be >= 1");
  if (m < 0 || m > static_cast<int>(layout_.size())) throw std::invalid_argument("HeckeAction: bad site count");
  const TensorOp rc = build_Rcheck(n, cfg_);
  const TensorOp rci = build_Rcheck_inverse(n, cfg_);
  for (int k = 1; k < m; ++k) {
    std::vector<SiteIndex> at{{k}, {k + 1}};
    generators_.push_back(embed(rc, at, layout_));
    inverses_.push_back(embed(rci, at, layout_));
  }
  if (m >= 1) jm_.push_back(identity());
  for (int k = 1; k < m; ++k) jm_.push_back(generators_[static_cast<std::size_t>(k - 1)] * jm_.back() *
                                            generators_[static_cast<std::size_t>(k - 1)]);
}

const TensorOp& HeckeAction::generator(int k) const {
  if (k < 1 || k >= m_) throw std::out_of_range("Hecke generator index out of range");
  return generators_[static_cast<std::size_t>(k - 1)];
}

const TensorOp& HeckeAction::generator_inverse(int k) const {
  if (k < 1 || k >= m_) throw std::out_of_range("Hecke generator index out of range");
  return inverses_[static_cast<std::size_t>(k - 1)];
}

const TensorOp& HeckeAction::jm_operator(int k) const {
  if (k < 1 || k > m_) throw std::out_of_range("Jucys-Murphy index out of range");
  return jm_[static_cast<std::size_t>(k - 1)];
}

TensorOp HeckeAction::primitive_idempotent(const StandardTableau& u) const {
  if (!is_standard(u)) throw std::invalid_argument("primitive_idempotent: tableau is not standard");
  if (u.shape.size() != m_) throw std::invalid_argument("primitive_idempotent: tableau size differs from m");
  if (m_ == 0) return identity();
  // Chain of sub-tableaux U_1 ⊂ U_2 ⊂ ... ⊂ U_m = U.
  std::vector<StandardTableau> chain{u};
  while (chain.back().shape.size() > 1) chain.push_back(remove_largest(chain.back()));
  const std::vector<int> c = contents(u);
  TensorOp e = identity();
  for (int k = 2; k <= m_; ++k) {
    const YoungDiagram& nu = chain[static_cast<std::size_t>(m_ - k + 1)].shape;
    const Scalar target = cfg_.power(2 * c[static_cast<std::size_t>(k - 1)]);
    const TensorOp& y = jm_operator(k);
    for (int other : nu.addable_contents()) {
      if (other == c[static_cast<std::size_t>(k - 1)]) continue;
      const Scalar shift = cfg_.power(2 * other);
      const Scalar denom = target - shift;
      if (is_zero(denom)) throw std::domain_error("primitive_idempotent: vanishing denominator (non-generic q)");
      e = (1 / denom) * (e * (y - TensorOp::scalar(n_, layout_, shift)));
    }
  }
  return e;
}

RankCheck idempotent_rank_check(const HeckeAction& act, const StandardTableau& u) {
  return {rank(act.primitive_idempotent(u)), ssyt_count(u.shape, act.n())};
}

Verdict verify_rmatrix(int n, const QConfig& cfg) {
  Verdict v;
  const Layout three = make_layout(3, 0);
  const TensorOp r = build_R(n, cfg);
  const TensorOp r12 = embed(r, {{1}, {2}}, three), r13 = embed(r, {{1}, {3}}, three), r23 = embed(r, {{2}, {3}}, three);
  if (!(r12 * r13 * r23 == r23 * r13 * r12)) v.fail("Yang-Baxter: R12 R13 R23 != R23 R13 R12");
  const TensorOp rc = build_Rcheck(n, cfg);
  const TensorOp b1 = embed(rc, {{1}, {2}}, three), b2 = embed(rc, {{2}, {3}}, three);
  if (!(b1 * b2 * b1 == b2 * b1 * b2)) v.fail("braid: Ř1 Ř2 Ř1 != Ř2 Ř1 Ř2");
  const Layout two = make_layout(2, 0);
  const TensorOp hecke = (rc - TensorOp::scalar(n, two, cfg.q())) * (rc + TensorOp::scalar(n, two, cfg.power(-1)));
  if (!hecke.is_zero()) v.fail("Hecke quadratic: (Ř - q)(Ř + q^-1) != 0");
  if (!(rc * build_Rcheck_inverse(n, cfg) == TensorOp::identity(n, two))) v.fail("Ř Ř^-1 != 1");
  if (!(build_P(n) * build_P(n) == TensorOp::identity(n, two))) v.fail("P^2 != 1");
  return v;
}

Verdict verify_hecke(const HeckeAction& act) {
  Verdict v;
  const int m = act.m();
  const auto& cfg = act.config();
  std::vector<StandardTableau> all;
  for (const auto& shape : partitions(m))
    for (auto& t : standard_tableaux(shape)) all.push_back(std::move(t));
  std::vector<TensorOp> idem;
  TensorOp sum(act.n(), act.layout());
  for (const auto& u : all) {
    TensorOp e = act.primitive_idempotent(u);
    const std::string name = "E_" + u.str();
    if (!(e * e == e)) v.fail(name + " is not idempotent");
    const std::vector<int> c = contents(u);
    for (int k = 1; k <= m; ++k)
      if (!(act.jm_operator(k) * e == cfg.power(2 * c[static_cast<std::size_t>(k - 1)]) * e))
        v.fail("y_" + std::to_string(k) + " " + name + " != q^{2c_" + std::to_string(k) + "} " + name);
    const RankCheck rc{rank(e), ssyt_count(u.shape, act.n())};
    if (!rc.ok())
      v.fail("rank " + name + " = " + std::to_string(rc.rank) + ", expected " + std::to_string(rc.expected));
    sum = sum + e;
    idem.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < idem.size(); ++i)
    for (std::size_t j = 0; j < idem.size(); ++j)
      if (i != j && !(idem[i] * idem[j]).is_zero()) v.fail("E_" + all[i].str() + " E_" + all[j].str() + " != 0");
  if (!(sum == act.identity())) v.fail("sum of primitive idempotents != 1");
  return v;
}

}  // namespace qimm
