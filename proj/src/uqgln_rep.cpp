#include "qimm/uqgln_rep.hpp"

#include <numeric>
#include <stdexcept>

#include "qimm/hecke.hpp"

namespace qimm {

TensorOp build_R_inverse(int n, const QConfig& cfg) { return build_R(n, QConfig(1 / cfg.q())); }

EvaluatedRep build_rep(int n, int N, const QConfig& cfg) {
  if (n < 1) throw std::invalid_argument("build_rep: n must be >= 1");
  if (N < 0) throw std::invalid_argument("build_rep: N must be >= 0");
  EvaluatedRep rep{n, N, cfg, {}, {}, {}, {}};
  const Layout layout = rep.layout();
  const TensorOp r = build_R(n, cfg);
  const TensorOp rinv = build_R_inverse(n, cfg);
  TensorOp plus = TensorOp::identity(n, layout);
  TensorOp minus = plus;
  TensorOp minus_inv = plus;
  for (int a = 1; a <= N; ++a) {
    const std::vector<SiteIndex> aux_first{{1}, {a + 1}};
    const std::vector<SiteIndex> mod_first{{a + 1}, {1}};
    plus = plus * embed(r, aux_first, layout);
    minus = minus * embed(rinv, mod_first, layout);
    minus_inv = embed(r, mod_first, layout) * minus_inv;
  }
  rep.Lplus = std::move(plus);
  rep.Lminus = std::move(minus);
  rep.Lminus_inv = std::move(minus_inv);
  rep.L = rep.Lplus * rep.Lminus_inv;
  return rep;
}

namespace {

std::vector<SiteIndex> aux_with_modules(int aux_site, int first_module, int N) {
  std::vector<SiteIndex> s{{aux_site}};
  for (int a = 0; a < N; ++a) s.push_back({first_module + a});
  return s;
}

void expect_equal(Verdict& v, const TensorOp& lhs, const TensorOp& rhs, const std::string& what) {
  if (!(lhs == rhs)) v.fail(what + ": " + describe(lhs - rhs));
}

}  // namespace

Verdict verify_rtt(const EvaluatedRep& rep) {
  Verdict v;
  const int n = rep.n;
  const int N = rep.N;
  const Layout two_aux = make_layout(2, N);
  const TensorOp r12 = embed(build_R(n, rep.cfg), {{1}, {2}}, two_aux);
  const auto site1 = aux_with_modules(1, 3, N);
  const auto site2 = aux_with_modules(2, 3, N);
  const TensorOp p1 = embed(rep.Lplus, site1, two_aux), p2 = embed(rep.Lplus, site2, two_aux);
  const TensorOp m1 = embed(rep.Lminus, site1, two_aux), m2 = embed(rep.Lminus, site2, two_aux);
  const TensorOp l1 = embed(rep.L, site1, two_aux), l2 = embed(rep.L, site2, two_aux);

  expect_equal(v, r12 * p1 * p2, p2 * p1 * r12, "R L+_1 L+_2 = L+_2 L+_1 R");
  expect_equal(v, r12 * m1 * m2, m2 * m1 * r12, "R L-_1 L-_2 = L-_2 L-_1 R");
  expect_equal(v, r12 * p1 * m2, m2 * p1 * r12, "R L+_1 L-_2 = L-_2 L+_1 R");

  const TensorOp one = TensorOp::identity(n, rep.module_layout());
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i > j && !rep.lplus(i, j).is_zero()) v.fail("l+_" + std::to_string(i) + std::to_string(j) + " != 0");
      if (i < j && !rep.lminus(i, j).is_zero()) v.fail("l-_" + std::to_string(i) + std::to_string(j) + " != 0");
    }
    const TensorOp a = rep.lplus(i, i), b = rep.lminus(i, i);
    expect_equal(v, a * b, one, "l+_ii l-_ii = 1 (i=" + std::to_string(i) + ")");
    expect_equal(v, b * a, one, "l-_ii l+_ii = 1 (i=" + std::to_string(i) + ")");
  }
  expect_equal(v, rep.Lminus * rep.Lminus_inv, TensorOp::identity(n, rep.layout()), "L- (L-)^{-1} = 1");

  const TensorOp l2bar = bar_conjugate(l1.with_layout(two_aux), 2, rep.cfg);
  expect_equal(v, m1 * l2, l2bar * m1, "L-_1 L_2 = L_{bar 2} L-_1");

  const TensorOp rc = embed(build_Rcheck(n, rep.cfg), {{1}, {2}}, two_aux);
  expect_equal(v, rc * l1 * rc * l1, l1 * rc * l1 * rc, "reflection equation");
  return v;
}

TensorOp module_projector(const EvaluatedRep& rep, const StandardTableau& t) {
  if (t.shape.size() != rep.N) throw std::invalid_argument("module_projector: tableau must have N boxes");
  const HeckeAction act(rep.n, rep.N, rep.cfg, rep.module_layout());
  // With the coproduct above, the representation commutes with Ř acting on
  // the module sites in reversed order.
  std::vector<int> reversed(static_cast<std::size_t>(rep.N));
  std::iota(reversed.rbegin(), reversed.rend(), 1);
  return permute_sites(act.primitive_idempotent(t), reversed);
}

std::vector<int> shifted_weight(const YoungDiagram& lambda, int n) {
  if (lambda.num_rows() > n) throw std::invalid_argument("weight has more than n rows");
  std::vector<int> l(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) l[static_cast<std::size_t>(i)] = lambda.row_length(i) - i;
  return l;
}

Vector highest_weight_vector(const EvaluatedRep& rep, const YoungDiagram& lambda) {
  if (lambda.size() != rep.N) throw std::invalid_argument("highest_weight_vector: |λ| must equal N");
  if (lambda.num_rows() > rep.n) throw std::invalid_argument("highest_weight_vector: λ has more than n rows");
  const auto tableaux = standard_tableaux(lambda);
  const TensorOp proj = module_projector(rep, tableaux.front());
  const Layout ml = rep.module_layout();
  const TensorOp one = TensorOp::identity(rep.n, ml);

  std::vector<TensorOp> conditions{one - proj};
  for (int i = 1; i <= rep.n; ++i)
    for (int j = 1; j < i; ++j) conditions.push_back(rep.lminus(i, j));
  for (int i = 1; i <= rep.n; ++i)
    conditions.push_back(rep.lplus(i, i) - TensorOp::scalar(rep.n, ml, rep.cfg.power(lambda.row_length(i - 1))));

  Matrix stacked;
  for (const auto& c : conditions) {
    auto dense = c.to_dense();
    for (auto& row : dense) {
      bool nonzero = false;
      for (const auto& x : row) nonzero = nonzero || !is_zero(x);
      if (nonzero) stacked.push_back(std::move(row));
    }
  }
  std::vector<Vector> basis;
  if (stacked.empty()) {
    for (std::size_t i = 0; i < one.dim(); ++i) {
      Vector e(one.dim());
      e[i] = 1;
      basis.push_back(std::move(e));
    }
  } else {
    basis = nullspace(stacked);
  }
  if (basis.empty()) throw std::runtime_error("highest_weight_vector: no solution for λ = " + lambda.str());
  if (basis.size() > 1) throw std::runtime_error("highest_weight_vector: solution not unique for λ = " + lambda.str());
  Vector xi = std::move(basis.front());
  Scalar lead = 0;
  for (const auto& x : xi)
    if (!is_zero(x)) {
      lead = x;
      break;
    }
  for (auto& x : xi) x /= lead;
  for (int i = 1; i <= rep.n; ++i) {
    if (eigenvalue_on_vector(rep.lplus(i, i), xi) != rep.cfg.power(lambda.row_length(i - 1)))
      throw std::runtime_error("highest_weight_vector: l+_ii eigenvalue mismatch");
  }
  return xi;
}

Scalar central_eigenvalue(const TensorOp& op, const TensorOp& proj) {
  const TensorOp image = op * proj;
  for (std::size_t r = 0; r < proj.dim(); ++r) {
    auto cs = proj.row_cols(r);
    if (cs.empty()) continue;
    const Scalar chi = image.at(r, cs[0]) / proj.row_values(r)[0];
    if (!(image == chi * proj)) throw std::runtime_error("central_eigenvalue: not scalar on isotypic component");
    return chi;
  }
  throw std::runtime_error("central_eigenvalue: projector is zero");
}

Scalar eigenvalue_on_vector(const TensorOp& op, const Vector& v) {
  const Vector w = op.apply(v);
  std::size_t pivot = v.size();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) {
      pivot = i;
      break;
    }
  if (pivot == v.size()) throw std::runtime_error("eigenvalue_on_vector: zero vector");
  const Scalar chi = w[pivot] / v[pivot];
  for (std::size_t i = 0; i < v.size(); ++i)
    if (w[i] != chi * v[i]) throw std::runtime_error("eigenvalue_on_vector: not an eigenvector");
  return chi;
}

}  // namespace qimm
