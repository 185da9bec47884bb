#include "qimm/immanants.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace qimm {

namespace {

std::vector<SiteIndex> site_range(int first, int count) {
  std::vector<SiteIndex> s;
  for (int i = 0; i < count; ++i) s.push_back({first + i});
  return s;
}

std::vector<SiteIndex> aux_and_modules(int aux_site, int m, int N) {
  std::vector<SiteIndex> s{{aux_site}};
  for (int a = 1; a <= N; ++a) s.push_back({m + a});
  return s;
}

// Operators on m aux sites followed by the N module sites of `rep`.
struct AuxFrame {
  AuxFrame(const EvaluatedRep& rep, int m) : rep(rep), m(m), layout(make_layout(m, rep.N)) {}

  TensorOp identity() const { return TensorOp::identity(rep.n, layout); }

  TensorOp idempotent(const StandardTableau& u) const {
    return HeckeAction(rep.n, m, rep.cfg, layout).primitive_idempotent(u);
  }

  // L_{ō1}, ..., L_{ōm}
  std::vector<TensorOp> barred_L() const {
    std::vector<TensorOp> out;
    if (m == 0) return out;
    out.push_back(embed(rep.L, aux_and_modules(1, m, rep.N), layout));
    const TensorOp rc = build_Rcheck(rep.n, rep.cfg);
    const TensorOp rci = build_Rcheck_inverse(rep.n, rep.cfg);
    for (int k = 2; k <= m; ++k) {
      const std::vector<SiteIndex> at{{k - 1}, {k}};
      out.push_back(embed(rc, at, layout) * out.back() * embed(rci, at, layout));
    }
    return out;
  }

  TensorOp trace_aux(const TensorOp& op) const { return q_trace(op, site_range(1, m), rep.cfg); }

  const EvaluatedRep& rep;
  int m;
  Layout layout;
};

void check_tableau(const EvaluatedRep& rep, const StandardTableau& u) {
  if (!is_standard(u)) throw std::invalid_argument("immanant: tableau is not standard");
  (void)rep;
}

// Multiplies P(z) on the right by (A + z s).
OpPoly times_linear(const OpPoly& p, const TensorOp& a, const Scalar& s) {
  OpPoly out(p.variable());
  for (const auto& [k, c] : p.terms()) {
    out.add_term(k, c * a);
    out.add_term(k + 1, s * c);
  }
  return out;
}

OpPoly times_right(const OpPoly& p, const TensorOp& a) {
  OpPoly out(p.variable());
  for (const auto& [k, c] : p.terms()) out.add_term(k, c * a);
  return out;
}

OpPoly map_coefficients(const OpPoly& p, const std::function<TensorOp(const TensorOp&)>& f) {
  OpPoly out(p.variable());
  for (const auto& [k, c] : p.terms()) out.add_term(k, f(c));
  return out;
}

StandardTableau column_tableau(int m) {
  std::vector<int> rows(static_cast<std::size_t>(m), 1);
  Tableau t{YoungDiagram(rows), {}};
  for (int i = 1; i <= m; ++i) t.filling.push_back({i});
  return t;
}

}  // namespace

TensorOp ImmanantPoly::coefficient(int k) const {
  return coefficients.coefficient(k, TensorOp(n, make_layout(0, N)));
}

TensorOp ImmanantPoly::at(const Scalar& z) const {
  return poly_evaluate(coefficients, z, TensorOp(n, make_layout(0, N)));
}

ImmanantPoly build_immanant_poly(const EvaluatedRep& rep, const StandardTableau& u, ImmanantOptions opts) {
  check_tableau(rep, u);
  const int m = u.shape.size();
  const AuxFrame frame(rep, m);
  const std::vector<int> c = contents(u);
  const auto lbar = frame.barred_L();

  OpPoly p = OpPoly::constant(Variable::z, frame.identity());
  for (int k = 1; k <= m; ++k)
    p = times_linear(p, lbar[static_cast<std::size_t>(k - 1)], rep.cfg.power(-2 * c[static_cast<std::size_t>(k - 1)]));
  const TensorOp e = frame.idempotent(u);
  OpPoly traced = map_coefficients(p, [&](const TensorOp& x) { return frame.trace_aux(x * e); });

  ImmanantPoly out{u.shape, u, rep.n, rep.N, std::move(traced)};
  if (opts.cross_check_routes) {
    const OpPoly other = build_immanant_poly_via_lpm(rep, u);
    if (!(other == out.coefficients))
      throw std::logic_error("S_U(z): the L and L^± constructions disagree for U = " + u.str());
  }
  return out;
}

OpPoly build_immanant_poly_via_lpm(const EvaluatedRep& rep, const StandardTableau& u) {
  check_tableau(rep, u);
  const int m = u.shape.size();
  const AuxFrame frame(rep, m);
  const std::vector<int> c = contents(u);
  const Layout& layout = frame.layout;

  OpPoly p = OpPoly::constant(Variable::z, frame.identity());
  for (int k = 1; k <= m; ++k) {
    const auto sites = aux_and_modules(k, m, rep.N);
    const TensorOp plus = embed(rep.Lplus, sites, layout);
    const TensorOp minus = rep.cfg.power(-2 * c[static_cast<std::size_t>(k - 1)]) * embed(rep.Lminus, sites, layout);
    OpPoly next(Variable::z);
    for (const auto& [j, coef] : p.terms()) {
      next.add_term(j, coef * plus);
      next.add_term(j + 1, coef * minus);
    }
    p = std::move(next);
  }
  TensorOp tail = frame.identity();
  for (int k = m; k >= 1; --k) tail = tail * embed(rep.Lminus_inv, aux_and_modules(k, m, rep.N), layout);
  const TensorOp d = build_D(rep.n, rep.cfg);
  for (int k = 1; k <= m; ++k) tail = tail * embed(d, {{k}}, layout);
  tail = tail * frame.idempotent(u);
  p = times_right(p, tail);
  return map_coefficients(p, [&](const TensorOp& x) { return partial_trace(x, site_range(1, m)); });
}

TensorOp qimmanant(const EvaluatedRep& rep, const StandardTableau& u) {
  check_tableau(rep, u);
  const int m = u.shape.size();
  const AuxFrame frame(rep, m);
  TensorOp x = frame.identity();
  for (const auto& l : frame.barred_L()) x = x * l;
  return frame.trace_aux(x * frame.idempotent(u));
}

Scalar immanant_eigenvalue(const EvaluatedRep& rep, const StandardTableau& u, const Scalar& z,
                           const YoungDiagram& lambda) {
  check_tableau(rep, u);
  const int n = rep.n;
  const int m = u.shape.size();
  const Vector xi = highest_weight_vector(rep, lambda);
  if (m == 0) return 1;  // S_∅ = 1
  const std::size_t mod_dim = xi.size();
  const std::size_t aux_dim = site_dim(n, m);
  const Layout layout = make_layout(m, rep.N);
  const std::vector<int> c = contents(u);

  const TensorOp l1 = embed(rep.L, aux_and_modules(1, m, rep.N), layout);
  std::vector<TensorOp> rc, rci;
  for (int k = 1; k < m; ++k) {
    const std::vector<SiteIndex> at{{k}, {k + 1}};
    rc.push_back(embed(build_Rcheck(n, rep.cfg), at, layout));
    rci.push_back(embed(build_Rcheck_inverse(n, rep.cfg), at, layout));
  }
  const TensorOp e_aux = HeckeAction(n, m, rep.cfg).primitive_idempotent(u);

  Vector s_xi(mod_dim);
  for (std::size_t a = 0; a < aux_dim; ++a) {
    // w = (E_U ⊗ 1)(e_a ⊗ ξ)
    Vector w(aux_dim * mod_dim);
    bool any = false;
    for (std::size_t b = 0; b < aux_dim; ++b) {
      const Scalar eba = e_aux.at(b, a);
      if (is_zero(eba)) continue;
      any = true;
      for (std::size_t j = 0; j < mod_dim; ++j) w[b * mod_dim + j] = eba * xi[j];
    }
    if (!any) continue;
    for (int k = m; k >= 1; --k) {
      // (L_{ōk} + z q^{-2c_k}) w, with L_{ōk} applied as Ř_{k-1}···Ř_1 L_1 Ř_1^{-1}···Ř_{k-1}^{-1}.
      Vector v = w;
      for (int i = k - 1; i >= 1; --i) v = rci[static_cast<std::size_t>(i - 1)].apply(v);
      v = l1.apply(v);
      for (int i = 1; i <= k - 1; ++i) v = rc[static_cast<std::size_t>(i - 1)].apply(v);
      const Scalar shift = z * rep.cfg.power(-2 * c[static_cast<std::size_t>(k - 1)]);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += shift * w[i];
      w = std::move(v);
    }
    int weight = 0;
    for (int s = 1; s <= m; ++s) weight -= 2 * site_digit(a, n, m, s);
    const Scalar d = rep.cfg.power(weight);
    for (std::size_t j = 0; j < mod_dim; ++j) s_xi[j] += d * w[a * mod_dim + j];
  }
  std::size_t pivot = 0;
  while (is_zero(xi[pivot])) ++pivot;
  const Scalar chi = s_xi[pivot] / xi[pivot];
  for (std::size_t j = 0; j < mod_dim; ++j)
    if (s_xi[j] != chi * xi[j]) throw std::runtime_error("immanant_eigenvalue: highest-weight vector is not an eigenvector");
  return chi;
}

Scalar immanant_eigenvalue_oracle(const YoungDiagram& mu, const YoungDiagram& lambda, int n, const Scalar& z,
                                  const QConfig& cfg, int offset) {
  const std::vector<int> ell = shifted_weight(lambda, n);
  std::vector<Scalar> x;
  for (int l : ell) x.push_back(cfg.power(2 * l));
  return factorial_schur(mu, x, [&](int k) { return Scalar(z * cfg.power(offset - 2 * k)); });
}

Verdict verify_centrality(const ImmanantPoly& poly, const EvaluatedRep& rep) {
  Verdict v;
  std::vector<std::pair<std::string, TensorOp>> generators;
  for (int i = 1; i <= rep.n; ++i)
    for (int j = 1; j <= rep.n; ++j) {
      const std::string ij = std::to_string(i) + std::to_string(j);
      if (i <= j) generators.emplace_back("l+_" + ij, rep.lplus(i, j));
      if (i >= j) generators.emplace_back("l-_" + ij, rep.lminus(i, j));
    }
  for (const auto& [k, coef] : poly.coefficients.terms())
    for (const auto& [name, g] : generators)
      if (!commutator(coef, g).is_zero())
        v.fail("coefficient of z^" + std::to_string(k) + " of S_" + poly.tableau.str() + " does not commute with " + name);
  return v;
}

Verdict verify_tableau_independence(const YoungDiagram& shape, const EvaluatedRep& rep) {
  Verdict v;
  const auto tableaux = standard_tableaux(shape);
  if (tableaux.size() < 2) return v;
  const ImmanantPoly first = build_immanant_poly(rep, tableaux.front());
  for (std::size_t i = 1; i < tableaux.size(); ++i) {
    const ImmanantPoly other = build_immanant_poly(rep, tableaux[i]);
    if (!(other.coefficients == first.coefficients))
      v.fail("S_U(z) differs between " + tableaux.front().str() + " and " + tableaux[i].str());
  }
  return v;
}

EigenvalueReport verify_eigenvalues(const YoungDiagram& shape, const EvaluatedRep& rep,
                                    const std::vector<Scalar>& z_samples, const std::vector<YoungDiagram>& lambdas,
                                    int offset) {
  EigenvalueReport report;
  const std::set<Scalar> distinct(z_samples.begin(), z_samples.end());
  if (static_cast<int>(distinct.size()) < shape.size() + 1)
    report.verdict.fail("need at least " + std::to_string(shape.size() + 1) + " distinct z samples for " + shape.str());
  const ImmanantPoly poly = build_immanant_poly(rep, standard_tableaux(shape).front());
  for (const auto& lambda : lambdas) {
    if (lambda.size() != rep.N || lambda.num_rows() > rep.n)
      throw std::invalid_argument("verify_eigenvalues: λ must be a partition of N with at most n rows");
    const TensorOp proj = module_projector(rep, standard_tableaux(lambda).front());
    for (const auto& z : z_samples) {
      EigenvalueRow row{shape, lambda, z, central_eigenvalue(poly.at(z), proj),
                        immanant_eigenvalue_oracle(shape, lambda, rep.n, z, rep.cfg, offset)};
      if (row.from_operator != row.from_oracle)
        report.verdict.fail("mu=" + shape.str() + " lambda=" + lambda.str() + " z=" + to_string(z) +
                            ": operator " + to_string(row.from_operator) + " vs oracle " + to_string(row.from_oracle));
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

std::vector<TensorOp> gelfand_invariants(const EvaluatedRep& rep, int max_power) {
  if (max_power < 1) throw std::invalid_argument("gelfand_invariants: M must be >= 1");
  std::vector<TensorOp> out;
  TensorOp power = rep.L;
  for (int m = 1; m <= max_power; ++m) {
    if (m > 1) power = power * rep.L;
    out.push_back(q_trace(power, {{1}}, rep.cfg));
  }
  return out;
}

OpPoly build_E_poly(const EvaluatedRep& rep) {
  OpPoly e(Variable::u);
  for (int m = 0; m <= rep.n; ++m) {
    const TensorOp s = qimmanant(rep, column_tableau(m));
    e.add_term(-m, m % 2 == 0 ? s : Scalar(-1) * s);
  }
  return e;
}

Verdict verify_newton(const EvaluatedRep& rep, int order) {
  Verdict v;
  if (order < rep.n) {
    v.fail("Newton order must be at least n");
    return v;
  }
  const Layout ml = rep.module_layout();
  const TensorOp zero(rep.n, ml);
  const OpPoly e = build_E_poly(rep);
  OpPoly series = OpPoly::constant(Variable::u, TensorOp::identity(rep.n, ml));
  const Scalar factor = 1 - rep.cfg.power(-2);
  const auto traces = gelfand_invariants(rep, order);
  for (int m = 1; m <= order; ++m) series.add_term(-m, factor * traces[static_cast<std::size_t>(m - 1)]);

  const OpPoly rhs = poly_substitute_scaled(e, rep.cfg.power(2)).truncated_below(-order);
  const OpPoly left = poly_mul(e, series).truncated_below(-order);
  const OpPoly right = poly_mul(series, e).truncated_below(-order);
  const std::vector<std::pair<std::string, const OpPoly*>> sides{{"E(u)·G(u)", &left}, {"G(u)·E(u)", &right}};
  for (const auto& [label, lhs] : sides) {
    for (int k = 0; k >= -order; --k) {
      if (!(lhs->coefficient(k, zero) == rhs.coefficient(k, zero))) {
        v.fail(label + " != E(uq^2) at u^" + std::to_string(k));
        break;
      }
    }
  }
  return v;
}

Verdict verify_eigenvalue_genfn(const YoungDiagram& lambda, int n, int order, const QConfig& cfg) {
  Verdict v;
  const EvaluatedRep rep = build_rep(n, lambda.size(), cfg);
  const TensorOp proj = module_projector(rep, standard_tableaux(lambda).front());
  const auto traces = gelfand_invariants(rep, order);
  Poly<Scalar> lhs = Poly<Scalar>::constant(Variable::u, Scalar(1));
  for (int m = 1; m <= order; ++m)
    lhs.add_term(-m, (1 - cfg.power(-2)) * central_eigenvalue(traces[static_cast<std::size_t>(m - 1)], proj));

  Poly<Scalar> rhs = Poly<Scalar>::constant(Variable::u, Scalar(1));
  for (int l : shifted_weight(lambda, n)) {
    Poly<Scalar> factor = Poly<Scalar>::constant(Variable::u, Scalar(1));
    factor.add_term(-1, -cfg.power(2 * l - 2));
    Poly<Scalar> geometric(Variable::u);
    const Scalar x = cfg.power(2 * l);
    Scalar xk = 1;
    for (int k = 0; k <= order; ++k, xk *= x) geometric.add_term(-k, xk);
    rhs = poly_mul(poly_mul(rhs, factor), geometric).truncated_below(-order);
  }
  for (int k = 0; k >= -order; --k) {
    if (lhs.coefficient(k, Scalar(0)) != rhs.coefficient(k, Scalar(0))) {
      v.fail("lambda=" + lambda.str() + ": eigenvalue series differs at u^" + std::to_string(k) + " (" +
             to_string(lhs.coefficient(k, Scalar(0))) + " vs " + to_string(rhs.coefficient(k, Scalar(0))) + ")");
      break;
    }
  }
  return v;
}

EigenvalueMatrix eigenvalue_matrix(int n, int max_m, int max_N, const QConfig& cfg) {
  EigenvalueMatrix out;
  for (int m = 0; m <= max_m; ++m)
    for (auto& mu : partitions(m, n)) out.shapes.push_back(mu);
  for (int N = 0; N <= max_N; ++N)
    for (auto& lambda : partitions(N, n)) out.weights.push_back(lambda);
  out.values.assign(out.shapes.size(), std::vector<Scalar>(out.weights.size()));
  for (std::size_t j = 0; j < out.weights.size(); ++j) {
    const EvaluatedRep rep = build_rep(n, out.weights[j].size(), cfg);
    for (std::size_t i = 0; i < out.shapes.size(); ++i)
      out.values[i][j] = immanant_eigenvalue(rep, standard_tableaux(out.shapes[i]).front(), Scalar(0), out.weights[j]);
  }
  return out;
}

}  // namespace qimm
