#pragma once

// Exact scalars, the deformation parameter q, and univariate Laurent
// polynomials with coefficients in a (possibly noncommutative) ring.

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qimm {

// GMP rationals are always kept canonical (lowest terms, positive
// denominator) by every arithmetic operation.
using Scalar = mpq_class;

/// Parses "p/r" or "p" into a canonical rational. Throws std::invalid_argument.
Scalar parse_scalar(std::string_view text);

/// Lossless rendering: "p/r", or "p" when the denominator is one.
std::string to_string(const Scalar& x);

inline bool is_zero(const Scalar& x) { return sgn(x) == 0; }

class QConfig {
 public:
  static constexpr int kCacheRadius = 64;

  explicit QConfig(Scalar q = Scalar(3, 2));

  const Scalar& q() const { return q_; }

  /// q^k for any integer k; cached inside [-kCacheRadius, kCacheRadius].
  Scalar power(int k) const;

  /// q - q^{-1}
  const Scalar& q_minus_qinv() const { return q_minus_qinv_; }

 private:
  Scalar q_;
  Scalar q_minus_qinv_;
  std::vector<Scalar> cache_;
};

Scalar q_power(const QConfig& cfg, int k);

enum class Variable { z, u };

inline const char* variable_name(Variable v) { return v == Variable::z ? "z" : "u"; }

// Laurent polynomial sum_k c_k x^k. Zero coefficients are never stored.
// The coefficient type C needs +, -, *, scaling by Scalar, and is_zero(C).
template <class C>
class Poly {
 public:
  using Terms = std::map<int, C>;

  explicit Poly(Variable var = Variable::z) : var_(var) {}

  Poly(Variable var, int exponent, C coefficient) : var_(var) {
    if (!is_zero(coefficient)) terms_.emplace(exponent, std::move(coefficient));
  }

  static Poly constant(Variable var, C c) { return Poly(var, 0, std::move(c)); }

  Variable variable() const { return var_; }
  const Terms& terms() const { return terms_; }
  bool is_zero_poly() const { return terms_.empty(); }

  bool has(int exponent) const { return terms_.count(exponent) != 0; }

  /// Coefficient at exponent; `zero` is returned when absent.
  const C& coefficient(int exponent, const C& zero) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? zero : it->second;
  }

  int min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  int max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  void add_term(int exponent, const C& c) {
    auto it = terms_.find(exponent);
    if (it == terms_.end()) {
      if (!is_zero(c)) terms_.emplace(exponent, c);
      return;
    }
    it->second = it->second + c;
    if (is_zero(it->second)) terms_.erase(it);
  }

  Poly& operator+=(const Poly& other) {
    check_same_variable(other);
    for (const auto& [k, c] : other.terms_) add_term(k, c);
    return *this;
  }

  Poly& operator-=(const Poly& other) {
    check_same_variable(other);
    for (const auto& [k, c] : other.terms_) add_term(k, Scalar(-1) * c);
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Scalar& s, const Poly& p) {
    Poly out(p.var_);
    if (qimm::is_zero(s)) return out;
    for (const auto& [k, c] : p.terms_) out.terms_.emplace(k, s * c);
    return out;
  }

  /// Drops every term with exponent below `lowest`.
  Poly truncated_below(int lowest) const {
    Poly out(var_);
    for (auto it = terms_.lower_bound(lowest); it != terms_.end(); ++it) out.terms_.insert(*it);
    return out;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.var_ == b.var_ && a.terms_ == b.terms_;
  }

 private:
  void check_same_variable(const Poly& other) const {
    if (other.var_ != var_) throw std::invalid_argument("polynomial variable mismatch");
  }

  Variable var_;
  Terms terms_;
};

/// Convolution product; coefficient products keep the order a_i * b_j.
template <class C>
Poly<C> poly_mul(const Poly<C>& a, const Poly<C>& b) {
  if (a.variable() != b.variable()) throw std::invalid_argument("polynomial variable mismatch");
  Poly<C> out(a.variable());
  for (const auto& [i, ai] : a.terms())
    for (const auto& [j, bj] : b.terms()) out.add_term(i + j, ai * bj);
  return out;
}

/// The substitution x -> factor * x: coefficient at exponent k is scaled by factor^k.
template <class C>
Poly<C> poly_substitute_scaled(const Poly<C>& p, const Scalar& factor) {
  if (is_zero(factor)) throw std::invalid_argument("substitution factor must be nonzero");
  Poly<C> out(p.variable());
  for (const auto& [k, c] : p.terms()) {
    Scalar f = 1;
    for (int i = 0; i < (k < 0 ? -k : k); ++i) f *= factor;
    if (k < 0) f = 1 / f;
    out.add_term(k, f * c);
  }
  return out;
}

/// Evaluates a polynomial at a scalar point (the coefficient type must
/// support scaling by Scalar and addition).
template <class C>
C poly_evaluate(const Poly<C>& p, const Scalar& x, C zero) {
  C acc = std::move(zero);
  for (const auto& [k, c] : p.terms()) {
    Scalar f = 1;
    for (int i = 0; i < (k < 0 ? -k : k); ++i) f *= x;
    if (k < 0) f = 1 / f;
    acc = acc + f * c;
  }
  return acc;
}

}  // namespace qimm
