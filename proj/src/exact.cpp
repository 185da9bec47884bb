#include "qimm/exact.hpp"

#include <cctype>

namespace qimm {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string strip_plus(std::string_view s) {
  return std::string(!s.empty() && s[0] == '+' ? s.substr(1) : s);
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
  mpz_class p{strip_plus(num)};
  mpz_class r{std::string(den)};
  if (r == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Scalar x(p, r);
  x.canonicalize();
  return x;
}

std::string to_string(const Scalar& x) { return x.get_str(); }

QConfig::QConfig(Scalar q) : q_(std::move(q)) {
  q_.canonicalize();
  if (is_zero(q_)) throw std::invalid_argument("q must be nonzero");
  if (abs(q_) == 1) throw std::invalid_argument("q must satisfy |q| != 1 (q = +-1 is a root of unity)");
  q_minus_qinv_ = q_ - 1 / q_;
  cache_.resize(2 * kCacheRadius + 1);
  cache_[kCacheRadius] = 1;
  for (int k = 1; k <= kCacheRadius; ++k) {
    cache_[kCacheRadius + k] = cache_[kCacheRadius + k - 1] * q_;
    cache_[kCacheRadius - k] = cache_[kCacheRadius - k + 1] / q_;
  }
}

Scalar QConfig::power(int k) const {
  if (k >= -kCacheRadius && k <= kCacheRadius) return cache_[k + kCacheRadius];
  Scalar base = k > 0 ? q_ : Scalar(1 / q_);
  Scalar out = 1;
  for (int i = 0; i < (k > 0 ? k : -k); ++i) out *= base;
  return out;
}

Scalar q_power(const QConfig& cfg, int k) { return cfg.power(k); }

}  // namespace qimm
