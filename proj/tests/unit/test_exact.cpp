#include <doctest.h>

#include "qimm/exact.hpp"

using namespace qimm;

TEST_CASE("rational literals parse to canonical form") {
  CHECK(parse_scalar("3/2") == Scalar(3, 2));
  CHECK(parse_scalar("6/4") == Scalar(3, 2));
  CHECK(parse_scalar("-5/7") == Scalar(-5, 7));
  CHECK(parse_scalar("+4") == Scalar(4));
  CHECK(to_string(parse_scalar("10/5")) == "2");
  CHECK(to_string(parse_scalar("-2/6")) == "-1/3");
}

TEST_CASE("malformed literals are rejected") {
  for (const char* bad : {"", "/", "1/", "/2", "1/0", "1.5", "a/b", "1/-2", "3//2", " 1"})
    CHECK_THROWS_AS(parse_scalar(bad), std::invalid_argument);
}

TEST_CASE("field axioms on sample rationals") {
  const std::vector<Scalar> xs{Scalar(3, 2), Scalar(-5, 7), Scalar(0), Scalar(11, 3), Scalar(-1)};
  for (const auto& a : xs)
    for (const auto& b : xs)
      for (const auto& c : xs) {
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        if (!is_zero(b)) CHECK((a / b) * b == a);
      }
}

TEST_CASE("q must be generic") {
  CHECK_THROWS_AS(QConfig(Scalar(0)), std::invalid_argument);
  CHECK_THROWS_AS(QConfig(Scalar(1)), std::invalid_argument);
  CHECK_THROWS_AS(QConfig(Scalar(-1)), std::invalid_argument);
  CHECK_NOTHROW(QConfig(Scalar(5, 7)));
}

TEST_CASE("q powers agree inside and outside the cache") {
  const QConfig cfg(Scalar(3, 2));
  CHECK(cfg.power(2) == Scalar(9, 4));
  CHECK(cfg.power(-2) == Scalar(4, 9));
  CHECK(cfg.q_minus_qinv() == Scalar(5, 6));
  for (int k : {-70, -65, 63, 64, 65, 70}) CHECK(cfg.power(k) * cfg.power(-k) == 1);
  CHECK(cfg.power(65) == cfg.power(64) * cfg.q());
  CHECK(q_power(cfg, 3) == Scalar(27, 8));
}

TEST_CASE("Laurent polynomials") {
  Poly<Scalar> a(Variable::u), b(Variable::u);
  a.add_term(0, Scalar(1));
  a.add_term(-1, Scalar(2));
  b.add_term(0, Scalar(1));
  b.add_term(-1, Scalar(-2));
  const auto p = poly_mul(a, b);  // 1 - 4 u^-2
  CHECK(p.coefficient(0, Scalar(0)) == 1);
  CHECK_FALSE(p.has(-1));
  CHECK(p.coefficient(-2, Scalar(0)) == -4);
  CHECK(p.truncated_below(-1) == Poly<Scalar>::constant(Variable::u, Scalar(1)));

  const auto s = poly_substitute_scaled(a, Scalar(2));  // 1 + u^-1
  CHECK(s.coefficient(-1, Scalar(0)) == 1);
  CHECK(poly_evaluate(p, Scalar(2), Scalar(0)) == 0);

  SUBCASE("zero terms are dropped") {
    Poly<Scalar> c(Variable::z);
    c.add_term(3, Scalar(1));
    c.add_term(3, Scalar(-1));
    CHECK(c.is_zero_poly());
  }
  SUBCASE("variables must match") { CHECK_THROWS_AS(poly_mul(a, Poly<Scalar>(Variable::z)), std::invalid_argument); }
}
