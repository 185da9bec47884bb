#include <doctest.h>

#include "qimm/hecke.hpp"
#include "qimm/linalg.hpp"

using namespace qimm;

namespace {

const QConfig kQ(Scalar(3, 2));

}  // namespace

TEST_CASE("R-matrix relations for several q") {
  for (const auto& q : {Scalar(3, 2), Scalar(5, 7), Scalar(-2)})
    for (int n : {1, 2, 3}) CHECK(verify_rmatrix(n, QConfig(q)).ok());
}

TEST_CASE("Hecke generators satisfy the defining relations") {
  for (int n : {2, 3}) {
    const HeckeAction act(n, 4, kQ);
    const TensorOp one = act.identity();
    for (int k = 1; k <= 3; ++k) {
      const TensorOp& t = act.generator(k);
      CHECK(((t - kQ.q() * one) * (t + kQ.power(-1) * one)).is_zero());
      CHECK(t * act.generator_inverse(k) == one);
    }
    CHECK(act.generator(1) * act.generator(2) * act.generator(1) == act.generator(2) * act.generator(1) * act.generator(2));
    CHECK(act.generator(2) * act.generator(3) * act.generator(2) == act.generator(3) * act.generator(2) * act.generator(3));
    CHECK(act.generator(1) * act.generator(3) == act.generator(3) * act.generator(1));
    CHECK_THROWS_AS(act.generator(4), std::out_of_range);
    CHECK_THROWS_AS(act.generator(0), std::out_of_range);
  }
}

TEST_CASE("Jucys-Murphy operators") {
  const HeckeAction act(2, 3, kQ);
  CHECK(act.jm_operator(1) == act.identity());
  CHECK(act.jm_operator(2) == act.generator(1) * act.generator(1));
  CHECK(act.jm_operator(3) == act.generator(2) * act.generator(1) * act.generator(1) * act.generator(2));
  for (int j = 1; j <= 3; ++j)
    for (int k = 1; k <= 3; ++k) CHECK(commutator(act.jm_operator(j), act.jm_operator(k)).is_zero());
  CHECK_THROWS_AS(act.jm_operator(4), std::out_of_range);
}

TEST_CASE("idempotents for two boxes") {
  const HeckeAction act(2, 2, kQ);
  const auto sym = act.primitive_idempotent(standard_tableaux(YoungDiagram({2})).front());
  const TensorOp expect = (1 / (kQ.q() + kQ.power(-1))) * (act.generator(1) + kQ.power(-1) * act.identity());
  CHECK(sym == expect);
  CHECK(rank(sym) == 3);

  const auto anti = act.primitive_idempotent(standard_tableaux(YoungDiagram({1, 1})).front());
  CHECK(rank(anti) == 1);
  // The image is the -q^{-1} eigenspace of the generator.
  CHECK(act.generator(1) * anti == (-kQ.power(-1)) * anti);
  CHECK(act.generator(1) * sym == kQ.q() * sym);
  CHECK(sym + anti == act.identity());
}

TEST_CASE("rank checks against semistandard counts") {
  const HeckeAction two(2, 2, kQ);
  CHECK(idempotent_rank_check(two, standard_tableaux(YoungDiagram({2})).front()).rank == 3);
  const HeckeAction three(2, 3, kQ);
  const auto tall = idempotent_rank_check(three, standard_tableaux(YoungDiagram({1, 1, 1})).front());
  CHECK(tall.rank == 0);
  CHECK(tall.ok());
}

TEST_CASE("full idempotent verification up to four boxes") {
  for (int n : {2, 3})
    for (int m = 1; m <= 3; ++m) {
      const Verdict v = verify_hecke(HeckeAction(n, m, kQ));
      CHECK_MESSAGE(v.ok(), "n=" << n << " m=" << m << (v.ok() ? "" : " " + v.failures.front()));
    }
}

TEST_CASE("idempotents with a spectator site") {
  const Layout layout = make_layout(2, 1);
  const HeckeAction act(2, 2, kQ, layout);
  const auto u = standard_tableaux(YoungDiagram({2})).front();
  const TensorOp local = HeckeAction(2, 2, kQ).primitive_idempotent(u);
  CHECK(act.primitive_idempotent(u) == embed(local, {{1}, {2}}, layout));
}

TEST_CASE("bad input") {
  const HeckeAction act(2, 2, kQ);
  CHECK_THROWS_AS(act.primitive_idempotent(Tableau{YoungDiagram({2}), {{2, 1}}}), std::invalid_argument);
  CHECK_THROWS_AS(act.primitive_idempotent(standard_tableaux(YoungDiagram({3})).front()), std::invalid_argument);
  CHECK_THROWS(HeckeAction(0, 2, kQ));
}
