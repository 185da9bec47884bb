#include <doctest.h>

#include <random>

#include "qimm/weyl.hpp"

using namespace qimm;

namespace {

const QConfig kQ(Scalar(3, 2));

StandardTableau first(const std::vector<int>& rows) { return standard_tableaux(YoungDiagram(rows)).front(); }

}  // namespace

TEST_CASE("free algebra arithmetic") {
  const Alphabet a(2);
  const FreeElement x = FreeElement::word({a.m(1, 2)}), y = FreeElement::word({a.d(2, 1)}, Scalar(3));
  const FreeElement c = FreeElement::constant(Scalar(1, 2));
  CHECK((x * y).terms().begin()->first == Word{a.m(1, 2), a.d(2, 1)});
  CHECK(!(x * y == y * x));
  CHECK((x * y) * c == x * (y * c));
  CHECK((x + y - y) == x);
  CHECK((x - x).is_zero());
  CHECK((x * y + c).degree() == 2);
  CHECK(FreeElement().degree() == -1);
  CHECK((x * y + c).homogeneous_part(0) == c);
  CHECK(a.name(a.d(2, 1)) == "d21");
  CHECK(a.swapped(a.m(1, 2)) == a.d(1, 2));
}

TEST_CASE("shortlex order") {
  const ShortLex less;
  CHECK(less(Word{5}, Word{0, 0}));
  CHECK(less(Word{0, 1}, Word{1, 0}));
  CHECK_FALSE(less(Word{1}, Word{1}));
}

TEST_CASE("relation families at n = 2") {
  const RelationSet rels = relation_generators(2, kQ);
  CHECK(rels.count(RelationFamily::mm) <= 16);
  CHECK(rels.count(RelationFamily::dd) <= 16);
  CHECK(rels.count(RelationFamily::cross) == 16);
  CHECK(rels.size() == rels.labels.size());
  const Alphabet a(2);
  for (std::size_t i = 0; i < rels.size(); ++i) {
    for (const auto& [w, c] : rels.elements[i].terms()) {
      int ms = 0;
      for (Letter x : w) ms += a.is_m(x) ? 1 : 0;
      if (rels.family[i] == RelationFamily::mm) CHECK((w.size() == 2 && ms == 2));
      if (rels.family[i] == RelationFamily::dd) CHECK((w.size() == 2 && ms == 0));
      if (rels.family[i] == RelationFamily::cross) CHECK(((w.size() == 2 && ms == 1) || w.empty()));
    }
  }
}

TEST_CASE("n = 1 gives the single rule q d m - q^-1 m d - 1") {
  const RelationSet rels = relation_generators(1, kQ);
  REQUIRE(rels.size() == 1);
  const Alphabet a(1);
  FreeElement expect = FreeElement::word({a.d(1, 1), a.m(1, 1)}, kQ.q());
  expect += FreeElement::word({a.m(1, 1), a.d(1, 1)}, -kQ.power(-1));
  expect += FreeElement::constant(-1);
  CHECK(rels.elements.front() == expect);
}

TEST_CASE("relations are not satisfied by commuting numbers") {
  const RelationSet rels = relation_generators(2, kQ);
  std::vector<Scalar> values;
  for (int i = 0; i < 8; ++i) values.push_back(Scalar(i + 2) / 3);
  bool some_nonzero = false;
  for (const auto& r : rels.elements) some_nonzero = some_nonzero || evaluate(r, values) != 0;
  CHECK(some_nonzero);
}

TEST_CASE("m and d families are exchanged by the letter swap with Ř <-> Ř^-1") {
  const Alphabet a(2);
  std::vector<Letter> swap(static_cast<std::size_t>(a.size()));
  for (int x = 0; x < a.size(); ++x) swap[static_cast<std::size_t>(x)] = a.swapped(static_cast<Letter>(x));
  const auto mm_inverse = braided_relation_entries(FreeMatrix::generators_m(a), build_Rcheck_inverse(2, kQ));
  const RelationSet rels = relation_generators(2, kQ);
  std::vector<FreeElement> dd;
  for (std::size_t i = 0; i < rels.size(); ++i)
    if (rels.family[i] == RelationFamily::dd) dd.push_back(rels.elements[i]);
  REQUIRE(dd.size() == mm_inverse.size());
  for (std::size_t i = 0; i < dd.size(); ++i) CHECK(map_letters(mm_inverse[i], swap) == dd[i]);
}

TEST_CASE("ideal components") {
  const RelationSet rels = relation_generators(2, kQ);
  const auto mm = ideal_component(rels, 2, 0);
  CHECK(mm.size() == rels.count(RelationFamily::mm));
  for (const auto& g : mm) CHECK((g.left.empty() && g.right.empty()));
  const auto cross = ideal_component(rels, 1, 1);
  CHECK(cross.size() == rels.count(RelationFamily::cross));
  CHECK(ideal_component(rels, 3, 1).size() > ideal_component(rels, 2, 1).size());
  CHECK_THROWS_AS(ideal_component(rels, 2, 2, 10), ScaleExceeded);
  CHECK_THROWS_AS(ideal_component(rels, -1, 0), std::invalid_argument);
}

TEST_CASE("ideal membership") {
  const RelationSet rels = relation_generators(2, kQ);
  IdealEngine engine(rels);
  const Alphabet a(2);
  for (const auto& r : rels.elements) {
    const Membership m = engine.membership(r);
    CHECK(m.member);
    CHECK(certificate_holds(r, rels, m.certificate));
  }
  SUBCASE("products with monomials stay inside") {
    std::mt19937 gen(7);
    std::uniform_int_distribution<int> letter(0, a.size() - 1);
    std::uniform_int_distribution<std::size_t> pick(0, rels.size() - 1);
    for (int trial = 0; trial < 12; ++trial) {
      const FreeElement u = FreeElement::word({static_cast<Letter>(letter(gen))});
      const FreeElement v = FreeElement::word({static_cast<Letter>(letter(gen))});
      const FreeElement x = (Scalar(trial + 1) / 2) * (u * rels.elements[pick(gen)] * v);
      CHECK(engine.membership(x).member);
    }
  }
  SUBCASE("a lone word is not a member") {
    const Membership m = engine.membership(FreeElement::word({a.m(1, 1), a.d(1, 1)}));
    CHECK_FALSE(m.member);
    CHECK_FALSE(m.residue.is_zero());
    CHECK(m.certificate.terms.empty());
  }
  SUBCASE("the cap is enforced") {
    IdealEngine tiny(rels, {5, 0});
    const FreeElement x = FreeElement::word({a.m(1, 1)}) * rels.elements.front() * FreeElement::word({a.d(1, 1)});
    CHECK_THROWS_AS(tiny.membership(x), ScaleExceeded);
  }
}

TEST_CASE("the image of L satisfies the reflection equation modulo the ideal") {
  const Alphabet a(2);
  const FreeMatrix l = FreeMatrix::generators_m(a) * FreeMatrix::generators_d(a) -
                       (1 / kQ.q_minus_qinv()) * FreeMatrix::identity(2, 1);
  IdealEngine engine(relation_generators(2, kQ));
  for (const auto& entry : braided_relation_entries(l, build_Rcheck(2, kQ))) CHECK(engine.membership(entry).member);
}

TEST_CASE("Capelli image entries") {
  const Alphabet a(2);
  const FreeMatrix md = FreeMatrix::generators_m(a) * FreeMatrix::generators_d(a);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(capelli_image_entry(first({1}), 2, i, j, kQ) == md.at(i, j));
  CHECK(capelli_rhs(first({1}), 2, kQ).at(0, 1) == md.at(0, 1));
  CHECK_THROWS(capelli_image_entry(first({1}), 2, 2, 0, kQ));
  const FreeElement e = capelli_image_entry(first({2}), 2, 0, 0, kQ);
  CHECK(e.degree() == 4);
}

TEST_CASE("higher Capelli identities for n = 2") {
  IdealEngine engine(relation_generators(2, kQ));
  const CapelliReport one = verify_capelli(first({1}), 2, kQ, engine);
  CHECK(one.verdict.ok());
  CHECK(one.literal_zero == one.entries);
  CHECK(one.notes == std::vector<std::string>{"exact zero residue"});
  for (const auto& rows : {std::vector<int>{2}, std::vector<int>{1, 1}}) {
    const CapelliReport r = verify_capelli(first(rows), 2, kQ, engine);
    CHECK(r.verdict.ok());
    CHECK(r.entries == 16);
    CHECK(r.literal_zero + r.certified == 16);
    CHECK(verify_traced_capelli(YoungDiagram(rows), 2, kQ, engine).verdict.ok());
  }
  CHECK(verify_traced_capelli(YoungDiagram({1}), 2, kQ, engine).literal_zero == 1);
}

TEST_CASE("a wrong right-hand side is caught") {
  IdealEngine engine(relation_generators(2, kQ));
  const auto u = first({1, 1});
  const FreeMatrix diff = capelli_lhs(u, 2, kQ) - Scalar(2) * capelli_rhs(u, 2, kQ);
  bool caught = false;
  for (std::size_t r = 0; r < diff.dim(); ++r)
    for (std::size_t c = 0; c < diff.dim(); ++c)
      if (!diff.at(r, c).is_zero() && !engine.membership(diff.at(r, c)).member) caught = true;
  CHECK(caught);
}
