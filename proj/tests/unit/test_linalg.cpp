#include <doctest.h>

#include "helpers.hpp"
#include "qimm/linalg.hpp"

using namespace qimm;
using namespace qimm::testing;

namespace {

Vector mat_vec(const Matrix& a, const Vector& x) {
  Vector y(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  return y;
}

}  // namespace

TEST_CASE("rank of small matrices") {
  CHECK(rank(Matrix{}) == 0);
  CHECK(rank(Matrix{{0, 0}, {0, 0}}) == 0);
  CHECK(rank(Matrix{{1, 2}, {2, 4}}) == 1);
  CHECK(rank(Matrix{{Scalar(1, 2), Scalar(1, 3)}, {Scalar(1, 4), Scalar(1, 5)}}) == 2);
  CHECK(rank(Matrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 2);
  CHECK(rank(TensorOp::identity(2, make_layout(2, 0))) == 4);
}

TEST_CASE("rank is invariant under transposition and row scaling") {
  for (unsigned seed = 1; seed <= 8; ++seed) {
    Dense a = random_dense(6, seed, 0.3);
    Dense t(6, std::vector<Scalar>(6));
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) t[j][i] = a[i][j];
    CHECK(rank(a) == rank(t));
    for (auto& x : a[0]) x *= Scalar(7, 3);
    CHECK(rank(a) == rank(t));
  }
}

TEST_CASE("nullspace vectors are annihilated and independent") {
  for (unsigned seed = 1; seed <= 6; ++seed) {
    Dense a = random_dense(5, seed, 0.5);
    a[4] = a[0];  // force a dependency
    for (std::size_t j = 0; j < 5; ++j) a[3][j] = a[1][j] - Scalar(2, 5) * a[2][j];
    const auto basis = nullspace(a);
    CHECK(basis.size() == 5 - rank(a));
    for (const auto& v : basis) CHECK(mat_vec(a, v) == Vector(5));
    CHECK(rank(basis) == basis.size());
  }
}

TEST_CASE("solve_linear") {
  const Matrix a{{2, 1}, {1, 3}};
  const Vector b{3, 5};
  const Vector x = solve_linear(a, b);
  CHECK(mat_vec(a, x) == b);
  CHECK_THROWS_AS(solve_linear(Matrix{{1, 1}, {1, 1}}, Vector{1, 2}), InconsistentSystem);
  const Vector y = solve_linear(Matrix{{1, 1}, {2, 2}}, Vector{3, 6});
  CHECK(y[0] + y[1] == 3);
}

TEST_CASE("sparse echelon with combination tracking") {
  using SV = SparseEchelon::SparseVec;
  SparseEchelon e(true);
  const SV g0{{0, 1}, {2, 1}}, g1{{1, 1}, {2, -1}}, g2{{0, 1}, {1, 1}};
  CHECK(e.insert(g0, 0));
  CHECK(e.insert(g1, 1));
  CHECK_FALSE(e.insert(g2, 2));  // g2 = g0 + g1
  CHECK(e.rank() == 2);

  const SV target{{0, 3}, {1, 2}, {2, 1}, {5, 4}};  // 3 g0 + 2 g1 + 4 e5
  const auto red = e.reduce(target);
  CHECK(red.remainder == SV{{5, 4}});
  Scalar c0 = red.combination.count(0) ? red.combination.at(0) : Scalar(0);
  Scalar c1 = red.combination.count(1) ? red.combination.at(1) : Scalar(0);
  CHECK(c0 == 3);
  CHECK(c1 == 2);
}
