#pragma once

// Shared fixtures for the unit tests: naive dense references that do not
// go through the sparse kernels under test.

#include <random>
#include <vector>

#include "qimm/tensor.hpp"

namespace qimm::testing {

using Dense = std::vector<std::vector<Scalar>>;

inline Dense dense_mul(const Dense& a, const Dense& b) {
  const std::size_t n = a.size();
  Dense c(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline Dense kron(const Dense& a, const Dense& b) {
  const std::size_t p = a.size(), r = b.size();
  Dense c(p * r, std::vector<Scalar>(p * r));
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j)
      for (std::size_t k = 0; k < r; ++k)
        for (std::size_t l = 0; l < r; ++l) c[i * r + k][j * r + l] = a[i][j] * b[k][l];
  return c;
}

inline Dense dense_identity(std::size_t n) {
  Dense d(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 1;
  return d;
}

// Small random rationals, deterministic per seed.
inline Dense random_dense(std::size_t n, unsigned seed, double density = 0.5) {
  std::mt19937 gen(seed);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  std::bernoulli_distribution keep(density);
  Dense d(n, std::vector<Scalar>(n));
  for (auto& row : d)
    for (auto& x : row)
      if (keep(gen)) {
        x = Scalar(num(gen), den(gen));
        x.canonicalize();
      }
  return d;
}

}  // namespace qimm::testing
