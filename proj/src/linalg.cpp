#include "qimm/linalg.hpp"

#include <algorithm>

namespace qimm {

namespace {

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Scales each row by the lcm of its denominators.
IntMatrix to_integer_rows(const Matrix& a) {
  IntMatrix out;
  out.reserve(a.size());
  for (const auto& row : a) {
    mpz_class l = 1;
    for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<mpz_class> r;
    r.reserve(row.size());
    for (const auto& x : row) r.push_back(x.get_num() * (l / x.get_den()));
    out.push_back(std::move(r));
  }
  return out;
}

// Bareiss elimination to row echelon form in place; returns pivot columns.
// Only the first `pivot_cols` columns are eligible as pivots.
std::vector<std::size_t> bareiss_echelon(IntMatrix& m, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < rows; ++c) {
    std::size_t best = rows;
    std::size_t best_bits = 0;
    for (std::size_t i = r; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const std::size_t bits = mpz_sizeinbase(m[i][c].get_mpz_t(), 2);
      if (best == rows || bits > best_bits) {
        best = i;
        best_bits = bits;
      }
    }
    if (best == rows) continue;
    std::swap(m[r], m[best]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class v = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Back substitution on an echelon form for the given assignment of free columns.
Vector back_substitute(const IntMatrix& m, const std::vector<std::size_t>& pivots, std::size_t ncols,
                       Vector x, const std::vector<Scalar>* rhs) {
  for (std::size_t k = pivots.size(); k-- > 0;) {
    const std::size_t c = pivots[k];
    Scalar s = rhs ? (*rhs)[k] : Scalar(0);
    for (std::size_t j = c + 1; j < ncols; ++j)
      if (m[k][j] != 0 && !is_zero(x[j])) s -= Scalar(m[k][j]) * x[j];
    x[c] = s / Scalar(m[k][c]);
  }
  return x;
}

}  // namespace

std::size_t rank(const Matrix& a) {
  if (a.empty()) return 0;
  IntMatrix m = to_integer_rows(a);
  return bareiss_echelon(m, m[0].size()).size();
}

std::size_t rank(const TensorOp& op) { return rank(op.to_dense()); }

std::vector<Vector> nullspace(const Matrix& a) {
  if (a.empty()) return {};
  const std::size_t ncols = a[0].size();
  IntMatrix m = to_integer_rows(a);
  const auto pivots = bareiss_echelon(m, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    Vector x(ncols);
    x[f] = 1;
    basis.push_back(back_substitute(m, pivots, ncols, std::move(x), nullptr));
  }
  return basis;
}

Vector solve_linear(const Matrix& a, std::span<const Scalar> b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve_linear: size mismatch");
  if (a.empty()) return {};
  const std::size_t ncols = a[0].size();
  Matrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  IntMatrix m = to_integer_rows(aug);
  const auto pivots = bareiss_echelon(m, ncols);
  for (std::size_t i = pivots.size(); i < m.size(); ++i)
    if (m[i][ncols] != 0) throw InconsistentSystem("solve_linear: inconsistent system");
  std::vector<Scalar> rhs;
  for (std::size_t k = 0; k < pivots.size(); ++k) rhs.emplace_back(m[k][ncols]);
  return back_substitute(m, pivots, ncols, Vector(ncols), &rhs);
}

// ---------------------------------------------------------------------------

SparseEchelon::Reduction SparseEchelon::reduce(const SparseVec& v) const {
  std::map<std::uint32_t, Scalar> work(v.begin(), v.end());
  Reduction out;
  auto it = work.begin();
  while (it != work.end()) {
    auto p = pivot_of_.find(it->first);
    if (p == pivot_of_.end()) {
      ++it;
      continue;
    }
    const Row& row = rows_[p->second];
    const Scalar coef = it->second;
    for (std::size_t k = 1; k < row.entries.size(); ++k) {
      const auto& [c, x] = row.entries[k];
      auto [w, inserted] = work.try_emplace(c, 0);
      w->second -= coef * x;
      if (is_zero(w->second)) work.erase(w);
    }
    if (track_)
      for (const auto& [tag, x] : row.combo) {
        Scalar& acc = out.combination[tag];
        acc += coef * x;
        if (is_zero(acc)) out.combination.erase(tag);
      }
    it = work.erase(it);
  }
  out.remainder.assign(work.begin(), work.end());
  return out;
}

bool SparseEchelon::insert(const SparseVec& v, std::size_t tag) {
  Reduction red = reduce(v);
  if (red.remainder.empty()) return false;
  Row row;
  const Scalar lead = red.remainder.front().second;
  for (auto& [c, x] : red.remainder) row.entries.emplace_back(c, x / lead);
  if (track_) {
    // row = (v - sum) / lead, where sum is the already-reduced part.
    row.combo[tag] = 1 / lead;
    for (const auto& [t, x] : red.combination) {
      Scalar& acc = row.combo[t];
      acc -= x / lead;
      if (is_zero(acc)) row.combo.erase(t);
    }
  }
  pivot_of_.emplace(row.entries.front().first, rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

}  // namespace qimm
