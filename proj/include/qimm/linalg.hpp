#pragma once

// Exact linear algebra over Q.
//
// Dense routines run fraction-free (Bareiss) elimination on row-scaled
// integer copies. Pivot rule: in the current column, the candidate with the
// largest numerator bit length, ties broken by the lowest row index.

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qimm/exact.hpp"
#include "qimm/tensor.hpp"

namespace qimm {

using Matrix = std::vector<std::vector<Scalar>>;
using Vector = std::vector<Scalar>;

class InconsistentSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::size_t rank(const Matrix& a);
std::size_t rank(const TensorOp& op);

/// Basis of {x : a x = 0}; one vector per free column, in column order.
std::vector<Vector> nullspace(const Matrix& a);

/// One solution of a x = b (free variables set to zero).
/// Throws InconsistentSystem when none exists.
Vector solve_linear(const Matrix& a, std::span<const Scalar> b);

// Incremental row echelon form over sparse rational vectors, with optional
// bookkeeping of how every stored row combines the inserted generators.
class SparseEchelon {
 public:
  using SparseVec = std::vector<std::pair<std::uint32_t, Scalar>>;  // sorted by index
  using Combination = std::map<std::size_t, Scalar>;                 // generator tag -> coefficient

  explicit SparseEchelon(bool track_combinations = false) : track_(track_combinations) {}

  /// Returns true when the vector was independent of the stored rows.
  bool insert(const SparseVec& v, std::size_t tag);

  struct Reduction {
    SparseVec remainder;
    /// v - remainder == sum over tags of coefficient * generator (tracked mode only).
    Combination combination;
  };

  Reduction reduce(const SparseVec& v) const;

  std::size_t rank() const { return rows_.size(); }

 private:
  struct Row {
    SparseVec entries;  // leading coefficient normalized to 1
    Combination combo;
  };

  bool track_;
  std::vector<Row> rows_;
  std::map<std::uint32_t, std::size_t> pivot_of_;  // leading column -> row
};

}  // namespace qimm
