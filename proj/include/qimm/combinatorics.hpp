#pragma once

// Young diagrams, tableaux, contents and factorial Schur polynomials.

#include <functional>
#include <string>
#include <vector>

#include "qimm/exact.hpp"

namespace qimm {

class YoungDiagram {
 public:
  YoungDiagram() = default;
  /// Trailing zero rows are dropped. Throws if rows are not weakly decreasing
  /// or negative.
  explicit YoungDiagram(std::vector<int> rows);

  const std::vector<int>& rows() const { return rows_; }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  int size() const;
  int row_length(int i) const { return i < num_rows() ? rows_[static_cast<std::size_t>(i)] : 0; }

  /// Contents j - i of the boxes where a box can be added (0-based rows/cols).
  std::vector<int> addable_contents() const;

  std::string str() const;

  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
  friend auto operator<=>(const YoungDiagram&, const YoungDiagram&) = default;

 private:
  std::vector<int> rows_;
};

/// All partitions of m, in reverse lexicographic order ((m) first).
std::vector<YoungDiagram> partitions(int m);
/// Partitions of m with at most `max_rows` rows.
std::vector<YoungDiagram> partitions(int m, int max_rows);

// Tableau of a diagram: filling[i][j] is the entry in row i, column j.
struct Tableau {
  YoungDiagram shape;
  std::vector<std::vector<int>> filling;

  /// Row-reading word: rows top to bottom, each left to right.
  std::vector<int> reading_word() const;
  std::string str() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;
};

using StandardTableau = Tableau;
using SemistandardTableau = Tableau;

bool is_standard(const Tableau& t);
bool is_semistandard(const Tableau& t, int n);

/// Every standard filling, sorted lexicographically by reading word.
std::vector<StandardTableau> standard_tableaux(const YoungDiagram& shape);

/// Semistandard fillings with entries in {1..n}, sorted by reading word.
std::vector<SemistandardTableau> semistandard_tableaux(const YoungDiagram& shape, int n);

/// c_k(U) for k = 1..m: column - row of the box holding k.
std::vector<int> contents(const StandardTableau& u);

/// The tableau with the box holding the largest entry removed.
StandardTableau remove_largest(const StandardTableau& u);

/// a_μ = ∏_{α ∈ μ} q^{-2c(α)}.
Scalar content_factor(const YoungDiagram& shape, const QConfig& cfg);

using SequenceRule = std::function<Scalar(int)>;

/// s_μ(x | a) = Σ_T ∏_α (x_{T(α)} + a_{T(α)+c(α)}) over semistandard T with
/// entries ≤ n = x.size(). Zero when the shape has more than n rows.
Scalar factorial_schur(const YoungDiagram& shape, const std::vector<Scalar>& x, const SequenceRule& a);

/// Number of semistandard tableaux with entries ≤ n.
long long ssyt_count(const YoungDiagram& shape, int n);

}  // namespace qimm
