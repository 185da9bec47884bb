#pragma once

// Exact operators on tensor products (C^n)^{⊗s} and the R-matrix toolkit.
//
// Index encoding: a basis vector e_{i_1} ⊗ ... ⊗ e_{i_s} (0-based digits)
// has index sum_k i_k n^{s-k}, i.e. row-major lexicographic with site 1 the
// most significant digit. Every operator equality in the library relies on
// this single convention.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qimm/exact.hpp"

namespace qimm {

enum class SiteKind : std::uint8_t { aux, module };

using Layout = std::vector<SiteKind>;

/// `aux` auxiliary sites followed by `module` module sites.
Layout make_layout(int aux, int module);

/// 1-based site label.
struct SiteIndex {
  int position = 1;
  friend bool operator==(SiteIndex, SiteIndex) = default;
};

struct Triplet {
  std::size_t row;
  std::size_t col;
  Scalar value;
};

// Square exact matrix on n^s dimensions, stored in compressed sparse rows.
// Values are immutable once built; all operations return new operators.
class TensorOp {
 public:
  TensorOp() : TensorOp(1, Layout{}) {}
  /// Zero operator.
  TensorOp(int n, Layout layout);

  static TensorOp identity(int n, Layout layout);
  static TensorOp scalar(int n, Layout layout, const Scalar& s);
  /// Duplicate positions are summed; zeros are dropped.
  static TensorOp from_triplets(int n, Layout layout, std::vector<Triplet> triplets);
  static TensorOp from_dense(int n, Layout layout, const std::vector<std::vector<Scalar>>& rows);

  int n() const { return n_; }
  int num_sites() const { return static_cast<int>(layout_.size()); }
  std::size_t dim() const { return dim_; }
  const Layout& layout() const { return layout_; }
  std::size_t nnz() const { return values_.size(); }
  bool is_zero() const { return values_.empty(); }

  Scalar at(std::size_t row, std::size_t col) const;
  std::span<const std::uint32_t> row_cols(std::size_t row) const;
  std::span<const Scalar> row_values(std::size_t row) const;

  std::vector<std::vector<Scalar>> to_dense() const;
  std::vector<Scalar> apply(std::span<const Scalar> v) const;
  Scalar trace() const;
  TensorOp transpose() const;

  /// Same matrix, new site tags (site count must match).
  TensorOp with_layout(Layout layout) const;

  friend TensorOp operator+(const TensorOp& a, const TensorOp& b);
  friend TensorOp operator-(const TensorOp& a, const TensorOp& b);
  friend TensorOp operator*(const TensorOp& a, const TensorOp& b);
  friend TensorOp operator*(const Scalar& s, const TensorOp& a);
  friend bool operator==(const TensorOp& a, const TensorOp& b);

 private:
  void check_compatible(const TensorOp& other, const char* what) const;

  int n_;
  Layout layout_;
  std::size_t dim_;
  std::vector<std::uint32_t> row_ptr_;
  std::vector<std::uint32_t> cols_;
  std::vector<Scalar> values_;
};

inline bool is_zero(const TensorOp& op) { return op.is_zero(); }

TensorOp commutator(const TensorOp& a, const TensorOp& b);

/// n^s
std::size_t site_dim(int n, int sites);

/// 0-based digit of `index` at 1-based `site` in an s-site space.
int site_digit(std::size_t index, int n, int sites, int site);

// ---------------------------------------------------------------------------
// R-matrix toolkit. All of these act on aux sites.

/// R = q Σ e_ii⊗e_ii + Σ_{i≠j} e_ii⊗e_jj + (q-q^{-1}) Σ_{i<j} e_ij⊗e_ji.
TensorOp build_R(int n, const QConfig& cfg);
/// P = Σ e_ij⊗e_ji.
TensorOp build_P(int n);
/// D = diag(1, q^{-2}, ..., q^{-2n+2}) on one site.
TensorOp build_D(int n, const QConfig& cfg);
/// Ř = P R.
TensorOp build_Rcheck(int n, const QConfig& cfg);
/// Ř^{-1} = Ř - (q - q^{-1}), from the Hecke quadratic relation.
TensorOp build_Rcheck_inverse(int n, const QConfig& cfg);

/// Places `op` (acting on sites.size() sites, in the given order) on the named
/// sites of `target`, identity elsewhere. Throws on duplicate or
/// out-of-range sites.
TensorOp embed(const TensorOp& op, const std::vector<SiteIndex>& sites, const Layout& target);

/// Ř_{k-1}···Ř_1 X Ř_1^{-1}···Ř_{k-1}^{-1}, with Ř_i acting on sites (i, i+1).
/// k = 1 returns X.
TensorOp bar_conjugate(const TensorOp& x, int k, const QConfig& cfg);

/// Partial trace over `over` after multiplying D into each traced site.
/// The result acts on the remaining sites in their original order.
TensorOp q_trace(const TensorOp& op, const std::vector<SiteIndex>& over, const QConfig& cfg);

/// Ordinary partial trace over `over`.
TensorOp partial_trace(const TensorOp& op, const std::vector<SiteIndex>& over);

/// Operator on the remaining sites: entries of `op` with `site` fixed to
/// digit `row` on the left and `col` on the right (1-based digits). For an
/// operator on aux ⊗ module with site = 1 this is the generator block (i, j).
TensorOp site_block(const TensorOp& op, int site, int row, int col);

/// Relabels sites: site p of the result is site perm[p-1] of `op`.
TensorOp permute_sites(const TensorOp& op, const std::vector<int>& perm);

/// Readable dump for failure witnesses.
std::string describe(const TensorOp& op, std::size_t max_entries = 16);

}  // namespace qimm
