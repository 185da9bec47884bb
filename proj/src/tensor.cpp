#include "qimm/tensor.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace qimm {

Layout make_layout(int aux, int module) {
  Layout out(static_cast<std::size_t>(aux), SiteKind::aux);
  out.insert(out.end(), static_cast<std::size_t>(module), SiteKind::module);
  return out;
}

std::size_t site_dim(int n, int sites) {
  std::size_t d = 1;
  for (int i = 0; i < sites; ++i) d *= static_cast<std::size_t>(n);
  return d;
}

int site_digit(std::size_t index, int n, int sites, int site) {
  std::size_t stride = site_dim(n, sites - site);
  return static_cast<int>((index / stride) % static_cast<std::size_t>(n));
}

TensorOp::TensorOp(int n, Layout layout) : n_(n), layout_(std::move(layout)) {
  if (n < 1) throw std::invalid_argument("site dimension must be positive");
  dim_ = site_dim(n_, num_sites());
  if (dim_ > std::numeric_limits<std::uint32_t>::max() / 2)
    throw std::invalid_argument("tensor space too large");
  row_ptr_.assign(dim_ + 1, 0);
}

TensorOp TensorOp::identity(int n, Layout layout) { return scalar(n, std::move(layout), Scalar(1)); }

TensorOp TensorOp::scalar(int n, Layout layout, const Scalar& s) {
  TensorOp out(n, std::move(layout));
  if (qimm::is_zero(s)) return out;
  out.cols_.resize(out.dim_);
  out.values_.assign(out.dim_, s);
  for (std::size_t i = 0; i < out.dim_; ++i) {
    out.cols_[i] = static_cast<std::uint32_t>(i);
    out.row_ptr_[i + 1] = static_cast<std::uint32_t>(i + 1);
  }
  return out;
}

TensorOp TensorOp::from_triplets(int n, Layout layout, std::vector<Triplet> triplets) {
  TensorOp out(n, std::move(layout));
  std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  std::size_t i = 0;
  while (i < triplets.size()) {
    const std::size_t r = triplets[i].row, c = triplets[i].col;
    if (r >= out.dim_ || c >= out.dim_) throw std::out_of_range("triplet outside operator");
    Scalar v = triplets[i].value;
    std::size_t j = i + 1;
    for (; j < triplets.size() && triplets[j].row == r && triplets[j].col == c; ++j) v += triplets[j].value;
    if (!qimm::is_zero(v)) {
      out.cols_.push_back(static_cast<std::uint32_t>(c));
      out.values_.push_back(std::move(v));
      out.row_ptr_[r + 1]++;
    }
    i = j;
  }
  for (std::size_t r = 0; r < out.dim_; ++r) out.row_ptr_[r + 1] += out.row_ptr_[r];
  return out;
}

TensorOp TensorOp::from_dense(int n, Layout layout, const std::vector<std::vector<Scalar>>& rows) {
  std::vector<Triplet> t;
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      if (!qimm::is_zero(rows[r][c])) t.push_back({r, c, rows[r][c]});
  TensorOp out = from_triplets(n, std::move(layout), std::move(t));
  if (rows.size() != out.dim_) throw std::invalid_argument("dense matrix has wrong size");
  return out;
}

Scalar TensorOp::at(std::size_t row, std::size_t col) const {
  auto cs = row_cols(row);
  auto it = std::lower_bound(cs.begin(), cs.end(), static_cast<std::uint32_t>(col));
  if (it == cs.end() || *it != col) return Scalar(0);
  return values_[row_ptr_[row] + static_cast<std::size_t>(it - cs.begin())];
}

std::span<const std::uint32_t> TensorOp::row_cols(std::size_t row) const {
  return {cols_.data() + row_ptr_[row], cols_.data() + row_ptr_[row + 1]};
}

std::span<const Scalar> TensorOp::row_values(std::size_t row) const {
  return {values_.data() + row_ptr_[row], values_.data() + row_ptr_[row + 1]};
}

std::vector<std::vector<Scalar>> TensorOp::to_dense() const {
  std::vector<std::vector<Scalar>> out(dim_, std::vector<Scalar>(dim_));
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) out[r][cols_[k]] = values_[k];
  return out;
}

std::vector<Scalar> TensorOp::apply(std::span<const Scalar> v) const {
  if (v.size() != dim_) throw std::invalid_argument("vector size does not match operator");
  std::vector<Scalar> out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k)
      if (!qimm::is_zero(v[cols_[k]])) out[r] += values_[k] * v[cols_[k]];
  return out;
}

Scalar TensorOp::trace() const {
  Scalar t = 0;
  for (std::size_t r = 0; r < dim_; ++r) t += at(r, r);
  return t;
}

TensorOp TensorOp::transpose() const {
  std::vector<Triplet> t;
  t.reserve(nnz());
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) t.push_back({cols_[k], r, values_[k]});
  return from_triplets(n_, layout_, std::move(t));
}

TensorOp TensorOp::with_layout(Layout layout) const {
  if (layout.size() != layout_.size()) throw std::invalid_argument("layout site count mismatch");
  TensorOp out = *this;
  out.layout_ = std::move(layout);
  return out;
}

void TensorOp::check_compatible(const TensorOp& other, const char* what) const {
  if (n_ != other.n_ || layout_ != other.layout_)
    throw std::invalid_argument(std::string("incompatible operators in ") + what);
}

namespace {

// Merges two sorted rows with coefficients (1, sign).
TensorOp add_scaled(const TensorOp& a, const TensorOp& b, int sign) {
  std::vector<Triplet> t;
  t.reserve(a.nnz() + b.nnz());
  for (std::size_t r = 0; r < a.dim(); ++r) {
    auto ac = a.row_cols(r);
    auto av = a.row_values(r);
    auto bc = b.row_cols(r);
    auto bv = b.row_values(r);
    for (std::size_t k = 0; k < ac.size(); ++k) t.push_back({r, ac[k], av[k]});
    for (std::size_t k = 0; k < bc.size(); ++k) t.push_back({r, bc[k], sign > 0 ? Scalar(bv[k]) : Scalar(-bv[k])});
  }
  return TensorOp::from_triplets(a.n(), a.layout(), std::move(t));
}

}  // namespace

TensorOp operator+(const TensorOp& a, const TensorOp& b) {
  a.check_compatible(b, "addition");
  return add_scaled(a, b, 1);
}

TensorOp operator-(const TensorOp& a, const TensorOp& b) {
  a.check_compatible(b, "subtraction");
  return add_scaled(a, b, -1);
}

TensorOp operator*(const Scalar& s, const TensorOp& a) {
  TensorOp out(a.n_, a.layout_);
  if (qimm::is_zero(s)) return out;
  out.row_ptr_ = a.row_ptr_;
  out.cols_ = a.cols_;
  out.values_.reserve(a.values_.size());
  for (const auto& v : a.values_) out.values_.push_back(s * v);
  return out;
}

// Gustavson row-by-row product with a dense accumulator.
TensorOp operator*(const TensorOp& a, const TensorOp& b) {
  a.check_compatible(b, "multiplication");
  TensorOp out(a.n_, a.layout_);
  const std::size_t d = a.dim_;
  std::vector<Scalar> acc(d);
  std::vector<std::size_t> stamp(d, std::numeric_limits<std::size_t>::max());
  std::vector<std::uint32_t> touched;
  for (std::size_t r = 0; r < d; ++r) {
    touched.clear();
    for (std::size_t ka = a.row_ptr_[r]; ka < a.row_ptr_[r + 1]; ++ka) {
      const std::uint32_t mid = a.cols_[ka];
      const Scalar& av = a.values_[ka];
      for (std::size_t kb = b.row_ptr_[mid]; kb < b.row_ptr_[mid + 1]; ++kb) {
        const std::uint32_t c = b.cols_[kb];
        if (stamp[c] != r) {
          stamp[c] = r;
          acc[c] = av * b.values_[kb];
          touched.push_back(c);
        } else {
          acc[c] += av * b.values_[kb];
        }
      }
    }
    std::sort(touched.begin(), touched.end());
    for (std::uint32_t c : touched) {
      if (qimm::is_zero(acc[c])) continue;
      out.cols_.push_back(c);
      out.values_.push_back(acc[c]);
    }
    out.row_ptr_[r + 1] = static_cast<std::uint32_t>(out.cols_.size());
  }
  return out;
}

bool operator==(const TensorOp& a, const TensorOp& b) {
  return a.n_ == b.n_ && a.layout_ == b.layout_ && a.row_ptr_ == b.row_ptr_ && a.cols_ == b.cols_ &&
         a.values_ == b.values_;
}

TensorOp commutator(const TensorOp& a, const TensorOp& b) { return a * b - b * a; }

// ---------------------------------------------------------------------------

TensorOp build_R(int n, const QConfig& cfg) {
  if (n < 1) throw std::invalid_argument("build_R: n must be >= 1");
  const Scalar& q = cfg.q();
  std::vector<Triplet> t;
  auto idx = [n](int i, int j) { return static_cast<std::size_t>(i * n + j); };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.push_back({idx(i, j), idx(i, j), i == j ? q : Scalar(1)});
  // e_ij ⊗ e_ji maps e_j ⊗ e_i to e_i ⊗ e_j.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) t.push_back({idx(i, j), idx(j, i), cfg.q_minus_qinv()});
  return TensorOp::from_triplets(n, make_layout(2, 0), std::move(t));
}

TensorOp build_P(int n) {
  std::vector<Triplet> t;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t.push_back({static_cast<std::size_t>(i * n + j), static_cast<std::size_t>(j * n + i), Scalar(1)});
  return TensorOp::from_triplets(n, make_layout(2, 0), std::move(t));
}

TensorOp build_D(int n, const QConfig& cfg) {
  std::vector<Triplet> t;
  for (int i = 0; i < n; ++i) t.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(i), cfg.power(-2 * i)});
  return TensorOp::from_triplets(n, make_layout(1, 0), std::move(t));
}

TensorOp build_Rcheck(int n, const QConfig& cfg) { return build_P(n) * build_R(n, cfg); }

TensorOp build_Rcheck_inverse(int n, const QConfig& cfg) {
  return build_Rcheck(n, cfg) - TensorOp::scalar(n, make_layout(2, 0), cfg.q_minus_qinv());
}

TensorOp embed(const TensorOp& op, const std::vector<SiteIndex>& sites, const Layout& target) {
  const int n = op.n();
  const int total = static_cast<int>(target.size());
  const int k = static_cast<int>(sites.size());
  if (k != op.num_sites()) throw std::invalid_argument("embed: site list does not match operator");
  std::vector<std::size_t> stride(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    const int p = sites[static_cast<std::size_t>(i)].position;
    if (p < 1 || p > total) throw std::out_of_range("embed: site out of range");
    for (int j = 0; j < i; ++j)
      if (sites[static_cast<std::size_t>(j)].position == p) throw std::invalid_argument("embed: duplicate site");
    stride[static_cast<std::size_t>(i)] = site_dim(n, total - p);
  }
  // Offset contributed by each sub-index on the chosen sites.
  const std::size_t sub_dim = op.dim();
  std::vector<std::size_t> offset(sub_dim);
  for (std::size_t s = 0; s < sub_dim; ++s) {
    std::size_t off = 0;
    for (int i = 0; i < k; ++i) off += static_cast<std::size_t>(site_digit(s, n, k, i + 1)) * stride[static_cast<std::size_t>(i)];
    offset[s] = off;
  }
  const std::size_t full = site_dim(n, total);
  std::vector<Triplet> t;
  t.reserve(op.nnz() * (full / std::max<std::size_t>(sub_dim, 1)));
  for (std::size_t r = 0; r < full; ++r) {
    std::size_t s = 0;
    for (int i = 0; i < k; ++i)
      s = s * static_cast<std::size_t>(n) + (r / stride[static_cast<std::size_t>(i)]) % static_cast<std::size_t>(n);
    const std::size_t base = r - offset[s];
    auto cs = op.row_cols(s);
    auto vs = op.row_values(s);
    for (std::size_t e = 0; e < cs.size(); ++e) t.push_back({r, base + offset[cs[e]], vs[e]});
  }
  return TensorOp::from_triplets(n, target, std::move(t));
}

TensorOp bar_conjugate(const TensorOp& x, int k, const QConfig& cfg) {
  if (k < 1 || k > x.num_sites()) throw std::out_of_range("bar_conjugate: k out of range");
  TensorOp out = x;
  if (k == 1) return out;
  const TensorOp rc = build_Rcheck(x.n(), cfg);
  const TensorOp rci = build_Rcheck_inverse(x.n(), cfg);
  for (int i = 1; i < k; ++i) {
    std::vector<SiteIndex> at{{i}, {i + 1}};
    out = embed(rc, at, x.layout()) * out * embed(rci, at, x.layout());
  }
  return out;
}

namespace {

TensorOp trace_sites(const TensorOp& op, const std::vector<SiteIndex>& over, const QConfig* cfg) {
  const int n = op.n();
  const int total = op.num_sites();
  std::vector<bool> traced(static_cast<std::size_t>(total), false);
  for (SiteIndex s : over) {
    if (s.position < 1 || s.position > total) throw std::out_of_range("q_trace: site out of range");
    if (traced[static_cast<std::size_t>(s.position - 1)]) throw std::invalid_argument("q_trace: duplicate site");
    traced[static_cast<std::size_t>(s.position - 1)] = true;
  }
  Layout rest;
  for (int p = 0; p < total; ++p)
    if (!traced[static_cast<std::size_t>(p)]) rest.push_back(op.layout()[static_cast<std::size_t>(p)]);
  // Decompose each index into (kept index, traced digits, D weight).
  const std::size_t d = op.dim();
  std::vector<std::size_t> kept(d), tr(d);
  std::vector<int> weight_exp(d);
  for (std::size_t i = 0; i < d; ++i) {
    std::size_t a = 0, b = 0;
    int w = 0;
    for (int p = 1; p <= total; ++p) {
      const int dig = site_digit(i, n, total, p);
      if (traced[static_cast<std::size_t>(p - 1)]) {
        b = b * static_cast<std::size_t>(n) + static_cast<std::size_t>(dig);
        w -= 2 * dig;
      } else {
        a = a * static_cast<std::size_t>(n) + static_cast<std::size_t>(dig);
      }
    }
    kept[i] = a;
    tr[i] = b;
    weight_exp[i] = w;
  }
  std::vector<Triplet> t;
  for (std::size_t r = 0; r < d; ++r) {
    auto cs = op.row_cols(r);
    auto vs = op.row_values(r);
    for (std::size_t e = 0; e < cs.size(); ++e)
      if (tr[cs[e]] == tr[r])
        t.push_back({kept[r], kept[cs[e]], cfg ? Scalar(cfg->power(weight_exp[r]) * vs[e]) : vs[e]});
  }
  return TensorOp::from_triplets(n, std::move(rest), std::move(t));
}

}  // namespace

TensorOp q_trace(const TensorOp& op, const std::vector<SiteIndex>& over, const QConfig& cfg) {
  return trace_sites(op, over, &cfg);
}

TensorOp partial_trace(const TensorOp& op, const std::vector<SiteIndex>& over) {
  return trace_sites(op, over, nullptr);
}

TensorOp site_block(const TensorOp& op, int site, int row, int col) {
  const int n = op.n();
  const int total = op.num_sites();
  if (site < 1 || site > total) throw std::out_of_range("site_block: site out of range");
  if (row < 1 || row > n || col < 1 || col > n) throw std::out_of_range("site_block: digit out of range");
  Layout rest = op.layout();
  rest.erase(rest.begin() + (site - 1));
  const std::size_t stride = site_dim(n, total - site);
  auto split = [&](std::size_t i, int& digit) {
    digit = static_cast<int>((i / stride) % static_cast<std::size_t>(n));
    const std::size_t high = i / (stride * static_cast<std::size_t>(n));
    return high * stride + i % stride;
  };
  std::vector<Triplet> t;
  for (std::size_t r = 0; r < op.dim(); ++r) {
    int rd = 0;
    const std::size_t rr = split(r, rd);
    if (rd != row - 1) continue;
    auto cs = op.row_cols(r);
    auto vs = op.row_values(r);
    for (std::size_t e = 0; e < cs.size(); ++e) {
      int cd = 0;
      const std::size_t cc = split(cs[e], cd);
      if (cd == col - 1) t.push_back({rr, cc, vs[e]});
    }
  }
  return TensorOp::from_triplets(n, std::move(rest), std::move(t));
}

TensorOp permute_sites(const TensorOp& op, const std::vector<int>& perm) {
  const int n = op.n();
  const int total = op.num_sites();
  if (static_cast<int>(perm.size()) != total) throw std::invalid_argument("permute_sites: wrong permutation size");
  std::vector<bool> seen(static_cast<std::size_t>(total), false);
  Layout layout(static_cast<std::size_t>(total));
  for (int p = 0; p < total; ++p) {
    const int src = perm[static_cast<std::size_t>(p)];
    if (src < 1 || src > total || seen[static_cast<std::size_t>(src - 1)])
      throw std::invalid_argument("permute_sites: not a permutation");
    seen[static_cast<std::size_t>(src - 1)] = true;
    layout[static_cast<std::size_t>(p)] = op.layout()[static_cast<std::size_t>(src - 1)];
  }
  std::vector<std::size_t> map(op.dim());
  for (std::size_t i = 0; i < op.dim(); ++i) {
    std::size_t j = 0;
    for (int p = 1; p <= total; ++p)
      j = j * static_cast<std::size_t>(n) + static_cast<std::size_t>(site_digit(i, n, total, perm[static_cast<std::size_t>(p - 1)]));
    map[i] = j;
  }
  std::vector<Triplet> t;
  t.reserve(op.nnz());
  for (std::size_t r = 0; r < op.dim(); ++r) {
    auto cs = op.row_cols(r);
    auto vs = op.row_values(r);
    for (std::size_t e = 0; e < cs.size(); ++e) t.push_back({map[r], map[cs[e]], vs[e]});
  }
  return TensorOp::from_triplets(n, std::move(layout), std::move(t));
}

std::string describe(const TensorOp& op, std::size_t max_entries) {
  std::ostringstream os;
  os << "TensorOp(n=" << op.n() << ", sites=" << op.num_sites() << ", nnz=" << op.nnz() << ")";
  std::size_t shown = 0;
  for (std::size_t r = 0; r < op.dim() && shown < max_entries; ++r) {
    auto cs = op.row_cols(r);
    auto vs = op.row_values(r);
    for (std::size_t e = 0; e < cs.size() && shown < max_entries; ++e, ++shown)
      os << " [" << r << "," << cs[e] << "]=" << to_string(vs[e]);
  }
  if (shown < op.nnz()) os << " ...";
  return os.str();
}

}  // namespace qimm
