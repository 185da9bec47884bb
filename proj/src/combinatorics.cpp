#include "qimm/combinatorics.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qimm {

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] < 0) throw std::invalid_argument("Young diagram rows must be nonnegative");
    if (i > 0 && rows_[i] > rows_[i - 1]) throw std::invalid_argument("Young diagram rows must weakly decrease");
  }
}

int YoungDiagram::size() const {
  int s = 0;
  for (int r : rows_) s += r;
  return s;
}

std::vector<int> YoungDiagram::addable_contents() const {
  std::vector<int> out;
  for (int i = 0; i <= num_rows(); ++i)
    if (i == 0 || row_length(i) < row_length(i - 1)) out.push_back(row_length(i) - i);
  return out;
}

std::string YoungDiagram::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < rows_.size(); ++i) os << (i ? "," : "") << rows_[i];
  os << ")";
  return os.str();
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<YoungDiagram>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<YoungDiagram> partitions(int m) {
  if (m < 0) throw std::invalid_argument("partitions: negative size");
  std::vector<YoungDiagram> out;
  std::vector<int> cur;
  partitions_rec(m, m, cur, out);
  return out;
}

std::vector<YoungDiagram> partitions(int m, int max_rows) {
  std::vector<YoungDiagram> out;
  for (auto& p : partitions(m))
    if (p.num_rows() <= max_rows) out.push_back(std::move(p));
  return out;
}

std::vector<int> Tableau::reading_word() const {
  std::vector<int> w;
  for (const auto& row : filling) w.insert(w.end(), row.begin(), row.end());
  return w;
}

std::string Tableau::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < filling.size(); ++i) {
    if (i) os << "/";
    for (std::size_t j = 0; j < filling[i].size(); ++j) os << (j ? " " : "") << filling[i][j];
  }
  os << "]";
  return os.str();
}

namespace {

bool shape_matches(const Tableau& t) {
  if (static_cast<int>(t.filling.size()) != t.shape.num_rows()) return false;
  for (int i = 0; i < t.shape.num_rows(); ++i)
    if (static_cast<int>(t.filling[static_cast<std::size_t>(i)].size()) != t.shape.row_length(i)) return false;
  return true;
}

}  // namespace

bool is_standard(const Tableau& t) {
  if (!shape_matches(t)) return false;
  const int m = t.shape.size();
  std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
  for (std::size_t i = 0; i < t.filling.size(); ++i)
    for (std::size_t j = 0; j < t.filling[i].size(); ++j) {
      const int v = t.filling[i][j];
      if (v < 1 || v > m || seen[static_cast<std::size_t>(v)]) return false;
      seen[static_cast<std::size_t>(v)] = true;
      if (j > 0 && t.filling[i][j - 1] >= v) return false;
      if (i > 0 && t.filling[i - 1][j] >= v) return false;
    }
  return true;
}

bool is_semistandard(const Tableau& t, int n) {
  if (!shape_matches(t)) return false;
  for (std::size_t i = 0; i < t.filling.size(); ++i)
    for (std::size_t j = 0; j < t.filling[i].size(); ++j) {
      const int v = t.filling[i][j];
      if (v < 1 || v > n) return false;
      if (j > 0 && t.filling[i][j - 1] > v) return false;
      if (i > 0 && t.filling[i - 1][j] >= v) return false;
    }
  return true;
}

std::vector<StandardTableau> standard_tableaux(const YoungDiagram& shape) {
  // Place 1..m one at a time into outer corners of the growing diagram.
  std::vector<StandardTableau> out;
  const int m = shape.size();
  Tableau cur{shape, std::vector<std::vector<int>>(static_cast<std::size_t>(shape.num_rows()))};
  auto rec = [&](auto&& self, int k) -> void {
    if (k > m) {
      out.push_back(cur);
      return;
    }
    for (int i = 0; i < shape.num_rows(); ++i) {
      auto& row = cur.filling[static_cast<std::size_t>(i)];
      const int len = static_cast<int>(row.size());
      if (len >= shape.row_length(i)) continue;
      if (i > 0 && static_cast<int>(cur.filling[static_cast<std::size_t>(i - 1)].size()) <= len) continue;
      row.push_back(k);
      self(self, k + 1);
      row.pop_back();
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end(),
            [](const Tableau& a, const Tableau& b) { return a.reading_word() < b.reading_word(); });
  return out;
}

std::vector<SemistandardTableau> semistandard_tableaux(const YoungDiagram& shape, int n) {
  std::vector<SemistandardTableau> out;
  if (shape.num_rows() > n) return out;
  Tableau cur{shape, {}};
  for (int i = 0; i < shape.num_rows(); ++i) cur.filling.emplace_back(static_cast<std::size_t>(shape.row_length(i)), 0);
  // Fill boxes in reading order; each box is bounded below by its left and upper neighbours.
  std::vector<std::pair<int, int>> boxes;
  for (int i = 0; i < shape.num_rows(); ++i)
    for (int j = 0; j < shape.row_length(i); ++j) boxes.emplace_back(i, j);
  auto rec = [&](auto&& self, std::size_t b) -> void {
    if (b == boxes.size()) {
      out.push_back(cur);
      return;
    }
    const auto [i, j] = boxes[b];
    int lo = 1;
    if (j > 0) lo = std::max(lo, cur.filling[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)]);
    if (i > 0) lo = std::max(lo, cur.filling[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] + 1);
    for (int v = lo; v <= n; ++v) {
      cur.filling[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
      self(self, b + 1);
    }
  };
  rec(rec, 0);
  return out;  // reading-order recursion already yields lexicographic order
}

std::vector<int> contents(const StandardTableau& u) {
  std::vector<int> c(static_cast<std::size_t>(u.shape.size()));
  for (std::size_t i = 0; i < u.filling.size(); ++i)
    for (std::size_t j = 0; j < u.filling[i].size(); ++j)
      c[static_cast<std::size_t>(u.filling[i][j] - 1)] = static_cast<int>(j) - static_cast<int>(i);
  return c;
}

StandardTableau remove_largest(const StandardTableau& u) {
  const int m = u.shape.size();
  if (m == 0) throw std::invalid_argument("remove_largest: empty tableau");
  Tableau v = u;
  for (auto& row : v.filling)
    if (!row.empty() && row.back() == m) row.pop_back();
  while (!v.filling.empty() && v.filling.back().empty()) v.filling.pop_back();
  std::vector<int> rows;
  for (const auto& row : v.filling) rows.push_back(static_cast<int>(row.size()));
  v.shape = YoungDiagram(rows);
  return v;
}

Scalar content_factor(const YoungDiagram& shape, const QConfig& cfg) {
  int exponent = 0;
  for (int i = 0; i < shape.num_rows(); ++i)
    for (int j = 0; j < shape.row_length(i); ++j) exponent -= 2 * (j - i);
  return cfg.power(exponent);
}

Scalar factorial_schur(const YoungDiagram& shape, const std::vector<Scalar>& x, const SequenceRule& a) {
  const int n = static_cast<int>(x.size());
  Scalar total = 0;
  for (const auto& t : semistandard_tableaux(shape, n)) {
    Scalar term = 1;
    for (std::size_t i = 0; i < t.filling.size(); ++i)
      for (std::size_t j = 0; j < t.filling[i].size(); ++j) {
        const int v = t.filling[i][j];
        const int c = static_cast<int>(j) - static_cast<int>(i);
        term *= x[static_cast<std::size_t>(v - 1)] + a(v + c);
      }
    total += term;
  }
  return total;
}

long long ssyt_count(const YoungDiagram& shape, int n) {
  return static_cast<long long>(semistandard_tableaux(shape, n).size());
}

}  // namespace qimm
