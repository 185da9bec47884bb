#include "qimm/weyl.hpp"

#include <algorithm>
#include <sstream>

#include "qimm/hecke.hpp"

namespace qimm {

// ---------------------------------------------------------------------------
// Alphabet

Alphabet::Alphabet(int n) : n_(n) {
  if (n < 1 || 2 * n * n > 256) throw std::invalid_argument("Alphabet: unsupported n");
}

Letter Alphabet::m(int i, int j) const { return static_cast<Letter>((i - 1) * n_ + (j - 1)); }

Letter Alphabet::d(int i, int j) const { return static_cast<Letter>(n_ * n_ + (i - 1) * n_ + (j - 1)); }

Letter Alphabet::swapped(Letter x) const {
  const int nn = n_ * n_;
  return static_cast<Letter>(is_m(x) ? x + nn : x - nn);
}

std::string Alphabet::name(Letter x) const {
  return std::string(is_m(x) ? "m" : "d") + std::to_string(row(x) + 1) + std::to_string(col(x) + 1);
}

// ---------------------------------------------------------------------------
// FreeElement

FreeElement FreeElement::constant(const Scalar& c) { return word({}, c); }

FreeElement FreeElement::word(Word w, const Scalar& c) {
  FreeElement x;
  x.add_term(w, c);
  return x;
}

void FreeElement::add_term(const Word& w, const Scalar& c) {
  if (qimm::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (qimm::is_zero(it->second)) terms_.erase(it);
}

int FreeElement::degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.size()); }

FreeElement FreeElement::homogeneous_part(int length) const {
  FreeElement out;
  for (const auto& [w, c] : terms_)
    if (static_cast<int>(w.size()) == length) out.terms_.emplace(w, c);
  return out;
}

std::string FreeElement::str(const Alphabet& a, std::size_t max_terms) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  std::size_t shown = 0;
  for (const auto& [w, c] : terms_) {
    if (shown == max_terms) {
      os << " + ... (" << terms_.size() << " terms)";
      break;
    }
    if (shown++) os << " + ";
    os << "(" << c.get_str() << ")";
    for (Letter x : w) os << "*" << a.name(x);
  }
  return os.str();
}

FreeElement& FreeElement::operator+=(const FreeElement& b) {
  for (const auto& [w, c] : b.terms_) add_term(w, c);
  return *this;
}

FreeElement operator+(FreeElement a, const FreeElement& b) { return a += b; }

FreeElement operator-(FreeElement a, const FreeElement& b) {
  for (const auto& [w, c] : b.terms_) a.add_term(w, -c);
  return a;
}

FreeElement operator*(const FreeElement& a, const FreeElement& b) {
  FreeElement out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ca * cb);
    }
  return out;
}

FreeElement operator*(const Scalar& s, const FreeElement& a) {
  FreeElement out;
  if (is_zero(s)) return out;
  for (const auto& [w, c] : a.terms_) out.terms_.emplace(w, s * c);
  return out;
}

Scalar evaluate(const FreeElement& x, const std::vector<Scalar>& letter_values) {
  Scalar total = 0;
  for (const auto& [w, c] : x.terms()) {
    Scalar t = c;
    for (Letter l : w) t *= letter_values.at(l);
    total += t;
  }
  return total;
}

FreeElement map_letters(const FreeElement& x, const std::vector<Letter>& image) {
  FreeElement out;
  for (const auto& [w, c] : x.terms()) {
    Word v;
    v.reserve(w.size());
    for (Letter l : w) v.push_back(image.at(l));
    out.add_term(v, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// FreeMatrix

FreeMatrix::FreeMatrix(int n, int sites)
    : n_(n), sites_(sites), dim_(site_dim(n, sites)), entries_(dim_ * dim_) {}

FreeMatrix FreeMatrix::from_op(const TensorOp& op) {
  FreeMatrix out(op.n(), op.num_sites());
  for (std::size_t r = 0; r < op.dim(); ++r) {
    auto cols = op.row_cols(r);
    auto vals = op.row_values(r);
    for (std::size_t k = 0; k < cols.size(); ++k) out.at(r, cols[k]) = FreeElement::constant(vals[k]);
  }
  return out;
}

FreeMatrix FreeMatrix::identity(int n, int sites) {
  FreeMatrix out(n, sites);
  for (std::size_t i = 0; i < out.dim_; ++i) out.at(i, i) = FreeElement::constant(1);
  return out;
}

FreeMatrix FreeMatrix::generators_m(const Alphabet& a) {
  FreeMatrix out(a.n(), 1);
  for (int i = 1; i <= a.n(); ++i)
    for (int j = 1; j <= a.n(); ++j)
      out.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = FreeElement::word({a.m(i, j)});
  return out;
}

FreeMatrix FreeMatrix::generators_d(const Alphabet& a) {
  FreeMatrix out(a.n(), 1);
  for (int i = 1; i <= a.n(); ++i)
    for (int j = 1; j <= a.n(); ++j)
      out.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = FreeElement::word({a.d(i, j)});
  return out;
}

namespace {

void check_same_shape(const FreeMatrix& a, const FreeMatrix& b) {
  if (a.n() != b.n() || a.sites() != b.sites()) throw std::invalid_argument("FreeMatrix: shape mismatch");
}

}  // namespace

FreeMatrix operator+(const FreeMatrix& a, const FreeMatrix& b) {
  check_same_shape(a, b);
  FreeMatrix out = a;
  for (std::size_t i = 0; i < a.dim_ * a.dim_; ++i) out.entries_[i] += b.entries_[i];
  return out;
}

FreeMatrix operator-(const FreeMatrix& a, const FreeMatrix& b) { return a + Scalar(-1) * b; }

FreeMatrix operator*(const FreeMatrix& a, const FreeMatrix& b) {
  check_same_shape(a, b);
  FreeMatrix out(a.n_, a.sites_);
  for (std::size_t i = 0; i < a.dim_; ++i)
    for (std::size_t k = 0; k < a.dim_; ++k) {
      const FreeElement& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < a.dim_; ++j) {
        const FreeElement& y = b.at(k, j);
        if (!y.is_zero()) out.at(i, j) += x * y;
      }
    }
  return out;
}

FreeMatrix operator*(const FreeMatrix& a, const TensorOp& b) {
  if (a.n_ != b.n() || a.dim_ != b.dim()) throw std::invalid_argument("FreeMatrix: shape mismatch");
  FreeMatrix out(a.n_, a.sites_);
  for (std::size_t i = 0; i < a.dim_; ++i)
    for (std::size_t k = 0; k < a.dim_; ++k) {
      const FreeElement& x = a.at(i, k);
      if (x.is_zero()) continue;
      auto cols = b.row_cols(k);
      auto vals = b.row_values(k);
      for (std::size_t t = 0; t < cols.size(); ++t) out.at(i, cols[t]) += vals[t] * x;
    }
  return out;
}

FreeMatrix operator*(const TensorOp& a, const FreeMatrix& b) {
  if (b.n_ != a.n() || b.dim_ != a.dim()) throw std::invalid_argument("FreeMatrix: shape mismatch");
  FreeMatrix out(b.n_, b.sites_);
  for (std::size_t i = 0; i < b.dim_; ++i) {
    auto cols = a.row_cols(i);
    auto vals = a.row_values(i);
    for (std::size_t t = 0; t < cols.size(); ++t)
      for (std::size_t j = 0; j < b.dim_; ++j) {
        const FreeElement& y = b.at(cols[t], j);
        if (!y.is_zero()) out.at(i, j) += vals[t] * y;
      }
  }
  return out;
}

FreeMatrix operator*(const Scalar& s, const FreeMatrix& a) {
  FreeMatrix out(a.n_, a.sites_);
  for (std::size_t i = 0; i < a.dim_ * a.dim_; ++i) out.entries_[i] = s * a.entries_[i];
  return out;
}

FreeMatrix embed_single(const FreeMatrix& x, int site, int sites) {
  if (x.sites() != 1 || site < 1 || site > sites) throw std::invalid_argument("embed_single: bad site");
  const int n = x.n();
  FreeMatrix out(n, sites);
  const std::size_t dim = out.dim();
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) {
      bool rest_equal = true;
      for (int s = 1; s <= sites && rest_equal; ++s)
        if (s != site && site_digit(r, n, sites, s) != site_digit(c, n, sites, s)) rest_equal = false;
      if (!rest_equal) continue;
      const FreeElement& e = x.at(static_cast<std::size_t>(site_digit(r, n, sites, site)),
                                  static_cast<std::size_t>(site_digit(c, n, sites, site)));
      if (!e.is_zero()) out.at(r, c) = e;
    }
  return out;
}

FreeMatrix barred(const FreeMatrix& x, int k, int sites, const QConfig& cfg) {
  const int n = x.n();
  const Layout layout = make_layout(sites, 0);
  FreeMatrix out = embed_single(x, 1, sites);
  for (int i = 1; i < k; ++i) {
    const std::vector<SiteIndex> at{{i}, {i + 1}};
    out = embed(build_Rcheck(n, cfg), at, layout) * out * embed(build_Rcheck_inverse(n, cfg), at, layout);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Relations

std::size_t RelationSet::count(RelationFamily f) const {
  return static_cast<std::size_t>(std::count(family.begin(), family.end(), f));
}

namespace {

std::string pair_label(std::size_t idx, int n) {
  return "(" + std::to_string(idx / static_cast<std::size_t>(n) + 1) + "," +
         std::to_string(idx % static_cast<std::size_t>(n) + 1) + ")";
}

void collect(RelationSet& rels, const FreeMatrix& diff, RelationFamily f, const char* tag) {
  for (std::size_t r = 0; r < diff.dim(); ++r)
    for (std::size_t c = 0; c < diff.dim(); ++c) {
      const FreeElement& e = diff.at(r, c);
      if (e.is_zero()) continue;
      rels.elements.push_back(e);
      rels.family.push_back(f);
      rels.labels.push_back(std::string(tag) + "[" + pair_label(r, rels.n) + "," + pair_label(c, rels.n) + "]");
    }
}

FreeMatrix braided_difference(const FreeMatrix& x, const TensorOp& braid) {
  const FreeMatrix x1 = embed_single(x, 1, 2);
  return braid * x1 * braid * x1 - x1 * braid * x1 * braid;
}

}  // namespace

std::vector<FreeElement> braided_relation_entries(const FreeMatrix& x, const TensorOp& braid) {
  const FreeMatrix diff = braided_difference(x, braid);
  std::vector<FreeElement> out;
  for (std::size_t r = 0; r < diff.dim(); ++r)
    for (std::size_t c = 0; c < diff.dim(); ++c)
      if (!diff.at(r, c).is_zero()) out.push_back(diff.at(r, c));
  return out;
}

RelationSet relation_generators(int n, const QConfig& cfg) {
  const Alphabet a(n);
  RelationSet rels;
  rels.n = n;
  const TensorOp rc = build_Rcheck(n, cfg);
  const TensorOp rci = build_Rcheck_inverse(n, cfg);
  const FreeMatrix m = FreeMatrix::generators_m(a);
  const FreeMatrix d = FreeMatrix::generators_d(a);
  collect(rels, braided_difference(m, rc), RelationFamily::mm, "mm");
  collect(rels, braided_difference(d, rci), RelationFamily::dd, "dd");
  const FreeMatrix m1 = embed_single(m, 1, 2);
  const FreeMatrix d1 = embed_single(d, 1, 2);
  collect(rels, d1 * rc * m1 - rc * m1 * rci * d1 * rci - FreeMatrix::identity(n, 2), RelationFamily::cross, "md");
  return rels;
}

// ---------------------------------------------------------------------------
// Gradings

namespace {

struct Grading {
  int balance = 0;  // m-letters minus ∂-letters
  std::vector<int> weight;
  friend bool operator==(const Grading&, const Grading&) = default;
  friend auto operator<=>(const Grading&, const Grading&) = default;
};

Grading grading_of(const Word& w, const Alphabet& a) {
  Grading g{0, std::vector<int>(static_cast<std::size_t>(a.n()), 0)};
  for (Letter x : w) {
    g.balance += a.is_m(x) ? 1 : -1;
    ++g.weight[static_cast<std::size_t>(a.row(x))];
    --g.weight[static_cast<std::size_t>(a.col(x))];
  }
  return g;
}

Grading minus(Grading a, const Grading& b) {
  a.balance -= b.balance;
  for (std::size_t i = 0; i < a.weight.size(); ++i) a.weight[i] -= b.weight[i];
  return a;
}

// Homogeneous grading of a relation; throws if mixed.
Grading relation_grading(const FreeElement& r, const Alphabet& a) {
  const Grading g = grading_of(r.terms().begin()->first, a);
  for (const auto& [w, c] : r.terms())
    if (grading_of(w, a) != g) throw std::logic_error("relation is not homogeneous in the m/∂ balance and weight");
  return g;
}

std::pair<int, int> bidegree(const Word& w, const Alphabet& a) {
  int dm = 0;
  for (Letter x : w) dm += a.is_m(x) ? 1 : 0;
  return {dm, static_cast<int>(w.size()) - dm};
}

std::pair<int, int> top_bidegree(const FreeElement& r, const Alphabet& a) {
  const int deg = r.degree();
  std::pair<int, int> top{-1, -1};
  for (auto it = r.terms().rbegin(); it != r.terms().rend() && static_cast<int>(it->first.size()) == deg; ++it) {
    const auto b = bidegree(it->first, a);
    if (top.first >= 0 && b != top) throw std::logic_error("relation top part is not bihomogeneous");
    top = b;
  }
  return top;
}

// All words up to `max_len`, bucketed by (length, grading).
std::map<std::pair<int, Grading>, std::vector<Word>> words_by_grading(const Alphabet& a, int max_len) {
  std::map<std::pair<int, Grading>, std::vector<Word>> out;
  std::vector<Word> layer{Word{}};
  for (int len = 0; len <= max_len; ++len) {
    for (const auto& w : layer) out[{len, grading_of(w, a)}].push_back(w);
    if (len == max_len) break;
    std::vector<Word> next;
    next.reserve(layer.size() * static_cast<std::size_t>(a.size()));
    for (const auto& w : layer)
      for (int x = 0; x < a.size(); ++x) {
        Word v = w;
        v.push_back(static_cast<Letter>(x));
        next.push_back(std::move(v));
      }
    layer = std::move(next);
  }
  return out;
}

}  // namespace

FreeElement expand(const SpanGenerator& g, const RelationSet& rels) {
  return FreeElement::word(g.left) * rels.elements.at(g.relation) * FreeElement::word(g.right);
}

std::vector<SpanGenerator> ideal_component(const RelationSet& rels, int dM, int dD, std::size_t max_span) {
  if (dM < 0 || dD < 0) throw std::invalid_argument("ideal_component: negative bidegree");
  const Alphabet a(rels.n);
  const int total = dM + dD;
  const auto words = words_by_grading(a, total);
  std::vector<SpanGenerator> out;
  for (std::size_t r = 0; r < rels.size(); ++r) {
    const auto [rm, rd] = top_bidegree(rels.elements[r], a);
    const int need_m = dM - rm, need_d = dD - rd;
    if (need_m < 0 || need_d < 0) continue;
    const int len = need_m + need_d;
    for (int lu = 0; lu <= len; ++lu)
      for (const auto& [ku, us] : words) {
        if (ku.first != lu) continue;
        for (const auto& u : us)
          for (const auto& [kv, vs] : words) {
            if (kv.first != len - lu) continue;
            for (const auto& v : vs) {
              const auto bu = bidegree(u, a), bv = bidegree(v, a);
              if (bu.first + bv.first != need_m) continue;
              out.push_back({u, r, v});
              if (out.size() > max_span) throw ScaleExceeded("ideal component exceeds " + std::to_string(max_span) + " products");
            }
          }
      }
  }
  return out;
}

bool certificate_holds(const FreeElement& x, const RelationSet& rels, const Certificate& cert) {
  FreeElement sum;
  for (const auto& t : cert.terms) sum += t.coefficient * expand(t.generator, rels);
  return sum == x;
}

// ---------------------------------------------------------------------------
// IdealEngine

struct IdealEngine::Component {
  std::vector<SpanGenerator> generators;
  SparseEchelon echelon{true};
  std::map<Word, std::uint32_t, ShortLex> index;
  std::vector<Word> words;

  std::uint32_t index_of(const Word& w) {
    auto [it, inserted] = index.try_emplace(w, static_cast<std::uint32_t>(words.size()));
    if (inserted) words.push_back(w);
    return it->second;
  }

  SparseEchelon::SparseVec vectorize(const FreeElement& x) {
    SparseEchelon::SparseVec v;
    for (const auto& [w, c] : x.terms()) v.emplace_back(index_of(w), c);
    std::sort(v.begin(), v.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
    return v;
  }
};

IdealEngine::IdealEngine(RelationSet rels, IdealOptions opts)
    : rels_(std::move(rels)), opts_(opts), alphabet_(rels_.n) {
  for (const auto& r : rels_.elements) {
    relation_grading(r, alphabet_);
    top_bidegree(r, alphabet_);
  }
}

IdealEngine::Component& IdealEngine::component(const Key& key) {
  auto it = cache_.find(key);
  if (it != cache_.end()) return *it->second;
  const auto& [cap, balance, weight] = key;
  const Grading target{balance, weight};
  auto comp = std::make_shared<Component>();

  int min_rel = cap + 1;
  for (const auto& r : rels_.elements) min_rel = std::min(min_rel, r.degree());
  const auto words = words_by_grading(alphabet_, std::max(0, cap - min_rel));
  for (std::size_t r = 0; r < rels_.size(); ++r) {
    const FreeElement& rel = rels_.elements[r];
    const int room = cap - rel.degree();
    if (room < 0) continue;
    const Grading gr = relation_grading(rel, alphabet_);
    for (const auto& [ku, us] : words) {
      if (ku.first > room) continue;
      const Grading rest = minus(minus(target, gr), ku.second);
      for (int lv = 0; lv + ku.first <= room; ++lv) {
        auto vs = words.find({lv, rest});
        if (vs == words.end()) continue;
        for (const auto& u : us)
          for (const auto& v : vs->second) {
            comp->generators.push_back({u, r, v});
            if (comp->generators.size() > opts_.max_span)
              throw ScaleExceeded("ideal span exceeds " + std::to_string(opts_.max_span) + " products at degree " +
                                  std::to_string(cap));
          }
      }
    }
  }
  for (std::size_t t = 0; t < comp->generators.size(); ++t)
    comp->echelon.insert(comp->vectorize(expand(comp->generators[t], rels_)), t);
  return *cache_.emplace(key, std::move(comp)).first->second;
}

Membership IdealEngine::membership(const FreeElement& x) {
  Membership out;
  out.member = true;
  std::map<Grading, FreeElement> parts;
  for (const auto& [w, c] : x.terms()) parts[grading_of(w, alphabet_)].add_term(w, c);
  for (const auto& [g, part] : parts) {
    Component& comp = component({part.degree() + opts_.extra_degree, g.balance, g.weight});
    const auto red = comp.echelon.reduce(comp.vectorize(part));
    for (const auto& [idx, c] : red.remainder) out.residue.add_term(comp.words[idx], c);
    if (!red.remainder.empty()) {
      out.member = false;
      continue;
    }
    for (const auto& [tag, c] : red.combination) out.certificate.terms.push_back({comp.generators[tag], c});
  }
  if (!out.member) {
    out.certificate.terms.clear();
    return out;
  }
  if (!certificate_holds(x, rels_, out.certificate))
    throw std::logic_error("ideal membership certificate does not reproduce the element");
  return out;
}

Membership is_in_ideal(const FreeElement& x, const RelationSet& rels, IdealOptions opts) {
  IdealEngine engine(rels, opts);
  return engine.membership(x);
}

// ---------------------------------------------------------------------------
// Capelli identities

namespace {

FreeMatrix l_image(const Alphabet& a, const QConfig& cfg) {
  const FreeMatrix md = FreeMatrix::generators_m(a) * FreeMatrix::generators_d(a);
  return md - (1 / cfg.q_minus_qinv()) * FreeMatrix::identity(a.n(), 1);
}

std::string bidegree_breakdown(const FreeElement& x, const Alphabet& a) {
  std::map<std::pair<int, int>, std::size_t> counts;
  for (const auto& [w, c] : x.terms()) ++counts[bidegree(w, a)];
  std::string s;
  for (const auto& [b, k] : counts)
    s += (s.empty() ? "" : ", ") + std::string("(") + std::to_string(b.first) + "," + std::to_string(b.second) +
         "): " + std::to_string(k) + " words";
  return s;
}

void check_membership(CapelliReport& report, const FreeElement& diff, const std::string& where, IdealEngine& engine,
                      const Alphabet& a) {
  ++report.entries;
  if (diff.is_zero()) {
    ++report.literal_zero;
    return;
  }
  const Membership m = engine.membership(diff);
  if (m.member) {
    ++report.certified;
    return;
  }
  report.verdict.fail(where + ": not certified; residue by bidegree " + bidegree_breakdown(m.residue, a) + "; " +
                      m.residue.str(a, 6));
}

TensorOp idempotent_of(const StandardTableau& u, int n, const QConfig& cfg) {
  if (!is_standard(u)) throw std::invalid_argument("capelli: tableau is not standard");
  return HeckeAction(n, u.shape.size(), cfg).primitive_idempotent(u);
}

}  // namespace

FreeMatrix capelli_lhs(const StandardTableau& u, int n, const QConfig& cfg) {
  const int m = u.shape.size();
  const Alphabet a(n);
  const FreeMatrix l = l_image(a, cfg);
  const std::vector<int> c = contents(u);
  FreeMatrix out = FreeMatrix::identity(n, m);
  for (int k = 1; k <= m; ++k) {
    const Scalar shift = cfg.power(-2 * c[static_cast<std::size_t>(k - 1)]) / cfg.q_minus_qinv();
    out = out * (barred(l, k, m, cfg) + shift * FreeMatrix::identity(n, m));
  }
  return out * idempotent_of(u, n, cfg);
}

FreeMatrix capelli_rhs(const StandardTableau& u, int n, const QConfig& cfg) {
  const int m = u.shape.size();
  const Alphabet a(n);
  const FreeMatrix mm = FreeMatrix::generators_m(a);
  const FreeMatrix dd = FreeMatrix::generators_d(a);
  FreeMatrix out = FreeMatrix::identity(n, m);
  for (int k = 1; k <= m; ++k) out = out * barred(mm, k, m, cfg);
  for (int k = m; k >= 1; --k) out = out * barred(dd, k, m, cfg);
  return content_factor(u.shape, cfg) * (out * idempotent_of(u, n, cfg));
}

FreeElement capelli_image_entry(const StandardTableau& u, int n, std::size_t row, std::size_t col,
                                const QConfig& cfg) {
  const FreeMatrix lhs = capelli_lhs(u, n, cfg);
  if (row >= lhs.dim() || col >= lhs.dim()) throw std::out_of_range("capelli_image_entry: entry out of range");
  return lhs.at(row, col);
}

CapelliReport verify_capelli(const StandardTableau& u, int n, const QConfig& cfg, IdealEngine& engine) {
  if (engine.relations().n != n) throw std::invalid_argument("verify_capelli: engine built for another n");
  const Alphabet a(n);
  const FreeMatrix diff = capelli_lhs(u, n, cfg) - capelli_rhs(u, n, cfg);
  CapelliReport report;
  for (std::size_t r = 0; r < diff.dim(); ++r)
    for (std::size_t c = 0; c < diff.dim(); ++c)
      check_membership(report, diff.at(r, c), "U=" + u.str() + " entry (" + std::to_string(r) + "," +
                                                  std::to_string(c) + ")", engine, a);
  if (report.literal_zero == report.entries) report.notes.push_back("exact zero residue");
  return report;
}

CapelliReport verify_traced_capelli(const YoungDiagram& shape, int n, const QConfig& cfg, IdealEngine& engine) {
  if (engine.relations().n != n) throw std::invalid_argument("verify_traced_capelli: engine built for another n");
  const Alphabet a(n);
  const StandardTableau u = standard_tableaux(shape).front();
  const int m = shape.size();
  const FreeMatrix lhs = capelli_lhs(u, n, cfg);
  const FreeMatrix rhs = capelli_rhs(u, n, cfg);

  auto q_traced = [&](const FreeMatrix& x) {
    FreeElement t;
    for (std::size_t i = 0; i < x.dim(); ++i) {
      int digits = 0;
      for (int s = 1; s <= m; ++s) digits += site_digit(i, n, m, s);
      t += cfg.power(-2 * digits) * x.at(i, i);
    }
    return t;
  };

  CapelliReport report;
  const FreeElement traced_lhs = q_traced(lhs);
  check_membership(report, traced_lhs - q_traced(rhs), "mu=" + shape.str() + " traced identity", engine, a);

  // Image of S_U(z) as a polynomial in z, then evaluated at 1/(q - q^{-1}).
  const FreeMatrix l = l_image(a, cfg);
  const std::vector<int> c = contents(u);
  std::vector<FreeMatrix> coeffs{FreeMatrix::identity(n, m)};
  for (int k = 1; k <= m; ++k) {
    const FreeMatrix lk = barred(l, k, m, cfg);
    const Scalar s = cfg.power(-2 * c[static_cast<std::size_t>(k - 1)]);
    std::vector<FreeMatrix> next(coeffs.size() + 1, FreeMatrix(n, m));
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      next[j] = next[j] + coeffs[j] * lk;
      next[j + 1] = next[j + 1] + s * coeffs[j];
    }
    coeffs = std::move(next);
  }
  const TensorOp e = idempotent_of(u, n, cfg);
  const Scalar z0 = 1 / cfg.q_minus_qinv();
  FreeElement image;
  Scalar zk = 1;
  for (std::size_t j = 0; j < coeffs.size(); ++j, zk *= z0) image += zk * q_traced(coeffs[j] * e);
  if (!(image == traced_lhs)) report.verdict.fail("mu=" + shape.str() + ": image of S_U(1/(q-q^-1)) differs from the traced left side");
  if (report.literal_zero == report.entries) report.notes.push_back("exact zero residue");
  return report;
}

}  // namespace qimm
