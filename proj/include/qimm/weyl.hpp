#pragma once

// The braided Weyl algebra W_n as a free algebra on {m_ij, ∂_ij} modulo three
// matrix relation families, with a degree-bounded ideal-membership engine
// and the higher Capelli identities built on it.

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "qimm/combinatorics.hpp"
#include "qimm/exact.hpp"
#include "qimm/linalg.hpp"
#include "qimm/tensor.hpp"
#include "qimm/uqgln_rep.hpp"

namespace qimm {

using Letter = std::uint8_t;
using Word = std::vector<Letter>;

/// Shorter words first, then lexicographic by letter code.
struct ShortLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// Letter codes: m_ij -> (i-1) n + (j-1), ∂_ij -> n^2 + (i-1) n + (j-1).
class Alphabet {
 public:
  explicit Alphabet(int n);
  int n() const { return n_; }
  int size() const { return 2 * n_ * n_; }
  /// 1-based i, j.
  Letter m(int i, int j) const;
  Letter d(int i, int j) const;
  bool is_m(Letter x) const { return x < n_ * n_; }
  int row(Letter x) const { return (x % (n_ * n_)) / n_; }  // 0-based
  int col(Letter x) const { return x % n_; }                // 0-based
  /// The letter with m and ∂ exchanged.
  Letter swapped(Letter x) const;
  std::string name(Letter x) const;

 private:
  int n_;
};

class FreeElement {
 public:
  using Terms = std::map<Word, Scalar, ShortLex>;

  FreeElement() = default;
  static FreeElement constant(const Scalar& c);
  static FreeElement word(Word w, const Scalar& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Word& w, const Scalar& c);
  /// Longest word length; -1 for zero.
  int degree() const;
  /// Part of exactly the given word length.
  FreeElement homogeneous_part(int length) const;

  std::string str(const Alphabet& a, std::size_t max_terms = 12) const;

  friend FreeElement operator+(FreeElement a, const FreeElement& b);
  friend FreeElement operator-(FreeElement a, const FreeElement& b);
  friend FreeElement operator*(const FreeElement& a, const FreeElement& b);
  friend FreeElement operator*(const Scalar& s, const FreeElement& a);
  FreeElement& operator+=(const FreeElement& b);
  friend bool operator==(const FreeElement&, const FreeElement&) = default;

 private:
  Terms terms_;
};

inline bool is_zero(const FreeElement& x) { return x.is_zero(); }

/// Value under a commutative substitution of the letters.
Scalar evaluate(const FreeElement& x, const std::vector<Scalar>& letter_values);

/// Applies a letter substitution word by word.
FreeElement map_letters(const FreeElement& x, const std::vector<Letter>& image);

// Square matrix with FreeElement entries over (C^n)^{⊗sites}.
class FreeMatrix {
 public:
  FreeMatrix(int n, int sites);
  static FreeMatrix from_op(const TensorOp& op);
  static FreeMatrix identity(int n, int sites);
  /// [m_ij] or [∂_ij] on a single site.
  static FreeMatrix generators_m(const Alphabet& a);
  static FreeMatrix generators_d(const Alphabet& a);

  int n() const { return n_; }
  int sites() const { return sites_; }
  std::size_t dim() const { return dim_; }
  const FreeElement& at(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }
  FreeElement& at(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }

  friend FreeMatrix operator+(const FreeMatrix& a, const FreeMatrix& b);
  friend FreeMatrix operator-(const FreeMatrix& a, const FreeMatrix& b);
  friend FreeMatrix operator*(const FreeMatrix& a, const FreeMatrix& b);
  friend FreeMatrix operator*(const FreeMatrix& a, const TensorOp& b);
  friend FreeMatrix operator*(const TensorOp& a, const FreeMatrix& b);
  friend FreeMatrix operator*(const Scalar& s, const FreeMatrix& a);

 private:
  int n_;
  int sites_;
  std::size_t dim_;
  std::vector<FreeElement> entries_;
};

/// X acting on `site` of `sites` sites (X single-site), identity elsewhere.
FreeMatrix embed_single(const FreeMatrix& x, int site, int sites);

/// Ř_{k-1}···Ř_1 X_1 Ř_1^{-1}···Ř_{k-1}^{-1} for a single-site X, on `sites` sites.
FreeMatrix barred(const FreeMatrix& x, int k, int sites, const QConfig& cfg);

enum class RelationFamily { mm, dd, cross };

struct RelationSet {
  int n = 2;
  std::vector<FreeElement> elements;
  std::vector<RelationFamily> family;
  std::vector<std::string> labels;  // e.g. "mm[(1,2),(2,1)]"

  std::size_t size() const { return elements.size(); }
  std::size_t count(RelationFamily f) const;
};

/// Entries of B X_1 B X_1 - X_1 B X_1 B on two sites, zero entries dropped.
std::vector<FreeElement> braided_relation_entries(const FreeMatrix& x, const TensorOp& braid);

/// ŘM_1ŘM_1 - M_1ŘM_1Ř, Ř^{-1}𝒟_1Ř^{-1}𝒟_1 - 𝒟_1Ř^{-1}𝒟_1Ř^{-1} and
/// 𝒟_1ŘM_1 - ŘM_1Ř^{-1}𝒟_1Ř^{-1} - 1, entrywise. n = 1 is accepted for
/// self-tests.
RelationSet relation_generators(int n, const QConfig& cfg);

class ScaleExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct IdealOptions {
  /// Largest number of products u·r·v assembled for one component.
  std::size_t max_span = 400000;
  /// Products may exceed the degree of the tested element by this much.
  int extra_degree = 0;
};

struct SpanGenerator {
  Word left;
  std::size_t relation;
  Word right;
};

/// Products u·r·v whose top bidegree (counts of m- and ∂-letters of the
/// longest words) equals (dM, dD). Throws ScaleExceeded past the cap.
std::vector<SpanGenerator> ideal_component(const RelationSet& rels, int dM, int dD,
                                           std::size_t max_span = IdealOptions{}.max_span);

FreeElement expand(const SpanGenerator& g, const RelationSet& rels);

struct Certificate {
  struct Term {
    SpanGenerator generator;
    Scalar coefficient;
  };
  std::vector<Term> terms;
};

struct Membership {
  bool member = false;
  Certificate certificate;
  /// What is left after reducing modulo the bounded span (zero iff member).
  FreeElement residue;
};

/// x == Σ coefficient · u·r·v, recomputed with free-algebra arithmetic.
bool certificate_holds(const FreeElement& x, const RelationSet& rels, const Certificate& cert);

// Decides membership in the part of the two-sided ideal spanned by products
// u·r·v of bounded degree. Elements are split by the gradings every relation
// respects (m-count minus ∂-count, and weight Σ e_i - e_j per letter); the
// reduced spans are cached per (degree cap, grading).
class IdealEngine {
 public:
  explicit IdealEngine(RelationSet rels, IdealOptions opts = {});
  const RelationSet& relations() const { return rels_; }

  /// A positive answer carries a certificate that has been rechecked.
  Membership membership(const FreeElement& x);

 private:
  struct Component;
  using Key = std::tuple<int, int, std::vector<int>>;
  Component& component(const Key& key);

  RelationSet rels_;
  IdealOptions opts_;
  Alphabet alphabet_;
  std::map<Key, std::shared_ptr<Component>> cache_;
};

Membership is_in_ideal(const FreeElement& x, const RelationSet& rels, IdealOptions opts = {});

// ---------------------------------------------------------------------------
// Higher Capelli identities

/// Image of (L_{ō1} + q^{-2c_1}/(q-q^{-1}))···(L_{ōm} + q^{-2c_m}/(q-q^{-1})) E_U
/// under L -> M𝒟 - 1/(q-q^{-1}).
FreeMatrix capelli_lhs(const StandardTableau& u, int n, const QConfig& cfg);

/// a_μ M_{ō1}···M_{ōm} 𝒟_{ōm}···𝒟_{ō1} E_U.
FreeMatrix capelli_rhs(const StandardTableau& u, int n, const QConfig& cfg);

/// One entry (0-based indices into (C^n)^{⊗m}) of capelli_lhs.
FreeElement capelli_image_entry(const StandardTableau& u, int n, std::size_t row, std::size_t col,
                                const QConfig& cfg);

struct CapelliReport {
  Verdict verdict;
  std::size_t entries = 0;
  std::size_t literal_zero = 0;  // LHS - RHS vanished before any reduction
  std::size_t certified = 0;     // nonzero, certified by ideal membership
  std::vector<std::string> notes;
};

CapelliReport verify_capelli(const StandardTableau& u, int n, const QConfig& cfg, IdealEngine& engine);

/// The D-weighted trace of the entry identities, plus a check that the image
/// of S_U(z) at z = 1/(q-q^{-1}) equals the traced left side.
CapelliReport verify_traced_capelli(const YoungDiagram& shape, int n, const QConfig& cfg, IdealEngine& engine);

}  // namespace qimm
