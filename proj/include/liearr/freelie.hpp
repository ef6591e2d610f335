#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "liearr/field.hpp"
#include "liearr/rowspace.hpp"

namespace liearr {

/// A named generator with a positive integer degree (weight).
struct Generator {
  std::string name;
  int degree = 1;
};

/// Ordered alphabet of generators; the order is the input order and fixes
/// the lexicographic order on words and hence the Lyndon basis labels.
class GeneratorList {
 public:
  int add(const std::string& name, int degree = 1);
  int size() const { return static_cast<int>(gens_.size()); }
  const Generator& operator[](int i) const { return gens_.at(static_cast<std::size_t>(i)); }
  /// -1 when absent.
  int index_of(const std::string& name) const;
  int require(const std::string& name) const;
  std::vector<int> degrees() const;
  int max_degree() const;

 private:
  std::vector<Generator> gens_;
  std::map<std::string, int> index_;
};

/// Word over generator indices, one byte per letter. Byte order equals the
/// generator order, so std::string's lexicographic compare is the word order.
using Word = std::string;

int word_degree(const GeneratorList& gens, const Word& w);
std::string word_str(const GeneratorList& gens, const Word& w);

class LieTree;
using LieTreePtr = std::shared_ptr<const LieTree>;

/// Immutable binary bracket tree with generator leaves.
class LieTree {
 public:
  static LieTreePtr leaf(int gen);
  static LieTreePtr node(LieTreePtr left, LieTreePtr right);

  bool is_leaf() const { return gen_ >= 0; }
  int gen() const { return gen_; }
  const LieTreePtr& left() const { return left_; }
  const LieTreePtr& right() const { return right_; }

  int degree(const GeneratorList& gens) const;
  /// Leaves, left to right.
  Word foliage() const;
  std::string str(const GeneratorList& gens) const;

 private:
  LieTree() = default;
  int gen_ = -1;
  LieTreePtr left_, right_;
};

/// Formal integer combination of bracket monomials. Not normalized: two
/// different term lists may denote the same Lie algebra element (equality of
/// elements is decided through expand() or through a quotient).
class LieElement {
 public:
  LieElement() = default;
  static LieElement monomial(mpz_class coeff, LieTreePtr tree);

  const std::vector<std::pair<mpz_class, LieTreePtr>>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  LieElement& operator+=(const LieElement& o);
  LieElement& operator-=(const LieElement& o);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  LieElement scaled(const mpz_class& c) const;

  /// Weighted degree when every monomial agrees; nullopt for 0 or mixed.
  std::optional<int> homogeneous_degree(const GeneratorList& gens) const;
  std::string str(const GeneratorList& gens) const;

 private:
  std::vector<std::pair<mpz_class, LieTreePtr>> terms_;
};

/// Formal bracket of two elements: pairwise tree nodes, coefficients multiply.
LieElement lie_bracket(const LieElement& a, const LieElement& b);

/// Left-nested bracketing of the prefix word onto e:
/// prefix (g1, g2) gives [g1, [g2, e]]; the empty prefix gives e.
LieElement ad_word(const Word& prefix, const LieElement& e);

/// Associative polynomial with integer coefficients: image of Lie elements in
/// the tensor algebra under [a, b] -> ab - ba.
using PolyZ = std::map<Word, mpz_class>;

PolyZ expand(const LieTreePtr& t);
PolyZ expand(const LieElement& e);
PolyZ poly_mul(const PolyZ& a, const PolyZ& b);

template <class F>
using PolyF = std::map<Word, typename F::Elem>;

template <class F>
PolyF<F> poly_to_field(const F& f, const PolyZ& p) {
  PolyF<F> out;
  for (const auto& [w, c] : p) {
    auto e = f.from_mpz(c);
    if (!f.is_zero(e)) out.emplace(w, std::move(e));
  }
  return out;
}

template <class F>
void poly_add_scaled(const F& f, PolyF<F>& dst, const typename F::Elem& c, const PolyF<F>& src) {
  if (f.is_zero(c)) return;
  for (const auto& [w, a] : src) {
    auto it = dst.find(w);
    if (it == dst.end()) {
      auto v = f.mul(c, a);
      if (!f.is_zero(v)) dst.emplace(w, std::move(v));
    } else {
      it->second = f.add(it->second, f.mul(c, a));
      if (f.is_zero(it->second)) dst.erase(it);
    }
  }
}

template <class F>
PolyF<F> poly_mul_field(const F& f, const PolyF<F>& a, const PolyF<F>& b) {
  PolyF<F> out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      auto v = f.mul(ca, cb);
      if (f.is_zero(v)) continue;
      auto it = out.find(wa + wb);
      if (it == out.end()) {
        out.emplace(wa + wb, std::move(v));
      } else {
        it->second = f.add(it->second, v);
        if (f.is_zero(it->second)) out.erase(it);
      }
    }
  return out;
}

/// ab - ba in the tensor algebra.
template <class F>
PolyF<F> poly_commutator(const F& f, const PolyF<F>& a, const PolyF<F>& b) {
  PolyF<F> out = poly_mul_field(f, a, b);
  poly_add_scaled(f, out, f.neg(f.one()), poly_mul_field(f, b, a));
  return out;
}

/// w is strictly smaller than all of its proper rotations.
bool is_lyndon(const Word& w);

/// Chen-Fox-Lyndon standard bracketing: split at the longest proper Lyndon
/// suffix and recurse.
LieTreePtr standard_bracketing(const Word& w);

/// Lyndon words of weighted degree <= max_degree over the generator alphabet,
/// grouped by degree and sorted lexicographically, each with its standard
/// bracketing. Expansions are computed on first use and cached; they are
/// triangular: expand(bracketing(w)) has coefficient 1 on w and is otherwise
/// supported on lexicographically larger words.
class LyndonBasis {
 public:
  static LyndonBasis build(const GeneratorList& gens, int max_degree);

  int max_degree() const { return static_cast<int>(by_degree_.size()) - 1; }
  std::size_t size(int degree) const { return entries(degree).size(); }
  const std::vector<Word>& words(int degree) const { return entries(degree); }
  const LieTreePtr& bracketing(int degree, std::size_t i) const;
  const PolyZ& expansion(int degree, std::size_t i) const;
  /// (degree, index) of a Lyndon word, or nullopt.
  std::optional<std::pair<int, std::size_t>> find(const Word& w) const;

 private:
  const std::vector<Word>& entries(int degree) const {
    if (degree < 1 || degree > max_degree())
      throw std::out_of_range("degree outside Lyndon basis range");
    return by_degree_[static_cast<std::size_t>(degree)];
  }
  std::vector<std::vector<Word>> by_degree_;  // [degree] -> words, lex order
  std::map<Word, std::pair<int, std::size_t>> index_;
  mutable std::vector<std::vector<LieTreePtr>> bracketings_;
  mutable std::vector<std::vector<PolyZ>> expansions_;
};

/// Dimension of the degree-d component of the free Lie algebra on generators
/// with the given positive integer weights (generalized Witt formula via
/// Moebius inversion of the tensor-algebra Hilbert series).
long long witt_dimension(const std::vector<int>& degrees, int d);

/// Coordinates of a homogeneous degree-d polynomial (the expansion of a Lie
/// element) in the Lyndon bracketing basis at degree d, by triangular
/// elimination. Throws if a leading word is not Lyndon (the input was not the
/// expansion of a Lie element) or if d exceeds the basis range.
template <class F>
SparseVec<F> lyndon_coords_poly(const F& f, PolyF<F> poly, int degree, const LyndonBasis& basis) {
  if (degree < 1 || degree > basis.max_degree())
    throw std::out_of_range("degree " + std::to_string(degree) + " exceeds Lyndon basis range");
  SparseVec<F> coords;
  while (!poly.empty()) {
    const Word w = poly.begin()->first;  // lexicographically least word
    auto pos = basis.find(w);
    if (!pos || pos->first != degree)
      throw std::logic_error("leading word is not a Lyndon word of this degree; "
                             "input is not the expansion of a Lie element");
    typename F::Elem c = poly.begin()->second;
    coords.emplace_back(static_cast<std::uint32_t>(pos->second), c);
    poly_add_scaled(f, poly, f.neg(c),
                    poly_to_field(f, basis.expansion(degree, pos->second)));
  }
  std::sort(coords.begin(), coords.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return coords;
}

template <class F>
SparseVec<F> lyndon_coords(const F& f, const GeneratorList& gens, const LieElement& e,
                           const LyndonBasis& basis) {
  auto deg = e.homogeneous_degree(gens);
  if (!deg) {
    if (e.empty()) return {};
    throw std::invalid_argument("lyndon_coords requires a homogeneous element");
  }
  return lyndon_coords_poly(f, poly_to_field(f, expand(e)), *deg, basis);
}

}  // namespace liearr
