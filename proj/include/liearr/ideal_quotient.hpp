#pragma once

#include <string>
#include <vector>

#include "liearr/freelie.hpp"
#include "liearr/presented.hpp"
#include "liearr/rowspace.hpp"

namespace liearr {

/// Reference construction of the graded quotient that materializes, for each
/// degree d <= D, the ideal row space in Lyndon coordinates spanned by all
/// left-normed ad-words [x_i1, [..., [x_ik, r]...]] of the defining relations.
/// Quotient dimension at d is witt_dimension(d) - rank. Exponential in the
/// truncation degree; intended for cross-checks at desk scale.
template <class F>
class LyndonIdealQuotient {
 public:
  LyndonIdealQuotient(F field, const Presentation& pres, int max_degree)
      : field_(std::move(field)), gens_(pres.gens()),
        basis_(LyndonBasis::build(pres.gens(), max_degree)), max_degree_(max_degree) {
    for (int d = 1; d <= max_degree_; ++d)
      ideal_.emplace_back(field_, basis_.size(d));
    for (const auto& r : pres.relations()) {
      for (int d = r.degree; d <= max_degree_; ++d) {
        std::vector<Word> prefixes;
        collect_words(d - r.degree, Word(), prefixes);
        for (const auto& w : prefixes) {
          LieElement e = ad_word(w, r.element);
          ideal_[static_cast<std::size_t>(d - 1)].insert(
              lyndon_coords(field_, gens_, e, basis_));
        }
      }
    }
  }

  int max_degree() const { return max_degree_; }

  long long ideal_rank(int d) const { return static_cast<long long>(space(d).rank()); }

  long long dim(int d) const {
    return static_cast<long long>(basis_.size(d)) - ideal_rank(d);
  }

  std::vector<long long> dims() const {
    std::vector<long long> out;
    for (int d = 1; d <= max_degree_; ++d) out.push_back(dim(d));
    return out;
  }

  /// Canonical coset representative in Lyndon coordinates.
  SparseVec<F> reduce(const LieElement& e) const {
    auto deg = e.homogeneous_degree(gens_);
    if (!deg) {
      if (e.empty()) return {};
      throw std::invalid_argument("reduce requires a homogeneous element");
    }
    if (*deg > max_degree_) throw UndecidableAtDegree(*deg, max_degree_);
    return space(*deg).reduce(lyndon_coords(field_, gens_, e, basis_));
  }

  bool is_zero(const LieElement& e) const { return reduce(e).empty(); }

  const RowSpace<F>& space(int d) const {
    if (d < 1 || d > max_degree_) throw UndecidableAtDegree(d, max_degree_);
    return ideal_[static_cast<std::size_t>(d - 1)];
  }
  const LyndonBasis& lyndon() const { return basis_; }

 private:
  void collect_words(int degree, Word prefix, std::vector<Word>& out) const {
    if (degree == 0) {
      out.push_back(prefix);
      return;
    }
    for (int g = 0; g < gens_.size(); ++g)
      if (gens_[g].degree <= degree)
        collect_words(degree - gens_[g].degree, prefix + static_cast<char>(g), out);
  }

  F field_;
  GeneratorList gens_;
  LyndonBasis basis_;
  int max_degree_;
  std::vector<RowSpace<F>> ideal_;
};

}  // namespace liearr
