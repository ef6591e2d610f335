#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "liearr/arrangement.hpp"
#include "liearr/field.hpp"
#include "liearr/freelie.hpp"
#include "liearr/rowspace.hpp"

namespace liearr {

/// Tag used for the commutators [x,y] of pairs contained in no block.
inline constexpr const char* kAmbientOrigin = "ambient-commutator";

struct Relation {
  LieElement element;
  std::string origin;  // block label or kAmbientOrigin
  int degree = 0;
};

/// Finitely presented graded Lie algebra F(X)/<R>: weighted generators plus
/// weighted-homogeneous relations, each attributed to a block (or to the
/// ambient commutator convention). Optionally backed by the arrangement it
/// came from.
class Presentation {
 public:
  Presentation(GeneratorList gens, std::vector<Relation> relations,
               std::optional<SetArrangement> arrangement = std::nullopt);

  const GeneratorList& gens() const { return gens_; }
  const std::vector<Relation>& relations() const { return relations_; }
  const std::optional<SetArrangement>& arrangement() const { return arrangement_; }
  std::vector<Relation> relations_of_block(const std::string& label) const;
  int max_relation_degree() const;

 private:
  GeneratorList gens_;
  std::vector<Relation> relations_;
  std::optional<SetArrangement> arrangement_;
};

/// Raised when a query needs a degree beyond the truncation degree; never a
/// silent false.
struct UndecidableAtDegree : std::runtime_error {
  UndecidableAtDegree(int degree, int truncation)
      : std::runtime_error("degree " + std::to_string(degree) +
                           " is undecidable at truncation degree " + std::to_string(truncation)),
        degree(degree), truncation(truncation) {}
  int degree;
  int truncation;
};

struct DimSeriesRow {
  int degree;
  long long dim;          // dim L_d
  long long derived_dim;  // dim L'_d
};
using DimSeries = std::vector<DimSeriesRow>;

/// The graded quotient L = F(X)/<R> computed degree by degree up to a
/// truncation degree D.
///
/// Degree d is constructed as the span of candidates [x_g, b] (g a generator,
/// b a lower basis element with matching degree) together with the degree-d
/// generators, modulo the defining relations of degree d, antisymmetry
/// instances on basis pairs and Jacobi instances on basis triples of total
/// degree d. The surviving candidates form the degree-d basis and every
/// candidate's class is tabulated, which realizes the reduction map; the
/// ideal's rank at degree d is witt_dimension(d) - dim L_d.
template <class F>
class GradedQuotient {
 public:
  GradedQuotient(F field, Presentation pres, int max_degree);

  const F& field() const { return field_; }
  const Presentation& presentation() const { return *pres_; }
  int max_degree() const { return max_degree_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  long long dim(int d) const;
  /// dim L'_d: rank of the span of all brackets of lower-degree components.
  long long derived_dim(int d) const;
  DimSeries dim_series() const;

  /// Rank of the degree-d component of the defining ideal <R> inside the free
  /// Lie algebra, i.e. witt_dimension(degrees, d) - dim(d).
  long long ideal_rank(int d) const;

  /// Coordinates of a homogeneous element in the degree-d quotient basis
  /// (empty vector == zero in L). Throws UndecidableAtDegree above D.
  SparseVec<F> reduce(const LieElement& e) const;
  bool is_zero(const LieElement& e) const;

  std::size_t basis_size(int d) const { return basis_[idx(d)].size(); }
  /// Printable left-normed representative of a basis element.
  std::string basis_name(int d, std::size_t i) const;
  std::string vec_str(int d, const SparseVec<F>& v) const;

  /// Per-degree row spaces (1..up_to) of the Lie subalgebra generated by the
  /// given generators, closed under bracketing degree by degree.
  std::vector<RowSpace<F>> subalgebra_span(const std::vector<int>& gen_ids, int up_to) const;
  /// Per-degree dimensions (1..up_to) of that subalgebra.
  std::vector<long long> subalgebra_dims(const std::vector<int>& gen_ids, int up_to) const;

  /// Basis vectors of the degree-d piece of the derived subalgebra L'.
  std::vector<SparseVec<F>> derived_component(int d) const;

  /// Bracket of two basis vectors (u at degree du, v at degree dv).
  SparseVec<F> bracket(int du, const SparseVec<F>& u, int dv, const SparseVec<F>& v) const;

 private:
  struct BasisElt {
    int gen;     // leading generator, or the generator itself when parent < 0
    int parent;  // index into basis at degree (own degree - deg(gen)), -1 for leaves
  };

  std::size_t idx(int d) const {
    if (d < 1 || d > max_degree_) throw UndecidableAtDegree(d, max_degree_);
    return static_cast<std::size_t>(d - 1);
  }

  void build_degree(int d);
  // Bracket of basis elements (da,ia) x (db,ib); result at degree da+db.
  // During construction of degree d, results at degree d are expressed in
  // candidate coordinates.
  SparseVec<F> bracket_basis(int da, std::size_t ia, int db, std::size_t ib) const;
  SparseVec<F> bracket_vec(int da, const SparseVec<F>& u, int db, const SparseVec<F>& v) const;
  // Image of [x_g, b] for b at degree d; candidate unit vector while degree
  // d + deg(g) is under construction, table lookup afterwards.
  SparseVec<F> gen_apply(int g, int d, std::size_t i) const;
  SparseVec<F> gen_apply_vec(int g, int d, const SparseVec<F>& v) const;
  SparseVec<F> eval_tree(const LieTreePtr& t) const;
  SparseVec<F> eval_element(const LieElement& e, int degree) const;

  F field_;
  std::shared_ptr<const Presentation> pres_;
  int max_degree_;
  std::vector<std::string> warnings_;

  std::vector<std::vector<BasisElt>> basis_;  // [d-1]
  // gen_table_[d-1][g][i]: class of [x_g, basis_[d-1][i]] at degree d+deg(g),
  // present whenever d + deg(g) <= D.
  std::vector<std::vector<std::vector<SparseVec<F>>>> gen_table_;
  std::vector<int> gen_basis_index_;  // generator id -> index in basis at its degree

  // Construction state: while building degree d, gen application into degree
  // d yields unit vectors in candidate coordinates.
  int building_degree_ = 0;
  std::vector<std::vector<std::size_t>> cand_index_;  // [g][parent] -> candidate column
  std::vector<std::size_t> gen_cand_index_;           // degree-d generator -> column

  mutable std::map<std::uint64_t, SparseVec<F>> memo_;
  mutable std::mutex memo_mutex_;
  mutable std::vector<std::optional<long long>> derived_dims_;
};

/// Builds the graded quotient; attaches a warning when some relation degree
/// exceeds the truncation degree (such relations cannot affect degrees <= D).
template <class F>
GradedQuotient<F> build_quotient(const F& field, const Presentation& pres, int max_degree) {
  return GradedQuotient<F>(field, pres, max_degree);
}

extern template class GradedQuotient<RationalField>;
extern template class GradedQuotient<PrimeField>;

}  // namespace liearr
