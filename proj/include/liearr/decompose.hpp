#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liearr/arrangement.hpp"
#include "liearr/presented.hpp"
#include "liearr/relparse.hpp"

namespace liearr {

/// Holonomy presentation of an arrangement: for each block {y_1..y_k} of size
/// >= 3 the relations [y_i, y_1 + ... + y_k] for i = 1..k-1 (the k-th is a
/// consequence and omitted); commuting 2-blocks contribute their commutator;
/// native 2-blocks contribute nothing; pairs covered by no block get the
/// ambient commutator. Degrees indexed by ground position (empty = all 1);
/// within a block all degrees must agree for the relations to be homogeneous.
Presentation holonomy_presentation(const SetArrangement& arr, std::vector<int> degrees = {});

/// Presentation of the localized Lie algebra at a closed sub-arrangement:
/// generators are the support, relations are the member blocks' relations
/// plus commutators of support pairs covered by no member block.
struct LocalizedPresentation {
  Presentation presentation;     // on supp(B), generators in parent order
  std::vector<int> gen_map;      // local generator id -> parent ground id
  std::vector<int> member_blocks;
  std::string support_str;
};

LocalizedPresentation localized(const Presentation& parent, const SubArrangement& sub);

/// pi_B on representatives: kills every monomial containing a generator
/// outside the support of the sub-arrangement.
LieElement project(const LieElement& e, const SubArrangement& sub);

// ---------------------------------------------------------------------------
// Reports

struct ReplacementVerdict {
  enum class Kind { SymbolicHolonomy, NumericHolds, NumericFails };
  std::string block;       // block string, e.g. "{1,2,3}"
  std::string generator;   // the shared generator x
  Kind kind;
  int checked_to = 0;      // degree bound for the numeric verdicts
  int fail_degree = -1;    // first failing degree for NumericFails
  std::string kind_str() const;
};

struct TripleCheck {
  enum class Status { Zero, Nonzero, Undecidable };
  int part = -1;           // partition part index
  std::string x, y, z;     // generator names: the product is [x,[y,z]]
  int degree = 0;
  Status status = Status::Zero;
  std::string residue;     // reduced representative when nonzero
  std::string status_str() const;
};

struct PartReport {
  std::string name;
  std::vector<std::string> blocks;
  std::string support;
  bool closed = true;
};

struct DimIdentityRow {
  int degree;
  long long lhs;  // dim L'_d
  long long rhs;  // sum over parts of dim (L_B_i)'_d
};

enum class Verdict { DecomposesAllDegrees, DecomposesUpToD, DoesNotDecompose, UndecidableAtD };
std::string verdict_str(Verdict v);
int verdict_exit_code(Verdict v);

struct DecompositionReport {
  std::string field;
  int max_degree = 0;
  std::vector<PartReport> parts;
  bool closed = true;  // every part closed (partition validation)
  std::vector<ReplacementVerdict> replacement;
  bool replacement_established = true;
  bool symbolic_replacement = true;   // every verdict symbolic
  bool two_blocks_disjoint = true;    // native 2-blocks pairwise disjoint
  std::vector<TripleCheck> triples;
  long long checked = 0, zero = 0, nonzero = 0, undecidable = 0;
  std::vector<DimIdentityRow> dims;
  bool dims_match = true;
  Verdict verdict = Verdict::DecomposesUpToD;
  std::vector<std::string> warnings;

  std::string to_text() const;
  std::string to_structured() const;  // stable machine-readable JSON
};

struct KernelRow {
  int degree;
  long long algebra_dim;      // dim L_d
  long long localized_dim;    // dim (L_B)_d
  long long kernel_dim;       // dim ker(pi_B)_d = dim L_d - dim (L_B)_d
  long long complement_span;  // subalgebra generated by the complement
};

struct PartialReport {
  std::string field;
  int max_degree = 0;
  std::vector<std::string> blocks;
  std::string support;
  std::vector<std::string> complement;  // generators outside the support
  std::vector<TripleCheck> triples;
  long long checked = 0, zero = 0, nonzero = 0, undecidable = 0;
  std::vector<KernelRow> kernel;
  bool kernel_matches_complement_span = true;
  bool splits = false;  // L' = im(s') x ker(pi') up to max_degree
  Verdict verdict = Verdict::DecomposesUpToD;
  std::vector<std::string> warnings;

  std::string to_text() const;
  std::string to_structured() const;
};

// ---------------------------------------------------------------------------
// Checks

/// Replacement condition per (block A with |A| >= 3, shared generator x):
/// symbolic when A's relations span the holonomy pattern, otherwise decided
/// numerically up to D by testing (L_A)'_d inside the subalgebra generated by
/// A \ {x}.
template <class F>
std::vector<ReplacementVerdict> check_replacement(const F& field, const Presentation& pres,
                                                  int max_degree);

/// Condition-6 triple products for a validated partition: for each part, the
/// pairs {y,z} inside the part's blocks are deduplicated by greedy linear
/// independence of their classes (the bracket [x,-] is linear on classes), and
/// each representative is tested against every generator outside the support.
template <class F>
std::vector<TripleCheck> check_condition6(const GradedQuotient<F>& q,
                                          const std::vector<SubArrangement>& parts,
                                          const std::vector<std::string>& part_names,
                                          int jobs = 1);

/// Full decision pipeline: partition validation, replacement, condition-6
/// triples and the dimension identity dim L'_d = sum_i dim (L_B_i)'_d for
/// 2 <= d <= D.
template <class F>
DecompositionReport verify_decomposition(const F& field, const Presentation& pres,
                                         const std::vector<std::vector<int>>& groups,
                                         const std::vector<std::string>& group_names,
                                         int max_degree, int jobs = 1);

/// Partial decomposition at one closed sub-arrangement: triple products of
/// the support against outside generators; on success L' splits as
/// im(s') x ker(pi') up to D, cross-checked by kernel dimensions.
template <class F>
PartialReport partial_decomposition(const F& field, const Presentation& pres,
                                    const std::vector<int>& member_blocks, int max_degree,
                                    int jobs = 1);

// ---------------------------------------------------------------------------
// File assembly

struct Assembled {
  SetArrangement arrangement;
  Presentation presentation;
  std::vector<std::vector<int>> groups;  // partition from group: lines (may be empty)
  std::vector<std::string> group_names;
  bool from_normals = false;
};

/// Builds the arrangement and presentation described by a parsed file.
Assembled assemble(const ArrangementSpec& spec);

extern template std::vector<ReplacementVerdict> check_replacement<RationalField>(
    const RationalField&, const Presentation&, int);
extern template std::vector<ReplacementVerdict> check_replacement<PrimeField>(
    const PrimeField&, const Presentation&, int);
extern template std::vector<TripleCheck> check_condition6<RationalField>(
    const GradedQuotient<RationalField>&, const std::vector<SubArrangement>&,
    const std::vector<std::string>&, int);
extern template std::vector<TripleCheck> check_condition6<PrimeField>(
    const GradedQuotient<PrimeField>&, const std::vector<SubArrangement>&,
    const std::vector<std::string>&, int);
extern template DecompositionReport verify_decomposition<RationalField>(
    const RationalField&, const Presentation&, const std::vector<std::vector<int>>&,
    const std::vector<std::string>&, int, int);
extern template DecompositionReport verify_decomposition<PrimeField>(
    const PrimeField&, const Presentation&, const std::vector<std::vector<int>>&,
    const std::vector<std::string>&, int, int);
extern template PartialReport partial_decomposition<RationalField>(
    const RationalField&, const Presentation&, const std::vector<int>&, int, int);
extern template PartialReport partial_decomposition<PrimeField>(
    const PrimeField&, const Presentation&, const std::vector<int>&, int, int);

}  // namespace liearr
