#pragma once

#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace liearr {

/// Raised by arrangement validation with a diagnostic naming the violated
/// axiom and the offending blocks.
struct ArrangementError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ArrBlock {
  std::string label;
  std::vector<int> members;  // ground indices, sorted ascending
  /// True for 2-sets added by completion or produced as size-2 flats of a
  /// hyperplane arrangement: their bracket is zero by convention. Native
  /// 2-blocks of a hand-written arrangement keep a live bracket.
  bool commuting_pair = false;
};

/// A family of >=2-element subsets of a ground set, pairwise sharing at most
/// one element and covering the ground set.
class SetArrangement {
 public:
  /// Validates the axioms; block member names are resolved against ground.
  static SetArrangement validate(std::vector<std::string> ground,
                                 std::vector<ArrBlock> blocks_by_name_index);

  const std::vector<std::string>& ground() const { return ground_; }
  const std::vector<ArrBlock>& blocks() const { return blocks_; }
  int ground_size() const { return static_cast<int>(ground_.size()); }
  const std::string& name(int i) const { return ground_.at(static_cast<std::size_t>(i)); }
  int index_of(const std::string& name) const;
  int block_index_of_label(const std::string& label) const;  // -1 if absent

  /// Indices of blocks containing both x and y (at most one by the axioms).
  std::optional<int> block_containing_pair(int x, int y) const;
  bool pair_covered(int x, int y) const { return block_containing_pair(x, y).has_value(); }

  std::string block_str(int b) const;

  /// Combinatorial equality: same ground (as an ordered list) and the same
  /// family of member sets; labels and pair flags are presentation metadata
  /// and do not participate.
  friend bool operator==(const SetArrangement& a, const SetArrangement& b);

 private:
  std::vector<std::string> ground_;
  std::vector<ArrBlock> blocks_;
};

/// Adds every 2-subset of the ground set not contained in any existing block,
/// flagged as commuting pairs. Result satisfies the completedness hypothesis
/// of the matroid construction. Never removes blocks.
SetArrangement complete_arrangement(const SetArrangement& arr);

/// Simple matroid of rank <= 3 shape: all 1- and 2-subsets independent,
/// dependence recorded on 3-subsets only.
class Matroid3 {
 public:
  /// dependent_triples = 3-subsets contained in some block. Requires a
  /// completed arrangement; verifies the exchange property on construction.
  static Matroid3 from_arrangement(const SetArrangement& arr, int exchange_check_limit = 15);

  const std::vector<std::string>& ground() const { return ground_; }
  int ground_size() const { return static_cast<int>(ground_.size()); }
  bool dependent(int a, int b, int c) const;
  const std::set<std::array<int, 3>>& dependent_triples() const { return dependent_; }

 private:
  std::vector<std::string> ground_;
  std::set<std::array<int, 3>> dependent_;
};

/// All 2-flats: closures {x,y} u {w : xyw dependent}, maximal sets
/// deduplicated. The result is a valid arrangement containing every
/// uncovered 2-set; size-2 flats are flagged as commuting pairs.
SetArrangement two_flats(const Matroid3& m);

/// Arrangement of a list of hyperplane normal vectors over Q: blocks are the
/// maximal sets of hyperplanes whose normals span a rank-2 space. Rejects
/// zero normals and proportional pairs (naming them).
SetArrangement arrangement_from_normals(const std::vector<std::string>& names,
                                        const std::vector<std::vector<mpq_class>>& normals);

/// A subset of the blocks of a parent arrangement with its cached support.
struct SubArrangement {
  const SetArrangement* parent = nullptr;
  std::vector<int> member_blocks;  // sorted block indices
  std::vector<int> support;        // sorted union of members

  static SubArrangement of(const SetArrangement& parent, std::vector<int> member_blocks);
  bool in_support(int g) const;
  std::string support_str() const;
};

struct ClosednessWitness {
  int block;                      // a block outside the sub-arrangement ...
  std::vector<int> intersection;  // ... meeting the support in >= 2 elements
};

/// Closed iff every outside block meets the support in at most one element.
/// Returns a witness on failure, nullopt when closed.
std::optional<ClosednessWitness> closedness_witness(const SubArrangement& sub);
bool is_closed(const SubArrangement& sub);

struct PartitionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Verifies the groups are pairwise disjoint, cover all blocks and are each
/// closed; throws PartitionError (with a witness in the message) otherwise.
std::vector<SubArrangement> validate_partition(const SetArrangement& arr,
                                               const std::vector<std::vector<int>>& groups);

}  // namespace liearr
