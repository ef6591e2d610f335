#include "liearr/arrangement.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

#include "liearr/field.hpp"
#include "liearr/rowspace.hpp"

namespace liearr {

namespace {

std::string join_names(const SetArrangement& arr, const std::vector<int>& ids) {
  std::string s = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) s += ",";
    s += arr.name(ids[i]);
  }
  return s + "}";
}

std::string join_raw(const std::vector<std::string>& names, const std::vector<int>& ids) {
  std::string s = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) s += ",";
    s += names.at(static_cast<std::size_t>(ids[i]));
  }
  return s + "}";
}

}  // namespace

SetArrangement SetArrangement::validate(std::vector<std::string> ground,
                                        std::vector<ArrBlock> blocks) {
  if (ground.size() < 2) throw ArrangementError("ground set needs at least 2 names");
  {
    std::set<std::string> seen;
    for (const auto& n : ground)
      if (!seen.insert(n).second) throw ArrangementError("duplicate ground name '" + n + "'");
  }
  std::vector<bool> covered(ground.size(), false);
  for (auto& b : blocks) {
    std::sort(b.members.begin(), b.members.end());
    b.members.erase(std::unique(b.members.begin(), b.members.end()), b.members.end());
    for (int m : b.members) {
      if (m < 0 || m >= static_cast<int>(ground.size()))
        throw ArrangementError("block '" + b.label + "' references an unknown name");
      covered[static_cast<std::size_t>(m)] = true;
    }
    if (b.members.size() < 2)
      throw ArrangementError("block " + join_raw(ground, b.members) + " has fewer than 2 elements");
  }
  // drop duplicated member sets, keeping the first occurrence
  {
    std::set<std::vector<int>> seen;
    std::vector<ArrBlock> unique_blocks;
    for (auto& b : blocks)
      if (seen.insert(b.members).second) unique_blocks.push_back(std::move(b));
    blocks = std::move(unique_blocks);
  }
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      std::vector<int> common;
      std::set_intersection(blocks[i].members.begin(), blocks[i].members.end(),
                            blocks[j].members.begin(), blocks[j].members.end(),
                            std::back_inserter(common));
      if (common.size() > 1)
        throw ArrangementError("blocks " + join_raw(ground, blocks[i].members) + " and " +
                               join_raw(ground, blocks[j].members) + " share " +
                               join_raw(ground, common));
    }
  for (std::size_t g = 0; g < ground.size(); ++g)
    if (!covered[g])
      throw ArrangementError("union of blocks misses ground name '" + ground[g] + "'");

  SetArrangement arr;
  arr.ground_ = std::move(ground);
  arr.blocks_ = std::move(blocks);
  return arr;
}

int SetArrangement::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < ground_.size(); ++i)
    if (ground_[i] == name) return static_cast<int>(i);
  return -1;
}

int SetArrangement::block_index_of_label(const std::string& label) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (blocks_[i].label == label) return static_cast<int>(i);
  return -1;
}

std::optional<int> SetArrangement::block_containing_pair(int x, int y) const {
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    const auto& m = blocks_[b].members;
    if (std::binary_search(m.begin(), m.end(), x) && std::binary_search(m.begin(), m.end(), y))
      return static_cast<int>(b);
  }
  return std::nullopt;
}

std::string SetArrangement::block_str(int b) const {
  return join_names(*this, blocks_.at(static_cast<std::size_t>(b)).members);
}

bool operator==(const SetArrangement& a, const SetArrangement& b) {
  if (a.ground_ != b.ground_) return false;
  std::set<std::vector<int>> sa, sb;
  for (const auto& blk : a.blocks_) sa.insert(blk.members);
  for (const auto& blk : b.blocks_) sb.insert(blk.members);
  return sa == sb;
}

SetArrangement complete_arrangement(const SetArrangement& arr) {
  std::vector<ArrBlock> blocks = arr.blocks();
  int added = 0;
  for (int x = 0; x < arr.ground_size(); ++x)
    for (int y = x + 1; y < arr.ground_size(); ++y)
      if (!arr.pair_covered(x, y)) {
        ArrBlock b;
        b.label = "P" + std::to_string(++added);
        b.members = {x, y};
        b.commuting_pair = true;
        blocks.push_back(std::move(b));
      }
  return SetArrangement::validate(arr.ground(), std::move(blocks));
}

Matroid3 Matroid3::from_arrangement(const SetArrangement& arr, int exchange_check_limit) {
  const int n = arr.ground_size();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (!arr.pair_covered(x, y))
        throw std::invalid_argument("arrangement is not completed: pair {" + arr.name(x) + "," +
                                    arr.name(y) + "} lies in no block");
  Matroid3 m;
  m.ground_ = arr.ground();
  for (const auto& b : arr.blocks()) {
    const auto& mem = b.members;
    for (std::size_t i = 0; i < mem.size(); ++i)
      for (std::size_t j = i + 1; j < mem.size(); ++j)
        for (std::size_t k = j + 1; k < mem.size(); ++k)
          m.dependent_.insert({mem[i], mem[j], mem[k]});
  }
  // Exchange verification (guaranteed by construction from an arrangement,
  // asserted anyway): no a,b and independent {x1,x2,x3} with all abx_i
  // dependent. O(n^5); guarded by a size limit.
  if (n <= exchange_check_limit) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (a == b) continue;
        std::vector<int> closure;
        for (int x = 0; x < n; ++x)
          if (x != a && x != b && m.dependent(a, b, x)) closure.push_back(x);
        for (std::size_t i = 0; i < closure.size(); ++i)
          for (std::size_t j = i + 1; j < closure.size(); ++j)
            for (std::size_t k = j + 1; k < closure.size(); ++k)
              if (!m.dependent(closure[i], closure[j], closure[k]))
                throw std::logic_error("matroid exchange fails at {" + arr.name(closure[i]) + "," +
                                       arr.name(closure[j]) + "," + arr.name(closure[k]) + "}");
      }
  }
  return m;
}

bool Matroid3::dependent(int a, int b, int c) const {
  std::array<int, 3> t = {a, b, c};
  std::sort(t.begin(), t.end());
  return dependent_.count(t) > 0;
}

SetArrangement two_flats(const Matroid3& m) {
  const int n = m.ground_size();
  std::set<std::vector<int>> flats;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      std::vector<int> flat = {x, y};
      for (int w = 0; w < n; ++w)
        if (w != x && w != y && m.dependent(x, y, w)) flat.push_back(w);
      std::sort(flat.begin(), flat.end());
      flats.insert(std::move(flat));
    }
  // Closures of pairs are maximal among each other: two distinct flats cannot
  // share two elements, so no containment is possible; dedupe is enough.
  std::vector<ArrBlock> blocks;
  int label = 0;
  for (const auto& f : flats) {
    ArrBlock b;
    b.label = "F" + std::to_string(++label);
    b.members = f;
    b.commuting_pair = f.size() == 2;
    blocks.push_back(std::move(b));
  }
  return SetArrangement::validate(m.ground(), std::move(blocks));
}

SetArrangement arrangement_from_normals(const std::vector<std::string>& names,
                                        const std::vector<std::vector<mpq_class>>& normals) {
  if (names.size() != normals.size())
    throw std::invalid_argument("each normal needs a name");
  if (normals.size() < 2) throw std::invalid_argument("need at least 2 normals");
  const std::size_t l = normals.front().size();
  RationalField f;
  for (std::size_t i = 0; i < normals.size(); ++i) {
    if (normals[i].size() != l)
      throw std::invalid_argument("normal '" + names[i] + "' has inconsistent dimension");
    bool zero = true;
    for (const auto& c : normals[i])
      if (sgn(c) != 0) zero = false;
    if (zero) throw std::invalid_argument("normal '" + names[i] + "' is zero");
  }
  auto rank_of = [&](const std::vector<int>& idx) {
    RowSpace<RationalField> rs(f, l);
    for (int i : idx) rs.insert(to_sparse(f, normals[static_cast<std::size_t>(i)]));
    return rs.rank();
  };
  for (std::size_t i = 0; i < normals.size(); ++i)
    for (std::size_t j = i + 1; j < normals.size(); ++j)
      if (rank_of({static_cast<int>(i), static_cast<int>(j)}) < 2)
        throw std::invalid_argument("normals '" + names[i] + "' and '" + names[j] +
                                    "' are proportional");

  const int n = static_cast<int>(normals.size());
  std::set<std::vector<int>> flats;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> flat = {i, j};
      for (int k = 0; k < n; ++k)
        if (k != i && k != j && rank_of({i, j, k}) == 2) flat.push_back(k);
      std::sort(flat.begin(), flat.end());
      flats.insert(std::move(flat));
    }
  std::vector<ArrBlock> blocks;
  int label = 0;
  for (const auto& fl : flats) {
    ArrBlock b;
    b.label = "F" + std::to_string(++label);
    b.members = fl;
    b.commuting_pair = fl.size() == 2;
    blocks.push_back(std::move(b));
  }
  return SetArrangement::validate(names, std::move(blocks));
}

SubArrangement SubArrangement::of(const SetArrangement& parent, std::vector<int> member_blocks) {
  std::sort(member_blocks.begin(), member_blocks.end());
  member_blocks.erase(std::unique(member_blocks.begin(), member_blocks.end()),
                      member_blocks.end());
  SubArrangement sub;
  sub.parent = &parent;
  std::set<int> supp;
  for (int b : member_blocks) {
    if (b < 0 || b >= static_cast<int>(parent.blocks().size()))
      throw std::invalid_argument("sub-arrangement references block index " + std::to_string(b) +
                                  " out of range");
    for (int m : parent.blocks()[static_cast<std::size_t>(b)].members) supp.insert(m);
  }
  sub.member_blocks = std::move(member_blocks);
  sub.support.assign(supp.begin(), supp.end());
  return sub;
}

bool SubArrangement::in_support(int g) const {
  return std::binary_search(support.begin(), support.end(), g);
}

std::string SubArrangement::support_str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (i) s += ",";
    s += parent->name(support[i]);
  }
  return s + "}";
}

std::optional<ClosednessWitness> closedness_witness(const SubArrangement& sub) {
  const auto& blocks = sub.parent->blocks();
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b) {
    if (std::binary_search(sub.member_blocks.begin(), sub.member_blocks.end(), b)) continue;
    std::vector<int> common;
    std::set_intersection(blocks[static_cast<std::size_t>(b)].members.begin(),
                          blocks[static_cast<std::size_t>(b)].members.end(), sub.support.begin(),
                          sub.support.end(), std::back_inserter(common));
    if (common.size() > 1) return ClosednessWitness{b, std::move(common)};
  }
  return std::nullopt;
}

bool is_closed(const SubArrangement& sub) { return !closedness_witness(sub).has_value(); }

std::vector<SubArrangement> validate_partition(const SetArrangement& arr,
                                               const std::vector<std::vector<int>>& groups) {
  std::vector<int> owner(arr.blocks().size(), -1);
  for (std::size_t g = 0; g < groups.size(); ++g)
    for (int b : groups[g]) {
      if (b < 0 || b >= static_cast<int>(arr.blocks().size()))
        throw PartitionError("group " + std::to_string(g + 1) + " references block index " +
                             std::to_string(b) + " out of range");
      if (owner[static_cast<std::size_t>(b)] >= 0)
        throw PartitionError("block " + arr.block_str(b) + " appears in groups " +
                             std::to_string(owner[static_cast<std::size_t>(b)] + 1) + " and " +
                             std::to_string(g + 1));
      owner[static_cast<std::size_t>(b)] = static_cast<int>(g);
    }
  for (std::size_t b = 0; b < owner.size(); ++b)
    if (owner[b] < 0)
      throw PartitionError("partition does not cover block " + arr.block_str(static_cast<int>(b)));
  std::vector<SubArrangement> subs;
  for (const auto& g : groups) {
    SubArrangement sub = SubArrangement::of(arr, g);
    if (auto w = closedness_witness(sub))
      throw PartitionError("group with support " + sub.support_str() +
                           " is not closed: block " + arr.block_str(w->block) + " meets it in " +
                           [&] {
                             std::string s = "{";
                             for (std::size_t i = 0; i < w->intersection.size(); ++i) {
                               if (i) s += ",";
                               s += arr.name(w->intersection[i]);
                             }
                             return s + "}";
                           }());
    subs.push_back(std::move(sub));
  }
  return subs;
}

}  // namespace liearr
