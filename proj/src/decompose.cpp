#include "liearr/decompose.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <set>
#include <thread>

namespace liearr {

Presentation holonomy_presentation(const SetArrangement& arr, std::vector<int> degrees) {
  const int n = arr.ground_size();
  if (degrees.empty()) degrees.assign(static_cast<std::size_t>(n), 1);
  if (static_cast<int>(degrees.size()) != n)
    throw std::invalid_argument("degree list does not match the ground set");
  GeneratorList gens;
  for (int i = 0; i < n; ++i) gens.add(arr.name(i), degrees[static_cast<std::size_t>(i)]);

  std::vector<Relation> rels;
  for (const auto& b : arr.blocks()) {
    const auto& mem = b.members;
    if (mem.size() >= 3) {
      for (std::size_t i = 1; i < mem.size(); ++i)
        if (degrees[static_cast<std::size_t>(mem[i])] != degrees[static_cast<std::size_t>(mem[0])])
          throw std::invalid_argument("holonomy relations for block " + b.label +
                                      " need equal generator degrees");
      for (std::size_t i = 0; i + 1 < mem.size(); ++i) {
        LieElement r;
        for (std::size_t j = 0; j < mem.size(); ++j) {
          if (j == i) continue;
          r += LieElement::monomial(1, LieTree::node(LieTree::leaf(mem[i]), LieTree::leaf(mem[j])));
        }
        rels.push_back({std::move(r), b.label});
      }
    } else if (b.commuting_pair) {
      rels.push_back({LieElement::monomial(
                          1, LieTree::node(LieTree::leaf(mem[0]), LieTree::leaf(mem[1]))),
                      b.label});
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (!arr.pair_covered(x, y))
        rels.push_back({LieElement::monomial(1, LieTree::node(LieTree::leaf(x), LieTree::leaf(y))),
                        kAmbientOrigin});
  return Presentation(std::move(gens), std::move(rels), arr);
}

namespace {

LieTreePtr remap_tree(const LieTreePtr& t, const std::vector<int>& to_local) {
  if (t->is_leaf()) {
    int local = to_local.at(static_cast<std::size_t>(t->gen()));
    if (local < 0) throw std::logic_error("relation leaf outside the sub-arrangement support");
    return LieTree::leaf(local);
  }
  return LieTree::node(remap_tree(t->left(), to_local), remap_tree(t->right(), to_local));
}

}  // namespace

LocalizedPresentation localized(const Presentation& parent, const SubArrangement& sub) {
  if (auto w = closedness_witness(sub))
    throw std::invalid_argument(
        "sub-arrangement is not closed: block " + sub.parent->block_str(w->block) +
        " meets the support " + sub.support_str() + " in more than one element");
  const SetArrangement& arr = *sub.parent;
  const GeneratorList& pgens = parent.gens();
  if (pgens.size() != arr.ground_size())
    throw std::invalid_argument("presentation is not backed by this arrangement");

  std::vector<int> to_local(static_cast<std::size_t>(pgens.size()), -1);
  GeneratorList gens;
  std::vector<int> gen_map;
  for (int g : sub.support) {
    to_local[static_cast<std::size_t>(g)] = gens.add(pgens[g].name, pgens[g].degree);
    gen_map.push_back(g);
  }

  std::vector<Relation> rels;
  std::vector<ArrBlock> sub_blocks;
  for (int b : sub.member_blocks) {
    const ArrBlock& blk = arr.blocks()[static_cast<std::size_t>(b)];
    ArrBlock local = blk;
    for (auto& m : local.members) m = to_local[static_cast<std::size_t>(m)];
    sub_blocks.push_back(std::move(local));
    for (const auto& r : parent.relations_of_block(blk.label)) {
      LieElement e;
      for (const auto& [c, t] : r.element.terms())
        e += LieElement::monomial(c, remap_tree(t, to_local));
      rels.push_back({std::move(e), r.origin});
    }
  }
  // commutators of support pairs covered by no member block
  const int m = static_cast<int>(sub.support.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      int x = sub.support[static_cast<std::size_t>(i)], y = sub.support[static_cast<std::size_t>(j)];
      bool covered = false;
      for (int b : sub.member_blocks) {
        const auto& mem = arr.blocks()[static_cast<std::size_t>(b)].members;
        if (std::binary_search(mem.begin(), mem.end(), x) &&
            std::binary_search(mem.begin(), mem.end(), y)) {
          covered = true;
          break;
        }
      }
      if (!covered)
        rels.push_back({LieElement::monomial(1, LieTree::node(LieTree::leaf(i), LieTree::leaf(j))),
                        kAmbientOrigin});
    }

  std::vector<std::string> sub_ground;
  for (int g : sub.support) sub_ground.push_back(arr.name(g));
  LocalizedPresentation out{
      Presentation(std::move(gens), std::move(rels),
                   SetArrangement::validate(std::move(sub_ground), std::move(sub_blocks))),
      std::move(gen_map),
      sub.member_blocks,
      sub.support_str()};
  return out;
}

LieElement project(const LieElement& e, const SubArrangement& sub) {
  LieElement out;
  for (const auto& [c, t] : e.terms()) {
    bool inside = true;
    for (unsigned char g : t->foliage())
      if (!sub.in_support(static_cast<int>(g))) {
        inside = false;
        break;
      }
    if (inside) out += LieElement::monomial(c, t);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string ReplacementVerdict::kind_str() const {
  switch (kind) {
    case Kind::SymbolicHolonomy: return "symbolic-holonomy";
    case Kind::NumericHolds: return "holds-up-to-degree-" + std::to_string(checked_to);
    case Kind::NumericFails: return "fails-at-degree-" + std::to_string(fail_degree);
  }
  return "?";
}

std::string TripleCheck::status_str() const {
  switch (status) {
    case Status::Zero: return "zero";
    case Status::Nonzero: return "nonzero";
    case Status::Undecidable: return "undecidable";
  }
  return "?";
}

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::DecomposesAllDegrees: return "decomposes";
    case Verdict::DecomposesUpToD: return "decomposes-up-to-degree";
    case Verdict::DoesNotDecompose: return "does-not-decompose";
    case Verdict::UndecidableAtD: return "undecidable-at-degree";
  }
  return "?";
}

int verdict_exit_code(Verdict v) {
  switch (v) {
    case Verdict::DecomposesAllDegrees:
    case Verdict::DecomposesUpToD: return 0;
    case Verdict::DoesNotDecompose: return 1;
    case Verdict::UndecidableAtD: return 3;
  }
  return 1;
}

namespace {

// Does the block's relation set span exactly the holonomy relations
// [y_i, y_1 + ... + y_k]? Structural comparison over Q of degree-2 spans.
bool matches_holonomy_pattern(const Presentation& pres, const ArrBlock& block) {
  const auto rels = pres.relations_of_block(block.label);
  const auto& mem = block.members;
  if (mem.size() < 3) return false;
  for (const auto& r : rels)
    for (const auto& [c, t] : r.element.terms())
      if (t->foliage().size() != 2) return false;

  RationalField f;
  std::map<Word, std::uint32_t> col;
  auto vec_of = [&](const LieElement& e) {
    SparseVec<RationalField> v;
    for (const auto& [w, c] : expand(e)) {
      auto it = col.find(w);
      std::uint32_t idx = it == col.end() ? (col[w] = static_cast<std::uint32_t>(col.size()))
                                          : it->second;
      v.emplace_back(idx, mpq_class(c));
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  };

  std::vector<LieElement> pattern;
  for (std::size_t i = 0; i + 1 < mem.size(); ++i) {
    LieElement r;
    for (std::size_t j = 0; j < mem.size(); ++j) {
      if (j == i) continue;
      r += LieElement::monomial(1, LieTree::node(LieTree::leaf(mem[i]), LieTree::leaf(mem[j])));
    }
    pattern.push_back(std::move(r));
  }
  std::vector<SparseVec<RationalField>> pattern_vecs, given_vecs;
  for (const auto& r : pattern) pattern_vecs.push_back(vec_of(r));
  for (const auto& r : rels) given_vecs.push_back(vec_of(r.element));

  const std::size_t ncols = col.size();
  RowSpace<RationalField> sp(f, ncols), sg(f, ncols), both(f, ncols);
  for (const auto& v : pattern_vecs) {
    sp.insert(v);
    both.insert(v);
  }
  for (const auto& v : given_vecs) {
    sg.insert(v);
    both.insert(v);
  }
  return sp.rank() == sg.rank() && sg.rank() == both.rank();
}

void run_parallel(std::size_t count, int jobs, const std::function<void(std::size_t)>& work) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  int nthreads = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
  for (int t = 0; t < nthreads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) work(i);
    });
  for (auto& t : pool) t.join();
}

}  // namespace

template <class F>
std::vector<ReplacementVerdict> check_replacement(const F& field, const Presentation& pres,
                                                  int max_degree) {
  if (!pres.arrangement())
    throw std::invalid_argument("replacement check needs an arrangement-backed presentation");
  const SetArrangement& arr = *pres.arrangement();
  std::vector<ReplacementVerdict> out;
  for (int bi = 0; bi < static_cast<int>(arr.blocks().size()); ++bi) {
    const ArrBlock& block = arr.blocks()[static_cast<std::size_t>(bi)];
    if (block.members.size() < 3) continue;
    std::vector<int> shared;
    for (int x : block.members)
      for (int other = 0; other < static_cast<int>(arr.blocks().size()); ++other) {
        if (other == bi) continue;
        const auto& mem = arr.blocks()[static_cast<std::size_t>(other)].members;
        if (std::binary_search(mem.begin(), mem.end(), x)) {
          shared.push_back(x);
          break;
        }
      }
    if (shared.empty()) continue;

    if (matches_holonomy_pattern(pres, block)) {
      for (int x : shared)
        out.push_back({block.label.empty() ? arr.block_str(bi) : block.label, arr.name(x),
                       ReplacementVerdict::Kind::SymbolicHolonomy, max_degree, -1});
      continue;
    }

    LocalizedPresentation loc = localized(pres, SubArrangement::of(arr, {bi}));
    GradedQuotient<F> lq(field, loc.presentation, max_degree);
    std::vector<std::vector<SparseVec<F>>> derived;
    for (int d = 2; d <= max_degree; ++d) derived.push_back(lq.derived_component(d));
    for (int x : shared) {
      std::vector<int> others;
      for (std::size_t i = 0; i < loc.gen_map.size(); ++i)
        if (loc.gen_map[i] != x &&
            std::binary_search(block.members.begin(), block.members.end(), loc.gen_map[i]))
          others.push_back(static_cast<int>(i));
      auto span = lq.subalgebra_span(others, max_degree);
      int fail_degree = -1;
      for (int d = 2; d <= max_degree && fail_degree < 0; ++d)
        for (const auto& v : derived[static_cast<std::size_t>(d - 2)])
          if (!span[static_cast<std::size_t>(d - 1)].contains(v)) {
            fail_degree = d;
            break;
          }
      ReplacementVerdict verdict;
      verdict.block = block.label.empty() ? arr.block_str(bi) : block.label;
      verdict.generator = arr.name(x);
      verdict.kind = fail_degree < 0 ? ReplacementVerdict::Kind::NumericHolds
                                     : ReplacementVerdict::Kind::NumericFails;
      verdict.checked_to = max_degree;
      verdict.fail_degree = fail_degree;
      out.push_back(std::move(verdict));
    }
  }
  return out;
}

template <class F>
std::vector<TripleCheck> check_condition6(const GradedQuotient<F>& q,
                                          const std::vector<SubArrangement>& parts,
                                          const std::vector<std::string>& part_names,
                                          int jobs) {
  const Presentation& pres = q.presentation();
  const GeneratorList& gens = pres.gens();
  const int D = q.max_degree();
  std::vector<TripleCheck> out;
  std::vector<std::size_t> pending;  // indices into out that need evaluation
  std::vector<std::pair<int, std::pair<int, int>>> pending_trees;  // (x, (y,z)) gen ids

  for (std::size_t pi = 0; pi < parts.size(); ++pi) {
    const SubArrangement& part = parts[pi];
    const SetArrangement& arr = *part.parent;
    std::set<std::pair<int, int>> pair_set;
    for (int b : part.member_blocks) {
      const auto& mem = arr.blocks()[static_cast<std::size_t>(b)].members;
      for (std::size_t i = 0; i < mem.size(); ++i)
        for (std::size_t j = i + 1; j < mem.size(); ++j) pair_set.emplace(mem[i], mem[j]);
    }
    std::map<int, RowSpace<F>> degree_span;
    for (const auto& [y, z] : pair_set) {
      int pdeg = gens[y].degree + gens[z].degree;
      LieElement yz = LieElement::monomial(1, LieTree::node(LieTree::leaf(y), LieTree::leaf(z)));
      if (pdeg > D) {
        // cannot even reduce the pair class: every product is undecidable
        for (int x = 0; x < gens.size(); ++x) {
          if (part.in_support(x)) continue;
          TripleCheck t;
          t.part = static_cast<int>(pi);
          t.x = gens[x].name;
          t.y = gens[y].name;
          t.z = gens[z].name;
          t.degree = gens[x].degree + pdeg;
          t.status = TripleCheck::Status::Undecidable;
          out.push_back(std::move(t));
        }
        continue;
      }
      auto it = degree_span.find(pdeg);
      if (it == degree_span.end())
        it = degree_span.emplace(pdeg, RowSpace<F>(q.field(), static_cast<std::size_t>(q.dim(pdeg))))
                 .first;
      std::size_t before = it->second.rank();
      it->second.insert(q.reduce(yz));
      if (it->second.rank() == before) continue;  // class dependent on earlier pairs: implied
      for (int x = 0; x < gens.size(); ++x) {
        if (part.in_support(x)) continue;
        TripleCheck t;
        t.part = static_cast<int>(pi);
        t.x = gens[x].name;
        t.y = gens[y].name;
        t.z = gens[z].name;
        t.degree = gens[x].degree + pdeg;
        if (t.degree > D) {
          t.status = TripleCheck::Status::Undecidable;
          out.push_back(std::move(t));
        } else {
          out.push_back(std::move(t));
          pending.push_back(out.size() - 1);
          pending_trees.push_back({x, {y, z}});
        }
      }
    }
  }
  (void)part_names;

  run_parallel(pending.size(), jobs, [&](std::size_t k) {
    auto [x, yz] = pending_trees[k];
    LieElement e = LieElement::monomial(
        1, LieTree::node(LieTree::leaf(x),
                         LieTree::node(LieTree::leaf(yz.first), LieTree::leaf(yz.second))));
    TripleCheck& t = out[pending[k]];
    SparseVec<F> residue = q.reduce(e);
    if (residue.empty()) {
      t.status = TripleCheck::Status::Zero;
    } else {
      t.status = TripleCheck::Status::Nonzero;
      t.residue = q.vec_str(t.degree, residue);
    }
  });
  return out;
}

template <class F>
DecompositionReport verify_decomposition(const F& field, const Presentation& pres,
                                         const std::vector<std::vector<int>>& groups,
                                         const std::vector<std::string>& group_names,
                                         int max_degree, int jobs) {
  if (!pres.arrangement())
    throw std::invalid_argument("decomposition check needs an arrangement-backed presentation");
  const SetArrangement& arr = *pres.arrangement();
  std::vector<SubArrangement> parts = validate_partition(arr, groups);

  DecompositionReport rep;
  rep.field = field.descriptor().name();
  rep.max_degree = max_degree;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    PartReport pr;
    pr.name = i < group_names.size() ? group_names[i] : "G" + std::to_string(i + 1);
    for (int b : parts[i].member_blocks) pr.blocks.push_back(arr.block_str(b));
    pr.support = parts[i].support_str();
    pr.closed = true;
    rep.parts.push_back(std::move(pr));
  }

  GradedQuotient<F> q(field, pres, max_degree);
  for (const auto& w : q.warnings()) rep.warnings.push_back(w);

  rep.replacement = check_replacement(field, pres, max_degree);
  for (const auto& v : rep.replacement) {
    if (v.kind == ReplacementVerdict::Kind::NumericFails) rep.replacement_established = false;
    if (v.kind != ReplacementVerdict::Kind::SymbolicHolonomy) rep.symbolic_replacement = false;
  }

  // Theorem hypothesis for the all-degrees upgrade: the 2-sets of the
  // arrangement (with live brackets) are pairwise disjoint.
  std::vector<const ArrBlock*> two_blocks;
  for (const auto& b : arr.blocks())
    if (b.members.size() == 2 && !b.commuting_pair) two_blocks.push_back(&b);
  for (std::size_t i = 0; i < two_blocks.size() && rep.two_blocks_disjoint; ++i)
    for (std::size_t j = i + 1; j < two_blocks.size(); ++j) {
      std::vector<int> common;
      std::set_intersection(two_blocks[i]->members.begin(), two_blocks[i]->members.end(),
                            two_blocks[j]->members.begin(), two_blocks[j]->members.end(),
                            std::back_inserter(common));
      if (!common.empty()) {
        rep.two_blocks_disjoint = false;
        rep.warnings.push_back("2-blocks " + two_blocks[i]->label + " and " +
                               two_blocks[j]->label +
                               " intersect; the finite criterion only certifies degrees <= " +
                               std::to_string(max_degree));
        break;
      }
    }

  std::vector<std::string> names;
  for (const auto& p : rep.parts) names.push_back(p.name);
  rep.triples = check_condition6(q, parts, names, jobs);
  for (const auto& t : rep.triples) {
    ++rep.checked;
    switch (t.status) {
      case TripleCheck::Status::Zero: ++rep.zero; break;
      case TripleCheck::Status::Nonzero: ++rep.nonzero; break;
      case TripleCheck::Status::Undecidable: ++rep.undecidable; break;
    }
  }

  std::vector<long long> rhs(static_cast<std::size_t>(max_degree) + 1, 0);
  for (const auto& part : parts) {
    LocalizedPresentation loc = localized(pres, part);
    GradedQuotient<F> lq(field, loc.presentation, max_degree);
    for (int d = 2; d <= max_degree; ++d) rhs[static_cast<std::size_t>(d)] += lq.derived_dim(d);
  }
  for (int d = 2; d <= max_degree; ++d) {
    long long lhs = q.derived_dim(d);
    rep.dims.push_back({d, lhs, rhs[static_cast<std::size_t>(d)]});
    if (lhs != rhs[static_cast<std::size_t>(d)]) rep.dims_match = false;
    if (rhs[static_cast<std::size_t>(d)] > lhs)
      throw std::logic_error("localized dimensions exceed the algebra's at degree " +
                             std::to_string(d));
  }

  if (rep.undecidable > 0) rep.verdict = Verdict::UndecidableAtD;
  else if (rep.nonzero > 0 || !rep.dims_match) rep.verdict = Verdict::DoesNotDecompose;
  else if (rep.symbolic_replacement && rep.two_blocks_disjoint)
    rep.verdict = Verdict::DecomposesAllDegrees;
  else rep.verdict = Verdict::DecomposesUpToD;
  return rep;
}

template <class F>
PartialReport partial_decomposition(const F& field, const Presentation& pres,
                                    const std::vector<int>& member_blocks, int max_degree,
                                    int jobs) {
  if (!pres.arrangement())
    throw std::invalid_argument("partial decomposition needs an arrangement-backed presentation");
  const SetArrangement& arr = *pres.arrangement();
  SubArrangement sub = SubArrangement::of(arr, member_blocks);
  if (auto w = closedness_witness(sub))
    throw std::invalid_argument("sub-arrangement is not closed: block " +
                                arr.block_str(w->block) + " meets the support " +
                                sub.support_str() + " in more than one element");

  PartialReport rep;
  rep.field = field.descriptor().name();
  rep.max_degree = max_degree;
  for (int b : sub.member_blocks) rep.blocks.push_back(arr.block_str(b));
  rep.support = sub.support_str();

  GradedQuotient<F> q(field, pres, max_degree);
  for (const auto& w : q.warnings()) rep.warnings.push_back(w);

  std::vector<int> complement;
  for (int g = 0; g < arr.ground_size(); ++g)
    if (!sub.in_support(g)) {
      complement.push_back(g);
      rep.complement.push_back(arr.name(g));
    }

  rep.triples = check_condition6(q, {sub}, {"B"}, jobs);
  for (const auto& t : rep.triples) {
    ++rep.checked;
    switch (t.status) {
      case TripleCheck::Status::Zero: ++rep.zero; break;
      case TripleCheck::Status::Nonzero: ++rep.nonzero; break;
      case TripleCheck::Status::Undecidable: ++rep.undecidable; break;
    }
  }

  LocalizedPresentation loc = localized(pres, sub);
  GradedQuotient<F> lq(field, loc.presentation, max_degree);
  auto complement_dims = q.subalgebra_dims(complement, max_degree);
  for (int d = 1; d <= max_degree; ++d) {
    KernelRow row;
    row.degree = d;
    row.algebra_dim = q.dim(d);
    row.localized_dim = lq.dim(d);
    row.kernel_dim = row.algebra_dim - row.localized_dim;
    row.complement_span = complement_dims[static_cast<std::size_t>(d - 1)];
    if (row.complement_span != row.kernel_dim) rep.kernel_matches_complement_span = false;
    rep.kernel.push_back(row);
  }

  bool symbolic = true, established = true;
  for (const auto& v : check_replacement(field, pres, max_degree)) {
    if (v.kind != ReplacementVerdict::Kind::SymbolicHolonomy) symbolic = false;
    if (v.kind == ReplacementVerdict::Kind::NumericFails) established = false;
  }
  std::vector<const ArrBlock*> two_blocks;
  for (const auto& b : arr.blocks())
    if (b.members.size() == 2 && !b.commuting_pair) two_blocks.push_back(&b);
  bool disjoint = true;
  for (std::size_t i = 0; i < two_blocks.size() && disjoint; ++i)
    for (std::size_t j = i + 1; j < two_blocks.size(); ++j) {
      std::vector<int> common;
      std::set_intersection(two_blocks[i]->members.begin(), two_blocks[i]->members.end(),
                            two_blocks[j]->members.begin(), two_blocks[j]->members.end(),
                            std::back_inserter(common));
      if (!common.empty()) {
        disjoint = false;
        break;
      }
    }

  rep.splits = rep.undecidable == 0 && rep.nonzero == 0;
  if (rep.undecidable > 0) rep.verdict = Verdict::UndecidableAtD;
  else if (rep.nonzero > 0) rep.verdict = Verdict::DoesNotDecompose;
  else if (symbolic && established && disjoint) rep.verdict = Verdict::DecomposesAllDegrees;
  else rep.verdict = Verdict::DecomposesUpToD;
  return rep;
}

// ---------------------------------------------------------------------------

Assembled assemble(const ArrangementSpec& spec) {
  std::vector<int> degrees;
  for (const auto& n : spec.ground) degrees.push_back(spec.degree_of(n));

  SetArrangement arr = [&] {
    if (!spec.normals.empty()) {
      std::vector<std::vector<mpq_class>> vecs;
      for (const auto& name : spec.ground)
        for (const auto& [n, v] : spec.normals)
          if (n == name) vecs.push_back(v);
      return arrangement_from_normals(spec.ground, vecs);
    }
    std::vector<ArrBlock> blocks;
    for (const auto& b : spec.blocks) {
      ArrBlock blk;
      blk.label = b.label;
      for (const auto& n : b.members) {
        auto it = std::find(spec.ground.begin(), spec.ground.end(), n);
        blk.members.push_back(static_cast<int>(it - spec.ground.begin()));
      }
      blocks.push_back(std::move(blk));
    }
    return SetArrangement::validate(spec.ground, std::move(blocks));
  }();

  Assembled out{arr, [&] {
                  if (spec.mode == ArrangementSpec::Mode::Holonomy)
                    return holonomy_presentation(arr, degrees);
                  GeneratorList gens;
                  for (std::size_t i = 0; i < spec.ground.size(); ++i)
                    gens.add(spec.ground[i], degrees[i]);
                  std::vector<Relation> rels;
                  for (const auto& r : spec.relations) {
                    int bi = arr.block_index_of_label(r.block_label);
                    if (bi < 0) throw ParseError(r.line, 1, "unknown block label");
                    const auto& mem = arr.blocks()[static_cast<std::size_t>(bi)].members;
                    LieElement e = parse_lie_expr_at(r.text, gens, r.line, r.col);
                    for (const auto& [c, t] : e.terms())
                      for (unsigned char g : t->foliage())
                        if (!std::binary_search(mem.begin(), mem.end(), static_cast<int>(g)))
                          throw ParseError(r.line, r.col,
                                           "relation for block " + r.block_label +
                                               " uses generator '" + gens[g].name +
                                               "' outside the block");
                    if (!e.homogeneous_degree(gens))
                      throw ParseError(r.line, r.col, "relation is not weighted-homogeneous");
                    rels.push_back({std::move(e), r.block_label});
                  }
                  for (int x = 0; x < arr.ground_size(); ++x)
                    for (int y = x + 1; y < arr.ground_size(); ++y)
                      if (!arr.pair_covered(x, y))
                        rels.push_back({LieElement::monomial(1, LieTree::node(LieTree::leaf(x),
                                                                              LieTree::leaf(y))),
                                        kAmbientOrigin});
                  return Presentation(std::move(gens), std::move(rels), arr);
                }(),
                {},
                {},
                !spec.normals.empty()};

  for (std::size_t gi = 0; gi < spec.groups.size(); ++gi) {
    std::vector<int> idx;
    for (const auto& label : spec.groups[gi]) {
      int bi = arr.block_index_of_label(label);
      if (bi < 0) throw ParseError(1, 1, "group references unknown block label '" + label + "'");
      idx.push_back(bi);
    }
    out.groups.push_back(std::move(idx));
    out.group_names.push_back("G" + std::to_string(gi + 1));
  }
  return out;
}

template std::vector<ReplacementVerdict> check_replacement<RationalField>(const RationalField&,
                                                                          const Presentation&,
                                                                          int);
template std::vector<ReplacementVerdict> check_replacement<PrimeField>(const PrimeField&,
                                                                       const Presentation&, int);
template std::vector<TripleCheck> check_condition6<RationalField>(
    const GradedQuotient<RationalField>&, const std::vector<SubArrangement>&,
    const std::vector<std::string>&, int);
template std::vector<TripleCheck> check_condition6<PrimeField>(
    const GradedQuotient<PrimeField>&, const std::vector<SubArrangement>&,
    const std::vector<std::string>&, int);
template DecompositionReport verify_decomposition<RationalField>(
    const RationalField&, const Presentation&, const std::vector<std::vector<int>>&,
    const std::vector<std::string>&, int, int);
template DecompositionReport verify_decomposition<PrimeField>(
    const PrimeField&, const Presentation&, const std::vector<std::vector<int>>&,
    const std::vector<std::string>&, int, int);
template PartialReport partial_decomposition<RationalField>(const RationalField&,
                                                            const Presentation&,
                                                            const std::vector<int>&, int, int);
template PartialReport partial_decomposition<PrimeField>(const PrimeField&, const Presentation&,
                                                         const std::vector<int>&, int, int);

}  // namespace liearr
