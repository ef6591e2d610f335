#include "liearr/presented.hpp"

#include <algorithm>
#include <cassert>

namespace liearr {

Presentation::Presentation(GeneratorList gens, std::vector<Relation> relations,
                           std::optional<SetArrangement> arrangement)
    : gens_(std::move(gens)), relations_(std::move(relations)),
      arrangement_(std::move(arrangement)) {
  if (gens_.size() == 0) throw std::invalid_argument("presentation needs generators");
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    auto& r = relations_[i];
    if (r.element.empty())
      throw std::invalid_argument("relation " + std::to_string(i + 1) + " (origin " + r.origin +
                                  ") is the zero element");
    auto deg = r.element.homogeneous_degree(gens_);
    if (!deg)
      throw std::invalid_argument("relation " + std::to_string(i + 1) + " (origin " + r.origin +
                                  "), '" + r.element.str(gens_) +
                                  "', is not weighted-homogeneous");
    r.degree = *deg;
    for (const auto& [c, t] : r.element.terms()) {
      if (t->is_leaf())
        throw std::invalid_argument("relation " + std::to_string(i + 1) + " (origin " + r.origin +
                                    ") has a bare generator term; relations must be "
                                    "commutators");
      for (unsigned char g : t->foliage())
        if (static_cast<int>(g) >= gens_.size())
          throw std::invalid_argument("relation references an unknown generator");
    }
  }
}

std::vector<Relation> Presentation::relations_of_block(const std::string& label) const {
  std::vector<Relation> out;
  for (const auto& r : relations_)
    if (r.origin == label) out.push_back(r);
  return out;
}

int Presentation::max_relation_degree() const {
  int m = 0;
  for (const auto& r : relations_) m = std::max(m, r.degree);
  return m;
}

namespace {

inline std::uint64_t memo_key(int da, std::size_t ia, int db, std::size_t ib) {
  return (static_cast<std::uint64_t>(da) << 56) | (static_cast<std::uint64_t>(ia) << 36) |
         (static_cast<std::uint64_t>(db) << 28) | static_cast<std::uint64_t>(ib);
}

}  // namespace

template <class F>
GradedQuotient<F>::GradedQuotient(F field, Presentation pres, int max_degree)
    : field_(std::move(field)), pres_(std::make_shared<const Presentation>(std::move(pres))),
      max_degree_(max_degree) {
  if (max_degree_ < 1) throw std::invalid_argument("truncation degree must be >= 1");
  const auto& gens = pres_->gens();
  if (gens.size() >= (1 << 8) ) throw std::invalid_argument("too many generators");
  for (const auto& r : pres_->relations())
    if (r.degree > max_degree_)
      warnings_.push_back("relation '" + r.element.str(gens) + "' of degree " +
                          std::to_string(r.degree) + " exceeds truncation degree " +
                          std::to_string(max_degree_) + " and is not imposed");
  basis_.resize(static_cast<std::size_t>(max_degree_));
  gen_table_.resize(static_cast<std::size_t>(max_degree_));
  gen_basis_index_.assign(static_cast<std::size_t>(gens.size()), -1);
  derived_dims_.assign(static_cast<std::size_t>(max_degree_) + 1, std::nullopt);
  for (int d = 1; d <= max_degree_; ++d) build_degree(d);
  building_degree_ = 0;
}

template <class F>
void GradedQuotient<F>::build_degree(int d) {
  const auto& gens = pres_->gens();
  const int n = gens.size();
  building_degree_ = d;

  // Candidate columns: degree-d generators first, then [x_g, b] pairs.
  std::size_t ncand = 0;
  gen_cand_index_.assign(static_cast<std::size_t>(n), static_cast<std::size_t>(-1));
  cand_index_.assign(static_cast<std::size_t>(n), {});
  std::vector<BasisElt> candidates;
  for (int g = 0; g < n; ++g)
    if (gens[g].degree == d) {
      gen_cand_index_[static_cast<std::size_t>(g)] = ncand++;
      candidates.push_back({g, -1});
    }
  for (int g = 0; g < n; ++g) {
    int e = d - gens[g].degree;
    if (e < 1) continue;
    const auto& lower = basis_[static_cast<std::size_t>(e - 1)];
    auto& row = cand_index_[static_cast<std::size_t>(g)];
    row.resize(lower.size());
    for (std::size_t i = 0; i < lower.size(); ++i) {
      row[i] = ncand++;
      candidates.push_back({g, static_cast<int>(i)});
    }
  }

  RowSpace<F> space(field_, ncand);

  // Defining relations of this degree.
  for (const auto& r : pres_->relations())
    if (r.degree == d) space.insert(eval_element(r.element, d));

  // Antisymmetry instances on basis pairs: [a,a] and [a,b]+[b,a].
  for (int da = 1; 2 * da <= d; ++da) {
    int db = d - da;
    if (db > max_degree_ || db < 1) continue;
    const auto na = basis_[static_cast<std::size_t>(da - 1)].size();
    const auto nb = basis_[static_cast<std::size_t>(db - 1)].size();
    for (std::size_t ia = 0; ia < na; ++ia) {
      std::size_t ib0 = (da == db) ? ia : 0;
      for (std::size_t ib = ib0; ib < nb; ++ib) {
        SparseVec<F> row = bracket_basis(da, ia, db, ib);
        if (da == db && ia == ib) {
          // [a,a] = 0 imposed on the nose (doubling would vanish in char 2)
          space.insert(std::move(row));
        } else {
          add_scaled(field_, row, field_.one(), bracket_basis(db, ib, da, ia));
          space.insert(std::move(row));
        }
      }
    }
  }

  // Jacobi instances on basis triples (sorted representatives suffice once
  // antisymmetry is imposed).
  for (int da = 1; 3 * da <= d; ++da) {
    for (int db = da; da + 2 * db <= d; ++db) {
      int dc = d - da - db;
      if (dc < db || dc > max_degree_) continue;
      const auto na = basis_[static_cast<std::size_t>(da - 1)].size();
      const auto nb = basis_[static_cast<std::size_t>(db - 1)].size();
      const auto nc = basis_[static_cast<std::size_t>(dc - 1)].size();
      for (std::size_t ia = 0; ia < na; ++ia) {
        std::size_t ib0 = (da == db) ? ia : 0;
        for (std::size_t ib = ib0; ib < nb; ++ib) {
          std::size_t ic0 = (db == dc) ? ib : 0;
          for (std::size_t ic = ic0; ic < nc; ++ic) {
            // [a,[b,c]] - [[a,b],c] - [b,[a,c]]
            SparseVec<F> bc = bracket_basis(db, ib, dc, ic);
            SparseVec<F> ab = bracket_basis(da, ia, db, ib);
            SparseVec<F> ac = bracket_basis(da, ia, dc, ic);
            SparseVec<F> ua{{static_cast<std::uint32_t>(ia), field_.one()}};
            SparseVec<F> ub{{static_cast<std::uint32_t>(ib), field_.one()}};
            SparseVec<F> uc{{static_cast<std::uint32_t>(ic), field_.one()}};
            SparseVec<F> row = bracket_vec(da, ua, db + dc, bc);
            add_scaled(field_, row, field_.neg(field_.one()),
                       bracket_vec(da + db, ab, dc, uc));
            add_scaled(field_, row, field_.neg(field_.one()),
                       bracket_vec(db, ub, da + dc, ac));
            space.insert(std::move(row));
          }
        }
      }
    }
  }

  // Survivors become the degree-d basis; every candidate's class is recorded.
  std::vector<char> is_pivot(ncand, 0);
  std::vector<const SparseVec<F>*> row_of_pivot(ncand, nullptr);
  for (const auto& row : space.rows()) {
    is_pivot[row.front().first] = 1;
    row_of_pivot[row.front().first] = &row;
  }
  std::vector<std::size_t> survivor_pos(ncand, static_cast<std::size_t>(-1));
  auto& basis = basis_[static_cast<std::size_t>(d - 1)];
  for (std::size_t c = 0; c < ncand; ++c)
    if (!is_pivot[c]) {
      survivor_pos[c] = basis.size();
      basis.push_back(candidates[c]);
    }
  std::vector<SparseVec<F>> class_of(ncand);
  for (std::size_t c = 0; c < ncand; ++c) {
    if (!is_pivot[c]) {
      class_of[c] = {{static_cast<std::uint32_t>(survivor_pos[c]), field_.one()}};
      continue;
    }
    // RREF row: pivot coefficient 1, tail supported on non-pivot columns.
    const SparseVec<F>& row = *row_of_pivot[c];
    SparseVec<F>& out = class_of[c];
    for (std::size_t k = 1; k < row.size(); ++k) {
      assert(!is_pivot[row[k].first]);
      out.emplace_back(static_cast<std::uint32_t>(survivor_pos[row[k].first]),
                       field_.neg(row[k].second));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }

  for (int g = 0; g < n; ++g)
    if (gens[g].degree == d) {
      std::size_t c = gen_cand_index_[static_cast<std::size_t>(g)];
      if (is_pivot[c])
        throw std::logic_error("generator '" + gens[g].name +
                               "' was eliminated by relations; relations are not in the "
                               "derived subalgebra");
      gen_basis_index_[static_cast<std::size_t>(g)] = static_cast<int>(survivor_pos[c]);
    }

  for (int g = 0; g < n; ++g) {
    int e = d - gens[g].degree;
    if (e < 1) continue;
    auto& table_level = gen_table_[static_cast<std::size_t>(e - 1)];
    if (table_level.empty()) table_level.resize(static_cast<std::size_t>(n));
    auto& cells = table_level[static_cast<std::size_t>(g)];
    const auto& row = cand_index_[static_cast<std::size_t>(g)];
    cells.resize(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) cells[i] = class_of[row[i]];
  }

  // Rewrite memoized degree-d brackets from candidate to basis coordinates.
  for (auto& [key, vec] : memo_) {
    int da = static_cast<int>(key >> 56);
    int db = static_cast<int>((key >> 28) & 0xff);
    if (da + db != d) continue;
    SparseVec<F> rewritten;
    for (const auto& [c, a] : vec) add_scaled(field_, rewritten, a, class_of[c]);
    vec = std::move(rewritten);
  }

  building_degree_ = 0;
  cand_index_.clear();
  gen_cand_index_.clear();
}

template <class F>
SparseVec<F> GradedQuotient<F>::gen_apply(int g, int d, std::size_t i) const {
  const int out_degree = d + pres_->gens()[g].degree;
  if (out_degree == building_degree_) {
    return {{static_cast<std::uint32_t>(cand_index_[static_cast<std::size_t>(g)].at(i)),
             field_.one()}};
  }
  if (out_degree > max_degree_) throw UndecidableAtDegree(out_degree, max_degree_);
  return gen_table_[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(g)].at(i);
}

template <class F>
SparseVec<F> GradedQuotient<F>::gen_apply_vec(int g, int d, const SparseVec<F>& v) const {
  SparseVec<F> out;
  for (const auto& [i, a] : v) add_scaled(field_, out, a, gen_apply(g, d, i));
  return out;
}

template <class F>
SparseVec<F> GradedQuotient<F>::bracket_basis(int da, std::size_t ia, int db,
                                              std::size_t ib) const {
  const int total = da + db;
  if (total > max_degree_) throw UndecidableAtDegree(total, max_degree_);
  const std::uint64_t key = memo_key(da, ia, db, ib);
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  const BasisElt alpha = basis_[static_cast<std::size_t>(da - 1)][ia];
  SparseVec<F> result;
  if (alpha.parent < 0) {
    result = gen_apply(alpha.gen, db, ib);
  } else {
    const int dg = pres_->gens()[alpha.gen].degree;
    const int dp = da - dg;
    // [alpha, b] = [g, [alpha', b]] - [alpha', [g, b]]
    SparseVec<F> inner = bracket_basis(dp, static_cast<std::size_t>(alpha.parent), db, ib);
    result = gen_apply_vec(alpha.gen, dp + db, inner);
    SparseVec<F> gb = gen_apply(alpha.gen, db, ib);
    SparseVec<F> up{{static_cast<std::uint32_t>(alpha.parent), field_.one()}};
    add_scaled(field_, result, field_.neg(field_.one()), bracket_vec(dp, up, dg + db, gb));
  }
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    memo_.emplace(key, result);
  }
  return result;
}

template <class F>
SparseVec<F> GradedQuotient<F>::bracket_vec(int da, const SparseVec<F>& u, int db,
                                            const SparseVec<F>& v) const {
  SparseVec<F> out;
  for (const auto& [ia, a] : u)
    for (const auto& [ib, b] : v) {
      auto c = field_.mul(a, b);
      if (field_.is_zero(c)) continue;
      add_scaled(field_, out, c, bracket_basis(da, ia, db, ib));
    }
  return out;
}

template <class F>
SparseVec<F> GradedQuotient<F>::bracket(int du, const SparseVec<F>& u, int dv,
                                        const SparseVec<F>& v) const {
  return bracket_vec(du, u, dv, v);
}

template <class F>
SparseVec<F> GradedQuotient<F>::eval_tree(const LieTreePtr& t) const {
  const auto& gens = pres_->gens();
  if (t->is_leaf()) {
    int g = t->gen();
    int d = gens[g].degree;
    if (d == building_degree_)
      return {{static_cast<std::uint32_t>(gen_cand_index_[static_cast<std::size_t>(g)]),
               field_.one()}};
    if (d > max_degree_) throw UndecidableAtDegree(d, max_degree_);
    int i = gen_basis_index_[static_cast<std::size_t>(g)];
    assert(i >= 0);
    return {{static_cast<std::uint32_t>(i), field_.one()}};
  }
  int dl = t->left()->degree(gens);
  int dr = t->right()->degree(gens);
  return bracket_vec(dl, eval_tree(t->left()), dr, eval_tree(t->right()));
}

template <class F>
SparseVec<F> GradedQuotient<F>::eval_element(const LieElement& e, int degree) const {
  SparseVec<F> out;
  for (const auto& [c, t] : e.terms()) {
    auto coeff = field_.from_mpz(c);
    if (field_.is_zero(coeff)) continue;
    add_scaled(field_, out, coeff, eval_tree(t));
  }
  (void)degree;
  return out;
}

template <class F>
long long GradedQuotient<F>::dim(int d) const {
  return static_cast<long long>(basis_[idx(d)].size());
}

template <class F>
long long GradedQuotient<F>::ideal_rank(int d) const {
  return witt_dimension(pres_->gens().degrees(), d) - dim(d);
}

template <class F>
std::vector<SparseVec<F>> GradedQuotient<F>::derived_component(int d) const {
  idx(d);
  std::vector<SparseVec<F>> out;
  for (int da = 1; 2 * da <= d; ++da) {
    int db = d - da;
    const auto na = basis_[static_cast<std::size_t>(da - 1)].size();
    const auto nb = basis_[static_cast<std::size_t>(db - 1)].size();
    for (std::size_t ia = 0; ia < na; ++ia) {
      std::size_t ib0 = (da == db) ? ia + 1 : 0;
      for (std::size_t ib = ib0; ib < nb; ++ib) out.push_back(bracket_basis(da, ia, db, ib));
    }
  }
  return out;
}

template <class F>
long long GradedQuotient<F>::derived_dim(int d) const {
  idx(d);
  auto& cache = derived_dims_[static_cast<std::size_t>(d)];
  if (cache) return *cache;
  RowSpace<F> span(field_, basis_[idx(d)].size());
  for (auto& v : derived_component(d)) span.insert(std::move(v));
  cache = static_cast<long long>(span.rank());
  return *cache;
}

template <class F>
DimSeries GradedQuotient<F>::dim_series() const {
  DimSeries out;
  for (int d = 1; d <= max_degree_; ++d) out.push_back({d, dim(d), derived_dim(d)});
  return out;
}

template <class F>
SparseVec<F> GradedQuotient<F>::reduce(const LieElement& e) const {
  if (e.empty()) return {};
  auto deg = e.homogeneous_degree(pres_->gens());
  if (!deg) throw std::invalid_argument("reduce requires a homogeneous element");
  if (*deg > max_degree_) throw UndecidableAtDegree(*deg, max_degree_);
  return eval_element(e, *deg);
}

template <class F>
bool GradedQuotient<F>::is_zero(const LieElement& e) const {
  return reduce(e).empty();
}

template <class F>
std::string GradedQuotient<F>::basis_name(int d, std::size_t i) const {
  const auto& gens = pres_->gens();
  const BasisElt& b = basis_[idx(d)].at(i);
  if (b.parent < 0) return gens[b.gen].name;
  int dp = d - gens[b.gen].degree;
  return "[" + gens[b.gen].name + "," + basis_name(dp, static_cast<std::size_t>(b.parent)) + "]";
}

template <class F>
std::string GradedQuotient<F>::vec_str(int d, const SparseVec<F>& v) const {
  if (v.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [i, a] : v) {
    std::string coeff = field_.str(a);
    if (!first) s += " + ";
    first = false;
    if (coeff != "1") s += coeff + "*";
    s += basis_name(d, i);
  }
  return s;
}

template <class F>
std::vector<RowSpace<F>> GradedQuotient<F>::subalgebra_span(const std::vector<int>& gen_ids,
                                                            int up_to) const {
  if (up_to < 1 || up_to > max_degree_) throw UndecidableAtDegree(up_to, max_degree_);
  const auto& gens = pres_->gens();
  std::vector<RowSpace<F>> span;
  span.reserve(static_cast<std::size_t>(up_to));
  for (int d = 1; d <= up_to; ++d) span.emplace_back(field_, basis_[idx(d)].size());

  std::vector<int> chosen = gen_ids;
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  for (int g : chosen) {
    if (g < 0 || g >= gens.size()) throw std::invalid_argument("generator index out of range");
    int d = gens[g].degree;
    if (d > up_to) continue;
    span[static_cast<std::size_t>(d - 1)].insert(
        {{static_cast<std::uint32_t>(gen_basis_index_[static_cast<std::size_t>(g)]),
          field_.one()}});
  }
  for (int d = 2; d <= up_to; ++d) {
    for (int da = 1; 2 * da <= d; ++da) {
      int db = d - da;
      // copies: rows() references would dangle as insertions reallocate
      const std::vector<SparseVec<F>> rows_a = span[static_cast<std::size_t>(da - 1)].rows();
      const std::vector<SparseVec<F>> rows_b = span[static_cast<std::size_t>(db - 1)].rows();
      for (const auto& u : rows_a)
        for (const auto& v : rows_b)
          span[static_cast<std::size_t>(d - 1)].insert(bracket_vec(da, u, db, v));
    }
  }
  return span;
}

template <class F>
std::vector<long long> GradedQuotient<F>::subalgebra_dims(const std::vector<int>& gen_ids,
                                                          int up_to) const {
  std::vector<long long> dims;
  for (const auto& space : subalgebra_span(gen_ids, up_to))
    dims.push_back(static_cast<long long>(space.rank()));
  return dims;
}

template class GradedQuotient<RationalField>;
template class GradedQuotient<PrimeField>;

}  // namespace liearr
