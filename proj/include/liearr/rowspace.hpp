#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "liearr/field.hpp"

namespace liearr {

/// Sparse vector over a field: (column, coefficient) pairs sorted by column,
/// zero coefficients never stored.
template <class F>
using SparseVec = std::vector<std::pair<std::uint32_t, typename F::Elem>>;

template <class F>
SparseVec<F> to_sparse(const F& f, const std::vector<typename F::Elem>& dense) {
  SparseVec<F> v;
  for (std::uint32_t i = 0; i < dense.size(); ++i)
    if (!f.is_zero(dense[i])) v.emplace_back(i, dense[i]);
  return v;
}

template <class F>
std::vector<typename F::Elem> to_dense(const F& f, const SparseVec<F>& v, std::size_t ncols) {
  std::vector<typename F::Elem> dense(ncols, f.zero());
  for (const auto& [c, a] : v) dense.at(c) = a;
  return dense;
}

/// dst += coeff * src, merging sorted supports.
template <class F>
void add_scaled(const F& f, SparseVec<F>& dst, const typename F::Elem& coeff,
                const SparseVec<F>& src) {
  if (f.is_zero(coeff) || src.empty()) return;
  SparseVec<F> out;
  out.reserve(dst.size() + src.size());
  std::size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(std::move(dst[i++]));
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      out.emplace_back(src[j].first, f.mul(coeff, src[j].second));
      ++j;
    } else {
      auto s = f.add(dst[i].second, f.mul(coeff, src[j].second));
      if (!f.is_zero(s)) out.emplace_back(dst[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  dst = std::move(out);
}

template <class F>
void scale_vec(const F& f, SparseVec<F>& v, const typename F::Elem& c) {
  if (f.is_zero(c)) {
    v.clear();
    return;
  }
  for (auto& [col, a] : v) a = f.mul(a, c);
}

/// Row space kept in reduced row echelon form over a field. Insertion reduces
/// the incoming vector to its canonical coset representative, and existing
/// rows are back-substituted against every new pivot, so pivot entries are 1
/// and are the only nonzero entries in their columns.
template <class F>
class RowSpace {
 public:
  RowSpace(F field, std::size_t ncols)
      : field_(std::move(field)), ncols_(ncols), col_to_row_(ncols, -1) {}

  std::size_t ncols() const { return ncols_; }
  std::size_t rank() const { return rows_.size(); }
  const F& field() const { return field_; }

  std::vector<std::uint32_t> pivot_cols() const {
    std::vector<std::uint32_t> cols;
    cols.reserve(rows_.size());
    for (std::uint32_t c = 0; c < ncols_; ++c)
      if (col_to_row_[c] >= 0) cols.push_back(c);
    return cols;
  }

  /// RREF rows; each row's first entry is its pivot with coefficient 1.
  const std::vector<SparseVec<F>>& rows() const { return rows_; }

  /// Canonical coset representative of v modulo the row space. Idempotent;
  /// zero (empty) iff v lies in the space.
  SparseVec<F> reduce(SparseVec<F> v) const {
    check_len(v);
    for (std::size_t i = 0; i < v.size();) {
      int r = col_to_row_[v[i].first];
      if (r < 0) {
        ++i;
        continue;
      }
      // Row r's pivot is v[i].first and every other entry of row r has a
      // larger column, so entries before position i are untouched.
      add_scaled(field_, v, field_.neg(v[i].second), rows_[static_cast<std::size_t>(r)]);
    }
    return v;
  }

  /// Reduces v and, when the residue is nonzero, enlarges the space by it
  /// (rank grows by exactly 1). Returns the residue.
  SparseVec<F> insert(SparseVec<F> v) {
    SparseVec<F> residue = reduce(std::move(v));
    if (residue.empty()) return residue;
    SparseVec<F> row = residue;
    scale_vec(field_, row, field_.inv(row.front().second));
    std::uint32_t pivot = row.front().first;
    // Back-substitute so the new pivot column is zero in all older rows.
    for (auto& other : rows_) {
      auto it = std::lower_bound(other.begin(), other.end(), pivot,
                                 [](const auto& e, std::uint32_t c) { return e.first < c; });
      if (it != other.end() && it->first == pivot)
        add_scaled(field_, other, field_.neg(it->second), row);
    }
    col_to_row_[pivot] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(row));
    return residue;
  }

  bool contains(SparseVec<F> v) const { return reduce(std::move(v)).empty(); }

  // Dense-vector conveniences.
  std::vector<typename F::Elem> reduce_dense(const std::vector<typename F::Elem>& v) const {
    return to_dense(field_, reduce(to_sparse(field_, v)), ncols_);
  }
  std::vector<typename F::Elem> insert_dense(const std::vector<typename F::Elem>& v) {
    return to_dense(field_, insert(to_sparse(field_, v)), ncols_);
  }

 private:
  void check_len(const SparseVec<F>& v) const {
    if (!v.empty() && v.back().first >= ncols_)
      throw std::invalid_argument("vector length exceeds row space width");
  }

  F field_;
  std::size_t ncols_;
  std::vector<SparseVec<F>> rows_;
  std::vector<int> col_to_row_;
};

}  // namespace liearr
