#pragma once

/*
 * Sparse exact linear algebra over a field F (GaussRat or Fp): sparse
 * vectors/matrices, canonically reduced echelon subspaces with sum and
 * intersection, nullspaces of sparse systems, commutants, and a dense
 * modular rank for Gram-matrix computations.
 *
 * Subspace maintains the reduced row echelon form at all times, so equal
 * subspaces compare equal row-by-row and results are mode-independent.
 * Pivoting is deterministic: first nonzero column, insertion order.
 */

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace altschur {

template <class F>
struct SVec {
  std::vector<std::pair<int64_t, F>> t;  // ascending index, nonzero values

  bool empty() const { return t.empty(); }
  int64_t leading() const { return t.empty() ? -1 : t.front().first; }

  const F* at(int64_t idx) const {
    auto it = std::lower_bound(t.begin(), t.end(), idx,
                               [](const auto& e, int64_t i) { return e.first < i; });
    return (it != t.end() && it->first == idx) ? &it->second : nullptr;
  }

  void scale(const F& c) {
    for (auto& e : t) e.second = e.second * c;
  }

  /* *this += c * w */
  void axpy(const F& c, const SVec& w) {
    std::vector<std::pair<int64_t, F>> merged;
    merged.reserve(t.size() + w.t.size());
    size_t i = 0, j = 0;
    while (i < t.size() || j < w.t.size()) {
      if (j == w.t.size() || (i < t.size() && t[i].first < w.t[j].first)) {
        merged.push_back(t[i++]);
      } else if (i == t.size() || w.t[j].first < t[i].first) {
        F v = c * w.t[j].second;
        if (!v.is_zero()) merged.emplace_back(w.t[j].first, std::move(v));
        ++j;
      } else {
        F v = t[i].second + c * w.t[j].second;
        if (!v.is_zero()) merged.emplace_back(t[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    t = std::move(merged);
  }

  void sort_combine() {
    std::sort(t.begin(), t.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<int64_t, F>> out;
    out.reserve(t.size());
    for (auto& e : t) {
      if (!out.empty() && out.back().first == e.first)
        out.back().second = out.back().second + e.second;
      else
        out.push_back(e);
    }
    std::erase_if(out, [](const auto& e) { return e.second.is_zero(); });
    t = std::move(out);
  }

  friend bool operator==(const SVec& a, const SVec& b) { return a.t == b.t; }
};

template <class F>
struct SMat {
  int64_t nrows = 0, ncols = 0;
  std::vector<std::vector<std::pair<int64_t, F>>> rows;  // per-row sorted columns

  SMat() = default;
  SMat(int64_t r, int64_t c) : nrows(r), ncols(c), rows(static_cast<size_t>(r)) {}

  static SMat identity(int64_t n) {
    SMat m(n, n);
    for (int64_t i = 0; i < n; ++i) m.rows[static_cast<size_t>(i)].emplace_back(i, F::one());
    return m;
  }

  int64_t nnz() const {
    int64_t s = 0;
    for (auto& r : rows) s += static_cast<int64_t>(r.size());
    return s;
  }
  bool is_zero() const { return nnz() == 0; }

  void scale(const F& c) {
    for (auto& r : rows)
      for (auto& e : r) e.second = e.second * c;
  }

  F trace() const {
    F s = F::zero();
    for (int64_t i = 0; i < nrows && i < ncols; ++i) {
      for (auto& e : rows[static_cast<size_t>(i)])
        if (e.first == i) s = s + e.second;
    }
    return s;
  }

  SMat transpose() const {
    SMat m(ncols, nrows);
    for (int64_t r = 0; r < nrows; ++r)
      for (auto& e : rows[static_cast<size_t>(r)])
        m.rows[static_cast<size_t>(e.first)].emplace_back(r, e.second);
    return m;
  }

  SMat mul(const SMat& b) const {
    if (ncols != b.nrows) throw std::invalid_argument("shape mismatch in mul");
    SMat out(nrows, b.ncols);
    static thread_local std::vector<F> scratch;
    static thread_local std::vector<int64_t> touched;
    if (static_cast<int64_t>(scratch.size()) < b.ncols)
      scratch.assign(static_cast<size_t>(b.ncols), F::zero());
    for (int64_t r = 0; r < nrows; ++r) {
      touched.clear();
      for (auto& [c1, v1] : rows[static_cast<size_t>(r)]) {
        for (auto& [c2, v2] : b.rows[static_cast<size_t>(c1)]) {
          if (scratch[static_cast<size_t>(c2)].is_zero()) touched.push_back(c2);
          scratch[static_cast<size_t>(c2)] = scratch[static_cast<size_t>(c2)] + v1 * v2;
        }
      }
      std::sort(touched.begin(), touched.end());
      auto& orow = out.rows[static_cast<size_t>(r)];
      for (int64_t c : touched) {
        if (!scratch[static_cast<size_t>(c)].is_zero())
          orow.emplace_back(c, scratch[static_cast<size_t>(c)]);
        scratch[static_cast<size_t>(c)] = F::zero();
      }
    }
    return out;
  }

  SMat add(const SMat& b, const F& coef) const {  // *this + coef * b
    if (nrows != b.nrows || ncols != b.ncols)
      throw std::invalid_argument("shape mismatch in add");
    SMat out(nrows, ncols);
    for (int64_t r = 0; r < nrows; ++r) {
      SVec<F> v;
      v.t = rows[static_cast<size_t>(r)];
      SVec<F> w;
      w.t = b.rows[static_cast<size_t>(r)];
      v.axpy(coef, w);
      out.rows[static_cast<size_t>(r)] = std::move(v.t);
    }
    return out;
  }

  SVec<F> vec() const {  // row-major flattening
    SVec<F> v;
    v.t.reserve(static_cast<size_t>(nnz()));
    for (int64_t r = 0; r < nrows; ++r)
      for (auto& e : rows[static_cast<size_t>(r)])
        v.t.emplace_back(r * ncols + e.first, e.second);
    return v;
  }

  friend bool operator==(const SMat& a, const SMat& b) {
    return a.nrows == b.nrows && a.ncols == b.ncols && a.rows == b.rows;
  }
};

template <class F>
SMat<F> unvec(const SVec<F>& v, int64_t nrows, int64_t ncols) {
  SMat<F> m(nrows, ncols);
  for (auto& [idx, val] : v.t)
    m.rows[static_cast<size_t>(idx / ncols)].emplace_back(idx % ncols, val);
  return m;
}

template <class F>
class Subspace {
 public:
  explicit Subspace(int64_t ambient) : ambient_(ambient) {}

  int64_t ambient() const { return ambient_; }
  int64_t dim() const { return static_cast<int64_t>(rows_.size()); }
  const std::vector<SVec<F>>& rows() const { return rows_; }
  const std::vector<int64_t>& pivots() const { return pivots_; }

  /* Residual of v after elimination; one pass suffices in RREF. */
  SVec<F> reduce(SVec<F> v) const {
    std::vector<std::pair<size_t, F>> hits;
    size_t pi = 0;
    for (auto& [c, x] : v.t) {
      while (pi < pivots_.size() && pivots_[pi] < c) ++pi;
      if (pi < pivots_.size() && pivots_[pi] == c) hits.emplace_back(pi, x);
    }
    for (auto& [slot, coef] : hits) v.axpy(-coef, rows_[slot]);
    return v;
  }

  bool contains(const SVec<F>& v) const { return reduce(v).empty(); }

  /* If v lies in the span, fills coords with the coefficients over rows(). */
  bool contains_with_coords(const SVec<F>& v, std::vector<F>& coords) const {
    coords.assign(rows_.size(), F::zero());
    SVec<F> w = v;
    std::vector<std::pair<size_t, F>> hits;
    size_t pi = 0;
    for (auto& [c, x] : w.t) {
      while (pi < pivots_.size() && pivots_[pi] < c) ++pi;
      if (pi < pivots_.size() && pivots_[pi] == c) hits.emplace_back(pi, x);
    }
    for (auto& [slot, coef] : hits) {
      coords[slot] = coef;
      w.axpy(-coef, rows_[slot]);
    }
    return w.empty();
  }

  bool insert(SVec<F> v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    v.scale(v.t.front().second.inv());
    int64_t piv = v.leading();
    for (auto& r : rows_) {
      const F* c = r.at(piv);
      if (c) {
        F coef = *c;
        r.axpy(-coef, v);
      }
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
    size_t idx = static_cast<size_t>(pos - pivots_.begin());
    pivots_.insert(pos, piv);
    rows_.insert(rows_.begin() + static_cast<long>(idx), std::move(v));
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
  }

  Subspace sum(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw std::invalid_argument("ambient mismatch");
    Subspace s = *this;
    for (const auto& r : other.rows_) s.insert(r);
    return s;
  }

  /* Zassenhaus: echelonize [a|a] and [b|0]; rows with pivot in the right
   * block give a basis of the intersection. */
  Subspace intersect(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw std::invalid_argument("ambient mismatch");
    Subspace work(2 * ambient_);
    for (const auto& r : rows_) {
      SVec<F> v = r;
      v.t.reserve(2 * r.t.size());
      for (auto& [c, x] : r.t) v.t.emplace_back(c + ambient_, x);
      work.insert(std::move(v));
    }
    for (const auto& r : other.rows_) work.insert(r);
    Subspace out(ambient_);
    for (size_t i = 0; i < work.rows_.size(); ++i) {
      if (work.pivots_[i] < ambient_) continue;
      SVec<F> v;
      for (auto& [c, x] : work.rows_[i].t) v.t.emplace_back(c - ambient_, x);
      out.insert(std::move(v));
    }
    return out;
  }

 private:
  int64_t ambient_;
  std::vector<int64_t> pivots_;  // ascending, parallel to rows_
  std::vector<SVec<F>> rows_;
};

/* Canonical basis of {x : e.x = 0 for all equations e}. */
template <class F>
Subspace<F> nullspace(std::vector<SVec<F>> eqs, int64_t nvars) {
  std::vector<SVec<F>> rows;
  std::vector<int64_t> pivcol;
  std::unordered_map<int64_t, int> pivot_of;
  std::unordered_map<int64_t, std::vector<int>> col_rows;  // stale entries allowed

  auto note_cols = [&](int slot, const SVec<F>& r, int64_t skip) {
    for (auto& [c, x] : r.t)
      if (c != skip) col_rows[c].push_back(slot);
  };

  for (SVec<F>& e : eqs) {
    std::vector<std::pair<int, F>> hits;
    for (auto& [c, x] : e.t) {
      auto it = pivot_of.find(c);
      if (it != pivot_of.end()) hits.emplace_back(it->second, x);
    }
    for (auto& [slot, coef] : hits) e.axpy(-coef, rows[static_cast<size_t>(slot)]);
    if (e.empty()) continue;
    int64_t lead = e.leading();
    e.scale(e.t.front().second.inv());
    int slot = static_cast<int>(rows.size());
    auto it = col_rows.find(lead);
    if (it != col_rows.end()) {
      std::vector<int> owners = std::move(it->second);
      col_rows.erase(it);
      std::sort(owners.begin(), owners.end());
      owners.erase(std::unique(owners.begin(), owners.end()), owners.end());
      for (int r : owners) {
        const F* val = rows[static_cast<size_t>(r)].at(lead);
        if (!val) continue;
        F coef = *val;
        rows[static_cast<size_t>(r)].axpy(-coef, e);
        note_cols(r, e, lead);
      }
    }
    pivot_of[lead] = slot;
    note_cols(slot, e, lead);
    pivcol.push_back(lead);
    rows.push_back(std::move(e));
  }

  Subspace<F> out(nvars);
  for (int64_t f = 0; f < nvars; ++f) {
    if (pivot_of.count(f)) continue;
    SVec<F> v;
    v.t.emplace_back(f, F::one());
    auto it = col_rows.find(f);
    if (it != col_rows.end()) {
      std::vector<int> owners = it->second;
      std::sort(owners.begin(), owners.end());
      owners.erase(std::unique(owners.begin(), owners.end()), owners.end());
      for (int r : owners) {
        const F* val = rows[static_cast<size_t>(r)].at(f);
        if (val) v.t.emplace_back(pivcol[static_cast<size_t>(r)], -*val);
      }
    }
    v.sort_combine();
    out.insert(std::move(v));
  }
  return out;
}

/* Basis of {X : XG = GX for all G in gens}, d x d unknowns flattened
 * row-major.  An empty generator list yields the full matrix space. */
template <class F>
Subspace<F> commutant(const std::vector<SMat<F>>& gens, int64_t d) {
  std::vector<SVec<F>> eqs;
  for (const SMat<F>& g : gens) {
    if (g.nrows != d || g.ncols != d) throw std::invalid_argument("generator shape");
    SMat<F> gt = g.transpose();
    for (int64_t a = 0; a < d; ++a) {
      for (int64_t b = 0; b < d; ++b) {
        SVec<F> e;
        for (auto& [c, v] : gt.rows[static_cast<size_t>(b)]) e.t.emplace_back(a * d + c, v);
        for (auto& [c, v] : g.rows[static_cast<size_t>(a)]) e.t.emplace_back(c * d + b, -v);
        e.sort_combine();
        if (!e.empty()) eqs.push_back(std::move(e));
      }
    }
  }
  return nullspace<F>(std::move(eqs), d * d);
}

/* In-place Gaussian elimination rank of a dense matrix mod p. */
int64_t dense_rank_modp(std::vector<std::vector<uint64_t>> m, uint64_t p);

}  // namespace altschur
