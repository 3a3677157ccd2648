#pragma once

/*
 * The sign-permutation (super) action on tensor powers of a Z_2-graded space
 * V = V_0 + V_1 with dim V_0 = k, dim V_1 = l.  Basis words use letters
 * 0..k+l-1 (letters >= k odd) and are ordered lexicographically, big-endian:
 * rank(w) = sum_j w_j (k+l)^{n-1-j}.
 *
 * phi*_sigma sends a word w to w' with w'_{sigma(j)} = w_j and multiplies by
 * (-1)^{#{a<b : sigma(a)>sigma(b), w_a and w_b both odd}}.  For k = l the
 * operator T is the n-th tensor power of the parity flip tau with Koszul
 * signs: w -> w+k (mod 2k) letterwise, sign (-1)^{sum_j deg(w_j)(n-1-j)};
 * it satisfies T^2 = eps I with eps = (-1)^{n(n-1)/2}.
 */

#include <cstdint>
#include <vector>

#include "altschur/permutation.hpp"
#include "altschur/sparse.hpp"

namespace altschur {

struct GradedSpace {
  int k = 0, l = 0;

  int dim() const { return k + l; }
  bool odd(int letter) const { return letter >= k; }
  int64_t word_count(int n) const {
    int64_t d = 1;
    for (int i = 0; i < n; ++i) d *= dim();
    return d;
  }
};

void word_unrank(int64_t r, int m, int n, std::vector<int>& w);
int64_t word_rank(const std::vector<int>& w, int m);

/* A signed permutation matrix: column i carries sg[i] at row to[i]. */
struct SignedOp {
  int64_t d = 0;
  std::vector<int32_t> to;
  std::vector<int8_t> sg;

  static SignedOp identity(int64_t d);
  SignedOp compose(const SignedOp& other) const;  // matrix product this*other
  SignedOp inverse() const;
  long long trace() const;
  bool is_scalar(int s) const;  // equals s * identity
  friend bool operator==(const SignedOp&, const SignedOp&) = default;

  template <class F>
  SMat<F> matrix() const {
    SMat<F> m(d, d);
    for (int64_t i = 0; i < d; ++i)
      m.rows[static_cast<size_t>(to[static_cast<size_t>(i)])].emplace_back(
          i, sg[static_cast<size_t>(i)] > 0 ? F::one() : -F::one());
    for (auto& r : m.rows)
      std::sort(r.begin(), r.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
    return m;
  }
};

SignedOp phi_star(const Perm& sigma, const GradedSpace& g, int n);
/* eta*_sigma = sgn(sigma) phi*_sigma. */
SignedOp eta_star(const Perm& sigma, const GradedSpace& g, int n);
SignedOp big_T(int k, int n);
int epsilon_sign(int n);  // (-1)^{n(n-1)/2}

/* op * M and M * op without forming the signed permutation as a matrix. */
template <class F>
SMat<F> left_mul_signed(const SignedOp& op, const SMat<F>& m) {
  SMat<F> out(m.nrows, m.ncols);
  for (int64_t r = 0; r < m.nrows; ++r) {
    auto& row = m.rows[static_cast<size_t>(r)];
    if (row.empty()) continue;
    auto& orow = out.rows[static_cast<size_t>(op.to[static_cast<size_t>(r)])];
    orow = row;
    if (op.sg[static_cast<size_t>(r)] < 0)
      for (auto& e : orow) e.second = -e.second;
  }
  return out;
}

template <class F>
SMat<F> right_mul_signed(const SMat<F>& m, const SignedOp& op) {
  /* (M*P) column i = sg[i] * (M column to[i]) */
  std::vector<int64_t> from(static_cast<size_t>(op.d));
  for (int64_t i = 0; i < op.d; ++i) from[static_cast<size_t>(op.to[static_cast<size_t>(i)])] = i;
  SMat<F> out(m.nrows, m.ncols);
  for (int64_t r = 0; r < m.nrows; ++r) {
    auto& orow = out.rows[static_cast<size_t>(r)];
    for (auto& [c, v] : m.rows[static_cast<size_t>(r)]) {
      int64_t i = from[static_cast<size_t>(c)];
      orow.emplace_back(i, op.sg[static_cast<size_t>(i)] > 0 ? v : -v);
    }
    std::sort(orow.begin(), orow.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  return out;
}

enum class InvKind { Sym, Anti, Alt };

/* Joint eigenspace in V^{otimes n}: Sym fixes phi*_g for the Coxeter
 * generators, Anti twists them by the sign character, Alt fixes the
 * alternating generators.  Computed as the nullspace of the stacked
 * (phi*_g - t) equations. */
template <class F>
Subspace<F> invariant_space(const GradedSpace& g, int n, InvKind kind) {
  std::vector<Perm> gens = group_gens(n, kind == InvKind::Alt ? GroupKind::A : GroupKind::S);
  int64_t d = g.word_count(n);
  std::vector<SVec<F>> eqs;
  for (const Perm& p : gens) {
    SignedOp op = phi_star(p, g, n);
    F t = kind == InvKind::Anti ? F::from_int(perm_sign(p)) : F::one();
    for (int64_t i = 0; i < d; ++i) {
      /* sg[i] x_i - t x_{to[i]} = 0 */
      SVec<F> e;
      F s = op.sg[static_cast<size_t>(i)] > 0 ? F::one() : -F::one();
      int64_t j = op.to[static_cast<size_t>(i)];
      if (j == i) {
        F c = s - t;
        if (!c.is_zero()) e.t.emplace_back(i, c);
      } else {
        e.t.emplace_back(std::min(i, j), i < j ? s : -t);
        e.t.emplace_back(std::max(i, j), i < j ? -t : s);
      }
      if (!e.empty()) eqs.push_back(std::move(e));
    }
  }
  return nullspace<F>(std::move(eqs), d);
}

/* Same on End(V^{otimes n}) under L -> phi_g L phi_g^{-1} (resp. twisted by
 * sgn, resp. over the alternating generators), as a nullspace in d^2 cells. */
template <class F>
Subspace<F> operator_invariant_space(const GradedSpace& g, int n, InvKind kind) {
  std::vector<Perm> gens = group_gens(n, kind == InvKind::Alt ? GroupKind::A : GroupKind::S);
  int64_t d = g.word_count(n);
  std::vector<SVec<F>> eqs;
  for (const Perm& p : gens) {
    SignedOp op = phi_star(p, g, n);
    F t = kind == InvKind::Anti ? F::from_int(perm_sign(p)) : F::one();
    for (int64_t i = 0; i < d; ++i) {
      for (int64_t j = 0; j < d; ++j) {
        /* s_i s_j L_{ij} - t L_{to_i, to_j} = 0 */
        int sij = op.sg[static_cast<size_t>(i)] * op.sg[static_cast<size_t>(j)];
        F s = sij > 0 ? F::one() : -F::one();
        int64_t src = i * d + j;
        int64_t dst = op.to[static_cast<size_t>(i)] * d + op.to[static_cast<size_t>(j)];
        SVec<F> e;
        if (src == dst) {
          F c = s - t;
          if (!c.is_zero()) e.t.emplace_back(src, c);
        } else {
          e.t.emplace_back(std::min(src, dst), src < dst ? s : -t);
          e.t.emplace_back(std::max(src, dst), src < dst ? -t : s);
        }
        if (!e.empty()) eqs.push_back(std::move(e));
      }
    }
  }
  return nullspace<F>(std::move(eqs), d * d);
}

}  // namespace altschur
