#pragma once

/*
 * Theorem checkers.  Each verify_* builds the relevant operators, runs a
 * fixed list of exact checks and returns a VerificationReport; nothing is
 * asserted via floating point.  Arithmetic mode is chosen by ModeCtx: exact
 * (Gaussian rationals) or modular, where every check runs under two
 * independent primes and the results must agree entry for entry.
 *
 * Large span dimensions are certified through the translation trick: for a
 * symmetric idempotent E commuting with the action, <E phi_s, E phi_t> =
 * tr(E phi_{t s^{-1}}), so the Gram matrix of {E phi_s : s in G} only needs
 * the closed-form traces and the group's multiplication table.
 */

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "altschur/characters.hpp"
#include "altschur/field.hpp"
#include "altschur/partition.hpp"
#include "altschur/permutation.hpp"
#include "altschur/sparse.hpp"
#include "altschur/super.hpp"

namespace altschur {

struct Check {
  std::string name, expected, actual;
  bool pass = false;
};

struct VerificationReport {
  std::string theorem;
  int k = 0, l = 0, n = 0;
  std::string mode;
  bool applicable = true;
  std::string reason;  // set when not applicable
  std::vector<Check> checks;
  double elapsed_ms = 0.0;

  bool passed() const;
  void add(std::string name, std::string expected, std::string actual);
};

struct ModeCtx {
  bool modular = false;
  uint64_t p1 = 0, p2 = 0;  // used in modular mode only

  std::string str() const;
};

/* Sparse integer matrix: the numerator of a projector whose true entries are
 * entry/den for a shared denominator (n! here).  Plain int64 entries with
 * 128-bit accumulation; any overflow throws instead of wrapping. */
struct IntMat {
  int64_t d = 0;
  std::vector<std::vector<std::pair<int64_t, long long>>> rows;

  IntMat() = default;
  explicit IntMat(int64_t dim) : d(dim), rows(static_cast<size_t>(dim)) {}

  int64_t nnz() const;
  bool is_zero() const;
  mpz_class trace() const;
  IntMat mul(const IntMat& b) const;
  IntMat add(const IntMat& b, long long coef) const;
  IntMat transpose() const;
  bool is_symmetric() const;
  /* *this == c * identity */
  bool is_scaled_identity(long long c) const;
  /* *this == c * other */
  bool equals_scaled(const IntMat& other, long long c) const;

  template <class F>
  SMat<F> matrix(const mpz_class& den) const {
    SMat<F> m(d, d);
    for (int64_t r = 0; r < d; ++r)
      for (auto& [c, v] : rows[static_cast<size_t>(r)])
        m.rows[static_cast<size_t>(r)].emplace_back(
            c, F::from_ratio(mpz_class(static_cast<long>(v)), den));
    return m;
  }
};

/* phi*(e_lambda) for every lambda |- n as numerators over den = n!. */
struct IsotypicData {
  int k = 0, l = 0, n = 0;
  mpz_class den;
  std::vector<Partition> lambdas;  // descending lex, all of Par(n)
  std::vector<IntMat> num;
  std::vector<mpz_class> rank;  // trace/den; exact divisibility enforced
};
IsotypicData isotypic(int k, int l, int n);

/* Column space of num/den as a canonical subspace. */
template <class F>
Subspace<F> column_space(const IntMat& m, const mpz_class& den) {
  Subspace<F> out(m.d);
  IntMat t = m.transpose();
  for (int64_t c = 0; c < t.d; ++c) {
    SVec<F> v;
    for (auto& [r, val] : t.rows[static_cast<size_t>(c)])
      v.t.emplace_back(r, F::from_ratio(mpz_class(static_cast<long>(val)), den));
    out.insert(std::move(v));
  }
  return out;
}

/* span{vec(E phi_sigma) : sigma in group}; E = nullptr means the plain
 * image span of the represented group algebra. */
template <class F>
Subspace<F> image_span(GroupKind grp, int k, int l, int n, const IntMat* e = nullptr,
                       const mpz_class* den = nullptr) {
  GradedSpace g{k, l};
  int64_t d = g.word_count(n);
  Subspace<F> out(d * d);
  SMat<F> em;
  if (e) em = e->matrix<F>(*den);
  for (const Perm& p : enumerate_group(n, grp)) {
    SignedOp op = phi_star(p, g, n);
    if (e)
      out.insert(right_mul_signed(em, op).vec());
    else
      out.insert(op.matrix<F>().vec());
  }
  return out;
}

/* Centralizer as the commutant of the represented generators (route one;
 * operator_invariant_space in super.hpp is route two). */
template <class F>
Subspace<F> centralizer_commutant(GroupKind grp, int k, int l, int n) {
  GradedSpace g{k, l};
  int64_t d = g.word_count(n);
  std::vector<SMat<F>> gens;
  for (const Perm& p : group_gens(n, grp)) gens.push_back(phi_star(p, g, n).matrix<F>());
  return commutant<F>(gens, d);
}

/* Numerators over n! of tr(phi*(sum_{lambda in sel} e_lambda) phi_g) for
 * every g in S_n, indexed in enumerate_group(n, S) order.  Empty sel means
 * the unweighted trace table tr(phi_g) (numerator over 1). */
std::vector<mpz_class> weighted_trace_table(const std::vector<Partition>& sel, int k, int l,
                                            int n);

/* Rank of the Gram matrix of {E phi_s : s in grp} modulo p; the table is the
 * weighted trace table above. */
int64_t gram_span_dim_modp(GroupKind grp, int n, const std::vector<mpz_class>& trace_num,
                           uint64_t p);

VerificationReport verify_hook_theorem(int k, int l, int n, const ModeCtx& mc);
VerificationReport verify_crossed_product(int k, int n, const ModeCtx& mc);
VerificationReport verify_classical_anomaly(int k, int n, const ModeCtx& mc);
VerificationReport verify_pq(int k, int l, int n, const ModeCtx& mc);
VerificationReport verify_lemma_1_4(int k, int l, int n, const ModeCtx& mc);

/* The master invariant: image and centralizer dimensions by both oracles.
 * with_linalg = false restricts to the character oracle (resource guard). */
struct DimsRow {
  int k = 0, l = 0, n = 0;
  mpz_class im_s_char, im_a_char, cent_s_char, cent_a_char;
  long long im_s_la = -1, im_a_la = -1, cent_s_la = -1, cent_a_la = -1;
  bool with_linalg = false;
  bool routes_equal = false;  // commutant == operator_invariant_space
  bool agree = false;         // all linear-algebra dims match the character oracle
  std::string method;
};
DimsRow dims_row(int k, int l, int n, const ModeCtx& mc, bool with_linalg);

}  // namespace altschur
