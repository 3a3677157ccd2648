#pragma once

/*
 * Integer partitions, (k,l)-hook partitions and hook-length dimension counts.
 *
 * A partition is stored as its weakly decreasing list of positive parts; the
 * empty partition (weight 0) is allowed everywhere.  All enumerations return
 * partitions in descending lexicographic order: (n) first, (1^n) last.
 */

#include <gmpxx.h>

#include <string>
#include <vector>

namespace altschur {

struct Partition {
  std::vector<int> rows;

  Partition() = default;
  explicit Partition(std::vector<int> r);  // validates weak decrease/positivity

  int weight() const;
  int length() const { return static_cast<int>(rows.size()); }
  /* 0-based row access; rows beyond the length are 0. */
  int part(int i) const {
    return i >= 0 && i < length() ? rows[static_cast<size_t>(i)] : 0;
  }
  std::string str() const;  // "(3,1,1)", "()" for empty

  friend bool operator==(const Partition&, const Partition&) = default;
  friend bool operator<(const Partition& a, const Partition& b) {
    return a.rows < b.rows;
  }
};

Partition conjugate(const Partition& p);

/* p lies in the (k,l)-hook iff its (k+1)-st row is at most l. */
bool in_hook(const Partition& p, int k, int l);

/* Number of standard Young tableaux of shape p (hook length formula). */
mpz_class f_lambda(const Partition& p);

std::vector<Partition> enumerate_partitions(int n);

/* H(k,l;n) without enumerating all of Par(n); order matches the filtered
 * enumeration of enumerate_partitions. */
std::vector<Partition> enumerate_hooks(int k, int l, int n);

/* H = H0 ∪ H1 where H0 holds the members whose conjugate is again in the
 * hook and H1 the rest. */
struct HookSets {
  std::vector<Partition> H, H0, H1;
};
HookSets hook_sets(int k, int l, int n);

/* Self-conjugate members of H(k,k;n); these are exactly the partitions of n
 * into at most k distinct odd parts (principal hook lengths). */
std::vector<Partition> enumerate_sc_hooks(int k, int n);

struct SelfConjSets {
  std::vector<Partition> sc, nsc;  // split of H(k,k;n)
};
SelfConjSets sc_split(int k, int n);

/* Par_k(m): partitions of m into at most k parts. */
mpz_class par_k(int k, int m);

/* |H(k,l;n)| computed by a counting recursion, no enumeration. */
mpz_class count_hook(int k, int l, int n);

/* |Hsc(k,k;n)|: partitions of n into at most k distinct odd parts. */
mpz_class count_sc_hook(int k, int n);

/* Self-conjugate (k,k)-hooks with exactly k diagonal boxes:
 * Par_k((n-k^2)/2), and 0 when n < k^2 or n-k^2 is odd. */
mpz_class count_sc_boxed(int k, int n);

}  // namespace altschur
