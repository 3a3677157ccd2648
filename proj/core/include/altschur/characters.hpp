#pragma once

/*
 * Irreducible S_n characters via the Murnaghan-Nakayama rule, conjugacy class
 * sizes, the closed-form trace of the sign-permutation action, and the
 * character-theoretic dimension formulas used as the second oracle:
 * multiplicities, image dimensions and centralizer dimensions for both groups.
 */

#include <gmpxx.h>

#include <map>
#include <tuple>
#include <vector>

#include "altschur/partition.hpp"

namespace altschur {

class CharacterOracle {
 public:
  explicit CharacterOracle(int n);  // 0 <= n <= 20

  int n() const { return n_; }
  const std::vector<Partition>& classes() const { return parts_; }
  int index_of(const Partition& p) const;

  /* chi^lambda evaluated on the class of cycle type mu. */
  long long chi(const Partition& lambda, const Partition& mu) const;
  mpz_class class_size(const Partition& mu) const;
  long long dim(const Partition& lambda) const;  // chi(lambda, (1^n))

 private:
  long long mn(const std::vector<int>& lam, size_t mu_pos,
               const std::vector<int>& mu) const;

  int n_;
  std::vector<Partition> parts_;
  std::map<Partition, int> index_;
  mutable std::map<std::tuple<std::vector<int>, size_t, std::vector<int>>, long long>
      memo_;
};

/* Trace of phi* on a permutation of cycle type mu acting on (k|l)-graded
 * words: product over cycle lengths c of (k + (-1)^{c+1} l). */
mpz_class phi_star_trace(const Partition& mu, int k, int l);

/* Multiplicity of each irreducible in the sign-permutation module:
 * m_lambda = (1/n!) sum_mu |C_mu| chi^lambda(mu) tr phi*(mu). */
struct Multiplicities {
  int k, l, n;
  std::map<Partition, mpz_class> m;  // every lambda |- n, zeros included

  mpz_class at(const Partition& lam) const {
    auto it = m.find(lam);
    return it == m.end() ? mpz_class(0) : it->second;
  }
};
Multiplicities multiplicities(int k, int l, int n);

/* dim phi*(F S_n) = sum over H of (f^lambda)^2. */
mpz_class dim_image_S(int k, int l, int n);
/* dim phi*(F A_n): conjugate pairs inside H fuse, self-conjugates halve. */
mpz_class dim_image_A(int k, int l, int n);
/* dim End_{S_n}(V^{otimes n}) = sum of m_lambda^2. */
mpz_class dim_centralizer_S(int k, int l, int n);
/* dim End_{A_n}(V^{otimes n}): unordered conjugate pairs {lambda, lambda'}
 * contribute (m_lambda + m_{lambda'})^2, self-conjugates 2 m_lambda^2. */
mpz_class dim_centralizer_A(int k, int l, int n);

}  // namespace altschur
