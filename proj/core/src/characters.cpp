#include "altschur/characters.hpp"

#include <set>
#include <stdexcept>

namespace altschur {

CharacterOracle::CharacterOracle(int n) : n_(n) {
  if (n < 0 || n > 20) throw std::invalid_argument("character oracle needs 0 <= n <= 20");
  parts_ = enumerate_partitions(n);
  for (size_t i = 0; i < parts_.size(); ++i) index_[parts_[i]] = static_cast<int>(i);
}

int CharacterOracle::index_of(const Partition& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw std::invalid_argument("not a partition of n");
  return it->second;
}

/* Sum over border strips of size mu[mu_pos] removed from lam; the strip
 * spanning rows i..j leaves lam[t] = lam[t+1]-1 for i <= t < j and
 * lam[j] = lam[i] - size + (j-i), with height sign (-1)^{j-i}. */
long long CharacterOracle::mn(const std::vector<int>& lam, size_t mu_pos,
                              const std::vector<int>& mu) const {
  if (lam.empty()) return 1;  // mu exhausted at the same time by weight
  auto key = std::make_tuple(lam, mu_pos, mu);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  int size = mu[mu_pos];
  long long total = 0;
  int rows = static_cast<int>(lam.size());
  for (int i = 0; i < rows; ++i) {
    for (int j = i; j < rows; ++j) {
      std::vector<int> nu(lam);
      for (int t = i; t < j; ++t) nu[static_cast<size_t>(t)] = lam[static_cast<size_t>(t + 1)] - 1;
      nu[static_cast<size_t>(j)] = lam[static_cast<size_t>(i)] - size + (j - i);
      bool ok = nu[static_cast<size_t>(j)] >= 0 &&
                (j + 1 >= rows || nu[static_cast<size_t>(j)] >= lam[static_cast<size_t>(j + 1)]) &&
                (i == 0 || nu[static_cast<size_t>(i)] <= lam[static_cast<size_t>(i - 1)]);
      if (!ok) continue;
      for (int t = i; ok && t + 1 <= j; ++t)
        if (nu[static_cast<size_t>(t)] < nu[static_cast<size_t>(std::min(t + 1, j))]) ok = false;
      if (!ok) continue;
      while (!nu.empty() && nu.back() == 0) nu.pop_back();
      long long sub = mn(nu, mu_pos + 1, mu);
      total += ((j - i) % 2 == 0) ? sub : -sub;
    }
  }
  memo_[key] = total;
  return total;
}

long long CharacterOracle::chi(const Partition& lambda, const Partition& mu) const {
  if (lambda.weight() != n_ || mu.weight() != n_)
    throw std::invalid_argument("chi arguments must partition n");
  return mn(lambda.rows, 0, mu.rows);
}

mpz_class CharacterOracle::class_size(const Partition& mu) const {
  /* n! / z_mu with z_mu = prod_j j^{m_j} m_j! */
  mpz_class z = 1;
  int run = 0, prev = -1;
  auto flush = [&](int val, int cnt) {
    for (int t = 0; t < cnt; ++t) z *= val;
    mpz_class fac;
    mpz_fac_ui(fac.get_mpz_t(), static_cast<unsigned long>(cnt));
    z *= fac;
  };
  for (int v : mu.rows) {
    if (v == prev) {
      ++run;
    } else {
      if (prev > 0) flush(prev, run);
      prev = v;
      run = 1;
    }
  }
  if (prev > 0) flush(prev, run);
  mpz_class nf;
  mpz_fac_ui(nf.get_mpz_t(), static_cast<unsigned long>(n_));
  mpz_class c;
  mpz_divexact(c.get_mpz_t(), nf.get_mpz_t(), z.get_mpz_t());
  return c;
}

long long CharacterOracle::dim(const Partition& lambda) const {
  std::vector<int> ones(static_cast<size_t>(n_), 1);
  Partition mu;
  mu.rows = std::move(ones);
  return chi(lambda, mu);
}

mpz_class phi_star_trace(const Partition& mu, int k, int l) {
  mpz_class t = 1;
  for (int c : mu.rows) t *= (c % 2 == 1) ? (k + l) : (k - l);
  return t;
}

Multiplicities multiplicities(int k, int l, int n) {
  CharacterOracle oracle(n);
  mpz_class nf;
  mpz_fac_ui(nf.get_mpz_t(), static_cast<unsigned long>(n));

  std::vector<mpz_class> weights;  // |C_mu| * tr phi*(mu)
  for (const Partition& mu : oracle.classes())
    weights.push_back(oracle.class_size(mu) * phi_star_trace(mu, k, l));

  Multiplicities out;
  out.k = k;
  out.l = l;
  out.n = n;
  for (const Partition& lam : oracle.classes()) {
    mpz_class acc = 0;
    for (size_t i = 0; i < weights.size(); ++i)
      acc += weights[i] * static_cast<long>(oracle.chi(lam, oracle.classes()[i]));
    mpz_class m;
    mpz_class rem;
    mpz_fdiv_qr(m.get_mpz_t(), rem.get_mpz_t(), acc.get_mpz_t(), nf.get_mpz_t());
    if (rem != 0) throw std::logic_error("multiplicity not integral");
    if (m < 0) throw std::logic_error("negative multiplicity");
    out.m[lam] = m;
  }
  return out;
}

mpz_class dim_image_S(int k, int l, int n) {
  mpz_class d = 0;
  for (const Partition& lam : enumerate_hooks(k, l, n)) {
    mpz_class f = f_lambda(lam);
    d += f * f;
  }
  return d;
}

mpz_class dim_image_A(int k, int l, int n) {
  HookSets hs = hook_sets(k, l, n);
  std::set<Partition> hset(hs.H.begin(), hs.H.end());
  std::set<Partition> done;
  mpz_class d = 0;
  for (const Partition& lam : hs.H) {
    if (done.count(lam)) continue;
    Partition lc = conjugate(lam);
    mpz_class f = f_lambda(lam);
    if (lam == lc) {
      mpz_class half;
      mpz_divexact_ui(half.get_mpz_t(), mpz_class(f * f).get_mpz_t(), 2);
      d += half;
    } else if (hset.count(lc)) {
      d += f * f;  // the pair contributes one matrix block
      done.insert(lc);
    } else {
      d += f * f;
    }
    done.insert(lam);
  }
  return d;
}

mpz_class dim_centralizer_S(int k, int l, int n) {
  Multiplicities mm = multiplicities(k, l, n);
  mpz_class d = 0;
  for (const auto& [lam, m] : mm.m) d += m * m;
  return d;
}

mpz_class dim_centralizer_A(int k, int l, int n) {
  Multiplicities mm = multiplicities(k, l, n);
  std::set<Partition> done;
  mpz_class d = 0;
  for (const auto& [lam, m] : mm.m) {
    if (done.count(lam)) continue;
    Partition lc = conjugate(lam);
    if (lam == lc) {
      d += 2 * m * m;
    } else {
      mpz_class s = m + mm.at(lc);
      d += s * s;
      done.insert(lc);
    }
    done.insert(lam);
  }
  return d;
}

}  // namespace altschur
