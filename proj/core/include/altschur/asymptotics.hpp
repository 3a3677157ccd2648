#pragma once

/*
 * Exact ratio series for the counting laws and the least-squares power-law
 * fit used to certify their decay rates.  Every series point carries the
 * exact rational value; "scaled" is the value times the predicted growth
 * (n^k, n^{k/2}, ...) and is the only floating-point quantity.
 */

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace altschur {

struct RatioPoint {
  int n = 0;
  mpq_class value;
  double scaled = 0.0;
};

struct RatioSeries {
  std::string law;
  int k = 0;
  std::vector<RatioPoint> points;
};

/* c1(k) = k (2k-1)! / 2^{k-1}: the limit of n^k |Hsc| / |H|. */
mpq_class c1_constant(int k);

/* value = |Hsc(k,k;n)| / |H(k,k;n)|, scaled = n^k * value. */
RatioSeries sc_ratio_series(int k, int n_lo, int n_hi);

/* value = |H(k,k;n)|, scaled = |H| k!^2 (2k-1)! / n^{2k-1} (tends to 1). */
RatioSeries hook_count_law(int k, int n_lo, int n_hi);

/* M2 = sum of f^2 over the self-conjugate members of H(k,k;n), M1 over the
 * rest; value = M2/M1 (Rest) or M2/(M1+M2) (Total), scaled = n^{k/2} value. */
enum class MRatioVariant { Rest, Total };
RatioSeries m_ratio_series(int k, int n_lo, int n_hi, MRatioVariant variant);

/* Same split over all of Par(n) (no hook restriction): M2/M1 and M2/n!.
 * No limiting law is asserted; capped at n = 40. */
struct FullSymPoint {
  int n = 0;
  mpq_class m2_over_m1, m2_over_total;
};
std::vector<FullSymPoint> full_sym_ratio(int n_lo, int n_hi);

/* The f^2 split itself, for cross-checking against the character oracle:
 * entry [n] covers size n, starting at n = 0. */
struct MSplit {
  mpz_class m2, m1;
};
std::vector<MSplit> m_split_table(int k, int n_hi);

struct PowerFit {
  double exponent = 0.0, constant = 0.0;
  int points = 0;
};

/* Least squares on (log x, log y); needs >= 5 points, all positive. */
PowerFit fit_power_law(const std::vector<std::pair<double, double>>& xy);

/* (n, value) pairs of the series inside [lo, hi]; with parity filtering only
 * the parity class of the largest value in the window is kept. */
std::vector<std::pair<double, double>> fit_points(const RatioSeries& s, int lo, int hi,
                                                  bool parity_filter);

}  // namespace altschur
