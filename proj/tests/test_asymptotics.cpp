#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <utility>
#include <vector>

#include "altschur/asymptotics.hpp"
#include "altschur/characters.hpp"
#include "altschur/partition.hpp"

using namespace altschur;

namespace {

/* blunt oracle: per-shape hook-length products, no branching recursion */
MSplit split_direct(int k, int l, int n) {
  MSplit s;
  for (const Partition& p : enumerate_hooks(k, l, n)) {
    mpz_class f2 = f_lambda(p) * f_lambda(p);
    if (conjugate(p) == p)
      s.m2 += f2;
    else
      s.m1 += f2;
  }
  return s;
}

}  // namespace

TEST_CASE("c1 closed form: k (2k-1)! / 2^(k-1)") {
  CHECK(c1_constant(1) == mpq_class(1));
  CHECK(c1_constant(2) == mpq_class(6));
  CHECK(c1_constant(3) == mpq_class(90));
  CHECK(c1_constant(4) == mpq_class(2520));
  CHECK_THROWS_AS(c1_constant(0), std::invalid_argument);
}

TEST_CASE("branching recursion equals the per-shape census") {
  for (int k = 1; k <= 3; ++k) {
    std::vector<MSplit> table = m_split_table(k, 14);
    for (int n = 1; n <= 14; ++n) {
      MSplit direct = split_direct(k, k, n);
      CHECK(table[static_cast<size_t>(n)].m2 == direct.m2);
      CHECK(table[static_cast<size_t>(n)].m1 == direct.m1);
    }
  }
}

TEST_CASE("M1 + M2 is the image dimension oracle") {
  for (int k = 1; k <= 2; ++k) {
    std::vector<MSplit> table = m_split_table(k, 12);
    for (int n = 2; n <= 12; ++n)
      CHECK(table[static_cast<size_t>(n)].m1 + table[static_cast<size_t>(n)].m2 ==
            dim_image_S(k, k, n));
  }
}

TEST_CASE("sc-ratio at k = 1 is exactly 1/n on odd levels") {
  RatioSeries s = sc_ratio_series(1, 1, 99);
  for (const RatioPoint& p : s.points) {
    if (p.n % 2 == 1) {
      CHECK(p.value == mpq_class(1, p.n));
      CHECK(p.scaled == doctest::Approx(1.0).epsilon(1e-12));
    } else {
      CHECK(p.value == 0);
    }
  }
}

TEST_CASE("hook census law: frozen counts and normalization") {
  // [DERIVED] |H(2,2;10)| = 40; the law scales by k!^2 (2k-1)! / n^(2k-1)
  CHECK(count_hook(2, 2, 10) == 40);
  RatioSeries s = hook_count_law(2, 10, 10);
  REQUIRE(s.points.size() == 1);
  CHECK(s.points[0].value == mpq_class(40));
  CHECK(s.points[0].scaled == doctest::Approx(40.0 * 24.0 / 1000.0).epsilon(1e-12));
}

TEST_CASE("m-ratio variants: frozen small values") {
  // [DERIVED] k=1, n=3: M2 = 4 (only (2,1)), M1 = 2
  RatioSeries rest = m_ratio_series(1, 3, 3, MRatioVariant::Rest);
  CHECK(rest.points[0].value == mpq_class(2));
  RatioSeries total = m_ratio_series(1, 3, 3, MRatioVariant::Total);
  CHECK(total.points[0].value == mpq_class(2, 3));
  CHECK(total.law == "m-ratio(total)");
  CHECK(rest.law == "m-ratio(rest)");
}

TEST_CASE("full symmetric group: frozen self-conjugate ratios") {
  std::vector<FullSymPoint> pts = full_sym_ratio(2, 6);
  REQUIRE(pts.size() == 5);
  CHECK(pts[0].m2_over_m1 == 0);          // n = 2
  CHECK(pts[1].m2_over_m1 == 2);          // n = 3: 4 vs 2
  CHECK(pts[2].m2_over_m1 == mpq_class(1, 5));   // n = 4: 4 vs 20
  CHECK(pts[1].m2_over_total == mpq_class(2, 3));
  // [DERIVED] (3,2,1) is the lone self-conjugate shape of 6: 16^2 / 6! = 16/45
  CHECK(pts[4].m2_over_total == mpq_class(16, 45));
  CHECK_THROWS_AS(full_sym_ratio(2, 60), std::invalid_argument);
}

TEST_CASE("power-law fit recovers a synthetic law") {
  std::vector<std::pair<double, double>> xy;
  for (int n = 10; n <= 60; n += 5)
    xy.push_back({static_cast<double>(n), 3.5 * std::pow(n, -1.25)});
  PowerFit f = fit_power_law(xy);
  CHECK(f.exponent == doctest::Approx(-1.25).epsilon(1e-9));
  CHECK(f.constant == doctest::Approx(3.5).epsilon(1e-9));
  CHECK(f.points == 11);
  CHECK_THROWS_AS(fit_power_law({{1.0, 1.0}}), std::invalid_argument);
}

TEST_CASE("parity filter keeps the dominant residue class") {
  RatioSeries sc = sc_ratio_series(2, 10, 30);
  std::vector<std::pair<double, double>> pts = fit_points(sc, 10, 30, true);
  REQUIRE(pts.size() == 11);  // the even class dominates at k = 2
  for (const auto& [x, y] : pts) CHECK(static_cast<int>(x) % 2 == 0);
}

TEST_CASE("frozen window fits" * doctest::timeout(300)) {
  // [DERIVED] m-ratio(total), k=1, odd window [51,201]
  PowerFit f1 = fit_power_law(fit_points(m_ratio_series(1, 2, 201, MRatioVariant::Total), 51,
                                         201, true));
  CHECK(f1.exponent == doctest::Approx(-0.501196133287).epsilon(1e-6));
  CHECK(f1.constant == doctest::Approx(1.13612180135).epsilon(1e-6));
  CHECK(std::abs(f1.exponent + 0.5) < 0.05);
  CHECK(std::abs(f1.constant - 2.0 / std::sqrt(M_PI)) / (2.0 / std::sqrt(M_PI)) < 0.05);

  // [DERIVED] both m-ratio variants at k=2 sit near the n^-1 law on [40,120]
  RatioSeries rest2 = m_ratio_series(2, 2, 120, MRatioVariant::Rest);
  PowerFit f2 = fit_power_law(fit_points(rest2, 40, 120, true));
  CHECK(f2.exponent == doctest::Approx(-1.04348).epsilon(1e-3));
  RatioSeries total2 = m_ratio_series(2, 2, 120, MRatioVariant::Total);
  PowerFit f3 = fit_power_law(fit_points(total2, 40, 120, true));
  CHECK(f3.exponent == doctest::Approx(-1.01428).epsilon(1e-3));
  CHECK(std::abs(f3.exponent + 1.0) < 0.1);

  // [DERIVED] sc-ratio k=2 follows n^-2 with constant near c1(2) = 6
  PowerFit f4 = fit_power_law(fit_points(sc_ratio_series(2, 100, 160), 100, 160, true));
  CHECK(std::abs(f4.exponent + 2.0) < 0.1);
}

TEST_CASE("series refuse nonsense") {
  CHECK_THROWS_AS(m_split_table(1, 500), std::invalid_argument);
  CHECK_THROWS_AS(sc_ratio_series(0, 1, 5), std::invalid_argument);
  CHECK_THROWS_AS(m_ratio_series(1, 5, 2, MRatioVariant::Total), std::invalid_argument);
}
