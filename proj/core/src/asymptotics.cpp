#include "altschur/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "altschur/partition.hpp"

namespace altschur {

namespace {

mpz_class factorial_z(int n) {
  mpz_class f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

mpz_class pow_z(long base, int e) {
  mpz_class r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

void require_range(int n_lo, int n_hi) {
  if (n_lo < 1 || n_hi < n_lo) throw std::invalid_argument("bad n range");
}

/* Sum of f^2 over a level set by the branching recursion on the Young
 * lattice: f is pushed level by level along addable cells, restricted to the
 * (k,l)-hook when k >= 0 (every prefix of a chain into a hook shape stays in
 * the hook, so restricting each level is exact).  k < 0 means unrestricted. */
std::vector<MSplit> split_by_branching(int k, int l, int n_hi) {
  std::vector<MSplit> out(static_cast<size_t>(n_hi) + 1);
  std::vector<Partition> level{Partition()};
  std::vector<mpz_class> f{mpz_class(1)};
  out[0] = {mpz_class(1), mpz_class(0)};  // the empty shape is self-conjugate

  for (int m = 0; m < n_hi; ++m) {
    std::vector<Partition> next = (k >= 0) ? enumerate_hooks(k, l, m + 1)
                                           : enumerate_partitions(m + 1);
    /* descending lexicographic order; locate successors by binary search */
    auto slot = [&](const Partition& p) {
      auto it = std::lower_bound(next.begin(), next.end(), p,
                                 [](const Partition& a, const Partition& b) { return b < a; });
      if (it == next.end() || !(*it == p)) throw std::logic_error("branching successor not found");
      return static_cast<size_t>(it - next.begin());
    };
    std::vector<mpz_class> nf(next.size());
    for (size_t i = 0; i < level.size(); ++i) {
      const Partition& p = level[i];
      int len = p.length();
      for (int r = 0; r <= len; ++r) {
        if (r < len && r > 0 && p.part(r) == p.part(r - 1)) continue;  // not addable
        Partition q = p;
        if (r < len)
          ++q.rows[static_cast<size_t>(r)];
        else
          q.rows.push_back(1);
        if (k >= 0 && !in_hook(q, k, l)) continue;
        nf[slot(q)] += f[i];
      }
    }
    level = std::move(next);
    f = std::move(nf);
    MSplit& s = out[static_cast<size_t>(m) + 1];
    for (size_t i = 0; i < level.size(); ++i) {
      mpz_class sq = f[i] * f[i];
      if (conjugate(level[i]) == level[i])
        s.m2 += sq;
      else
        s.m1 += sq;
    }
  }
  return out;
}

}  // namespace

mpq_class c1_constant(int k) {
  if (k < 1) throw std::invalid_argument("c1 needs k >= 1");
  mpq_class c(k * factorial_z(2 * k - 1), pow_z(2, k - 1));
  c.canonicalize();
  return c;
}

RatioSeries sc_ratio_series(int k, int n_lo, int n_hi) {
  if (k < 1) throw std::invalid_argument("sc-ratio needs k >= 1");
  require_range(n_lo, n_hi);
  RatioSeries s{"sc-ratio", k, {}};
  for (int n = n_lo; n <= n_hi; ++n) {
    mpq_class v(count_sc_hook(k, n), count_hook(k, k, n));
    v.canonicalize();
    mpq_class scaled = v * pow_z(n, k);
    s.points.push_back({n, v, scaled.get_d()});
  }
  return s;
}

RatioSeries hook_count_law(int k, int n_lo, int n_hi) {
  if (k < 1) throw std::invalid_argument("hook-count needs k >= 1");
  require_range(n_lo, n_hi);
  mpz_class fs = factorial_z(k);
  mpz_class norm = fs * fs * factorial_z(2 * k - 1);
  RatioSeries s{"hook-count", k, {}};
  for (int n = n_lo; n <= n_hi; ++n) {
    mpq_class v(count_hook(k, k, n), 1);
    mpq_class scaled(count_hook(k, k, n) * norm, pow_z(n, 2 * k - 1));
    scaled.canonicalize();
    s.points.push_back({n, v, scaled.get_d()});
  }
  return s;
}

std::vector<MSplit> m_split_table(int k, int n_hi) {
  if (k < 1) throw std::invalid_argument("m-split needs k >= 1");
  if (n_hi < 0 || n_hi > 400) throw std::invalid_argument("m-split capped at n = 400");
  return split_by_branching(k, k, n_hi);
}

RatioSeries m_ratio_series(int k, int n_lo, int n_hi, MRatioVariant variant) {
  if (k < 1) throw std::invalid_argument("m-ratio needs k >= 1");
  require_range(n_lo, n_hi);
  std::vector<MSplit> table = m_split_table(k, n_hi);
  RatioSeries s{variant == MRatioVariant::Rest ? "m-ratio(rest)" : "m-ratio(total)", k, {}};
  for (int n = n_lo; n <= n_hi; ++n) {
    const MSplit& t = table[static_cast<size_t>(n)];
    mpz_class den = variant == MRatioVariant::Rest ? t.m1 : t.m1 + t.m2;
    mpq_class v = den == 0 ? mpq_class(0) : mpq_class(t.m2, den);
    v.canonicalize();
    double scaled = v.get_d() * std::pow(static_cast<double>(n), k / 2.0);
    s.points.push_back({n, v, scaled});
  }
  return s;
}

std::vector<FullSymPoint> full_sym_ratio(int n_lo, int n_hi) {
  require_range(n_lo, n_hi);
  if (n_hi > 40) throw std::invalid_argument("full-sym capped at n = 40");
  std::vector<MSplit> table = split_by_branching(-1, -1, n_hi);
  std::vector<FullSymPoint> out;
  for (int n = n_lo; n <= n_hi; ++n) {
    const MSplit& t = table[static_cast<size_t>(n)];
    FullSymPoint p;
    p.n = n;
    p.m2_over_m1 = t.m1 == 0 ? mpq_class(0) : mpq_class(t.m2, t.m1);
    p.m2_over_total = mpq_class(t.m2, t.m1 + t.m2);
    p.m2_over_m1.canonicalize();
    p.m2_over_total.canonicalize();
    out.push_back(std::move(p));
  }
  return out;
}

PowerFit fit_power_law(const std::vector<std::pair<double, double>>& xy) {
  if (xy.size() < 5) throw std::invalid_argument("fit needs at least 5 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [x, y] : xy) {
    if (x <= 0 || y <= 0) throw std::invalid_argument("fit needs positive points");
    double lx = std::log(x), ly = std::log(y);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  double n = static_cast<double>(xy.size());
  double denom = n * sxx - sx * sx;
  if (denom == 0) throw std::invalid_argument("fit is degenerate");
  PowerFit fit;
  fit.exponent = (n * sxy - sx * sy) / denom;
  fit.constant = std::exp((sy - fit.exponent * sx) / n);
  fit.points = static_cast<int>(xy.size());
  return fit;
}

std::vector<std::pair<double, double>> fit_points(const RatioSeries& s, int lo, int hi,
                                                  bool parity_filter) {
  std::vector<const RatioPoint*> window;
  for (const RatioPoint& p : s.points)
    if (p.n >= lo && p.n <= hi) window.push_back(&p);
  if (parity_filter && !window.empty()) {
    const RatioPoint* best = window.front();
    for (const RatioPoint* p : window)
      if (p->value > best->value) best = p;
    int parity = best->n % 2;
    std::erase_if(window, [&](const RatioPoint* p) { return p->n % 2 != parity; });
  }
  std::vector<std::pair<double, double>> out;
  out.reserve(window.size());
  for (const RatioPoint* p : window)
    out.emplace_back(static_cast<double>(p->n), p->value.get_d());
  return out;
}

}  // namespace altschur
