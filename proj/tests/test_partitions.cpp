#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "altschur/partition.hpp"

using namespace altschur;

namespace {

/* Independent enumeration: weakly decreasing sequences harvested from all
 * compositions of n (binary choice of bar positions). */
std::vector<Partition> partitions_by_compositions(int n) {
  std::vector<Partition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
    std::vector<int> parts;
    int run = 1;
    for (int i = 0; i < n - 1; ++i) {
      if (mask & (1 << i)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    if (std::is_sorted(parts.begin(), parts.end(), std::greater<int>()))
      out.emplace_back(parts);
  }
  std::sort(out.begin(), out.end(),
            [](const Partition& a, const Partition& b) { return b.rows < a.rows; });
  return out;
}

/* Euler's pentagonal number recurrence for p(n). */
std::vector<long long> partition_numbers(int nmax) {
  std::vector<long long> p(static_cast<size_t>(nmax) + 1, 0);
  p[0] = 1;
  for (int n = 1; n <= nmax; ++n) {
    long long s = 0;
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > n && g2 > n) break;
      long long sign = (k % 2 == 1) ? 1 : -1;
      if (g1 <= n) s += sign * p[static_cast<size_t>(n - g1)];
      if (g2 <= n) s += sign * p[static_cast<size_t>(n - g2)];
    }
    p[static_cast<size_t>(n)] = s;
  }
  return p;
}

/* Transpose via the explicit Young diagram. */
Partition conj_by_grid(const Partition& p) {
  if (p.rows.empty()) return {};
  std::vector<int> cols(static_cast<size_t>(p.rows[0]), 0);
  for (int r : p.rows)
    for (int c = 0; c < r; ++c) ++cols[static_cast<size_t>(c)];
  return Partition(cols);
}

/* f^lambda by the branching recursion: sum over removable corners. */
long long syt_count(std::vector<int> shape, std::map<std::vector<int>, long long>& memo) {
  while (!shape.empty() && shape.back() == 0) shape.pop_back();
  if (shape.empty()) return 1;
  auto it = memo.find(shape);
  if (it != memo.end()) return it->second;
  long long total = 0;
  for (size_t i = 0; i < shape.size(); ++i) {
    bool corner = (i + 1 == shape.size()) || shape[i] > shape[i + 1];
    if (!corner) continue;
    std::vector<int> sub = shape;
    --sub[i];
    total += syt_count(sub, memo);
  }
  memo[shape] = total;
  return total;
}

}  // namespace

TEST_CASE("constructor validates shape") {
  CHECK_THROWS_AS(Partition({2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({3, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
  CHECK(Partition().weight() == 0);
  CHECK(Partition({4, 2, 2, 1}).weight() == 9);
  CHECK(Partition({4, 2, 2, 1}).length() == 4);
  CHECK(Partition({4, 2, 2, 1}).part(1) == 2);
  CHECK(Partition({4, 2, 2, 1}).part(9) == 0);
  CHECK(Partition({3, 1, 1}).str() == "(3,1,1)");
  CHECK(Partition().str() == "()");
}

TEST_CASE("enumeration matches the composition filter, order included") {
  for (int n = 0; n <= 12; ++n) {
    auto got = enumerate_partitions(n);
    auto want = partitions_by_compositions(n);
    REQUIRE(got.size() == want.size());
    CHECK(got == want);
  }
}

TEST_CASE("partition counts follow the pentagonal recurrence") {
  auto p = partition_numbers(30);
  // [DERIVED] first values of the partition sequence, cross-checked against
  // the pentagonal recurrence below.
  std::vector<long long> first10 = {1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 1; n <= 10; ++n) CHECK(p[static_cast<size_t>(n)] == first10[static_cast<size_t>(n - 1)]);
  for (int n = 0; n <= 14; ++n)
    CHECK(static_cast<long long>(enumerate_partitions(n).size()) == p[static_cast<size_t>(n)]);
}

TEST_CASE("conjugation transposes the diagram and is an involution") {
  for (int n = 0; n <= 11; ++n) {
    for (const auto& lam : enumerate_partitions(n)) {
      CHECK(conjugate(lam) == conj_by_grid(lam));
      CHECK(conjugate(conjugate(lam)) == lam);
      CHECK(conjugate(lam).weight() == n);
    }
  }
  CHECK(conjugate(Partition({4, 2, 1})) == Partition({3, 2, 1, 1}));
}

TEST_CASE("hook membership and the direct hook enumeration agree") {
  for (int n = 0; n <= 12; ++n) {
    for (int k = 0; k <= 3; ++k) {
      for (int l = 0; l <= 3; ++l) {
        std::vector<Partition> filtered;
        for (const auto& p : enumerate_partitions(n))
          if (in_hook(p, k, l)) filtered.push_back(p);
        CHECK(enumerate_hooks(k, l, n) == filtered);
        CHECK(count_hook(k, l, n) == mpz_class(static_cast<long>(filtered.size())));
      }
    }
  }
}

TEST_CASE("hook membership boundary cases") {
  CHECK(in_hook(Partition({3, 3}), 2, 0));
  CHECK(!in_hook(Partition({3, 3}), 1, 2));
  CHECK(in_hook(Partition({3, 3}), 1, 3));
  CHECK(in_hook(Partition(), 0, 0));
  CHECK(!in_hook(Partition({1}), 0, 0));
  CHECK(in_hook(Partition({5, 1, 1, 1}), 1, 1));
}

TEST_CASE("hook_sets splits by conjugate membership") {
  for (int n = 2; n <= 10; ++n) {
    for (auto [k, l] : {std::pair{1, 1}, {2, 1}, {2, 2}, {3, 1}, {2, 0}}) {
      auto hs = hook_sets(k, l, n);
      CHECK(hs.H.size() == hs.H0.size() + hs.H1.size());
      std::set<Partition> h0(hs.H0.begin(), hs.H0.end());
      for (const auto& p : hs.H) {
        bool conj_in = in_hook(conjugate(p), k, l);
        CHECK(conj_in == (h0.count(p) > 0));
      }
      for (const auto& p : hs.H1) CHECK(!in_hook(conjugate(p), k, l));
    }
  }
}

TEST_CASE("f_lambda matches the branching recursion") {
  std::map<std::vector<int>, long long> memo;
  for (int n = 0; n <= 10; ++n) {
    mpz_class sum_sq = 0, fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    for (const auto& lam : enumerate_partitions(n)) {
      mpz_class f = f_lambda(lam);
      CHECK(f == mpz_class(static_cast<long>(syt_count(lam.rows, memo))));
      CHECK(f == f_lambda(conjugate(lam)));
      sum_sq += f * f;
    }
    CHECK(sum_sq == fact);
  }
}

TEST_CASE("f_lambda frozen values for n = 5") {
  // [DERIVED] hook length formula evaluated by hand for the seven shapes.
  std::vector<long> want = {1, 4, 5, 6, 5, 4, 1};
  auto parts = enumerate_partitions(5);
  REQUIRE(parts.size() == 7);
  for (size_t i = 0; i < parts.size(); ++i) CHECK(f_lambda(parts[i]) == mpz_class(want[i]));
  CHECK(f_lambda(Partition({6, 6, 6, 6, 6, 6})) == mpz_class("1671643033734960"));
}

TEST_CASE("par_k against brute enumeration") {
  for (int m = 0; m <= 18; ++m) {
    for (int k = 0; k <= 6; ++k) {
      long cnt = 0;
      for (const auto& p : enumerate_partitions(m))
        if (p.length() <= k) ++cnt;
      CHECK(par_k(k, m) == mpz_class(cnt));
    }
  }
  CHECK(par_k(3, -1) == 0);
  CHECK(par_k(0, 0) == 1);
  CHECK(par_k(0, 5) == 0);
}

TEST_CASE("self-conjugate hook enumeration") {
  for (int k = 1; k <= 4; ++k) {
    for (int n = 0; n <= 16; ++n) {
      auto sc = enumerate_sc_hooks(k, n);
      std::set<Partition> seen(sc.begin(), sc.end());
      CHECK(seen.size() == sc.size());
      for (const auto& p : sc) {
        CHECK(p.weight() == n);
        CHECK(conjugate(p) == p);
        CHECK(in_hook(p, k, k));
      }
      long brute = 0;
      for (const auto& p : enumerate_partitions(n))
        if (conjugate(p) == p && in_hook(p, k, k)) ++brute;
      CHECK(static_cast<long>(sc.size()) == brute);
      CHECK(count_sc_hook(k, n) == mpz_class(brute));

      mpz_class boxed_sum = 0;
      for (int j = 0; j <= k; ++j) boxed_sum += count_sc_boxed(j, n);
      CHECK(boxed_sum == count_sc_hook(k, n));
    }
  }
}

TEST_CASE("sc_split partitions H(k,k;n)") {
  for (int k = 1; k <= 3; ++k) {
    for (int n = 2; n <= 12; ++n) {
      auto split = sc_split(k, n);
      auto all = enumerate_hooks(k, k, n);
      CHECK(split.sc.size() + split.nsc.size() == all.size());
      for (const auto& p : split.sc) CHECK(conjugate(p) == p);
      for (const auto& p : split.nsc) CHECK(conjugate(p) != p);
    }
  }
}

TEST_CASE("large counting stays exact") {
  // [DERIVED] independent recursion values; spot checks at sizes where the
  // enumeration itself would be too slow.
  CHECK(count_hook(2, 2, 60) == mpz_class(enumerate_hooks(2, 2, 60).size()));
  CHECK(count_hook(1, 1, 100) == 100);   // hooks (a, 1^b): one per arm length
  CHECK(count_sc_hook(1, 101) == 1);     // single odd part
  CHECK(count_sc_hook(1, 100) == 0);
  CHECK(count_sc_boxed(2, 8) == par_k(2, 2));
}
