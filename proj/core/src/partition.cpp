#include "altschur/partition.hpp"

#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace altschur {

Partition::Partition(std::vector<int> r) : rows(std::move(r)) {
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] <= 0) throw std::invalid_argument("partition part must be positive");
    if (i > 0 && rows[i] > rows[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::weight() const {
  return std::accumulate(rows.begin(), rows.end(), 0);
}

std::string Partition::str() const {
  std::string s = "(";
  for (size_t i = 0; i < rows.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(rows[i]);
  }
  s += ')';
  return s;
}

Partition conjugate(const Partition& p) {
  std::vector<int> c;
  if (!p.rows.empty()) {
    c.assign(static_cast<size_t>(p.rows[0]), 0);
    for (int r : p.rows)
      for (int j = 0; j < r; ++j) c[static_cast<size_t>(j)]++;
  }
  Partition q;
  q.rows = std::move(c);
  return q;
}

bool in_hook(const Partition& p, int k, int l) { return p.part(k) <= l; }

mpz_class f_lambda(const Partition& p) {
  int n = p.weight();
  if (n == 0) return 1;
  Partition c = conjugate(p);
  mpz_class num;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(n));
  mpz_class hooks = 1;
  for (int i = 0; i < p.length(); ++i)
    for (int j = 0; j < p.rows[static_cast<size_t>(i)]; ++j)
      hooks *= (p.rows[static_cast<size_t>(i)] - j) + (c.rows[static_cast<size_t>(j)] - i) - 1;
  mpz_class f;
  mpz_divexact(f.get_mpz_t(), num.get_mpz_t(), hooks.get_mpz_t());
  return f;
}

namespace {

void rec_partitions(int rem, int maxpart, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (rem == 0) {
    Partition p;
    p.rows = cur;
    out.push_back(std::move(p));
    return;
  }
  for (int p = std::min(maxpart, rem); p >= 1; --p) {
    cur.push_back(p);
    rec_partitions(rem - p, p, cur, out);
    cur.pop_back();
  }
}

/* Rows r >= k are capped at l; emits in the same order as the filtered full
 * enumeration. */
void rec_hooks(int rem, int maxpart, int row, int k, int l, std::vector<int>& cur,
               std::vector<Partition>& out) {
  if (rem == 0) {
    Partition p;
    p.rows = cur;
    out.push_back(std::move(p));
    return;
  }
  int cap = row >= k ? std::min(maxpart, l) : maxpart;
  for (int p = std::min(cap, rem); p >= 1; --p) {
    cur.push_back(p);
    rec_hooks(rem - p, p, row + 1, k, l, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> cur;
  rec_partitions(n, n, cur, out);
  return out;
}

std::vector<Partition> enumerate_hooks(int k, int l, int n) {
  if (n < 0 || k < 0 || l < 0) throw std::invalid_argument("bad hook arguments");
  std::vector<Partition> out;
  std::vector<int> cur;
  rec_hooks(n, n, 0, k, l, cur, out);
  return out;
}

HookSets hook_sets(int k, int l, int n) {
  HookSets hs;
  hs.H = enumerate_hooks(k, l, n);
  for (const Partition& p : hs.H) {
    if (in_hook(conjugate(p), k, l))
      hs.H0.push_back(p);
    else
      hs.H1.push_back(p);
  }
  return hs;
}

namespace {

/* Build the self-conjugate partition with principal hook lengths h (distinct
 * odd, descending). */
Partition sc_from_hooks(const std::vector<int>& h) {
  int r = static_cast<int>(h.size());
  if (r == 0) return Partition{};
  std::vector<int> rows(static_cast<size_t>(r));
  for (int i = 0; i < r; ++i) rows[static_cast<size_t>(i)] = (h[static_cast<size_t>(i)] - 1) / 2 + i + 1;
  int width = rows[0];
  for (int j = r; j < width; ++j) {
    int cnt = 0;
    for (int i = 0; i < r; ++i)
      if (rows[static_cast<size_t>(i)] >= j + 1) ++cnt;
    if (cnt == 0) break;
    rows.push_back(cnt);
  }
  Partition p;
  p.rows = std::move(rows);
  return p;
}

void rec_sc(int rem, int slots, int maxodd, std::vector<int>& cur,
            std::vector<Partition>& out) {
  if (rem == 0) {
    out.push_back(sc_from_hooks(cur));
    return;
  }
  if (slots == 0) return;
  int h = std::min(maxodd, rem);
  if (h % 2 == 0) --h;
  for (; h >= 1; h -= 2) {
    /* remaining weight must fit into slots-1 distinct odd parts < h */
    long long capacity = 0;
    for (int t = 1; t < slots; ++t) capacity += std::max(0, h - 2 * t);
    if (rem - h > capacity) continue;
    cur.push_back(h);
    rec_sc(rem - h, slots - 1, h - 2, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_sc_hooks(int k, int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  rec_sc(n, k, n, cur, out);
  return out;
}

SelfConjSets sc_split(int k, int n) {
  SelfConjSets s;
  for (Partition& p : enumerate_hooks(k, k, n)) {
    if (p == conjugate(p))
      s.sc.push_back(std::move(p));
    else
      s.nsc.push_back(std::move(p));
  }
  return s;
}

mpz_class par_k(int k, int m) {
  if (m < 0) return 0;
  if (m == 0) return 1;
  if (k <= 0) return 0;
  /* P[j][b]: partitions of b into at most j parts */
  std::vector<mpz_class> prev(static_cast<size_t>(m) + 1, 0), cur;
  prev[0] = 1;
  for (int j = 1; j <= k; ++j) {
    cur = prev;
    for (int b = j; b <= m; ++b) cur[static_cast<size_t>(b)] += cur[static_cast<size_t>(b - j)];
    prev.swap(cur);
  }
  return prev[static_cast<size_t>(m)];
}

mpz_class count_hook(int k, int l, int n) {
  if (n < 0) return 0;
  /* tail-free partitions fit in the first k rows */
  mpz_class total = par_k(k, n);
  /* otherwise the tail below row k has largest part exactly m in [1,l];
   * partitions of b with largest part exactly m number Par_m(b)-Par_{m-1}(b),
   * and the first k rows are m^k plus a partition into at most k parts. */
  for (int m = 1; m <= l; ++m) {
    for (int b = m; b <= n; ++b) {
      int rest = n - b - k * m;
      if (rest < 0) break;
      mpz_class exact = par_k(m, b) - par_k(m - 1, b);
      if (exact == 0) continue;
      total += exact * par_k(k, rest);
    }
  }
  return total;
}

namespace {

mpz_class& sc_memo(std::map<std::tuple<int, int, int>, mpz_class>& memo,
                   int rem, int slots, int maxodd);

mpz_class sc_count(std::map<std::tuple<int, int, int>, mpz_class>& memo,
                   int rem, int slots, int maxodd) {
  if (rem == 0) return 1;
  if (slots == 0 || maxodd < 1) return 0;
  return sc_memo(memo, rem, slots, maxodd);
}

mpz_class& sc_memo(std::map<std::tuple<int, int, int>, mpz_class>& memo,
                   int rem, int slots, int maxodd) {
  int h0 = std::min(maxodd, rem);
  if (h0 % 2 == 0) --h0;
  auto key = std::make_tuple(rem, slots, h0);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  mpz_class total = 0;
  for (int h = h0; h >= 1; h -= 2) total += sc_count(memo, rem - h, slots - 1, h - 2);
  return memo.emplace(key, std::move(total)).first->second;
}

}  // namespace

mpz_class count_sc_hook(int k, int n) {
  if (n < 0) return 0;
  std::map<std::tuple<int, int, int>, mpz_class> memo;
  return sc_count(memo, n, k, n);
}

mpz_class count_sc_boxed(int k, int n) {
  long long kk = static_cast<long long>(k) * k;
  if (n < kk || (n - kk) % 2 != 0) return 0;
  return par_k(k, static_cast<int>((n - kk) / 2));
}

}  // namespace altschur
