#include "altschur/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace altschur {

Perm::Perm(std::vector<int> images) : img(std::move(images)) {
  std::vector<char> seen(img.size(), 0);
  for (int v : img) {
    if (v < 0 || v >= n() || seen[static_cast<size_t>(v)])
      throw std::invalid_argument("not a permutation");
    seen[static_cast<size_t>(v)] = 1;
  }
}

Perm perm_identity(int n) {
  Perm p;
  p.img.resize(static_cast<size_t>(n));
  std::iota(p.img.begin(), p.img.end(), 0);
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm c;
  c.img.resize(b.img.size());
  for (int i = 0; i < b.n(); ++i) c.img[static_cast<size_t>(i)] = a(b(i));
  return c;
}

Perm inverse(const Perm& p) {
  Perm q;
  q.img.resize(p.img.size());
  for (int i = 0; i < p.n(); ++i) q.img[static_cast<size_t>(p(i))] = i;
  return q;
}

Partition cycle_type(const Perm& p) {
  std::vector<char> seen(p.img.size(), 0);
  std::vector<int> lens;
  for (int i = 0; i < p.n(); ++i) {
    if (seen[static_cast<size_t>(i)]) continue;
    int len = 0, j = i;
    while (!seen[static_cast<size_t>(j)]) {
      seen[static_cast<size_t>(j)] = 1;
      j = p(j);
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  Partition t;
  t.rows = std::move(lens);
  return t;
}

int perm_sign(const Perm& p) {
  int even_swaps = 0;
  for (int c : cycle_type(p).rows) even_swaps += c - 1;
  return even_swaps % 2 == 0 ? 1 : -1;
}

Perm transposition(int n, int i, int j) {
  Perm p = perm_identity(n);
  std::swap(p.img[static_cast<size_t>(i)], p.img[static_cast<size_t>(j)]);
  return p;
}

std::vector<Perm> coxeter_gens(int n) {
  std::vector<Perm> g;
  for (int i = 0; i + 1 < n; ++i) g.push_back(transposition(n, i, i + 1));
  return g;
}

std::vector<Perm> alternating_gens(int n) {
  std::vector<Perm> g;
  for (int i = 2; i < n; ++i) {
    Perm p = perm_identity(n);
    p.img[0] = 1;
    p.img[1] = i;
    p.img[static_cast<size_t>(i)] = 0;
    g.push_back(std::move(p));
  }
  return g;
}

std::vector<Perm> group_gens(int n, GroupKind g) {
  return g == GroupKind::S ? coxeter_gens(n) : alternating_gens(n);
}

std::vector<Perm> enumerate_group(int n, GroupKind g) {
  std::vector<int> img(static_cast<size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::vector<Perm> out;
  do {
    Perm p;
    p.img = img;
    if (g == GroupKind::S || perm_sign(p) == 1) out.push_back(std::move(p));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace altschur
