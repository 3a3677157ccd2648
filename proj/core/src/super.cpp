#include "altschur/super.hpp"

#include <stdexcept>

namespace altschur {

void word_unrank(int64_t r, int m, int n, std::vector<int>& w) {
  w.assign(static_cast<size_t>(n), 0);
  for (int j = n - 1; j >= 0; --j) {
    w[static_cast<size_t>(j)] = static_cast<int>(r % m);
    r /= m;
  }
}

int64_t word_rank(const std::vector<int>& w, int m) {
  int64_t r = 0;
  for (int c : w) r = r * m + c;
  return r;
}

SignedOp SignedOp::identity(int64_t d) {
  SignedOp op;
  op.d = d;
  op.to.resize(static_cast<size_t>(d));
  op.sg.assign(static_cast<size_t>(d), 1);
  for (int64_t i = 0; i < d; ++i) op.to[static_cast<size_t>(i)] = static_cast<int32_t>(i);
  return op;
}

SignedOp SignedOp::compose(const SignedOp& other) const {
  if (d != other.d) throw std::invalid_argument("dimension mismatch");
  SignedOp op;
  op.d = d;
  op.to.resize(static_cast<size_t>(d));
  op.sg.resize(static_cast<size_t>(d));
  for (int64_t i = 0; i < d; ++i) {
    int32_t mid = other.to[static_cast<size_t>(i)];
    op.to[static_cast<size_t>(i)] = to[static_cast<size_t>(mid)];
    op.sg[static_cast<size_t>(i)] =
        static_cast<int8_t>(other.sg[static_cast<size_t>(i)] * sg[static_cast<size_t>(mid)]);
  }
  return op;
}

SignedOp SignedOp::inverse() const {
  SignedOp op;
  op.d = d;
  op.to.resize(static_cast<size_t>(d));
  op.sg.resize(static_cast<size_t>(d));
  for (int64_t i = 0; i < d; ++i) {
    op.to[static_cast<size_t>(to[static_cast<size_t>(i)])] = static_cast<int32_t>(i);
    op.sg[static_cast<size_t>(to[static_cast<size_t>(i)])] = sg[static_cast<size_t>(i)];
  }
  return op;
}

long long SignedOp::trace() const {
  long long t = 0;
  for (int64_t i = 0; i < d; ++i)
    if (to[static_cast<size_t>(i)] == i) t += sg[static_cast<size_t>(i)];
  return t;
}

bool SignedOp::is_scalar(int s) const {
  for (int64_t i = 0; i < d; ++i)
    if (to[static_cast<size_t>(i)] != i || sg[static_cast<size_t>(i)] != s) return false;
  return true;
}

SignedOp phi_star(const Perm& sigma, const GradedSpace& g, int n) {
  if (sigma.n() != n) throw std::invalid_argument("permutation degree mismatch");
  int m = g.dim();
  int64_t d = g.word_count(n);
  SignedOp op;
  op.d = d;
  op.to.resize(static_cast<size_t>(d));
  op.sg.resize(static_cast<size_t>(d));
  std::vector<int> w, wp(static_cast<size_t>(n));
  for (int64_t r = 0; r < d; ++r) {
    word_unrank(r, m, n, w);
    for (int j = 0; j < n; ++j) wp[static_cast<size_t>(sigma(j))] = w[static_cast<size_t>(j)];
    int inv = 0;
    for (int a = 0; a < n; ++a) {
      if (!g.odd(w[static_cast<size_t>(a)])) continue;
      for (int b = a + 1; b < n; ++b)
        if (g.odd(w[static_cast<size_t>(b)]) && sigma(a) > sigma(b)) ++inv;
    }
    op.to[static_cast<size_t>(r)] = static_cast<int32_t>(word_rank(wp, m));
    op.sg[static_cast<size_t>(r)] = static_cast<int8_t>(inv % 2 == 0 ? 1 : -1);
  }
  return op;
}

SignedOp eta_star(const Perm& sigma, const GradedSpace& g, int n) {
  SignedOp op = phi_star(sigma, g, n);
  if (perm_sign(sigma) < 0)
    for (auto& s : op.sg) s = static_cast<int8_t>(-s);
  return op;
}

SignedOp big_T(int k, int n) {
  GradedSpace g{k, k};
  int m = 2 * k;
  int64_t d = g.word_count(n);
  SignedOp op;
  op.d = d;
  op.to.resize(static_cast<size_t>(d));
  op.sg.resize(static_cast<size_t>(d));
  std::vector<int> w, wp(static_cast<size_t>(n));
  for (int64_t r = 0; r < d; ++r) {
    word_unrank(r, m, n, w);
    int deg = 0;
    for (int j = 0; j < n; ++j) {
      wp[static_cast<size_t>(j)] = (w[static_cast<size_t>(j)] + k) % m;
      if (g.odd(w[static_cast<size_t>(j)]) && (n - 1 - j) % 2 == 1) ++deg;
    }
    op.to[static_cast<size_t>(r)] = static_cast<int32_t>(word_rank(wp, m));
    op.sg[static_cast<size_t>(r)] = static_cast<int8_t>(deg % 2 == 0 ? 1 : -1);
  }
  return op;
}

int epsilon_sign(int n) {
  long long c = static_cast<long long>(n) * (n - 1) / 2;
  return c % 2 == 0 ? 1 : -1;
}

}  // namespace altschur
