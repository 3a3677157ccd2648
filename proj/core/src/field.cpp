#include "altschur/field.hpp"

namespace altschur {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod(uint64_t b, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                     29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  /* deterministic witness set for 64-bit inputs */
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                     29ull, 31ull, 37ull}) {
    uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

void Fp::set_context(uint64_t p) {
  if (!is_prime_u64(p) || p % 4 != 1)
    throw std::invalid_argument("modulus must be a prime = 1 (mod 4)");
  p_ = p;
  i_ = 0;
  for (uint64_t a = 2; a < p; ++a) {
    uint64_t g = powmod(a, (p - 1) / 4, p);
    if (mulmod(g, g, p) == p - 1) {
      i_ = g;
      break;
    }
  }
  if (i_ == 0) throw std::logic_error("no square root of -1 found");
}

uint64_t pick_prime(std::mt19937_64& rng, uint64_t floor_exclusive) {
  const uint64_t lo = 1ull << 29, hi = 1ull << 30;
  std::uniform_int_distribution<uint64_t> dist(lo, hi - 1);
  while (true) {
    uint64_t x = dist(rng);
    x -= x % 4;
    x += 1;  // = 1 (mod 4)
    if (x <= floor_exclusive || x < lo || x >= hi) continue;
    if (is_prime_u64(x)) return x;
  }
}

}  // namespace altschur
