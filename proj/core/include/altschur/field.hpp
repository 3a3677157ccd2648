#pragma once

/*
 * The two coefficient fields used by the exact linear algebra: Gaussian
 * rationals Q(i) backed by GMP, and a prime field F_p with p = 1 (mod 4) so
 * that a square root of -1 exists in modular runs too.  Both expose the same
 * static constructors so the solvers can be instantiated over either.
 */

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace altschur {

struct GaussRat {
  mpq_class re, im;

  GaussRat() : re(0), im(0) {}
  GaussRat(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRat zero() { return {}; }
  static GaussRat one() { return {mpq_class(1), mpq_class(0)}; }
  static GaussRat imag_unit() { return {mpq_class(0), mpq_class(1)}; }
  static GaussRat from_int(long long x) {
    return {mpq_class(static_cast<long>(x)), mpq_class(0)};
  }
  static GaussRat from_ratio(const mpz_class& num, const mpz_class& den) {
    mpq_class q(num, den);
    q.canonicalize();
    return {std::move(q), mpq_class(0)};
  }

  bool is_zero() const { return re == 0 && im == 0; }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussRat inv() const {
    mpq_class d = re * re + im * im;
    if (d == 0) throw std::domain_error("division by zero in Q(i)");
    return {re / d, -im / d};
  }
  std::string str() const {
    if (im == 0) return re.get_str();
    return re.get_str() + (im > 0 ? "+" : "") + im.get_str() + "i";
  }
};

class Fp {
 public:
  uint64_t v = 0;

  /* p must be prime with p = 1 (mod 4). */
  static void set_context(uint64_t p);
  static uint64_t modulus() { return p_; }

  static Fp zero() { return {}; }
  static Fp one() { return raw(1 % p_); }
  static Fp imag_unit() { return raw(i_); }
  static Fp from_int(long long x) {
    long long r = x % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return raw(static_cast<uint64_t>(r));
  }
  static Fp from_ratio(const mpz_class& num, const mpz_class& den) {
    uint64_t a = mpz_fdiv_ui(num.get_mpz_t(), p_);
    uint64_t b = mpz_fdiv_ui(den.get_mpz_t(), p_);
    if (b == 0) throw std::domain_error("denominator vanishes mod p");
    return raw(mul(a, pow(b, p_ - 2)));
  }

  bool is_zero() const { return v == 0; }
  friend bool operator==(const Fp& a, const Fp& b) { return a.v == b.v; }
  friend Fp operator+(const Fp& a, const Fp& b) {
    uint64_t s = a.v + b.v;
    if (s >= p_) s -= p_;
    return raw(s);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    return raw(a.v >= b.v ? a.v - b.v : a.v + p_ - b.v);
  }
  friend Fp operator-(const Fp& a) { return raw(a.v == 0 ? 0 : p_ - a.v); }
  friend Fp operator*(const Fp& a, const Fp& b) { return raw(mul(a.v, b.v)); }
  Fp inv() const {
    if (v == 0) throw std::domain_error("division by zero mod p");
    return raw(pow(v, p_ - 2));
  }
  std::string str() const { return std::to_string(v); }

 private:
  static Fp raw(uint64_t x) {
    Fp f;
    f.v = x;
    return f;
  }
  static uint64_t mul(uint64_t a, uint64_t b) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  static uint64_t pow(uint64_t b, uint64_t e) {
    uint64_t r = 1 % p_;
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }
  static inline thread_local uint64_t p_ = 0;
  static inline thread_local uint64_t i_ = 0;  // sqrt(-1) mod p
};

bool is_prime_u64(uint64_t n);

/* Random prime in [2^29, 2^30) with p = 1 (mod 4) and p > floor_exclusive. */
uint64_t pick_prime(std::mt19937_64& rng, uint64_t floor_exclusive = 0);

}  // namespace altschur
