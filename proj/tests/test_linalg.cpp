#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "altschur/field.hpp"
#include "altschur/sparse.hpp"

using namespace altschur;

namespace {

template <class F>
SVec<F> make_vec(const std::vector<long long>& dense) {
  SVec<F> v;
  for (size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) v.t.emplace_back(static_cast<int64_t>(i), F::from_int(dense[i]));
  return v;
}

template <class F>
SVec<F> random_vec(std::mt19937_64& rng, int64_t ambient, int max_abs = 4) {
  std::uniform_int_distribution<int> coin(0, 2), val(-max_abs, max_abs);
  SVec<F> v;
  for (int64_t i = 0; i < ambient; ++i) {
    if (coin(rng) == 0) {
      int x = val(rng);
      if (x != 0) v.t.emplace_back(i, F::from_int(x));
    }
  }
  return v;
}

template <class F>
Subspace<F> random_subspace(std::mt19937_64& rng, int64_t ambient, int want_dim) {
  Subspace<F> s(ambient);
  int guard = 0;
  while (s.dim() < want_dim && ++guard < 200) s.insert(random_vec<F>(rng, ambient));
  return s;
}

template <class F>
SMat<F> random_mat(std::mt19937_64& rng, int64_t r, int64_t c) {
  std::uniform_int_distribution<int> coin(0, 2), val(-5, 5);
  SMat<F> m(r, c);
  for (int64_t i = 0; i < r; ++i)
    for (int64_t j = 0; j < c; ++j)
      if (coin(rng) == 0) {
        int x = val(rng);
        if (x != 0) m.rows[static_cast<size_t>(i)].emplace_back(j, F::from_int(x));
      }
  return m;
}

/* Dense schoolbook product over signed 64-bit ints; inputs stay tiny. */
std::vector<std::vector<long long>> dense_mul(const std::vector<std::vector<long long>>& a,
                                              const std::vector<std::vector<long long>>& b) {
  size_t r = a.size(), inner = b.size(), c = b[0].size();
  std::vector<std::vector<long long>> out(r, std::vector<long long>(c, 0));
  for (size_t i = 0; i < r; ++i)
    for (size_t t = 0; t < inner; ++t)
      for (size_t j = 0; j < c; ++j) out[i][j] += a[i][t] * b[t][j];
  return out;
}

}  // namespace

TEST_CASE("Fp context and arithmetic") {
  CHECK_THROWS_AS(Fp::set_context(7), std::invalid_argument);   // 3 mod 4
  CHECK_THROWS_AS(Fp::set_context(15), std::invalid_argument);  // composite
  Fp::set_context(13);
  CHECK(Fp::modulus() == 13);
  Fp i = Fp::imag_unit();
  CHECK(i * i == -Fp::one());
  for (long long x = 1; x < 13; ++x) {
    Fp f = Fp::from_int(x);
    CHECK(f * f.inv() == Fp::one());
  }
  CHECK(Fp::from_int(-1) == Fp::from_int(12));
  CHECK((Fp::from_int(9) + Fp::from_int(9)).v == 5);
  CHECK(Fp::from_ratio(mpz_class(3), mpz_class(7)) * Fp::from_int(7) == Fp::from_int(3));
  CHECK_THROWS_AS(Fp::zero().inv(), std::domain_error);
  CHECK_THROWS_AS(Fp::from_ratio(mpz_class(1), mpz_class(13)), std::domain_error);

  Fp::set_context(65537);
  Fp j = Fp::imag_unit();
  CHECK(j * j == -Fp::one());
  CHECK(Fp::from_int(65536) == -Fp::one());
}

TEST_CASE("primality and prime picking") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(65537));
  CHECK(is_prime_u64(1000000007ULL));
  CHECK(!is_prime_u64(1));
  CHECK(!is_prime_u64(561));         // Carmichael
  CHECK(!is_prime_u64(3215031751ULL));  // strong pseudoprime to bases 2,3,5,7
  CHECK(is_prime_u64(0x7fffffffULL));

  std::mt19937_64 rng(42);
  uint64_t p = pick_prime(rng);
  CHECK(is_prime_u64(p));
  CHECK(p % 4 == 1);
  CHECK(p >= (1ULL << 29));
  CHECK(p < (1ULL << 30));
  uint64_t q = pick_prime(rng, p);
  CHECK(q != p);
  CHECK(is_prime_u64(q));
  std::mt19937_64 rng2(42);
  CHECK(pick_prime(rng2) == p);  // deterministic in the seed
}

TEST_CASE("Gaussian rational arithmetic") {
  GaussRat a{mpq_class(2), mpq_class(3)};
  CHECK(a * a.inv() == GaussRat::one());
  CHECK(GaussRat::imag_unit() * GaussRat::imag_unit() == -GaussRat::one());
  GaussRat conj{a.re, -a.im};
  CHECK(a * conj == GaussRat{mpq_class(13), mpq_class(0)});
  CHECK(GaussRat::from_ratio(mpz_class(6), mpz_class(4)).re == mpq_class(3, 2));
  CHECK(GaussRat::from_int(-2).str() == "-2");
  CHECK((GaussRat::from_int(1) + GaussRat::imag_unit()).str() == "1+1i");
  CHECK_THROWS_AS(GaussRat::zero().inv(), std::domain_error);
}

TEST_CASE("sparse vector axpy and combine") {
  auto v = make_vec<GaussRat>({1, 0, 2, 0, -1});
  auto w = make_vec<GaussRat>({0, 3, -2, 0, 1});
  v.axpy(GaussRat::one(), w);
  CHECK(v == make_vec<GaussRat>({1, 3, 0, 0, 0}));
  SVec<GaussRat> u;
  u.t = {{4, GaussRat::from_int(2)}, {1, GaussRat::from_int(5)}, {4, GaussRat::from_int(-2)}};
  u.sort_combine();
  CHECK(u == make_vec<GaussRat>({0, 5}));
  CHECK(u.leading() == 1);
  CHECK(u.at(1) != nullptr);
  CHECK(u.at(4) == nullptr);
}

TEST_CASE("sparse matrix products match dense schoolbook") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    int64_t r = 2 + static_cast<int64_t>(rng() % 5);
    int64_t inner = 2 + static_cast<int64_t>(rng() % 5);
    int64_t c = 2 + static_cast<int64_t>(rng() % 5);
    auto a = random_mat<GaussRat>(rng, r, inner);
    auto b = random_mat<GaussRat>(rng, inner, c);
    std::vector<std::vector<long long>> da(static_cast<size_t>(r), std::vector<long long>(static_cast<size_t>(inner), 0));
    std::vector<std::vector<long long>> db(static_cast<size_t>(inner), std::vector<long long>(static_cast<size_t>(c), 0));
    for (int64_t i = 0; i < r; ++i)
      for (auto& [j, v] : a.rows[static_cast<size_t>(i)]) da[static_cast<size_t>(i)][static_cast<size_t>(j)] = v.re.get_num().get_si();
    for (int64_t i = 0; i < inner; ++i)
      for (auto& [j, v] : b.rows[static_cast<size_t>(i)]) db[static_cast<size_t>(i)][static_cast<size_t>(j)] = v.re.get_num().get_si();
    auto prod = a.mul(b);
    auto want = dense_mul(da, db);
    for (int64_t i = 0; i < r; ++i) {
      std::vector<long long> got(static_cast<size_t>(c), 0);
      for (auto& [j, v] : prod.rows[static_cast<size_t>(i)]) {
        got[static_cast<size_t>(j)] = v.re.get_num().get_si();
        CHECK(!v.is_zero());
      }
      CHECK(got == want[static_cast<size_t>(i)]);
    }
  }
}

TEST_CASE("matrix helpers: identity, trace, transpose, add, vec") {
  auto id = SMat<GaussRat>::identity(4);
  CHECK(id.trace() == GaussRat::from_int(4));
  std::mt19937_64 rng(11);
  auto m = random_mat<GaussRat>(rng, 4, 4);
  CHECK(m.transpose().transpose() == m);
  CHECK(id.mul(m) == m);
  CHECK(m.mul(id) == m);
  auto z = m.add(m, GaussRat::from_int(-1));
  CHECK(z.is_zero());
  auto back = unvec(m.vec(), 4, 4);
  CHECK(back == m);
  CHECK(m.vec().t.size() == static_cast<size_t>(m.nnz()));
}

TEST_CASE("subspace canonical form is spanning-set independent") {
  Subspace<GaussRat> a(5), b(5);
  a.insert(make_vec<GaussRat>({1, 2, 0, 0, 1}));
  a.insert(make_vec<GaussRat>({0, 1, 1, 0, 0}));
  b.insert(make_vec<GaussRat>({1, 3, 1, 0, 1}));   // sum of the two
  b.insert(make_vec<GaussRat>({2, 5, 1, 0, 2}));   // 2*first + second
  CHECK(a.dim() == 2);
  CHECK(a == b);
  CHECK(a.contains(make_vec<GaussRat>({3, 7, 1, 0, 3})));
  CHECK(!a.contains(make_vec<GaussRat>({0, 0, 0, 1, 0})));
  CHECK(!a.insert(make_vec<GaussRat>({1, 3, 1, 0, 1})));

  std::vector<GaussRat> coords;
  CHECK(a.contains_with_coords(make_vec<GaussRat>({3, 7, 1, 0, 3}), coords));
  SVec<GaussRat> rebuilt;
  for (size_t i = 0; i < coords.size(); ++i) rebuilt.axpy(coords[i], a.rows()[i]);
  CHECK(rebuilt == make_vec<GaussRat>({3, 7, 1, 0, 3}));
}

TEST_CASE("Grassmann dimension identity over F_p") {
  Fp::set_context(65537);
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    int64_t ambient = 10;
    auto u = random_subspace<Fp>(rng, ambient, 2 + static_cast<int>(rng() % 5));
    auto w = random_subspace<Fp>(rng, ambient, 2 + static_cast<int>(rng() % 5));
    auto s = u.sum(w);
    auto x = u.intersect(w);
    CHECK(s.dim() + x.dim() == u.dim() + w.dim());
    for (const auto& r : x.rows()) {
      CHECK(u.contains(r));
      CHECK(w.contains(r));
    }
    for (const auto& r : u.rows()) CHECK(s.contains(r));
    CHECK(u.sum(u) == u);
    CHECK(u.intersect(u) == u);
  }
}

TEST_CASE("Grassmann identity over the Gaussian rationals") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    auto u = random_subspace<GaussRat>(rng, 8, 3);
    auto w = random_subspace<GaussRat>(rng, 8, 3);
    CHECK(u.sum(w).dim() + u.intersect(w).dim() == u.dim() + w.dim());
  }
}

TEST_CASE("nullspace solves the system and has the right dimension") {
  Fp::set_context(65537);
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    int64_t nvars = 12;
    std::vector<SVec<Fp>> eqs;
    size_t neqs = 3 + rng() % 8;
    for (size_t e = 0; e < neqs; ++e) eqs.push_back(random_vec<Fp>(rng, nvars));
    std::vector<std::vector<uint64_t>> dense(eqs.size(), std::vector<uint64_t>(static_cast<size_t>(nvars), 0));
    for (size_t e = 0; e < eqs.size(); ++e)
      for (auto& [c, v] : eqs[e].t) dense[e][static_cast<size_t>(c)] = v.v;
    int64_t rank = dense_rank_modp(dense, 65537);
    auto ns = nullspace<Fp>(eqs, nvars);
    CHECK(ns.dim() == nvars - rank);
    for (const auto& v : ns.rows()) {
      for (const auto& e : eqs) {
        Fp dot = Fp::zero();
        for (auto& [c, x] : e.t) {
          const Fp* val = v.at(c);
          if (val) dot = dot + x * (*val);
        }
        CHECK(dot.is_zero());
      }
    }
  }
}

TEST_CASE("nullspace basics") {
  // x0 + x1 = 0, x1 - x2 = 0 over Q(i): span{(1,-1,-1)}
  std::vector<SVec<GaussRat>> eqs = {make_vec<GaussRat>({1, 1, 0}),
                                     make_vec<GaussRat>({0, 1, -1})};
  auto ns = nullspace<GaussRat>(eqs, 3);
  REQUIRE(ns.dim() == 1);
  CHECK(ns.contains(make_vec<GaussRat>({1, -1, -1})));
  auto empty = nullspace<GaussRat>({}, 4);
  CHECK(empty.dim() == 4);
  std::vector<SVec<GaussRat>> contradictory = {make_vec<GaussRat>({1}), make_vec<GaussRat>({1})};
  CHECK(nullspace<GaussRat>(contradictory, 1).dim() == 0);
}

TEST_CASE("commutant endpoints") {
  // no constraints: the full matrix algebra
  CHECK(commutant<GaussRat>({}, 3).dim() == 9);
  // all elementary matrices: only scalars commute
  std::vector<SMat<GaussRat>> basis;
  for (int64_t i = 0; i < 3; ++i)
    for (int64_t j = 0; j < 3; ++j) {
      SMat<GaussRat> e(3, 3);
      e.rows[static_cast<size_t>(i)].emplace_back(j, GaussRat::one());
      basis.push_back(e);
    }
  auto cent = commutant<GaussRat>(basis, 3);
  REQUIRE(cent.dim() == 1);
  CHECK(cent.contains(SMat<GaussRat>::identity(3).vec()));
  // one diagonal matrix with distinct entries: the diagonal algebra
  SMat<GaussRat> diag(4, 4);
  for (int64_t i = 0; i < 4; ++i)
    diag.rows[static_cast<size_t>(i)].emplace_back(i, GaussRat::from_int(i + 1));
  CHECK(commutant<GaussRat>({diag}, 4).dim() == 4);
}

TEST_CASE("commutant elements commute") {
  std::mt19937_64 rng(31);
  Fp::set_context(65537);
  for (int trial = 0; trial < 6; ++trial) {
    auto g1 = random_mat<Fp>(rng, 5, 5);
    auto g2 = random_mat<Fp>(rng, 5, 5);
    auto cent = commutant<Fp>({g1, g2}, 5);
    for (const auto& row : cent.rows()) {
      auto x = unvec(row, 5, 5);
      CHECK(x.mul(g1) == g1.mul(x));
      CHECK(x.mul(g2) == g2.mul(x));
    }
    CHECK(cent.dim() >= 1);  // contains the identity
    CHECK(cent.contains(SMat<Fp>::identity(5).vec()));
  }
}

TEST_CASE("dense modular rank") {
  CHECK(dense_rank_modp({{1, 2}, {2, 4}}, 65537) == 1);
  CHECK(dense_rank_modp({{1, 0}, {0, 1}}, 65537) == 2);
  CHECK(dense_rank_modp({{0, 0}, {0, 0}}, 65537) == 0);
  CHECK(dense_rank_modp({}, 65537) == 0);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 15; ++trial) {
    // rank over Q of a small random integer matrix equals rank mod a large prime
    size_t r = 3 + rng() % 4, c = 3 + rng() % 4;
    std::vector<std::vector<uint64_t>> mp(r, std::vector<uint64_t>(c, 0));
    Subspace<GaussRat> span(static_cast<int64_t>(c));
    for (size_t i = 0; i < r; ++i) {
      SVec<GaussRat> row;
      for (size_t j = 0; j < c; ++j) {
        long long x = static_cast<long long>(rng() % 7) - 3;
        if (x != 0) {
          mp[i][j] = static_cast<uint64_t>((x + 65537) % 65537);
          row.t.emplace_back(static_cast<int64_t>(j), GaussRat::from_int(x));
        }
      }
      span.insert(std::move(row));
    }
    CHECK(dense_rank_modp(mp, 65537) == span.dim());
  }
}

TEST_CASE("rank agreement between the exact field and two random primes") {
  std::mt19937_64 seeder(123);
  uint64_t p1 = pick_prime(seeder);
  uint64_t p2 = pick_prime(seeder, p1);
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<SVec<GaussRat>> eqs_q;
    std::vector<std::vector<long long>> raw;
    size_t neq = 4 + rng() % 5;
    for (size_t e = 0; e < neq; ++e) {
      std::vector<long long> dense(10, 0);
      for (size_t j = 0; j < 10; ++j)
        if (rng() % 3 == 0) dense[j] = static_cast<long long>(rng() % 9) - 4;
      raw.push_back(dense);
      eqs_q.push_back(make_vec<GaussRat>(dense));
    }
    int64_t exact_dim = nullspace<GaussRat>(eqs_q, 10).dim();
    for (uint64_t p : {p1, p2}) {
      Fp::set_context(p);
      std::vector<SVec<Fp>> eqs_p;
      for (auto& dense : raw) eqs_p.push_back(make_vec<Fp>(dense));
      CHECK(nullspace<Fp>(eqs_p, 10).dim() == exact_dim);
    }
  }
}
