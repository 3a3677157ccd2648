#include "altschur/verify.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace altschur {

namespace {

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

std::string zs(const mpz_class& z) { return z.get_str(); }
std::string lls(long long v) { return std::to_string(v); }

mpz_class factorial(int n) {
  mpz_class f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

long long checked_ll(const __int128& v, const char* where) {
  if (v > LLONG_MAX || v < LLONG_MIN)
    throw std::overflow_error(std::string("int64 overflow in ") + where);
  return static_cast<long long>(v);
}

SignedOp negated(SignedOp op) {
  for (auto& s : op.sg) s = static_cast<int8_t>(-s);
  return op;
}

/* Run a field-generic body; in modular mode run it under both primes and
 * merge, failing any check whose two actuals disagree. */
template <class Body>
void run_fielded(const ModeCtx& mc, VerificationReport& rep, Body&& body) {
  if (!mc.modular) {
    body.template operator()<GaussRat>(rep);
    return;
  }
  VerificationReport ra, rb;
  Fp::set_context(mc.p1);
  body.template operator()<Fp>(ra);
  Fp::set_context(mc.p2);
  body.template operator()<Fp>(rb);
  if (ra.checks.size() != rb.checks.size())
    throw std::logic_error("modular runs produced different check lists");
  for (size_t i = 0; i < ra.checks.size(); ++i) {
    Check c = ra.checks[i];
    const Check& o = rb.checks[i];
    if (c.name != o.name)
      throw std::logic_error("modular runs produced different check names");
    if (c.actual != o.actual || c.pass != o.pass) {
      c.pass = false;
      c.actual = "prime disagreement: p1 -> " + c.actual + " ; p2 -> " + o.actual;
    }
    rep.checks.push_back(std::move(c));
  }
}

template <class F>
bool commutes_with(const std::vector<SignedOp>& gens, const SMat<F>& x) {
  for (const SignedOp& g : gens)
    if (!(left_mul_signed(g, x) == right_mul_signed(x, g))) return false;
  return true;
}

template <class F>
std::vector<SMat<F>> basis_mats(const Subspace<F>& s, int64_t d) {
  std::vector<SMat<F>> out;
  out.reserve(s.rows().size());
  for (const auto& r : s.rows()) out.push_back(unvec(r, d, d));
  return out;
}

/* {op compose b : b in s} for a subspace of vec'd operators. */
template <class F>
Subspace<F> left_image(const SignedOp& op, const Subspace<F>& s, int64_t d) {
  Subspace<F> out(s.ambient());
  for (const auto& r : s.rows()) out.insert(left_mul_signed(op, unvec(r, d, d)).vec());
  return out;
}

/* {op v : v in s} for a subspace of plain vectors. */
template <class F>
Subspace<F> vec_image(const SignedOp& op, const Subspace<F>& s) {
  Subspace<F> out(s.ambient());
  for (const auto& r : s.rows()) {
    SVec<F> v;
    v.t.reserve(r.t.size());
    for (const auto& [i, x] : r.t)
      v.t.emplace_back(op.to[static_cast<size_t>(i)],
                       op.sg[static_cast<size_t>(i)] > 0 ? x : -x);
    std::sort(v.t.begin(), v.t.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    out.insert(std::move(v));
  }
  return out;
}

/* Matrices of the ops restricted to the invariant subspace w, in the
 * coordinates of w's echelon basis; false if w is not actually invariant. */
template <class F>
bool restrict_ops(const Subspace<F>& w, const std::vector<SignedOp>& ops,
                  std::vector<SMat<F>>& out) {
  int64_t wd = w.dim();
  out.clear();
  std::vector<F> coords;
  for (const SignedOp& op : ops) {
    SMat<F> m(wd, wd);
    for (int64_t j = 0; j < wd; ++j) {
      SVec<F> img;
      const SVec<F>& base = w.rows()[static_cast<size_t>(j)];
      img.t.reserve(base.t.size());
      for (const auto& [i, x] : base.t)
        img.t.emplace_back(op.to[static_cast<size_t>(i)],
                           op.sg[static_cast<size_t>(i)] > 0 ? x : -x);
      std::sort(img.t.begin(), img.t.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      if (!w.contains_with_coords(img, coords)) return false;
      for (size_t i = 0; i < coords.size(); ++i)
        if (!coords[i].is_zero())
          m.rows[i].emplace_back(j, coords[i]);  // column j of op|w
    }
    out.push_back(std::move(m));
  }
  return true;
}

mpz_class sum_f2(const std::vector<Partition>& v) {
  mpz_class s = 0;
  for (const Partition& p : v) {
    mpz_class f = f_lambda(p);
    s += f * f;
  }
  return s;
}

/* dim of the A_n-span of {E_X phi_a} for a conjugation-closed X: unordered
 * conjugate pairs contribute f^2, self-conjugates f^2/2. */
mpz_class sum_f2_fused(const std::vector<Partition>& conj_closed) {
  mpz_class s = 0;
  for (const Partition& p : conj_closed) {
    Partition q = conjugate(p);
    mpz_class f = f_lambda(p);
    if (q == p) {
      mpz_class f2 = f * f;
      if (mpz_odd_p(f2.get_mpz_t()))
        throw std::logic_error("odd f^2 for a self-conjugate shape");
      s += f2 / 2;
    } else if (p < q) {
      s += f * f;
    }  // the larger partner of a pair contributes at the smaller one
  }
  return s;
}

/* Average-over-the-group dimension oracles, independent of the multiplicity
 * route: exactness of the division is part of the check. */
mpz_class class_average(int k, int l, int n, bool alternating_only, bool sign_twist,
                        bool square_trace) {
  CharacterOracle oracle(n);
  mpz_class total = 0;
  for (const Partition& mu : oracle.classes()) {
    int sgn = ((n - mu.length()) % 2 == 0) ? 1 : -1;
    if (alternating_only && sgn < 0) continue;
    mpz_class t = phi_star_trace(mu, k, l);
    if (square_trace) t *= t;
    if (sign_twist && sgn < 0) t = -t;
    total += oracle.class_size(mu) * t;
  }
  mpz_class order = factorial(n);
  if (alternating_only) order /= 2;
  if (!mpz_divisible_p(total.get_mpz_t(), order.get_mpz_t()))
    throw std::logic_error("group average is not an integer");
  return total / order;
}

struct GroupTable {
  std::vector<Perm> perms;     // lexicographic
  std::vector<uint32_t> mult;  // mult[i*size+j] = index of perms[i] o perms[j]
  std::vector<uint32_t> inv;
  std::vector<char> even;
  size_t size = 0;
};

const GroupTable& group_table(int n) {
  static std::mutex mtx;
  static std::map<int, GroupTable> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n < 1 || n > 6) throw std::domain_error("Gram path supports 1 <= n <= 6 only");
  GroupTable gt;
  gt.perms = enumerate_group(n, GroupKind::S);
  gt.size = gt.perms.size();
  auto index_of = [&](const Perm& p) -> uint32_t {
    auto pos = std::lower_bound(gt.perms.begin(), gt.perms.end(), p);
    return static_cast<uint32_t>(pos - gt.perms.begin());
  };
  gt.mult.resize(gt.size * gt.size);
  gt.inv.resize(gt.size);
  gt.even.resize(gt.size);
  for (size_t i = 0; i < gt.size; ++i) {
    gt.inv[i] = index_of(inverse(gt.perms[i]));
    gt.even[i] = perm_sign(gt.perms[i]) > 0 ? 1 : 0;
    for (size_t j = 0; j < gt.size; ++j)
      gt.mult[i * gt.size + j] = index_of(compose(gt.perms[i], gt.perms[j]));
  }
  return cache.emplace(n, std::move(gt)).first->second;
}

/* Two-prime certified Gram-matrix span dimension; the two ranks must agree. */
struct GramDim {
  long long dim = -1;
  bool agreed = false;
};
GramDim gram_span_dim(GroupKind grp, int n, const std::vector<mpz_class>& tnum,
                      const ModeCtx& mc) {
  if (!mc.modular) throw std::logic_error("Gram path requires modular mode");
  long long r1 = gram_span_dim_modp(grp, n, tnum, mc.p1);
  long long r2 = gram_span_dim_modp(grp, n, tnum, mc.p2);
  return {r1, r1 == r2};
}

/* Work estimate for building an explicit span: inserts * rows * vector nnz. */
double span_cost(double generators, const mpz_class& dim_expected, double vec_nnz) {
  return generators * dim_expected.get_d() * vec_nnz;
}

constexpr double kExactSpanBudget = 8e7;
constexpr double kModularSpanBudget = 1.5e9;

}  // namespace

bool VerificationReport::passed() const {
  if (!applicable) return false;
  for (const Check& c : checks)
    if (!c.pass) return false;
  return true;
}

void VerificationReport::add(std::string name, std::string expected, std::string actual) {
  bool ok = expected == actual;
  checks.push_back({std::move(name), std::move(expected), std::move(actual), ok});
}

std::string ModeCtx::str() const {
  if (!modular) return "exact";
  return "modular(p1=" + std::to_string(p1) + ",p2=" + std::to_string(p2) + ")";
}

int64_t IntMat::nnz() const {
  int64_t s = 0;
  for (const auto& r : rows) s += static_cast<int64_t>(r.size());
  return s;
}

bool IntMat::is_zero() const { return nnz() == 0; }

mpz_class IntMat::trace() const {
  mpz_class s = 0;
  for (int64_t r = 0; r < d; ++r)
    for (const auto& [c, v] : rows[static_cast<size_t>(r)])
      if (c == r) s += static_cast<long>(v);
  return s;
}

IntMat IntMat::mul(const IntMat& b) const {
  if (d != b.d) throw std::invalid_argument("IntMat shape mismatch");
  IntMat out(d);
  std::vector<__int128> scratch(static_cast<size_t>(d), 0);
  std::vector<int64_t> touched;
  for (int64_t r = 0; r < d; ++r) {
    touched.clear();
    for (const auto& [c1, v1] : rows[static_cast<size_t>(r)]) {
      for (const auto& [c2, v2] : b.rows[static_cast<size_t>(c1)]) {
        if (scratch[static_cast<size_t>(c2)] == 0) touched.push_back(c2);
        scratch[static_cast<size_t>(c2)] += static_cast<__int128>(v1) * v2;
      }
    }
    std::sort(touched.begin(), touched.end());
    auto& orow = out.rows[static_cast<size_t>(r)];
    for (int64_t c : touched) {
      __int128 v = scratch[static_cast<size_t>(c)];
      scratch[static_cast<size_t>(c)] = 0;
      if (v != 0) orow.emplace_back(c, checked_ll(v, "IntMat::mul"));
    }
  }
  return out;
}

IntMat IntMat::add(const IntMat& b, long long coef) const {
  if (d != b.d) throw std::invalid_argument("IntMat shape mismatch");
  IntMat out(d);
  for (int64_t r = 0; r < d; ++r) {
    const auto& x = rows[static_cast<size_t>(r)];
    const auto& y = b.rows[static_cast<size_t>(r)];
    auto& o = out.rows[static_cast<size_t>(r)];
    size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
      if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
        o.push_back(x[i++]);
      } else if (i == x.size() || y[j].first < x[i].first) {
        __int128 v = static_cast<__int128>(coef) * y[j].second;
        if (v != 0) o.emplace_back(y[j].first, checked_ll(v, "IntMat::add"));
        ++j;
      } else {
        __int128 v = static_cast<__int128>(x[i].second) +
                     static_cast<__int128>(coef) * y[j].second;
        if (v != 0) o.emplace_back(x[i].first, checked_ll(v, "IntMat::add"));
        ++i;
        ++j;
      }
    }
  }
  return out;
}

IntMat IntMat::transpose() const {
  IntMat out(d);
  for (int64_t r = 0; r < d; ++r)
    for (const auto& [c, v] : rows[static_cast<size_t>(r)])
      out.rows[static_cast<size_t>(c)].emplace_back(r, v);
  return out;
}

bool IntMat::is_symmetric() const {
  IntMat t = transpose();
  return rows == t.rows;
}

bool IntMat::is_scaled_identity(long long c) const {
  for (int64_t r = 0; r < d; ++r) {
    const auto& row = rows[static_cast<size_t>(r)];
    if (row.size() != 1 || row[0].first != r || row[0].second != c) return false;
  }
  return true;
}

bool IntMat::equals_scaled(const IntMat& other, long long c) const {
  if (d != other.d) return false;
  for (int64_t r = 0; r < d; ++r) {
    const auto& x = rows[static_cast<size_t>(r)];
    const auto& y = other.rows[static_cast<size_t>(r)];
    if (x.size() != y.size()) return false;
    for (size_t i = 0; i < x.size(); ++i) {
      if (x[i].first != y[i].first) return false;
      if (static_cast<__int128>(x[i].second) != static_cast<__int128>(c) * y[i].second)
        return false;
    }
  }
  return true;
}

IsotypicData isotypic(int k, int l, int n) {
  if (n < 1) throw std::domain_error("isotypic needs n >= 1");
  GradedSpace g{k, l};
  int64_t d = g.word_count(n);
  mpz_class fact = factorial(n);
  if (n > 8 || fact.get_d() * static_cast<double>(d) > 6e8)
    throw std::domain_error("isotypic projectors too large for this size");

  CharacterOracle oracle(n);
  std::vector<Perm> perms = enumerate_group(n, GroupKind::S);
  std::vector<SignedOp> ops;
  std::vector<int> cls;
  ops.reserve(perms.size());
  cls.reserve(perms.size());
  for (const Perm& p : perms) {
    ops.push_back(phi_star(p, g, n));
    cls.push_back(oracle.index_of(cycle_type(p)));
  }

  IsotypicData out;
  out.k = k;
  out.l = l;
  out.n = n;
  out.den = fact;
  out.lambdas = enumerate_partitions(n);

  std::vector<std::pair<int64_t, long long>> acc;
  for (const Partition& lam : out.lambdas) {
    long long f = f_lambda(lam).get_si();
    std::vector<long long> coef(oracle.classes().size());
    for (size_t c = 0; c < coef.size(); ++c)
      coef[c] = f * oracle.chi(lam, oracle.classes()[c]);

    acc.clear();
    acc.reserve(ops.size() * static_cast<size_t>(d));
    for (size_t s = 0; s < ops.size(); ++s) {
      long long cv = coef[static_cast<size_t>(cls[s])];
      if (cv == 0) continue;
      const SignedOp& op = ops[s];
      for (int64_t i = 0; i < d; ++i)
        acc.emplace_back(static_cast<int64_t>(op.to[static_cast<size_t>(i)]) * d + i,
                         op.sg[static_cast<size_t>(i)] > 0 ? cv : -cv);
    }
    std::sort(acc.begin(), acc.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    IntMat m(d);
    mpz_class tr = 0;
    size_t i = 0;
    while (i < acc.size()) {
      int64_t idx = acc[i].first;
      __int128 v = 0;
      while (i < acc.size() && acc[i].first == idx) v += acc[i++].second;
      if (v == 0) continue;
      int64_t r = idx / d, c = idx % d;
      long long vv = checked_ll(v, "isotypic");
      m.rows[static_cast<size_t>(r)].emplace_back(c, vv);
      if (r == c) tr += static_cast<long>(vv);
    }
    if (!mpz_divisible_p(tr.get_mpz_t(), out.den.get_mpz_t()))
      throw std::logic_error("projector trace not divisible by n!");
    out.rank.push_back(tr / out.den);
    out.num.push_back(std::move(m));
  }
  return out;
}

std::vector<mpz_class> weighted_trace_table(const std::vector<Partition>& sel, int k, int l,
                                            int n) {
  const GroupTable& gt = group_table(n);
  size_t nn = gt.size;
  std::vector<long long> tp(nn);
  for (size_t i = 0; i < nn; ++i)
    tp[i] = phi_star_trace(cycle_type(gt.perms[i]), k, l).get_si();

  std::vector<mpz_class> out(nn);
  if (sel.empty()) {
    for (size_t i = 0; i < nn; ++i) out[i] = static_cast<long>(tp[i]);
    return out;
  }

  CharacterOracle oracle(n);
  std::vector<int> cls(nn);
  for (size_t i = 0; i < nn; ++i) cls[i] = oracle.index_of(cycle_type(gt.perms[i]));
  for (const Partition& lam : sel) {
    long long f = f_lambda(lam).get_si();
    std::vector<long long> chi(oracle.classes().size());
    for (size_t c = 0; c < chi.size(); ++c) chi[c] = oracle.chi(lam, oracle.classes()[c]);
    for (size_t gidx = 0; gidx < nn; ++gidx) {
      long long s = 0;
      const uint32_t* mrow = gt.mult.data();
      for (size_t rho = 0; rho < nn; ++rho)
        s += chi[static_cast<size_t>(cls[rho])] *
             tp[mrow[rho * nn + gidx]];
      out[gidx] += static_cast<long>(f * s);
    }
  }
  return out;
}

int64_t gram_span_dim_modp(GroupKind grp, int n, const std::vector<mpz_class>& trace_num,
                           uint64_t p) {
  const GroupTable& gt = group_table(n);
  if (trace_num.size() != gt.size)
    throw std::invalid_argument("trace table size mismatch");
  std::vector<uint32_t> idx;
  for (uint32_t i = 0; i < gt.size; ++i)
    if (grp == GroupKind::S || gt.even[i]) idx.push_back(i);
  std::vector<uint64_t> res(gt.size);
  for (size_t i = 0; i < gt.size; ++i)
    res[i] = mpz_fdiv_ui(trace_num[i].get_mpz_t(), p);
  size_t m = idx.size();
  std::vector<std::vector<uint64_t>> mat(m, std::vector<uint64_t>(m));
  for (size_t a = 0; a < m; ++a) {
    uint32_t inva = gt.inv[idx[a]];
    for (size_t b = 0; b < m; ++b)
      mat[a][b] = res[gt.mult[static_cast<size_t>(idx[b]) * gt.size + inva]];
  }
  return dense_rank_modp(std::move(mat), p);
}

/* ---------------------------- crossed product --------------------------- */

VerificationReport verify_crossed_product(int k, int n, const ModeCtx& mc) {
  Timer timer;
  VerificationReport rep;
  rep.theorem = "crossed-product";
  rep.k = k;
  rep.l = k;
  rep.n = n;
  rep.mode = mc.str();
  if (k < 1) {
    rep.applicable = false;
    rep.reason = "needs k = l >= 1";
    return rep;
  }
  if (n < 2) {
    rep.applicable = false;
    rep.reason = "group-theoretic checks need n >= 2";
    return rep;
  }

  GradedSpace g{k, k};
  int64_t d = g.word_count(n);
  SignedOp t = big_T(k, n);
  int eps = epsilon_sign(n);

  /* (a) T centralizes the image of A_n. */
  std::vector<Perm> agens = alternating_gens(n);
  int commuting = 0;
  for (const Perm& p : agens) {
    SignedOp op = phi_star(p, g, n);
    if (t.compose(op) == op.compose(t)) ++commuting;
  }
  rep.add("(a) T in A_n: T commutes with the alternating generators",
          "commutes with " + lls(static_cast<long long>(agens.size())) + "/" +
              lls(static_cast<long long>(agens.size())),
          "commutes with " + lls(commuting) + "/" +
              lls(static_cast<long long>(agens.size())));

  /* (b) T^2 = eps I with eps = (-1)^{n(n-1)/2}. */
  rep.add("(b) T^2 = (-1)^{C(n,2)} I",
          std::string("T^2 = ") + (eps > 0 ? "+I" : "-I"),
          t.compose(t).is_scalar(eps) ? (eps > 0 ? "T^2 = +I" : "T^2 = -I")
                                      : "T^2 is not eps I");

  /* (c) T anti-commutes with every Coxeter generator, in particular (1 2). */
  std::vector<Perm> cgens = coxeter_gens(n);
  int anti = 0;
  for (const Perm& p : cgens) {
    SignedOp op = phi_star(p, g, n);
    if (t.compose(op) == negated(op.compose(t))) ++anti;
  }
  rep.add("(c) phi_s T = -T phi_s for the Coxeter generators (incl. (1 2))",
          "anti-commutes with " + lls(static_cast<long long>(cgens.size())) + "/" +
              lls(static_cast<long long>(cgens.size())),
          "anti-commutes with " + lls(anti) + "/" +
              lls(static_cast<long long>(cgens.size())));

  mpz_class cent_s = dim_centralizer_S(k, k, n);
  mpz_class cent_a = dim_centralizer_A(k, k, n);
  std::vector<SignedOp> cox_ops;
  for (const Perm& p : cgens) cox_ops.push_back(phi_star(p, g, n));

  run_fielded(mc, rep, [&]<class F>(VerificationReport& r) {
    Subspace<F> bsp = centralizer_commutant<F>(GroupKind::S, k, k, n);
    Subspace<F> asp = centralizer_commutant<F>(GroupKind::A, k, k, n);
    bool routes = operator_invariant_space<F>(g, n, InvKind::Sym) == bsp &&
                  operator_invariant_space<F>(g, n, InvKind::Alt) == asp;

    /* (d) B cap TB = 0 and B + TB = A, with dims against the second oracle. */
    Subspace<F> tb = left_image(t, bsp, d);
    Subspace<F> inter = bsp.intersect(tb);
    Subspace<F> sum = bsp.sum(tb);
    auto fmt = [](const std::string& db, const std::string& da, bool twice, bool rt,
                  bool inter0, bool sum_eq) {
      std::string s = "dim B = " + db + ", dim A = " + da;
      s += twice ? " = 2 dim B" : " != 2 dim B";
      s += rt ? ", routes agree" : ", routes differ";
      s += inter0 ? ", B cap TB = 0" : ", B cap TB nonzero";
      s += sum_eq ? ", B + TB = A" : ", B + TB != A";
      return s;
    };
    r.add("(d) B cap TB = 0 and dim(B + TB) = dim A",
          fmt(zs(cent_s), zs(cent_a), cent_a == 2 * cent_s, true, true, true),
          fmt(lls(bsp.dim()), lls(asp.dim()), asp.dim() == 2 * bsp.dim(), routes,
              inter.dim() == 0, sum == asp));

    /* (e) omega(b) = eps T b T preserves B and squares to the identity. */
    std::vector<SMat<F>> bmats = basis_mats(bsp, d);
    F epsf = F::from_int(eps);
    std::vector<SMat<F>> wmats;
    wmats.reserve(bmats.size());
    int in_b = 0, invol = 0;
    for (const SMat<F>& b : bmats) {
      SMat<F> w = left_mul_signed(t, right_mul_signed(b, t));
      w.scale(epsf);
      if (commutes_with(cox_ops, w)) ++in_b;
      SMat<F> ww = left_mul_signed(t, right_mul_signed(w, t));
      ww.scale(epsf);
      if (ww == b) ++invol;
      wmats.push_back(std::move(w));
    }
    std::string nb = lls(static_cast<long long>(bmats.size()));
    r.add("(e) omega(b) = eps T b T maps B to B and omega^2 = id",
          "omega(B basis) in B: " + nb + "/" + nb + ", omega^2 fixes " + nb + "/" + nb,
          "omega(B basis) in B: " + lls(in_b) + "/" + nb + ", omega^2 fixes " +
              lls(invol) + "/" + nb);

    /* (f) zeta((b,h)) = b for h = 1 and sqrt(eps) b T for h = omega is
     * multiplicative.  On basis pairs the four (h,h') cases reduce to: B is
     * closed under b b' and b omega(b'), and b omega(b') T = b T b' (the
     * mixed case; the other three follow from associativity once closure
     * holds).  sqrt(eps) = i when eps = -1. */
    F se = eps > 0 ? F::one() : F::imag_unit();
    std::vector<SMat<F>> bt;
    bt.reserve(bmats.size());
    for (const SMat<F>& b : bmats) {
      SMat<F> m = right_mul_signed(b, t);
      m.scale(se);
      bt.push_back(std::move(m));
    }
    long long pairs = static_cast<long long>(bmats.size()) *
                      static_cast<long long>(bmats.size());
    long long closed = 0, mixed = 0;
    for (size_t i = 0; i < bmats.size(); ++i) {
      for (size_t j = 0; j < bmats.size(); ++j) {
        SMat<F> p1 = bmats[i].mul(bmats[j]);
        SMat<F> p2 = bmats[i].mul(wmats[j]);
        if (commutes_with(cox_ops, p1) && commutes_with(cox_ops, p2)) ++closed;
        SMat<F> lhs = right_mul_signed(p2, t);
        lhs.scale(se);
        if (lhs == bt[i].mul(bmats[j])) ++mixed;
      }
    }
    std::string np = lls(pairs);
    r.add("(f) zeta is multiplicative on all basis pairs of B x {1, omega}",
          "closure on " + np + "/" + np + " pairs, mixed case on " + np + "/" + np,
          "closure on " + lls(closed) + "/" + np + " pairs, mixed case on " +
              lls(mixed) + "/" + np);
  });

  rep.elapsed_ms = timer.ms();
  return rep;
}

/* ------------------------------ hook theorem ---------------------------- */

VerificationReport verify_hook_theorem(int k, int l, int n, const ModeCtx& mc) {
  Timer timer;
  VerificationReport rep;
  rep.theorem = "hook";
  rep.k = k;
  rep.l = l;
  rep.n = n;
  rep.mode = mc.str();
  if (k < 0 || l < 0 || k + l < 1 || n < 1) {
    rep.applicable = false;
    rep.reason = "needs k, l >= 0 with k + l >= 1 and n >= 1";
    return rep;
  }

  GradedSpace g{k, l};
  int64_t d = g.word_count(n);
  if (n > 8 || factorial(n).get_d() * static_cast<double>(d) > 6e8) {
    rep.applicable = false;
    rep.reason = "refused: isotypic projectors too large at this size";
    return rep;
  }
  IsotypicData iso = isotypic(k, l, n);
  Multiplicities mult = multiplicities(k, l, n);
  long long fact = factorial(n).get_si();
  size_t np = iso.lambdas.size();

  /* E_lambda^2 = E_lambda (numerators: N^2 = n! N). */
  int idem = 0;
  for (size_t i = 0; i < np; ++i)
    if (iso.num[i].mul(iso.num[i]).equals_scaled(iso.num[i], fact)) ++idem;
  rep.add("(idempotents) E_lambda^2 = E_lambda for every lambda |- n",
          lls(static_cast<long long>(np)) + "/" + lls(static_cast<long long>(np)),
          lls(idem) + "/" + lls(static_cast<long long>(np)));

  /* sum_lambda E_lambda = I. */
  IntMat total(d);
  for (size_t i = 0; i < np; ++i) total = total.add(iso.num[i], 1);
  rep.add("(completeness) sum_lambda E_lambda = I", "sum = I",
          total.is_scaled_identity(fact) ? "sum = I" : "sum != I");

  /* Pairwise orthogonality: explicit products when the support is small,
   * otherwise via symmetry + idempotence + completeness + the rank sum
   * (symmetric idempotents summing to I with ranks summing to d are
   * necessarily pairwise orthogonal). */
  mpz_class rank_sum = 0;
  for (size_t i = 0; i < np; ++i) rank_sum += iso.rank[i];
  if (d <= 1024) {
    long long zero_pairs = 0, want_pairs = 0;
    for (size_t i = 0; i < np; ++i)
      for (size_t j = i + 1; j < np; ++j) {
        ++want_pairs;
        if (iso.num[i].mul(iso.num[j]).is_zero()) ++zero_pairs;
      }
    rep.add("(orthogonality) E_lambda E_mu = 0 for lambda != mu",
            lls(want_pairs) + "/" + lls(want_pairs) + " products vanish",
            lls(zero_pairs) + "/" + lls(want_pairs) + " products vanish");
  } else {
    int symm = 0;
    for (size_t i = 0; i < np; ++i)
      if (iso.num[i].is_symmetric()) ++symm;
    std::string nps = lls(static_cast<long long>(np));
    rep.add("(orthogonality) via symmetric idempotents with rank sum d",
            "symmetric " + nps + "/" + nps + ", rank sum " + lls(d),
            "symmetric " + lls(symm) + "/" + nps + ", rank sum " + zs(rank_sum));
  }

  /* rank E_lambda = f_lambda m_lambda. */
  std::string bad_rank, bad_hook;
  for (size_t i = 0; i < np; ++i) {
    const Partition& lam = iso.lambdas[i];
    if (iso.rank[i] != f_lambda(lam) * mult.at(lam))
      bad_rank += (bad_rank.empty() ? "" : ", ") + lam.str();
    bool pos = iso.rank[i] > 0;
    if (pos != in_hook(lam, k, l))
      bad_hook += (bad_hook.empty() ? "" : ", ") + lam.str();
  }
  rep.add("(ranks) rank E_lambda = f_lambda * m_lambda for every lambda",
          "all " + lls(static_cast<long long>(np)) + " agree",
          bad_rank.empty() ? "all " + lls(static_cast<long long>(np)) + " agree"
                           : "mismatch at " + bad_rank);

  /* The hook theorem itself: rank positive iff lambda is in H(k,l;n). */
  rep.add("(hook support) rank E_lambda > 0 iff lambda in H(k,l;n)",
          "supports coincide",
          bad_hook.empty() ? "supports coincide" : "mismatch at " + bad_hook);

  /* Ranks sum to d; with completeness this is the dimension of the span of
   * the projector images. */
  rep.add("(rank sum) sum_lambda rank E_lambda = dim of the ambient tensor power",
          zs(mpz_class(static_cast<long>(d))), zs(rank_sum));

  /* dim phi*(F S_n) = sum over the hook of f^2: explicit span when cheap,
   * Gram-certified in modular mode otherwise, omitted for oversized exact
   * requests. */
  mpz_class im_s = dim_image_S(k, l, n);
  double est = span_cost(factorial(n).get_d(), im_s, static_cast<double>(d));
  if (est <= (mc.modular ? kModularSpanBudget : kExactSpanBudget)) {
    run_fielded(mc, rep, [&]<class F>(VerificationReport& r) {
      Subspace<F> span = image_span<F>(GroupKind::S, k, l, n);
      r.add("(image span) dim span{phi_sigma} = sum_{H(k,l;n)} f^2", zs(im_s),
            lls(span.dim()));
    });
  } else if (mc.modular) {
    std::vector<mpz_class> tnum = weighted_trace_table({}, k, l, n);
    GramDim gd = gram_span_dim(GroupKind::S, n, tnum, mc);
    rep.add("(image span) dim span{phi_sigma} = sum_{H(k,l;n)} f^2 (Gram)",
            zs(im_s) + ", primes agree",
            lls(gd.dim) + (gd.agreed ? ", primes agree" : ", primes disagree"));
  }

  rep.elapsed_ms = timer.ms();
  return rep;
}

/* ---------------------------- classical anomaly ------------------------- */

VerificationReport verify_classical_anomaly(int k, int n, const ModeCtx& mc) {
  Timer timer;
  VerificationReport rep;
  rep.theorem = "classical";
  rep.k = k;
  rep.l = 0;
  rep.n = n;
  rep.mode = mc.str();
  if (k < 1 || n < 2) {
    rep.applicable = false;
    rep.reason = "needs k >= 1 and n >= 2";
    return rep;
  }
  if (static_cast<long long>(k) * k >= n) {
    rep.applicable = false;
    rep.reason = "not applicable (k^2 >= n)";
    return rep;
  }
  if (n > 8) {
    rep.applicable = false;
    rep.reason = "refused: group enumeration beyond n = 8";
    return rep;
  }

  mpz_class im_s = dim_image_S(k, 0, n), im_a = dim_image_A(k, 0, n);
  mpz_class cent_s = dim_centralizer_S(k, 0, n), cent_a = dim_centralizer_A(k, 0, n);
  rep.add("(counting) character oracle sees no doubling below the threshold",
          "dim phi(FS) = dim phi(FA) and dim B = dim A",
          (im_s == im_a && cent_s == cent_a)
              ? "dim phi(FS) = dim phi(FA) and dim B = dim A"
              : "character dimensions split");

  GradedSpace g{k, 0};
  run_fielded(mc, rep, [&]<class F>(VerificationReport& r) {
    Subspace<F> span_s = image_span<F>(GroupKind::S, k, 0, n);
    Subspace<F> span_a = image_span<F>(GroupKind::A, k, 0, n);
    auto fmt = [&](const std::string& ds, const std::string& da, bool eq) {
      return "dim = " + ds + " / " + da + (eq ? ", spans equal" : ", spans differ");
    };
    r.add("(images) phi*(F S_n) = phi*(F A_n) as subspaces",
          fmt(zs(im_s), zs(im_a), true),
          fmt(lls(span_s.dim()), lls(span_a.dim()), span_s == span_a));

    Subspace<F> cent_sp = centralizer_commutant<F>(GroupKind::S, k, 0, n);
    Subspace<F> cent_ap = centralizer_commutant<F>(GroupKind::A, k, 0, n);
    r.add("(centralizers) B_n = A_n as subspaces",
          fmt(zs(cent_s), zs(cent_a), true),
          fmt(lls(cent_sp.dim()), lls(cent_ap.dim()), cent_sp == cent_ap));

    bool routes = operator_invariant_space<F>(g, n, InvKind::Sym) == cent_sp &&
                  operator_invariant_space<F>(g, n, InvKind::Alt) == cent_ap;
    r.add("(routes) commutant matches the conjugation-invariant space",
          "both groups agree", routes ? "both groups agree" : "routes differ");
  });

  rep.elapsed_ms = timer.ms();
  return rep;
}

/* --------------------------------- P and Q ------------------------------ */

VerificationReport verify_pq(int k, int l, int n, const ModeCtx& mc) {
  Timer timer;
  VerificationReport rep;
  rep.theorem = "pq";
  rep.k = k;
  rep.l = l;
  rep.n = n;
  rep.mode = mc.str();
  if (k == l) {
    rep.applicable = false;
    rep.reason = "hypothesis l != k violated";
    return rep;
  }
  if (k < 0 || l < 0 || k + l < 1 || n < 2) {
    rep.applicable = false;
    rep.reason = "needs k, l >= 0 with k + l >= 1 and n >= 2";
    return rep;
  }
  if (n > 6) {
    rep.applicable = false;
    rep.reason = "refused: P/Q checks beyond n = 6";
    return rep;
  }

  GradedSpace g{k, l};
  int64_t d = g.word_count(n);
  IsotypicData iso = isotypic(k, l, n);
  Multiplicities mult = multiplicities(k, l, n);
  HookSets hooks = hook_sets(k, l, n);
  long long fact = factorial(n).get_si();

  auto index_of_lambda = [&](const Partition& p) {
    for (size_t i = 0; i < iso.lambdas.size(); ++i)
      if (iso.lambdas[i] == p) return i;
    throw std::logic_error("partition missing from isotypic data");
  };
  IntMat e_q(d), e_p(d);
  for (const Partition& p : hooks.H1) e_q = e_q.add(iso.num[index_of_lambda(p)], 1);
  for (const Partition& p : hooks.H0) e_p = e_p.add(iso.num[index_of_lambda(p)], 1);

  mpz_class dim_q_char = sum_f2(hooks.H1);
  mpz_class dim_p_char = sum_f2(hooks.H0);
  mpz_class dim_pp_char = sum_f2_fused(hooks.H0);
  mpz_class dim_bq_char = 0;
  for (const Partition& p : hooks.H1) {
    mpz_class m = mult.at(p);
    dim_bq_char += m * m;
  }
  std::string degenerate =
      hooks.H1.empty() ? " (degenerate: H1 empty)" : "";

  bool p_is_identity = e_p.is_scaled_identity(fact);
  double gens_both = factorial(n).get_d() * 1.5;
  double q_cost = span_cost(gens_both, dim_q_char,
                            static_cast<double>(std::max<int64_t>(e_q.nnz(), 1)));
  double p_cost = span_cost(
      gens_both, dim_p_char,
      static_cast<double>(p_is_identity ? d : std::max<int64_t>(e_p.nnz(), 1)));
  double budget = mc.modular ? kModularSpanBudget : kExactSpanBudget;
  bool q_explicit = q_cost <= budget;
  bool p_explicit = p_cost <= budget;
  if (!mc.modular && (!q_explicit || !p_explicit)) {
    rep.applicable = false;
    rep.reason = "refused: exact spans too large here, rerun in modular mode";
    return rep;
  }

  /* (a) Q = Q' and (b) dim P = 2 dim P' with P' inside P, computed from
   * explicit spans where affordable and from two-prime Gram ranks otherwise
   * (the A_n span is generated by a subset of the S_n generators, so the
   * containments Q' <= Q and P' <= P hold by construction and equal
   * dimensions upgrade them). */
  std::vector<Check> span_checks;
  VerificationReport sub;
  run_fielded(mc, sub, [&]<class F>(VerificationReport& r) {
    if (q_explicit) {
      Subspace<F> qs = image_span<F>(GroupKind::S, k, l, n, &e_q, &iso.den);
      Subspace<F> qa = image_span<F>(GroupKind::A, k, l, n, &e_q, &iso.den);
      auto fmt = [&](const std::string& ds, const std::string& da, bool eq) {
        return "dim Q = " + ds + ", dim Q' = " + da +
               (eq ? ", Q = Q'" : ", Q != Q'") + degenerate;
      };
      r.add("(a) Q = Q': S_n and A_n spans of {E_Q phi_sigma} coincide",
            fmt(zs(dim_q_char), zs(dim_q_char), true),
            fmt(lls(qs.dim()), lls(qa.dim()), qs == qa));
    }
    if (p_explicit) {
      const IntMat* ep = p_is_identity ? nullptr : &e_p;
      const mpz_class* den = p_is_identity ? nullptr : &iso.den;
      Subspace<F> ps = image_span<F>(GroupKind::S, k, l, n, ep, den);
      Subspace<F> pa = image_span<F>(GroupKind::A, k, l, n, ep, den);
      bool inside = true;
      for (const auto& row : pa.rows())
        if (!ps.contains(row)) inside = false;
      auto fmt = [&](const std::string& ds, const std::string& da, bool twice,
                     bool in) {
        return "dim P = " + ds + ", dim P' = " + da +
               (twice ? ", dim P = 2 dim P'" : ", dim P != 2 dim P'") +
               (in ? ", P' in P" : ", P' not in P");
      };
      r.add("(b) dim P = 2 dim P' and P' is a subspace of P",
            fmt(zs(dim_p_char), zs(dim_pp_char), dim_p_char == 2 * dim_pp_char, true),
            fmt(lls(ps.dim()), lls(pa.dim()), ps.dim() == 2 * pa.dim(), inside));
    }
  });
  span_checks = std::move(sub.checks);

  size_t consumed = 0;
  if (q_explicit) {
    rep.checks.push_back(std::move(span_checks[consumed++]));
  } else {
    std::vector<mpz_class> tnum = weighted_trace_table(hooks.H1, k, l, n);
    GramDim qs = gram_span_dim(GroupKind::S, n, tnum, mc);
    GramDim qa = gram_span_dim(GroupKind::A, n, tnum, mc);
    auto fmt = [&](const std::string& ds, const std::string& da, bool agreed) {
      return "dim Q = " + ds + ", dim Q' = " + da +
             ", Q' <= Q by generator inclusion" +
             (agreed ? ", primes agree" : ", primes disagree");
    };
    rep.add("(a) Q = Q': equal Gram dimensions over S_n and A_n",
            fmt(zs(dim_q_char), zs(dim_q_char), true),
            fmt(lls(qs.dim), lls(qa.dim), qs.agreed && qa.agreed));
  }
  if (p_explicit) {
    rep.checks.push_back(std::move(span_checks[consumed++]));
  } else {
    std::vector<mpz_class> tnum = weighted_trace_table(hooks.H0, k, l, n);
    GramDim ps = gram_span_dim(GroupKind::S, n, tnum, mc);
    GramDim pa = gram_span_dim(GroupKind::A, n, tnum, mc);
    auto fmt = [&](const std::string& ds, const std::string& da, bool twice,
                   bool agreed) {
      return "dim P = " + ds + ", dim P' = " + da +
             (twice ? ", dim P = 2 dim P'" : ", dim P != 2 dim P'") +
             ", P' <= P by generator inclusion" +
             (agreed ? ", primes agree" : ", primes disagree");
    };
    rep.add("(b) dim P = 2 dim P' via Gram ranks",
            fmt(zs(dim_p_char), zs(dim_pp_char), dim_p_char == 2 * dim_pp_char, true),
            fmt(lls(ps.dim), lls(pa.dim), ps.dim == 2 * pa.dim, ps.agreed && pa.agreed));
  }

  /* (c) A_Q = B_Q and (d) the reported B_P <= A_P dims, both through the
   * commutants of the generators restricted to W_Q resp. W_P. */
  run_fielded(mc, rep, [&]<class F>(VerificationReport& r) {
    std::vector<SignedOp> ops_s, ops_a;
    for (const Perm& p : group_gens(n, GroupKind::S)) ops_s.push_back(phi_star(p, g, n));
    for (const Perm& p : group_gens(n, GroupKind::A)) ops_a.push_back(phi_star(p, g, n));

    Subspace<F> wq = column_space<F>(e_q, iso.den);
    std::vector<SMat<F>> rs, ra;
    bool inv_q = restrict_ops(wq, ops_s, rs) && restrict_ops(wq, ops_a, ra);
    Subspace<F> bq = commutant<F>(rs, wq.dim());
    Subspace<F> aq = commutant<F>(ra, wq.dim());
    auto fmt = [&](const std::string& db, const std::string& da, bool inv, bool eq) {
      return "dim B_Q = " + db + ", dim A_Q = " + da +
             (inv ? ", W_Q invariant" : ", W_Q not invariant") +
             (eq ? ", equal" : ", different") + degenerate;
    };
    r.add("(c) A_Q = B_Q on W_Q",
          fmt(zs(dim_bq_char), zs(dim_bq_char), true, true),
          fmt(lls(bq.dim()), lls(aq.dim()), inv_q, bq == aq));

    Subspace<F> wp = column_space<F>(e_p, iso.den);
    bool inv_p = restrict_ops(wp, ops_s, rs) && restrict_ops(wp, ops_a, ra);
    Subspace<F> bp = commutant<F>(rs, wp.dim());
    Subspace<F> ap = commutant<F>(ra, wp.dim());
    bool d_ok = inv_p && bp.dim() <= ap.dim();
    std::string d_detail = std::string(inv_p ? "W_P invariant" : "W_P not invariant") +
                           ", dim B_P = " + lls(bp.dim()) + " <= dim A_P = " + lls(ap.dim());
    r.add("(d) B_P and A_P dimensions (reported, no assertion)",
          d_ok ? d_detail : "W_P invariant, dim B_P <= dim A_P",
          d_detail + (d_ok ? "" : " VIOLATED"));
  });

  rep.elapsed_ms = timer.ms();
  return rep;
}

/* --------------------------- invariant splitting ------------------------ */

VerificationReport verify_lemma_1_4(int k, int l, int n, const ModeCtx& mc) {
  Timer timer;
  VerificationReport rep;
  rep.theorem = "lemma14";
  rep.k = k;
  rep.l = l;
  rep.n = n;
  rep.mode = mc.str();
  if (k < 0 || l < 0 || k + l < 1 || n < 2) {
    rep.applicable = false;
    rep.reason = "group-theoretic checks need n >= 2 (and k + l >= 1)";
    return rep;
  }
  if (n > 8) {
    rep.applicable = false;
    rep.reason = "refused: group enumeration beyond n = 8";
    return rep;
  }

  GradedSpace g{k, l};
  int64_t d = g.word_count(n);
  Multiplicities mult = multiplicities(k, l, n);
  mpz_class dim_plus = mult.at(Partition({n}));
  mpz_class dim_minus = mult.at(Partition(std::vector<int>(static_cast<size_t>(n), 1)));
  mpz_class dim_l_avg = class_average(k, l, n, true, false, false);
  bool square = k == l;
  SignedOp t = square ? big_T(k, n) : SignedOp{};

  run_fielded(mc, rep, [&]<class F>(VerificationReport& r) {
    /* Vector version: the A_n-invariants split as the S_n-invariants plus
     * the sign-isotypic vectors. */
    Subspace<F> plus = invariant_space<F>(g, n, InvKind::Sym);
    Subspace<F> minus = invariant_space<F>(g, n, InvKind::Anti);
    Subspace<F> alt = invariant_space<F>(g, n, InvKind::Alt);
    r.add("(V dims) dim I+ = m_(n) and dim I- = m_(1^n)",
          zs(dim_plus) + " and " + zs(dim_minus),
          lls(plus.dim()) + " and " + lls(minus.dim()));
    auto fmt = [](const std::string& dl, bool inter0, bool eq) {
      return "dim L = " + dl + (inter0 ? ", I+ cap I- = 0" : ", I+ cap I- nonzero") +
             (eq ? ", I+ + I- = L" : ", I+ + I- != L");
    };
    r.add("(V split) L = I+ (+) I- inside V^{otimes n}",
          fmt(zs(dim_l_avg), true, true),
          fmt(lls(alt.dim()), plus.intersect(minus).dim() == 0,
              plus.sum(minus) == alt));
    if (square) {
      bool swap_ok = vec_image(t, plus) == minus && vec_image(t, minus) == plus;
      r.add("(V swap) T interchanges I+ and I- (k = l)", "T I+ = I- and T I- = I+",
            swap_ok ? "T I+ = I- and T I- = I+" : "T does not swap the summands");
    }
  });

  /* Operator version on End(V^{otimes n}), size-gated. */
  if (d <= 256) {
    mpz_class cent_s = dim_centralizer_S(k, l, n);
    mpz_class cent_a = dim_centralizer_A(k, l, n);
    mpz_class cross = 0;
    for (const auto& [lam, m] : mult.m) cross += m * mult.at(conjugate(lam));
    mpz_class sign_avg = class_average(k, l, n, false, true, true);
    mpz_class alt_avg = class_average(k, l, n, true, false, true);
    if (cross != sign_avg || cent_a != alt_avg)
      throw std::logic_error("operator-version character oracles disagree");

    run_fielded(mc, rep, [&]<class F>(VerificationReport& r) {
      Subspace<F> plus = operator_invariant_space<F>(g, n, InvKind::Sym);
      Subspace<F> minus = operator_invariant_space<F>(g, n, InvKind::Anti);
      Subspace<F> alt = operator_invariant_space<F>(g, n, InvKind::Alt);
      r.add("(E dims) dim I+ = sum m^2 and dim I- = sum m_lambda m_lambda'",
            zs(cent_s) + " and " + zs(cross),
            lls(plus.dim()) + " and " + lls(minus.dim()));
      auto fmt = [](const std::string& dl, bool inter0, bool eq) {
        return "dim L = " + dl + (inter0 ? ", I+ cap I- = 0" : ", I+ cap I- nonzero") +
               (eq ? ", I+ + I- = L" : ", I+ + I- != L");
      };
      r.add("(E split) L = I+ (+) I- inside End(V^{otimes n})",
            fmt(zs(cent_a), true, true),
            fmt(lls(alt.dim()), plus.intersect(minus).dim() == 0,
                plus.sum(minus) == alt));
      if (square) {
        bool swap_ok =
            left_image(t, plus, d) == minus && left_image(t, minus, d) == plus;
        r.add("(E swap) left multiplication by T interchanges I+ and I- (k = l)",
              "T I+ = I- and T I- = I+",
              swap_ok ? "T I+ = I- and T I- = I+" : "T does not swap the summands");
      }
    });
  }

  rep.elapsed_ms = timer.ms();
  return rep;
}

/* ------------------------------- dimensions ----------------------------- */

DimsRow dims_row(int k, int l, int n, const ModeCtx& mc, bool with_linalg) {
  DimsRow row;
  row.k = k;
  row.l = l;
  row.n = n;
  row.im_s_char = dim_image_S(k, l, n);
  row.im_a_char = dim_image_A(k, l, n);
  row.cent_s_char = dim_centralizer_S(k, l, n);
  row.cent_a_char = dim_centralizer_A(k, l, n);
  row.method = "char";
  row.agree = true;
  row.routes_equal = true;

  GradedSpace g{k, l};
  int64_t d = g.word_count(n);
  if (!with_linalg || n < 2) return row;
  if (d > 1024 || n > 7) return row;  // character oracle only beyond this
  row.with_linalg = true;

  double im_cost =
      span_cost(factorial(n).get_d() * 1.5, row.im_s_char, static_cast<double>(d));
  bool span_ok = im_cost <= (mc.modular ? kModularSpanBudget : kExactSpanBudget);
  bool gram_ok = !span_ok && mc.modular && n <= 6;

  struct La {
    long long im_s = -1, im_a = -1, cent_s = -1, cent_a = -1;
    bool routes = false;
  };
  auto compute = [&]<class F>() {
    La la;
    if (span_ok) {
      la.im_s = image_span<F>(GroupKind::S, k, l, n).dim();
      la.im_a = image_span<F>(GroupKind::A, k, l, n).dim();
    }
    Subspace<F> cs = centralizer_commutant<F>(GroupKind::S, k, l, n);
    Subspace<F> ca = centralizer_commutant<F>(GroupKind::A, k, l, n);
    la.cent_s = cs.dim();
    la.cent_a = ca.dim();
    la.routes = operator_invariant_space<F>(g, n, InvKind::Sym) == cs &&
                operator_invariant_space<F>(g, n, InvKind::Alt) == ca;
    return la;
  };

  La la;
  if (!mc.modular) {
    la = compute.template operator()<GaussRat>();
  } else {
    Fp::set_context(mc.p1);
    La a = compute.template operator()<Fp>();
    Fp::set_context(mc.p2);
    La b = compute.template operator()<Fp>();
    if (a.im_s != b.im_s || a.im_a != b.im_a || a.cent_s != b.cent_s ||
        a.cent_a != b.cent_a || a.routes != b.routes) {
      row.agree = false;
      row.method = "char+prime-disagreement";
      return row;
    }
    la = a;
  }
  if (gram_ok) {
    std::vector<mpz_class> tnum = weighted_trace_table({}, k, l, n);
    GramDim gs = gram_span_dim(GroupKind::S, n, tnum, mc);
    GramDim ga = gram_span_dim(GroupKind::A, n, tnum, mc);
    if (!gs.agreed || !ga.agreed) {
      row.agree = false;
      row.method = "char+prime-disagreement";
      return row;
    }
    la.im_s = gs.dim;
    la.im_a = ga.dim;
  }

  row.im_s_la = la.im_s;
  row.im_a_la = la.im_a;
  row.cent_s_la = la.cent_s;
  row.cent_a_la = la.cent_a;
  row.routes_equal = la.routes;
  row.method = span_ok ? "char+span+commutant"
                       : (gram_ok ? "char+gram+commutant" : "char+commutant");
  bool images_ok = (la.im_s < 0 && la.im_a < 0) ||
                   (mpz_class(static_cast<long>(la.im_s)) == row.im_s_char &&
                    mpz_class(static_cast<long>(la.im_a)) == row.im_a_char);
  bool cents_ok = mpz_class(static_cast<long>(la.cent_s)) == row.cent_s_char &&
                  mpz_class(static_cast<long>(la.cent_a)) == row.cent_a_char;
  row.agree = images_ok && cents_ok && la.routes;
  return row;
}

}  // namespace altschur
