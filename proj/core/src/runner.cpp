#include "altschur/runner.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace altschur {
namespace {

using json = nlohmann::ordered_json;

std::string dbl_str(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

/* Truncated fixed-point rendering of a rational; pure integer math, so the
 * same input always prints the same bytes. */
std::string decimal_str(const mpq_class& v, int digits = 12) {
  mpz_class num = v.get_num(), den = v.get_den();
  std::string sign;
  if (num < 0) {
    sign = "-";
    num = -num;
  }
  mpz_class ip = num / den;
  mpz_class pow10 = 1;
  for (int i = 0; i < digits; ++i) pow10 *= 10;
  mpz_class frac = (num % den) * pow10 / den;
  std::string fs = frac.get_str();
  fs.insert(fs.begin(), static_cast<size_t>(digits) - fs.size(), '0');
  return sign + ip.get_str() + "." + fs;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    out += c;
    if (c == '"') out += '"';
  }
  out += '"';
  return out;
}

const char* mode_name(Mode m) {
  switch (m) {
    case Mode::Exact: return "exact";
    case Mode::Modular: return "modular";
    default: return "auto";
  }
}

struct Primes {
  uint64_t p1, p2;
};

Primes primes_from_seed(uint64_t seed) {
  std::mt19937_64 rng(seed);
  uint64_t p1 = pick_prime(rng), p2 = p1;
  while (p2 == p1) p2 = pick_prime(rng);
  return {p1, p2};
}

/* auto resolves to modular once the operator side gets big: dim^2 > 4096. */
ModeCtx resolve_mode(Mode m, const Primes& pr, int k, int l, int n) {
  bool modular = m == Mode::Modular;
  if (m == Mode::Auto) {
    double d = std::pow(static_cast<double>(k + l), n);
    modular = d * d > 4096.0;
  }
  return modular ? ModeCtx{true, pr.p1, pr.p2} : ModeCtx{false, 0, 0};
}

std::string range_str(int lo, int hi) {
  return lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi);
}

json config_json(const RunConfig& cfg) {
  json c;
  c["command"] = cfg.command;
  c["target"] = cfg.target;
  c["k"] = cfg.k;
  c["l"] = cfg.l;
  c["n"] = range_str(cfg.n_lo, cfg.n_hi);
  c["mode"] = mode_name(cfg.mode);
  c["seed"] = cfg.seed;
  c["jobs"] = cfg.jobs;
  if (cfg.command == "asymptotics") {
    c["variant"] = cfg.variant == MRatioVariant::Rest ? "rest" : "total";
    c["fit"] = cfg.fit;
    if (cfg.window_lo || cfg.window_hi) c["window"] = range_str(cfg.window_lo, cfg.window_hi);
  }
  c["timings"] = cfg.timings;
  return c;
}

/* ---------------- verify ---------------- */

struct VerifyJob {
  std::string target;
  int k, l, n;
};

VerificationReport dispatch(const VerifyJob& j, const ModeCtx& mc) {
  if (j.target == "crossed-product") return verify_crossed_product(j.k, j.n, mc);
  if (j.target == "hook") return verify_hook_theorem(j.k, j.l, j.n, mc);
  if (j.target == "classical") return verify_classical_anomaly(j.k, j.n, mc);
  if (j.target == "pq") return verify_pq(j.k, j.l, j.n, mc);
  if (j.target == "lemma14") return verify_lemma_1_4(j.k, j.l, j.n, mc);
  throw std::invalid_argument("unknown verify target: " + j.target);
}

std::vector<VerifyJob> verify_jobs(const RunConfig& cfg) {
  static const char* kTargets[] = {"crossed-product", "hook", "classical", "pq", "lemma14"};
  std::vector<VerifyJob> out;
  for (int n = cfg.n_lo; n <= cfg.n_hi; ++n) {
    if (cfg.target == "all") {
      /* fan out to every checker whose hypothesis fits (k, l) */
      for (const char* t : kTargets) {
        std::string ts = t;
        if (ts == "crossed-product" && cfg.l != cfg.k) continue;
        if (ts == "classical" && cfg.l != 0) continue;
        if (ts == "pq" && cfg.l == cfg.k) continue;
        out.push_back({ts, cfg.k, cfg.l, n});
      }
    } else {
      int l = cfg.l;
      if (cfg.target == "crossed-product" && !cfg.l_set) l = cfg.k;
      out.push_back({cfg.target, cfg.k, l, n});
    }
  }
  return out;
}

std::vector<VerificationReport> execute(const RunConfig& cfg, const std::vector<VerifyJob>& jobs,
                                        const Primes& pr) {
  std::vector<VerificationReport> reports(jobs.size());
  auto one = [&](size_t i) {
    const VerifyJob& j = jobs[i];
    ModeCtx mc = resolve_mode(cfg.mode, pr, j.k, j.l, j.n);
    reports[i] = dispatch(j, mc);
    if (!cfg.timings) reports[i].elapsed_ms = 0.0;
  };
  int workers = std::min<int>(cfg.jobs, static_cast<int>(jobs.size()));
  if (workers <= 1) {
    for (size_t i = 0; i < jobs.size(); ++i) one(i);
    return reports;
  }
  std::atomic<size_t> next{0};
  std::vector<std::exception_ptr> errs(static_cast<size_t>(workers));
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (size_t i; (i = next.fetch_add(1)) < jobs.size();) one(i);
      } catch (...) {
        errs[static_cast<size_t>(w)] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
  return reports;
}

std::string verify_table(const std::vector<VerificationReport>& reports, bool timings) {
  std::ostringstream os;
  int checks = 0, failures = 0;
  for (const auto& r : reports) {
    os << r.theorem << " k=" << r.k << " l=" << r.l << " n=" << r.n << " [" << r.mode << "]";
    if (!r.applicable) {
      os << ": " << r.reason << "\n";
      continue;
    }
    os << (r.passed() ? ": PASS" : ": FAIL");
    if (timings) {
      char buf[32];
      std::snprintf(buf, sizeof buf, " (%.1f ms)", r.elapsed_ms);
      os << buf;
    }
    os << "\n";
    for (const auto& c : r.checks) {
      ++checks;
      os << "  " << (c.pass ? "[ok]  " : "[FAIL]") << " " << c.name << "\n";
      if (c.pass) {
        os << "         " << c.actual << "\n";
      } else {
        ++failures;
        os << "         expected: " << c.expected << "\n";
        os << "         actual:   " << c.actual << "\n";
      }
    }
  }
  os << checks << " checks, "
     << (failures ? "fail" : checks ? "pass" : "not applicable") << "\n";
  return os.str();
}

json report_json(const VerificationReport& r) {
  json j;
  j["theorem"] = r.theorem;
  j["params"] = {{"k", r.k}, {"l", r.l}, {"n", r.n}};
  j["mode"] = r.mode;
  j["applicable"] = r.applicable;
  if (!r.applicable) j["reason"] = r.reason;
  j["checks"] = json::array();
  for (const auto& c : r.checks)
    j["checks"].push_back(
        {{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

RunResult run_verify(const RunConfig& cfg) {
  Primes pr = primes_from_seed(cfg.seed);
  std::vector<VerifyJob> jobs = verify_jobs(cfg);
  if (jobs.empty()) throw std::invalid_argument("no applicable verify targets for (k, l)");
  std::vector<VerificationReport> reports = execute(cfg, jobs, pr);
  RunResult res;
  res.exit_code = verify_exit_code(reports);
  if (cfg.format == Format::Table) {
    res.rendered = verify_table(reports, cfg.timings);
  } else if (cfg.format == Format::Json) {
    json out;
    out["tool"] = "altschur";
    out["version"] = "1.0.0";
    out["config"] = config_json(cfg);
    out["reports"] = json::array();
    int checks = 0, failures = 0;
    for (const auto& r : reports) {
      out["reports"].push_back(report_json(r));
      for (const auto& c : r.checks) {
        ++checks;
        failures += !c.pass;
      }
    }
    out["summary"] = {{"reports", reports.size()},
                      {"checks", checks},
                      {"failures", failures},
                      {"exit", res.exit_code}};
    res.rendered = out.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "theorem,k,l,n,mode,applicable,check,pass,expected,actual\n";
    for (const auto& r : reports) {
      if (!r.applicable) {
        os << r.theorem << "," << r.k << "," << r.l << "," << r.n << "," << csv_quote(r.mode)
           << ",false,,," << csv_quote(r.reason) << ",\n";
        continue;
      }
      for (const auto& c : r.checks)
        os << r.theorem << "," << r.k << "," << r.l << "," << r.n << "," << csv_quote(r.mode)
           << ",true," << csv_quote(c.name) << "," << (c.pass ? "true" : "false") << ","
           << csv_quote(c.expected) << "," << csv_quote(c.actual) << "\n";
    }
    res.rendered = os.str();
  }
  return res;
}

/* ---------------- dims ---------------- */

RunResult run_dims(const RunConfig& cfg) {
  Primes pr = primes_from_seed(cfg.seed);
  std::vector<DimsRow> rows;
  for (int n = cfg.n_lo; n <= cfg.n_hi; ++n) {
    ModeCtx mc = resolve_mode(cfg.mode, pr, cfg.k, cfg.l, n);
    rows.push_back(dims_row(cfg.k, cfg.l, n, mc, true));
  }
  RunResult res;
  for (const auto& r : rows)
    if (!r.agree) res.exit_code = 1;
  auto la = [](long long v) { return v < 0 ? std::string("-") : std::to_string(v); };
  if (cfg.format == Format::Table) {
    std::ostringstream os;
    os << "k=" << cfg.k << " l=" << cfg.l << "  (char oracle | linear algebra)\n";
    os << "  n  dim phi(FS)      dim phi(FA)      dim B            dim A            method\n";
    for (const auto& r : rows) {
      char buf[256];
      std::snprintf(buf, sizeof buf, "%3d  %-16s %-16s %-16s %-16s %s%s\n", r.n,
                    (r.im_s_char.get_str() + "|" + la(r.im_s_la)).c_str(),
                    (r.im_a_char.get_str() + "|" + la(r.im_a_la)).c_str(),
                    (r.cent_s_char.get_str() + "|" + la(r.cent_s_la)).c_str(),
                    (r.cent_a_char.get_str() + "|" + la(r.cent_a_la)).c_str(), r.method.c_str(),
                    r.agree ? "" : "  MISMATCH");
      os << buf;
    }
    os << rows.size() << " rows, " << (res.exit_code ? "fail" : "pass") << "\n";
    res.rendered = os.str();
  } else if (cfg.format == Format::Json) {
    json out;
    out["tool"] = "altschur";
    out["version"] = "1.0.0";
    out["config"] = config_json(cfg);
    out["rows"] = json::array();
    for (const auto& r : rows) {
      json e;
      e["n"] = r.n;
      e["char"] = {{"im_s", r.im_s_char.get_str()},
                   {"im_a", r.im_a_char.get_str()},
                   {"cent_s", r.cent_s_char.get_str()},
                   {"cent_a", r.cent_a_char.get_str()}};
      json lin;
      auto put = [&](const char* key, long long v) {
        if (v < 0)
          lin[key] = nullptr;
        else
          lin[key] = v;
      };
      put("im_s", r.im_s_la);
      put("im_a", r.im_a_la);
      put("cent_s", r.cent_s_la);
      put("cent_a", r.cent_a_la);
      e["linalg"] = lin;
      e["method"] = r.method;
      e["agree"] = r.agree;
      out["rows"].push_back(e);
    }
    out["summary"] = {{"rows", rows.size()}, {"exit", res.exit_code}};
    res.rendered = out.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "k,l,n,im_s_char,im_a_char,cent_s_char,cent_a_char,im_s,im_a,cent_s,cent_a,method,"
          "agree\n";
    for (const auto& r : rows)
      os << cfg.k << "," << cfg.l << "," << r.n << "," << r.im_s_char.get_str() << ","
         << r.im_a_char.get_str() << "," << r.cent_s_char.get_str() << ","
         << r.cent_a_char.get_str() << "," << la(r.im_s_la) << "," << la(r.im_a_la) << ","
         << la(r.cent_s_la) << "," << la(r.cent_a_la) << "," << r.method << ","
         << (r.agree ? "true" : "false") << "\n";
    res.rendered = os.str();
  }
  return res;
}

/* ---------------- asymptotics ---------------- */

json rational_json(const mpq_class& v) {
  return {{"num", v.get_num().get_str()}, {"den", v.get_den().get_str()}};
}

RunResult run_asymptotics(const RunConfig& cfg) {
  RunResult res;
  if (cfg.target == "full-sym") {
    if (cfg.fit) throw std::invalid_argument("full-sym has no power law to fit");
    std::vector<FullSymPoint> pts = full_sym_ratio(cfg.n_lo, cfg.n_hi);
    if (cfg.format == Format::Table) {
      std::ostringstream os;
      os << "full-sym (no hook restriction): M2 = sum f^2 over self-conjugate shapes\n";
      os << "   n  M2/M1           M2/n!\n";
      for (const auto& p : pts) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%4d  %-14s  %s\n", p.n,
                      decimal_str(p.m2_over_m1, 8).c_str(),
                      decimal_str(p.m2_over_total, 8).c_str());
        os << buf;
      }
      res.rendered = os.str();
    } else if (cfg.format == Format::Json) {
      json out;
      out["tool"] = "altschur";
      out["version"] = "1.0.0";
      out["config"] = config_json(cfg);
      out["series"] = {{"law", "full-sym"}, {"points", json::array()}};
      for (const auto& p : pts)
        out["series"]["points"].push_back({{"n", p.n},
                                           {"m2_over_m1", rational_json(p.m2_over_m1)},
                                           {"m2_over_total", rational_json(p.m2_over_total)}});
      res.rendered = out.dump(2) + "\n";
    } else {
      /* value columns carry M2/M1; scaled carries M2/n! */
      std::ostringstream os;
      os << "n,num,den,decimal,scaled\n";
      for (const auto& p : pts)
        os << p.n << "," << p.m2_over_m1.get_num().get_str() << ","
           << p.m2_over_m1.get_den().get_str() << "," << decimal_str(p.m2_over_m1) << ","
           << decimal_str(p.m2_over_total) << "\n";
      res.rendered = os.str();
    }
    return res;
  }

  RatioSeries s;
  if (cfg.target == "sc-ratio")
    s = sc_ratio_series(cfg.k, cfg.n_lo, cfg.n_hi);
  else if (cfg.target == "hook-count")
    s = hook_count_law(cfg.k, cfg.n_lo, cfg.n_hi);
  else if (cfg.target == "m-ratio")
    s = m_ratio_series(cfg.k, cfg.n_lo, cfg.n_hi, cfg.variant);
  else
    throw std::invalid_argument("unknown ratio law: " + cfg.target);

  bool fitted = false;
  PowerFit fit;
  int wlo = cfg.window_lo ? cfg.window_lo : cfg.n_lo;
  int whi = cfg.window_hi ? cfg.window_hi : cfg.n_hi;
  if (cfg.fit) {
    /* hook-count tends to a constant; the power laws get parity filtering */
    bool parity = cfg.target != "hook-count";
    fit = fit_power_law(fit_points(s, wlo, whi, parity));
    fitted = true;
  }

  if (cfg.format == Format::Table) {
    std::ostringstream os;
    os << s.law << " k=" << s.k << "\n";
    os << "   n  value             decimal         scaled\n";
    for (const auto& p : s.points) {
      std::string frac = p.value.get_num().get_str() + "/" + p.value.get_den().get_str();
      if (frac.size() > 24) frac = frac.substr(0, 21) + "...";
      char buf[200];
      std::snprintf(buf, sizeof buf, "%4d  %-17s %-15s %s\n", p.n, frac.c_str(),
                    decimal_str(p.value, 8).c_str(), dbl_str(p.scaled).c_str());
      os << buf;
    }
    if (fitted) {
      os << "fit over [" << wlo << ", " << whi << "] on " << fit.points
         << " points: value ~ " << dbl_str(fit.constant) << " * n^" << dbl_str(fit.exponent)
         << "\n";
    }
    res.rendered = os.str();
  } else if (cfg.format == Format::Json) {
    json out;
    out["tool"] = "altschur";
    out["version"] = "1.0.0";
    out["config"] = config_json(cfg);
    json pts = json::array();
    for (const auto& p : s.points) {
      json e;
      e["n"] = p.n;
      e["value"] = rational_json(p.value);
      e["decimal"] = decimal_str(p.value);
      e["scaled"] = p.scaled;
      pts.push_back(e);
    }
    out["series"] = {{"law", s.law}, {"k", s.k}, {"points", pts}};
    if (fitted)
      out["fit"] = {{"window", range_str(wlo, whi)},
                    {"points", fit.points},
                    {"exponent", fit.exponent},
                    {"constant", fit.constant}};
    res.rendered = out.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "n,num,den,decimal,scaled\n";
    for (const auto& p : s.points)
      os << p.n << "," << p.value.get_num().get_str() << "," << p.value.get_den().get_str()
         << "," << decimal_str(p.value) << "," << dbl_str(p.scaled) << "\n";
    res.rendered = os.str();
  }
  return res;
}

}  // namespace

Mode mode_from_string(const std::string& s) {
  if (s == "exact") return Mode::Exact;
  if (s == "modular") return Mode::Modular;
  if (s == "auto") return Mode::Auto;
  throw std::invalid_argument("mode must be exact, modular or auto (got '" + s + "')");
}

Format format_from_string(const std::string& s) {
  if (s == "table") return Format::Table;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw std::invalid_argument("format must be table, json or csv (got '" + s + "')");
}

int verify_exit_code(const std::vector<VerificationReport>& reports) {
  bool any_fail = false, any_na = false;
  for (const auto& r : reports) {
    if (!r.applicable)
      any_na = true;
    else
      for (const auto& c : r.checks) any_fail |= !c.pass;
  }
  return any_fail ? 1 : any_na ? 2 : 0;
}

bool parse_range(const std::string& spec, int& lo, int& hi) {
  size_t dots = spec.find("..");
  try {
    size_t used = 0;
    if (dots == std::string::npos) {
      lo = hi = std::stoi(spec, &used);
      return used == spec.size();
    }
    lo = std::stoi(spec.substr(0, dots), &used);
    if (used != dots) return false;
    std::string rest = spec.substr(dots + 2);
    hi = std::stoi(rest, &used);
    return used == rest.size() && lo <= hi;
  } catch (const std::exception&) {
    return false;
  }
}

RunResult run(const RunConfig& cfg) {
  if (cfg.k < 0 || cfg.l < 0) throw std::invalid_argument("k and l must be nonnegative");
  if (cfg.n_lo > cfg.n_hi || cfg.n_lo < 0) throw std::invalid_argument("bad n range");
  if (cfg.command == "verify") return run_verify(cfg);
  if (cfg.command == "dims") return run_dims(cfg);
  if (cfg.command == "asymptotics") return run_asymptotics(cfg);
  throw std::invalid_argument("unknown command: " + cfg.command);
}

}  // namespace altschur
