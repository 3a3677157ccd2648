#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "altschur/runner.hpp"

using altschur::RunConfig;

namespace {

void add_common(CLI::App* cmd, RunConfig& cfg, std::string& mode, std::string& format,
                std::string& out_path) {
  cmd->add_option("--mode", mode, "exact, modular or auto (env ALTSCHUR_MODE overrides default)")
      ->check(CLI::IsMember({"exact", "modular", "auto"}));
  cmd->add_option("--seed", cfg.seed, "seed for the modular-prime draw");
  cmd->add_option("--jobs", cfg.jobs, "worker threads for independent reports")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format", format, "table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  cmd->add_option("--out", out_path, "write the report here instead of stdout");
  cmd->add_flag("--timings", cfg.timings, "include wall-clock times (breaks byte-identical reruns)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sign-permutation actions of S_n on graded tensor powers: "
               "machine verification and ratio laws"};
  app.require_subcommand(1);

  RunConfig cfg;
  const char* env_mode = std::getenv("ALTSCHUR_MODE");
  std::string mode = env_mode ? env_mode : "auto";
  std::string format = "table";
  std::string out_path;
  std::string n_spec, window_spec, variant = "total";

  CLI::App* verify = app.add_subcommand("verify", "run a theorem checker");
  verify->add_option("target", cfg.target, "crossed-product, hook, classical, pq, lemma14, all")
      ->required()
      ->check(CLI::IsMember({"crossed-product", "hook", "classical", "pq", "lemma14", "all"}));
  verify->add_option("--k", cfg.k, "rows of the hook / even degrees")->required();
  verify->add_option("--l", cfg.l, "columns of the hook / odd degrees")
      ->each([&](const std::string&) { cfg.l_set = true; });
  verify->add_option("--n", n_spec, "tensor power, a value or range A..B")->required();
  add_common(verify, cfg, mode, format, out_path);

  CLI::App* dims = app.add_subcommand("dims", "image and centralizer dimensions, both oracles");
  dims->add_option("--k", cfg.k)->required();
  dims->add_option("--l", cfg.l)->required();
  dims->add_option("--n", n_spec, "a value or range A..B")->required();
  add_common(dims, cfg, mode, format, out_path);

  CLI::App* asym = app.add_subcommand("asymptotics", "ratio laws over growing n");
  asym->add_option("law", cfg.target, "sc-ratio, hook-count, m-ratio, full-sym")
      ->required()
      ->check(CLI::IsMember({"sc-ratio", "hook-count", "m-ratio", "full-sym"}));
  asym->add_option("--k", cfg.k, "hook parameter (H(k,k;n))");
  int nmax = 0;
  asym->add_option("--n", n_spec, "range A..B");
  asym->add_option("--nmax", nmax, "shorthand for --n 1..N")->check(CLI::PositiveNumber);
  asym->add_option("--variant", variant, "m-ratio denominator: rest (M1) or total (M1+M2)")
      ->check(CLI::IsMember({"rest", "total"}));
  asym->add_flag("--fit", cfg.fit, "least-squares power-law fit over the window");
  asym->add_option("--window", window_spec, "fit window A..B (default: the whole range)");
  add_common(asym, cfg, mode, format, out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    cfg.command = verify->parsed() ? "verify" : dims->parsed() ? "dims" : "asymptotics";
    cfg.mode = altschur::mode_from_string(mode);
    cfg.format = altschur::format_from_string(format);
    cfg.variant =
        variant == "rest" ? altschur::MRatioVariant::Rest : altschur::MRatioVariant::Total;
    if (asym->parsed() && n_spec.empty()) {
      if (nmax == 0) throw std::invalid_argument("asymptotics needs --n A..B or --nmax N");
      cfg.n_lo = 1;
      cfg.n_hi = nmax;
    } else if (!altschur::parse_range(n_spec, cfg.n_lo, cfg.n_hi)) {
      throw std::invalid_argument("bad --n range: " + n_spec);
    }
    if (!window_spec.empty() &&
        !altschur::parse_range(window_spec, cfg.window_lo, cfg.window_hi))
      throw std::invalid_argument("bad --window range: " + window_spec);

    altschur::RunResult res = altschur::run(cfg);
    if (out_path.empty()) {
      std::fputs(res.rendered.c_str(), stdout);
    } else {
      std::ofstream os(out_path, std::ios::binary);
      if (!os) throw std::runtime_error("cannot open " + out_path);
      os << res.rendered;
    }
    return res.exit_code;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
