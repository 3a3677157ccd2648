#pragma once

#include <cstdint>
#include <string>

#include "altschur/asymptotics.hpp"
#include "altschur/verify.hpp"

namespace altschur {

enum class Mode { Exact, Modular, Auto };
enum class Format { Table, Json, Csv };

/* One resolved invocation of the tool; the CLI layer only fills this in. */
struct RunConfig {
  std::string command;  // verify | dims | asymptotics
  std::string target;   // checker name / ratio law; "all" fans out
  int k = 1;
  int l = 0;
  bool l_set = false;  // crossed-product infers l = k unless given
  int n_lo = 1, n_hi = 1;
  Mode mode = Mode::Auto;
  int jobs = 1;
  uint64_t seed = 0;
  Format format = Format::Table;
  bool fit = false;
  int window_lo = 0, window_hi = 0;  // 0,0 = the whole n range
  MRatioVariant variant = MRatioVariant::Total;
  bool timings = false;  // off: elapsed_ms forced to 0 so reruns are byte-identical
};

struct RunResult {
  int exit_code = 0;  // 0 = pass, 1 = check failure, 2 = not applicable / usage
  std::string rendered;
};

/* Executes the configured command; throws std::invalid_argument on bad usage. */
RunResult run(const RunConfig& cfg);

Mode mode_from_string(const std::string& s);
Format format_from_string(const std::string& s);
/* "A" or "A..B"; false on malformed input. */
bool parse_range(const std::string& spec, int& lo, int& hi);
/* 1 if any applicable check failed, else 2 if anything was refused, else 0. */
int verify_exit_code(const std::vector<VerificationReport>& reports);

}  // namespace altschur
