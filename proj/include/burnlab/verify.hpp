#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace burnlab {

// One checked fact: a formula or recorded value against an independent
// computation. witness_ok is "yes"/"no" when a witness replay was involved,
// empty otherwise. wall_ms stays empty unless timings were requested, so a
// report is byte-identical across runs and worker counts.
struct ReportRow {
  std::string instance;
  std::string quantity;
  std::string formula;
  std::string solver;
  bool agree = false;
  std::string witness_ok;
  std::string wall_ms;
};

struct VerifyOptions {
  int max_n = 0;  // 0 picks the per-suite default
  int jobs = 1;
  bool timings = false;
  std::uint64_t seed = 20240901;
  int random_count = 200;  // sandwich instances in the percolation suite
};

struct VerifyReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::string limits;
  std::vector<ReportRow> rows;
  int disagreements() const;
};

const std::vector<std::string>& suite_names();

// Runs one of paths|cycles|spiders|wheels|coronas|products|percolation|all.
// Rows come back in a fixed order independent of jobs.
VerifyReport run_suite(const std::string& suite, const VerifyOptions& opt);

std::string to_csv(const VerifyReport& report);
std::string to_json(const VerifyReport& report);

}  // namespace burnlab
