#pragma once

#include "west/formula.hh"

#include <chrono>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace west {

enum class BenchOutcome { Ok, Timeout, Limit };

const char *outcome_name(BenchOutcome outcome);

/* One timed run of simp_pad_west_reg. */
struct BenchRecord {
  std::string formula;
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t b = 0;
  double ms = 0.0;
  BenchOutcome outcome = BenchOutcome::Ok;
  std::optional<std::size_t> alternatives; // present iff outcome is Ok
  std::optional<std::size_t> length;       // present iff outcome is Ok
};

/* Where a benchmark formula came from: generator parameters, or (for suite
 * files) values measured on the formula itself. */
struct BenchItem {
  Formula formula;
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t b = 0;
};

BenchItem measured_item(const Formula &f);

struct BenchConfig {
  std::chrono::duration<double> timeout{60.0};
  std::size_t max_alternatives = std::size_t{1} << 22;
  unsigned threads = 1;
};

/* Times simp_pad_west_reg on every item. Records come back in input order;
 * timeouts and blown alternative caps are data, not errors. */
std::vector<BenchRecord> run_bench(const std::vector<BenchItem> &items,
                                   const BenchConfig &config);

struct BenchSummary {
  std::size_t ok = 0;
  std::size_t timeouts = 0;
  std::size_t limits = 0;
  double mean_ok_ms = 0.0; // over Ok records only
};

BenchSummary summarize(const std::vector<BenchRecord> &records);

/* CSV with header formula,n,d,b,ms,outcome,alts,len; fields are quoted per
 * RFC 4180 when needed. */
void write_bench_csv(std::ostream &out,
                     const std::vector<BenchRecord> &records);

} // namespace west
