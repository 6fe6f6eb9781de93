#pragma once

#include "west/formula.hh"
#include "west/regex.hh"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace west {

struct EquivVerdict {
  enum class Outcome { Equivalent, Inequivalent, LimitExceeded };

  Outcome outcome = Outcome::Equivalent;
  /* Inequivalent only: an S-free trace regex of the common padded length,
   * matched by exactly one side. */
  TraceRegex witness;
  /* Inequivalent only: true if the first regex matches the witness. */
  bool witness_in_first = false;
  /* LimitExceeded only. */
  std::string limit;

  bool equivalent() const { return outcome == Outcome::Equivalent; }
};

constexpr std::size_t kDefaultFreeBitBudget = 24;
constexpr std::uint64_t kDefaultExpansionBudget = std::uint64_t{1} << 24;
constexpr std::size_t kDefaultOracleBudget = 20;

/* All S-free trace regexes obtained by replacing each S with Zero or One,
 * in lexicographic order (Zero < One, earlier positions first). Throws
 * BudgetExceeded if r has more than max_free_bits S positions. */
std::vector<TraceRegex>
expand_trace_regex(const TraceRegex &r,
                   std::size_t max_free_bits = kDefaultFreeBitBudget);

/* Expansion-based equivalence.
 *
 * Both sides are padded with all-S states to the longest alternative
 * present, expanded to concrete bit strings and compared as sets. The
 * witness of an inequivalence is the lexicographically least string in the
 * symmetric difference. The total number of expanded strings is capped by
 * max_expansions; going over yields LimitExceeded instead of an answer. */
EquivVerdict
naive_equivalence(const WestRegex &L1, const WestRegex &L2, std::size_t n,
                  std::uint64_t max_expansions = kDefaultExpansionBudget,
                  unsigned threads = 1);

/* Equivalence of two formulas: both are transformed over the common width
 * max(num_vars) and padded to max(complen) before naive_equivalence. */
EquivVerdict
formula_equivalence(const Formula &f1, const Formula &f2,
                    std::uint64_t max_expansions = kDefaultExpansionBudget,
                    unsigned threads = 1);

/* Calls fn on every trace of length m over propositions < n, in
 * lexicographic bit-string order. The trace object is reused between calls. */
void for_each_trace(std::size_t n, std::size_t m,
                    const std::function<void(const Trace &)> &fn);

/* All traces of length m over num_vars(f) propositions that satisfy f, in
 * lexicographic bit-string order. Throws BudgetExceeded when
 * num_vars(f) * m > max_bits. */
std::vector<Trace>
brute_force_sat_traces(const Formula &f, std::size_t m,
                       std::size_t max_bits = kDefaultOracleBudget);

/* A formula-to-regex pipeline checked by the oracle. */
using RegexBuilder = std::function<WestRegex(const Formula &)>;

struct OracleCounterexample {
  Trace trace;
  bool satisfies = false;       // semantics verdict
  std::size_t builder = 0;      // index of the disagreeing builder
};

/* Compares semantics(trace, f) with match(trace, builder(f)) for every
 * builder and every trace of length complen(f) and complen(f) + 1 over
 * num_vars(f) propositions. Returns the first disagreement. Throws
 * BudgetExceeded when num_vars(f) * (complen(f) + 1) > max_bits. */
std::optional<OracleCounterexample>
find_oracle_counterexample(const Formula &f,
                           const std::vector<RegexBuilder> &builders,
                           std::size_t max_bits = kDefaultOracleBudget);

/* Oracle check of west_reg and simp_pad_west_reg. */
bool oracle_check(const Formula &f,
                  std::size_t max_bits = kDefaultOracleBudget);

} // namespace west
