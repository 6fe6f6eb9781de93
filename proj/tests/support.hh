#pragma once

// Test-only helpers. Nothing here calls the code under test except where a
// helper is explicitly a thin convenience (text parsing of regexes).

#include "west/formula.hh"
#include "west/regex.hh"

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace west::test {

using Rng = std::mt19937_64;

/* The trace of length m over n propositions whose bit (t, k) is bit
 * t * n + k of mask (least significant first). */
Trace trace_from_mask(std::uint64_t mask, std::size_t n, std::size_t m);

/* Every trace of length exactly m over n propositions. */
std::vector<Trace> traces_of_length(std::size_t n, std::size_t m);

/* Every trace of length 0..max_len over n propositions. */
std::vector<Trace> traces_up_to(std::size_t n, std::size_t max_len);

/* Matching written from the definitions, independent of the library. */
bool ref_match_regex(const Trace &trace, const TraceRegex &r);
bool ref_match(const Trace &trace, const WestRegex &L);

/* Longest alternative. */
std::size_t max_length(const WestRegex &L);

/* Random well-formed regex of width n: up to max_alts alternatives of
 * length 0..max_len. Bits are Zero/One/S with weights 1:1:2. */
WestRegex random_regex(Rng &rng, std::size_t n, std::size_t max_alts,
                       std::size_t max_len);
TraceRegex random_trace_regex(Rng &rng, std::size_t n, std::size_t len);

/* Textbook greedy simplifier: rescan from the first pair after every merge. */
WestRegex ref_simp(WestRegex L);

/* Random formula over propositions < n with operator depth <= d and interval
 * bounds <= b, built without the library's generator. */
Formula random_test_formula(Rng &rng, std::size_t n, std::size_t d,
                            std::size_t b);

/* Shorthand: "10,SS\n0S" style text. */
WestRegex rx(const std::string &text);
TraceRegex tr(const std::string &text);

/* Shorthand for traces: {{0}, {0, 1}, {}}. */
Trace trace(std::initializer_list<std::initializer_list<Prop>> states);

} // namespace west::test
