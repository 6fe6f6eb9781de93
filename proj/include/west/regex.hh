#pragma once

#include "west/formula.hh"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace west {

/* One position of a state regex. S stands for "either 0 or 1". */
enum class Bit : std::uint8_t { Zero, One, S };

/* One timestep: bit k constrains proposition p_k. Width n within a context
 * of n propositions (width 0 is legal). */
using StateRegex = std::vector<Bit>;

/* Sequence of state regexes. Matches every trace at least this long whose
 * prefix satisfies each state constraint. */
using TraceRegex = std::vector<StateRegex>;

/* Alternation of trace regexes; the empty list matches nothing. Duplicates
 * are allowed. */
using WestRegex = std::vector<TraceRegex>;

char bit_char(Bit b);

/* Every state regex in r has width n. */
bool trace_regex_of_vars(const TraceRegex &r, std::size_t n);

/* Every alternative of L is well-formed for n. */
bool west_regex_of_vars(const WestRegex &L, std::size_t n);

bool match_timestep(const State &state, const StateRegex &s);
bool match_regex(const Trace &trace, const TraceRegex &r);
bool match(const Trace &trace, const WestRegex &L);

/* Bit string of a trace: bit (t, k) is One iff p_k holds at t. Throws
 * PreconditionError if a proposition >= n occurs in the trace. */
TraceRegex trace_to_bits(const Trace &trace, std::size_t n);

/* Inverse of trace_to_bits; r must be S-free. */
Trace bits_to_trace(const TraceRegex &r);

/* "10,SS" style text for one trace regex. */
std::string trace_regex_to_text(const TraceRegex &r);

/* Alternatives one per line, timesteps separated by commas.
 *
 * The empty regex prints as the empty string. For n = 0 a one-state
 * alternative prints as an empty line, which is indistinguishable from the
 * empty regex or from a zero-length alternative; the text form is only
 * lossless for n >= 1. */
std::string regex_to_text(const WestRegex &L);

/* Parses regex_to_text output. An optional trailing newline is accepted.
 * When width is given every state must have exactly that width. Throws
 * ParseError with a 1-based line/column. */
WestRegex text_to_regex(std::string_view text,
                        std::optional<std::size_t> width = std::nullopt);

/* Parses a single line into a trace regex (commas between timesteps). */
TraceRegex text_to_trace_regex(std::string_view line,
                               std::optional<std::size_t> width = std::nullopt);

} // namespace west
