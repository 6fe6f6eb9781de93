#pragma once

#include "west/formula.hh"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace west {

/* Parses an MLTL formula.
 *
 * Grammar, loosest binding first:
 *
 *   or     := and ('|' and)*                  left-assoc
 *   and    := until ('&' until)*              left-assoc
 *   until  := unary (('U'|'R') ivl until)?    right-assoc
 *   unary  := '!' unary | 'F' ivl unary | 'G' ivl unary | atom
 *   atom   := 'true' | 'false' | 'p' digits | '(' or ')'
 *   ivl    := '[' digits ',' digits ']'
 *
 * Whitespace between tokens is ignored. Throws ParseError (1-based
 * line/column) on malformed input and IntervalError when a > b.
 */
Formula parse_formula(std::string_view text);

/* Renders f with the fewest parentheses the grammar above needs;
 * parse_formula(pretty(f)) == f. */
std::string pretty(const Formula &f);

/* Parses "10,11,00,01": comma-separated groups of exactly n '0'/'1'
 * characters. Empty (or all-whitespace) text is the empty trace. */
Trace parse_trace(std::string_view text, std::size_t n);

/* Inverse of parse_trace for a trace over propositions < n. */
std::string trace_to_text(const Trace &trace, std::size_t n);

/* Knobs of the random formula generator. */
struct FormulaGenParams {
  std::size_t n = 1;     // propositions p0 .. p(n-1); n >= 1
  std::size_t d = 0;     // maximum operator nesting depth
  std::size_t b = 0;     // maximum interval upper bound
  std::uint64_t seed = 0;
  std::size_t count = 1;
  bool nested_until_release = false; // inner nodes are only U and R
};

/* Formula number `index` of the stream for `params`. Depends only on
 * (params, index), so batches can be generated in any order. */
Formula random_formula(const FormulaGenParams &params, std::size_t index);

/* The first params.count formulas of the stream, optionally generated on
 * several threads; the result is identical either way. */
std::vector<Formula> random_formulas(const FormulaGenParams &params,
                                     unsigned threads = 1);

} // namespace west
