#pragma once

#include "west/formula.hh"
#include "west/regex.hh"

#include <cstddef>

namespace west {

/* Execution knobs for the transformation. Output never depends on them. */
struct WestOptions {
  /* Worker threads for independent subformulas (1 = sequential). */
  unsigned threads = 1;
};

/* Traces matching L at every offset in [a, b]. */
WestRegex west_global(const WestRegex &L, std::size_t a, std::size_t b,
                      std::size_t n);

/* Traces matching L at some offset in [a, b]. */
WestRegex west_future(const WestRegex &L, std::size_t a, std::size_t b,
                      std::size_t n);

/* Some i in [a, b] matches psi at offset i, and phi matches at every offset
 * in [a, i-1]. */
WestRegex west_until(const WestRegex &phi, const WestRegex &psi,
                     std::size_t a, std::size_t b, std::size_t n);

/* psi at every offset in [a, b], or some j in [a, b-1] matches phi at j with
 * psi holding on all of [a, j]. */
WestRegex west_release(const WestRegex &phi, const WestRegex &psi,
                       std::size_t a, std::size_t b, std::size_t n);

/* Structural recursion over an NNF formula with at most n variables.
 * Throws PreconditionError for non-NNF input, num_vars(f) > n, or an
 * ill-defined interval. */
WestRegex west_reg_aux(const Formula &f, std::size_t n,
                       const WestOptions &opts = {});

/* west_reg_aux(convert_nnf(f), num_vars(f)). Throws IntervalError naming the
 * offending subformula if some interval has a > b. */
WestRegex west_reg(const Formula &f, const WestOptions &opts = {});

/* Same as west_reg but over a width n >= num_vars(f). */
WestRegex west_reg(const Formula &f, std::size_t n,
                   const WestOptions &opts = {});

/* Appends all-S states so every alternative has length exactly m. Throws
 * PreconditionError if some alternative is longer than m. */
WestRegex pad_to(const WestRegex &L, std::size_t m, std::size_t n);

/* west_reg padded to complen(f) and simplified. */
WestRegex simp_pad_west_reg(const Formula &f, const WestOptions &opts = {});

/* Width-n variant padded to length m >= complen(f). */
WestRegex simp_pad_west_reg(const Formula &f, std::size_t n, std::size_t m,
                            const WestOptions &opts = {});

} // namespace west
