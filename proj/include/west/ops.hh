#pragma once

#include "west/regex.hh"

#include <cstddef>
#include <optional>

namespace west {

/* Bit intersection: S is the identity, equal bits are idempotent, and
 * Zero/One have no common value (nullopt). */
std::optional<Bit> and_bitwise(Bit a, Bit b);

/* Pointwise intersection; nullopt on width mismatch or a contradictory bit. */
std::optional<StateRegex> and_state(const StateRegex &a, const StateRegex &b);

/* Intersection of two trace regexes of width n. The shorter one behaves as if
 * padded with all-S states, so the result has the longer length. */
std::optional<TraceRegex> and_trace(const TraceRegex &a, const TraceRegex &b,
                                    std::size_t n);

/* All non-empty pairwise intersections, L1-major. */
WestRegex and_regex(const WestRegex &L1, const WestRegex &L2, std::size_t n);

/* Union: L1 followed by L2. */
WestRegex or_regex(const WestRegex &L1, const WestRegex &L2);

StateRegex arbitrary_state(std::size_t n);

/* t all-S states of width n; matches every trace of length >= t. */
TraceRegex arbitrary_trace(std::size_t n, std::size_t t);

/* Prefixes every alternative with t arbitrary states. */
WestRegex shift(const WestRegex &L, std::size_t n, std::size_t t);

/* A pair of alternatives that west_simp can fuse.
 *
 * i < j index the alternatives. When identical is false they differ at
 * exactly one (timestep, var) coordinate; otherwise they are equal. */
struct MergeCandidate {
  std::size_t i = 0;
  std::size_t j = 0;
  bool identical = false;
  std::size_t timestep = 0;
  std::size_t var = 0;
};

/* If a and b have equal length and differ in at most one coordinate, returns
 * that coordinate (identical = true when they are equal). Indices i/j of the
 * result are left zero. */
std::optional<MergeCandidate> merge_coordinate(const TraceRegex &a,
                                               const TraceRegex &b);

/* Lexicographically first (i, j) mergeable pair, if any. */
std::optional<MergeCandidate> find_merge_candidate(const WestRegex &L);

/* Greedy simplification.
 *
 * Repeatedly takes the lexicographically first mergeable pair (i, j),
 * stores the fused alternative (S at the differing coordinate) at i and
 * erases j, until no pair is left. The match set is unchanged and every
 * merge removes one alternative. */
WestRegex west_simp(const WestRegex &L, std::size_t n);

WestRegex and_simp(const WestRegex &L1, const WestRegex &L2, std::size_t n);
WestRegex or_simp(const WestRegex &L1, const WestRegex &L2, std::size_t n);

} // namespace west
