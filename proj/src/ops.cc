#include "west/ops.hh"

#include "west/limits.hh"

#include <algorithm>
#include <stdexcept>

namespace west {

std::optional<Bit> and_bitwise(Bit a, Bit b) {
  if (a == Bit::S) {
    return b;
  }
  if (b == Bit::S || a == b) {
    return a;
  }
  return std::nullopt;
}

std::optional<StateRegex> and_state(const StateRegex &a, const StateRegex &b) {
  if (a.size() != b.size()) {
    return std::nullopt;
  }
  StateRegex out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    auto bit = and_bitwise(a[k], b[k]);
    if (!bit) {
      return std::nullopt;
    }
    out[k] = *bit;
  }
  return out;
}

std::optional<TraceRegex> and_trace(const TraceRegex &a, const TraceRegex &b,
                                    std::size_t n) {
  const TraceRegex &longer = a.size() >= b.size() ? a : b;
  const TraceRegex &shorter = a.size() >= b.size() ? b : a;
  TraceRegex out;
  out.reserve(longer.size());
  for (std::size_t t = 0; t < shorter.size(); ++t) {
    auto s = and_state(a[t], b[t]);
    if (!s) {
      return std::nullopt;
    }
    out.push_back(std::move(*s));
  }
  // missing states of the shorter side are arbitrary; S is the identity
  for (std::size_t t = shorter.size(); t < longer.size(); ++t) {
    if (longer[t].size() != n) {
      return std::nullopt;
    }
    out.push_back(longer[t]);
  }
  return out;
}

WestRegex and_regex(const WestRegex &L1, const WestRegex &L2, std::size_t n) {
  WestRegex out;
  for (const TraceRegex &r1 : L1) {
    poll_deadline();
    for (const TraceRegex &r2 : L2) {
      if (auto r = and_trace(r1, r2, n)) {
        out.push_back(std::move(*r));
      }
    }
    check_alternatives(out.size());
  }
  return out;
}

WestRegex or_regex(const WestRegex &L1, const WestRegex &L2) {
  WestRegex out;
  out.reserve(L1.size() + L2.size());
  out.insert(out.end(), L1.begin(), L1.end());
  out.insert(out.end(), L2.begin(), L2.end());
  check_alternatives(out.size());
  return out;
}

StateRegex arbitrary_state(std::size_t n) { return StateRegex(n, Bit::S); }

TraceRegex arbitrary_trace(std::size_t n, std::size_t t) {
  return TraceRegex(t, arbitrary_state(n));
}

WestRegex shift(const WestRegex &L, std::size_t n, std::size_t t) {
  WestRegex out;
  out.reserve(L.size());
  for (const TraceRegex &r : L) {
    TraceRegex shifted = arbitrary_trace(n, t);
    shifted.insert(shifted.end(), r.begin(), r.end());
    out.push_back(std::move(shifted));
  }
  return out;
}

std::optional<MergeCandidate> merge_coordinate(const TraceRegex &a,
                                               const TraceRegex &b) {
  if (a.size() != b.size()) {
    return std::nullopt;
  }
  MergeCandidate c;
  c.identical = true;
  for (std::size_t t = 0; t < a.size(); ++t) {
    if (a[t].size() != b[t].size()) {
      return std::nullopt;
    }
    for (std::size_t k = 0; k < a[t].size(); ++k) {
      if (a[t][k] != b[t][k]) {
        if (!c.identical) {
          return std::nullopt;
        }
        c.identical = false;
        c.timestep = t;
        c.var = k;
      }
    }
  }
  return c;
}

std::optional<MergeCandidate> find_merge_candidate(const WestRegex &L) {
  for (std::size_t i = 0; i < L.size(); ++i) {
    for (std::size_t j = i + 1; j < L.size(); ++j) {
      if (auto c = merge_coordinate(L[i], L[j])) {
        c->i = i;
        c->j = j;
        return c;
      }
    }
  }
  return std::nullopt;
}

namespace {

// Fuses L[j] into L[i] and erases L[j].
void apply_merge(WestRegex &L, std::size_t i, std::size_t j,
                 const MergeCandidate &c) {
  const std::size_t before = L.size();
  if (!c.identical) {
    L[i][c.timestep][c.var] = Bit::S;
  }
  L.erase(L.begin() + static_cast<std::ptrdiff_t>(j));
  if (L.size() + 1 != before) {
    throw std::logic_error("west_simp: merge did not shrink the regex");
  }
}

} // namespace

WestRegex west_simp(const WestRegex &input, std::size_t /*n*/) {
  WestRegex L = input;
  // Invariant: no pair (x, y) with x < i is mergeable. This yields the same
  // sequence of merges as rescanning from (0, 1) after every merge: a merge
  // at (i, j) only changes L[i], so the next first pair is either (x, i)
  // for the smallest such x, or lies at or after (i, i + 1).
  std::size_t i = 0;
  while (i < L.size()) {
    poll_deadline();
    bool merged = false;
    for (std::size_t j = i + 1; j < L.size(); ++j) {
      if (auto c = merge_coordinate(L[i], L[j])) {
        apply_merge(L, i, j, *c);
        merged = true;
        break;
      }
    }
    if (!merged) {
      ++i;
      continue;
    }
    bool moved = true;
    while (moved) {
      moved = false;
      for (std::size_t x = 0; x < i; ++x) {
        if (auto c = merge_coordinate(L[x], L[i])) {
          apply_merge(L, x, i, *c);
          i = x;
          moved = true;
          break;
        }
      }
    }
  }
  return L;
}

WestRegex and_simp(const WestRegex &L1, const WestRegex &L2, std::size_t n) {
  return west_simp(and_regex(L1, L2, n), n);
}

WestRegex or_simp(const WestRegex &L1, const WestRegex &L2, std::size_t n) {
  return west_simp(or_regex(L1, L2), n);
}

} // namespace west
