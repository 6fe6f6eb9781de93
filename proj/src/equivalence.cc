#include "west/equivalence.hh"

#include "west/algorithm.hh"
#include "west/error.hh"
#include "west/limits.hh"
#include "west/parallel.hh"

#include <algorithm>
#include <iterator>

namespace west {

namespace {

std::size_t count_free(const TraceRegex &r) {
  std::size_t free = 0;
  for (const StateRegex &s : r) {
    free += static_cast<std::size_t>(std::count(s.begin(), s.end(), Bit::S));
  }
  return free;
}

/* Concrete bit strings of a fixed length L, bit 0 first. Strings up to 64
 * bits are packed MSB-first into a word so integer order is lexicographic
 * order; longer strings fall back to '0'/'1' text. */
struct PackedKey {
  using Key = std::uint64_t;

  std::size_t length;

  // Calls emit(key) for every expansion of the flattened regex bits.
  template <class Emit>
  void expand(const std::vector<Bit> &bits, Emit &&emit) const {
    Key base = 0;
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] == Bit::One) {
        base |= Key{1} << (length - 1 - i);
      } else if (bits[i] == Bit::S) {
        free.push_back(length - 1 - i);
      }
    }
    const std::uint64_t total = std::uint64_t{1} << free.size();
    for (std::uint64_t m = 0; m < total; ++m) {
      Key key = base;
      // free[0] is the most significant position; it takes the top bit of m
      for (std::size_t f = 0; f < free.size(); ++f) {
        if ((m >> (free.size() - 1 - f)) & 1) {
          key |= Key{1} << free[f];
        }
      }
      emit(key);
    }
  }

  std::vector<Bit> bits(Key key) const {
    std::vector<Bit> out(length);
    for (std::size_t i = 0; i < length; ++i) {
      out[i] = ((key >> (length - 1 - i)) & 1) ? Bit::One : Bit::Zero;
    }
    return out;
  }
};

struct TextKey {
  using Key = std::string;

  std::size_t length;

  template <class Emit>
  void expand(const std::vector<Bit> &bits, Emit &&emit) const {
    Key base(length, '0');
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] == Bit::One) {
        base[i] = '1';
      } else if (bits[i] == Bit::S) {
        free.push_back(i);
      }
    }
    const std::uint64_t total = std::uint64_t{1} << free.size();
    for (std::uint64_t m = 0; m < total; ++m) {
      Key key = base;
      for (std::size_t f = 0; f < free.size(); ++f) {
        if ((m >> (free.size() - 1 - f)) & 1) {
          key[free[f]] = '1';
        }
      }
      emit(key);
    }
  }

  std::vector<Bit> bits(const Key &key) const {
    std::vector<Bit> out(length);
    for (std::size_t i = 0; i < length; ++i) {
      out[i] = key[i] == '1' ? Bit::One : Bit::Zero;
    }
    return out;
  }
};

std::vector<Bit> flatten(const TraceRegex &r) {
  std::vector<Bit> flat;
  for (const StateRegex &s : r) {
    flat.insert(flat.end(), s.begin(), s.end());
  }
  return flat;
}

TraceRegex unflatten(const std::vector<Bit> &flat, std::size_t n,
                     std::size_t m) {
  TraceRegex r(m);
  for (std::size_t t = 0; t < m; ++t) {
    r[t].assign(flat.begin() + static_cast<std::ptrdiff_t>(t * n),
                flat.begin() + static_cast<std::ptrdiff_t>((t + 1) * n));
  }
  return r;
}

template <class Codec>
std::vector<typename Codec::Key> expand_all(const Codec &codec,
                                            const WestRegex &L,
                                            unsigned threads) {
  using Key = typename Codec::Key;
  auto parts = parallel_map(L.size(), threads, [&](std::size_t i) {
    std::vector<Key> keys;
    codec.expand(flatten(L[i]), [&](const Key &k) { keys.push_back(k); });
    return keys;
  });
  std::vector<Key> all;
  for (auto &part : parts) {
    all.insert(all.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

template <class Codec>
EquivVerdict compare(const Codec &codec, const WestRegex &L1,
                     const WestRegex &L2, std::size_t n, std::size_t m,
                     unsigned threads) {
  using Key = typename Codec::Key;
  const auto lhs = expand_all(codec, L1, threads);
  const auto rhs = expand_all(codec, L2, threads);
  EquivVerdict verdict;
  if (lhs == rhs) {
    verdict.outcome = EquivVerdict::Outcome::Equivalent;
    return verdict;
  }
  std::vector<Key> diff;
  std::set_symmetric_difference(lhs.begin(), lhs.end(), rhs.begin(),
                                rhs.end(), std::back_inserter(diff));
  verdict.outcome = EquivVerdict::Outcome::Inequivalent;
  verdict.witness = unflatten(codec.bits(diff.front()), n, m);
  verdict.witness_in_first =
      std::binary_search(lhs.begin(), lhs.end(), diff.front());
  return verdict;
}

} // namespace

std::vector<TraceRegex> expand_trace_regex(const TraceRegex &r,
                                           std::size_t max_free_bits) {
  const std::size_t free = count_free(r);
  if (free > max_free_bits || free >= 64) {
    throw BudgetExceeded("trace regex has " + std::to_string(free) +
                         " S positions, budget is " +
                         std::to_string(max_free_bits));
  }
  std::vector<Bit> flat = flatten(r);
  TextKey codec{flat.size()};
  std::vector<TraceRegex> out;
  out.reserve(std::size_t{1} << free);
  // widths may be ragged here, so rebuild per original state sizes
  codec.expand(flat, [&](const std::string &key) {
    TraceRegex concrete;
    concrete.reserve(r.size());
    std::size_t pos = 0;
    for (const StateRegex &s : r) {
      StateRegex state(s.size());
      for (std::size_t k = 0; k < s.size(); ++k, ++pos) {
        state[k] = key[pos] == '1' ? Bit::One : Bit::Zero;
      }
      concrete.push_back(std::move(state));
    }
    out.push_back(std::move(concrete));
  });
  return out;
}

EquivVerdict naive_equivalence(const WestRegex &L1, const WestRegex &L2,
                               std::size_t n, std::uint64_t max_expansions,
                               unsigned threads) {
  if (!west_regex_of_vars(L1, n) || !west_regex_of_vars(L2, n)) {
    throw PreconditionError("naive_equivalence: regex is not of width " +
                            std::to_string(n));
  }
  std::size_t m = 0;
  for (const WestRegex *side : {&L1, &L2}) {
    for (const TraceRegex &r : *side) {
      m = std::max(m, r.size());
    }
  }
  const WestRegex P1 = pad_to(L1, m, n);
  const WestRegex P2 = pad_to(L2, m, n);

  std::uint64_t expansions = 0;
  for (const WestRegex *side : {&P1, &P2}) {
    for (const TraceRegex &r : *side) {
      const std::size_t free = count_free(r);
      const std::uint64_t remaining = max_expansions - expansions;
      if (free >= 64 || (std::uint64_t{1} << free) > remaining) {
        EquivVerdict verdict;
        verdict.outcome = EquivVerdict::Outcome::LimitExceeded;
        verdict.limit = "expansion budget of " +
                        std::to_string(max_expansions) +
                        " concrete traces exceeded (an alternative has " +
                        std::to_string(free) + " free bits)";
        return verdict;
      }
      expansions += std::uint64_t{1} << free;
    }
  }
  poll_deadline();

  const std::size_t length = m * n;
  if (length <= 64) {
    return compare(PackedKey{length}, P1, P2, n, m, threads);
  }
  return compare(TextKey{length}, P1, P2, n, m, threads);
}

EquivVerdict formula_equivalence(const Formula &f1, const Formula &f2,
                                 std::uint64_t max_expansions,
                                 unsigned threads) {
  const std::size_t n = std::max(num_vars(f1), num_vars(f2));
  const std::size_t m = std::max(complen(f1), complen(f2));
  const WestOptions opts{threads};
  return naive_equivalence(simp_pad_west_reg(f1, n, m, opts),
                           simp_pad_west_reg(f2, n, m, opts), n,
                           max_expansions, threads);
}

void for_each_trace(std::size_t n, std::size_t m,
                    const std::function<void(const Trace &)> &fn) {
  Trace trace(m);
  const std::size_t bits = n * m;
  while (true) {
    fn(trace);
    // odometer over bit strings; the last position is least significant
    std::size_t pos = bits;
    while (pos > 0) {
      --pos;
      State &state = trace[pos / n];
      const Prop p = pos % n;
      if (state.erase(p) == 0) {
        state.insert(p);
        break;
      }
      if (pos == 0) {
        return;
      }
    }
    if (bits == 0) {
      return;
    }
  }
}

std::vector<Trace> brute_force_sat_traces(const Formula &f, std::size_t m,
                                          std::size_t max_bits) {
  const std::size_t n = num_vars(f);
  if (n * m > max_bits) {
    throw BudgetExceeded("enumerating " + std::to_string(n) + " x " +
                         std::to_string(m) + " bits exceeds budget of " +
                         std::to_string(max_bits));
  }
  std::vector<Trace> sat;
  for_each_trace(n, m, [&](const Trace &trace) {
    if (semantics(trace, f)) {
      sat.push_back(trace);
    }
  });
  return sat;
}

std::optional<OracleCounterexample>
find_oracle_counterexample(const Formula &f,
                           const std::vector<RegexBuilder> &builders,
                           std::size_t max_bits) {
  const std::size_t n = num_vars(f);
  const std::size_t len = complen(f);
  if (n * (len + 1) > max_bits) {
    throw BudgetExceeded("oracle needs " + std::to_string(n) + " x " +
                         std::to_string(len + 1) + " bits, budget is " +
                         std::to_string(max_bits));
  }
  std::vector<WestRegex> regexes;
  regexes.reserve(builders.size());
  for (const RegexBuilder &build : builders) {
    regexes.push_back(build(f));
  }
  std::optional<OracleCounterexample> found;
  for (std::size_t m : {len, len + 1}) {
    for_each_trace(n, m, [&](const Trace &trace) {
      if (found) {
        return;
      }
      const bool sat = semantics(trace, f);
      for (std::size_t i = 0; i < regexes.size(); ++i) {
        if (match(trace, regexes[i]) != sat) {
          found = OracleCounterexample{trace, sat, i};
          return;
        }
      }
    });
    if (found) {
      break;
    }
  }
  return found;
}

bool oracle_check(const Formula &f, std::size_t max_bits) {
  const std::vector<RegexBuilder> builders{
      [](const Formula &g) { return west_reg(g); },
      [](const Formula &g) { return simp_pad_west_reg(g); },
  };
  return !find_oracle_counterexample(f, builders, max_bits).has_value();
}

} // namespace west
