#include "support.hh"

#include <stdexcept>

namespace west::test {

Trace trace_from_mask(std::uint64_t mask, std::size_t n, std::size_t m) {
  Trace out(m);
  for (std::size_t t = 0; t < m; ++t) {
    for (std::size_t k = 0; k < n; ++k) {
      if ((mask >> (t * n + k)) & 1) {
        out[t].insert(k);
      }
    }
  }
  return out;
}

std::vector<Trace> traces_of_length(std::size_t n, std::size_t m) {
  if (n * m > 24) {
    throw std::invalid_argument("traces_of_length: too many traces");
  }
  std::vector<Trace> out;
  const std::uint64_t total = std::uint64_t{1} << (n * m);
  out.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    out.push_back(trace_from_mask(mask, n, m));
  }
  return out;
}

std::vector<Trace> traces_up_to(std::size_t n, std::size_t max_len) {
  std::vector<Trace> out;
  for (std::size_t m = 0; m <= max_len; ++m) {
    auto batch = traces_of_length(n, m);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

bool ref_match_regex(const Trace &trace, const TraceRegex &r) {
  if (trace.size() < r.size()) {
    return false;
  }
  for (std::size_t t = 0; t < r.size(); ++t) {
    for (std::size_t k = 0; k < r[t].size(); ++k) {
      const bool present = trace[t].count(k) > 0;
      if ((r[t][k] == Bit::One && !present) ||
          (r[t][k] == Bit::Zero && present)) {
        return false;
      }
    }
  }
  return true;
}

bool ref_match(const Trace &trace, const WestRegex &L) {
  for (const TraceRegex &r : L) {
    if (ref_match_regex(trace, r)) {
      return true;
    }
  }
  return false;
}

std::size_t max_length(const WestRegex &L) {
  std::size_t m = 0;
  for (const TraceRegex &r : L) {
    m = std::max(m, r.size());
  }
  return m;
}

TraceRegex random_trace_regex(Rng &rng, std::size_t n, std::size_t len) {
  std::uniform_int_distribution<int> pick(0, 3);
  TraceRegex r(len, StateRegex(n));
  for (StateRegex &s : r) {
    for (Bit &bit : s) {
      const int v = pick(rng);
      bit = v == 0 ? Bit::Zero : v == 1 ? Bit::One : Bit::S;
    }
  }
  return r;
}

WestRegex random_regex(Rng &rng, std::size_t n, std::size_t max_alts,
                       std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> alts(0, max_alts);
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  WestRegex L(alts(rng));
  for (TraceRegex &r : L) {
    r = random_trace_regex(rng, n, len(rng));
  }
  return L;
}

WestRegex ref_simp(WestRegex L) {
  while (true) {
    bool merged = false;
    for (std::size_t i = 0; i < L.size() && !merged; ++i) {
      for (std::size_t j = i + 1; j < L.size() && !merged; ++j) {
        if (L[i].size() != L[j].size()) {
          continue;
        }
        std::size_t diffs = 0;
        std::size_t dt = 0;
        std::size_t dk = 0;
        for (std::size_t t = 0; t < L[i].size(); ++t) {
          for (std::size_t k = 0; k < L[i][t].size(); ++k) {
            if (L[i][t][k] != L[j][t][k]) {
              ++diffs;
              dt = t;
              dk = k;
            }
          }
        }
        if (diffs <= 1) {
          if (diffs == 1) {
            L[i][dt][dk] = Bit::S;
          }
          L.erase(L.begin() + static_cast<std::ptrdiff_t>(j));
          merged = true;
        }
      }
    }
    if (!merged) {
      return L;
    }
  }
}

Formula random_test_formula(Rng &rng, std::size_t n, std::size_t d,
                            std::size_t b) {
  auto uniform = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  auto atom = [&]() -> Formula {
    const std::size_t k = uniform(0, n + 3);
    if (k == n) {
      return mk_true();
    }
    if (k == n + 1) {
      return mk_false();
    }
    const Prop p = k % n;
    return k > n + 1 ? mk_not(mk_prop(p)) : mk_prop(p);
  };
  if (d == 0 || uniform(0, 4) == 0) {
    return atom();
  }
  const std::size_t lo = uniform(0, b);
  const std::size_t hi = uniform(lo, b);
  auto sub = [&] { return random_test_formula(rng, n, d - 1, b); };
  switch (uniform(0, 6)) {
  case 0:
    return mk_not(sub());
  case 1:
    return mk_and(sub(), sub());
  case 2:
    return mk_or(sub(), sub());
  case 3:
    return mk_future(sub(), lo, hi);
  case 4:
    return mk_global(sub(), lo, hi);
  case 5:
    return mk_until(sub(), sub(), lo, hi);
  default:
    return mk_release(sub(), sub(), lo, hi);
  }
}

WestRegex rx(const std::string &text) { return text_to_regex(text); }

TraceRegex tr(const std::string &text) {
  const WestRegex L = text_to_regex(text);
  if (L.size() != 1) {
    throw std::invalid_argument("tr: expected one line");
  }
  return L.front();
}

Trace trace(std::initializer_list<std::initializer_list<Prop>> states) {
  Trace out;
  for (const auto &s : states) {
    out.emplace_back(s);
  }
  return out;
}

} // namespace west::test
