#include "west/regex.hh"

#include "west/error.hh"

#include <algorithm>

namespace west {

char bit_char(Bit b) {
  switch (b) {
  case Bit::Zero:
    return '0';
  case Bit::One:
    return '1';
  case Bit::S:
    return 'S';
  }
  return '?';
}

bool trace_regex_of_vars(const TraceRegex &r, std::size_t n) {
  return std::all_of(r.begin(), r.end(),
                     [n](const StateRegex &s) { return s.size() == n; });
}

bool west_regex_of_vars(const WestRegex &L, std::size_t n) {
  return std::all_of(L.begin(), L.end(), [n](const TraceRegex &r) {
    return trace_regex_of_vars(r, n);
  });
}

bool match_timestep(const State &state, const StateRegex &s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == Bit::One && !state.contains(i)) {
      return false;
    }
    if (s[i] == Bit::Zero && state.contains(i)) {
      return false;
    }
  }
  return true;
}

bool match_regex(const Trace &trace, const TraceRegex &r) {
  if (trace.size() < r.size()) {
    return false;
  }
  for (std::size_t t = 0; t < r.size(); ++t) {
    if (!match_timestep(trace[t], r[t])) {
      return false;
    }
  }
  return true;
}

bool match(const Trace &trace, const WestRegex &L) {
  return std::any_of(L.begin(), L.end(), [&](const TraceRegex &r) {
    return match_regex(trace, r);
  });
}

TraceRegex trace_to_bits(const Trace &trace, std::size_t n) {
  TraceRegex bits;
  bits.reserve(trace.size());
  for (std::size_t t = 0; t < trace.size(); ++t) {
    const State &state = trace[t];
    if (!state.empty() && *state.rbegin() >= n) {
      throw PreconditionError("proposition p" +
                              std::to_string(*state.rbegin()) +
                              " at timestep " + std::to_string(t) +
                              " does not fit in width " + std::to_string(n));
    }
    StateRegex s(n, Bit::Zero);
    for (Prop p : state) {
      s[p] = Bit::One;
    }
    bits.push_back(std::move(s));
  }
  return bits;
}

Trace bits_to_trace(const TraceRegex &r) {
  Trace trace;
  trace.reserve(r.size());
  for (const StateRegex &s : r) {
    State state;
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (s[k] == Bit::S) {
        throw PreconditionError("bits_to_trace: S is not a concrete bit");
      }
      if (s[k] == Bit::One) {
        state.insert(k);
      }
    }
    trace.push_back(std::move(state));
  }
  return trace;
}

std::string trace_regex_to_text(const TraceRegex &r) {
  std::string text;
  for (std::size_t t = 0; t < r.size(); ++t) {
    if (t > 0) {
      text += ',';
    }
    for (Bit b : r[t]) {
      text += bit_char(b);
    }
  }
  return text;
}

std::string regex_to_text(const WestRegex &L) {
  std::string text;
  for (std::size_t i = 0; i < L.size(); ++i) {
    if (i > 0) {
      text += '\n';
    }
    text += trace_regex_to_text(L[i]);
  }
  return text;
}

namespace {

TraceRegex parse_line(std::string_view line, std::size_t lineno,
                      std::optional<std::size_t> width) {
  TraceRegex r;
  StateRegex current;
  std::size_t state_start = 0;
  auto finish_state = [&](std::size_t col) {
    std::size_t expected = width ? *width : r.empty() ? current.size()
                                                      : r.front().size();
    if (current.size() != expected) {
      throw ParseError("state regex has width " +
                           std::to_string(current.size()) + ", expected " +
                           std::to_string(expected),
                       lineno, col + 1);
    }
    r.push_back(std::move(current));
    current.clear();
  };
  for (std::size_t i = 0; i < line.size(); ++i) {
    switch (line[i]) {
    case '0':
      current.push_back(Bit::Zero);
      break;
    case '1':
      current.push_back(Bit::One);
      break;
    case 'S':
      current.push_back(Bit::S);
      break;
    case ',':
      finish_state(state_start);
      state_start = i + 1;
      break;
    default:
      throw ParseError(std::string("unexpected character '") + line[i] +
                           "' in regex (expected 0, 1, S or ',')",
                       lineno, i + 1);
    }
  }
  finish_state(state_start);
  return r;
}

} // namespace

TraceRegex text_to_trace_regex(std::string_view line,
                               std::optional<std::size_t> width) {
  return parse_line(line, 1, width);
}

WestRegex text_to_regex(std::string_view text,
                        std::optional<std::size_t> width) {
  WestRegex L;
  if (text.empty()) {
    return L;
  }
  if (text.back() == '\n') {
    text.remove_suffix(1);
  }
  std::size_t lineno = 1;
  while (true) {
    const std::size_t nl = text.find('\n');
    L.push_back(parse_line(text.substr(0, nl), lineno, width));
    if (nl == std::string_view::npos) {
      break;
    }
    text.remove_prefix(nl + 1);
    ++lineno;
  }
  return L;
}

} // namespace west
