#include "west/formula_io.hh"

#include "west/error.hh"
#include "west/parallel.hh"

#include <cctype>
#include <limits>
#include <random>

namespace west {

namespace {

enum class Tok {
  End,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Bang,
  Amp,
  Bar,
  Word,
  Number,
};

struct Token {
  Tok kind = Tok::End;
  std::string_view text;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token &peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

private:
  void advance() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      bump();
    }
    tok_.line = line_;
    tok_.column = column_;
    if (pos_ >= src_.size()) {
      tok_.kind = Tok::End;
      tok_.text = {};
      return;
    }
    const std::size_t start = pos_;
    const char c = src_[pos_];
    auto single = [&](Tok kind) {
      bump();
      tok_.kind = kind;
      tok_.text = src_.substr(start, 1);
    };
    switch (c) {
    case '(':
      return single(Tok::LParen);
    case ')':
      return single(Tok::RParen);
    case '[':
      return single(Tok::LBracket);
    case ']':
      return single(Tok::RBracket);
    case ',':
      return single(Tok::Comma);
    case '!':
      return single(Tok::Bang);
    case '&':
      return single(Tok::Amp);
    case '|':
      return single(Tok::Bar);
    default:
      break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        bump();
      }
      tok_.kind = Tok::Number;
      tok_.text = src_.substr(start, pos_ - start);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '_')) {
        bump();
      }
      tok_.kind = Tok::Word;
      tok_.text = src_.substr(start, pos_ - start);
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_,
                     column_);
  }

  void bump() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  Token tok_;
};

std::string describe(const Token &t) {
  if (t.kind == Tok::End) {
    return "end of input";
  }
  return "'" + std::string(t.text) + "'";
}

[[noreturn]] void fail(const Token &at, const std::string &message) {
  throw ParseError(message, at.line, at.column);
}

std::size_t to_nat(const Token &t) {
  std::size_t value = 0;
  for (char c : t.text) {
    const std::size_t digit = static_cast<std::size_t>(c - '0');
    if (value > (std::numeric_limits<std::size_t>::max() - digit) / 10) {
      fail(t, "number " + std::string(t.text) + " is too large");
    }
    value = value * 10 + digit;
  }
  return value;
}

bool is_word(const Token &t, std::string_view w) {
  return t.kind == Tok::Word && t.text == w;
}

class Parser {
public:
  explicit Parser(std::string_view src) : lex_(src) {}

  Formula parse() {
    Formula f = parse_or();
    if (lex_.peek().kind != Tok::End) {
      fail(lex_.peek(), "unexpected " + describe(lex_.peek()));
    }
    return f;
  }

private:
  Formula parse_or() {
    Formula f = parse_and();
    while (lex_.peek().kind == Tok::Bar) {
      lex_.take();
      f = mk_or(f, parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_until();
    while (lex_.peek().kind == Tok::Amp) {
      lex_.take();
      f = mk_and(f, parse_until());
    }
    return f;
  }

  Formula parse_until() {
    Formula lhs = parse_unary();
    if (is_word(lex_.peek(), "U") || is_word(lex_.peek(), "R")) {
      const bool until = lex_.take().text == "U";
      const Interval ivl = parse_interval();
      Formula rhs = parse_until();
      return until ? mk_until(lhs, rhs, ivl.lo, ivl.hi)
                   : mk_release(lhs, rhs, ivl.lo, ivl.hi);
    }
    return lhs;
  }

  Formula parse_unary() {
    const Token &t = lex_.peek();
    if (t.kind == Tok::Bang) {
      lex_.take();
      return mk_not(parse_unary());
    }
    if (is_word(t, "F") || is_word(t, "G")) {
      const bool future = lex_.take().text == "F";
      const Interval ivl = parse_interval();
      Formula sub = parse_unary();
      return future ? mk_future(sub, ivl.lo, ivl.hi)
                    : mk_global(sub, ivl.lo, ivl.hi);
    }
    return parse_atom();
  }

  Formula parse_atom() {
    const Token t = lex_.take();
    switch (t.kind) {
    case Tok::LParen: {
      Formula f = parse_or();
      expect(Tok::RParen, "')'");
      return f;
    }
    case Tok::Word:
      if (t.text == "true") {
        return mk_true();
      }
      if (t.text == "false") {
        return mk_false();
      }
      if (t.text.size() > 1 && t.text[0] == 'p') {
        Token digits = t;
        digits.text = t.text.substr(1);
        digits.column += 1;
        bool numeric = true;
        for (char c : digits.text) {
          numeric = numeric && std::isdigit(static_cast<unsigned char>(c));
        }
        if (numeric) {
          return mk_prop(to_nat(digits));
        }
      }
      fail(t, "unknown identifier '" + std::string(t.text) + "'");
    default:
      fail(t, "expected a formula but found " + describe(t));
    }
  }

  Interval parse_interval() {
    const Token open = expect(Tok::LBracket, "'['");
    const std::size_t lo = to_nat(expect(Tok::Number, "a number"));
    expect(Tok::Comma, "','");
    const std::size_t hi = to_nat(expect(Tok::Number, "a number"));
    expect(Tok::RBracket, "']'");
    if (lo > hi) {
      throw IntervalError("interval bound a ≤ b violated at " +
                              std::to_string(lo) + ".." + std::to_string(hi),
                          open.line, open.column);
    }
    return {lo, hi};
  }

  Token expect(Tok kind, const std::string &what) {
    if (lex_.peek().kind != kind) {
      fail(lex_.peek(), "expected " + what + " but found " +
                            describe(lex_.peek()));
    }
    return lex_.take();
  }

  Lexer lex_;
};

// Binding strength; higher binds tighter.
enum Prec { PrecOr = 0, PrecAnd = 1, PrecUntil = 2, PrecUnary = 3, PrecAtom = 4 };

int precedence(const Formula &f) {
  switch (f.kind()) {
  case Kind::Or:
    return PrecOr;
  case Kind::And:
    return PrecAnd;
  case Kind::Until:
  case Kind::Release:
    return PrecUntil;
  case Kind::Not:
  case Kind::Future:
  case Kind::Global:
    return PrecUnary;
  default:
    return PrecAtom;
  }
}

void print(const Formula &f, int min_prec, std::string &out);

void print_interval(const Formula &f, std::string &out) {
  out += '[';
  out += std::to_string(f.interval().lo);
  out += ',';
  out += std::to_string(f.interval().hi);
  out += ']';
}

void print(const Formula &f, int min_prec, std::string &out) {
  const bool parens = precedence(f) < min_prec;
  if (parens) {
    out += '(';
  }
  switch (f.kind()) {
  case Kind::True:
    out += "true";
    break;
  case Kind::False:
    out += "false";
    break;
  case Kind::Prop:
    out += 'p';
    out += std::to_string(f.prop());
    break;
  case Kind::Not:
    out += '!';
    print(f.lhs(), PrecUnary, out);
    break;
  case Kind::Future:
  case Kind::Global:
    out += f.kind() == Kind::Future ? 'F' : 'G';
    print_interval(f, out);
    out += ' ';
    print(f.lhs(), PrecUnary, out);
    break;
  case Kind::And:
    print(f.lhs(), PrecAnd, out);
    out += " & ";
    print(f.rhs(), PrecUntil, out);
    break;
  case Kind::Or:
    print(f.lhs(), PrecOr, out);
    out += " | ";
    print(f.rhs(), PrecAnd, out);
    break;
  case Kind::Until:
  case Kind::Release:
    print(f.lhs(), PrecUnary, out);
    out += f.kind() == Kind::Until ? " U" : " R";
    print_interval(f, out);
    out += ' ';
    print(f.rhs(), PrecUntil, out);
    break;
  }
  if (parens) {
    out += ')';
  }
}

} // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

std::string pretty(const Formula &f) {
  std::string out;
  print(f, PrecOr, out);
  return out;
}

Trace parse_trace(std::string_view text, std::size_t n) {
  std::size_t first = 0;
  while (first < text.size() &&
         std::isspace(static_cast<unsigned char>(text[first]))) {
    ++first;
  }
  std::size_t last = text.size();
  while (last > first &&
         std::isspace(static_cast<unsigned char>(text[last - 1]))) {
    --last;
  }
  Trace trace;
  if (first == last) {
    return trace;
  }
  State state;
  std::size_t width = 0;
  std::size_t group_start = first;
  for (std::size_t i = first; i <= last; ++i) {
    if (i == last || text[i] == ',') {
      if (width != n) {
        throw ParseError("timestep " + std::to_string(trace.size()) +
                             " has " + std::to_string(width) +
                             " bits, expected " + std::to_string(n),
                         1, group_start + 1);
      }
      trace.push_back(std::move(state));
      state.clear();
      width = 0;
      group_start = i + 1;
      continue;
    }
    const char c = text[i];
    if (c != '0' && c != '1') {
      throw ParseError(std::string("unexpected character '") + c +
                           "' in trace (expected 0, 1 or ',')",
                       1, i + 1);
    }
    if (c == '1') {
      state.insert(width);
    }
    ++width;
  }
  return trace;
}

std::string trace_to_text(const Trace &trace, std::size_t n) {
  std::string out;
  for (std::size_t t = 0; t < trace.size(); ++t) {
    if (t > 0) {
      out += ',';
    }
    for (std::size_t k = 0; k < n; ++k) {
      out += trace[t].contains(k) ? '1' : '0';
    }
  }
  return out;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

class FormulaSampler {
public:
  FormulaSampler(const FormulaGenParams &params, std::size_t index)
      : params_(params),
        rng_(splitmix64(params.seed ^ splitmix64(index))) {}

  Formula sample(std::size_t depth_left) {
    if (depth_left == 0) {
      return atom();
    }
    if (params_.nested_until_release) {
      const Interval ivl = interval();
      Formula lhs = sample(depth_left - 1);
      Formula rhs = sample(depth_left - 1);
      return uniform(2) == 0 ? mk_until(lhs, rhs, ivl.lo, ivl.hi)
                             : mk_release(lhs, rhs, ivl.lo, ivl.hi);
    }
    switch (uniform(10)) {
    case 0:
      return mk_true();
    case 1:
      return mk_false();
    case 2:
      return mk_prop(uniform(params_.n));
    case 3:
      return mk_not(sample(depth_left - 1));
    case 4: {
      Formula lhs = sample(depth_left - 1);
      return mk_and(lhs, sample(depth_left - 1));
    }
    case 5: {
      Formula lhs = sample(depth_left - 1);
      return mk_or(lhs, sample(depth_left - 1));
    }
    case 6: {
      const Interval ivl = interval();
      return mk_future(sample(depth_left - 1), ivl.lo, ivl.hi);
    }
    case 7: {
      const Interval ivl = interval();
      return mk_global(sample(depth_left - 1), ivl.lo, ivl.hi);
    }
    case 8: {
      const Interval ivl = interval();
      Formula lhs = sample(depth_left - 1);
      return mk_until(lhs, sample(depth_left - 1), ivl.lo, ivl.hi);
    }
    default: {
      const Interval ivl = interval();
      Formula lhs = sample(depth_left - 1);
      return mk_release(lhs, sample(depth_left - 1), ivl.lo, ivl.hi);
    }
    }
  }

private:
  // Uniform in [0, bound) without modulo bias.
  std::uint64_t uniform(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
      const std::uint64_t r = rng_();
      if (r >= threshold) {
        return r % bound;
      }
    }
  }

  // true, false or p_k, all n + 2 equally likely; propositions are negated
  // half of the time.
  Formula atom() {
    const std::uint64_t pick = uniform(params_.n + 2);
    if (pick == 0) {
      return mk_true();
    }
    if (pick == 1) {
      return mk_false();
    }
    Formula p = mk_prop(pick - 2);
    return uniform(2) == 0 ? p : mk_not(p);
  }

  // Uniform over all pairs lo <= hi <= b.
  Interval interval() {
    const std::uint64_t b = params_.b;
    std::uint64_t k = uniform((b + 1) * (b + 2) / 2);
    std::uint64_t hi = 0;
    while (k > hi) {
      k -= hi + 1;
      ++hi;
    }
    return {k, hi};
  }

  const FormulaGenParams &params_;
  std::mt19937_64 rng_;
};

} // namespace

Formula random_formula(const FormulaGenParams &params, std::size_t index) {
  if (params.n == 0) {
    throw PreconditionError("random_formula: need at least one proposition");
  }
  return FormulaSampler(params, index).sample(params.d);
}

std::vector<Formula> random_formulas(const FormulaGenParams &params,
                                     unsigned threads) {
  return parallel_map(params.count, threads, [&](std::size_t i) {
    return random_formula(params, i);
  });
}

} // namespace west
