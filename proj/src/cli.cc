#include "west/cli.hh"

#include "west/algorithm.hh"
#include "west/bench.hh"
#include "west/equivalence.hh"
#include "west/error.hh"
#include "west/formula_io.hh"
#include "west/parallel.hh"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

namespace west {

namespace {

constexpr int kExitLimit = 2;

struct Streams {
  std::ostream &out;
  std::ostream &err;
};

/* Prints a parse diagnostic with a caret under the offending column when the
 * position is known and the input is a single line. */
void report_parse_error(std::ostream &err, const std::string &what,
                        const std::string &input, const ParseError &e) {
  err << "error: " << what << ": " << e.what();
  if (e.line() > 0) {
    err << " (line " << e.line() << ", column " << e.column() << ")";
  }
  err << '\n';
  if (e.line() == 1 && input.find('\n') == std::string::npos) {
    err << "  " << input << "\n  " << std::string(e.column() - 1, ' ')
        << "^\n";
  }
}

std::optional<Formula> read_formula(Streams io, const std::string &text) {
  try {
    return parse_formula(text);
  } catch (const ParseError &e) {
    report_parse_error(io.err, "formula", text, e);
    return std::nullopt;
  }
}

WestRegex transform(const Formula &f, bool pad, unsigned threads) {
  const WestOptions opts{threads};
  return pad ? simp_pad_west_reg(f, opts) : west_reg(f, opts);
}

struct GenFlags {
  FormulaGenParams params;

  void attach(CLI::App &cmd) {
    cmd.add_option("--count", params.count, "number of formulas")
        ->capture_default_str();
    cmd.add_option("--nvars", params.n, "propositions p0..p(N-1)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd.add_option("--depth", params.d, "maximum operator nesting depth")
        ->capture_default_str();
    cmd.add_option("--bound", params.b, "maximum interval upper bound")
        ->capture_default_str();
    cmd.add_option("--seed", params.seed, "generator seed")
        ->capture_default_str();
    cmd.add_flag("--nested-ur", params.nested_until_release,
                 "only Until and Release at inner nodes");
  }
};

int cmd_regex(Streams io, const std::string &text, bool pad, bool json,
              unsigned threads) {
  const auto f = read_formula(io, text);
  if (!f) {
    return kExitInput;
  }
  const WestRegex L = transform(*f, pad, threads);
  if (json) {
    nlohmann::ordered_json body;
    body["regex"] = regex_to_text(L);
    body["nvars"] = num_vars(*f);
    body["complen"] = complen(*f);
    body["alternatives"] = L.size();
    io.out << body.dump() << '\n';
  } else {
    io.out << regex_to_text(L) << '\n';
  }
  return 0;
}

int cmd_match(Streams io, const std::string &text,
              const std::string &trace_text, bool pad, unsigned threads) {
  const auto f = read_formula(io, text);
  if (!f) {
    return kExitInput;
  }
  Trace trace;
  try {
    trace = parse_trace(trace_text, num_vars(*f));
  } catch (const ParseError &e) {
    report_parse_error(io.err, "trace", trace_text, e);
    return kExitInput;
  }
  const bool matched = match(trace, transform(*f, pad, threads));
  io.out << (matched ? "match" : "no-match") << '\n';
  return matched ? 0 : 1;
}

int cmd_equiv(Streams io, const std::string &text1, const std::string &text2,
              std::uint64_t budget, unsigned threads) {
  const auto f1 = read_formula(io, text1);
  const auto f2 = read_formula(io, text2);
  if (!f1 || !f2) {
    return kExitInput;
  }
  const EquivVerdict v = formula_equivalence(*f1, *f2, budget, threads);
  switch (v.outcome) {
  case EquivVerdict::Outcome::Equivalent:
    io.out << "equivalent\n";
    return 0;
  case EquivVerdict::Outcome::Inequivalent:
    io.out << "inequivalent\n"
           << "witness: " << trace_regex_to_text(v.witness) << '\n'
           << "accepted by: " << (v.witness_in_first ? "first" : "second")
           << '\n';
    return 1;
  case EquivVerdict::Outcome::LimitExceeded:
    io.out << "limit: " << v.limit << '\n';
    return kExitLimit;
  }
  return kExitLimit;
}

int cmd_validate(Streams io, const FormulaGenParams &params,
                 std::size_t max_bits, unsigned threads) {
  const std::vector<Formula> formulas = random_formulas(params, threads);
  enum class Result { Pass, Fail, Skip };
  struct Checked {
    Result result = Result::Pass;
    std::optional<OracleCounterexample> counterexample;
  };
  const std::vector<RegexBuilder> builders{
      [](const Formula &g) { return west_reg(g); },
      [](const Formula &g) { return simp_pad_west_reg(g); },
  };
  const auto checked =
      parallel_map(formulas.size(), threads, [&](std::size_t i) {
        const Formula &f = formulas[i];
        Checked c;
        if (num_vars(f) * (complen(f) + 1) > max_bits) {
          c.result = Result::Skip;
          return c;
        }
        c.counterexample = find_oracle_counterexample(f, builders, max_bits);
        c.result = c.counterexample ? Result::Fail : Result::Pass;
        return c;
      });

  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  for (std::size_t i = 0; i < checked.size(); ++i) {
    switch (checked[i].result) {
    case Result::Pass:
      ++passed;
      break;
    case Result::Skip:
      ++skipped;
      break;
    case Result::Fail: {
      ++failed;
      const OracleCounterexample &cx = *checked[i].counterexample;
      io.err << "FAIL " << pretty(formulas[i]) << "  trace "
             << trace_to_text(cx.trace, num_vars(formulas[i]))
             << "  semantics " << (cx.satisfies ? "true" : "false")
             << "  builder "
             << (cx.builder == 0 ? "west_reg" : "simp_pad_west_reg") << '\n';
      break;
    }
    }
  }
  io.out << "passed " << passed << " failed " << failed << " skipped "
         << skipped << '\n';
  return failed == 0 ? 0 : 1;
}

int cmd_random(Streams io, const FormulaGenParams &params, unsigned threads) {
  for (const Formula &f : random_formulas(params, threads)) {
    io.out << pretty(f) << '\n';
  }
  return 0;
}

std::optional<std::vector<BenchItem>> read_suite(Streams io,
                                                 const std::string &path) {
  std::ifstream in(path);
  if (!in) {
    io.err << "error: cannot open suite file " << path << '\n';
    return std::nullopt;
  }
  std::vector<BenchItem> items;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') {
      continue;
    }
    try {
      items.push_back(measured_item(parse_formula(line)));
    } catch (const ParseError &e) {
      report_parse_error(io.err, path + ":" + std::to_string(lineno), line,
                         e);
      return std::nullopt;
    }
  }
  return items;
}

int cmd_bench(Streams io, const std::string &suite,
              const FormulaGenParams &params, double timeout,
              const std::string &out_path, unsigned threads) {
  std::vector<BenchItem> items;
  if (!suite.empty()) {
    auto loaded = read_suite(io, suite);
    if (!loaded) {
      return kExitInput;
    }
    items = std::move(*loaded);
  } else {
    for (const Formula &f : random_formulas(params, threads)) {
      items.push_back({f, params.n, params.d, params.b});
    }
  }

  BenchConfig config;
  config.timeout = std::chrono::duration<double>(timeout);
  config.threads = threads;
  const std::vector<BenchRecord> records = run_bench(items, config);

  std::ostream *summary = &io.out;
  if (out_path.empty() || out_path == "-") {
    write_bench_csv(io.out, records);
    summary = &io.err;
  } else {
    std::ofstream file(out_path);
    if (!file) {
      io.err << "error: cannot write " << out_path << '\n';
      return kExitInput;
    }
    write_bench_csv(file, records);
  }
  const BenchSummary s = summarize(records);
  *summary << "formulas " << records.size() << " ok " << s.ok << " timeout "
           << s.timeouts << " limit " << s.limits << " mean_ok_ms "
           << s.mean_ok_ms << '\n';
  return 0;
}

int dispatch(CLI::App &app, const std::function<void()> &parse, Streams io) {
  try {
    parse();
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, io.out, io.err);
    return code == 0 ? 0 : kExitUsage;
  }
  return -1;
}

int run(const std::function<void(CLI::App &)> &parse, std::ostream &out,
        std::ostream &err) {
  Streams io{out, err};
  CLI::App app{"MLTL to WEST regular expression toolkit", "west"};
  app.require_subcommand(1);

  unsigned threads = 1;
  auto add_threads = [&](CLI::App *cmd) {
    cmd->add_option("--threads", threads, "worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };

  std::string formula;
  std::string formula2;
  std::string trace_text;
  bool pad = false;
  bool json = false;

  auto *regex = app.add_subcommand("regex", "print the regex of a formula");
  regex->add_option("formula", formula, "MLTL formula")->required();
  regex->add_flag("--pad", pad, "simplify and pad to the computation length");
  regex->add_flag("--json", json, "print a JSON object");
  add_threads(regex);

  auto *match_cmd =
      app.add_subcommand("match", "check a trace against a formula's regex");
  match_cmd->add_option("formula", formula, "MLTL formula")->required();
  match_cmd->add_option("--trace", trace_text, "trace such as 10,01")
      ->required();
  match_cmd->add_flag("--pad", pad,
                      "simplify and pad to the computation length");
  add_threads(match_cmd);

  std::uint64_t budget = kDefaultExpansionBudget;
  auto *equiv = app.add_subcommand("equiv", "compare two formulas");
  equiv->add_option("formula1", formula, "first formula")->required();
  equiv->add_option("formula2", formula2, "second formula")->required();
  equiv->add_option("--budget", budget, "maximum expanded traces")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_threads(equiv);

  GenFlags validate_gen;
  std::size_t max_bits = kDefaultOracleBudget;
  auto *validate =
      app.add_subcommand("validate", "oracle-check a random batch");
  validate_gen.attach(*validate);
  validate->add_option("--max-bits", max_bits,
                       "skip formulas needing more enumerated bits")
      ->capture_default_str();
  add_threads(validate);

  GenFlags random_gen;
  auto *random = app.add_subcommand("random", "print random formulas");
  random_gen.attach(*random);
  add_threads(random);

  GenFlags bench_gen;
  std::string suite;
  double timeout = 60.0;
  std::string out_path;
  auto *bench = app.add_subcommand("bench", "time the transformation");
  bench->add_option("--suite", suite, "file with one formula per line")
      ->check(CLI::ExistingFile);
  bench_gen.attach(*bench);
  bench->add_option("--timeout", timeout, "seconds per formula")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--out", out_path, "CSV output path (default stdout)");
  add_threads(bench);

  if (const int code = dispatch(app, [&] { parse(app); }, io); code >= 0) {
    return code;
  }

  try {
    if (regex->parsed()) {
      return cmd_regex(io, formula, pad, json, threads);
    }
    if (match_cmd->parsed()) {
      return cmd_match(io, formula, trace_text, pad, threads);
    }
    if (equiv->parsed()) {
      return cmd_equiv(io, formula, formula2, budget, threads);
    }
    if (validate->parsed()) {
      return cmd_validate(io, validate_gen.params, max_bits, threads);
    }
    if (random->parsed()) {
      return cmd_random(io, random_gen.params, threads);
    }
    if (bench->parsed()) {
      return cmd_bench(io, suite, bench_gen.params, timeout, out_path,
                       threads);
    }
  } catch (const ParseError &e) {
    io.err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const BudgetExceeded &e) {
    io.err << "error: " << e.what() << '\n';
    return kExitLimit;
  } catch (const PreconditionError &e) {
    io.err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err) {
  return run(
      [&](CLI::App &app) {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
      },
      out, err);
}

int run_cli(int argc, const char *const *argv, std::ostream &out,
            std::ostream &err) {
  return run([&](CLI::App &app) { app.parse(argc, argv); }, out, err);
}

} // namespace west
