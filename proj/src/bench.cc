#include "west/bench.hh"

#include "west/algorithm.hh"
#include "west/error.hh"
#include "west/formula_io.hh"
#include "west/limits.hh"
#include "west/parallel.hh"

#include <iomanip>
#include <sstream>

namespace west {

const char *outcome_name(BenchOutcome outcome) {
  switch (outcome) {
  case BenchOutcome::Ok:
    return "ok";
  case BenchOutcome::Timeout:
    return "timeout";
  case BenchOutcome::Limit:
    return "limit";
  }
  return "?";
}

BenchItem measured_item(const Formula &f) {
  return {f, num_vars(f), depth(f), max_bound(f)};
}

std::vector<BenchRecord> run_bench(const std::vector<BenchItem> &items,
                                   const BenchConfig &config) {
  using Clock = std::chrono::steady_clock;
  return parallel_map(items.size(), config.threads, [&](std::size_t i) {
    const BenchItem &item = items[i];
    BenchRecord record;
    record.formula = pretty(item.formula);
    record.n = item.n;
    record.d = item.d;
    record.b = item.b;

    Limits limits = Limits::with_timeout(
        std::chrono::duration_cast<std::chrono::nanoseconds>(config.timeout));
    limits.max_alternatives = config.max_alternatives;
    LimitScope scope(limits);

    const auto start = Clock::now();
    try {
      const WestRegex L = simp_pad_west_reg(item.formula);
      record.outcome = BenchOutcome::Ok;
      record.alternatives = L.size();
      record.length = complen(item.formula);
    } catch (const TimeoutError &) {
      record.outcome = BenchOutcome::Timeout;
    } catch (const BudgetExceeded &) {
      record.outcome = BenchOutcome::Limit;
    }
    record.ms =
        std::chrono::duration<double, std::milli>(Clock::now() - start)
            .count();
    return record;
  });
}

BenchSummary summarize(const std::vector<BenchRecord> &records) {
  BenchSummary s;
  double total = 0.0;
  for (const BenchRecord &r : records) {
    switch (r.outcome) {
    case BenchOutcome::Ok:
      ++s.ok;
      total += r.ms;
      break;
    case BenchOutcome::Timeout:
      ++s.timeouts;
      break;
    case BenchOutcome::Limit:
      ++s.limits;
      break;
    }
  }
  s.mean_ok_ms = s.ok > 0 ? total / static_cast<double>(s.ok) : 0.0;
  return s;
}

namespace {

std::string csv_field(const std::string &value) {
  if (value.find_first_of(",\"\n\r") == std::string::npos) {
    return value;
  }
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') {
      quoted += '"';
    }
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

} // namespace

void write_bench_csv(std::ostream &out,
                     const std::vector<BenchRecord> &records) {
  out << "formula,n,d,b,ms,outcome,alts,len\n";
  for (const BenchRecord &r : records) {
    std::ostringstream ms;
    ms << std::fixed << std::setprecision(3) << r.ms;
    out << csv_field(r.formula) << ',' << r.n << ',' << r.d << ',' << r.b
        << ',' << ms.str() << ',' << outcome_name(r.outcome) << ',';
    if (r.alternatives) {
      out << *r.alternatives;
    }
    out << ',';
    if (r.length) {
      out << *r.length;
    }
    out << '\n';
  }
}

} // namespace west
