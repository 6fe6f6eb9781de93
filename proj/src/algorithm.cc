#include "west/algorithm.hh"

#include "west/error.hh"
#include "west/formula_io.hh"
#include "west/limits.hh"
#include "west/ops.hh"

#include <atomic>
#include <future>
#include <stdexcept>
#include <string>
#include <utility>

namespace west {

WestRegex west_global(const WestRegex &L, std::size_t a, std::size_t b,
                      std::size_t n) {
  WestRegex acc = shift(L, n, a);
  for (std::size_t i = a + 1; i <= b; ++i) {
    acc = and_simp(shift(L, n, i), acc, n);
  }
  return acc;
}

WestRegex west_future(const WestRegex &L, std::size_t a, std::size_t b,
                      std::size_t n) {
  WestRegex acc = shift(L, n, a);
  for (std::size_t i = a + 1; i <= b; ++i) {
    acc = or_simp(shift(L, n, i), acc, n);
  }
  return acc;
}

WestRegex west_until(const WestRegex &phi, const WestRegex &psi,
                     std::size_t a, std::size_t b, std::size_t n) {
  // phi_prefix = conjunction of shift(phi, j) for j in [a, i-1]; the empty
  // conjunction is the single zero-length alternative.
  WestRegex phi_prefix{TraceRegex{}};
  WestRegex acc;
  for (std::size_t i = a; i <= b; ++i) {
    acc = or_simp(acc, and_simp(phi_prefix, shift(psi, n, i), n), n);
    if (i < b) {
      phi_prefix = and_simp(phi_prefix, shift(phi, n, i), n);
    }
  }
  return acc;
}

WestRegex west_release(const WestRegex &phi, const WestRegex &psi,
                       std::size_t a, std::size_t b, std::size_t n) {
  WestRegex acc = west_global(psi, a, b, n);
  WestRegex psi_prefix{TraceRegex{}};
  for (std::size_t j = a; j < b; ++j) {
    psi_prefix = and_simp(psi_prefix, shift(psi, n, j), n);
    acc = or_simp(acc, and_simp(shift(phi, n, j), psi_prefix, n), n);
  }
  return acc;
}

namespace {

StateRegex literal_state(std::size_t n, Prop p, Bit bit) {
  StateRegex s = arbitrary_state(n);
  s[p] = bit;
  return s;
}

class Translator {
public:
  Translator(std::size_t n, unsigned threads)
      : n_(n), spare_(threads > 1 ? static_cast<int>(threads) - 1 : 0) {}

  WestRegex run(const Formula &f) {
    const auto [a, b] = f.interval();
    switch (f.kind()) {
    case Kind::True:
      return {TraceRegex{arbitrary_state(n_)}};
    case Kind::False:
      return {};
    case Kind::Prop:
      return {TraceRegex{literal_state(n_, f.prop(), Bit::One)}};
    case Kind::Not:
      if (f.lhs().kind() != Kind::Prop) {
        throw PreconditionError("west_reg_aux: formula is not in NNF");
      }
      return {TraceRegex{literal_state(n_, f.lhs().prop(), Bit::Zero)}};
    case Kind::And: {
      auto [l, r] = children(f);
      return and_simp(l, r, n_);
    }
    case Kind::Or: {
      auto [l, r] = children(f);
      return or_simp(l, r, n_);
    }
    case Kind::Future:
      return west_future(child(f, f.lhs()), a, b, n_);
    case Kind::Global:
      return west_global(child(f, f.lhs()), a, b, n_);
    case Kind::Until: {
      auto [l, r] = children(f);
      return west_until(l, r, a, b, n_);
    }
    case Kind::Release: {
      auto [l, r] = children(f);
      return west_release(l, r, a, b, n_);
    }
    }
    throw std::logic_error("west_reg_aux: unknown formula kind");
  }

private:
  // Recursion variant: every call descends to a strictly smaller AST.
  WestRegex child(const Formula &parent, const Formula &sub) {
    if (sub.size() >= parent.size()) {
      throw std::logic_error("west_reg_aux: recursion did not shrink formula");
    }
    return run(sub);
  }

  std::pair<WestRegex, WestRegex> children(const Formula &f) {
    if (!take_worker()) {
      WestRegex l = child(f, f.lhs());
      return {std::move(l), child(f, f.rhs())};
    }
    struct ReturnWorker {
      std::atomic<int> &spare;
      ~ReturnWorker() { spare.fetch_add(1); }
    } token{spare_};
    // The future's destructor joins the task, also when rhs throws.
    auto left = std::async(std::launch::async,
                           [this, &f, limits = current_limits()] {
                             LimitScope scope(limits);
                             return child(f, f.lhs());
                           });
    WestRegex right = child(f, f.rhs());
    return {left.get(), std::move(right)};
  }

  bool take_worker() {
    int available = spare_.load();
    while (available > 0) {
      if (spare_.compare_exchange_weak(available, available - 1)) {
        return true;
      }
    }
    return false;
  }

  std::size_t n_;
  std::atomic<int> spare_;
};

void require_welldef(const Formula &f) {
  if (const Formula *bad = first_illdefined_interval(f)) {
    const auto [a, b] = bad->interval();
    throw IntervalError("interval bound a ≤ b violated at " +
                        std::to_string(a) + ".." + std::to_string(b) +
                        " in " + pretty(*bad));
  }
}

} // namespace

WestRegex west_reg_aux(const Formula &f, std::size_t n,
                       const WestOptions &opts) {
  if (!is_nnf(f)) {
    throw PreconditionError("west_reg_aux: formula is not in NNF");
  }
  if (num_vars(f) > n) {
    throw PreconditionError("west_reg_aux: formula uses " +
                            std::to_string(num_vars(f)) +
                            " variables, width is " + std::to_string(n));
  }
  if (!intervals_welldef(f)) {
    throw PreconditionError("west_reg_aux: ill-defined interval");
  }
  Translator translator(n, opts.threads);
  return translator.run(f);
}

WestRegex west_reg(const Formula &f, std::size_t n, const WestOptions &opts) {
  require_welldef(f);
  return west_reg_aux(convert_nnf(f), n, opts);
}

WestRegex west_reg(const Formula &f, const WestOptions &opts) {
  return west_reg(f, num_vars(f), opts);
}

WestRegex pad_to(const WestRegex &L, std::size_t m, std::size_t n) {
  WestRegex out;
  out.reserve(L.size());
  for (const TraceRegex &r : L) {
    if (r.size() > m) {
      throw PreconditionError("pad_to: alternative of length " +
                              std::to_string(r.size()) + " exceeds " +
                              std::to_string(m));
    }
    TraceRegex padded = r;
    padded.resize(m, arbitrary_state(n));
    out.push_back(std::move(padded));
  }
  return out;
}

WestRegex simp_pad_west_reg(const Formula &f, std::size_t n, std::size_t m,
                            const WestOptions &opts) {
  return west_simp(pad_to(west_reg(f, n, opts), m, n), n);
}

WestRegex simp_pad_west_reg(const Formula &f, const WestOptions &opts) {
  require_welldef(f);
  return simp_pad_west_reg(f, num_vars(f), complen(f), opts);
}

} // namespace west
