#include "west/formula.hh"

#include <algorithm>
#include <optional>

namespace west {

struct Formula::Node {
  Kind kind;
  Prop prop = 0;
  Interval interval;
  std::optional<Formula> lhs;
  std::optional<Formula> rhs;
  std::size_t size = 1;
};

namespace {

Formula make(Kind kind, Prop prop, Interval interval, const Formula *lhs,
             const Formula *rhs) {
  auto node = std::make_shared<Formula::Node>();
  node->kind = kind;
  node->prop = prop;
  node->interval = interval;
  if (lhs) {
    node->lhs = *lhs;
    node->size += lhs->size();
  }
  if (rhs) {
    node->rhs = *rhs;
    node->size += rhs->size();
  }
  return Formula(std::move(node));
}

} // namespace

Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Kind Formula::kind() const { return node_->kind; }
Prop Formula::prop() const { return node_->prop; }
Interval Formula::interval() const { return node_->interval; }
const Formula &Formula::lhs() const { return *node_->lhs; }
const Formula &Formula::rhs() const { return *node_->rhs; }
std::size_t Formula::size() const { return node_->size; }

bool Formula::is_temporal() const {
  switch (kind()) {
  case Kind::Future:
  case Kind::Global:
  case Kind::Until:
  case Kind::Release:
    return true;
  default:
    return false;
  }
}

bool Formula::is_binary() const {
  switch (kind()) {
  case Kind::And:
  case Kind::Or:
  case Kind::Until:
  case Kind::Release:
    return true;
  default:
    return false;
  }
}

bool Formula::is_unary() const {
  return kind() == Kind::Not || kind() == Kind::Future ||
         kind() == Kind::Global;
}

bool operator==(const Formula &a, const Formula &b) {
  if (a.node_ == b.node_) {
    return true;
  }
  if (a.kind() != b.kind() || a.size() != b.size()) {
    return false;
  }
  switch (a.kind()) {
  case Kind::True:
  case Kind::False:
    return true;
  case Kind::Prop:
    return a.prop() == b.prop();
  case Kind::Not:
    return a.lhs() == b.lhs();
  case Kind::And:
  case Kind::Or:
    return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  case Kind::Future:
  case Kind::Global:
    return a.interval() == b.interval() && a.lhs() == b.lhs();
  case Kind::Until:
  case Kind::Release:
    return a.interval() == b.interval() && a.lhs() == b.lhs() &&
           a.rhs() == b.rhs();
  }
  return false;
}

Formula mk_true() { return make(Kind::True, 0, {}, nullptr, nullptr); }
Formula mk_false() { return make(Kind::False, 0, {}, nullptr, nullptr); }
Formula mk_prop(Prop p) { return make(Kind::Prop, p, {}, nullptr, nullptr); }
Formula mk_not(const Formula &f) {
  return make(Kind::Not, 0, {}, &f, nullptr);
}
Formula mk_and(const Formula &f, const Formula &g) {
  return make(Kind::And, 0, {}, &f, &g);
}
Formula mk_or(const Formula &f, const Formula &g) {
  return make(Kind::Or, 0, {}, &f, &g);
}
Formula mk_future(const Formula &f, std::size_t a, std::size_t b) {
  return make(Kind::Future, 0, {a, b}, &f, nullptr);
}
Formula mk_global(const Formula &f, std::size_t a, std::size_t b) {
  return make(Kind::Global, 0, {a, b}, &f, nullptr);
}
Formula mk_until(const Formula &f, const Formula &g, std::size_t a,
                 std::size_t b) {
  return make(Kind::Until, 0, {a, b}, &f, &g);
}
Formula mk_release(const Formula &f, const Formula &g, std::size_t a,
                   std::size_t b) {
  return make(Kind::Release, 0, {a, b}, &f, &g);
}

Trace drop(const Trace &trace, std::size_t t) {
  if (t >= trace.size()) {
    return {};
  }
  return Trace(trace.begin() + static_cast<std::ptrdiff_t>(t), trace.end());
}

const Formula *first_illdefined_interval(const Formula &f) {
  if (f.is_temporal() && f.interval().lo > f.interval().hi) {
    return &f;
  }
  if (f.is_unary() || f.is_binary()) {
    if (const Formula *bad = first_illdefined_interval(f.lhs())) {
      return bad;
    }
  }
  if (f.is_binary()) {
    return first_illdefined_interval(f.rhs());
  }
  return nullptr;
}

bool intervals_welldef(const Formula &f) {
  return first_illdefined_interval(f) == nullptr;
}

std::size_t num_vars(const Formula &f) {
  switch (f.kind()) {
  case Kind::True:
  case Kind::False:
    return 0;
  case Kind::Prop:
    return f.prop() + 1;
  case Kind::Not:
  case Kind::Future:
  case Kind::Global:
    return num_vars(f.lhs());
  default:
    return std::max(num_vars(f.lhs()), num_vars(f.rhs()));
  }
}

bool is_nnf(const Formula &f) {
  switch (f.kind()) {
  case Kind::True:
  case Kind::False:
  case Kind::Prop:
    return true;
  case Kind::Not:
    return f.lhs().kind() == Kind::Prop;
  case Kind::Future:
  case Kind::Global:
    return is_nnf(f.lhs());
  default:
    return is_nnf(f.lhs()) && is_nnf(f.rhs());
  }
}

namespace {

Formula negate_nnf(const Formula &f);

Formula nnf(const Formula &f) {
  switch (f.kind()) {
  case Kind::True:
  case Kind::False:
  case Kind::Prop:
    return f;
  case Kind::Not:
    return negate_nnf(f.lhs());
  case Kind::And:
    return mk_and(nnf(f.lhs()), nnf(f.rhs()));
  case Kind::Or:
    return mk_or(nnf(f.lhs()), nnf(f.rhs()));
  case Kind::Future:
    return mk_future(nnf(f.lhs()), f.interval().lo, f.interval().hi);
  case Kind::Global:
    return mk_global(nnf(f.lhs()), f.interval().lo, f.interval().hi);
  case Kind::Until:
    return mk_until(nnf(f.lhs()), nnf(f.rhs()), f.interval().lo,
                    f.interval().hi);
  case Kind::Release:
    return mk_release(nnf(f.lhs()), nnf(f.rhs()), f.interval().lo,
                      f.interval().hi);
  }
  return f;
}

// NNF of !f.
Formula negate_nnf(const Formula &f) {
  const auto [a, b] = f.interval();
  switch (f.kind()) {
  case Kind::True:
    return mk_false();
  case Kind::False:
    return mk_true();
  case Kind::Prop:
    return mk_not(f);
  case Kind::Not:
    return nnf(f.lhs());
  case Kind::And:
    return mk_or(negate_nnf(f.lhs()), negate_nnf(f.rhs()));
  case Kind::Or:
    return mk_and(negate_nnf(f.lhs()), negate_nnf(f.rhs()));
  case Kind::Future:
    return mk_global(negate_nnf(f.lhs()), a, b);
  case Kind::Global:
    return mk_future(negate_nnf(f.lhs()), a, b);
  case Kind::Until:
    return mk_release(negate_nnf(f.lhs()), negate_nnf(f.rhs()), a, b);
  case Kind::Release:
    return mk_until(negate_nnf(f.lhs()), negate_nnf(f.rhs()), a, b);
  }
  return f;
}

} // namespace

Formula convert_nnf(const Formula &f) { return nnf(f); }

std::size_t complen(const Formula &f) {
  switch (f.kind()) {
  case Kind::True:
  case Kind::False:
  case Kind::Prop:
    return 1;
  case Kind::Not:
    return complen(f.lhs());
  case Kind::And:
  case Kind::Or:
    return std::max(complen(f.lhs()), complen(f.rhs()));
  case Kind::Future:
  case Kind::Global:
    return f.interval().hi + complen(f.lhs());
  case Kind::Until:
  case Kind::Release:
    return f.interval().hi + std::max(complen(f.lhs()), complen(f.rhs()));
  }
  return 1;
}

std::size_t depth(const Formula &f) {
  if (f.kind() == Kind::Not && f.lhs().kind() == Kind::Prop) {
    return 0;
  }
  if (f.is_binary()) {
    return 1 + std::max(depth(f.lhs()), depth(f.rhs()));
  }
  if (f.is_unary()) {
    return 1 + depth(f.lhs());
  }
  return 0;
}

std::size_t max_bound(const Formula &f) {
  std::size_t bound = f.is_temporal() ? f.interval().hi : 0;
  if (f.is_unary() || f.is_binary()) {
    bound = std::max(bound, max_bound(f.lhs()));
  }
  if (f.is_binary()) {
    bound = std::max(bound, max_bound(f.rhs()));
  }
  return bound;
}

namespace {

std::span<const State> suffix(std::span<const State> trace, std::size_t t) {
  return trace.subspan(std::min(t, trace.size()));
}

} // namespace

bool semantics(std::span<const State> trace, const Formula &f) {
  const auto [a, b] = f.interval();
  switch (f.kind()) {
  case Kind::True:
    return true;
  case Kind::False:
    return false;
  case Kind::Prop:
    return !trace.empty() && trace.front().contains(f.prop());
  case Kind::Not:
    return !semantics(trace, f.lhs());
  case Kind::And:
    return semantics(trace, f.lhs()) && semantics(trace, f.rhs());
  case Kind::Or:
    return semantics(trace, f.lhs()) || semantics(trace, f.rhs());
  case Kind::Future:
    if (trace.size() <= a) {
      return false;
    }
    for (std::size_t i = a; i <= b; ++i) {
      if (semantics(suffix(trace, i), f.lhs())) {
        return true;
      }
    }
    return false;
  case Kind::Global:
    if (trace.size() <= a) {
      return true;
    }
    for (std::size_t i = a; i <= b; ++i) {
      if (!semantics(suffix(trace, i), f.lhs())) {
        return false;
      }
    }
    return true;
  case Kind::Until: {
    if (trace.size() <= a) {
      return false;
    }
    // phi on every suffix in [lo, end)
    auto phi_on = [&](std::size_t lo, std::size_t end) {
      for (std::size_t j = lo; j < end; ++j) {
        if (!semantics(suffix(trace, j), f.lhs())) {
          return false;
        }
      }
      return true;
    };
    for (std::size_t i = a; i <= b; ++i) {
      if (semantics(suffix(trace, i), f.rhs()) && phi_on(a, i)) {
        return true;
      }
    }
    return false;
  }
  case Kind::Release: {
    if (trace.size() <= a) {
      return true;
    }
    // psi on every suffix in [lo, end)
    auto psi_on = [&](std::size_t lo, std::size_t end) {
      for (std::size_t k = lo; k < end; ++k) {
        if (!semantics(suffix(trace, k), f.rhs())) {
          return false;
        }
      }
      return true;
    };
    if (psi_on(a, b + 1)) {
      return true;
    }
    // j over [a, b-1], empty when b <= a (including b == 0)
    for (std::size_t j = a; j < b; ++j) {
      if (semantics(suffix(trace, j), f.lhs()) && psi_on(a, j + 1)) {
        return true;
      }
    }
    return false;
  }
  }
  return false;
}

bool semantics(const Trace &trace, const Formula &f) {
  return semantics(std::span<const State>(trace), f);
}

} // namespace west
