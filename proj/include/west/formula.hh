#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <span>
#include <vector>

namespace west {

/* Atomic propositions are natural numbers p0, p1, ... */
using Prop = std::size_t;

/* A state is the set of propositions that hold at one timestep. */
using State = std::set<Prop>;

/* A finite (possibly empty) sequence of states. */
using Trace = std::vector<State>;

/* Suffix of a trace starting at timestep t; empty when t >= |trace|. */
Trace drop(const Trace &trace, std::size_t t);

enum class Kind {
  True,
  False,
  Prop,
  Not,
  And,
  Or,
  Future,
  Global,
  Until,
  Release,
};

/* Closed interval [lo, hi] of timesteps. Well-defined iff lo <= hi. */
struct Interval {
  std::size_t lo = 0;
  std::size_t hi = 0;

  friend bool operator==(const Interval &, const Interval &) = default;
};

/* Immutable MLTL formula.
 *
 * Nodes are shared between copies, so formulas are cheap to copy and safe to
 * share across threads. Equality is structural. */
class Formula {
public:
  Kind kind() const;

  /* Proposition index; only meaningful for Kind::Prop. */
  Prop prop() const;

  /* Interval of a temporal node (Future, Global, Until, Release). */
  Interval interval() const;

  /* Operand of Not/Future/Global; left operand of And/Or/Until/Release. */
  const Formula &lhs() const;

  /* Right operand of And/Or/Until/Release. */
  const Formula &rhs() const;

  /* Number of AST nodes. */
  std::size_t size() const;

  bool is_temporal() const;
  bool is_binary() const;
  bool is_unary() const;

  friend bool operator==(const Formula &a, const Formula &b);

  /* Opaque node; build formulas with the mk_* functions below. */
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node);

private:
  std::shared_ptr<const Node> node_;
};

Formula mk_true();
Formula mk_false();
Formula mk_prop(Prop p);
Formula mk_not(const Formula &f);
Formula mk_and(const Formula &f, const Formula &g);
Formula mk_or(const Formula &f, const Formula &g);
Formula mk_future(const Formula &f, std::size_t a, std::size_t b);
Formula mk_global(const Formula &f, std::size_t a, std::size_t b);
Formula mk_until(const Formula &f, const Formula &g, std::size_t a,
                 std::size_t b);
Formula mk_release(const Formula &f, const Formula &g, std::size_t a,
                   std::size_t b);

/* Every temporal node has lo <= hi. */
bool intervals_welldef(const Formula &f);

/* First temporal subformula (pre-order) with lo > hi, if any. */
const Formula *first_illdefined_interval(const Formula &f);

/* One more than the largest proposition index occurring in f (0 if none). */
std::size_t num_vars(const Formula &f);

/* Negation appears only directly on propositions. */
bool is_nnf(const Formula &f);

/* Pushes negations down to propositions using the standard dualities. */
Formula convert_nnf(const Formula &f);

/* Computation length: a trace of this length is long enough to decide f. */
std::size_t complen(const Formula &f);

/* Maximum nesting depth of operators. Atoms and negated propositions
 * (literals) have depth 0. */
std::size_t depth(const Formula &f);

/* Largest interval upper bound in f (0 if f has no temporal node). */
std::size_t max_bound(const Formula &f);

/* Finite-trace satisfaction: trace |= f. */
bool semantics(const Trace &trace, const Formula &f);
bool semantics(std::span<const State> trace, const Formula &f);

} // namespace west
