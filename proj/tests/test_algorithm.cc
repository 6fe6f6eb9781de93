#include "support.hh"

#include "west/algorithm.hh"
#include "west/error.hh"
#include "west/formula_io.hh"
#include "west/limits.hh"
#include "west/ops.hh"

#include <gtest/gtest.h>

namespace west {
namespace {

using test::rx;

::testing::AssertionResult same_matches(const WestRegex &a, const WestRegex &b,
                                        std::size_t n, std::size_t max_len) {
  for (const Trace &pi : test::traces_up_to(n, max_len)) {
    if (test::ref_match(pi, a) != test::ref_match(pi, b)) {
      return ::testing::AssertionFailure()
             << "differ on a trace of length " << pi.size();
    }
  }
  return ::testing::AssertionSuccess();
}

// Match set of a formula restricted to traces of length >= min_len.
::testing::AssertionResult agrees_with_semantics(const WestRegex &L,
                                                 const Formula &f,
                                                 std::size_t n,
                                                 std::size_t min_len,
                                                 std::size_t max_len) {
  for (std::size_t m = min_len; m <= max_len; ++m) {
    for (const Trace &pi : test::traces_of_length(n, m)) {
      if (test::ref_match(pi, L) != semantics(pi, f)) {
        return ::testing::AssertionFailure()
               << "disagree at length " << m << " on " << pretty(f);
      }
    }
  }
  return ::testing::AssertionSuccess();
}

TEST(Global, UnitInterval) {
  EXPECT_EQ(west_global(rx("1"), 0, 1, 1), rx("1,1"));
  for (const Trace &pi : test::traces_up_to(1, 3)) {
    const bool expect =
        pi.size() >= 2 && pi[0].count(0) > 0 && pi[1].count(0) > 0;
    EXPECT_EQ(match(pi, west_global(rx("1"), 0, 1, 1)), expect);
  }
}

TEST(Global, PointIntervalIsShift) {
  const WestRegex L = rx("1S\n01");
  EXPECT_TRUE(same_matches(west_global(L, 2, 2, 2), shift(L, 2, 2), 2, 4));
  EXPECT_EQ(west_global({}, 1, 3, 2), WestRegex{});
}

TEST(Future, UnitInterval) {
  const WestRegex F = west_future(rx("1"), 0, 1, 1);
  for (const Trace &pi : test::traces_up_to(1, 3)) {
    const bool expect = !pi.empty() && (pi[0].count(0) > 0 ||
                                        (pi.size() >= 2 && pi[1].count(0) > 0));
    EXPECT_EQ(match(pi, F), expect);
  }
}

TEST(Future, PointIntervalAndEmpty) {
  const WestRegex L = rx("1S\n01");
  EXPECT_TRUE(same_matches(west_future(L, 1, 1, 2), shift(L, 2, 1), 2, 4));
  EXPECT_EQ(west_future({}, 0, 2, 2), WestRegex{});
}

TEST(Until, PointIntervalIsShiftedRight) {
  const WestRegex phi = rx("1S");
  const WestRegex psi = rx("S1\n00");
  EXPECT_TRUE(
      same_matches(west_until(phi, psi, 2, 2, 2), shift(psi, 2, 2), 2, 4));
  EXPECT_EQ(west_until(phi, {}, 0, 3, 2), WestRegex{});
}

TEST(Until, MatchesSemantics) {
  const Formula f = parse_formula("p0 U[0,1] p1");
  const WestRegex L = west_until(rx("1S"), rx("S1"), 0, 1, 2);
  EXPECT_TRUE(agrees_with_semantics(L, f, 2, 2, 3));
}

TEST(Release, PointIntervalIsGlobal) {
  const WestRegex phi = rx("1S");
  const WestRegex psi = rx("S1");
  EXPECT_TRUE(same_matches(west_release(phi, psi, 1, 1, 2),
                           west_global(psi, 1, 1, 2), 2, 4));
  EXPECT_TRUE(same_matches(west_release({}, psi, 0, 2, 2),
                           west_global(psi, 0, 2, 2), 2, 4));
}

TEST(Release, MatchesSemantics) {
  const Formula f = parse_formula("p0 R[0,2] p1");
  const WestRegex L = west_release(rx("1S"), rx("S1"), 0, 2, 2);
  EXPECT_TRUE(agrees_with_semantics(L, f, 2, 3, 4));
}

TEST(RegAux, BaseCases) {
  EXPECT_EQ(west_reg_aux(mk_true(), 3), rx("SSS"));
  EXPECT_EQ(west_reg_aux(mk_false(), 3), WestRegex{});
  EXPECT_EQ(west_reg_aux(mk_prop(1), 3), rx("S1S"));
  EXPECT_EQ(west_reg_aux(mk_not(mk_prop(0)), 2), rx("0S"));
  EXPECT_EQ(west_reg_aux(mk_and(mk_prop(0), mk_prop(1)), 2), rx("11"));
}

TEST(RegAux, TrueAtWidthZero) {
  EXPECT_EQ(west_reg_aux(mk_true(), 0), (WestRegex{TraceRegex{StateRegex{}}}));
}

TEST(RegAux, RejectsNonNnf) {
  EXPECT_THROW(west_reg_aux(mk_not(mk_and(mk_prop(0), mk_prop(1))), 2),
               PreconditionError);
}

TEST(RegAux, RejectsTooNarrowWidth) {
  EXPECT_THROW(west_reg_aux(mk_prop(3), 2), PreconditionError);
}

TEST(RegAux, WidthClosure) {
  test::Rng rng(31);
  for (int round = 0; round < 500; ++round) {
    const Formula f = convert_nnf(test::random_test_formula(rng, 3, 3, 2));
    const std::size_t n = num_vars(f) + rng() % 3;
    ASSERT_TRUE(west_regex_of_vars(west_reg_aux(f, n), n)) << pretty(f);
  }
}

TEST(Reg, NegatedConjunction) {
  const Formula f = parse_formula("!(p0 & p1)");
  const WestRegex L = west_reg(f);
  EXPECT_TRUE(same_matches(L, rx("0S\n10"), 2, 3));
  EXPECT_EQ(L, rx("0S\nS0"));
}

TEST(Reg, GlobalAndFalse) {
  EXPECT_EQ(west_reg(parse_formula("G[0,1] p0")), rx("1,1"));
  EXPECT_EQ(west_reg(mk_false()), WestRegex{});
}

TEST(Reg, IllDefinedIntervalNamesSubformula) {
  const Formula f = mk_and(mk_prop(0), mk_global(mk_prop(1), 3, 1));
  try {
    west_reg(f);
    FAIL() << "expected IntervalError";
  } catch (const IntervalError &e) {
    EXPECT_NE(std::string(e.what()).find("3..1"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("G[3,1] p1"), std::string::npos);
  }
  EXPECT_THROW(simp_pad_west_reg(f), IntervalError);
}

TEST(PadTo, Cases) {
  EXPECT_EQ(pad_to(rx("1"), 2, 1), rx("1,S"));
  EXPECT_EQ(pad_to(rx("1,0\n0,1"), 2, 1), rx("1,0\n0,1"));
  EXPECT_EQ(pad_to({}, 4, 2), WestRegex{});
  EXPECT_THROW(pad_to(rx("1,0,1"), 2, 1), PreconditionError);
}

TEST(SimpPad, FutureAtComplen) {
  const Formula f = parse_formula("F[0,1] p0");
  const WestRegex L = simp_pad_west_reg(f);
  for (const TraceRegex &r : L) {
    EXPECT_EQ(r.size(), 2u);
  }
  EXPECT_TRUE(agrees_with_semantics(L, f, 1, 2, 4));
  for (const Trace &pi : test::traces_up_to(1, 1)) {
    EXPECT_FALSE(match(pi, L));
  }
}

TEST(SimpPad, AtomsAndTrue) {
  EXPECT_EQ(simp_pad_west_reg(mk_prop(0)), rx("1"));
  EXPECT_EQ(simp_pad_west_reg(mk_true()),
            (WestRegex{TraceRegex{StateRegex{}}}));
  EXPECT_EQ(simp_pad_west_reg(mk_true(), 2, 1), rx("SS"));
}

TEST(SimpPad, LengthIsComplen) {
  test::Rng rng(32);
  for (int round = 0; round < 400; ++round) {
    const Formula f = test::random_test_formula(rng, 2, 3, 3);
    const std::size_t len = complen(f);
    for (const TraceRegex &r : simp_pad_west_reg(f)) {
      ASSERT_EQ(r.size(), len) << pretty(f);
    }
  }
}

TEST(Correctness, WestRegAgreesWithSemantics) {
  test::Rng rng(33);
  std::size_t checked = 0;
  for (int round = 0; round < 400; ++round) {
    const Formula f = test::random_test_formula(rng, 2, 2, 3);
    const std::size_t n = num_vars(f);
    const std::size_t len = complen(f);
    if (n * (len + 1) > 14) {
      continue;
    }
    ++checked;
    const WestRegex plain = west_reg(f);
    const WestRegex padded = simp_pad_west_reg(f);
    for (std::size_t m : {len, len + 1}) {
      for (const Trace &pi : test::traces_of_length(n, m)) {
        const bool sat = semantics(pi, f);
        ASSERT_EQ(test::ref_match(pi, plain), sat) << pretty(f);
        ASSERT_EQ(test::ref_match(pi, padded), sat) << pretty(f);
      }
    }
  }
  EXPECT_GT(checked, 200u);
}

TEST(Threads, ParallelRecursionIsDeterministic) {
  test::Rng rng(34);
  for (int round = 0; round < 100; ++round) {
    const Formula f = test::random_test_formula(rng, 3, 4, 2);
    ASSERT_EQ(west_reg(f, WestOptions{4}), west_reg(f)) << pretty(f);
    ASSERT_EQ(simp_pad_west_reg(f, WestOptions{3}), simp_pad_west_reg(f));
  }
}

TEST(Limits, AlternativeCapStopsTransformation) {
  Limits limits;
  limits.max_alternatives = 1;
  LimitScope scope(limits);
  EXPECT_THROW(west_reg(parse_formula("F[0,3] (p0 & p1 | p2)")),
               BudgetExceeded);
}

TEST(Limits, ExpiredDeadlineTimesOut) {
  LimitScope scope(Limits::with_timeout(std::chrono::nanoseconds(0)));
  EXPECT_THROW(west_reg(parse_formula("G[0,3] (p0 U[0,3] p1)")),
               TimeoutError);
}

TEST(Limits, DeadlineReachesWorkerThreads) {
  LimitScope scope(Limits::with_timeout(std::chrono::nanoseconds(0)));
  EXPECT_THROW(west_reg(parse_formula("G[0,3] p0 & F[0,3] p1"),
                        WestOptions{4}),
               TimeoutError);
}

TEST(Limits, ScopeRestoresPreviousLimits) {
  {
    Limits limits;
    limits.max_alternatives = 5;
    LimitScope scope(limits);
    EXPECT_EQ(current_limits().max_alternatives, 5u);
  }
  EXPECT_FALSE(current_limits().deadline.has_value());
  EXPECT_EQ(current_limits().max_alternatives,
            std::numeric_limits<std::size_t>::max());
}

} // namespace
} // namespace west
