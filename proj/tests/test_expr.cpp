#include <gtest/gtest.h>

#include "hsumset/expr.hpp"

using namespace hsumset::expr;

namespace {

Bindings hk(std::int64_t h, std::int64_t k, std::int64_t x = 0, std::int64_t y = 0) {
  Bindings b;
  b.set('h', h);
  b.set('k', k);
  b.set('x', x);
  b.set('y', y);
  return b;
}

}  // namespace

TEST(Poly, JuxtapositionAndPowers) {
  EXPECT_EQ(Poly::parse("hk-h^2+2").eval(hk(3, 10)), 23);
  EXPECT_EQ(Poly::parse("(h+1)k-h(h-1)").eval(hk(4, 15)), 63);
  EXPECT_EQ(Poly::parse("2x+1").eval(hk(0, 0, 5)), 11);
  EXPECT_EQ(Poly::parse("-3").eval(hk(0, 0)), -3);
  EXPECT_EQ(Poly::parse("h^2").degree(), 2u);
  EXPECT_EQ(Poly::parse("hk-h^2+x").variables(), "hkx");
}

TEST(Poly, CancellationAndArithmetic) {
  const Poly p = Poly::parse("(h+k)(h-k)") - Poly::parse("h^2-k^2");
  EXPECT_TRUE(p.terms().empty());
  const Poly q = Poly::variable('h') * Poly::constant(3) + Poly::constant(1);
  EXPECT_EQ(q.eval(hk(4, 0)), 13);
}

TEST(Poly, RejectsMalformed) {
  EXPECT_THROW(Poly::parse("h+"), std::invalid_argument);
  EXPECT_THROW(Poly::parse("(h"), std::invalid_argument);
  EXPECT_THROW(Poly::parse("h^x"), std::invalid_argument);
  EXPECT_THROW(Poly::parse("h$"), std::invalid_argument);
}

TEST(Bindings, UnboundVariableThrows) {
  Bindings b;
  EXPECT_THROW((void)b.get('q'), std::invalid_argument);
  EXPECT_THROW(Poly::parse("q").eval(b), std::invalid_argument);
}

TEST(Condition, IntervalsSetsAndChains) {
  const auto c = Condition::parse("x in [1,h-1] & y in {k-1,k}");
  EXPECT_TRUE(c.holds(hk(3, 10, 2, 9)));
  EXPECT_FALSE(c.holds(hk(3, 10, 3, 9)));
  EXPECT_FALSE(c.holds(hk(3, 10, 2, 8)));

  const auto chain = Condition::parse("1 <= x < h");
  EXPECT_TRUE(chain.holds(hk(3, 0, 2)));
  EXPECT_FALSE(chain.holds(hk(3, 0, 3)));

  const auto alt = Condition::parse("x = 1 | y >= k-1");
  EXPECT_TRUE(alt.holds(hk(3, 10, 1, 0)));
  EXPECT_TRUE(alt.holds(hk(3, 10, 5, 9)));
  EXPECT_FALSE(alt.holds(hk(3, 10, 5, 8)));
}

TEST(Condition, ParenthesizedGroupsAndViolation) {
  const auto c = Condition::parse("x in [1,k-1] & (x in [1,h-1])");
  EXPECT_TRUE(c.holds(hk(3, 10, 2)));
  EXPECT_EQ(c.violation(hk(3, 10, 2)), 0);
  EXPECT_GT(c.violation(hk(3, 10, 5)), 0);
  EXPECT_THROW(Condition::parse("x in [1"), std::invalid_argument);
  EXPECT_THROW(Condition::parse("x ~ 3"), std::invalid_argument);
}
