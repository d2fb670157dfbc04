#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include <classlab/permutation.hpp>

using namespace classlab;

namespace {

Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> v(n);
  std::iota(v.begin(), v.end(), Point{0});
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation::from_images(v);
}

// Order by repeated multiplication, independent of cycle_type.
std::uint64_t order_by_powers(const Permutation& p) {
  auto q = p;
  std::uint64_t k = 1;
  while (!q.is_identity()) {
    q = compose(q, p);
    ++k;
  }
  return k;
}

} // namespace

TEST(Permutation, ComposeAppliesLeftFactorFirst) {
  const auto p = Permutation::from_images({1, 2, 0}); // (1,2,3)
  const auto q = Permutation::from_images({1, 0, 2}); // (1,2)
  EXPECT_EQ(compose(p, q), Permutation::from_images({0, 2, 1}));
  EXPECT_EQ(compose(q, p), Permutation::from_images({2, 1, 0}));
}

TEST(Permutation, ComposeRejectsDegreeMismatch) {
  EXPECT_THROW(compose(Permutation::identity(3), Permutation::identity(4)), std::invalid_argument);
}

TEST(Permutation, InverseOfThreeCycle) {
  const auto p = parse_cycles("(1,2,3)");
  EXPECT_EQ(inverse(p), parse_cycles("(1,3,2)"));
  EXPECT_TRUE(inverse(Permutation::identity(5)).is_identity());
}

TEST(Permutation, FromImagesRejectsNonBijection) {
  EXPECT_THROW(Permutation::from_images({0, 0, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation::from_images({0, 3, 1}), std::invalid_argument);
}

TEST(Permutation, OrderAndCycleType) {
  const auto p = parse_cycles("(1,2)(3,4,5)");
  EXPECT_EQ(element_order(p).value(), 6u);
  EXPECT_EQ(cycle_type(p), (std::vector<std::size_t>{3, 2}));
  EXPECT_EQ(cycle_type(parse_cycles("(1,2)", 4)), (std::vector<std::size_t>{2, 1, 1}));
  EXPECT_EQ(element_order(Permutation::identity(4)).value(), 1u);
}

TEST(Permutation, PElements) {
  EXPECT_TRUE(is_p_element(parse_cycles("(1,2,3,4,5)"), 5));
  EXPECT_FALSE(is_p_element(parse_cycles("(1,2)(3,4,5)"), 3));
  EXPECT_TRUE(is_p_element(Permutation::identity(6), 7));
}

TEST(Permutation, CycleStringRoundTrip) {
  EXPECT_EQ(to_cycle_string(Permutation::identity(3)), "()");
  EXPECT_EQ(to_cycle_string(parse_cycles(" (1, 3)(2,4, 5) ")), "(1,3)(2,4,5)");
  EXPECT_EQ(parse_cycles("()", 4), Permutation::identity(4));
}

TEST(Permutation, ParseErrorsCarryOneBasedOffsets) {
  try {
    parse_cycles("(1,2");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 5u);
  }
  try {
    parse_cycles("(1,x)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 4u);
  }
  EXPECT_THROW(parse_cycles("(0,1)"), ParseError);
  EXPECT_THROW(parse_cycles("(1,2)(2,3)"), ParseError);
  EXPECT_THROW(parse_cycles("(1,9)", 4), ParseError);
}

TEST(PermutationProperty, GroupAxiomsOnRandomPermutations) {
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 12;
    const auto a = random_permutation(n, rng), b = random_permutation(n, rng), c = random_permutation(n, rng);
    EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
    EXPECT_TRUE(compose(a, inverse(a)).is_identity());
    EXPECT_TRUE(compose(inverse(a), a).is_identity());
    EXPECT_EQ(conjugate(a, b), compose(compose(inverse(b), a), b));
    EXPECT_EQ(commute(a, b), compose(a, b) == compose(b, a));
    EXPECT_EQ(element_order(a).value(), order_by_powers(a));
    EXPECT_EQ(cycle_type(conjugate(a, b)), cycle_type(a));
    EXPECT_EQ(parse_cycles(to_cycle_string(a), n), a);
    EXPECT_EQ(power(a, -1), inverse(a));
  }
}

TEST(PermutationProperty, PiPartsFactorTheElement) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto x = random_permutation(10, rng);
    const auto a = pi_part(x, {2});
    const auto b = pi_part(x, {3, 5, 7});
    EXPECT_TRUE(commute(a, b));
    EXPECT_EQ(compose(a, b), x);
    EXPECT_TRUE(is_p_element(a, 2));
    EXPECT_EQ(element_order(b).p_part(2).value(), 1u);
  }
}
