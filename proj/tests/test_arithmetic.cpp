#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include <classlab/arithmetic.hpp>

using namespace classlab;

namespace {

const ClassSizeSet kA6{1, 40, 45, 72, 90};

// Brute-force filter used as an oracle for the set helpers.
template <class Pred>
ClassSizeSet filter(const ClassSizeSet& n, Pred pred) {
  ClassSizeSet r;
  for (const auto& m : n)
    if (pred(m.value()))
      r.insert(m);
  return r;
}

} // namespace

TEST(FactoredNatural, Factorization) {
  const FactoredNatural n{129600};
  EXPECT_EQ(n.factorization_string(), "2^6·3^4·5^2");
  EXPECT_EQ(n.p_part(2).value(), 64u);
  EXPECT_EQ(n.p_part(7).value(), 1u);
  EXPECT_EQ(FactoredNatural{1}.factors().size(), 0u);
  EXPECT_TRUE(FactoredNatural{81}.is_prime_power_of(3));
  EXPECT_THROW(FactoredNatural{10} / FactoredNatural{3}, std::domain_error);
}

TEST(FactoredNatural, LcmGcdAgreeWithStd) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint64_t> d(1, 200000);
  for (int i = 0; i < 2000; ++i) {
    const auto a = d(rng), b = d(rng);
    EXPECT_EQ(lcm(FactoredNatural{a}, FactoredNatural{b}).value(), std::lcm(a, b));
    EXPECT_EQ(gcd(FactoredNatural{a}, FactoredNatural{b}).value(), std::gcd(a, b));
    EXPECT_EQ((FactoredNatural{a} * FactoredNatural{b}).value(), a * b);
  }
}

TEST(ClassSizeSetOps, ProductOfA6WithItself) {
  const auto n = product_nset(kA6, kA6);
  EXPECT_EQ(n, (ClassSizeSet{1, 40, 45, 72, 90, 1600, 1800, 2025, 2880, 3240, 3600, 4050, 5184, 6480, 8100}));
  EXPECT_EQ(pi_of(n), (std::set<std::uint64_t>{2, 3, 5}));
  EXPECT_EQ(min_group_order(n).value(), 129600u);
  EXPECT_EQ(max_p_part(n, 2).value(), 64u);
  EXPECT_EQ(max_p_part(n, 5).value(), 25u);
}

TEST(ClassSizeSetOps, MultiplesAndCandidates) {
  const auto n = product_nset(kA6, kA6);
  EXPECT_EQ(multiples_in(FactoredNatural{360}, n), filter(n, [](auto v) { return v % 360 == 0; }));
  EXPECT_EQ(multiples_in(FactoredNatural{360}, n), (ClassSizeSet{1800, 2880, 3240, 3600, 6480}));
  EXPECT_TRUE(multiples_in(FactoredNatural{14400}, n).empty());
  EXPECT_TRUE(multiples_in(FactoredNatural{25920}, n).empty());
  EXPECT_FALSE(divides_some(FactoredNatural{16200}, n));
  EXPECT_EQ(without(candidates_with_p_part_le(n, 2, FactoredNatural{4}), {1}),
            (ClassSizeSet{45, 90, 2025, 4050, 8100}));
  EXPECT_EQ(candidates_with_p_part_le(n, 3, FactoredNatural{3}),
            filter(n, [](auto v) { return v % 9 != 0; }));
  EXPECT_EQ(candidates_with_p_part_eq(n, 5, FactoredNatural{5}),
            filter(n, [](auto v) { return v % 5 == 0 && v % 25 != 0; }));
  EXPECT_EQ(intersect(n, kA6), kA6);
}

TEST(ClassSizeSetOps, CoprimeFeasibility) {
  const auto n = product_nset(kA6, kA6);
  auto f = coprime_pair_feasible(FactoredNatural{1600}, FactoredNatural{72}, n);
  EXPECT_FALSE(f.feasible);
  EXPECT_EQ(f.required_divisor.value(), 14400u);
  f = coprime_pair_feasible(FactoredNatural{40}, FactoredNatural{72}, n);
  EXPECT_TRUE(f.feasible);
  EXPECT_EQ(f.witnesses, (ClassSizeSet{1800, 2880}));
  // lcm(1800, 3600, 1800) = 3600, which lies in N.
  auto t = coprime_triple_feasible(FactoredNatural{1800}, FactoredNatural{3600}, FactoredNatural{1800}, n);
  EXPECT_TRUE(t.feasible);
  EXPECT_EQ(t.witnesses, ClassSizeSet{3600});
  t = coprime_triple_feasible(FactoredNatural{1800}, FactoredNatural{2880}, FactoredNatural{1800}, n);
  EXPECT_FALSE(t.feasible);
}

TEST(ClassSizeSetProperty, ProductSetIsCommutativeAndContainsFactors) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::uint64_t> d(1, 40);
  for (int i = 0; i < 200; ++i) {
    ClassSizeSet a{1}, b{1};
    for (int k = 0; k < 4; ++k) {
      a.insert(FactoredNatural{d(rng)});
      b.insert(FactoredNatural{d(rng)});
    }
    const auto ab = product_nset(a, b);
    EXPECT_EQ(ab, product_nset(b, a));
    for (const auto& m : a)
      EXPECT_TRUE(ab.contains(m));
    EXPECT_TRUE(min_group_order(a).divides(min_group_order(ab)));
  }
}
