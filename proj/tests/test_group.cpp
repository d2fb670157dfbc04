#include <random>
#include <set>
#include <unordered_set>
#include <vector>

#include <gtest/gtest.h>

#include <classlab/constructions.hpp>
#include <classlab/group.hpp>

using namespace classlab;

namespace {

// Naive closure under right multiplication by generators; oracle for the
// Schreier-Sims structure on small groups.
std::set<Permutation> naive_closure(const std::vector<Permutation>& gens) {
  std::set<Permutation> seen{Permutation::identity(gens.front().degree())};
  std::vector<Permutation> queue(seen.begin(), seen.end());
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& g : gens) {
      auto h = compose(queue[i], g);
      if (seen.insert(h).second)
        queue.push_back(std::move(h));
    }
  return seen;
}

std::vector<Permutation> random_generators(std::size_t degree, std::size_t count, std::mt19937_64& rng) {
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Point> v(degree);
    std::iota(v.begin(), v.end(), Point{0});
    // Small supports keep the generated groups varied, not always S_n.
    std::uniform_int_distribution<std::size_t> pick(0, degree - 1);
    for (int s = 0; s < 2; ++s)
      std::swap(v[pick(rng)], v[pick(rng)]);
    gens.push_back(Permutation::from_images(v));
  }
  return gens;
}

std::uint64_t factorial(std::uint64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

} // namespace

TEST(Group, SymmetricAndAlternatingOrders) {
  for (std::size_t n = 3; n <= 9; ++n) {
    EXPECT_EQ(symmetric(n).order().value(), factorial(n));
    EXPECT_EQ(alternating(n).order().value(), factorial(n) / 2);
  }
}

TEST(Group, RejectsBadInput) {
  EXPECT_THROW(PermutationGroup({}), std::invalid_argument);
  EXPECT_THROW(PermutationGroup({Permutation::identity(3), Permutation::identity(4)}), std::invalid_argument);
}

TEST(Group, MembershipExamples) {
  const auto a6 = alternating(6);
  EXPECT_TRUE(a6.contains(parse_cycles("(1,2,3)", 6)));
  EXPECT_FALSE(a6.contains(parse_cycles("(1,2)", 6)));
  EXPECT_THROW(a6.contains(Permutation::identity(7)), std::invalid_argument);
  EXPECT_TRUE(trivial_group(4).is_trivial());
  EXPECT_EQ(trivial_group(4).order().value(), 1u);
}

TEST(GroupProperty, SchreierSimsMatchesNaiveClosure) {
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t degree = 3 + trial % 5;
    const auto gens = random_generators(degree, 1 + trial % 3, rng);
    const PermutationGroup g(gens);
    const auto oracle = naive_closure(gens);
    ASSERT_EQ(g.order().value(), oracle.size());
    const auto elems = g.elements();
    EXPECT_EQ(std::set<Permutation>(elems.begin(), elems.end()), oracle);
    for (std::uint64_t i = 0; i < elems.size(); ++i) {
      EXPECT_EQ(g.index_of_member(elems[i]), i);
      EXPECT_EQ(g.element_at(i), elems[i]);
    }
    // Membership of every permutation of the degree, for small degrees.
    if (degree <= 5) {
      std::vector<Point> v(degree);
      std::iota(v.begin(), v.end(), Point{0});
      do {
        const auto p = Permutation::from_images(v);
        EXPECT_EQ(g.contains(p), oracle.count(p) == 1);
      } while (std::next_permutation(v.begin(), v.end()));
    }
  }
}

TEST(GroupProperty, RebuildIsDeterministic) {
  const auto gens = alternating(7).generators();
  const PermutationGroup a(gens), b(gens);
  EXPECT_EQ(a.base(), b.base());
  EXPECT_EQ(a.basic_orbit_sizes(), b.basic_orbit_sizes());
  EXPECT_EQ(a.elements(), b.elements());
}

TEST(Group, EnumerationBoundIsEnforced) {
  EXPECT_THROW(alternating(6).elements(100), BoundExceeded);
  EXPECT_THROW(ClassPartition(alternating(6), 359), BoundExceeded);
  EXPECT_NO_THROW(ClassPartition(alternating(6), 360));
}

TEST(Conjugacy, ClassesOfA6) {
  const auto a6 = alternating(6);
  const ClassPartition p(a6);
  std::multiset<std::uint64_t> sizes;
  for (const auto& c : p.classes())
    sizes.insert(c.size.value());
  EXPECT_EQ(sizes, (std::multiset<std::uint64_t>{1, 40, 40, 45, 72, 72, 90}));
  EXPECT_EQ(p.size_set(), (ClassSizeSet{1, 40, 45, 72, 90}));
  EXPECT_EQ(conjugation_class_of(a6, parse_cycles("(1,2,3,4,5)", 6)).size.value(), 72u);
  EXPECT_EQ(centralizer_order(a6, parse_cycles("(1,2)(3,4)", 6)).value(), 8u);
  EXPECT_THROW(conjugation_class_of(a6, parse_cycles("(1,2)", 6)), std::invalid_argument);
}

TEST(Conjugacy, ClassesOfS3) {
  const ClassPartition p(symmetric(3));
  ASSERT_EQ(p.classes().size(), 3u);
  EXPECT_EQ(p.size_set(), (ClassSizeSet{1, 2, 3}));
}

TEST(ConjugacyProperty, OrbitStabilizerOnEveryClass) {
  std::vector<PermutationGroup> groups{symmetric(4), alternating(5), symmetric(5), alternating(6),
                                       direct_product(symmetric(3), alternating(4))};
  for (const auto& g : groups) {
    const ClassPartition p(g);
    std::uint64_t total = 0;
    const auto elems = g.elements();
    for (const auto& c : p.classes()) {
      std::uint64_t cent = 0;
      for (const auto& y : elems)
        cent += commute(c.representative, y);
      EXPECT_EQ(c.size.value() * cent, g.order().value());
      EXPECT_TRUE(c.size.divides(g.order()));
      EXPECT_EQ(centralizer_elements(g, c.representative).order().value(), cent);
      total += c.size.value();
      // Representatives are lexicographically least in their class.
      for_each_conjugate(c.representative, g.generators(),
                         [&](const Permutation& y) { EXPECT_FALSE(y < c.representative); });
    }
    EXPECT_EQ(total, g.order().value());
    for (const auto& x : elems)
      EXPECT_EQ(p.class_size(x), conjugation_class_of(g, x).size);
  }
}

TEST(Subgroups, CenterNormalityAndQuotients) {
  EXPECT_TRUE(center(symmetric(3)).is_trivial());
  const PermutationGroup c4({parse_cycles("(1,2,3,4)")});
  EXPECT_EQ(center(c4).order().value(), 4u);

  const auto s4 = symmetric(4);
  const auto a4 = alternating(4);
  const PermutationGroup v4({parse_cycles("(1,2)(3,4)"), parse_cycles("(1,3)(2,4)")});
  const PermutationGroup swap12({parse_cycles("(1,2)", 4)});
  EXPECT_TRUE(is_normal(a4, s4));
  EXPECT_TRUE(is_normal(v4, s4));
  EXPECT_FALSE(is_normal(swap12, s4));
  EXPECT_TRUE(is_subgroup(v4, a4));
  EXPECT_FALSE(is_subgroup(swap12, a4));
  EXPECT_EQ(normal_closure(s4, parse_cycles("(1,2)(3,4)")).order().value(), 4u);

  const auto q = coset_action(s4, v4);
  EXPECT_EQ(q.order().value(), 6u);
  EXPECT_EQ(q.degree(), 6u);
  EXPECT_THROW(coset_action(s4, swap12), std::invalid_argument);
  EXPECT_THROW(coset_action(s4, PermutationGroup({Permutation::identity(4)}), 10), BoundExceeded);

  const CosetAction ca(s4, v4);
  for (const auto& x : s4.elements())
    for (const auto& y : s4.elements())
      EXPECT_EQ(ca.image_of(compose(x, y)), compose(ca.image_of(x), ca.image_of(y)));
}

TEST(Conjugacy, DirectProductOfA6) {
  const auto a6 = alternating(6);
  const auto g = direct_product(a6, a6);
  EXPECT_EQ(g.order().value(), 129600u);
  const ClassPartition p(g);
  EXPECT_EQ(p.classes().size(), 49u);
  EXPECT_EQ(p.size_set(), product_nset(all_class_sizes(a6), all_class_sizes(a6)));
  EXPECT_TRUE(center(g).is_trivial());
}
