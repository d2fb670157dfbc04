#include <set>
#include <vector>

#include <gtest/gtest.h>

#include <classlab/constructions.hpp>
#include <classlab/projective.hpp>

using namespace classlab;

TEST(FiniteField, F9Arithmetic) {
  const auto f = field_f9();
  ASSERT_EQ(f->size(), 9u);
  for (GaloisField::Element a = 1; a < 9; ++a) {
    EXPECT_EQ(f->mul(a, f->inv(a)), 1);
    EXPECT_EQ(f->pow(a, 8), 1);
  }
  // Frobenius is additive and multiplicative: checked on all pairs.
  for (GaloisField::Element a = 0; a < 9; ++a)
    for (GaloisField::Element b = 0; b < 9; ++b) {
      EXPECT_EQ(f->frobenius(f->add(a, b)), f->add(f->frobenius(a), f->frobenius(b)));
      EXPECT_EQ(f->frobenius(f->mul(a, b)), f->mul(f->frobenius(a), f->frobenius(b)));
    }
  const auto w = f->primitive_element();
  std::set<GaloisField::Element> powers;
  for (unsigned k = 0; k < 8; ++k)
    powers.insert(f->pow(w, k));
  EXPECT_EQ(powers.size(), 8u);
  // t^2 + 1 = 0.
  const auto t = f->generator_t();
  EXPECT_EQ(f->add(f->mul(t, t), 1), 0);
}

TEST(Projective, PointCounts) {
  EXPECT_EQ(ProjectivePointSet(field_f9(), 2).size(), 10u);
  EXPECT_EQ(ProjectivePointSet(std::make_shared<const GaloisField>(3), 4).size(), 40u);
  EXPECT_EQ(ProjectivePointSet(std::make_shared<const GaloisField>(5), 3).size(), 31u);
}

TEST(Projective, MatricesToPermutations) {
  const auto f3 = std::make_shared<const GaloisField>(3);
  ProjectivePointSet pts(f3, 2);
  EXPECT_TRUE(to_permutation(FieldMatrix::identity(f3, 2), pts).is_identity());
  EXPECT_TRUE(to_permutation(FieldMatrix::scalar(f3, 2, 2), pts).is_identity());
  EXPECT_THROW(to_permutation(FieldMatrix(f3, 2, {1, 1, 1, 1}), pts), std::invalid_argument);

  const auto f9 = field_f9();
  ProjectivePointSet line(f9, 2);
  const auto w = f9->primitive_element();
  const auto m1 = f9->neg(1);
  const auto pgl = matrix_group_to_permutation(
      std::vector<FieldMatrix>{FieldMatrix(f9, 2, {w, 0, 0, 1}), FieldMatrix(f9, 2, {m1, 1, m1, 0})}, line);
  EXPECT_EQ(pgl.order().value(), 720u);
}

TEST(Constructions, DirectProducts) {
  const std::vector<std::pair<PermutationGroup, PermutationGroup>> pairs{
      {symmetric(3), symmetric(4)}, {alternating(4), symmetric(3)}, {alternating(5), symmetric(3)}};
  for (const auto& [g, h] : pairs) {
    const auto gh = direct_product(g, h);
    EXPECT_EQ(gh.order(), g.order() * h.order());
    EXPECT_EQ(all_class_sizes(gh), product_nset(all_class_sizes(g), all_class_sizes(h)));
  }
  EXPECT_EQ(pair_element(parse_cycles("(1,2)"), parse_cycles("(1,2,3)")), parse_cycles("(1,2)(3,4,5)"));
}

TEST(Constructions, WreathInvolution) {
  for (const auto& h : {trivial_group(1), symmetric(3), alternating(5)}) {
    const auto w = wreath_by_involution(h);
    EXPECT_EQ(w.group.order(), h.order() * h.order() * FactoredNatural{2});
    EXPECT_EQ(conjugation_class_of(w.group, w.swap).size, h.order());
    EXPECT_EQ(ClassPartition(w.group).class_size(w.swap), h.order());
  }
}

TEST(Constructions, ProjectiveSemilinearGroup) {
  const auto& aut = pgammal_2_9();
  EXPECT_EQ(aut.group.order().value(), 1440u);
  EXPECT_EQ(aut.socle.order().value(), 360u);
  EXPECT_EQ(aut.linear.order().value(), 720u);
  EXPECT_EQ(aut.group.degree(), 10u);
  EXPECT_TRUE(is_normal(aut.socle, aut.group));
  EXPECT_EQ(all_class_sizes(aut.socle), all_class_sizes(alternating(6)));
  const auto q = coset_action(aut.group, aut.socle);
  EXPECT_EQ(q.order().value(), 4u);
  EXPECT_EQ(element_order_spectrum(q), (std::set<std::uint64_t>{1, 2}));
}

TEST(Constructions, ThreeExtensionsOfA6) {
  const auto& aut = pgammal_2_9();
  const auto ts = index_two_overgroups(aut.group, aut.socle);
  ASSERT_EQ(ts.size(), 3u);
  std::set<std::vector<std::uint64_t>> sets;
  for (const auto& t : ts) {
    EXPECT_EQ(t.order().value(), 720u);
    for (const auto& s : aut.socle.generators())
      EXPECT_TRUE(t.contains(s));
    sets.insert(all_class_sizes(t).values());
  }
  EXPECT_EQ(sets.size(), 3u);

  // The S6 inside PΓL(2,9) has the class sizes of the natural S6.
  EXPECT_EQ(all_class_sizes(a6_extension(A6Extension::S6)), all_class_sizes(symmetric(6)));
  EXPECT_EQ(all_class_sizes(a6_extension(A6Extension::PGL_2_9)), (ClassSizeSet{1, 36, 45, 72, 80, 90}));
  EXPECT_EQ(all_class_sizes(a6_extension(A6Extension::M10)), (ClassSizeSet{1, 45, 80, 90, 144, 180}));
  EXPECT_EQ(all_class_sizes(a6_extension(A6Extension::PGL_2_9)), all_class_sizes(aut.linear));

  const ClassPartition socle_classes(aut.socle);
  for (const auto& e : a6_extensions()) {
    std::uint64_t best = 1;
    for (const auto& c : socle_classes.classes())
      best = std::max(best, conjugation_orbit(c.representative, e.group.generators()).size.p_part(2).value());
    EXPECT_GE(best, 16u) << to_string(e.type);
  }
}

TEST(Constructions, IndexTwoOvergroupsRejectsCyclicQuotient) {
  const PermutationGroup c4({parse_cycles("(1,2,3,4)")});
  EXPECT_THROW(index_two_overgroups(c4, trivial_group(4)), std::invalid_argument);
  EXPECT_THROW(index_two_overgroups(symmetric(4), alternating(4)), std::invalid_argument);
}

TEST(Constructions, SymplecticGroup) {
  const auto& u = u4_2();
  EXPECT_EQ(u.order().value(), 25920u);
  EXPECT_EQ(u.order().factorization_string(), "2^6·3^4·5");
  EXPECT_EQ(u.degree(), 40u);
  EXPECT_TRUE(center(u).is_trivial());
  const ClassPartition p(u);
  EXPECT_EQ(p.classes().size(), 20u);
  EXPECT_EQ(p.size_set(),
            (ClassSizeSet{1, 40, 45, 240, 270, 360, 480, 540, 720, 1440, 2160, 2880, 3240, 5184}));
  std::set<std::uint64_t> orders;
  for (const auto& c : p.classes())
    orders.insert(element_order(c.representative).value());
  EXPECT_EQ(orders, (std::set<std::uint64_t>{1, 2, 3, 4, 5, 6, 9, 12}));
}
