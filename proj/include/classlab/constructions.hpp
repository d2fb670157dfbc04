#ifndef CLASSLAB_CONSTRUCTIONS_HPP
#define CLASSLAB_CONSTRUCTIONS_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "error.hpp"
#include "finite_field.hpp"
#include "group.hpp"
#include "permutation.hpp"
#include "projective.hpp"

namespace classlab {

namespace detail {

inline void require_symmetric_degree(std::size_t n) {
  if (n < 3 || n > 16)
    throw std::invalid_argument("degree " + std::to_string(n) + " outside the supported range 3..16");
}

inline std::vector<std::size_t> iota_points(std::size_t first, std::size_t last) {
  std::vector<std::size_t> v;
  for (std::size_t i = first; i <= last; ++i)
    v.push_back(i);
  return v;
}

/// Copy of p acting on points offset..offset+deg(p)-1 of a degree-n set.
inline Permutation shifted(const Permutation& p, std::size_t offset, std::size_t n) {
  std::vector<Point> im(n);
  for (std::size_t i = 0; i < n; ++i)
    im[i] = static_cast<Point>(i);
  for (std::size_t i = 0; i < p.degree(); ++i)
    im[offset + i] = static_cast<Point>(p[i] + offset);
  return Permutation::from_images(std::move(im));
}

} // namespace detail

/// A_n generated by (1,2,3) and an n-cycle (n odd) or (2,...,n) (n even).
inline PermutationGroup alternating(std::size_t n) {
  detail::require_symmetric_degree(n);
  auto three = Permutation::from_cycles(n, {{0, 1, 2}});
  auto cycle = n % 2 == 1 ? Permutation::from_cycles(n, {detail::iota_points(0, n - 1)})
                          : Permutation::from_cycles(n, {detail::iota_points(1, n - 1)});
  return PermutationGroup({three, cycle});
}

inline PermutationGroup symmetric(std::size_t n) {
  detail::require_symmetric_degree(n);
  return PermutationGroup({Permutation::from_cycles(n, {{0, 1}}),
                           Permutation::from_cycles(n, {detail::iota_points(0, n - 1)})});
}

/// G × H on the disjoint union of the two point sets, G first.
inline PermutationGroup direct_product(const PermutationGroup& g, const PermutationGroup& h) {
  const std::size_t n = g.degree() + h.degree();
  std::vector<Permutation> gens;
  for (const auto& s : g.generators())
    gens.push_back(detail::shifted(s, 0, n));
  for (const auto& s : h.generators())
    gens.push_back(detail::shifted(s, g.degree(), n));
  return PermutationGroup(std::move(gens));
}

/// Embeds an element of a direct product factor.
inline Permutation embed(const Permutation& p, std::size_t offset, std::size_t total_degree) {
  return detail::shifted(p, offset, total_degree);
}

/// Pairs (x1, x2) of the two factors as one permutation.
inline Permutation pair_element(const Permutation& x1, const Permutation& x2) {
  const std::size_t n = x1.degree() + x2.degree();
  return compose(detail::shifted(x1, 0, n), detail::shifted(x2, x1.degree(), n));
}

struct WreathProduct {
  PermutationGroup group;
  Permutation swap; ///< the involution exchanging the two blocks
};

/// H ≀ ⟨a⟩ on 2n points: H × H together with the block swap a.
inline WreathProduct wreath_by_involution(const PermutationGroup& h) {
  const std::size_t n = h.degree();
  std::vector<Point> im(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    im[i] = static_cast<Point>(i + n);
    im[i + n] = static_cast<Point>(i);
  }
  auto swap = Permutation::from_images(std::move(im));
  std::vector<Permutation> gens;
  for (const auto& s : h.generators())
    gens.push_back(detail::shifted(s, 0, 2 * n));
  for (const auto& s : h.generators())
    gens.push_back(detail::shifted(s, n, 2 * n));
  gens.push_back(swap);
  return {PermutationGroup(std::move(gens)), std::move(swap)};
}

// ---------------------------------------------------------------------------
// Automorphisms of A6 via the projective line over F9

/// F9 = F3[t]/(t^2 + 1).
inline std::shared_ptr<const GaloisField> field_f9() {
  static const auto f = std::make_shared<const GaloisField>(3, std::vector<unsigned>{1, 0});
  return f;
}

struct SemilinearGroup {
  PermutationGroup group;
  PermutationGroup socle;
  PermutationGroup linear; ///< PGL(2,9), the part without field automorphisms
};

namespace detail {

inline SemilinearGroup build_pgammal_2_9() {
  const auto f9 = field_f9();
  ProjectivePointSet line(f9, 2);
  const auto omega = f9->primitive_element();
  const auto t = f9->generator_t();
  const GaloisField::Element minus_one = f9->neg(1);

  auto mat = [&](GaloisField::Element a, GaloisField::Element b, GaloisField::Element c,
                 GaloisField::Element d) { return FieldMatrix(f9, 2, {a, b, c, d}); };

  // GL(2,9) = ⟨diag(ω,1), [[-1,1],[-1,0]]⟩; adding Frobenius gives ΓL(2,9).
  SemilinearMap diag{mat(omega, 0, 0, 1), 0};
  SemilinearMap cyc{mat(minus_one, 1, minus_one, 0), 0};
  SemilinearMap frob{FieldMatrix::identity(f9, 2), 1};
  // Unitriangular matrices over an F3-basis {1, t} generate SL(2,9).
  std::vector<SemilinearMap> sl{{mat(1, 1, 0, 1), 0}, {mat(1, t, 0, 1), 0},
                                {mat(1, 0, 1, 1), 0}, {mat(1, 0, t, 1), 0}};
  for (const auto& m : sl)
    if (!f9->is_square(m.matrix.determinant()))
      throw ConstructionError("socle generator without square determinant");

  auto full = matrix_group_to_permutation({diag, cyc, frob}, line);
  auto linear = matrix_group_to_permutation({diag, cyc}, line);
  auto socle = matrix_group_to_permutation(sl, line);
  if (full.order().value() != 1440)
    throw ConstructionError("PGammaL(2,9) has order " + std::to_string(full.order().value()));
  if (linear.order().value() != 720)
    throw ConstructionError("PGL(2,9) has order " + std::to_string(linear.order().value()));
  if (socle.order().value() != 360)
    throw ConstructionError("PSL(2,9) has order " + std::to_string(socle.order().value()));
  if (!is_normal(socle, full))
    throw ConstructionError("PSL(2,9) is not normal in PGammaL(2,9)");
  return {std::move(full), std::move(socle), std::move(linear)};
}

} // namespace detail

/// PΓL(2,9) = Aut(A6) on the 10 points of the projective line over F9,
/// together with its socle PSL(2,9) ≅ A6. Built once; later calls return
/// the same groups.
inline const SemilinearGroup& pgammal_2_9() {
  static const SemilinearGroup g = detail::build_pgammal_2_9();
  return g;
}

/// Element orders occurring in g.
inline std::set<std::uint64_t> element_order_spectrum(
    const PermutationGroup& g, std::uint64_t bound = kDefaultEnumerationBound) {
  std::set<std::uint64_t> orders;
  g.for_each_element([&](const Permutation& x) {
    orders.insert(element_order(x).value());
    return true;
  }, bound);
  return orders;
}

/// The three subgroups strictly between S and G when G/S is a Klein four
/// group, each generated by S and one nontrivial coset representative.
inline std::vector<PermutationGroup> index_two_overgroups(const PermutationGroup& g,
                                                          const PermutationGroup& s) {
  CosetAction action(g, s);
  if (action.index() != 4)
    throw std::invalid_argument("index_two_overgroups needs |G:S| = 4, got " +
                                std::to_string(action.index()));
  const auto& reps = action.representatives();
  for (std::size_t c = 1; c < reps.size(); ++c)
    if (!s.contains(compose(reps[c], reps[c])))
      throw std::invalid_argument("G/S is cyclic, not of exponent 2");
  std::vector<PermutationGroup> out;
  for (std::size_t c = 1; c < reps.size(); ++c) {
    auto gens = s.generators();
    gens.push_back(reps[c]);
    out.emplace_back(std::move(gens));
  }
  return out;
}

enum class A6Extension { S6, PGL_2_9, M10 };

inline const char* to_string(A6Extension e) {
  switch (e) {
  case A6Extension::S6:
    return "S6";
  case A6Extension::PGL_2_9:
    return "PGL(2,9)";
  case A6Extension::M10:
    return "M10";
  }
  return "?";
}

/// Labels an A6.2 by its element orders: only S6 has elements of order 6,
/// only PGL(2,9) has elements of order 10, and M10 has neither but has
/// elements of order 8.
inline A6Extension classify_a6_extension(const PermutationGroup& t) {
  if (t.order().value() != 720)
    throw std::invalid_argument("not an extension A6.2: order " + std::to_string(t.order().value()));
  auto spectrum = element_order_spectrum(t);
  const bool six = spectrum.count(6) > 0, ten = spectrum.count(10) > 0, eight = spectrum.count(8) > 0;
  if (six && !ten && !eight)
    return A6Extension::S6;
  if (ten && eight && !six)
    return A6Extension::PGL_2_9;
  if (eight && !six && !ten)
    return A6Extension::M10;
  throw ConstructionError("element orders match no extension A6.2");
}

struct LabeledExtension {
  A6Extension type;
  PermutationGroup group;
};

/// The three A6.2 inside PΓL(2,9), labeled by invariants, in coset order.
inline const std::vector<LabeledExtension>& a6_extensions() {
  static const std::vector<LabeledExtension> ext = [] {
    const auto& aut = pgammal_2_9();
    std::vector<LabeledExtension> out;
    std::set<A6Extension> seen;
    for (auto& t : index_two_overgroups(aut.group, aut.socle)) {
      auto type = classify_a6_extension(t);
      if (!seen.insert(type).second)
        throw ConstructionError("two overgroups share the label " + std::string(to_string(type)));
      out.push_back({type, std::move(t)});
    }
    return out;
  }();
  return ext;
}

inline const PermutationGroup& a6_extension(A6Extension type) {
  for (const auto& e : a6_extensions())
    if (e.type == type)
      return e.group;
  throw ConstructionError("missing extension " + std::string(to_string(type)));
}

// ---------------------------------------------------------------------------
// U4(2) ≅ PSp(4,3)

namespace detail {

/// Gram matrix of the form B(u,v) = u1 v3 + u2 v4 - u3 v1 - u4 v2 over F3.
inline FieldMatrix symplectic_gram(const std::shared_ptr<const GaloisField>& f3) {
  const auto m1 = f3->neg(1);
  return FieldMatrix(f3, 4, {0, 0, 1, 0, 0, 0, 0, 1, m1, 0, 0, 0, 0, m1, 0, 0});
}

inline bool is_symplectic(const FieldMatrix& m, const FieldMatrix& gram) {
  return m * gram * m.transpose() == gram;
}

inline PermutationGroup build_u4_2() {
  const auto f3 = std::make_shared<const GaloisField>(3);
  const auto gram = symplectic_gram(f3);
  // The transvection v ↦ v + B(v, e1) e1, and an element of order 12
  // (a product of three transvections).
  FieldMatrix transvection(f3, 4, {1, 0, 0, 0, 0, 1, 0, 0, 2, 0, 1, 0, 0, 0, 0, 1});
  FieldMatrix regular(f3, 4, {1, 0, 1, 0, 2, 0, 2, 1, 2, 2, 0, 0, 2, 2, 2, 1});
  for (const auto* m : {&transvection, &regular})
    if (!is_symplectic(*m, gram))
      throw ConstructionError("U4(2) generator does not preserve the symplectic form");

  ProjectivePointSet space(f3, 4);
  auto g = matrix_group_to_permutation(std::vector<FieldMatrix>{transvection, regular}, space);
  if (g.order().value() != 25920)
    throw ConstructionError("PSp(4,3) has order " + std::to_string(g.order().value()));
  // Simplicity check: every nontrivial class generates the whole group.
  const ClassPartition partition(g);
  for (const auto& c : partition.classes()) {
    if (c.representative.is_identity())
      continue;
    if (normal_closure(g, c.representative).order() != g.order())
      throw ConstructionError("PSp(4,3) has a proper normal subgroup");
  }
  return g;
}

} // namespace detail

/// PSp(4,3) on the 40 points of projective 3-space over F3.
inline const PermutationGroup& u4_2() {
  static const PermutationGroup g = detail::build_u4_2();
  return g;
}

} // namespace classlab

#endif
