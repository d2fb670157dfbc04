#ifndef CLASSLAB_INSTANCE_CHECKS_HPP
#define CLASSLAB_INSTANCE_CHECKS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "constructions.hpp"
#include "context.hpp"
#include "coprime_action.hpp"
#include "group.hpp"
#include "report.hpp"

namespace classlab {

namespace instance_detail {

inline std::string num(std::uint64_t n) { return std::to_string(n); }

inline FactoredNatural orbit_size(const Permutation& x, const std::vector<Permutation>& gens) {
  return conjugation_orbit(x, gens).size;
}

} // namespace instance_detail

// ---------------------------------------------------------------------------
// Normal subgroups: |x^K| and the class of xK in G/K divide |x^G|.

struct NormalPair {
  std::string name;
  PermutationGroup group;
  PermutationGroup normal;
};

inline std::vector<NormalPair> standard_normal_pairs(ReplayContext& ctx) {
  const auto& a6 = ctx.a6();
  std::vector<Permutation> left;
  const auto id = a6.identity();
  for (const auto& s : a6.generators())
    left.push_back(pair_element(s, id));
  return {
      {"A6 ⊴ S6", symmetric(6), a6},
      {"A6×1 ⊴ A6×A6", ctx.a6xa6(), PermutationGroup(left)},
      {"PSL(2,9) ⊴ PΓL(2,9)", pgammal_2_9().group, pgammal_2_9().socle},
  };
}

/// Checks the divisibility relations for every class representative of G.
/// Both |x^K| and |(xK)^{G/K}| are constant on G-classes since K is normal.
inline bool check_normal_pair(const NormalPair& np, LemmaReport& r, const RunOptions& opt) {
  const bool normal = r.check(np.name + ": K is a normal subgroup",
                              {computed("|G|", np.group.order().value()), computed("|K|", np.normal.order().value())},
                              "K ⊴ G", is_subgroup(np.normal, np.group) && is_normal(np.normal, np.group));
  if (!normal)
    return false;
  const ClassPartition classes(np.group, opt.enumeration_bound);
  const CosetAction quotient(np.group, np.normal, opt.coset_bound);
  const auto& qgens = quotient.image().generators();
  std::size_t bad_k = 0, bad_q = 0;
  Json rows = Json::array();
  for (const auto& c : classes.classes()) {
    const auto in_k = instance_detail::orbit_size(c.representative, np.normal.generators());
    const auto in_q = instance_detail::orbit_size(quotient.image_of(c.representative), qgens);
    bad_k += !in_k.divides(c.size);
    bad_q += !in_q.divides(c.size);
    rows.push_back(Json::array({to_cycle_string(c.representative), c.size.value(), in_k.value(), in_q.value()}));
  }
  bool ok = r.check(np.name + ": |x^K| divides |x^G| for every class",
                    {computed("classes", classes.classes().size()),
                     computed("[x, |x^G|, |x^K|, |(xK)^(G/K)|]", rows), computed("violations", bad_k)},
                    "|x^K| | |x^G|", bad_k == 0);
  ok = r.check(np.name + ": the class of xK in G/K divides |x^G| for every class",
               {computed("|G/K|", quotient.index()), computed("violations", bad_q)},
               "|(xK)^(G/K)| | |x^G|", bad_q == 0) && ok;
  return ok;
}

inline LemmaReport check_big1(ReplayContext& ctx) {
  LemmaReport r("big1", "class sizes in normal subgroups and quotients divide class sizes in G");
  for (const auto& np : standard_normal_pairs(ctx))
    check_normal_pair(np, r, ctx.options());
  return r;
}

// ---------------------------------------------------------------------------
// Commuting elements of coprime orders in A6×A6.

struct CommutingPair {
  Permutation x, y;
};

/// `count` seeded pairs (x, y): the π-part and π'-part of a random element
/// for a random nonempty proper subset π of {2, 3, 5}. Pairs with a trivial
/// member are redrawn.
inline std::vector<CommutingPair> sample_commuting_pairs(const PermutationGroup& g, std::size_t count,
                                                         std::uint64_t seed) {
  static const std::vector<std::vector<std::uint64_t>> subsets{{2}, {3}, {5}, {2, 3}, {2, 5}, {3, 5}};
  static const std::vector<std::vector<std::uint64_t>> complements{{3, 5}, {2, 5}, {2, 3}, {5}, {3}, {2}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, g.order().value() - 1);
  std::uniform_int_distribution<std::size_t> pick_set(0, subsets.size() - 1);
  std::vector<CommutingPair> out;
  out.reserve(count);
  while (out.size() < count) {
    const auto e = g.element_at(pick(rng));
    const auto s = pick_set(rng);
    auto x = pi_part(e, subsets[s]);
    auto y = pi_part(e, complements[s]);
    if (x.is_identity() || y.is_identity())
      continue;
    out.push_back({std::move(x), std::move(y)});
  }
  return out;
}

/// Elements of `g` commuting with x, in enumeration order.
inline std::vector<std::uint64_t> centralizer_indices(const PermutationGroup& g, const Permutation& x) {
  std::vector<std::uint64_t> out;
  std::uint64_t i = 0;
  g.for_each_element([&](const Permutation& h) {
    if (commute(h, x))
      out.push_back(i);
    ++i;
    return true;
  });
  return out;
}

inline LemmaReport check_big2(ReplayContext& ctx) {
  LemmaReport r("big2", "commuting elements of coprime orders: C(xy) = C(x) ∩ C(y)");
  const auto& opt = ctx.options();
  const auto& a6 = ctx.a6();
  const auto& g = ctx.a6xa6();
  const auto& classes = ctx.a6xa6_classes();
  const auto pairs = sample_commuting_pairs(g, opt.commuting_pairs, opt.seed);
  const std::size_t n6 = a6.degree();

  auto split = [&](const Permutation& p) {
    std::vector<Point> a(n6), b(n6);
    for (std::size_t i = 0; i < n6; ++i) {
      a[i] = p[i];
      b[i] = static_cast<Point>(p[i + n6] - n6);
    }
    return std::pair{Permutation::from_images(std::move(a)), Permutation::from_images(std::move(b))};
  };
  const auto a6_elements = a6.elements(opt.enumeration_bound);

  // The centralizer of (u, v) in A6×A6 is the set of (g1, g2) with g1 and g2
  // commuting with u and v coordinatewise, so comparing the two coordinate
  // filters over A6 compares the centralizers element by element.
  std::size_t set_violations = 0, bound_violations = 0, lcm_violations = 0, coprime = 0;
  std::optional<std::size_t> first_bad;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto& [x, y] = pairs[k];
    coprime += commute(x, y) && gcd(element_order(x), element_order(y)).value() == 1;
    const auto xy = compose(x, y);
    const auto [x1, x2] = split(x);
    const auto [y1, y2] = split(y);
    const auto [p1, p2] = split(xy);
    bool same = true;
    for (const auto& h : a6_elements) {
      same = same && (commute(h, x1) && commute(h, y1)) == commute(h, p1);
      same = same && (commute(h, x2) && commute(h, y2)) == commute(h, p2);
    }
    const auto& cx = classes.class_size(x);
    const auto& cy = classes.class_size(y);
    const auto& cxy = classes.class_size(xy);
    const bool bound_ok = cxy <= cx * cy;
    const bool lcm_ok = lcm(cx, cy).divides(cxy);
    set_violations += !same;
    bound_violations += !bound_ok;
    lcm_violations += !lcm_ok;
    if ((!same || !bound_ok || !lcm_ok) && !first_bad)
      first_bad = k;
  }
  r.check("sampled pairs commute and have coprime orders",
          {computed("pairs", pairs.size()), computed("seed", opt.seed), computed("coprime commuting", coprime)},
          "every pair: [x, y] = 1 and gcd(|x|, |y|) = 1", coprime == pairs.size());
  r.check("C(xy) = C(x) ∩ C(y) as element sets", {computed("violations", set_violations)},
          "C_G(xy) = C_G(x) ∩ C_G(y)", set_violations == 0);
  r.check("|(xy)^G| ≤ |x^G|·|y^G|", {computed("violations", bound_violations)},
          "|(xy)^G| ≤ |x^G|·|y^G|", bound_violations == 0);
  r.check("lcm(|x^G|, |y^G|) divides |(xy)^G|", {computed("violations", lcm_violations)},
          "lcm(|x^G|, |y^G|) | |(xy)^G|", lcm_violations == 0);

  // Cross-check the coordinatewise shortcut on a few pairs by filtering all
  // of A6×A6.
  const std::size_t full = std::min<std::size_t>(pairs.size(), 8);
  std::size_t full_violations = 0;
  for (std::size_t k = 0; k < full; ++k) {
    const auto& [x, y] = pairs[k];
    const auto xy = compose(x, y);
    std::uint64_t disagree = 0;
    g.for_each_element([&](const Permutation& h) {
      disagree += (commute(h, x) && commute(h, y)) != commute(h, xy);
      return true;
    }, opt.enumeration_bound);
    full_violations += disagree != 0;
  }
  r.check("full-group filter agrees on the first pairs",
          {computed("pairs filtered over all 129600 elements", full), computed("violations", full_violations)},
          "C_G(xy) = C_G(x) ∩ C_G(y)", full_violations == 0);
  if (first_bad)
    r.check("first violating pair", {computed("x", to_cycle_string(pairs[*first_bad].x)),
            computed("y", to_cycle_string(pairs[*first_bad].y))}, "none", false);
  return r;
}

// ---------------------------------------------------------------------------
// Index lemma: a p-element in C(x) with a smaller p-part of its class size.

struct IndexCase {
  std::string group;
  std::uint64_t prime;
  std::string x;
  std::uint64_t x_class;
  std::optional<std::string> y;
  std::uint64_t y_class = 0;
  bool found = false;
};

/// For every class rep x with 1 < |x^G|_p < |G|_p, search C_G(x) for a
/// p-element y ≠ 1 with |y^G|_p ≤ |x^G|_p / p; when x is a p'-element, y must
/// also satisfy |(xy)^G|_p = |x^G|_p. Returns one row per applicable case.
inline std::vector<IndexCase> index_cases(const std::string& name, const ClassPartition& classes,
                                          const std::vector<std::uint64_t>& primes, std::uint64_t bound) {
  const auto& g = classes.group();
  std::vector<IndexCase> out;
  for (const auto& c : classes.classes()) {
    std::vector<Permutation> cent;
    bool have_cent = false;
    for (auto p : primes) {
      const auto part = c.size.p_part(p);
      if (part.value() == 1 || !(part < g.order().p_part(p)))
        continue;
      if (!have_cent) {
        cent = centralizer_element_list(g, c.representative, bound);
        have_cent = true;
      }
      IndexCase row{name, p, to_cycle_string(c.representative), c.size.value(), std::nullopt};
      const bool p_prime = element_order(c.representative).p_part(p).value() == 1;
      for (const auto& y : cent) {
        if (y.is_identity() || !is_p_element(y, p))
          continue;
        const auto yc = classes.class_size(y);
        if (!(yc.p_part(p) * FactoredNatural{p}).divides(part))
          continue;
        if (p_prime && classes.class_size(compose(c.representative, y)).p_part(p) != part)
          continue;
        row.found = true;
        row.y = to_cycle_string(y);
        row.y_class = yc.value();
        break;
      }
      out.push_back(std::move(row));
    }
  }
  return out;
}

inline LemmaReport check_index(ReplayContext& ctx) {
  LemmaReport r("index", "p-elements in centralizers with smaller p-parts of class sizes");
  const std::vector<std::uint64_t> primes{2, 3, 5};
  const auto bound = ctx.options().enumeration_bound;
  const auto s6 = symmetric(6);
  const ClassPartition s6_classes(s6, bound);
  struct Item {
    std::string name;
    const ClassPartition* classes;
  };
  for (const Item& it : {Item{"A6", &ctx.a6_classes()}, Item{"S6", &s6_classes},
                         Item{"A6×A6", &ctx.a6xa6_classes()}}) {
    const auto rows = index_cases(it.name, *it.classes, primes, bound);
    Json table = Json::array();
    std::size_t missing = 0;
    for (const auto& row : rows) {
      missing += !row.found;
      table.push_back(Json::array({row.prime, row.x, row.x_class, row.y ? Json(*row.y) : Json(nullptr), row.y_class}));
    }
    r.check(it.name + ": every applicable class has a witness y",
            {computed("classes", it.classes->classes().size()), computed("applicable cases", rows.size()),
             computed("[p, x, |x^G|, y, |y^G|]", table), computed("missing", missing)},
            "∃ p-element y ∈ C(x) \\ {1}: |y^G|_p ≤ |x^G|_p / p", missing == 0 && !rows.empty());
  }
  return r;
}

// ---------------------------------------------------------------------------
// The block swap in H ≀ 2 has |H| conjugates.

inline LemmaReport check_wreath(ReplayContext& ctx) {
  LemmaReport r("wreath", "the swapping involution of H≀2 has exactly |H| conjugates");
  const auto bound = ctx.options().enumeration_bound;
  struct Item {
    std::string name;
    PermutationGroup h;
  };
  std::vector<Item> items{{"1", trivial_group(1)},
                          {"S3", symmetric(3)},
                          {"A5", alternating(5)},
                          {"A6", ctx.a6()},
                          {"Aut(A6)", pgammal_2_9().group}};
  for (const auto& it : items) {
    const auto w = wreath_by_involution(it.h);
    const auto& order = it.h.order();
    const auto orbit = conjugation_orbit(w.swap, w.group.generators()).size;
    r.check("H = " + it.name + ": |H≀2| = 2|H|^2",
            {computed("|H|", order.value()), computed("|H≀2|", w.group.order().value())},
            "|H≀2| = " + instance_detail::num(2 * order.value() * order.value()),
            w.group.order() == order * order * FactoredNatural{2});
    r.check("H = " + it.name + ": orbit of a under conjugation",
            {computed("|a^G|", orbit.value()), computed("|H|", order.value())}, "|a^G| = |H|",
            orbit == order);
    // Cross-check against the full class partition when it fits.
    if (w.group.order().value() <= bound) {
      const ClassPartition classes(w.group, bound);
      const auto& size = classes.class_size(w.swap);
      r.check("H = " + it.name + ": class of a in the full class partition",
              {computed("classes", classes.classes().size()), computed("|a^G|", size.value())},
              "|a^G| = |H| by enumeration of all " + instance_detail::num(w.group.order().value()) + " elements",
              size == order);
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Coprime action on elementary abelian groups: V = C_V(A) ⊕ [V, A].

inline LemmaReport check_gor(ReplayContext&) {
  LemmaReport r("gor", "coprime action splits V = C_V(A) ⊕ [V, A]");
  for (unsigned order : {2u, 3u}) {
    for (std::size_t d = 1; d <= 3; ++d) {
      std::size_t count = 0, failures = 0, odd = 0;
      for_each_matrix_of_prime_order(5, d, order, [&](const FieldMatrix& m) {
        const LinearAction act(5, d, {m});
        ++count;
        failures += !check_decomposition(act);
        odd += order == 3 && commutator_subspace(act).dimension() % 2 != 0;
      });
      const std::string label = "order-" + instance_detail::num(order) + " matrices on F5^" +
                                instance_detail::num(d);
      r.check(label + ": decomposition", {computed("matrices", count), computed("failures", failures)},
              "C_V(w) ⊕ [V, w] = V for every w", failures == 0 && (count > 0 || (order == 3 && d == 1)));
      if (order == 3)
        r.check(label + ": [V, w] has even dimension", {computed("odd dimensions", odd)},
                "dim [V, w] ≡ 0 (mod 2)", odd == 0);
    }
  }
  // x^4 + x^3 + x^2 + x + 1 is irreducible over F2 and F3, so its companion
  // matrix has order 5 and fixes only 0.
  for (unsigned p : {2u, 3u}) {
    const auto m = companion_matrix(p, {1, 1, 1, 1});
    const LinearAction act(p, 4, {m});
    const auto fixed = fixed_subspace(act).dimension();
    const auto comm = commutator_subspace(act).dimension();
    r.check("order-5 companion matrix on F" + instance_detail::num(p) + "^4",
            {computed("|A|", act.group_order()), computed("dim C_V(A)", fixed), computed("dim [V, A]", comm)},
            "C_V(A) = 0 and [V, A] = V", act.group_order() == 5 && fixed == 0 && comm == 4 &&
                check_decomposition(act));
  }
  {
    // A 3-element fixing a line on F5^3: identity ⊕ a free 2-dimensional block.
    const auto free = companion_matrix(5, {1, 1});
    const auto one = FieldMatrix::identity(free.field_ptr(), 1);
    const LinearAction act(5, 3, {block_sum(one, free)});
    const auto fixed = fixed_subspace(act).dimension();
    const auto comm = commutator_subspace(act).dimension();
    r.check("identity ⊕ free block on F5^3", {computed("dim C_V(A)", fixed), computed("dim [V, A]", comm)},
            "dim C_V(A) = 1, dim [V, A] = 2", fixed == 1 && comm == 2 && check_decomposition(act));
  }
  {
    // Not coprime: a unipotent element of order 5 on F5^2.
    const auto f5 = std::make_shared<const GaloisField>(5);
    const LinearAction act(5, 2, {FieldMatrix(f5, 2, {1, 1, 0, 1})});
    bool refused = false;
    try {
      check_decomposition(act);
    } catch (const CoprimalityViolated&) {
      refused = true;
    }
    r.check("a 5-element on F5^2 is refused", {computed("|A|", act.group_order())},
            "check_decomposition raises CoprimalityViolated", refused);
  }
  return r;
}

} // namespace classlab

#endif
