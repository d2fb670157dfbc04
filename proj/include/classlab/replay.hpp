#ifndef CLASSLAB_REPLAY_HPP
#define CLASSLAB_REPLAY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "arithmetic.hpp"
#include "context.hpp"
#include "report.hpp"

namespace classlab {

namespace replay_detail {

inline std::string num(const FactoredNatural& n) { return std::to_string(n.value()); }
inline std::string num(std::uint64_t n) { return std::to_string(n); }

/// Least m ≥ 1 with base^m ≡ 1 (mod modulus).
inline unsigned multiplicative_order(std::uint64_t base, std::uint64_t modulus) {
  std::uint64_t x = base % modulus;
  for (unsigned m = 1; m <= modulus; ++m) {
    if (x == 1 % modulus)
      return m;
    x = x * base % modulus;
  }
  throw std::domain_error("base is not invertible modulo modulus");
}

/// Replays one argument against the target set N = N(A6×A6), keeping the
/// report and the derived numbers side by side.
class Replayer {
public:
  Replayer(LemmaReport& report, ReplayContext& ctx)
    : r_(report), ctx_(ctx), n_(ctx.target()), order_floor_(min_group_order(n_)) {}

  const ClassSizeSet& target() const noexcept { return n_; }

  /// The target set itself: N(A6) by enumeration, its product set, and
  /// agreement with a full enumeration of A6×A6.
  void establish_target(bool cross_check_enumeration) {
    const ClassSizeSet quoted_a6{1, 40, 45, 72, 90};
    r_.check("class sizes of A6 by full class enumeration",
             {computed("N(A6)", to_json(ctx_.n_a6())), quoted("N(A6)", to_json(quoted_a6))},
             "N(A6) = " + set_string(quoted_a6), ctx_.n_a6() == quoted_a6);
    r_.check("class sizes of A6×A6 as pairwise products of N(A6)",
             {computed("N", to_json(n_)), computed("|N|", n_.size())},
             "N = N(A6)·N(A6) has 15 members", n_.size() == 15);
    if (cross_check_enumeration)
      r_.check("product rule agrees with enumerating all 129600 elements of A6×A6",
               {computed("N(A6×A6) enumerated", to_json(ctx_.target_enumerated()))},
               "all_class_sizes(A6×A6) = product_nset(N(A6), N(A6))",
               ctx_.target_enumerated() == n_);
    r_.check("prime divisors of the class sizes",
             {computed("pi(N)", to_json(pi_of(n_)))}, "π(N) = {2, 3, 5}",
             pi_of(n_) == std::set<std::uint64_t>{2, 3, 5});
    r_.assume("the prime divisors of |G| are those of |A6×A6| (cited corollary)",
              {assumed("pi(G)", Json::array({2, 3, 5}))}, "π(G) = {2, 3, 5}");
    r_.check("every class size divides |G|, so |G| is a multiple of lcm(N)",
             {computed("lcm(N)", order_floor_.value()),
              computed("factorization", order_floor_.factorization_string())},
             "lcm(N) = 129600 = 2^6·3^4·5^2", order_floor_.value() == 129600);
  }

  bool check_member(const std::string& what, std::uint64_t value) {
    return r_.check(what, {computed("N", to_json(n_))}, num(value) + " ∈ N",
                    n_.contains(FactoredNatural{value}));
  }

  /// Index-lemma step: from an element whose class size lies in `sizes`,
  /// find a p-element in its centralizer with p-part at most p^(n-1), then
  /// drop candidates that admit no class size for the product of commuting
  /// coprime elements. Returns the surviving class sizes.
  ClassSizeSet index_step(const std::string& from, const ClassSizeSet& sizes, std::uint64_t p,
                          const std::string& to, const std::optional<ClassSizeSet>& quoted_candidates,
                          const ClassSizeSet& prune_against) {
    const FactoredNatural group_part = order_floor_.p_part(p);
    ClassSizeSet candidates;
    for (const auto& a : sizes) {
      const FactoredNatural part = a.p_part(p);
      const bool applies = part.value() > 1 && part < group_part;
      r_.check("index lemma applies to " + from + " at p = " + num(p),
               {computed("|" + from + "^G|", a.value()), computed("|G|_" + num(p) + " at least", group_part.value())},
               "1 < |" + from + "^G|_" + num(p) + " = " + num(part) + " < |G|_" + num(p), applies);
      const FactoredNatural bound = part / FactoredNatural{p};
      for (const auto& c : candidates_with_p_part_le(n_, p, bound))
        if (c.value() != 1)
          candidates.insert(c);
    }
    std::vector<ReportInput> in{computed("candidates", to_json(candidates))};
    if (quoted_candidates)
      in.push_back(quoted("candidates", to_json(*quoted_candidates)));
    r_.check("nontrivial " + num(p) + "-element " + to + " in C_G(" + from + ") with |" + to +
                 "^G|_" + num(p) + " ≤ |" + from + "^G|_" + num(p) + "/" + num(p),
             std::move(in), "|" + to + "^G| ∈ " + set_string(candidates),
             !quoted_candidates || *quoted_candidates == candidates);
    return prune(to, candidates, prune_against);
  }

  /// Keep the candidates c for which some a in `partners` leaves room for
  /// |(a-element · c-element)^G|: a member of N divisible by lcm(a, c) and
  /// at most a·c.
  ClassSizeSet prune(const std::string& label, const ClassSizeSet& candidates,
                     const ClassSizeSet& partners) {
    ClassSizeSet survivors;
    for (const auto& c : candidates) {
      bool any = false;
      for (const auto& a : partners) {
        auto f = coprime_pair_feasible(a, c, n_);
        if (f.feasible) {
          any = true;
          continue;
        }
        const auto mult = multiples_in(f.required_divisor, n_);
        r_.check("eliminate |" + label + "^G| = " + num(c) + " against a commuting coprime element with class size " + num(a),
                 {computed("lcm", f.required_divisor.value()),
                  computed("lcm factorization", f.required_divisor.factorization_string()),
                  computed("multiples in N", to_json(mult))},
                 "coprime_pair_feasible(" + num(a) + ", " + num(c) + ", N) = false; multiples_in(" +
                     num(f.required_divisor) + ", N) ∩ [1, " + num(a * c) + "] = ∅",
                 !f.feasible);
      }
      if (any)
        survivors.insert(c);
    }
    return survivors;
  }

  bool expect(const std::string& description, const ClassSizeSet& got, const ClassSizeSet& want,
              const std::string& label) {
    return r_.check(description, {computed(label, to_json(got)), quoted(label, to_json(want))},
                    label + " ∈ " + set_string(want), got == want);
  }

  /// Possible class sizes of a product of commuting coprime elements whose
  /// class sizes range over `a` and `b`: multiples of lcm, optionally with a
  /// fixed p-part and optionally capped by the product of the two sizes.
  ClassSizeSet product_sizes(const ClassSizeSet& a, const ClassSizeSet& b,
                             std::optional<std::pair<std::uint64_t, std::uint64_t>> fixed_part,
                             bool capped) {
    ClassSizeSet out;
    for (const auto& x : a)
      for (const auto& y : b)
        for (const auto& c : multiples_in(lcm(x, y), n_)) {
          if (fixed_part && c.p_part(fixed_part->first).value() != fixed_part->second)
            continue;
          if (capped && c > x * y)
            continue;
          out.insert(c);
        }
    return out;
  }

  void check_lcm(const FactoredNatural& a, const FactoredNatural& b, std::uint64_t quoted_value) {
    auto l = lcm(a, b);
    r_.check("least common multiple",
             {computed("lcm", l.value()), computed("factorization", l.factorization_string()),
              quoted("lcm", quoted_value)},
             "lcm(" + num(a) + ", " + num(b) + ") = " + num(quoted_value), l.value() == quoted_value);
  }

  bool check_no_multiple(const std::string& description, const FactoredNatural& d) {
    auto m = multiples_in(d, n_);
    return r_.check(description,
                    {computed("divisor", d.value()), computed("factorization", d.factorization_string()),
                     computed("multiples in N", to_json(m))},
                    "multiples_in(" + num(d) + ", N) = ∅", m.empty());
  }

  /// For a normal abelian p-subgroup V and an element w of prime order q
  /// acting fixed-point-freely on [V, w], |[V, w]| = p^m with q | p^m - 1,
  /// and |[V, w]| divides |w^G|_p. Returns true when this forces [V, w] = 1.
  bool free_action_forces_trivial(std::uint64_t p, std::uint64_t q, std::uint64_t w_class) {
    const unsigned step = multiplicative_order(p, q);
    r_.assume("coprime action splits V = C_V(w) × [V,w] and w acts freely on [V,w]",
              {assumed("p", p), assumed("|w|", q)}, "|[V,w]| - 1 ≡ 0 (mod " + num(q) + ")");
    const FactoredNatural w_part = FactoredNatural{w_class}.p_part(p);
    const std::uint64_t smallest = detail::ipow(p, step);
    return r_.check("a nontrivial [V,w] has order at least " + num(p) + "^" + num(step) +
                        ", which does not divide |w^G|_" + num(p),
                    {computed("multiplicative order of " + num(p) + " mod " + num(q), step),
                     computed("|w^G|_" + num(p), w_part.value())},
                    num(smallest) + " ∤ " + num(w_part) + ", so [V,w] = 1 and w centralizes V",
                    !FactoredNatural{smallest}.divides(w_part));
  }

  using Triple = std::array<std::uint64_t, 3>;

  /// Scans every combination of |(xy)^G|, |(xz)^G|, |(yz)^G| and returns
  /// those admitting a class size for xyz.
  std::vector<Triple> triple_scan(const ClassSizeSet& xy, const ClassSizeSet& xz,
                                  const ClassSizeSet& yz) {
    std::vector<Triple> feasible;
    Json infeasible = Json::array();
    for (const auto& a : xy)
      for (const auto& b : xz)
        for (const auto& c : yz) {
          auto f = coprime_triple_feasible(a, b, c, n_);
          if (f.feasible)
            feasible.push_back({a.value(), b.value(), c.value()});
          else
            infeasible.push_back(Json::array({a.value(), b.value(), c.value(), f.required_divisor.value()}));
        }
    Json feas = Json::array();
    for (const auto& t : feasible)
      feas.push_back(Json::array({t[0], t[1], t[2]}));
    r_.check("exhaustive scan of (|(xy)^G|, |(xz)^G|, |(yz)^G|): |(xyz)^G| must be a multiple of their lcm",
             {computed("combinations", xy.size() * xz.size() * yz.size()),
              computed("feasible", feas), computed("infeasible [xy, xz, yz, lcm]", infeasible)},
             "scan completed over " + num(xy.size() * xz.size() * yz.size()) + " combinations", true);
    return feasible;
  }

private:
  LemmaReport& r_;
  ReplayContext& ctx_;
  const ClassSizeSet& n_;
  FactoredNatural order_floor_;
};

inline ClassSizeSet set_of(std::initializer_list<std::uint64_t> v) { return ClassSizeSet(v); }

} // namespace replay_detail

/// There is a 5-element with class size 72 and a 3-element with class size 40.
inline LemmaReport replay_5e(ReplayContext& ctx) {
  using replay_detail::set_of;
  LemmaReport r("5e", "a 5-element with |x^G| = 72 and a 3-element with |u^G| = 40 exist");
  replay_detail::Replayer rp(r, ctx);
  rp.establish_target(true);
  r.assume("G has trivial center, so a nontrivial element has class size > 1", {},
           "Z(G) = 1");

  // x of prime order with |x^G| = 72.
  rp.check_member("72 is a class size", 72);
  r.assume("some element x of prime order has |x^G| = 72", {assumed("|x^G|", 72)},
           "∃x: |x| ∈ {2, 3, 5}, |x^G| = 72");

  // |x| = 2: a 3-element y in C(x), then a 5-element z in C(y).
  {
    const auto x = set_of({72});
    auto y = rp.index_step("x", x, 3, "y", set_of({40, 1600}), x);
    rp.check_lcm(FactoredNatural{1600}, FactoredNatural{72}, 14400);
    r.check("1600 and 72 admit no common class size", {},
            "coprime_pair_feasible(1600, 72, N) = false",
            !coprime_pair_feasible(1600, 72, rp.target()).feasible);
    rp.check_no_multiple("no member of N is a multiple of lcm(40^2, 72) = 120^2",
                         lcm(FactoredNatural{1600}, FactoredNatural{72}));
    rp.expect("case |x| = 2: the 3-element y has class size 40", y, set_of({40}), "|y^G|");
    auto z = rp.index_step("y", y, 5, "z", set_of({72, 5184}), y);
    rp.check_no_multiple("72^2 is excluded: no multiple of lcm(40, 72^2) = 72^2·5",
                         lcm(FactoredNatural{40}, FactoredNatural{5184}));
    r.check("72^2·5 = 25920", {computed("72^2·5", 5184 * 5)}, "72^2·5 = 25920", 5184 * 5 == 25920);
    rp.expect("case |x| = 2: the 5-element z has class size 72", z, set_of({72}), "|z^G|");
  }
  // |x| = 3: a 2-element y in C(x), then a 5-element z in C(y).
  {
    const auto x = set_of({72});
    auto y = rp.index_step("x", x, 2, "y", set_of({45, 90, 2025, 4050, 8100}), x);
    rp.expect("case |x| = 3: the 2-element y has class size 45 or 90", y, set_of({45, 90}), "|y^G|");
    auto z = rp.index_step("y", y, 5, "z", set_of({72, 5184}), y);
    rp.expect("case |x| = 3: the 5-element z has class size 72", z, set_of({72}), "|z^G|");
  }

  // u of prime order with |u^G| = 40.
  rp.check_member("40 is a class size", 40);
  r.assume("some element u of prime order has |u^G| = 40", {assumed("|u^G|", 40)},
           "∃u: |u| ∈ {2, 3, 5}, |u^G| = 40");
  // |u| = 2: a 5-element y in C(u) with |y^G| = 72, then a 3-element z in C(y).
  {
    const auto u = set_of({40});
    auto y = rp.index_step("u", u, 5, "y", set_of({72, 5184}), u);
    rp.expect("case |u| = 2: the 5-element y has class size 72", y, set_of({72}), "|y^G|");
    auto z = rp.index_step("y", y, 3, "z", set_of({40, 1600}), y);
    rp.expect("case |u| = 2: the 3-element z has class size 40", z, set_of({40}), "|z^G|");
  }
  // |u| = 5: a 2-element y in C(u), then a 3-element z in C(y).
  {
    const auto u = set_of({40});
    auto y = rp.index_step("u", u, 2, "y", set_of({45, 90, 2025, 4050, 8100}), u);
    rp.expect("case |u| = 5: the 2-element y has class size 45 or 90", y, set_of({45, 90}), "|y^G|");
    auto z = rp.index_step("y", y, 3, "z", set_of({40, 1600}), y);
    rp.expect("case |u| = 5: the 3-element z has class size 40", z, set_of({40}), "|z^G|");
  }
  return r;
}

/// O_5(G) = 1.
inline LemmaReport replay_o5(ReplayContext& ctx) {
  using replay_detail::set_of;
  LemmaReport r("O5", "no nontrivial normal abelian 5-subgroup V");
  replay_detail::Replayer rp(r, ctx);
  rp.establish_target(false);
  r.assume("suppose V is a nontrivial normal abelian 5-subgroup of G", {}, "V ⊴ G, V ≠ 1");
  r.assume("a 3-element w with |w^G| = 40 exists (established in the 5e replay)", {assumed("|w^G|", 40)}, "|w^G| = 40");
  rp.free_action_forces_trivial(5, 3, 40);

  // y ∈ V ∩ Z(P), P a Sylow 5-subgroup: |y^G|_5 = 1.
  r.assume("y ∈ V ∩ Z(P) \\ {1} for a Sylow 5-subgroup P, so |y^G|_5 = 1", {}, "|y^G|_5 = 1");
  auto y = rp.prune("y", without(candidates_with_p_part_le(rp.target(), 5, 1), set_of({1})),
                    set_of({40}));
  rp.check_lcm(FactoredNatural{40}, FactoredNatural{5184}, 25920);
  rp.expect("the 5-element y ∈ V has class size 72", y, set_of({72}), "|y^G|");

  auto z = rp.index_step("y", y, 2, "z", set_of({45, 90, 2025, 4050, 8100}), y);
  rp.check_lcm(FactoredNatural{72}, FactoredNatural{2025}, 16200);
  r.check("45^2·2^3 = 16200", {}, "45^2·2^3 = 16200", 2025 * 8 == 16200);
  rp.expect("the 2-element z has class size 45 or 90", z, set_of({45, 90}), "|z^G|");
  rp.check_lcm(FactoredNatural{72}, FactoredNatural{45}, 360);

  auto yz = rp.product_sizes(y, z, std::make_pair(2ull, 8ull), false);
  rp.expect("|(yz)^G| is a multiple of 360 with 2-part |y^G|_2 = 8", yz, set_of({1800, 3240}),
            "|(yz)^G|");

  auto x = rp.index_step("z", z, 3, "x", set_of({40, 1600}), z);
  rp.check_no_multiple("40^2 is excluded: no multiple of 40^2·3^2 in N",
                       FactoredNatural{1600} * FactoredNatural{9});
  rp.expect("the 3-element x has class size 40", x, set_of({40}), "|x^G|");
  auto xz = rp.product_sizes(x, z, std::make_pair(3ull, 9ull), false);
  rp.expect("|(xz)^G| is a multiple of 360 with 3-part |z^G|_3 = 9", xz, set_of({1800, 2880, 3600}),
            "|(xz)^G|");

  r.assume("x centralizes V (same argument as for w), so x ∈ C_G(y)", {}, "[x, y] = 1");
  auto xy = rp.product_sizes(x, y, std::nullopt, true);
  rp.expect("|(xy)^G| ≤ 40·72 and a multiple of 360", xy, set_of({1800, 2880}), "|(xy)^G|");

  auto feasible = rp.triple_scan(xy, xz, yz);
  std::vector<replay_detail::Replayer::Triple> expected{{1800, 1800, 1800}, {1800, 3600, 1800}};
  Json fj = Json::array();
  for (const auto& t : feasible)
    fj.push_back(Json::array({t[0], t[1], t[2]}));
  r.check("the surviving combinations are |(xy)^G| = |(yz)^G| = 40·45, |(xz)^G| ∈ {40·45, 40·90}",
          {computed("feasible", fj)}, "feasible (xy, xz, yz) = {(1800, 1800, 1800), (1800, 3600, 1800)}",
          feasible == expected);
  ClassSizeSet xz_left;
  for (const auto& t : feasible)
    xz_left.insert(FactoredNatural{t[1]});

  r.assume("a Sylow 5-subgroup Q of C_G(xy) ∩ C_G(z) contains V, hence V ≤ C_G(z)", {},
           "V ≤ Q ≤ C_G(z)");
  r.assume("u ∈ V ∩ Z(P) \\ {1} with P ⊇ a Sylow 5-subgroup of C_G(x); |u^G| = 72 as for y", {},
           "|u^G| = 72, |(xu)^G|_5 = |x^G|_5 = 5");
  auto xu = rp.product_sizes(x, set_of({72}), std::make_pair(5ull, 5ull), true);
  rp.expect("|(xu)^G| = 40·72", xu, set_of({2880}), "|(xu)^G|");
  bool closed = !xz_left.empty();
  for (const auto& c : xz_left) {
    rp.check_lcm(FactoredNatural{2880}, c, 14400);
    closed = rp.check_no_multiple("|(xuz)^G| would be a multiple of lcm(|(xu)^G|, |(xz)^G|) = 2^6·3^2·5^2",
                                  lcm(FactoredNatural{2880}, c)) && closed;
  }
  r.check("every surviving case is contradictory", {}, "O_5(G) = 1", closed);
  return r;
}

/// O_3(G) = 1.
inline LemmaReport replay_o3(ReplayContext& ctx) {
  using replay_detail::set_of;
  LemmaReport r("O3", "no nontrivial normal abelian 3-subgroup V");
  replay_detail::Replayer rp(r, ctx);
  rp.establish_target(false);
  r.assume("suppose V is a nontrivial normal abelian 3-subgroup of G", {}, "V ⊴ G, V ≠ 1");
  r.assume("a 5-element w with |w^G| = 72 exists (established in the 5e replay)", {assumed("|w^G|", 72)}, "|w^G| = 72");
  rp.free_action_forces_trivial(3, 5, 72);

  r.assume("y ∈ V ∩ Z(P) \\ {1} for a Sylow 3-subgroup P, so |y^G|_3 = 1", {}, "|y^G|_3 = 1");
  auto y = rp.prune("y", without(candidates_with_p_part_le(rp.target(), 3, 1), set_of({1})),
                    set_of({72}));
  rp.expect("the 3-element y ∈ V has class size 40", y, set_of({40}), "|y^G|");

  auto z = rp.index_step("y", y, 2, "z", set_of({45, 90, 2025, 4050, 8100}), y);
  rp.expect("the 2-element z has class size 45 or 90", z, set_of({45, 90}), "|z^G|");
  auto yz = rp.product_sizes(y, z, std::make_pair(2ull, 8ull), false);
  rp.expect("|(yz)^G| is a multiple of 360 with 2-part 8", yz, set_of({1800, 3240}), "|(yz)^G|");

  auto x = rp.index_step("z", z, 5, "x", set_of({72, 5184}), z);
  rp.check_no_multiple("72^2 is excluded: no multiple of 72^2·5 in N",
                       FactoredNatural{5184} * FactoredNatural{5});
  rp.expect("the 5-element x has class size 72", x, set_of({72}), "|x^G|");
  auto xz = rp.product_sizes(x, z, std::make_pair(5ull, 5ull), false);
  rp.expect("|(xz)^G| is a multiple of 360 with 5-part 5", xz, set_of({2880, 3240, 6480}),
            "|(xz)^G|");

  r.assume("x centralizes V (same argument as for w), so x ∈ C_G(y)", {}, "[x, y] = 1");
  auto xy = rp.product_sizes(x, y, std::nullopt, true);
  rp.expect("|(xy)^G| ≤ 40·72 and a multiple of 360", xy, set_of({1800, 2880}), "|(xy)^G|");

  auto feasible = rp.triple_scan(xy, xz, yz);
  r.check("no combination leaves a class size for xyz",
          {computed("feasible combinations", feasible.size()),
           computed("combinations scanned", xy.size() * xz.size() * yz.size())},
          "O_3(G) = 1: no feasible combination",
          feasible.empty() && xy.size() * xz.size() * yz.size() == 12);
  return r;
}

/// O_2(G) = 1.
inline LemmaReport replay_o2(ReplayContext& ctx) {
  using replay_detail::set_of;
  LemmaReport r("O2", "no nontrivial normal abelian 2-subgroup V");
  replay_detail::Replayer rp(r, ctx);
  rp.establish_target(false);
  r.assume("suppose V is a nontrivial normal abelian 2-subgroup of G", {}, "V ⊴ G, V ≠ 1");
  r.assume("a 5-element w with |w^G| = 72 exists (established in the 5e replay)", {assumed("|w^G|", 72)}, "|w^G| = 72");
  rp.free_action_forces_trivial(2, 5, 72);

  r.assume("y ∈ V ∩ Z(P) \\ {1} for a Sylow 2-subgroup P, so |y^G|_2 = 1", {}, "|y^G|_2 = 1");
  auto y = rp.prune("y", without(candidates_with_p_part_le(rp.target(), 2, 1), set_of({1})),
                    set_of({72}));
  rp.expect("the 2-element y ∈ V has class size 45", y, set_of({45}), "|y^G|");

  auto z = rp.index_step("y", y, 3, "z", set_of({40, 1600}), y);
  rp.check_no_multiple("40^2 is excluded: no multiple of 40^2·3^2 in N",
                       FactoredNatural{1600} * FactoredNatural{9});
  rp.expect("the 3-element z has class size 40", z, set_of({40}), "|z^G|");
  auto yz = rp.product_sizes(y, z, std::nullopt, true);
  rp.expect("|(yz)^G| ≤ 40·45 and a multiple of 360", yz, set_of({1800}), "|(yz)^G|");

  auto x = rp.index_step("z", z, 5, "x", set_of({72, 5184}), z);
  rp.check_no_multiple("72^2 is excluded: no multiple of 72^2·5 in N",
                       FactoredNatural{5184} * FactoredNatural{5});
  rp.expect("the 5-element x has class size 72", x, set_of({72}), "|x^G|");
  auto xz = rp.product_sizes(x, z, std::make_pair(5ull, 5ull), true);
  rp.expect("|(xz)^G| = 40·72", xz, set_of({2880}), "|(xz)^G|");

  r.assume("x centralizes V (same argument as for w), so x, y, z commute pairwise", {},
           "[x, y] = [x, z] = [y, z] = 1");
  bool closed = !xz.empty() && !yz.empty();
  for (const auto& a : xz)
    for (const auto& b : yz) {
      auto l = lcm(a, b);
      r.check("lcm(|(xz)^G|, |(yz)^G|) = 40·72·5",
              {computed("lcm", l.value()), quoted("40·72·5", 40 * 72 * 5)},
              "lcm(" + replay_detail::num(a) + ", " + replay_detail::num(b) + ") = 14400",
              l.value() == 40 * 72 * 5);
      closed = rp.check_no_multiple("|(xyz)^G| would be a multiple of 40·72·5", l) && closed;
    }
  r.check("the only case is contradictory", {}, "O_2(G) = 1", closed);
  return r;
}


namespace replay_detail {

/// The socle element of S with the largest 2-part of its class size under
/// the overgroup generated by S and `outer`.
struct SocleChoice {
  Permutation element;
  FactoredNatural socle_class;
  FactoredNatural overgroup_class;
};

inline SocleChoice widest_two_part(const ClassPartition& socle_classes,
                                   const std::vector<Permutation>& overgroup_gens) {
  std::optional<SocleChoice> best;
  for (const auto& c : socle_classes.classes()) {
    auto orbit = conjugation_orbit(c.representative, overgroup_gens).size;
    if (!best || orbit.p_part(2) > best->overgroup_class.p_part(2))
      best = SocleChoice{c.representative, c.size, orbit};
  }
  return *best;
}

} // namespace replay_detail

/// G ≅ A6×A6: the wreath case and the direct case (S1×S2).2 are both
/// contradictory.
inline LemmaReport replay_final(ReplayContext& ctx) {
  using replay_detail::num;
  LemmaReport r("final", "no group strictly between A6×A6 and Aut(A6×A6) has the class sizes of A6×A6");
  const ClassSizeSet& n = ctx.target();
  const FactoredNatural max_two = max_p_part(n, 2);
  r.check("largest 2-part among the class sizes", {computed("N", to_json(n)), computed("max 2-part", max_two.value())},
          "max_p_part(N, 2) = 64", max_two.value() == 64);
  r.assume("S1×S2 ≤ G ≤ Aut(S1×S2) = Aut(A6)≀⟨a⟩ (socle lemma and the standard automorphism group)", {},
           "A6×A6 ≤ G ≤ Aut(A6)≀2");

  const auto& aut = pgammal_2_9();
  r.check("the constructed PΓL(2,9) and its socle", {computed("|PΓL(2,9)|", aut.group.order().value()),
          computed("|PSL(2,9)|", aut.socle.order().value())}, "1440 and 360", aut.group.order().value() == 1440 &&
          aut.socle.order().value() == 360);

  // Wreath case.
  struct Named {
    std::string name;
    const PermutationGroup* group;
  };
  std::vector<Named> tops{{"A6", &aut.socle}};
  for (const auto& e : a6_extensions())
    tops.push_back({to_string(e.type), &e.group});
  tops.push_back({"PΓL(2,9)", &aut.group});
  for (const auto& h : tops) {
    const auto w = wreath_by_involution(*h.group);
    const auto a_class = conjugation_orbit(w.swap, w.group.generators()).size;
    const auto& order = h.group->order();
    r.check("wreath case H = " + h.name + ": the swap a has |H| conjugates",
            {computed("|H|", order.value()), computed("|H≀2|", w.group.order().value()),
             computed("|a^G|", a_class.value())},
            "|a^{H≀⟨a⟩}| = |H| = " + num(order), a_class == order &&
                w.group.order() == order * order * FactoredNatural{2});
    r.check("wreath case H = " + h.name + ": |H| is not a class size", {computed("N", to_json(n))},
            num(order) + " ∉ N", !n.contains(order));
  }

  // Direct case: the three A6.2 types.
  const ClassPartition socle_classes(aut.socle);
  CosetAction cosets(aut.group, aut.socle);
  const auto& reps = cosets.representatives();
  const auto& ext = a6_extensions();
  r.check("PΓL(2,9)/PSL(2,9) has four cosets and three intermediate groups",
          {computed("index", cosets.index()), computed("overgroups", ext.size())}, "|PΓL:PSL| = 4",
          cosets.index() == 4 && ext.size() == 3 && aut.socle.contains(reps[0]));
  for (std::size_t i = 0; i < ext.size(); ++i) {
    const auto pick = replay_detail::widest_two_part(socle_classes, ext[i].group.generators());
    const auto two = pick.overgroup_class.p_part(2);
    const std::string t = to_string(ext[i].type);
    r.check("socle element with a large 2-part in " + t,
            {computed("x", to_cycle_string(pick.element)), computed("|x^T|", pick.overgroup_class.value()),
             computed("|x^S|", pick.socle_class.value())},
            "|x^" + t + "|_2 = " + num(two) + " > 8", two.value() > 8);
    r.check("C_T(x) = C_S(x) in " + t, {computed("|C_T(x)|", (ext[i].group.order() / pick.overgroup_class).value()),
            computed("|C_S(x)|", (aut.socle.order() / pick.socle_class).value())},
            "|x^T| = 2·|x^S|", pick.overgroup_class == pick.socle_class * FactoredNatural{2});
  }

  // G1 = ⟨S1×S2, (φ1, φ2)⟩ with φ1 outer and φ2 arbitrary: 3·4 cases.
  std::vector<Permutation> base_gens;
  const auto id10 = Permutation::identity(aut.socle.degree());
  for (const auto& s : aut.socle.generators()) {
    base_gens.push_back(pair_element(s, id10));
    base_gens.push_back(pair_element(id10, s));
  }
  bool all_exceed = true;
  for (std::size_t i = 1; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j) {
      auto gens1 = aut.socle.generators();
      gens1.push_back(reps[i]);
      auto gens2 = aut.socle.generators();
      gens2.push_back(reps[j]);
      const auto x1 = replay_detail::widest_two_part(socle_classes, gens1);
      const auto x2 = replay_detail::widest_two_part(socle_classes, gens2);
      auto g1_gens = base_gens;
      g1_gens.push_back(pair_element(reps[i], reps[j]));
      const PermutationGroup g1(g1_gens);
      const auto x = pair_element(x1.element, x2.element);
      const auto size = conjugation_orbit(x, g1.generators()).size;
      const auto two = size.p_part(2);
      const std::string label = "(φ" + num(i) + ", φ" + num(j) + ")";
      const bool ok = r.check(
          "direct case " + label + ": x = (x1, x2) has a class 2-part above every class size",
          {computed("|G1|", g1.order().value()), computed("|x1^<S,φ1>|", x1.overgroup_class.value()),
           computed("|x2^<S,φ2>|", x2.overgroup_class.value()), computed("|x^G1|", size.value())},
          "|x^G1|_2 = " + num(two) + " > 64 and " + num(x1.overgroup_class.p_part(2)) + "·" +
              num(x2.overgroup_class.p_part(2)) + " > 64",
          two > max_two && x1.overgroup_class.p_part(2) * x2.overgroup_class.p_part(2) > max_two &&
              g1.order().value() == 2 * 360 * 360);
      all_exceed = all_exceed && ok;
    }
  r.assume("G1 is normal in G, so |x^G1| divides |x^G|", {}, "|x^G1| | |x^G|");
  r.check("every case contradicts N(G) = N(A6×A6)", {}, "G = A6×A6", all_exceed);
  return r;
}

} // namespace classlab

#endif
