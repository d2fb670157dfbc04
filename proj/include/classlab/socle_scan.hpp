#ifndef CLASSLAB_SOCLE_SCAN_HPP
#define CLASSLAB_SOCLE_SCAN_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "arithmetic.hpp"
#include "constructions.hpp"
#include "context.hpp"
#include "report.hpp"

namespace classlab {

inline constexpr unsigned kMaxSocleFactors = 3;

/// One candidate simple factor of the socle.
struct SimpleFactor {
  std::string name;
  ClassSizeSet nset;
  FactoredNatural aut_order;
  Provenance aut_provenance;
};

struct SocleCandidate {
  std::vector<std::string> factors; ///< names, nondecreasing in factor-list order
  bool survives = false;
  std::string reason;               ///< empty for survivors
  FactoredNatural aut_order;

  std::string name() const {
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i)
      s += (i ? "×" : "") + factors[i];
    return s;
  }
};

/// A5, A6 and U4(2) with their class sizes and automorphism group orders.
/// |Aut(A5)| and |Aut(A6)| are the orders of the constructed S5 and PΓL(2,9);
/// |Aut(U4(2))| = 2·25920 is taken from the standard tables.
inline std::vector<SimpleFactor> socle_factors(ReplayContext& ctx) {
  return {
      {"A5", ctx.n_a5(), symmetric(5).order(), Provenance::Computed},
      {"A6", ctx.n_a6(), pgammal_2_9().group.order(), Provenance::Computed},
      {"U4(2)", ctx.n_u4_2(), FactoredNatural{2 * 25920}, Provenance::Assumption},
  };
}

namespace socle_detail {

inline std::uint64_t factorial(std::uint64_t m) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 2; i <= m; ++i)
    r *= i;
  return r;
}

/// |Aut(S1^m1 × ... × Sr^mr)| = ∏ |Aut(Si)|^mi · mi! for pairwise
/// non-isomorphic simple Si.
inline FactoredNatural aut_order(const std::vector<const SimpleFactor*>& fs) {
  std::map<std::string, std::pair<const SimpleFactor*, std::uint64_t>> mult;
  for (const auto* f : fs)
    ++mult.try_emplace(f->name, f, 0).first->second.second;
  FactoredNatural r;
  for (const auto& [name, entry] : mult) {
    for (std::uint64_t i = 0; i < entry.second; ++i)
      r = r * entry.first->aut_order;
    r = r * FactoredNatural{factorial(entry.second)};
  }
  return r;
}

inline void multisets(std::size_t kinds, std::size_t k, std::size_t first,
                      std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = first; i < kinds; ++i) {
    cur.push_back(i);
    multisets(kinds, k, i, cur, out);
    cur.pop_back();
  }
}

} // namespace socle_detail

/// Every product of k ≤ kmax factors from {A5, A6, U4(2)}, tested against
/// the target set N: a class size of M must divide one of G (so its p-parts
/// are bounded by those of N), and |G| must divide |Aut(M)| when M is the
/// socle. Records each test in `report` when given.
inline std::vector<SocleCandidate> socle_scan(ReplayContext& ctx, unsigned kmax,
                                              LemmaReport* report = nullptr) {
  if (kmax < 1 || kmax > kMaxSocleFactors)
    throw std::invalid_argument("kmax must be between 1 and " + std::to_string(kMaxSocleFactors));
  const auto factors = socle_factors(ctx);
  const ClassSizeSet& n = ctx.target();
  const FactoredNatural floor = min_group_order(n);
  // 5 first so that k ≥ 3 falls to the 5-part, then 2 for the U4(2) pairs.
  const auto prime_set = pi_of(n);
  std::vector<std::uint64_t> primes(prime_set.begin(), prime_set.end());
  std::sort(primes.begin(), primes.end(), [](auto a, auto b) {
    auto rank = [](std::uint64_t p) { return p == 5 ? 0 : p == 2 ? 1 : p; };
    return rank(a) < rank(b);
  });
  std::vector<SocleCandidate> out;

  for (unsigned k = 1; k <= kmax; ++k) {
    std::vector<std::vector<std::size_t>> combos;
    std::vector<std::size_t> cur;
    socle_detail::multisets(factors.size(), k, 0, cur, combos);
    for (const auto& combo : combos) {
      SocleCandidate c;
      std::vector<const SimpleFactor*> fs;
      ClassSizeSet nm{1};
      for (auto i : combo) {
        fs.push_back(&factors[i]);
        c.factors.push_back(factors[i].name);
        nm = product_nset(nm, factors[i].nset);
      }
      c.aut_order = socle_detail::aut_order(fs);
      const std::string name = c.name();

      // A class size of M with a p-part no class size of G reaches.
      std::optional<std::pair<std::uint64_t, FactoredNatural>> wide;
      for (auto p : primes) {
        const auto part = max_p_part(nm, p);
        if (part > max_p_part(n, p)) {
          wide = {p, part};
          break;
        }
      }
      std::optional<FactoredNatural> stray;
      for (const auto& m : nm)
        if (!divides_some(m, n)) {
          stray = m;
          break;
        }
      std::optional<std::uint64_t> short_prime;
      for (auto p : primes)
        if (floor.p_part(p) > c.aut_order.p_part(p)) {
          short_prime = p;
          break;
        }

      if (wide) {
        const auto p = wide->first;
        c.reason = "class size of M with " + std::to_string(p) + "-part " +
                   std::to_string(wide->second.value()) + " > " +
                   std::to_string(max_p_part(n, p).value()) + " = max " + std::to_string(p) +
                   "-part of N";
        if (report)
          report->check("eliminate M = " + name + " by a " + std::to_string(p) + "-part",
                        {computed("max |x^M|_" + std::to_string(p), wide->second.value()),
                         computed("max |x^G|_" + std::to_string(p), max_p_part(n, p).value())},
                        "|x^M|_" + std::to_string(p) + " = " + std::to_string(wide->second.value()) +
                            " > " + std::to_string(max_p_part(n, p).value()),
                        true);
      } else if (stray) {
        c.reason = "class size " + std::to_string(stray->value()) + " of M divides no member of N";
        if (report)
          report->check("eliminate M = " + name + " by divisibility",
                        {computed("|x^M|", stray->value())},
                        "divides_some(" + std::to_string(stray->value()) + ", N) = false", true);
      } else if (short_prime) {
        const auto p = *short_prime;
        c.reason = "|G|_" + std::to_string(p) + " ≥ " + std::to_string(floor.p_part(p).value()) +
                   " > " + std::to_string(c.aut_order.p_part(p).value()) + " = |Aut(M)|_" +
                   std::to_string(p);
        if (report) {
          std::vector<ReportInput> in{computed("|G|_" + std::to_string(p) + " at least", floor.p_part(p).value())};
          for (const auto* f : fs)
            in.push_back({"|Aut(" + f->name + ")|", f->aut_order.value(), f->aut_provenance});
          in.push_back(computed("|Aut(M)|", c.aut_order.value()));
          report->check("eliminate M = " + name + " by the order of Aut(M)", std::move(in),
                        "|G|_" + std::to_string(p) + " > |Aut(M)|_" + std::to_string(p), true);
        }
      } else {
        c.survives = true;
        if (report)
          report->check("M = " + name + " passes every test",
                        {computed("N(M)", to_json(nm)), computed("|Aut(M)|", c.aut_order.value())},
                        "N(M) ⊆ divisors of N and |G| can divide |Aut(M)|", true);
      }
      out.push_back(std::move(c));
    }
  }
  return out;
}

inline std::vector<std::string> socle_survivors(const std::vector<SocleCandidate>& scan) {
  std::vector<std::string> s;
  for (const auto& c : scan)
    if (c.survives)
      s.push_back(c.name());
  return s;
}

/// The socle M of G is A6×A6.
inline LemmaReport replay_socle_scan(ReplayContext& ctx, unsigned kmax = kMaxSocleFactors) {
  LemmaReport r("socle", "the socle is A6×A6");
  r.assume("O_p(G) = 1 for every p, so the socle M is a product of nonabelian simple groups", {},
           "M = S1×...×Sk");
  r.assume("each Si has order divisible only by 2, 3, 5 and lies in {A5, A6, U4(2)}",
           {assumed("candidates", Json::array({"A5", "A6", "U4(2)"}))}, "Si ∈ {A5, A6, U4(2)}");
  r.assume("|Aut(U4(2))| = 2·|U4(2)| (standard tables)", {assumed("|Aut(U4(2))|", 2 * 25920)},
           "|Aut(U4(2))| = 51840");
  r.check("class sizes of A5", {computed("N(A5)", to_json(ctx.n_a5()))}, "N(A5) = {1, 12, 15, 20}",
          ctx.n_a5() == ClassSizeSet{1, 12, 15, 20});
  r.check("class sizes of A6", {computed("N(A6)", to_json(ctx.n_a6()))}, "N(A6) = {1, 40, 45, 72, 90}",
          ctx.n_a6() == ClassSizeSet{1, 40, 45, 72, 90});
  const auto& nu = ctx.n_u4_2();
  r.check("order and class sizes of U4(2)",
          {computed("|U4(2)|", u4_2().order().value()), computed("N(U4(2))", to_json(nu))},
          "|U4(2)| = 25920 = 2^6·3^4·5", u4_2().order().value() == 25920);
  r.check("|Aut(A5)| and |Aut(A6)| from the constructed S5 and PΓL(2,9)",
          {computed("|S5|", symmetric(5).order().value()),
           computed("|PΓL(2,9)|", pgammal_2_9().group.order().value())},
          "120 and 1440",
          symmetric(5).order().value() == 120 && pgammal_2_9().group.order().value() == 1440);
  r.assume("M ⊴ G, so every |x^M| divides |x^G|, and C_G(M) = 1 so G embeds in Aut(M)", {},
           "|x^M| | |x^G|, |G| | |Aut(M)|");

  const auto scan = socle_scan(ctx, kmax, &r);
  const auto survivors = socle_survivors(scan);
  Json sj = Json::array();
  for (const auto& s : survivors)
    sj.push_back(s);
  const std::vector<std::string> expected =
      kmax >= 2 ? std::vector<std::string>{"A6×A6"} : std::vector<std::string>{};
  r.check("survivors of the scan up to k = " + std::to_string(kmax), {computed("survivors", sj)},
          kmax >= 2 ? "survivors = [A6×A6]" : "survivors = []", survivors == expected);
  return r;
}

} // namespace classlab

#endif
