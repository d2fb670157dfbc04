// Acceptance run: one line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <classlab/classlab.hpp>

using namespace classlab;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

std::string fmt(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << s << "s";
  return os.str();
}

std::string str(const ClassSizeSet& s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

Verdict criterion1() {
  const auto t = Clock::now();
  const auto n = all_class_sizes(alternating(6));
  const double dt = seconds_since(t);
  return {n == ClassSizeSet{1, 40, 45, 72, 90} && dt < 1.0, "N(A6) = " + str(n) + " in " + fmt(dt)};
}

Verdict criterion2() {
  const auto a6 = alternating(6);
  const auto n6 = all_class_sizes(a6);
  const auto t = Clock::now();
  const auto g = direct_product(a6, a6);
  const auto n = all_class_sizes(g);
  const double dt = seconds_since(t);
  return {n == product_nset(n6, n6) && n.size() == 15 && g.order().value() == 129600 && dt < 60.0,
          std::to_string(n.size()) + " sizes from " + std::to_string(g.order().value()) + " elements in " +
              fmt(dt)};
}

Verdict criterion3(const ClassSizeSet& target) {
  const auto t = Clock::now();
  const auto w6 = wreath_by_involution(alternating(6));
  const auto a6 = ClassPartition(w6.group).class_size(w6.swap);
  const auto wa = wreath_by_involution(pgammal_2_9().group);
  const auto aut = ClassPartition(wa.group).class_size(wa.swap);
  const double dt = seconds_since(t);
  const bool ok = a6.value() == 360 && aut.value() == 1440 && wa.group.order().value() == 4147200 &&
                  !target.contains(a6) && !target.contains(aut);
  return {ok, "|a^(A6 wr 2)| = " + std::to_string(a6.value()) + ", |a^(Aut(A6) wr 2)| = " +
                  std::to_string(aut.value()) + " over " + std::to_string(wa.group.order().value()) +
                  " elements, neither in N, " + fmt(dt)};
}

Verdict criterion4() {
  const auto& aut = pgammal_2_9();
  bool ok = aut.group.order().value() == 1440 && aut.socle.order().value() == 360 &&
            all_class_sizes(aut.socle) == ClassSizeSet{1, 40, 45, 72, 90};
  const auto ts = index_two_overgroups(aut.group, aut.socle);
  std::set<std::vector<std::uint64_t>> sets;
  const ClassPartition socle_classes(aut.socle);
  std::string detail;
  for (const auto& t : ts) {
    ok = ok && t.order().value() == 720;
    sets.insert(all_class_sizes(t).values());
    std::uint64_t best = 1;
    for (const auto& c : socle_classes.classes())
      best = std::max(best, conjugation_orbit(c.representative, t.generators()).size.p_part(2).value());
    ok = ok && best >= 16;
    detail += std::string(detail.empty() ? "" : ", ") + to_string(classify_a6_extension(t)) +
              " 2-part " + std::to_string(best);
  }
  ok = ok && ts.size() == 3 && sets.size() == 3;
  return {ok, "orders 1440/360, " + std::to_string(ts.size()) + " overgroups of order 720 with " +
                  std::to_string(sets.size()) + " distinct class-size sets; " + detail};
}

Verdict criterion5(ReplayContext& ctx) {
  const auto& u = u4_2();
  const auto& nu = ctx.n_u4_2();
  const auto& n = ctx.target();
  std::vector<std::uint64_t> witnesses;
  for (const auto& c : nu) {
    bool none = true;
    for (const auto& a : ctx.n_a6())
      if (a.value() != 1)
        none = none && !divides_some(c * a, n);
    if (none)
      witnesses.push_back(c.value());
  }
  const bool ok = u.order().value() == 25920 && u.order().factorization_string() == "2^6·3^4·5" &&
                  center(u).is_trivial() && !witnesses.empty();
  std::string w;
  for (auto x : witnesses)
    w += (w.empty() ? "" : ", ") + std::to_string(x);
  return {ok, "|U4(2)| = " + u.order().factorization_string() + ", Z = 1, sizes c with c·a dividing no member "
              "of N for every nontrivial a in N(A6): " + w};
}

Verdict criterion6() {
  const auto t = Clock::now();
  ReplayContext fresh;
  const auto survivors = socle_survivors(socle_scan(fresh, 3));
  const double dt = seconds_since(t);
  std::string s;
  for (const auto& x : survivors)
    s += x;
  return {survivors == std::vector<std::string>{"A6×A6"} && dt < 300.0,
          "survivors [" + s + "] for k ≤ 3 in " + fmt(dt)};
}

Verdict criterion7(ReplayContext& ctx) {
  const auto e5 = replay_5e(ctx), o5 = replay_o5(ctx), o3 = replay_o3(ctx), o2 = replay_o2(ctx);
  const bool all = e5.passed() && o5.passed() && o3.passed() && o2.passed();
  const bool lemma7 = e5.find_relation("multiples_in(14400, N) = ∅") != nullptr;
  const bool lemma10 = o2.find_relation("multiples_in(14400, N) = ∅") != nullptr;
  const auto* scan = o3.find_relation("scan completed");
  const bool o3_empty = scan && scan->inputs[1].value.empty();
  const auto* closing = o5.find_relation("O_5(G) = 1");
  const bool o5_closed = closing && closing->result == classlab::Outcome::Pass;
  const bool no_multiple = multiples_in(FactoredNatural{14400}, ctx.target()).empty();
  return {all && lemma7 && lemma10 && o3_empty && o5_closed && no_multiple,
          "5e/O5/O3/O2 " + std::string(all ? "pass" : "fail") + ", O3 feasible combinations: " +
              (scan ? std::to_string(scan->inputs[1].value.size()) : "?") + " of " +
              (scan ? scan->inputs[0].value.dump() : "?")};
}

Verdict criterion8(ReplayContext& ctx) {
  const auto t = Clock::now();
  std::vector<std::pair<std::string, PermutationGroup>> groups{
      {"A5", alternating(5)},
      {"S5", symmetric(5)},
      {"A6", alternating(6)},
      {"S6", symmetric(6)},
      {"PSL(2,9)", pgammal_2_9().socle},
      {"PGammaL(2,9)", pgammal_2_9().group},
      {"U4(2)", u4_2()},
      {"A6xA6", ctx.a6xa6()}};
  for (const auto& e : a6_extensions())
    groups.emplace_back(to_string(e.type), e.group);
  std::size_t classes = 0, violations = 0;
  for (const auto& [name, g] : groups) {
    const ClassPartition p(g);
    const auto elems = g.elements();
    for (const auto& c : p.classes()) {
      std::uint64_t cent = 0;
      for (const auto& y : elems)
        cent += commute(c.representative, y);
      violations += c.size.value() * cent != g.order().value();
      ++classes;
    }
  }
  const auto big1 = check_big1(ctx), big2 = check_big2(ctx), index = check_index(ctx);
  const auto* pairs = big2.find_relation("every pair");
  const bool enough = pairs && pairs->inputs[0].value.get<std::uint64_t>() >= 10000;
  const bool ok = violations == 0 && big1.passed() && big2.passed() && index.passed() && enough;
  return {ok, "orbit-stabilizer on " + std::to_string(classes) + " classes of " + std::to_string(groups.size()) +
                  " groups (" + std::to_string(violations) + " violations); normal-subgroup " +
                  (big1.passed() ? "pass" : "fail") + "; " + (pairs ? pairs->inputs[0].value.dump() : "?") +
                  " commuting pairs " + (big2.passed() ? "pass" : "fail") + "; index " +
                  (index.passed() ? "pass" : "fail") + "; " + fmt(seconds_since(t))};
}

Verdict criterion9(ReplayContext& ctx) {
  const auto r = check_gor(ctx);
  std::size_t matrices = 0;
  for (const auto& a : r.assertions())
    if (a.relation.find("for every w") != std::string::npos)
      matrices += a.inputs[0].value.get<std::size_t>();
  return {r.passed(), std::to_string(matrices) + " order-2 and order-3 matrices on F5^d, d ≤ 3; " +
                          std::to_string(r.failures()) + " failures"};
}

Verdict criterion10() {
  const auto t = Clock::now();
  auto run = [] {
    ReplayContext ctx;
    std::string all;
    for (const auto& r : run_verifications(verify_ids(), ctx, 1))
      all += r.to_json().dump(2) + '\n';
    return all;
  };
  const auto first = run();
  const auto second = run();
  return {first == second, std::to_string(verify_ids().size()) + " reports, " + std::to_string(first.size()) +
                               " bytes, identical across two runs in " + fmt(seconds_since(t))};
}

} // namespace

int main() {
  ReplayContext ctx;
  const ClassSizeSet target = ctx.target();
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"N(A6) by class enumeration", criterion1},
      {"N(A6×A6) equals the product set", criterion2},
      {"wreath involution class sizes", [&] { return criterion3(target); }},
      {"PΓL(2,9), its socle and the three A6.2", criterion4},
      {"U4(2) order, center and elimination", [&] { return criterion5(ctx); }},
      {"socle scan up to k = 3", criterion6},
      {"replays 5e, O5, O3, O2", [&] { return criterion7(ctx); }},
      {"property suites", [&] { return criterion8(ctx); }},
      {"coprime-action decomposition", [&] { return criterion9(ctx); }},
      {"deterministic verify all", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict o{false, ""};
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << "criterion " << std::setw(2) << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  "
              << criteria[i].first << "  [" << o.detail << "]" << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
