#include <string>
#include <vector>

#include <gtest/gtest.h>

#include <classlab/verify.hpp>

using namespace classlab;

namespace {

ReplayContext& shared_context() {
  static ReplayContext ctx;
  return ctx;
}

bool has_relation(const LemmaReport& r, const std::string& text) { return r.find_relation(text) != nullptr; }

} // namespace

TEST(Report, VerdictIgnoresAssumptions) {
  LemmaReport r("t", "test");
  r.assume("taken on trust", {assumed("x", 1)}, "x = 1");
  EXPECT_TRUE(r.passed());
  r.check("holds", {computed("y", 2)}, "y = 2", true);
  EXPECT_TRUE(r.passed());
  r.check("fails", {quoted("z", 3)}, "z = 4", false);
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.failures(), 1u);
  const auto j = r.to_json();
  EXPECT_EQ(j["verdict"], "fail");
  EXPECT_EQ(j["assertions"][0]["id"], "t.1");
  EXPECT_EQ(j["assertions"][0]["tag"], "external-assumption");
  EXPECT_EQ(j["assertions"][0]["inputs"][0]["provenance"], "external-assumption");
  EXPECT_EQ(j["assertions"][1]["tag"], "checked");
  EXPECT_EQ(j["assertions"][2]["inputs"][0]["provenance"], "quoted");
}

TEST(Replay, LemmaFiveE) {
  const auto r = replay_5e(shared_context());
  EXPECT_TRUE(r.passed()) << r.to_text();
  EXPECT_TRUE(has_relation(r, "coprime_pair_feasible(1600, 72, N) = false"));
  EXPECT_TRUE(has_relation(r, "multiples_in(25920, N) = ∅"));
  EXPECT_TRUE(has_relation(r, "multiples_in(14400, N) = ∅"));
}

TEST(Replay, OFive) {
  const auto r = replay_o5(shared_context());
  EXPECT_TRUE(r.passed()) << r.to_text();
  EXPECT_TRUE(has_relation(r, "|(yz)^G| ∈ {1800, 3240}"));
  EXPECT_TRUE(has_relation(r, "|(xz)^G| ∈ {1800, 2880, 3600}"));
  EXPECT_TRUE(has_relation(r, "|(xy)^G| ∈ {1800, 2880}"));
  EXPECT_TRUE(has_relation(r, "|z^G| ∈ {45, 90, 2025, 4050, 8100}"));
  EXPECT_TRUE(has_relation(r, "25 ∤ 5"));
  const auto* closing = r.find_relation("multiples_in(14400, N) = ∅");
  ASSERT_NE(closing, nullptr);
  EXPECT_EQ(closing->inputs[1].value, "2^6·3^2·5^2");
}

TEST(Replay, OThreeScanFindsNothing) {
  const auto r = replay_o3(shared_context());
  EXPECT_TRUE(r.passed()) << r.to_text();
  const auto* scan = r.find_relation("scan completed");
  ASSERT_NE(scan, nullptr);
  EXPECT_EQ(scan->inputs[0].value, 12);
  EXPECT_TRUE(scan->inputs[1].value.empty());
  EXPECT_EQ(scan->inputs[2].value.size(), 12u);
}

TEST(Replay, OTwo) {
  const auto r = replay_o2(shared_context());
  EXPECT_TRUE(r.passed()) << r.to_text();
  EXPECT_TRUE(has_relation(r, "multiples_in(14400, N) = ∅"));
}

TEST(Replay, SocleScan) {
  auto& ctx = shared_context();
  EXPECT_TRUE(socle_survivors(socle_scan(ctx, 1)).empty());
  EXPECT_EQ(socle_survivors(socle_scan(ctx, 2)), std::vector<std::string>{"A6×A6"});
  const auto scan = socle_scan(ctx, 3);
  EXPECT_EQ(socle_survivors(scan), std::vector<std::string>{"A6×A6"});
  for (const auto& c : scan) {
    if (c.factors.size() == 3) {
      EXPECT_NE(c.reason.find("5-part 125"), std::string::npos) << c.name() << ": " << c.reason;
    }
  }
  EXPECT_THROW(socle_scan(ctx, 4), std::invalid_argument);
  EXPECT_THROW(socle_scan(ctx, 0), std::invalid_argument);
  EXPECT_TRUE(replay_socle_scan(ctx, 1).passed());
  EXPECT_TRUE(replay_socle_scan(ctx).passed());
}

TEST(Replay, Final) {
  const auto r = replay_final(shared_context());
  EXPECT_TRUE(r.passed()) << r.to_text();
  EXPECT_TRUE(has_relation(r, "360 ∉ N"));
  EXPECT_TRUE(has_relation(r, "1440 ∉ N"));
}

TEST(InstanceChecks, AllPass) {
  auto& ctx = shared_context();
  for (auto check : {check_big1, check_big2, check_gor, check_wreath, check_index}) {
    const auto r = check(ctx);
    EXPECT_TRUE(r.passed()) << r.to_text();
  }
}

TEST(InstanceChecks, IndexCasesCoverEveryGroup) {
  auto& ctx = shared_context();
  const auto rows = index_cases("A6", ctx.a6_classes(), {2, 3, 5}, kDefaultEnumerationBound);
  ASSERT_FALSE(rows.empty());
  for (const auto& row : rows) {
    EXPECT_TRUE(row.found) << row.x << " p=" << row.prime;
    const auto part = FactoredNatural{row.x_class}.p_part(row.prime).value();
    EXPECT_GT(part, 1u);
    EXPECT_LE(FactoredNatural{row.y_class}.p_part(row.prime).value() * row.prime, part);
  }
}

TEST(InstanceChecks, SampledPairsAreSeeded) {
  auto& ctx = shared_context();
  const auto a = sample_commuting_pairs(ctx.a6xa6(), 50, 1);
  const auto b = sample_commuting_pairs(ctx.a6xa6(), 50, 1);
  const auto c = sample_commuting_pairs(ctx.a6xa6(), 50, 2);
  ASSERT_EQ(a.size(), 50u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].x, b[i].x);
    EXPECT_EQ(a[i].y, b[i].y);
    EXPECT_TRUE(commute(a[i].x, a[i].y));
    EXPECT_EQ(gcd(element_order(a[i].x), element_order(a[i].y)).value(), 1u);
  }
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i)
    differs = differs || !(a[i].x == c[i].x);
  EXPECT_TRUE(differs);
}

TEST(Verify, RegistryAndDeterminism) {
  EXPECT_EQ(verify_ids(), (std::vector<std::string>{"big1", "big2", "gor", "wreath", "index", "5e", "O5", "O3",
                                                    "O2", "socle", "final"}));
  EXPECT_FALSE(is_verify_id("bogus"));
  EXPECT_THROW(run_verification("bogus", shared_context()), std::invalid_argument);

  RunOptions opt;
  opt.commuting_pairs = 200;
  ReplayContext one(opt), two(opt);
  const std::vector<std::string> ids{"O5", "5e", "final", "O2"};
  const auto seq = run_verifications(ids, one, 1);
  const auto par = run_verifications(ids, two, 3);
  ASSERT_EQ(seq.size(), ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    EXPECT_EQ(seq[i].lemma(), ids[i]);
    EXPECT_EQ(seq[i].to_json().dump(), par[i].to_json().dump());
  }
}
