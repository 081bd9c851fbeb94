#include <gtest/gtest.h>

#include <set>

#include "dsrg/catalog.hpp"
#include "oracles.hpp"

using dsrg::CaseTag;
using dsrg::DsrgParams;

namespace {

std::vector<std::vector<int>> xs_of(const std::vector<dsrg::ClassificationEntry>& es) {
  std::vector<std::vector<int>> out;
  for (auto& e : es) out.push_back(e.x);
  return out;
}

// Subset search against the permutation-model oracle, independent of the library.
std::set<std::vector<int>> oracle_xx(int n) {
  std::set<std::vector<int>> out;
  for (unsigned m = 1; m < (1u << (n - 1)); ++m) {
    std::vector<int> x;
    for (int b = 0; b < n - 1; ++b)
      if ((m >> b) & 1) x.push_back(b + 1);
    const auto p = oracle::dsrg_params(oracle::dihedrant_adjacency(n, x, x));
    if (p && 0 < p->t && p->t < p->k) out.insert(x);
  }
  return out;
}

}  // namespace

TEST(GenC51, Examples) {
  auto g = dsrg::gen_c51(3, 3, {1});
  EXPECT_EQ(g.spec.x, (std::vector<int>{1}));
  EXPECT_EQ(g.params, (DsrgParams{6, 2, 1, 0, 1}));
  auto g9 = dsrg::gen_c51(9, 3, {1});
  EXPECT_EQ(g9.spec.x, (std::vector<int>{1, 4, 7}));
  EXPECT_EQ(g9.params, (DsrgParams{18, 6, 3, 0, 3}));
  try {
    dsrg::gen_c51(3, 3, {1, 2});
    FAIL() << "expected ConstructionError";
  } catch (const dsrg::ConstructionError& e) {
    EXPECT_EQ(e.condition, "transversal");
    EXPECT_EQ(e.witness, 1);
  }
  EXPECT_THROW(dsrg::gen_c51(6, 6, {1, 2}), dsrg::ConstructionError);
  EXPECT_THROW(dsrg::gen_c51(9, 3, {3}), dsrg::ConstructionError);
}

TEST(GenC52, Examples) {
  EXPECT_EQ(dsrg::gen_c52(4, 2, {1, 2}).spec.x, (std::vector<int>{1, 2}));
  EXPECT_EQ(dsrg::gen_c52(4, 2, {1, 2}).params, (DsrgParams{8, 4, 3, 1, 3}));
  EXPECT_EQ(dsrg::gen_c52(6, 3, {1, 2, 3}).params, (DsrgParams{12, 6, 4, 2, 4}));
  auto g8 = dsrg::gen_c52(8, 2, {1, 2});
  EXPECT_EQ(g8.spec.x, (std::vector<int>{1, 2, 5, 6}));
  EXPECT_EQ(g8.params, (DsrgParams{16, 8, 6, 2, 6}));
}

TEST(GenC52, NamedConditionFailures) {
  auto cond = [](int n, int v, std::vector<int> t) {
    try {
      dsrg::gen_c52(n, v, t);
    } catch (const dsrg::ConstructionError& e) {
      return e.condition;
    }
    return std::string("none");
  };
  EXPECT_EQ(cond(4, 2, {1}), "(i)");
  EXPECT_EQ(cond(4, 2, {1, 2, 3}), "(ii)");
  EXPECT_EQ(cond(6, 3, {1, 3, 4}), "(iii)");
  EXPECT_EQ(cond(6, 4, {1}), "v");
}

TEST(EnumerateConstruction, Examples) {
  const auto a = dsrg::enumerate_construction(6, dsrg::Construction::c51);
  EXPECT_EQ(xs_of(a), (std::vector<std::vector<int>>{{1, 4}, {2, 5}}));
  const auto b = dsrg::enumerate_construction(6, dsrg::Construction::c52);
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(b[0].t, (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(b[1].t, (std::vector<int>{3, 4, 5}));
  EXPECT_TRUE(dsrg::enumerate_construction(5, dsrg::Construction::c52).empty());
}

TEST(EnumerateConstruction, SoundAgainstIndependentOracle) {
  for (int n = 3; n <= 16; ++n)
    for (auto which : {dsrg::Construction::c51, dsrg::Construction::c52})
      for (const auto& e : dsrg::enumerate_construction(n, which)) {
        const auto p = oracle::dsrg_params(oracle::dihedrant_adjacency(n, e.x, e.x));
        ASSERT_TRUE(p.has_value());
        EXPECT_EQ((oracle::Params{e.params.vertices, e.params.k, e.params.mu, e.params.lambda, e.params.t}), *p);
        if (e.case_tag == CaseTag::a) {
          EXPECT_EQ(2 * static_cast<int>(e.t.size()), e.v - 1);
          EXPECT_EQ(2 * static_cast<int>(e.x.size()), n - n / e.v);
        } else {
          EXPECT_EQ(static_cast<int>(e.t.size()), e.v);
          EXPECT_EQ(2 * static_cast<int>(e.x.size()), n);
        }
      }
}

TEST(Classify, Examples) {
  const auto c6 = dsrg::classify_xx(6);
  ASSERT_EQ(c6.size(), 4u);
  EXPECT_EQ(xs_of(c6), (std::vector<std::vector<int>>{{1, 4}, {2, 5}, {1, 2, 3}, {3, 4, 5}}));
  EXPECT_EQ(c6[0].params, (DsrgParams{12, 4, 2, 0, 2}));
  EXPECT_EQ(c6[2].params, (DsrgParams{12, 6, 4, 2, 4}));
  const auto c3 = dsrg::classify_xx(3);
  EXPECT_EQ(xs_of(c3), (std::vector<std::vector<int>>{{1}, {2}}));
  const auto c4 = dsrg::classify_xx(4);
  EXPECT_EQ(xs_of(c4), (std::vector<std::vector<int>>{{1, 2}, {2, 3}}));
  for (auto& e : c4) EXPECT_EQ(e.case_tag, CaseTag::b);
  EXPECT_EQ(dsrg::classify_xx(5).size(), 4u);
}

TEST(Classify, MatchesIndependentSubsetSearch) {
  for (int n = 3; n <= 12; ++n) {
    std::set<std::vector<int>> got;
    for (auto& e : dsrg::classify_xx(n)) got.insert(e.x);
    EXPECT_EQ(got, oracle_xx(n)) << "n=" << n;
  }
}

TEST(BruteForce, XXExamples) {
  EXPECT_EQ(dsrg::brute_force_xx(6).size(), 4u);
  EXPECT_EQ(dsrg::brute_force_xx(3).size(), 2u);
  EXPECT_EQ(dsrg::brute_force_xx(5).size(), dsrg::classify_xx(5).size());
  EXPECT_THROW(dsrg::brute_force_xx(2), std::invalid_argument);
  EXPECT_THROW(dsrg::brute_force_xx(17), std::invalid_argument);
}

TEST(BruteForce, ThreadCountDoesNotChangeResults) {
  for (int n = 3; n <= 10; ++n) EXPECT_EQ(dsrg::brute_force_xx(n, 1), dsrg::brute_force_xx(n, 4));
  EXPECT_EQ(dsrg::brute_force_xy(5, 1), dsrg::brute_force_xy(5, 3));
}

TEST(BruteForce, XYExamples) {
  const auto r3 = dsrg::brute_force_xy(3);
  EXPECT_EQ(r3.size(), 12u);
  for (auto& r : r3) {
    const bool ok0 = std::holds_alternative<dsrg::Generated>(dsrg::check_t11(3, r.x, r.y, 0));
    const bool ok1 = std::holds_alternative<dsrg::Generated>(dsrg::check_t11(3, r.x, r.y, 1));
    EXPECT_TRUE(ok0 || ok1);
  }
  const auto r4 = dsrg::brute_force_xy(4);
  const dsrg::XyResult want{{1, 2}, {1, 2}, {8, 4, 3, 1, 3}};
  EXPECT_NE(std::find(r4.begin(), r4.end(), want), r4.end());
  EXPECT_THROW(dsrg::brute_force_xy(9), std::invalid_argument);
}

TEST(CheckT11, Examples) {
  auto r = dsrg::check_t11(3, {1}, {1}, 0);
  ASSERT_TRUE(std::holds_alternative<dsrg::Generated>(r));
  EXPECT_EQ(std::get<dsrg::Generated>(r).params, (DsrgParams{6, 2, 1, 0, 1}));
  auto r1 = dsrg::check_t11(3, {1}, {0, 1}, 1);
  ASSERT_TRUE(std::holds_alternative<dsrg::Generated>(r1));
  EXPECT_EQ(std::get<dsrg::Generated>(r1).params, (DsrgParams{6, 3, 2, 1, 2}));
  for (std::vector<int> y : {std::vector<int>{}, {0}, {1, 2}}) {
    auto f = dsrg::check_t11(3, {1, 2}, y, 0);
    ASSERT_TRUE(std::holds_alternative<dsrg::ConditionFail>(f));
    EXPECT_EQ(std::get<dsrg::ConditionFail>(f).condition, "(i)");
  }
  EXPECT_THROW(dsrg::check_t11(4, {1}, {1}, 0), std::invalid_argument);
}

TEST(CheckT11, ClosureAgainstBruteForce) {
  for (int n : {3, 5, 7}) {
    std::set<std::pair<std::vector<int>, std::vector<int>>> brute, accepted;
    for (auto& r : dsrg::brute_force_xy(n)) brute.insert({r.x, r.y});
    for (unsigned mx = 1; mx < (1u << (n - 1)); ++mx)
      for (unsigned my = 0; my < (1u << n); ++my) {
        std::vector<int> x, y;
        for (int b = 0; b < n - 1; ++b)
          if ((mx >> b) & 1) x.push_back(b + 1);
        for (int b = 0; b < n; ++b)
          if ((my >> b) & 1) y.push_back(b);
        for (int eps : {0, 1})
          if (std::holds_alternative<dsrg::Generated>(dsrg::check_t11(n, x, y, eps))) accepted.insert({x, y});
      }
    EXPECT_EQ(brute, accepted) << "n=" << n;
  }
}

TEST(CheckT13, Examples) {
  auto r = dsrg::check_t13(4, {1}, {1});
  EXPECT_FALSE(r.failure.has_value());
  EXPECT_EQ(r.printed, (DsrgParams{8, 3, 1, 1, 2}));
  ASSERT_TRUE(r.oracle.has_value());
  EXPECT_FALSE(dsrg::accepted(*r.oracle));
  EXPECT_FALSE(r.oracle_matches_printed);

  auto r2 = dsrg::check_t13(4, {1}, {2});
  ASSERT_TRUE(r2.failure.has_value());
  EXPECT_EQ(r2.failure->condition, "(ii)");
  // {1,2} u {4,5} = Z_6 \ {0,3}: all three conditions hold, the oracle still rejects.
  auto r3 = dsrg::check_t13(6, {1, 2}, {1, 2});
  EXPECT_FALSE(r3.failure.has_value());
  ASSERT_TRUE(r3.oracle.has_value());
  EXPECT_FALSE(dsrg::accepted(*r3.oracle));
  auto r4 = dsrg::check_t13(6, {1}, {1});
  ASSERT_TRUE(r4.failure.has_value());
  EXPECT_EQ(r4.failure->condition, "(i)");
  auto r5 = dsrg::check_t13(4, {1, 2}, {1, 2});
  ASSERT_TRUE(r5.failure.has_value());
  EXPECT_EQ(r5.failure->condition, "(i)");
}

TEST(StructureReport, Examples) {
  auto a = dsrg::structure_report(6, {1, 4}, {12, 4, 2, 0, 2});
  EXPECT_EQ(a.case_tag, CaseTag::a);
  EXPECT_EQ(a.v, 3);
  EXPECT_EQ(a.t, (std::vector<int>{1}));
  auto b = dsrg::structure_report(6, {1, 2, 3}, {12, 6, 4, 2, 4});
  EXPECT_EQ(b.case_tag, CaseTag::b);
  EXPECT_EQ(b.v, 3);
  EXPECT_EQ(b.t, (std::vector<int>{1, 2, 3}));
  auto b4 = dsrg::structure_report(4, {1, 2}, {8, 4, 3, 1, 3});
  EXPECT_EQ(b4.case_tag, CaseTag::b);
  EXPECT_EQ(b4.v, 2);
  EXPECT_EQ(b4.t, (std::vector<int>{1, 2}));
  EXPECT_THROW(dsrg::structure_report(6, {1, 2}, {12, 4, 2, 0, 2}), dsrg::NoCaseMatched);
}

TEST(StructureReport, EveryClassifiedEntryRoundTrips) {
  for (int n = 3; n <= 14; ++n) {
    const auto feasible = dsrg::feasible_params(2 * n);
    for (auto& e : dsrg::classify_xx(n)) {
      EXPECT_EQ(dsrg::structure_report(n, e.x, e.params), e);
      EXPECT_TRUE(dsrg::coset_period_consistent(n, e.x, e.params));
      EXPECT_NE(std::find(feasible.begin(), feasible.end(), e.params), feasible.end());
      const int m = e.case_tag == CaseTag::a ? e.v : 2 * e.v;
      EXPECT_EQ(dsrg::coset_expand(n, m, dsrg::ResidueMultiset::from_elements(n, e.t)).support(), e.x);
    }
  }
}
