#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include "dsrg/dsrg_verify.hpp"
#include "oracles.hpp"

using dsrg::DihedrantSpec;
using dsrg::DsrgParams;

namespace {

DsrgParams params_of(const dsrg::Verdict& v) {
  EXPECT_TRUE(dsrg::accepted(v));
  return dsrg::accepted(v) ? std::get<DsrgParams>(v) : DsrgParams{};
}

std::vector<int> mask_set(unsigned mask, int offset) {
  std::vector<int> s;
  for (int b = 0; mask >> b; ++b)
    if ((mask >> b) & 1) s.push_back(b + offset);
  return s;
}

}  // namespace

TEST(Adjacency, Examples) {
  const auto a = dsrg::adjacency_matrix(DihedrantSpec::make(3, {1}, {1}));
  EXPECT_EQ(a.out_neighbours(0), (std::vector<int>{1, 4}));
  for (int g = 0; g < a.size; ++g) {
    EXPECT_EQ(a.out_neighbours(g).size(), 2u);
    EXPECT_EQ(a(g, g), 0);
    int undirected = 0;
    for (int h = 0; h < a.size; ++h) undirected += a(g, h) && a(h, g);
    EXPECT_EQ(undirected, 1);
  }
}

TEST(Adjacency, MatchesPermutationModel) {
  for (int n = 3; n <= 7; ++n)
    for (unsigned mx = 0; mx < (1u << (n - 1)); ++mx)
      for (unsigned my = 0; my < (1u << n); my += 3) {
        const auto x = mask_set(mx, 1), y = mask_set(my, 0);
        const auto a = dsrg::adjacency_matrix(DihedrantSpec::make(n, x, y));
        const auto ref = oracle::dihedrant_adjacency(n, x, y);
        for (int g = 0; g < 2 * n; ++g)
          for (int h = 0; h < 2 * n; ++h) ASSERT_EQ(a(g, h), ref[g][h]);
      }
}

TEST(DihedrantSpec, Validation) {
  EXPECT_THROW(DihedrantSpec::make(3, {0}, {1}), std::invalid_argument);
  EXPECT_THROW(DihedrantSpec::make(3, {1, 1}, {1}), std::invalid_argument);
  EXPECT_THROW(DihedrantSpec::make(4, {1}, {1, 5}), std::invalid_argument);
  EXPECT_EQ(DihedrantSpec::make(5, {-1, 2}, {7}).x, (std::vector<int>{2, 4}));
  EXPECT_EQ(to_string(DihedrantSpec::make(3, {1}, {1})), "Dih(3,{1},{1})");
}

TEST(VerifyMatrix, Examples) {
  auto p = params_of(dsrg::verify_matrix(DihedrantSpec::make(3, {1}, {1})));
  EXPECT_EQ(p, (DsrgParams{6, 2, 1, 0, 1}));
  EXPECT_TRUE(p.genuine());
  EXPECT_EQ(params_of(dsrg::verify_matrix(DihedrantSpec::make(4, {1, 2}, {1, 2}))), (DsrgParams{8, 4, 3, 1, 3}));
  EXPECT_FALSE(dsrg::accepted(dsrg::verify_matrix(DihedrantSpec::make(6, {1, 2}, {1, 2}))));
}

TEST(VerifyMatrix, NotDsrgWitness) {
  const auto v = dsrg::verify_matrix(DihedrantSpec::make(6, {1, 2}, {1, 2}));
  ASSERT_FALSE(dsrg::accepted(v));
  const auto& w = std::get<dsrg::NotDsrg>(v);
  EXPECT_GE(w.row, 0);
  EXPECT_GE(w.col, 0);
  EXPECT_FALSE(w.kind.empty());
}

TEST(VerifyGroupRing, Examples) {
  auto p = params_of(dsrg::verify_group_ring(DihedrantSpec::make(4, {1, 2}, {1, 2})));
  EXPECT_EQ(p, (DsrgParams{8, 4, 3, 1, 3}));
  EXPECT_EQ(p.t, p.mu);
  EXPECT_EQ(params_of(dsrg::verify_group_ring(DihedrantSpec::make(3, {1}, {2}))), (DsrgParams{6, 2, 1, 0, 1}));
  EXPECT_FALSE(dsrg::accepted(dsrg::verify_group_ring(DihedrantSpec::make(4, {1}, {1}))));
  EXPECT_FALSE(dsrg::accepted(dsrg::verify_matrix(DihedrantSpec::make(4, {1}, {1}))));
}

TEST(VerifyAgreement, AllThreeRoutesAndTheDefinitionOracleAgree) {
  for (int n = 3; n <= 6; ++n)
    for (unsigned mx = 0; mx < (1u << (n - 1)); ++mx)
      for (unsigned my = 0; my < (1u << n); ++my) {
        const auto x = mask_set(mx, 1), y = mask_set(my, 0);
        if (x.empty() && y.empty()) continue;
        const auto spec = DihedrantSpec::make(n, x, y);
        const auto m = dsrg::verify_matrix(spec), g = dsrg::verify_group_ring(spec);
        const auto ref = oracle::dsrg_params(oracle::dihedrant_adjacency(n, x, y));
        ASSERT_EQ(dsrg::accepted(m), ref.has_value()) << to_string(spec);
        ASSERT_EQ(dsrg::accepted(g), ref.has_value()) << to_string(spec);
        if (!ref) continue;
        const auto p = std::get<DsrgParams>(m);
        EXPECT_EQ(p, std::get<DsrgParams>(g));
        EXPECT_EQ((oracle::Params{p.vertices, p.k, p.mu, p.lambda, p.t}), *ref);
        EXPECT_TRUE(dsrg::verify_spectral(spec, p).ok) << to_string(spec);
      }
}

TEST(VerifySpectral, Examples) {
  EXPECT_TRUE(dsrg::verify_spectral(DihedrantSpec::make(4, {1, 2}, {1, 2}), {8, 4, 3, 1, 3}).ok);
  EXPECT_TRUE(dsrg::verify_spectral(DihedrantSpec::make(3, {1}, {1}), {6, 2, 1, 0, 1}).ok);
  const auto bad = DihedrantSpec::make(6, {1, 2}, {1, 2});
  for (std::int64_t mu = 0; mu <= 4; ++mu)
    for (std::int64_t lambda = 0; lambda <= 4; ++lambda)
      EXPECT_FALSE(dsrg::verify_spectral(bad, {12, 4, mu, lambda, mu}).ok);
}

TEST(QuadraticIdentity, Examples) {
  std::int64_t alpha = 0;
  EXPECT_TRUE(dsrg::quadratic_identity_check(4, {1, 2}, -2, &alpha));
  EXPECT_EQ(alpha, 6);
  EXPECT_TRUE(dsrg::quadratic_identity_check(6, {1, 4}, -2, &alpha));
  EXPECT_EQ(alpha, 4);
  // U = {1,2,4,5} has spectrum [4,0,-2,0,-2,0]: two-valued although Dih(6,{1,2},{1,2}) is no DSRG.
  EXPECT_TRUE(dsrg::quadratic_identity_check(6, {1, 2}, -2, &alpha));
  EXPECT_EQ(alpha, 4);
  EXPECT_FALSE(dsrg::quadratic_identity_check(6, {1}, -2));
  EXPECT_FALSE(dsrg::quadratic_identity_check(5, {1, 2}, -3));
}

TEST(EigenData, Examples) {
  auto e = dsrg::eigen_data({6, 2, 1, 0, 1});
  EXPECT_EQ(e.d, 1);
  EXPECT_EQ(e.rho, 0);
  EXPECT_EQ(e.sigma, -1);
  EXPECT_EQ(e.m_rho, 3);
  EXPECT_EQ(e.m_sigma, 2);
  auto e8 = dsrg::eigen_data({8, 4, 3, 1, 3});
  EXPECT_EQ(e8.d, 2);
  EXPECT_EQ(e8.rho, 0);
  EXPECT_EQ(e8.sigma, -2);
  EXPECT_EQ(e8.m_rho, 5);
  EXPECT_EQ(e8.m_sigma, 2);
  EXPECT_THROW(dsrg::eigen_data({6, 2, 1, 1, 1}), std::invalid_argument);
}

TEST(Feasible, Examples) {
  const auto ps = dsrg::feasible_params(6);
  EXPECT_NE(std::find(ps.begin(), ps.end(), DsrgParams{6, 2, 1, 0, 1}), ps.end());
  EXPECT_NE(std::find(ps.begin(), ps.end(), DsrgParams{6, 3, 2, 1, 2}), ps.end());
  EXPECT_EQ(std::find(ps.begin(), ps.end(), DsrgParams{6, 2, 1, 1, 1}), ps.end());
  for (int N = 2; N <= 30; ++N)
    for (const auto& p : dsrg::feasible_params(N)) {
      const auto e = dsrg::eigen_data(p);
      EXPECT_TRUE(p.genuine());
      EXPECT_TRUE(dsrg::counting_identity(p));
      EXPECT_EQ(1 + e.m_rho + e.m_sigma, N);
      EXPECT_EQ(p.k + e.rho * e.m_rho + e.sigma * e.m_sigma, 0);
    }
}

TEST(Complement, Examples) {
  EXPECT_EQ(dsrg::complement_params({6, 2, 1, 0, 1}), (DsrgParams{6, 3, 2, 1, 2}));
  EXPECT_EQ(dsrg::complement_params({8, 4, 3, 1, 3}), (DsrgParams{8, 3, 1, 1, 2}));
  for (int N = 2; N <= 30; ++N)
    for (const auto& p : dsrg::feasible_params(N)) EXPECT_EQ(dsrg::complement_params(dsrg::complement_params(p)), p);
}

TEST(DsrgProperties, StructureOfAcceptedXX) {
  for (int n = 3; n <= 12; ++n)
    for (unsigned mx = 1; mx < (1u << (n - 1)); ++mx) {
      const auto x = mask_set(mx, 1);
      const auto spec = DihedrantSpec::make(n, x, x);
      const auto v = dsrg::verify_matrix(spec);
      if (!dsrg::accepted(v)) continue;
      const auto p = std::get<DsrgParams>(v);
      if (!p.genuine()) continue;
      EXPECT_EQ(p.t, p.mu);
      const auto diff = p.mu - p.lambda;
      ASSERT_GT(diff, 0);
      EXPECT_EQ(n % diff, 0);
      EXPECT_TRUE(dsrg::quadratic_identity_check(n, x, -diff));
      const int m = diff % 2 == 1 ? static_cast<int>(n / diff) : static_cast<int>(2 * n / diff);
      EXPECT_EQ(m % dsrg::period_subgroup(spec.x_set()), 0) << to_string(spec);
    }
}

TEST(DsrgProperties, ComplementAndEigenvalues) {
  for (int n = 3; n <= 7; ++n)
    for (unsigned mx = 0; mx < (1u << (n - 1)); ++mx)
      for (unsigned my = 0; my < (1u << n); ++my) {
        const auto spec = DihedrantSpec::make(n, mask_set(mx, 1), mask_set(my, 0));
        if (spec.degree() == 0) continue;
        const auto a = dsrg::adjacency_matrix(spec);
        const auto v = dsrg::verify_adjacency(a);
        if (!dsrg::accepted(v)) continue;
        const auto p = std::get<DsrgParams>(v);
        if (!p.genuine()) continue;
        EXPECT_EQ(params_of(dsrg::verify_adjacency(a.complement())), dsrg::complement_params(p));

        const auto e = dsrg::eigen_data(p);
        ASSERT_TRUE(e.feasible);
        Eigen::MatrixXd m(a.size, a.size);
        for (int r = 0; r < a.size; ++r)
          for (int c = 0; c < a.size; ++c) m(r, c) = a(r, c);
        const Eigen::VectorXcd ev = Eigen::EigenSolver<Eigen::MatrixXd>(m, false).eigenvalues();
        int ck = 0, cr = 0, cs = 0;
        for (int i = 0; i < ev.size(); ++i) {
          EXPECT_LT(std::abs(ev[i].imag()), 1e-6);
          const double re = ev[i].real();
          ck += std::abs(re - double(p.k)) < 1e-6;
          cr += std::abs(re - double(e.rho)) < 1e-6;
          cs += std::abs(re - double(e.sigma)) < 1e-6;
        }
        EXPECT_EQ(ck, 1);
        EXPECT_EQ(cr, e.m_rho);
        EXPECT_EQ(cs, e.m_sigma);
      }
}
