#include "minrep/tensor.hpp"
#include "models.hpp"

#include <gtest/gtest.h>

using namespace minrep;
using minrep::testing::model;

namespace {

void expect_all_pass(const VerificationReport& rep) {
  for (const auto& c : rep.checks()) EXPECT_EQ(c.status, Status::Pass) << rep.suite() << "/" << c.name << " " << c.detail;
}

}  // namespace

TEST(Stabilizer, O66RankTwo) {
  const auto d = stabilizer_sk(model(ModelFamily::O2n2n, 3), 2);
  EXPECT_EQ(d.s_k.size(), 22u);
  EXPECT_EQ(d.s_k_prime.size(), 18u);
  EXPECT_EQ(d.levi.size(), 14u);
  EXPECT_EQ(d.nilradical.size(), 8u);
  EXPECT_EQ(d.g_k.size(), 10u);
  EXPECT_EQ(d.h_k.size(), 6u);
  EXPECT_EQ(d.l_k.size(), 4u);
}

TEST(Stabilizer, Gl6RankTwo) {
  const auto d = stabilizer_sk(model(ModelFamily::GL2n, 3), 2);
  EXPECT_EQ(d.s_k.size(), 10u);
  EXPECT_EQ(d.s_k_prime.size(), 8u);
  EXPECT_EQ(d.levi.size(), 6u);
  EXPECT_EQ(d.nilradical.size(), 4u);
  EXPECT_EQ(d.g_k.size(), 4u);
  EXPECT_EQ(d.h_k.size(), 2u);
  EXPECT_EQ(d.l_k.size(), 2u);
}

TEST(Stabilizer, RankOneMatchesS1) {
  const auto& m = model(ModelFamily::O2n2n, 2);
  const auto d = stabilizer_sk(m, 1);
  EXPECT_EQ(d.s_k.size(), 11u);
  EXPECT_EQ(d.s_k_prime.size(), 11u);
}

TEST(Stabilizer, ReportsPass) {
  for (auto f : {ModelFamily::O2n2n, ModelFamily::GL2n})
    for (int n : {2, 3})
      for (int k = 1; k < n; ++k) expect_all_pass(stabilizer_report(model(f, n), k));
}

TEST(Stabilizer, OrbitDimensionClosedForm) {
  EXPECT_EQ(orbit_dimension_closed_form(model(ModelFamily::O2n2n, 2), 1), 5u);
  EXPECT_EQ(orbit_dimension_closed_form(model(ModelFamily::O2n2n, 3), 2), 14u);
  EXPECT_EQ(orbit_dimension_closed_form(model(ModelFamily::GL2n, 3), 2), 8u);
}

TEST(Stabilizer, RankOutOfRange) {
  const auto& m = model(ModelFamily::O2n2n, 3);
  EXPECT_THROW(stabilizer_sk(m, 0), std::out_of_range);
  EXPECT_THROW(stabilizer_sk(m, 3), std::out_of_range);
}

TEST(DualPairAudit, MatchesCatalog) {
  expect_all_pass(audit_dual_pair(model(ModelFamily::O2n2n, 3), 2));
  expect_all_pass(audit_dual_pair(model(ModelFamily::GL2n, 3), 2));
  EXPECT_THROW(audit_dual_pair(model(ModelFamily::O2n2n, 3), 1), catalog::DomainError);
}

TEST(DualPairAudit, WrongExpectationFails) {
  const auto rep = audit_dual_pair(model(ModelFamily::O2n2n, 3), 2, {"Sp_6(R)", "x", 21, 6});
  EXPECT_EQ(rep.find("dim_g_k")->status, Status::Fail);
  EXPECT_EQ(rep.find("dim_h_k")->status, Status::Pass);
}
