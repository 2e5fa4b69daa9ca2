#include "minrep/orbit.hpp"
#include "models.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>

using namespace minrep;
using minrep::testing::gl4;
using minrep::testing::o44;

namespace {

void expect_all_pass(const VerificationReport& rep) {
  for (const auto& c : rep.checks()) EXPECT_EQ(c.status, Status::Pass) << rep.suite() << "/" << c.name << " " << c.detail;
}

Eigen::MatrixXd float_matrix(const GradedModel& m, const Eigen::VectorXd& y) {
  const auto n = static_cast<Eigen::Index>(m.dim_ambient());
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t a = 0; a < m.dim_nbar(); ++a)
    for (const auto& e : m.basis_matrix(m.nbar_begin() + a)) out(e.row, e.col) += y(static_cast<Eigen::Index>(a)) * to_double(e.value);
  return out;
}

}  // namespace

TEST(OrbitPoints, RationalPointsLieOnOrbit) {
  for (const auto* m : {&o44(), &gl4()}) {
    const auto pts = sample_orbit_rational(*m, 30, 3);
    ASSERT_EQ(pts.size(), 30u);
    EXPECT_EQ(pts[0].y, m->y(0));
    EXPECT_EQ(pts[0].norm_sq, 1);
    for (const auto& p : pts) {
      EXPECT_TRUE(is_zero(membership_residual(*m, p.y)));
      EXPECT_GT(p.norm_sq, 0);
    }
  }
}

TEST(OrbitPoints, RankTwoPointIsNotOnOrbit) {
  const auto& m = o44();
  EXPECT_FALSE(is_zero(membership_residual(m, add(m.y(0), m.y(1)))));
}

TEST(OrbitSampler, FloatPointsSatisfyMembership) {
  for (const auto* m : {&o44(), &gl4()}) {
    OrbitSampler s(*m);
    Rng rng(11);
    Eigen::VectorXd y;
    for (int i = 0; i < 200; ++i) {
      s.base_point(rng, y);
      const Eigen::MatrixXd Y = float_matrix(*m, y);
      const Eigen::MatrixXd T = -Y.transpose();
      const Eigen::MatrixXd YT = Y * T - T * Y;
      const Eigen::MatrixXd lhs = YT * Y - Y * YT;
      const double n2 = s.norm(y) * s.norm(y);
      EXPECT_LT((lhs + 2 * n2 * Y).norm() / Y.norm(), 1e-9);
      EXPECT_NEAR(s.norm(y), 1.0, 1e-12);
    }
  }
}

TEST(OrbitSampler, StreamsAreReproducible) {
  const auto a = sample_base(o44(), 50, 9);
  const auto b = sample_base(o44(), 50, 9);
  const auto c = sample_base(o44(), 50, 10);
  ASSERT_EQ(a.size(), 50u);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], b[i]);
  EXPECT_NE(a[1], c[1]);
}

TEST(OrbitSampler, HWeightsAreDiagonalEigenvalues) {
  OrbitSampler s(o44());
  // ad h_j y = -2y on y_j and -y on the mixed coordinates
  for (Eigen::Index a = 0; a < s.h_weights().cols(); ++a) {
    double sum = 0;
    for (Eigen::Index j = 0; j < s.h_weights().rows(); ++j) sum += s.h_weights()(j, a);
    EXPECT_EQ(sum, -2.0);
  }
}

TEST(OrbitSampler, BaseSamplerDiagnostics) {
  expect_all_pass(base_sampler_check(o44(), 50000, 0));
  expect_all_pass(base_sampler_check(gl4(), 50000, 0));
}

TEST(RadialIntegral, ClosedForms) {
  // O_{4,4}: int K_{1/2}(w)^2 w^2 dw = pi/8; GL_4: int K_0(w)^2 w dw = 1/2
  const auto o = l2_norm_g_tau(o44());
  EXPECT_TRUE(o.converged);
  EXPECT_NEAR(o.value / (std::numbers::pi / 8), 1.0, 1e-9);
  EXPECT_NEAR(l2_norm_g_tau(gl4()).value, 0.5, 1e-9);
}

TEST(RadialIntegral, RefusesWhenNotSquareIntegrable) {
  EXPECT_THROW(l2_norm_g_tau(HalfInteger::from_int(1), 3), PreconditionError);
  EXPECT_NO_THROW(l2_norm_g_tau(HalfInteger::from_int(1), 5));
}

TEST(Integrability, ClassificationMatchesPoleOrder) {
  for (const auto* m : {&o44(), &gl4()}) expect_all_pass(integrability_check(*m));
  const auto rep = integrability_check(o44());
  EXPECT_FALSE(rep.find("l1_classification/g''")->data["numerically_l1"].get<bool>());
  EXPECT_TRUE(rep.find("l1_classification/g'")->data["numerically_l1"].get<bool>());
  const auto gl = integrability_check(gl4());
  EXPECT_FALSE(gl.find("l1_classification/g'")->data["numerically_l1"].get<bool>());
  EXPECT_TRUE(gl.find("l1_classification/|y|^2 g'")->data["numerically_l1"].get<bool>());
}

TEST(MeasureScaling, SmallRun) {
  expect_all_pass(scaling_check(o44(), 200000, 1));
  expect_all_pass(scaling_check(gl4(), 200000, 1));
}

TEST(MeasureScaling, WrongExponentIsDetected) {
  // the same estimate compared against z^{-(dn+1)} must fail at z = 2
  const auto rep = scaling_check(o44(), 200000, 1);
  const auto* c = rep.find("z=2/gaussian");
  ASSERT_NE(c, nullptr);
  const double ratio = c->data["ratio"].get<double>();
  EXPECT_GT(std::abs(ratio / std::pow(2.0, -5.0) - 1), 0.5);
}

TEST(Equivariance, SmallRun) {
  expect_all_pass(equivariance_check(o44(), 2, 200000, 2));
  expect_all_pass(equivariance_check(gl4(), 2, 200000, 2));
}

TEST(FourierPhi, RealAndSymmetric) {
  const auto& m = o44();
  const auto rays = default_rays(m);
  const auto e = fourier_phi(m, rays[0], 100000, 5);
  EXPECT_GT(e.real.value, 0);
  EXPECT_LT(std::abs(e.imag.value), 5 * e.imag.stderr_ + 1e-12);
  EXPECT_EQ(e.real.samples, 100000u);
  EXPECT_THROW(fourier_phi(m, rays[0], 100, 5), std::invalid_argument);
}

TEST(FourierPhi, AtOriginEqualsL1Mass) {
  // Phi(0) = int_0^inf K_{1/2}(w) w^{5/2} dw = sqrt(pi/2) int e^{-w} w^2 dw
  const auto e = fourier_phi(o44(), Eigen::VectorXd::Zero(6), 200000, 6);
  const double want = std::sqrt(std::numbers::pi / 2) * 2.0;
  EXPECT_LT(std::abs(e.real.value - want), 4 * e.real.stderr_);
}

TEST(FourierPhi, InvarianceAndDecay) {
  expect_all_pass(phi_m_invariance_check(o44(), 20000, 0));
  expect_all_pass(phi_decay_check(o44(), 20000, 0));
}

TEST(Threads, ResultsIndependentOfWorkerCount) {
  ::setenv("MINREP_THREADS", "1", 1);
  const auto a = scaling_check(gl4(), 20000, 3).to_json();
  ::setenv("MINREP_THREADS", "3", 1);
  const auto b = scaling_check(gl4(), 20000, 3).to_json();
  ::unsetenv("MINREP_THREADS");
  EXPECT_EQ(a, b);
}
