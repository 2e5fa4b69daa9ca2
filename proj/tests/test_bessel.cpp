#include "minrep/bessel.hpp"
#include "minrep/suite.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace minrep;

namespace {

double boost_k(HalfInteger nu, double z) { return boost::math::cyl_bessel_k(nu.value(), z); }

const HalfInteger kHalf = HalfInteger::from_twice(1);
const HalfInteger kZero = HalfInteger::from_int(0);

}  // namespace

TEST(BesselK, HalfAtOne) {
  // sqrt(pi/2) e^{-1}
  EXPECT_NEAR(bessel_k(kHalf, 1.0), 0.46106850444789454, 1e-14);
  EXPECT_NEAR(bessel_k(kHalf, 1.0, BesselMethod::Quadrature), 0.46106850444789454, 1e-13);
}

TEST(BesselK, ZeroAtOneAndTwo) {
  EXPECT_NEAR(bessel_k(kZero, 1.0), 0.42102443824070834, 1e-12);
  EXPECT_NEAR(bessel_k(kZero, 2.0), 0.11389387274953344, 1e-12);
}

TEST(BesselK, AgreesWithBoostOracle) {
  for (int tw = -7; tw <= 9; ++tw)
    for (double z : {1e-6, 1e-3, 0.05, 0.3, 1.0, 2.5, 7.0, 20.0, 60.0, 200.0}) {
      const auto nu = HalfInteger::from_twice(tw);
      const double want = boost_k(nu, z);
      for (auto method : {BesselMethod::Auto, BesselMethod::Quadrature}) {
        if (method == BesselMethod::Quadrature && std::abs(tw) > 6 && z < 1e-3) continue;  // overflow-prone scale
        EXPECT_NEAR(bessel_k(nu, z, method) / want, 1.0, 1e-10) << "nu=" << nu.str() << " z=" << z;
      }
    }
}

TEST(BesselK, SequenceMatchesSingleValues) {
  const auto seq = bessel_k_sequence(HalfInteger::from_twice(-3), 5, 0.7);
  for (int i = 0; i < 5; ++i)
    EXPECT_NEAR(seq[i] / boost_k(HalfInteger::from_twice(-3 + 2 * i), 0.7), 1.0, 1e-12);
}

TEST(BesselK, Evenness) {
  for (int tw = 1; tw <= 5; ++tw)
    for (double z : {0.2, 1.0, 9.0})
      EXPECT_EQ(bessel_k(HalfInteger::from_twice(tw), z), bessel_k(HalfInteger::from_twice(-tw), z));
}

TEST(BesselK, RefusesBelowThreshold) {
  EXPECT_THROW(bessel_k(kZero, 1e-9), BesselDomainError);
  EXPECT_THROW(bessel_k(kZero, 0.0), BesselDomainError);
  EXPECT_THROW(bessel_k(kZero, -1.0), BesselDomainError);
  EXPECT_THROW(bessel_k(kZero, std::nan("")), BesselDomainError);
  EXPECT_NO_THROW(bessel_k(kZero, 1e-8));
}

TEST(BesselK, QuadratureReportsError) {
  const auto r = bessel_k_quadrature(kZero, 2.0);
  EXPECT_TRUE(r.converged);
  EXPECT_LT(r.error, 1e-12);
}

TEST(PhiTau, MinusHalfIsExponential) {
  // g_{-1/2}(w) = phi(w^2) = sqrt(pi/2) e^{-w}
  const auto tau = HalfInteger::from_twice(-1);
  for (double w : {0.1, 1.0, 3.0})
    EXPECT_NEAR(g_tau(tau, w) / (std::sqrt(std::numbers::pi / 2) * std::exp(-w)), 1.0, 1e-13);
}

TEST(PhiTau, ZeroAtOne) { EXPECT_NEAR(phi_tau(kZero, 1.0).value, 0.42102443824070834, 1e-12); }

TEST(PhiTau, DerivativesAgreeWithFiniteDifferences) {
  for (int tw : {-1, 0, 1, 2})
    for (double z : {0.3, 1.0, 4.0, 20.0}) {
      const auto tau = HalfInteger::from_twice(tw);
      const auto a = phi_tau(tau, z);
      const auto b = phi_tau_finite_difference(tau, z);
      EXPECT_NEAR(a.d1 / b.d1, 1.0, 1e-6);
      EXPECT_NEAR(a.d2 / b.d2, 1.0, 1e-6);
    }
}

TEST(OperatorD, AnnihilatesPhi) {
  EXPECT_LT(std::abs(apply_D(kHalf, phi_function(kHalf), 3.0)), 1e-9);
  for (int tw : {-1, 0, 1})
    for (double z : {0.1, 1.0, 10.0, 50.0})
      EXPECT_LT(d_residual(HalfInteger::from_twice(tw), z, BesselMethod::Quadrature), 1e-9);
}

TEST(OperatorD, ConstantGivesMinusOne) { EXPECT_EQ(apply_D(kZero, constant_function(1.0), 2.0), -1.0); }

TEST(OperatorD, CoefficientIdentity) {
  const auto id = d_coefficient_identity({2, 0});
  EXPECT_EQ(id.four_tau_plus_one, 6);
  EXPECT_TRUE(id.holds());
  for (const auto& c : catalog_instances(4)) EXPECT_TRUE(d_coefficient_identity(c.mult).holds()) << c.name();
}

TEST(OperatorD, WrongTauIsDetected) {
  // phi_{1/2} fed to the operator for tau = 3/2 leaves a visible residual
  const double r = apply_D(HalfInteger::from_twice(3), phi_function(kHalf), 1.0);
  EXPECT_GT(std::abs(r), 1e-2);
}

TEST(BesselOde, ResidualSmall) {
  for (int tw : {-1, 0, 1, 3})
    for (double z : {0.1, 1.0, 10.0, 50.0}) EXPECT_LT(bessel_ode_residual(HalfInteger::from_twice(tw), z), 1e-7);
}

TEST(BesselSuite, Passes) {
  const auto rep = bessel_suite();
  for (const auto& c : rep.checks()) EXPECT_EQ(c.status, Status::Pass) << c.name;
}
