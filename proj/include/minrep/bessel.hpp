#pragma once

// Modified Bessel functions K_nu for half-integer nu, the radial profile
// phi_tau(z) = K_tau(sqrt z) / sqrt(z)^tau and the operator
// D = 4z d^2/dz^2 + 4(tau+1) d/dz - 1.

#include "minrep/catalog.hpp"
#include "minrep/half_integer.hpp"
#include "minrep/quadrature.hpp"
#include "minrep/rational.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace minrep {

/// Arguments below this are refused: K_0 is logarithmically singular at 0.
inline constexpr double kMinBesselArgument = 1e-8;

class BesselDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class BesselMethod {
  Auto,        // closed form for odd half-integers, trapezoid sum for integers
  Quadrature,  // adaptive Gauss-Kronrod on the integral representation
  Trapezoid,
};

namespace detail {

inline void check_argument(double z) {
  if (!(z > 0) || !std::isfinite(z)) throw BesselDomainError("Bessel argument must be positive and finite");
  if (z < kMinBesselArgument)
    throw BesselDomainError("Bessel argument " + std::to_string(z) + " is below the refusal threshold 1e-8");
}

/// Upper limit T with z (cosh T - 1) - |nu| T >= 60.
inline double integrand_cutoff(double nu, double z) {
  double t = 1.0;
  while (z * (std::cosh(t) - 1.0) - std::abs(nu) * t < 60.0) t *= 1.25;
  return t;
}

/// e^z K_nu(z) by trapezoid sums of e^{-z(cosh t - 1)} cosh(nu t), step min(0.1, 0.6/sqrt z).
inline double scaled_k_trapezoid(double nu, double z) {
  const double h = std::min(0.1, 0.6 / std::sqrt(z));
  const double top = integrand_cutoff(nu, z);
  double s = 0.5;
  for (int k = 1;; ++k) {
    const double t = k * h;
    if (t > top) break;
    s += std::exp(-z * (std::cosh(t) - 1.0)) * std::cosh(nu * t);
  }
  return h * s;
}

/// e^z K_nu(z) and e^z K_{nu+1}(z) from one trapezoid pass.
inline std::pair<double, double> scaled_k_trapezoid_pair(double nu, double z) {
  const double h = std::min(0.1, 0.6 / std::sqrt(z));
  const double top = integrand_cutoff(std::max(std::abs(nu), std::abs(nu + 1)), z);
  double s0 = 0.5;
  double s1 = 0.5;
  for (int k = 1;; ++k) {
    const double t = k * h;
    if (t > top) break;
    const double e = std::exp(-z * (std::cosh(t) - 1.0));
    s0 += e * std::cosh(nu * t);
    s1 += e * std::cosh((nu + 1) * t);
  }
  return {h * s0, h * s1};
}

inline QuadratureResult scaled_k_quadrature(double nu, double z, double rel_tol) {
  const double top = integrand_cutoff(nu, z);
  auto f = [nu, z](double t) { return std::exp(-z * (std::cosh(t) - 1.0)) * std::cosh(nu * t); };
  QuadratureOptions opt;
  opt.rel_tol = rel_tol;
  opt.abs_tol = 0;
  // log-spaced breakpoints help the small-z case, where the integrand has a long plateau
  std::vector<double> pts{0.0};
  for (double b = 0.5; b < top; b *= 2) pts.push_back(b);
  pts.push_back(top);
  QuadratureResult total;
  total.converged = true;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const auto r = integrate(f, pts[i], pts[i + 1], opt);
    total.value += r.value;
    total.error += r.error;
    total.evaluations += r.evaluations;
    total.intervals += r.intervals;
  }
  return total;
}

/// K_{1/2}(z) and K_{3/2}(z).
inline std::pair<double, double> k_half_pair(double z) {
  const double k12 = std::sqrt(std::numbers::pi / (2 * z)) * std::exp(-z);
  return {k12, k12 * (1.0 + 1.0 / z)};
}

}  // namespace detail

/// K_nu(z) by adaptive quadrature of the integral representation, with its error estimate.
inline QuadratureResult bessel_k_quadrature(HalfInteger nu, double z, double rel_tol = 1e-13) {
  detail::check_argument(z);
  auto r = detail::scaled_k_quadrature(nu.value(), z, rel_tol);
  const double scale = std::exp(-z);
  r.value *= scale;
  r.error *= scale;
  return r;
}

/// K_nu(z), K_{nu+1}(z), ..., count values, by upward recurrence from two seeds.
inline std::vector<double> bessel_k_sequence(HalfInteger nu, int count, double z, BesselMethod method = BesselMethod::Auto) {
  detail::check_argument(z);
  if (count <= 0) return {};
  if (nu.twice() < 0 && method != BesselMethod::Quadrature) {
    // the upward recurrence cancels across order 0; use K_{-nu} = K_nu termwise
    std::vector<double> out;
    for (int i = 0; i < count; ++i) out.push_back(bessel_k_sequence((nu + i).abs(), 1, z, method).front());
    return out;
  }
  double k0 = 0;
  double k1 = 0;
  if (method == BesselMethod::Quadrature) {
    k0 = bessel_k_quadrature(nu, z).value;
    k1 = bessel_k_quadrature(nu + 1, z).value;
  } else if (!nu.is_integer() && method == BesselMethod::Auto) {
    // upward from K_{1/2}, K_{3/2}; negative orders by K_{-nu} = K_nu
    auto upward = [z](HalfInteger target) {
      auto [a, b] = detail::k_half_pair(z);
      for (HalfInteger at = HalfInteger::from_twice(1); at < target; at = at + 1) {
        const double next = a + 2 * (at.value() + 1) / z * b;
        a = b;
        b = next;
      }
      return a;
    };
    k0 = upward(nu.abs());
    k1 = upward((nu + 1).abs());
  } else {
    const double scale = std::exp(-z);
    const auto [s0, s1] = detail::scaled_k_trapezoid_pair(nu.value(), z);
    k0 = scale * s0;
    k1 = scale * s1;
  }
  std::vector<double> out{k0};
  if (count > 1) out.push_back(k1);
  for (int i = 2; i < count; ++i) {
    const double m = (nu + (i - 1)).value();
    out.push_back(out[i - 2] + 2 * m / z * out[i - 1]);
  }
  if (method == BesselMethod::Quadrature)
    for (int i = 2; i < count; ++i) out[i] = bessel_k_quadrature(nu + i, z).value;
  return out;
}

/// K_nu(z) for half-integer nu and z >= 1e-8.
inline double bessel_k(HalfInteger nu, double z, BesselMethod method = BesselMethod::Auto) {
  if (method == BesselMethod::Quadrature) {
    detail::check_argument(z);
    return bessel_k_quadrature(nu, z).value;
  }
  return bessel_k_sequence(nu, 1, z, method).front();
}

struct RadialValue {
  double value = 0;
  double d1 = 0;
  double d2 = 0;
};

/// phi_tau(z) and its first two z-derivatives, from phi_tau' = -phi_{tau+1}/2 and phi_tau'' = phi_{tau+2}/4.
inline RadialValue phi_tau(HalfInteger tau, double z, BesselMethod method = BesselMethod::Auto) {
  detail::check_argument(z);
  const double s = std::sqrt(z);
  if (s < kMinBesselArgument) throw BesselDomainError("sqrt(z) is below the refusal threshold 1e-8");
  const auto k = bessel_k_sequence(tau, 3, s, method);
  const double p0 = std::pow(s, -tau.value());
  return {k[0] * p0, -0.5 * k[1] * p0 / s, 0.25 * k[2] * p0 / (s * s)};
}

/// phi_tau derivatives by 5-point central differences of the value, step h = 1e-2 z.
inline RadialValue phi_tau_finite_difference(HalfInteger tau, double z, BesselMethod method = BesselMethod::Auto) {
  const double h = 1e-2 * z;
  auto f = [&](double t) { return phi_tau(tau, t, method).value; };
  const double fm2 = f(z - 2 * h);
  const double fm1 = f(z - h);
  const double f0 = f(z);
  const double fp1 = f(z + h);
  const double fp2 = f(z + 2 * h);
  return {f0, (fm2 - 8 * fm1 + 8 * fp1 - fp2) / (12 * h), (-fm2 + 16 * fm1 - 30 * f0 + 16 * fp1 - fp2) / (12 * h * h)};
}

/// A function of one positive variable with two derivatives.
struct RadialFunction {
  std::string name;
  std::function<RadialValue(double)> eval;

  RadialValue operator()(double z) const { return eval(z); }
};

inline RadialFunction phi_function(HalfInteger tau, BesselMethod method = BesselMethod::Auto) {
  return {"phi_" + tau.str(), [tau, method](double z) { return phi_tau(tau, z, method); }};
}

inline RadialFunction constant_function(double c) {
  return {"constant", [c](double) { return RadialValue{c, 0, 0}; }};
}

/// k-th z-derivative of phi_tau at z = w^2, as a function of the radius w = |y|: (-1/2)^k K_{tau+k}(w) / w^{tau+k}.
inline double g_tau_derivative(HalfInteger tau, int k, double w) {
  const HalfInteger order = tau + k;
  return std::pow(-0.5, k) * bessel_k(order, w) * std::pow(w, -order.value());
}

/// g_tau(w) = phi_tau(w^2) as a function of the radius w = |y|.
inline double g_tau(HalfInteger tau, double w) { return g_tau_derivative(tau, 0, w); }

/// (D f)(z) = 4z f'' + 4(tau+1) f' - f.
inline double apply_D(HalfInteger tau, const RadialFunction& f, double z) {
  const RadialValue v = f(z);
  return 4 * z * v.d2 + 4 * (tau.value() + 1) * v.d1 - v.value;
}

struct CoefficientIdentity {
  Rational four_tau_plus_one;
  Rational two_d_plus_one_minus_e;
  bool holds() const { return four_tau_plus_one == two_d_plus_one_minus_e; }
};

/// 4(tau+1) against 2(d+1-e), exactly.
inline CoefficientIdentity d_coefficient_identity(catalog::Multiplicities m) {
  const Rational tau = catalog::tau(m).as_rational();
  return {4 * (tau + 1), Rational(2 * (m.d + 1 - m.e))};
}

/// z^2 K'' + z K' - (z^2 + nu^2) K with 5-point finite-difference derivatives, relative to (z^2 + nu^2 + 1) K.
inline double bessel_ode_residual(HalfInteger nu, double z, BesselMethod method = BesselMethod::Auto) {
  const double h = 1e-2 * std::min(z, 1.0);
  auto k = [&](double t) { return bessel_k(nu, t, method); };
  const double fm2 = k(z - 2 * h);
  const double fm1 = k(z - h);
  const double f0 = k(z);
  const double fp1 = k(z + h);
  const double fp2 = k(z + 2 * h);
  const double d1 = (fm2 - 8 * fm1 + 8 * fp1 - fp2) / (12 * h);
  const double d2 = (-fm2 + 16 * fm1 - 30 * f0 + 16 * fp1 - fp2) / (12 * h * h);
  const double nu2 = nu.value() * nu.value();
  return std::abs(z * z * d2 + z * d1 - (z * z + nu2) * f0) / ((z * z + nu2 + 1) * f0);
}

}  // namespace minrep
