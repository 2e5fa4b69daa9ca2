#pragma once

// Suite orchestration for the command line and the acceptance runner.

#include "minrep/bessel.hpp"
#include "minrep/catalog.hpp"
#include "minrep/liealg.hpp"
#include "minrep/model.hpp"
#include "minrep/orbit.hpp"
#include "minrep/report.hpp"
#include "minrep/sphver.hpp"
#include "minrep/tensor.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <cmath>
#include <ctime>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

namespace minrep {

struct SuiteConfig {
  ModelFamily family = ModelFamily::O2n2n;
  int n = 2;
  std::uint64_t seed = 0;
  std::size_t samples = 1000000;  // Monte Carlo samples per estimate
  std::size_t orbit_points = 100;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"structural", "constants", "modular", "bessel",
                                              "orbit",      "spherical", "tensor",  "all"};
  return names;
}

/// Every table row instantiated at the given ranks (fixed-rank rows once, p in 1..4 for the p rows).
inline std::vector<catalog::GroupClass> catalog_instances(int n_max) {
  std::vector<catalog::GroupClass> out;
  for (const auto& row : catalog::list_classes()) {
    const int lo = row.fixed_rank != 0 ? row.fixed_rank : 2;
    const int hi = row.fixed_rank != 0 ? row.fixed_rank : n_max;
    for (int n = lo; n <= hi; ++n) {
      if (row.d_fixed != 0) {
        out.push_back(catalog::instantiate(row.family, n));
      } else {
        for (int p = 1; p <= 4; ++p) out.push_back(catalog::instantiate(row.family, n, p));
      }
    }
  }
  return out;
}

/// Relative residual |D phi| / (|4z phi''| + |4(tau+1) phi'| + |phi|).
inline double d_residual(HalfInteger tau, double z, BesselMethod method) {
  const RadialValue v = phi_tau(tau, z, method);
  const double a = 4 * z * v.d2;
  const double b = 4 * (tau.value() + 1) * v.d1;
  return std::abs(a + b - v.value) / (std::abs(a) + std::abs(b) + std::abs(v.value));
}

/// Bessel and ODE checks on z in [0.1, 50] for tau in {0, +-1/2}.
inline VerificationReport bessel_suite() {
  VerificationReport rep("bessel");
  std::vector<double> grid;
  for (int i = 0; i <= 60; ++i) grid.push_back(0.1 * std::pow(500.0, i / 60.0));
  for (int tw : {0, 1, -1}) {
    const auto tau = HalfInteger::from_twice(tw);
    double worst_d = 0;
    double worst_ode = 0;
    for (double z : grid) {
      // each K_{tau+i} by its own quadrature, so the recurrence is tested rather than assumed
      worst_d = std::max(worst_d, d_residual(tau, z, BesselMethod::Quadrature));
      worst_ode = std::max(worst_ode, bessel_ode_residual(tau, z));
    }
    rep.add(float_check("d_phi_residual/tau=" + tau.str(), worst_d < 1e-9, worst_d, "relative, z in [0.1, 50]"));
    rep.add(float_check("bessel_ode_residual/tau=" + tau.str(), worst_ode < 1e-7, worst_ode,
                        "finite-difference derivatives, relative"));
  }
  double worst_closed = 0;
  double worst_even = 0;
  double worst_half = 0;
  for (double z : grid) {
    const double closed = std::sqrt(std::numbers::pi / (2 * z)) * std::exp(-z);
    const double q = bessel_k_quadrature(HalfInteger::from_twice(1), z).value;
    worst_closed = std::max(worst_closed, std::abs(q - closed) / closed);
    for (int tw : {-3, -1, 1, 3}) {
      const auto nu = HalfInteger::from_twice(tw);
      const double a = bessel_k(nu, z);
      const double b = bessel_k(nu, z, BesselMethod::Quadrature);
      worst_half = std::max(worst_half, std::abs(a - b) / b);
    }
    for (int tw : {1, 2, 3, 4}) {
      const double a = bessel_k(HalfInteger::from_twice(tw), z, BesselMethod::Quadrature);
      const double b = bessel_k(HalfInteger::from_twice(-tw), z, BesselMethod::Quadrature);
      worst_even = std::max(worst_even, std::abs(a - b) / a);
    }
  }
  rep.add(float_check("k_half_closed_form", worst_closed < 1e-10, worst_closed, "quadrature against sqrt(pi/2z) e^-z"));
  rep.add(float_check("half_integer_recurrence", worst_half < 1e-10, worst_half, "nu in {+-1/2, +-3/2}"));
  rep.add(float_check("evenness", worst_even < 1e-12, worst_even, "K_{-nu} = K_nu, |nu| <= 2"));

  // phi_tau decreasing for the orders carried by the matrix models
  detail::Residual mono;
  for (int tw : {0, 1}) {
    const auto tau = HalfInteger::from_twice(tw);
    double prev = phi_tau(tau, 1e-4).value;
    for (int i = 1; i <= 200; ++i) {
      const double z = 1e-4 * std::pow(1e6, i / 200.0);
      const RadialValue v = phi_tau(tau, z);
      mono.observe(Rational(v.value < prev && v.d1 < 0 ? 0 : 1));
      prev = v.value;
    }
  }
  rep.add(mono.result("phi_monotone", "tau in {0, 1/2}, z in [1e-4, 100]"));
  detail::Residual coeff;
  for (const auto& c : catalog_instances(4)) {
    const auto id = d_coefficient_identity(c.mult);
    coeff.observe(id.four_tau_plus_one - id.two_d_plus_one_minus_e);
  }
  rep.add(coeff.result("four_tau_plus_one_equals_two_d_plus_one_minus_e", "every table row"));
  return rep;
}

/// Table contents, the square-integrability inequality, and finiteness of the radial integral.
inline VerificationReport catalog_suite() {
  VerificationReport rep("catalog");
  rep.add(exact_check("row_count", catalog::list_classes().size() == 11,
                      std::to_string(std::labs(static_cast<long>(catalog::list_classes().size()) - 11))));
  detail::Residual ineq;
  for (const auto& c : catalog_instances(2)) ineq.observe(Rational(catalog::satisfies_integrability(c) ? 0 : 1));
  rep.add(ineq.result("integrability_inequality_n2", "4 tau < dn - 1 at n = 2"));

  const auto adm = catalog::validate_admissible({catalog::Family::O_pq, 0, 3, 5});
  rep.add(exact_check("opq_rejected", !adm.admissible && !adm.diagnostic.empty(), adm.admissible ? "1" : "0",
                      adm.diagnostic));

  nlohmann::ordered_json values = nlohmann::ordered_json::array();
  double worst = 0;
  bool finite = true;
  for (const auto& c : catalog_instances(4)) {
    const auto r = l2_norm_g_tau(catalog::tau(c.mult), catalog::radial_exponent(c));
    finite = finite && r.converged && std::isfinite(r.value) && r.value > 0;
    worst = std::max(worst, r.error / r.value);
    values.push_back({{"class", c.name()}, {"d", c.mult.d}, {"e", c.mult.e}, {"value", r.value}});
  }
  auto f = float_check("l2_radial_finite", finite, worst, "largest relative quadrature error over the table, n <= 4");
  f.data = {{"integrals", values}};
  rep.add(std::move(f));
  const double pi8 = std::numbers::pi / 8;
  const double o44 = l2_norm_g_tau(HalfInteger::from_twice(1), 3).value;
  rep.add(float_check("l2_o44_equals_pi_over_8", std::abs(o44 / pi8 - 1) < 1e-6, std::abs(o44 / pi8 - 1)));
  return rep;
}

inline VerificationReport constants_suite(const GradedModel& m, const SuiteConfig& cfg) {
  VerificationReport rep("constants");
  rep.merge(verify_k1(m));
  rep.merge(verify_kprime(m, cfg.orbit_points, cfg.seed));
  rep.merge(verify_kdoubleprime(m));
  rep.merge(crown_report(m));
  for (int j : {0, 1}) {
    VerificationReport h("chi_" + std::to_string(j));
    h.merge(action_homomorphism_check(m, j, 200, cfg.seed));
    rep.merge(h);
  }
  return rep;
}

inline VerificationReport orbit_suite(const GradedModel& m, const SuiteConfig& cfg) {
  VerificationReport rep("orbit");
  const std::size_t s = cfg.samples;
  const std::size_t small = std::max<std::size_t>(s / 10, 10000);
  rep.merge(base_sampler_check(m, std::min<std::size_t>(s, 200000), cfg.seed));
  {
    VerificationReport l2("l2");
    const auto r = l2_norm_g_tau(m);
    auto c = float_check("radial_integral_finite", r.converged && std::isfinite(r.value), r.error / r.value,
                         "quadrature error estimate, relative");
    c.data = {{"value", r.value}, {"base_mass", RadialMeasure::for_model(m).base_mass}};
    l2.add(std::move(c));
    rep.merge(l2);
  }
  rep.merge(integrability_check(m));
  rep.merge(scaling_check(m, s, cfg.seed));
  rep.merge(equivariance_check(m, 3, s, cfg.seed));
  rep.merge(phi_m_invariance_check(m, small, cfg.seed));
  rep.merge(phi_decay_check(m, small, cfg.seed));
  return rep;
}

inline VerificationReport tensor_suite(const GradedModel& m) {
  VerificationReport rep("tensor");
  for (int k = 1; k < m.n(); ++k) {
    rep.merge(stabilizer_report(m, k));
    if (k >= 2) {
      auto audit = audit_dual_pair(m, k);
      VerificationReport named("audit_k" + std::to_string(k));
      named.merge(audit);
      rep.merge(named);
    }
  }
  return rep;
}

inline VerificationReport modular_suite(const GradedModel& m) {
  VerificationReport rep("modular");
  rep.merge(modular_character_check(m));
  return rep;
}

/// Runs one named suite (or all of them) on a model.
inline VerificationReport run_suite(const std::string& name, const GradedModel& m, const SuiteConfig& cfg) {
  if (name == "structural") return structural_suite(m, cfg.seed);
  if (name == "constants") return constants_suite(m, cfg);
  if (name == "modular") return modular_suite(m);
  if (name == "bessel") return bessel_suite();
  if (name == "orbit") return orbit_suite(m, cfg);
  if (name == "spherical") return verify_spherical_direct(m, cfg.samples, cfg.seed);
  if (name == "tensor") return tensor_suite(m);
  if (name == "all") {
    VerificationReport rep("all");
    for (const auto& s : suite_names())
      if (s != "all") rep.merge(run_suite(s, m, cfg));
    rep.merge(catalog_suite());
    return rep;
  }
  throw std::invalid_argument("unknown suite: " + name);
}

inline int exit_code(Status s) {
  switch (s) {
    case Status::Pass:
      return 0;
    case Status::Fail:
      return 1;
    case Status::Inconclusive:
      return 3;
  }
  return 1;
}

inline std::string utc_timestamp() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

/// Full JSON document for a verification run; only "timestamp" varies between identical runs.
inline nlohmann::ordered_json report_document(const std::string& suite, const SuiteConfig& cfg,
                                              const VerificationReport& rep) {
  nlohmann::ordered_json j;
  j["tool"] = "minrep";
  j["suite"] = suite;
  j["model"] = model_tag(cfg.family);
  j["n"] = cfg.n;
  j["seed"] = cfg.seed;
  j["samples"] = cfg.samples;
  j["status"] = to_string(rep.status());
  j["failures"] = rep.failures();
  j["report"] = rep.to_json();
  j["timestamp"] = utc_timestamp();
  return j;
}

}  // namespace minrep
