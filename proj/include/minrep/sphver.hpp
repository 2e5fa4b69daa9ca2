#pragma once

// The spherical-vector identity pi(y_1 + theta y_1) Phi = 0: exact constants
// (k, k', k''), their assembly into the Bessel operator D, the action of
// pi_chi on polynomials, and a correlated Monte Carlo test of the identity.

#include "minrep/bessel.hpp"
#include "minrep/liealg.hpp"
#include "minrep/model.hpp"
#include "minrep/orbit.hpp"
#include "minrep/report.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <string>
#include <vector>

namespace minrep {

/// nu([theta y_1, y]) = <theta y_1, y> on every basis vector of nbar.
inline VerificationReport verify_k1(const GradedModel& m) {
  VerificationReport rep("constant_k");
  const Element ty1 = m.theta(m.y(0));
  detail::Residual r;
  nlohmann::ordered_json values = nlohmann::ordered_json::array();
  for (std::size_t a = m.nbar_begin(); a < m.nbar_end(); ++a) {
    const Element y = m.basis_element(a);
    const Rational lhs = m.nu(m.bracket(ty1, y));
    const Rational rhs = m.pair(ty1, y);
    r.observe(lhs - rhs);
    values.push_back({{"basis", m.label(a)}, {"nu_bracket", to_string(lhs)}, {"pairing", to_string(rhs)}});
  }
  auto c = r.result("nu_bracket_equals_pairing", "nu([theta y1, y]) = <theta y1, y> on a basis of nbar");
  c.data = {{"values", values}};
  rep.add(std::move(c));
  const Rational k = -m.nu(m.bracket(ty1, m.y(0)));
  rep.add(exact_check("k_equals_1", k == 1, to_string(abs(k - 1)), "k = -nu([theta y1, y1]) = " + to_string(k)));
  return rep;
}

/// The scalar k' with [[y, theta y], y] = k' <y, theta y> y, read off at y.
inline Rational kprime_at(const GradedModel& m, const Element& y) {
  const Element lhs = m.bracket(m.bracket(y, m.theta(y)), y);
  const Rational p = m.pair(y, m.theta(y));
  for (std::size_t a = 0; a < y.size(); ++a)
    if (sgn(y[a]) != 0) return lhs[a] / (p * y[a]);
  throw std::invalid_argument("kprime_at: y must be nonzero");
}

/// [[y, theta y], y] = 2 <y, theta y> y exactly on rational orbit points; y_1 + y_2 must violate it.
inline VerificationReport verify_kprime(const GradedModel& m, std::size_t samples, std::uint64_t seed) {
  VerificationReport rep("constant_kprime");
  detail::Residual r;
  for (const auto& p : sample_orbit_rational(m, samples, seed)) r.observe(membership_residual(m, p.y));
  rep.add(r.result("orbit_identity", "[[y, theta y], y] - 2 <y, theta y> y on rational points of O_1"));
  const Rational k = kprime_at(m, m.y(0));
  rep.add(exact_check("kprime_equals_2", k == 2, to_string(abs(k - 2)), "k' = " + to_string(k)));
  if (m.n() >= 2) {
    const Element y12 = add(m.y(0), m.y(1));
    const Rational res = max_abs(membership_residual(m, y12));
    auto c = exact_check("negative_control_rank2", sgn(res) != 0, to_string(res),
                         "y1 + y2 lies outside O_1 and must violate the identity");
    c.data = {{"violation", to_string(res)}};
    rep.add(std::move(c));
  }
  return rep;
}

/// Casimir scalar on n against 2 - 2e.
inline VerificationReport verify_kdoubleprime(const GradedModel& m) {
  VerificationReport rep("constant_kdoubleprime");
  const auto res = casimir_omega(m);
  const Rational want = 2 - 2 * m.multiplicities().e;
  if (!res.scalar) {
    rep.add(exact_check("casimir_is_scalar", false, "1", "Omega does not act on n by a scalar"));
    return rep;
  }
  rep.add(exact_check("casimir_is_scalar", true, "0", std::to_string(m.dim_n()) + " basis vectors of n"));
  rep.add(exact_check("kdoubleprime_equals_2_minus_2e", *res.scalar == want, to_string(abs(*res.scalar - want)),
                      "Omega = " + to_string(*res.scalar) + ", 2 - 2e = " + to_string(want)));
  return rep;
}

/// Coefficients of z phi'', phi', phi in the combined integrand, divided by i <theta y_1, y>.
struct CrownAssembly {
  Rational k;
  Rational kprime;
  Rational kdoubleprime;
  int d;
  int e;
  Rational z_phi2;  // 2 k'
  Rational phi1;    // 2 d k + k''
  Rational phi0;    // -1
  Rational d_z_phi2 = 4;
  Rational d_phi1;  // 4 (tau + 1)
  Rational d_phi0 = -1;
  Rational two_d_plus_one_minus_e;

  bool matches_d() const { return z_phi2 == d_z_phi2 && phi1 == d_phi1 && phi0 == d_phi0; }
  bool coefficient_identity() const { return d_phi1 == two_d_plus_one_minus_e; }

  nlohmann::ordered_json to_json() const {
    return {{"k", to_string(k)},
            {"kprime", to_string(kprime)},
            {"kdoubleprime", to_string(kdoubleprime)},
            {"d", d},
            {"e", e},
            {"assembled", {{"z_phi2", to_string(z_phi2)}, {"phi1", to_string(phi1)}, {"phi0", to_string(phi0)}}},
            {"operator_D", {{"z_phi2", to_string(d_z_phi2)}, {"phi1", to_string(d_phi1)}, {"phi0", to_string(d_phi0)}}},
            {"two_d_plus_one_minus_e", to_string(two_d_plus_one_minus_e)}};
  }
};

/// Combines the constants with multiplicities (d, e) into the operator coefficients.
inline CrownAssembly assemble_crown(const Rational& k, const Rational& kprime, const Rational& kdoubleprime,
                                    catalog::Multiplicities mult) {
  CrownAssembly a{k, kprime, kdoubleprime, mult.d, mult.e, 0, 0, 0};
  // d nu(h) terms contribute -2d k phi' up to the common factor -1/2; the Casimir term adds k'' phi'
  a.z_phi2 = 2 * kprime;
  a.phi1 = 2 * mult.d * k + kdoubleprime;
  a.phi0 = -1;
  a.d_phi1 = 4 * (catalog::tau(mult).as_rational() + 1);
  a.two_d_plus_one_minus_e = 2 * (mult.d + 1 - mult.e);
  return a;
}

/// Measures k, k', k'' on the model and assembles.
inline CrownAssembly assemble_crown(const GradedModel& m) {
  const Element ty1 = m.theta(m.y(0));
  const Rational k = -m.nu(m.bracket(ty1, m.y(0)));
  return assemble_crown(k, kprime_at(m, m.y(0)), casimir_omega_scalar(m), m.multiplicities());
}

inline VerificationReport crown_report(const GradedModel& m) {
  VerificationReport rep("crown_assembly");
  const auto a = assemble_crown(m);
  auto c = exact_check("assembly_equals_D", a.matches_d(), a.matches_d() ? "0" : "1",
                       "(z phi'', phi', phi) = (" + to_string(a.z_phi2) + ", " + to_string(a.phi1) + ", " +
                           to_string(a.phi0) + ")");
  c.data = a.to_json();
  rep.add(std::move(c));
  rep.add(exact_check("four_tau_plus_one_equals_two_d_plus_one_minus_e", a.coefficient_identity(),
                      to_string(abs(a.d_phi1 - a.two_d_plus_one_minus_e))));
  return rep;
}

// ---------------------------------------------------------------------------
// pi_chi on polynomial functions of x in n

/// Polynomial in the n-coordinates with exact coefficients.
class Polynomial {
 public:
  using Monomial = std::vector<std::uint8_t>;

  Polynomial() = default;
  explicit Polynomial(std::size_t vars) : vars_(vars) {}

  static Polynomial constant(std::size_t vars, const Rational& c) {
    Polynomial p(vars);
    if (sgn(c) != 0) p.terms_[Monomial(vars, 0)] = c;
    return p;
  }
  static Polynomial variable(std::size_t vars, std::size_t i) {
    Polynomial p(vars);
    Monomial mono(vars, 0);
    mono[i] = 1;
    p.terms_[mono] = 1;
    return p;
  }

  std::size_t vars() const { return vars_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& mono, const Rational& c) {
    if (sgn(c) == 0) return;
    auto& slot = terms_[mono];
    slot += c;
    if (sgn(slot) == 0) terms_.erase(mono);
  }

  Polynomial operator+(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [mono, c] : o.terms_) r.add_term(mono, c);
    return r;
  }
  Polynomial operator-(const Polynomial& o) const { return *this + o * Rational(-1); }
  Polynomial operator*(const Rational& s) const {
    Polynomial r(vars_);
    if (sgn(s) == 0) return r;
    for (const auto& [mono, c] : terms_) r.terms_[mono] = c * s;
    return r;
  }
  Polynomial operator*(const Polynomial& o) const {
    Polynomial r(vars_);
    for (const auto& [ma, ca] : terms_)
      for (const auto& [mb, cb] : o.terms_) {
        Monomial mono(vars_);
        for (std::size_t i = 0; i < vars_; ++i) mono[i] = static_cast<std::uint8_t>(ma[i] + mb[i]);
        r.add_term(mono, ca * cb);
      }
    return r;
  }
  Polynomial derivative(std::size_t i) const {
    Polynomial r(vars_);
    for (const auto& [mono, c] : terms_) {
      if (mono[i] == 0) continue;
      Monomial d = mono;
      --d[i];
      r.add_term(d, c * Rational(static_cast<long>(mono[i])));
    }
    return r;
  }
  Rational max_abs_coefficient() const {
    Rational m = 0;
    for (const auto& [mono, c] : terms_) m = std::max(m, Rational(abs(c)));
    return m;
  }

 private:
  std::size_t vars_ = 0;
  std::map<Monomial, Rational> terms_;
};

/// pi_chi(X) for chi = e^{-j d nu}: multiplication by a polynomial plus a polynomial vector field.
struct ActionOperator {
  Polynomial multiplier;
  std::vector<Polynomial> field;  // components in the n basis

  Polynomial apply(const Polynomial& f) const {
    Polynomial out = multiplier * f;
    for (std::size_t a = 0; a < field.size(); ++a)
      if (!field[a].is_zero()) out = out + field[a] * f.derivative(a);
    return out;
  }
};

/// The representation pi_chi on C^infty(n), chi = e^{-j d nu}, realized on polynomials.
class PolynomialAction {
 public:
  PolynomialAction(const GradedModel& m, const Rational& chi_weight) : m_(&m), chi_weight_(chi_weight) {
    for (std::size_t a = 0; a < m.dim(); ++a) ops_.push_back(build(a));
  }

  /// chi(X) = -chi_weight nu(X) for X in l; stored chi_weight = j d.
  const Rational& chi_weight() const { return chi_weight_; }

  Polynomial apply(const Element& x, const Polynomial& f) const {
    Polynomial out(m_->dim_n());
    for (std::size_t a = 0; a < x.size(); ++a)
      if (sgn(x[a]) != 0) out = out + ops_[a].apply(f) * x[a];
    return out;
  }

  const ActionOperator& op(std::size_t a) const { return ops_[a]; }

 private:
  /// Linear polynomial map x -> (coefficients of f(x) in the given grade), f linear in x.
  std::vector<Polynomial> linear_image(const std::function<Element(const Element&)>& f) const {
    const std::size_t nv = m_->dim_n();
    std::vector<Polynomial> comps(m_->dim(), Polynomial(nv));
    for (std::size_t c = 0; c < nv; ++c) {
      const Element img = f(m_->basis_element(m_->n_begin() + c));
      const Polynomial xc = Polynomial::variable(nv, c);
      for (std::size_t b = 0; b < img.size(); ++b)
        if (sgn(img[b]) != 0) comps[b] = comps[b] + xc * img[b];
    }
    return comps;
  }

  ActionOperator build(std::size_t a) const {
    const GradedModel& m = *m_;
    const std::size_t nv = m.dim_n();
    const Element e = m.basis_element(a);
    ActionOperator op{Polynomial(nv), std::vector<Polynomial>(nv, Polynomial(nv))};
    const int g = m.grade(a);
    if (g == 1) {
      // xi(x_0): constant field
      op.field[a - m.n_begin()] = Polynomial::constant(nv, 1);
    } else if (g == 0) {
      // chi(h_0) - xi([h_0, x])
      op.multiplier = Polynomial::constant(nv, -chi_weight_ * m.nu(e));
      const auto comps = linear_image([&](const Element& x) { return m.bracket(e, x); });
      for (std::size_t c = 0; c < nv; ++c) op.field[c] = comps[m.n_begin() + c] * Rational(-1);
    } else {
      // chi([x, y_0]) - 1/2 xi([[x, y_0], x])
      const auto h = linear_image([&](const Element& x) { return m.bracket(x, e); });  // l-valued, linear
      Polynomial mult(nv);
      for (std::size_t b = m.l_begin(); b < m.l_end(); ++b)
        if (!h[b].is_zero()) mult = mult + h[b] * (-chi_weight_ * m.nu(m.basis_element(b)));
      op.multiplier = mult;
      for (std::size_t b = m.l_begin(); b < m.l_end(); ++b) {
        if (h[b].is_zero()) continue;
        const auto hx = linear_image([&](const Element& x) { return m.bracket(m.basis_element(b), x); });
        for (std::size_t c = 0; c < nv; ++c)
          if (!hx[m.n_begin() + c].is_zero()) op.field[c] = op.field[c] + h[b] * hx[m.n_begin() + c] * Rational(-1, 2);
      }
    }
    return op;
  }

  const GradedModel* m_;
  Rational chi_weight_;
  std::vector<ActionOperator> ops_;
};

/// Random polynomial of degree <= deg with a few small rational terms.
inline Polynomial random_polynomial(std::size_t vars, int deg, int terms, Rng& rng) {
  Polynomial p(vars);
  for (int t = 0; t < terms; ++t) {
    Polynomial::Monomial mono(vars, 0);
    const long total = uniform_int(rng, 0, deg);
    for (long k = 0; k < total; ++k) ++mono[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(vars) - 1))];
    p.add_term(mono, small_rational(rng));
  }
  return p;
}

/// [pi(X), pi(Y)] f = pi([X, Y]) f exactly, over basis pairs and random polynomials.
inline VerificationReport action_homomorphism_check(const GradedModel& m, int j, std::size_t pairs, std::uint64_t seed) {
  VerificationReport rep("pi_chi_homomorphism");
  const Rational weight = Rational(j * m.multiplicities().d);
  PolynomialAction pi(m, weight);
  Rng rng(derive_seed(seed, 0x9c));
  detail::Residual r;
  const long dim = static_cast<long>(m.dim());
  for (std::size_t t = 0; t < pairs; ++t) {
    const auto a = static_cast<std::size_t>(uniform_int(rng, 0, dim - 1));
    const auto b = static_cast<std::size_t>(uniform_int(rng, 0, dim - 1));
    const Element ea = m.basis_element(a);
    const Element eb = m.basis_element(b);
    const Polynomial f = random_polynomial(m.dim_n(), 3, 4, rng);
    const Polynomial lhs = pi.apply(ea, pi.apply(eb, f)) - pi.apply(eb, pi.apply(ea, f));
    const Polynomial rhs = pi.apply(m.bracket(ea, eb), f);
    r.observe((lhs - rhs).max_abs_coefficient());
  }
  auto c = r.result("commutator_relation", "chi = e^{-" + std::to_string(j) + " d nu}");
  rep.add(std::move(c));
  return rep;
}

// ---------------------------------------------------------------------------
// Correlated Monte Carlo test of pi(y_1 + theta y_1) Phi = 0

struct SphericalGrid {
  std::vector<Eigen::VectorXd> points;  // n coordinates
  std::vector<std::string> labels;
};

/// Origin plus 3 rays with |x| in {0.5, 1, ..., 4.5}.
inline SphericalGrid default_spherical_grid(const GradedModel& m) {
  SphericalGrid g;
  g.points.push_back(Eigen::VectorXd::Zero(static_cast<Eigen::Index>(m.dim_n())));
  g.labels.push_back("origin");
  const auto rays = default_rays(m);
  for (std::size_t r = 0; r < rays.size(); ++r)
    for (int k = 1; k <= 9; ++k) {
      const double t = 0.5 * k;
      g.points.push_back(t * rays[r]);
      g.labels.push_back("ray" + std::to_string(r) + "/" + std::to_string(t).substr(0, 3));
    }
  return g;
}

/// Float tensors for the integrand at a fixed x.
class SphericalIntegrand {
 public:
  explicit SphericalIntegrand(const GradedModel& m) {
    const std::size_t nb = m.dim_nbar();
    const std::size_t nn = m.dim_n();
    pair_ = Eigen::MatrixXd(static_cast<Eigen::Index>(nn), static_cast<Eigen::Index>(nb));
    linear_ = Eigen::VectorXd(static_cast<Eigen::Index>(nb));
    const Element ty1 = m.theta(m.y(0));
    for (std::size_t a = 0; a < nb; ++a) {
      const Element ea = m.basis_element(m.nbar_begin() + a);
      linear_(static_cast<Eigen::Index>(a)) = to_double(m.pair(ty1, ea));
      for (std::size_t c = 0; c < nn; ++c)
        pair_(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(a)) =
            to_double(m.pair(m.basis_element(m.n_begin() + c), ea));
    }
    // quad_[c](a, b) = <e_c, [[theta e_a, y_1], e_b]>
    quad_.assign(nn, Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(nb), static_cast<Eigen::Index>(nb)));
    for (std::size_t a = 0; a < nb; ++a) {
      const Element inner = m.bracket(m.theta(m.basis_element(m.nbar_begin() + a)), m.y(0));
      for (std::size_t b = 0; b < nb; ++b) {
        const Element q = m.bracket(inner, m.basis_element(m.nbar_begin() + b));
        for (std::size_t c = 0; c < nn; ++c)
          quad_[c](static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
              to_double(m.pair(m.basis_element(m.n_begin() + c), q));
      }
    }
  }

  /// <x, .> on nbar and the quadratic form y -> <x, [[theta y, y_1], y]>.
  std::pair<Eigen::VectorXd, Eigen::MatrixXd> at(const Eigen::VectorXd& x) const {
    Eigen::MatrixXd q = Eigen::MatrixXd::Zero(linear_.size(), linear_.size());
    for (Eigen::Index c = 0; c < x.size(); ++c) q += x(c) * quad_[static_cast<std::size_t>(c)];
    return {pair_.transpose() * x, q};
  }
  /// y -> <theta y_1, y>.
  const Eigen::VectorXd& linear() const { return linear_; }

 private:
  Eigen::MatrixXd pair_;
  Eigen::VectorXd linear_;
  std::vector<Eigen::MatrixXd> quad_;
};

struct SphericalPoint {
  std::string label;
  double abs_x;
  MCEstimate value;    // Re pi(y_1 + theta y_1) Phi at x, true tau
  MCEstimate imag;     // Im part, zero by y -> -y symmetry
  MCEstimate control;  // same with tau + 1
  double z;
  double z_control;
};

inline double z_score(const MCEstimate& e) {
  if (e.stderr_ > 0) return std::abs(e.value) / e.stderr_;
  return e.value == 0 ? 0.0 : std::numeric_limits<double>::infinity();
}

/// Whether the tau + 1 control integrand, of order w^{-2 tau - 2} |y|-wise at 0, is integrable against w^{dn-1} dw.
inline bool spherical_control_finite(const GradedModel& m) {
  const auto c = m.group_class();
  const double dn = static_cast<double>(catalog::radial_exponent(c) + 1);
  return dn - 2 * std::max(catalog::tau(c.mult).value() + 1, 0.0) > 0;
}

/// Shape of the Gamma proposal: the largest one (up to dn) keeping the control integrand of finite
/// variance, or the true integrand when the control integral itself diverges.
inline double spherical_proposal_shape(const GradedModel& m) {
  const auto c = m.group_class();
  const double dn = static_cast<double>(catalog::radial_exponent(c) + 1);
  const double tau = catalog::tau(c.mult).value();
  const double beta = spherical_control_finite(m) ? -2 * std::max(tau + 1, 0.0) : -2 * std::max(tau, 0.0);
  return std::clamp(2 * beta + 2 * dn - 0.5, 0.5, dn);
}

/// One grid point: per-sample value (q phi' cos s - l phi sin s) times the importance weight.
inline SphericalPoint spherical_point(const GradedModel& m, const OrbitSampler& s, const SphericalIntegrand& integ,
                                      const Eigen::VectorXd& x, const std::string& label, std::size_t samples,
                                      std::uint64_t seed) {
  const auto cls = m.group_class();
  const HalfInteger tau = catalog::tau(cls.mult);
  const long ex = catalog::radial_exponent(cls);
  const RadialProposal prop{spherical_proposal_shape(m), {1.0}, ex};
  const auto [p, q] = integ.at(x);
  Rng rng(seed);
  MeanAccumulator re;
  MeanAccumulator im;
  MeanAccumulator ctrl;
  Eigen::VectorXd yp;
  for (std::size_t i = 0; i < samples; ++i) {
    s.base_point(rng, yp);
    const double w = prop.sample(rng);
    const double wt = prop.weight(w);
    const double sarg = w * p.dot(yp);
    const double qv = w * w * yp.dot(q * yp);
    const double lv = w * integ.linear().dot(yp);
    const auto k = bessel_k_sequence(tau, 3, w);
    const double pw = std::pow(w, -tau.value());
    const double phi = k[0] * pw;
    const double phi1 = -0.5 * k[1] * pw / w;
    const double phi_c = k[1] * pw / w;
    const double phi1_c = -0.5 * k[2] * pw / (w * w);
    const double cs = std::cos(sarg);
    const double sn = std::sin(sarg);
    re.push(wt * (qv * phi1 * cs - lv * phi * sn));
    im.push(-wt * (qv * phi1 * sn + lv * phi * cs));
    ctrl.push(wt * (qv * phi1_c * cs - lv * phi_c * sn));
  }
  SphericalPoint out{label,
                     norm_n(m, x),
                     {re.mean, re.stderr_of_mean(), samples, seed},
                     {im.mean, im.stderr_of_mean(), samples, seed},
                     {ctrl.mean, ctrl.stderr_of_mean(), samples, seed},
                     0,
                     0};
  out.z = z_score(out.value);
  out.z_control = z_score(out.control);
  return out;
}

inline constexpr std::size_t kMinSphericalSamples = 10000;

/// pi(y_1 + theta y_1) Phi = 0 at every grid point within 3 standard errors, with the tau + 1 control
/// required to reject at more than 5; underpowered runs are inconclusive.
inline VerificationReport verify_spherical_direct(const GradedModel& m, const SphericalGrid& grid, std::size_t samples,
                                                  std::uint64_t seed) {
  VerificationReport rep("spherical_direct");
  OrbitSampler s(m);
  SphericalIntegrand integ(m);
  std::vector<SphericalPoint> pts(grid.points.size());
  if (samples > 0)
    parallel_for(grid.points.size(), [&](std::size_t i) {
      pts[i] = spherical_point(m, s, integ, grid.points[i], grid.labels[i], samples, derive_seed(seed, 1000 + i));
    });
  double worst = 0;
  double control_max = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& p = pts[i];
    worst = std::max(worst, p.z);
    control_max = std::max(control_max, p.z_control);
    CheckResult c = float_check("x=" + p.label, p.z <= 3, p.z, "|estimate| / stderr");
    c.samples = samples;
    c.data = {{"abs_x", p.abs_x},
              {"value", p.value.to_json()},
              {"imag", p.imag.to_json()},
              {"control_tau_plus_1", p.control.to_json()},
              {"control_integral_finite", spherical_control_finite(m)}};
    if (samples < kMinSphericalSamples) c.status = Status::Inconclusive;
    rep.add(std::move(c));
  }
  CheckResult ctl = float_check("negative_control_tau_plus_1", control_max > 5, control_max,
                                "largest |estimate| / stderr with phi_{tau+1} in place of phi_tau");
  ctl.samples = samples;
  // a control that does not reject means the run cannot tell zero from nonzero
  if (ctl.status == Status::Fail || samples < kMinSphericalSamples) ctl.status = Status::Inconclusive;
  rep.add(std::move(ctl));
  return rep;
}

inline VerificationReport verify_spherical_direct(const GradedModel& m, std::size_t samples, std::uint64_t seed) {
  return verify_spherical_direct(m, default_spherical_grid(m), samples, seed);
}

}  // namespace minrep
