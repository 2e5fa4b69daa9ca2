#pragma once

// The minimal orbit O_1 = L.y_1 in nbar: exact rational points, Monte Carlo
// sampling of the equivariant measure dmu_1 = dmu'(y') w^{dn-1} dw, radial
// quadrature, and the Fourier transform of g_tau dmu_1.

#include "minrep/bessel.hpp"
#include "minrep/liealg.hpp"
#include "minrep/model.hpp"
#include "minrep/report.hpp"
#include "minrep/rng.hpp"

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace minrep {

/// Worker count from MINREP_THREADS (default 1).
inline unsigned thread_count() {
  if (const char* s = std::getenv("MINREP_THREADS")) {
    const long v = std::strtol(s, nullptr, 10);
    if (v >= 1 && v <= 256) return static_cast<unsigned>(v);
  }
  return 1;
}

/// Runs fn(i) for i in [0, count) on thread_count() workers; results must not depend on scheduling.
template <class F>
void parallel_for(std::size_t count, F&& fn) {
  const unsigned workers = std::min<std::size_t>(thread_count(), std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

// ---------------------------------------------------------------------------
// Exact points

struct OrbitPoint {
  Element y;
  Rational norm_sq;  // |y|^2 = -<y, theta y>
  double radius() const { return std::sqrt(to_double(norm_sq)); }
};

/// [[y, theta y], y] - 2 <y, theta y> y, which vanishes exactly on O_1.
inline Element membership_residual(const GradedModel& m, const Element& y) {
  const Element ty = m.theta(y);
  return sub(m.bracket(m.bracket(y, ty), y), scaled(y, 2 * m.pair(y, ty)));
}

/// Exact points Ad(l) y_1 for random rational l in L; the first point is y_1 itself.
inline std::vector<OrbitPoint> sample_orbit_rational(const GradedModel& m, std::size_t count, std::uint64_t seed) {
  std::vector<OrbitPoint> out;
  Rng rng(derive_seed(seed, 0x0b17));
  for (std::size_t i = 0; i < count; ++i) {
    Element y = i == 0 ? m.y(0) : m.adjoint(m.random_levi_element(rng), m.y(0));
    Rational r = m.norm_sq_nbar(y);
    out.push_back({std::move(y), std::move(r)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Floating-point sampling

/// Standard normal pair by Box-Muller.
inline std::pair<double, double> normal_pair(Rng& rng) {
  double u = uniform01(rng);
  while (u <= 0) u = uniform01(rng);
  const double v = uniform01(rng);
  const double r = std::sqrt(-2 * std::log(u));
  return {r * std::cos(2 * std::numbers::pi * v), r * std::sin(2 * std::numbers::pi * v)};
}

/// Radial importance proposal for the target density w^exponent dw: an equal mixture of Gamma(shape, rate_k).
struct RadialProposal {
  double shape;
  std::vector<double> rates;
  long exponent;

  double sample(Rng& rng) const {
    const double rate = rates.size() == 1 ? rates[0] : rates[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(rates.size()) - 1))];
    std::gamma_distribution<double> g(shape, 1.0 / rate);
    // draws below the Bessel refusal threshold are redrawn (probability about 1e-8^shape)
    double w = g(rng);
    while (!(w >= kMinBesselArgument)) w = g(rng);
    return w;
  }
  /// w^exponent divided by the mixture density at w.
  double weight(double w) const {
    double mix = 0;
    for (double r : rates) mix += std::exp(shape * std::log(r) - r * w);
    mix /= static_cast<double>(rates.size());
    return std::exp(std::lgamma(shape) + (exponent + 1 - shape) * std::log(w)) / mix;
  }
};

/// dmu_1 = dmu'(y') w^{dn-1} dw with mu' the M-invariant probability measure on the unit sphere of O_1.
struct RadialMeasure {
  long exponent;
  double base_mass = 1.0;  // mu'(O'); dmu_1 is only defined up to this scalar

  static RadialMeasure for_model(const GradedModel& m) { return {catalog::radial_exponent(m.group_class())}; }
};

/// Float view of nbar with a sampler for the unit sphere O' = M.y_1, M = K cap L.
class OrbitSampler {
 public:
  explicit OrbitSampler(const GradedModel& m) : model_(&m), dim_(m.dim_nbar()) {
    const std::size_t half = m.dim_ambient() / 2;
    // M acts by k = diag(G, G) on o2n2n and by diag(G_1, G_2) on gl2n.
    blocks_ = m.family() == ModelFamily::O2n2n ? std::vector<Block>{{0, half, 0}, {half, half, 0}}
                                               : std::vector<Block>{{0, half, 0}, {half, half, 1}};
    groups_ = m.family() == ModelFamily::O2n2n ? 1 : 2;
    for (const auto& e : m.basis_matrix(m.triples()[0].y_index)) y1_.push_back({e.row, e.col, to_double(e.value)});
    for (std::size_t a = m.nbar_begin(); a < m.nbar_end(); ++a) {
      const auto& p = m.basis_matrix(a).front();
      pivots_.push_back({p.row, p.col, to_double(p.value)});
    }
    // the columns of each group's Haar matrix that y_1 touches
    columns_.assign(groups_, {});
    for (const auto& e : y1_)
      for (std::uint32_t idx : {e.row, e.col}) {
        const Block& b = block_of(idx);
        auto& cols = columns_[b.group];
        const std::size_t c = idx - b.offset;
        if (std::find(cols.begin(), cols.end(), c) == cols.end()) cols.push_back(c);
      }
    for (auto& c : columns_) std::sort(c.begin(), c.end());
    block_size_ = half;

    norm_gram_ = Eigen::MatrixXd(dim_, dim_);
    for (std::size_t a = 0; a < dim_; ++a)
      for (std::size_t b = 0; b < dim_; ++b)
        norm_gram_(a, b) = to_double(-m.pair(m.basis_element(a), m.theta(m.basis_element(b))));
    // ad(h_j) is diagonal on the nbar basis
    h_weights_ = Eigen::MatrixXd(m.n(), dim_);
    for (int j = 0; j < m.n(); ++j)
      for (std::size_t a = 0; a < dim_; ++a) {
        const Element e = m.basis_element(a);
        const Element he = m.bracket(m.h(j), e);
        if (he != scaled(e, he[a])) throw std::logic_error("ad h_j is not diagonal on the nbar basis");
        h_weights_(j, a) = to_double(he[a]);
      }
  }

  const GradedModel& model() const { return *model_; }
  std::size_t dim() const { return dim_; }
  const Eigen::MatrixXd& norm_gram() const { return norm_gram_; }
  /// Eigenvalue of ad(h_j) on the a-th nbar basis vector.
  const Eigen::MatrixXd& h_weights() const { return h_weights_; }

  double norm(const Eigen::VectorXd& y) const { return std::sqrt(std::max(0.0, y.dot(norm_gram_ * y))); }

  /// Ad(k) y_1 for k Haar-distributed in M, as nbar coordinates.
  void base_point(Rng& rng, Eigen::VectorXd& out) const {
    // frames[g][c] = column c of the g-th Haar orthogonal matrix (only the needed columns)
    thread_local std::vector<std::vector<Eigen::VectorXd>> frames;
    frames.assign(groups_, {});
    for (std::size_t g = 0; g < groups_; ++g) {
      for (std::size_t k = 0; k < columns_[g].size(); ++k) {
        Eigen::VectorXd v(block_size_);
        for (std::size_t i = 0; i < block_size_; i += 2) {
          auto [a, b] = normal_pair(rng);
          v(i) = a;
          if (i + 1 < block_size_) v(i + 1) = b;
        }
        for (const auto& u : frames[g]) v -= u.dot(v) * u;
        v /= v.norm();
        frames[g].push_back(std::move(v));
      }
    }
    auto kcol = [&](std::uint32_t idx) -> const Eigen::VectorXd& {
      const Block& b = block_of(idx);
      const auto& cols = columns_[b.group];
      const std::size_t pos = std::find(cols.begin(), cols.end(), idx - b.offset) - cols.begin();
      return frames[b.group][pos];
    };
    out.resize(static_cast<Eigen::Index>(dim_));
    for (std::size_t a = 0; a < dim_; ++a) {
      const auto& p = pivots_[a];
      const Block& br = block_of(p.row);
      const Block& bc = block_of(p.col);
      double s = 0;
      for (const auto& e : y1_) {
        if (&block_of(e.row) != &br || &block_of(e.col) != &bc) continue;
        s += kcol(e.row)(p.row - br.offset) * e.value * kcol(e.col)(p.col - bc.offset);
      }
      out(static_cast<Eigen::Index>(a)) = s / p.value;
    }
  }

 private:
  struct Block {
    std::size_t offset;
    std::size_t size;
    std::size_t group;
  };
  struct Entry {
    std::uint32_t row;
    std::uint32_t col;
    double value;
  };
  const Block& block_of(std::size_t idx) const {
    for (const auto& b : blocks_)
      if (idx >= b.offset && idx < b.offset + b.size) return b;
    throw std::logic_error("index outside the ambient matrix");
  }

  const GradedModel* model_;
  std::size_t dim_;
  std::vector<Block> blocks_;
  std::size_t groups_ = 1;
  std::size_t block_size_ = 0;
  std::vector<Entry> y1_;
  std::vector<Entry> pivots_;
  std::vector<std::vector<std::size_t>> columns_;
  Eigen::MatrixXd norm_gram_;
  Eigen::MatrixXd h_weights_;
};

/// Points of O' (|y'| = 1) distributed by the M-invariant measure.
inline std::vector<Eigen::VectorXd> sample_base(const GradedModel& m, std::size_t count, std::uint64_t seed) {
  OrbitSampler s(m);
  Rng rng(derive_seed(seed, 0xba5e));
  std::vector<Eigen::VectorXd> out(count);
  for (auto& y : out) s.base_point(rng, y);
  return out;
}

struct MCEstimate {
  double value = 0;
  double stderr_ = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;

  nlohmann::ordered_json to_json() const {
    return {{"value", value}, {"stderr", stderr_}, {"samples", samples}, {"seed", seed}};
  }
};

/// Running mean and variance (Welford), merged in a fixed order.
struct MeanAccumulator {
  std::size_t count = 0;
  double mean = 0;
  double m2 = 0;
  void push(double x) {
    ++count;
    const double d = x - mean;
    mean += d / static_cast<double>(count);
    m2 += d * (x - mean);
  }
  double variance() const { return count > 1 ? m2 / static_cast<double>(count - 1) : 0.0; }
  double stderr_of_mean() const { return count > 0 ? std::sqrt(variance() / static_cast<double>(count)) : 0.0; }
};

/// Ratio of two means from paired samples, with a delta-method standard error.
struct RatioAccumulator {
  MeanAccumulator num;
  MeanAccumulator den;
  double cross = 0;  // running co-moment
  void push(double a, double b) {
    const double db = b - den.mean;
    num.push(a);
    den.push(b);
    cross += db * (a - num.mean);
  }
  double ratio() const { return num.mean / den.mean; }
  double stderr_of_ratio() const {
    const auto n = static_cast<double>(num.count);
    if (num.count < 2) return 0;
    const double r = ratio();
    const double cov = cross / (n - 1);
    const double var = num.variance() - 2 * r * cov + r * r * den.variance();
    return std::sqrt(std::max(var, 0.0) / n) / std::abs(den.mean);
  }
};

// ---------------------------------------------------------------------------
// Radial quadrature

class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct RadialIntegral {
  double value;
  double error;
  bool converged;
};

/// int_0^inf K_tau(w)^2 w^{exponent - 2 tau} dw; requires 4 tau < exponent.
inline RadialIntegral l2_norm_g_tau(HalfInteger tau, long exponent) {
  if (!(2 * tau.twice() < exponent))
    throw PreconditionError("square-integrability needs 4 tau < dn - 1 (tau = " + tau.str() +
                            ", dn - 1 = " + std::to_string(exponent) + ")");
  const double p = static_cast<double>(exponent) - 2 * tau.value();
  auto f = [&](double w) {
    if (w < kMinBesselArgument) return 0.0;
    const double k = bessel_k(tau, w);
    return k * k * std::pow(w, p);
  };
  QuadratureOptions opt;
  opt.rel_tol = 1e-12;
  const auto r = integrate_split(f, 0.0, {1e-4, 1e-2, 0.25, 1.0, 4.0, 16.0}, opt);
  return {r.value, r.error, r.converged};
}

inline RadialIntegral l2_norm_g_tau(const GradedModel& m) {
  const auto c = m.group_class();
  return l2_norm_g_tau(catalog::tau(c.mult), catalog::radial_exponent(c));
}

/// Order k of the derivative phi_tau^{(k)}(w^2) and whether int_0 |.| w^{exponent} dw is finite.
struct IntegrabilityEntry {
  std::string function;
  bool predicted_l1;
  bool numerically_l1;
  double truncated_integral;  // int_{1e-6}^inf
  double tail_growth;         // increase from [1e-5, inf) to [1e-6, inf), relative
};

/// Classifies f(w) w^exponent near 0 by truncated integrals over [10^-k, inf).
inline IntegrabilityEntry classify_l1(const std::string& name, const std::function<double(double)>& f, long exponent,
                                      double pole_order) {
  auto integrand = [&](double w) { return std::abs(f(w)) * std::pow(w, static_cast<double>(exponent)); };
  QuadratureOptions opt;
  opt.rel_tol = 1e-10;
  std::vector<double> trunc;
  for (double eps : {1e-4, 1e-5, 1e-6}) {
    std::vector<double> breaks;
    for (double b = eps * 10; b < 20; b *= 10) breaks.push_back(b);
    trunc.push_back(integrate_split(integrand, eps, breaks, opt).value);
  }
  const double growth = (trunc[2] - trunc[1]) / trunc[2];
  const bool predicted = static_cast<double>(exponent) - pole_order > -1.0;
  // a convergent tail adds O(eps^{exponent - pole + 1}); a divergent one adds a fixed fraction per decade
  const bool numeric = growth < 1e-3;
  return {name, predicted, numeric, trunc[2], growth};
}

/// L^1(O_1, dmu_1) membership of g_tau, g_tau', g_tau'' and of the weighted w^2 g_tau''.
inline VerificationReport integrability_check(const GradedModel& m) {
  VerificationReport rep("integrability");
  const auto c = m.group_class();
  const HalfInteger tau = catalog::tau(c.mult);
  const long ex = catalog::radial_exponent(c);
  auto pole = [&](int k) { return 2 * std::max(0.0, tau.value() + k); };
  std::vector<IntegrabilityEntry> entries;
  entries.push_back(classify_l1("g", [&](double w) { return g_tau_derivative(tau, 0, w); }, ex, pole(0)));
  entries.push_back(classify_l1("g'", [&](double w) { return g_tau_derivative(tau, 1, w); }, ex, pole(1)));
  entries.push_back(classify_l1("g''", [&](double w) { return g_tau_derivative(tau, 2, w); }, ex, pole(2)));
  entries.push_back(classify_l1("|y| g", [&](double w) { return w * g_tau_derivative(tau, 0, w); }, ex, pole(0) - 1));
  entries.push_back(
      classify_l1("|y|^2 g'", [&](double w) { return w * w * g_tau_derivative(tau, 1, w); }, ex, pole(1) - 2));
  entries.push_back(
      classify_l1("|y|^2 g''", [&](double w) { return w * w * g_tau_derivative(tau, 2, w); }, ex, pole(2) - 2));
  nlohmann::ordered_json membership;
  for (const auto& e : entries) {
    nlohmann::ordered_json data{{"predicted_l1", e.predicted_l1},
                                {"numerically_l1", e.numerically_l1},
                                {"integral_from_1e-6", e.truncated_integral},
                                {"last_decade_growth", e.tail_growth}};
    auto chk = exact_check("l1_classification/" + e.function, e.predicted_l1 == e.numerically_l1,
                           e.predicted_l1 == e.numerically_l1 ? "0" : "1",
                           std::string(e.function) + (e.numerically_l1 ? " is" : " is not") + " in L1(O_1, dmu_1)");
    chk.exact = false;
    chk.data = data;
    rep.add(std::move(chk));
    membership[e.function] = e.numerically_l1;
  }
  // the spherical identity integrates g against linear and |y|^2 g' against quadratic polynomials
  const bool needed = entries[0].numerically_l1 && entries[3].numerically_l1 && entries[4].numerically_l1;
  auto req = exact_check("spherical_integrands_l1", needed, needed ? "0" : "1", "g, |y| g and |y|^2 g' in L1");
  req.exact = false;
  req.data = {{"membership", membership}};
  rep.add(std::move(req));
  return rep;
}

// ---------------------------------------------------------------------------
// Monte Carlo checks

/// Radial test functions of |y| used by the scaling and equivariance checks.
struct TestFunction {
  std::string name;
  std::function<double(const Eigen::VectorXd& y, double r)> f;
};

inline std::vector<TestFunction> test_function_bank(const OrbitSampler& s) {
  Eigen::VectorXd dir = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(s.dim()));
  for (Eigen::Index a = 0; a < dir.size(); ++a) dir(a) = 1.0 + 0.5 * static_cast<double>(a % 3);
  dir /= std::sqrt(dir.dot(s.norm_gram() * dir));
  const Eigen::VectorXd g = s.norm_gram() * dir;
  return {
      {"gaussian", [](const Eigen::VectorXd&, double r) { return std::exp(-r * r); }},
      {"exponential", [](const Eigen::VectorXd&, double r) { return std::exp(-r); }},
      {"anisotropic", [g](const Eigen::VectorXd& y, double r) {
         const double c = g.dot(y);
         return std::exp(-r) * (1.0 + c * c / (1.0 + r * r));
       }},
  };
}

/// Ratio int f(l.y) dmu_1 / int f dmu_1 for l = exp(sum_j t_j h_j), common samples.
inline RatioAccumulator pushforward_ratio(const OrbitSampler& s, const TestFunction& tf, const Eigen::VectorXd& t,
                                          std::size_t samples, std::uint64_t seed, const RadialProposal& prop) {
  Rng rng(seed);
  Eigen::VectorXd scale = (s.h_weights().transpose() * t).array().exp();
  Eigen::VectorXd yp;
  RatioAccumulator acc;
  for (std::size_t i = 0; i < samples; ++i) {
    s.base_point(rng, yp);
    const double w = prop.sample(rng);
    const double wt = prop.weight(w);
    const Eigen::VectorXd y = w * yp;
    const Eigen::VectorXd ly = y.cwiseProduct(scale);
    acc.push(wt * tf.f(ly, s.norm(ly)), wt * tf.f(y, w));
  }
  return acc;
}

/// Relative-error check on a Monte Carlo ratio; a miss that is within 3 standard errors is underpowered, not wrong.
inline CheckResult ratio_check(std::string name, const RatioAccumulator& acc, double expected, double rel_tol) {
  const double rel = std::abs(acc.ratio() / expected - 1);
  auto c = float_check(std::move(name), rel < rel_tol, rel);
  if (c.status == Status::Fail && std::abs(acc.ratio() - expected) < 3 * acc.stderr_of_ratio())
    c.status = Status::Inconclusive;
  c.data = {{"ratio", acc.ratio()}, {"expected", expected}, {"stderr", acc.stderr_of_ratio()}};
  return c;
}

/// dmu_1(z y) = z^{dn} dmu_1(y): int f(z y) dmu_1 = z^{-dn} int f dmu_1 for z in {1/2, 2}, with z y = Ad(exp(-(ln z) h/2)) y.
inline VerificationReport scaling_check(const GradedModel& m, std::size_t samples, std::uint64_t seed,
                                        double rel_tol = 0.01) {
  VerificationReport rep("measure_scaling");
  OrbitSampler s(m);
  const long dn = catalog::radial_exponent(m.group_class()) + 1;
  const RadialProposal prop{static_cast<double>(dn), {0.5, 1.0, 2.0, 4.0, 8.0}, dn - 1};
  const auto bank = test_function_bank(s);
  struct Job {
    double z;
    std::size_t f;
  };
  std::vector<Job> jobs;
  for (double z : {0.5, 2.0})
    for (std::size_t f = 0; f < bank.size(); ++f) jobs.push_back({z, f});
  std::vector<CheckResult> results(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t i) {
    const auto& job = jobs[i];
    Eigen::VectorXd t = Eigen::VectorXd::Constant(m.n(), -0.5 * std::log(job.z));
    const auto acc = pushforward_ratio(s, bank[job.f], t, samples, derive_seed(seed, 100 + i), prop);
    const double expected = std::pow(job.z, -static_cast<double>(dn));
    auto c = ratio_check("z=" + std::string(job.z < 1 ? "1/2" : "2") + "/" + bank[job.f].name, acc, expected, rel_tol);
    c.samples = samples;
    results[i] = std::move(c);
  });
  for (auto& r : results) rep.add(std::move(r));
  return rep;
}

/// int f(l.y) dmu_1(y) = e^{2d nu(log l)} int f dmu_1 for diagonal l = exp(sum t_j h_j).
inline VerificationReport equivariance_check(const GradedModel& m, std::size_t l_samples, std::size_t samples,
                                             std::uint64_t seed, double rel_tol = 0.01) {
  VerificationReport rep("equivariance");
  OrbitSampler s(m);
  const int d = m.multiplicities().d;
  const long dn = catalog::radial_exponent(m.group_class()) + 1;
  const RadialProposal prop{static_cast<double>(dn), {0.5, 1.0, 2.0, 4.0, 8.0}, dn - 1};
  const auto bank = test_function_bank(s);

  struct Job {
    std::string name;
    Eigen::VectorXd t;
  };
  std::vector<Job> jobs;
  jobs.push_back({"identity", Eigen::VectorXd::Zero(m.n())});
  const double a = std::log(2.0);
  jobs.push_back({"exp(-a h/2), a=ln 2", Eigen::VectorXd::Constant(m.n(), -a / 2)});
  Rng rng(derive_seed(seed, 0xe9));
  for (std::size_t k = 0; k < l_samples; ++k) {
    Eigen::VectorXd t(m.n());
    for (int j = 0; j < m.n(); ++j) t(j) = 0.3 * (2 * uniform01(rng) - 1);
    jobs.push_back({"random_diagonal_" + std::to_string(k), t});
  }
  std::vector<CheckResult> results(jobs.size() * bank.size());
  parallel_for(results.size(), [&](std::size_t i) {
    const auto& job = jobs[i / bank.size()];
    const auto& tf = bank[i % bank.size()];
    // nu(sum t_j h_j) = sum t_j, since nu(h_j) = 1
    double nu_val = 0;
    for (int j = 0; j < m.n(); ++j) nu_val += job.t(j) * to_double(m.nu(m.h(j)));
    const double expected = std::exp(2.0 * d * nu_val);
    const auto acc = pushforward_ratio(s, tf, job.t, samples, derive_seed(seed, 200 + i), prop);
    auto c = ratio_check(job.name + "/" + tf.name, acc, expected, rel_tol);
    c.samples = samples;
    c.data["t"] = std::vector<double>(job.t.data(), job.t.data() + job.t.size());
    results[i] = std::move(c);
  });
  for (auto& r : results) rep.add(std::move(r));
  return rep;
}

/// Proposal matched to g_tau: w^{dn-1} g_tau(w) ~ w^{dn-1-2 tau} at 0 (with a log for tau = 0), e^{-w} at infinity.
inline RadialProposal g_tau_proposal(const GradedModel& m) {
  const auto c = m.group_class();
  const HalfInteger tau = catalog::tau(c.mult);
  const long ex = catalog::radial_exponent(c);
  double shape = static_cast<double>(ex + 1) - 2 * std::max(0.0, tau.value());
  if (tau.twice() == 0) shape -= 0.5;
  return {shape, {1.0}, ex};
}

struct ComplexEstimate {
  MCEstimate real;
  MCEstimate imag;
};

/// Phi(x) = int e^{-i<x,y>} g_tau(y) dmu_1(y); real part from antithetic pairs (y, -y), imaginary part from raw samples.
inline ComplexEstimate fourier_phi(const GradedModel& m, const Eigen::VectorXd& x_n, std::size_t samples,
                                   std::uint64_t seed) {
  if (samples < 10000) throw std::invalid_argument("fourier_phi needs at least 1e4 samples");
  OrbitSampler s(m);
  const auto c = m.group_class();
  const HalfInteger tau = catalog::tau(c.mult);
  const RadialProposal prop = g_tau_proposal(m);
  // <x, y> = p . y with p_a = <x, e_a>
  Eigen::VectorXd p = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(m.dim_nbar()));
  for (std::size_t a = 0; a < m.dim_nbar(); ++a)
    for (std::size_t b = 0; b < m.dim_n(); ++b)
      p(static_cast<Eigen::Index>(a)) +=
          x_n(static_cast<Eigen::Index>(b)) * to_double(m.pair(m.basis_element(m.n_begin() + b), m.basis_element(a)));
  Rng rng(seed);
  MeanAccumulator re;
  MeanAccumulator im;
  Eigen::VectorXd yp;
  for (std::size_t i = 0; i < samples; ++i) {
    s.base_point(rng, yp);
    const double w = prop.sample(rng);
    const double f = prop.weight(w) * g_tau(tau, w);
    const double arg = w * p.dot(yp);
    re.push(f * std::cos(arg));
    im.push(-f * std::sin(arg));
  }
  return {{re.mean, re.stderr_of_mean(), samples, seed}, {im.mean, im.stderr_of_mean(), samples, seed}};
}

/// Fixed element of M: the rotation (3/5, 4/5) in the coordinate plane (0, last) of each diagonal block.
inline LeviElement fixed_compact_element(const GradedModel& m) {
  const std::size_t s = m.dim_ambient();
  const std::size_t half = s / 2;
  LeviElement k{RationalMatrix::identity(s), RationalMatrix::identity(s)};
  const Rational c(3, 5);
  const Rational sn(4, 5);
  for (std::size_t off : {std::size_t{0}, half}) {
    const std::size_t i = off;
    const std::size_t j = off + half - 1;
    k.g(i, i) = c;
    k.g(j, j) = c;
    k.g(i, j) = -sn;
    k.g(j, i) = sn;
    k.ginv(i, i) = c;
    k.ginv(j, j) = c;
    k.ginv(i, j) = sn;
    k.ginv(j, i) = -sn;
  }
  return k;
}

/// Base sampler diagnostics: |y'| = 1, <y', theta y'> = -1, and the law of y' against that of k0.y'.
inline VerificationReport base_sampler_check(const GradedModel& m, std::size_t samples, std::uint64_t seed) {
  VerificationReport rep("base_sampler");
  OrbitSampler s(m);
  const auto k0 = fixed_compact_element(m);
  const auto dim = static_cast<Eigen::Index>(s.dim());
  Eigen::MatrixXd act(dim, dim);
  for (Eigen::Index a = 0; a < dim; ++a) {
    const Element img = m.adjoint(k0, m.basis_element(static_cast<std::size_t>(a)));
    for (Eigen::Index b = 0; b < dim; ++b) act(b, a) = to_double(img[static_cast<std::size_t>(b)]);
  }
  Eigen::VectorXd dir(dim);
  for (Eigen::Index a = 0; a < dim; ++a) dir(a) = std::cos(1.0 + static_cast<double>(a));
  const Eigen::VectorXd dir_moved = act.transpose() * dir;

  Rng rng_a(derive_seed(seed, 0xba5e));
  Rng rng_b(derive_seed(seed, 0xba5f));
  Eigen::VectorXd yp;
  double worst_norm = 0;
  double worst_pair = 0;
  MeanAccumulator m1a, m2a, m1b, m2b;
  for (std::size_t i = 0; i < samples; ++i) {
    s.base_point(rng_a, yp);
    worst_norm = std::max(worst_norm, std::abs(s.norm(yp) - 1));
    const double u = dir.dot(yp);
    m1a.push(u);
    m2a.push(u * u);
    s.base_point(rng_b, yp);
    worst_pair = std::max(worst_pair, std::abs(s.norm(act * yp) - 1));
    const double v = dir_moved.dot(yp);
    m1b.push(v);
    m2b.push(v * v);
  }
  auto nc = float_check("unit_norm", worst_norm < 1e-12, worst_norm, "max | |y'| - 1 |");
  nc.samples = samples;
  rep.add(std::move(nc));
  auto pc = float_check("k0_preserves_norm", worst_pair < 1e-12, worst_pair, "max | |k0.y'| - 1 |");
  pc.samples = samples;
  rep.add(std::move(pc));
  auto zscore = [](const MeanAccumulator& a, const MeanAccumulator& b) {
    const double se = std::hypot(a.stderr_of_mean(), b.stderr_of_mean());
    return se > 0 ? std::abs(a.mean - b.mean) / se : 0.0;
  };
  const double z = std::max(zscore(m1a, m1b), zscore(m2a, m2b));
  auto zc = float_check("k0_invariance", z < 5, z, "two-sample z-score of the first two moments of <dir, y'>");
  zc.samples = samples;
  rep.add(std::move(zc));
  return rep;
}

/// Coordinates of Ad(k) x for x given by float coordinates in n.
inline Eigen::VectorXd act_on_n(const GradedModel& m, const LeviElement& k, const Eigen::VectorXd& x_n) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(x_n.size());
  for (std::size_t b = 0; b < m.dim_n(); ++b) {
    const Element img = m.adjoint(k, m.basis_element(m.n_begin() + b));
    for (std::size_t c = 0; c < m.dim_n(); ++c)
      out(static_cast<Eigen::Index>(c)) += to_double(img[m.n_begin() + c]) * x_n(static_cast<Eigen::Index>(b));
  }
  return out;
}

/// |x|^2 = -<x, theta x> on float coordinates in n.
inline double norm_n(const GradedModel& m, const Eigen::VectorXd& x_n) {
  double s = 0;
  for (std::size_t a = 0; a < m.dim_n(); ++a)
    for (std::size_t b = 0; b < m.dim_n(); ++b)
      s -= x_n(static_cast<Eigen::Index>(a)) * x_n(static_cast<Eigen::Index>(b)) *
           to_double(m.pair(m.basis_element(m.n_begin() + a), m.theta(m.basis_element(m.n_begin() + b))));
  return std::sqrt(s);
}

/// Unit rays in n: x_1, (x_1 + x_2)/sqrt 2 (x_1 alone when n = 1), and a fixed generic combination.
inline std::vector<Eigen::VectorXd> default_rays(const GradedModel& m) {
  const auto dn = static_cast<Eigen::Index>(m.dim_n());
  auto coords = [&](const Element& x) {
    Eigen::VectorXd v(dn);
    for (Eigen::Index c = 0; c < dn; ++c) v(c) = to_double(x[m.n_begin() + static_cast<std::size_t>(c)]);
    return v;
  };
  std::vector<Eigen::VectorXd> rays;
  rays.push_back(coords(m.x(0)));
  Eigen::VectorXd r2 = coords(m.n() > 1 ? add(m.x(0), m.x(1)) : m.x(0));
  rays.push_back(r2 / norm_n(m, r2));
  Eigen::VectorXd r3(dn);
  for (Eigen::Index c = 0; c < dn; ++c) r3(c) = (c % 2 == 0 ? 1.0 : -0.5) * (1.0 + 0.25 * static_cast<double>(c % 5));
  rays.push_back(r3 / norm_n(m, r3));
  return rays;
}

/// Phi(k0.x) = Phi(x) within error bars for the fixed compact element k0, on independent streams.
inline VerificationReport phi_m_invariance_check(const GradedModel& m, std::size_t samples, std::uint64_t seed) {
  VerificationReport rep("phi_m_invariance");
  const auto k0 = fixed_compact_element(m);
  const auto rays = default_rays(m);
  std::vector<CheckResult> results(rays.size());
  parallel_for(rays.size(), [&](std::size_t i) {
    const Eigen::VectorXd x = 1.5 * rays[i];
    const Eigen::VectorXd kx = act_on_n(m, k0, x);
    const auto a = fourier_phi(m, x, samples, derive_seed(seed, 300 + 2 * i));
    const auto b = fourier_phi(m, kx, samples, derive_seed(seed, 301 + 2 * i));
    const double se = std::hypot(a.real.stderr_, b.real.stderr_);
    const double z = se > 0 ? std::abs(a.real.value - b.real.value) / se : 0.0;
    auto c = float_check("ray_" + std::to_string(i), z < 4, z, "z-score of Re Phi(x) - Re Phi(k0.x) at |x| = 1.5");
    c.samples = samples;
    c.data = {{"phi_x", a.real.to_json()}, {"phi_k0x", b.real.to_json()}};
    results[i] = std::move(c);
  });
  for (auto& r : results) rep.add(std::move(r));
  return rep;
}

/// |Phi(t x)| for t = 1..10 along each default ray: nonincreasing up to 3 standard errors.
inline VerificationReport phi_decay_check(const GradedModel& m, std::size_t samples, std::uint64_t seed) {
  VerificationReport rep("phi_decay");
  const auto rays = default_rays(m);
  std::vector<CheckResult> results(rays.size());
  parallel_for(rays.size(), [&](std::size_t i) {
    std::vector<double> mags;
    std::vector<double> errs;
    double worst = 0;
    for (int t = 1; t <= 10; ++t) {
      const auto e = fourier_phi(m, static_cast<double>(t) * rays[i], samples, derive_seed(seed, 400 + 16 * i + t));
      mags.push_back(std::hypot(e.real.value, e.imag.value));
      errs.push_back(std::hypot(e.real.stderr_, e.imag.stderr_));
      if (t > 1) {
        const double rise = mags[t - 1] - mags[t - 2];
        const double se = std::hypot(errs[t - 1], errs[t - 2]);
        worst = std::max(worst, se > 0 ? rise / se : 0.0);
      }
    }
    auto c = float_check("ray_" + std::to_string(i), worst < 3, worst, "largest rise of |Phi(t x)| in standard errors");
    c.samples = samples;
    c.data = {{"abs_phi", mags}, {"stderr", errs}};
    results[i] = std::move(c);
  });
  for (auto& r : results) rep.add(std::move(r));
  return rep;
}

}  // namespace minrep
