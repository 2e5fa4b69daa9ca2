// minrep command line: catalog tables, verification suites, Bessel tables, tensor audits.

#include "minrep/suite.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using minrep::ModelFamily;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct ModelArgs {
  std::string model = "o2n2n";
  int n = 2;
  int p = 0;
  int q = 0;
};

void add_model_options(CLI::App* app, ModelArgs& a) {
  app->add_option("--model", a.model, "o2n2n, gl2n or opq")->capture_default_str();
  app->add_option("--n", a.n, "Jordan rank")->capture_default_str();
  app->add_option("--p", a.p, "p for opq");
  app->add_option("--q", a.q, "q for opq");
}

/// Resolves the model flags; prints a diagnostic and returns nullopt when the request is not a model.
std::optional<ModelFamily> resolve_model(const ModelArgs& a) {
  if (a.model == "opq") {
    const auto adm = minrep::catalog::validate_admissible({minrep::catalog::Family::O_pq, 0, a.p, a.q});
    nlohmann::ordered_json j;
    j["model"] = "opq";
    j["p"] = a.p;
    j["q"] = a.q;
    j["admissible"] = adm.admissible;
    j["diagnostic"] = adm.diagnostic;
    if (adm.admissible) j["diagnostic"] = adm.diagnostic + "; no matrix model is built for this row";
    std::cerr << j.dump(2) << "\n";
    return std::nullopt;
  }
  const auto f = minrep::parse_model_family(a.model);
  if (!f) {
    std::cerr << "unknown model '" << a.model << "' (expected o2n2n, gl2n or opq)\n";
    return std::nullopt;
  }
  if (a.n < 2) {
    std::cerr << "--n must be at least 2\n";
    return std::nullopt;
  }
  return f;
}

void write_json(const std::string& path, const nlohmann::ordered_json& j) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

int cmd_table(const std::string& format, const std::string& family) {
  using namespace minrep::catalog;
  std::vector<CatalogRow> rows;
  if (family.empty()) {
    rows.assign(list_classes().begin(), list_classes().end());
  } else {
    const auto f = family_from_tag(family);
    if (!f) {
      std::cerr << "unknown family tag '" << family << "'\n";
      return kExitUsage;
    }
    rows.push_back(row(*f));
  }
  if (format == "json") {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) arr.push_back(row_json(r));
    std::cout << arr.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "family,n,d,e,km_label,dual_family\n";
    for (const auto& r : rows)
      std::cout << detail::csv_field(r.name) << "," << detail::csv_field(r.n_symbol) << ","
                << detail::csv_field(r.d_symbol) << "," << r.e << "," << detail::csv_field(r.km_label) << ","
                << detail::csv_field(r.dual_family) << "\n";
  } else {
    for (const auto& r : rows)
      std::cout << std::left << std::setw(14) << r.name << " n=" << std::setw(3) << r.n_symbol << " d=" << std::setw(3)
                << r.d_symbol << " e=" << r.e << "  " << r.km_label
                << (r.dual_family.empty() ? "" : "  dual " + std::string(r.dual_family)) << "\n";
  }
  return kExitPass;
}

int cmd_verify(const std::string& suite, const ModelArgs& a, minrep::SuiteConfig cfg, const std::string& json_path) {
  const auto family = resolve_model(a);
  if (!family) return kExitUsage;
  cfg.family = *family;
  cfg.n = a.n;
  const auto m = minrep::build_model(cfg.family, cfg.n);
  const auto rep = minrep::run_suite(suite, m, cfg);
  for (const auto& c : rep.checks())
    std::cout << std::left << std::setw(5) << minrep::to_string(c.status) << " " << c.name << "  residual "
              << c.residual.dump() << "\n";
  std::cout << "status " << minrep::to_string(rep.status()) << "\n";
  const auto doc = minrep::report_document(suite, cfg, rep);
  if (!json_path.empty()) write_json(json_path, doc);
  if (rep.status() == minrep::Status::Fail) {
    nlohmann::ordered_json f;
    f["failures"] = rep.failures();
    std::cerr << f.dump(2) << "\n";
  }
  return minrep::exit_code(rep.status());
}

int cmd_bessel(const std::string& tau_text, double zmin, double zmax, int steps) {
  if (!(zmin > 0) || !(zmax >= zmin) || steps < 1) {
    std::cerr << "bad range: need 0 < zmin <= zmax and steps >= 1\n";
    return kExitUsage;
  }
  const auto tau = minrep::HalfInteger::from_rational(minrep::parse_rational(tau_text));
  std::cout << "z,K,phi,D_residual\n" << std::setprecision(17);
  for (int i = 0; i < steps; ++i) {
    const double z = steps == 1 ? zmin : zmin + (zmax - zmin) * i / (steps - 1);
    const double k = minrep::bessel_k(tau, z, minrep::BesselMethod::Quadrature);
    const double phi = minrep::phi_tau(tau, z).value;
    std::cout << z << "," << k << "," << phi << "," << minrep::d_residual(tau, z, minrep::BesselMethod::Quadrature)
              << "\n";
  }
  return kExitPass;
}

int cmd_tensor_audit(const ModelArgs& a, int k, const std::string& json_path) {
  const auto family = resolve_model(a);
  if (!family) return kExitUsage;
  const auto m = minrep::build_model(*family, a.n);
  minrep::catalog::DualPair expected;
  try {
    expected = minrep::catalog::dual_pair(m.group_class(), k);
  } catch (const minrep::catalog::DomainError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  const auto d = minrep::stabilizer_sk(m, k);
  auto rep = minrep::audit_dual_pair(m, k, expected);
  rep.merge(minrep::stabilizer_report(m, k));
  nlohmann::ordered_json j;
  j["model"] = minrep::model_tag(*family);
  j["n"] = a.n;
  j["k"] = k;
  j["dims"] = d.dims_json();
  j["expected"] = {{"g_k", expected.g_name}, {"g_dim", expected.g_dim}, {"h_k", expected.h_name}, {"h_dim", expected.h_dim}};
  j["pass"] = rep.passed();
  j["report"] = rep.to_json();
  j["out_of_scope"] = "Plancherel measures, multiplicities and the extension of representations to S_k";
  write_json(json_path, j);
  return minrep::exit_code(rep.status());
}

int cmd_model_dump(const ModelArgs& a, const std::string& json_path) {
  const auto family = resolve_model(a);
  if (!family) return kExitUsage;
  write_json(json_path, minrep::model_to_json(minrep::build_model(*family, a.n)));
  return kExitPass;
}

int cmd_orbit_l2(const ModelArgs& a) {
  const auto family = resolve_model(a);
  if (!family) return kExitUsage;
  const auto m = minrep::build_model(*family, a.n);
  const auto r = minrep::l2_norm_g_tau(m);
  nlohmann::ordered_json j{{"model", minrep::model_tag(*family)},
                           {"n", a.n},
                           {"value", r.value},
                           {"error", r.error},
                           {"converged", r.converged},
                           {"base_mass", minrep::RadialMeasure::for_model(m).base_mass}};
  std::cout << j.dump(2) << "\n";
  return r.converged ? kExitPass : kExitFail;
}

int cmd_orbit_fourier(const ModelArgs& a, std::size_t samples, std::uint64_t seed) {
  const auto family = resolve_model(a);
  if (!family) return kExitUsage;
  if (samples < 10000) {
    std::cerr << "--samples must be at least 10000\n";
    return kExitUsage;
  }
  const auto m = minrep::build_model(*family, a.n);
  const auto rays = minrep::default_rays(m);
  std::cout << "ray,t,re,re_stderr,im,im_stderr,samples,seed\n" << std::setprecision(12);
  std::uint64_t point = 0;
  for (std::size_t r = 0; r < rays.size(); ++r)
    for (int i = 1; i <= 9; ++i) {
      const double t = 0.5 * i;
      const auto e = minrep::fourier_phi(m, t * rays[r], samples, minrep::derive_seed(seed, point++));
      std::cout << r << "," << t << "," << e.real.value << "," << e.real.stderr_ << "," << e.imag.value << ","
                << e.imag.stderr_ << "," << samples << "," << e.real.seed << "\n";
    }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minrep: verification workbench for minimal representations of non-Euclidean Jordan conformal groups"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string family;
  auto* table = app.add_subcommand("table", "print the classification table");
  table->add_option("--format", format, "csv, json or text")->check(CLI::IsMember({"csv", "json", "text"}));
  table->add_option("--family", family, "single row by tag, e.g. O_2n2n");

  ModelArgs margs;
  minrep::SuiteConfig cfg;
  std::string suite;
  std::string json_path;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(minrep::suite_names()));
  add_model_options(verify, margs);
  verify->add_option("--samples", cfg.samples, "Monte Carlo samples per estimate")->capture_default_str();
  verify->add_option("--seed", cfg.seed, "master seed")->capture_default_str();
  verify->add_option("--orbit-points", cfg.orbit_points, "rational orbit points for exact checks")->capture_default_str();
  verify->add_option("--json", json_path, "write the JSON report here ('-' for stdout)");

  std::string tau_text = "0";
  double zmin = 0.1;
  double zmax = 10;
  int steps = 100;
  auto* bessel = app.add_subcommand("bessel", "CSV table of K_tau, phi_tau and the D residual");
  bessel->add_option("--tau", tau_text, "half-integer order, e.g. -1/2")->capture_default_str();
  bessel->add_option("--zmin", zmin)->capture_default_str();
  bessel->add_option("--zmax", zmax)->capture_default_str();
  bessel->add_option("--steps", steps)->capture_default_str();

  int k = 2;
  auto* tensor = app.add_subcommand("tensor", "stabilizer and dual-pair audits");
  tensor->require_subcommand(1);
  auto* audit = tensor->add_subcommand("audit", "dim g_k and h_k against the dual pair");
  add_model_options(audit, margs);
  audit->add_option("--k", k)->capture_default_str();
  audit->add_option("--json", json_path, "output path (default stdout)");

  auto* model = app.add_subcommand("model", "matrix model export");
  model->require_subcommand(1);
  auto* dump = model->add_subcommand("dump", "exact basis matrices as JSON");
  add_model_options(dump, margs);
  dump->add_option("--json", json_path, "output path (default stdout)");

  std::size_t osamples = 100000;
  std::uint64_t oseed = 0;
  auto* orbit = app.add_subcommand("orbit", "minimal-orbit integrals");
  orbit->require_subcommand(1);
  auto* l2 = orbit->add_subcommand("l2", "radial L2 integral of g_tau");
  add_model_options(l2, margs);
  auto* fourier = orbit->add_subcommand("fourier", "Monte Carlo Phi along the default rays, as CSV");
  add_model_options(fourier, margs);
  fourier->add_option("--samples", osamples)->capture_default_str();
  fourier->add_option("--seed", oseed)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*table) return cmd_table(format, family);
    if (*verify) return cmd_verify(suite, margs, cfg, json_path);
    if (*bessel) return cmd_bessel(tau_text, zmin, zmax, steps);
    if (*audit) return cmd_tensor_audit(margs, k, json_path);
    if (*dump) return cmd_model_dump(margs, json_path);
    if (*l2) return cmd_orbit_l2(margs);
    if (*fourier) return cmd_orbit_fourier(margs, osamples, oseed);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
