// Acceptance runner: one PASS/FAIL line per criterion.
//   acceptance <path-to-minrep-cli> <scratch-dir>

#include "minrep/suite.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>

using namespace minrep;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass;
  std::string summary;
};

std::vector<std::pair<ModelFamily, int>> four_models() {
  return {{ModelFamily::O2n2n, 2}, {ModelFamily::O2n2n, 3}, {ModelFamily::GL2n, 2}, {ModelFamily::GL2n, 3}};
}

const GradedModel& cached(ModelFamily f, int n) {
  static std::map<std::pair<ModelFamily, int>, GradedModel> models;
  auto it = models.find({f, n});
  if (it == models.end()) it = models.emplace(std::make_pair(f, n), build_model(f, n)).first;
  return it->second;
}

std::string tag(ModelFamily f, int n) { return model_tag(f) + "/n=" + std::to_string(n); }

/// Every check passes; otherwise the first failing name is appended to `why`.
bool all_pass(const VerificationReport& rep, const std::string& where, std::string& why) {
  for (const auto& c : rep.checks())
    if (c.status != Status::Pass) {
      why += " " + where + ":" + c.name + "=" + std::string(to_string(c.status));
      return false;
    }
  return true;
}

Outcome criterion_structural() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::string why;
  std::size_t checks = 0;
  for (auto [f, n] : four_models()) {
    const auto rep = structural_suite(cached(f, n), 0);
    checks += rep.checks().size();
    ok = all_pass(rep, tag(f, n), why) && ok;
  }
  const double t = seconds_since(t0);
  ok = ok && t < 60;
  std::ostringstream os;
  os << checks << " exact checks on 4 models, " << std::fixed << std::setprecision(1) << t << " s" << why;
  return {ok, os.str()};
}

Outcome criterion_per_model(const std::function<VerificationReport(const GradedModel&)>& run, const std::string& what) {
  bool ok = true;
  std::string why;
  for (auto [f, n] : four_models()) ok = all_pass(run(cached(f, n)), tag(f, n), why) && ok;
  return {ok, what + why};
}

Outcome criterion_modular() {
  bool ok = true;
  std::string why;
  for (auto [f, n] : four_models()) ok = all_pass(modular_character_check(cached(f, n)), tag(f, n), why) && ok;
  const auto& o44 = cached(ModelFamily::O2n2n, 2);
  const std::size_t dim_s1 = stabilizer_algebra(o44, o44.y(0)).size();
  ok = ok && dim_s1 == 11;
  return {ok, "tr ad_{s1} = 2d nu on a cap s1 for 4 models; dim s1(O_{4,4}) = " + std::to_string(dim_s1) + why};
}

Outcome criterion_bessel() {
  const auto rep = bessel_suite();
  std::string why;
  const bool ok = all_pass(rep, "bessel", why);
  std::ostringstream os;
  os << "D residual max " << std::scientific << std::setprecision(2)
     << std::max({rep.find("d_phi_residual/tau=0")->residual.get<double>(),
                  rep.find("d_phi_residual/tau=1/2")->residual.get<double>(),
                  rep.find("d_phi_residual/tau=-1/2")->residual.get<double>()})
     << ", K_{1/2} " << rep.find("k_half_closed_form")->residual.get<double>() << ", evenness "
     << rep.find("evenness")->residual.get<double>() << why;
  return {ok, os.str()};
}

Outcome criterion_l2() {
  const auto t0 = Clock::now();
  const auto& o44 = cached(ModelFamily::O2n2n, 2);
  const auto r = l2_norm_g_tau(o44);
  const double rel = std::abs(r.value / (std::numbers::pi / 8) - 1);
  const auto cat = catalog_suite();
  const auto* fin = cat.find("l2_radial_finite");
  const double t = seconds_since(t0);
  const bool ok = rel < 1e-6 && fin && fin->status == Status::Pass && t < 30;
  std::ostringstream os;
  os << "O_{4,4} integral " << std::setprecision(12) << r.value << " (pi/8 rel err " << std::scientific
     << std::setprecision(2) << rel << "), " << fin->data["integrals"].size() << " table instances finite, "
     << std::fixed << std::setprecision(1) << t << " s";
  return {ok, os.str()};
}

Outcome criterion_scaling() {
  bool ok = true;
  std::string why;
  double worst = 0;
  for (auto f : {ModelFamily::O2n2n, ModelFamily::GL2n}) {
    const auto rep = scaling_check(cached(f, 2), 1000000, 0);
    for (const auto& c : rep.checks()) worst = std::max(worst, c.residual.get<double>());
    ok = all_pass(rep, tag(f, 2), why) && ok;
  }
  std::ostringstream os;
  os << "z in {1/2, 2}, 1e6 samples, worst relative error " << std::scientific << std::setprecision(2) << worst << why;
  return {ok, os.str()};
}

Outcome criterion_spherical() {
  const auto t0 = Clock::now();
  const auto rep = verify_spherical_direct(cached(ModelFamily::O2n2n, 2), 1000000, 0);
  const double t = seconds_since(t0);
  std::string why;
  const bool ok = all_pass(rep, "spherical", why) && t < 600;
  double worst = 0;
  for (const auto& c : rep.checks())
    if (c.name != "negative_control_tau_plus_1") worst = std::max(worst, c.residual.get<double>());
  std::ostringstream os;
  os << rep.checks().size() - 1 << " grid points, max |z| " << std::fixed << std::setprecision(2) << worst
     << ", control max |z| " << std::setprecision(1) << rep.find("negative_control_tau_plus_1")->residual.get<double>()
     << ", " << t << " s" << why;
  return {ok, os.str()};
}

Outcome criterion_tensor() {
  const auto o = stabilizer_sk(cached(ModelFamily::O2n2n, 3), 2);
  const auto g = stabilizer_sk(cached(ModelFamily::GL2n, 3), 2);
  std::string why;
  bool ok = o.s_k.size() == 22 && o.g_k.size() == 10 && o.h_k.size() == 6;
  // GL_2(R) / [GL_1(R)]^2
  ok = ok && g.g_k.size() == 4 && g.h_k.size() == 2;
  ok = all_pass(audit_dual_pair(cached(ModelFamily::O2n2n, 3), 2), "o2n2n", why) && ok;
  ok = all_pass(audit_dual_pair(cached(ModelFamily::GL2n, 3), 2), "gl2n", why) && ok;
  std::ostringstream os;
  os << "O_{6,6}: s2 " << o.s_k.size() << ", g2 " << o.g_k.size() << ", h2 " << o.h_k.size() << "; GL_6: g2 "
     << g.g_k.size() << ", h2 " << g.h_k.size() << why;
  return {ok, os.str()};
}

Outcome criterion_catalog() {
  struct Row {
    std::string_view name;
    std::string_view d;
    int e;
  };
  const Row want[] = {{"GL_{2n}(R)", "1", 0}, {"O_{2n,2n}", "2", 0},  {"E_{7(7)}", "4", 0}, {"O_{p+2,p+2}", "p", 0},
                      {"Sp_n(C)", "1", 1},    {"GL_{2n}(C)", "2", 1}, {"O_{4n}(C)", "4", 1}, {"E_7(C)", "8", 1},
                      {"O_{p+4}(C)", "p", 1}, {"Sp_{n,n}", "2", 2},   {"GL_{2n}(H)", "4", 3}};
  const auto rows = catalog::list_classes();
  bool ok = rows.size() == 11;
  for (std::size_t i = 0; ok && i < 11; ++i)
    ok = rows[i].name == want[i].name && rows[i].d_symbol == want[i].d && rows[i].e == want[i].e;
  const auto rep = catalog_suite();
  std::string why;
  ok = ok && rep.find("integrability_inequality_n2")->status == Status::Pass;
  ok = ok && rep.find("opq_rejected")->status == Status::Pass;
  if (!ok) why = " " + rep.find("opq_rejected")->detail;
  return {ok, std::to_string(rows.size()) + " rows, inequality at n = 2, O(3,5) rejected" + why};
}

std::string read_without_timestamp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  std::string line;
  while (std::getline(in, line))
    if (line.find("\"timestamp\"") == std::string::npos) os << line << "\n";
  return os.str();
}

Outcome criterion_determinism(const std::string& cli, const std::filesystem::path& work) {
  std::filesystem::create_directories(work);
  std::string texts[2];
  for (int r = 0; r < 2; ++r) {
    const auto out = work / ("verify_all_" + std::to_string(r) + ".json");
    const std::string cmd = "\"" + cli + "\" verify all --model o2n2n --n 2 --samples 200000 --seed 0 --json \"" +
                            out.string() + "\" > /dev/null";
    const int rc = std::system(cmd.c_str());
    if (rc != 0) return {false, "verify all exited with status " + std::to_string(rc)};
    texts[r] = read_without_timestamp(out);
  }
  const bool ok = !texts[0].empty() && texts[0] == texts[1];
  return {ok, "two CLI runs, seed 0, 2e5 samples: " + std::to_string(texts[0].size()) + " bytes " +
                  (ok ? "identical" : "differ")};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <minrep-cli> <scratch-dir>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::filesystem::path work = argv[2];

  std::vector<std::pair<int, std::function<Outcome()>>> criteria{
      {1, criterion_structural},
      {2, [] { return criterion_per_model(verify_k1, "nu([theta y1, y]) = <theta y1, y> on nbar, 4 models"); }},
      {3,
       [] {
         return criterion_per_model([](const GradedModel& m) { return verify_kprime(m, 100, 0); },
                                    "100 rational orbit points per model, y1 + y2 rejected");
       }},
      {4, [] { return criterion_per_model(verify_kdoubleprime, "Casimir scalar 2 on n, 4 models"); }},
      {5, criterion_modular},
      {6, criterion_bessel},
      {7, criterion_l2},
      {8, criterion_scaling},
      {9, criterion_spherical},
      {10, criterion_tensor},
      {11, criterion_catalog},
      {12, [&] { return criterion_determinism(cli, work); }},
  };
  int failed = 0;
  for (const auto& [id, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << "criterion " << std::setw(2) << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.summary
              << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << std::endl;
  return failed == 0 ? 0 : 1;
}
