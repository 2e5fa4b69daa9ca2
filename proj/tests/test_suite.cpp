#include "minrep/suite.hpp"
#include "models.hpp"

#include <gtest/gtest.h>

using namespace minrep;
using minrep::testing::o44;

TEST(Suite, Names) {
  for (const auto& s : suite_names()) EXPECT_FALSE(s.empty());
  SuiteConfig cfg;
  EXPECT_THROW(run_suite("nope", o44(), cfg), std::invalid_argument);
}

TEST(Suite, DefaultsAreFixed) {
  const SuiteConfig cfg;
  EXPECT_EQ(cfg.seed, 0u);
  EXPECT_EQ(cfg.samples, 1000000u);
}

TEST(Suite, ExitCodes) {
  EXPECT_EQ(exit_code(Status::Pass), 0);
  EXPECT_EQ(exit_code(Status::Fail), 1);
  EXPECT_EQ(exit_code(Status::Inconclusive), 3);
}

TEST(Suite, ExactSuitesPass) {
  SuiteConfig cfg;
  cfg.orbit_points = 20;
  for (const char* s : {"structural", "constants", "modular", "tensor", "bessel"})
    EXPECT_EQ(run_suite(s, o44(), cfg).status(), Status::Pass) << s;
}

TEST(Suite, CatalogSuitePasses) {
  const auto rep = catalog_suite();
  for (const auto& c : rep.checks()) EXPECT_EQ(c.status, Status::Pass) << c.name;
}

TEST(Suite, UnderpoweredSphericalIsInconclusive) {
  SuiteConfig cfg;
  cfg.samples = 500;
  EXPECT_EQ(run_suite("spherical", o44(), cfg).status(), Status::Inconclusive);
}

TEST(Suite, DocumentFields) {
  SuiteConfig cfg;
  cfg.orbit_points = 5;
  const auto rep = run_suite("constants", o44(), cfg);
  const auto doc = report_document("constants", cfg, rep);
  EXPECT_EQ(doc["status"], "pass");
  EXPECT_EQ(doc["model"], "o2n2n");
  EXPECT_TRUE(doc["failures"].empty());
  EXPECT_TRUE(doc.contains("timestamp"));
  auto a = doc;
  auto b = report_document("constants", cfg, run_suite("constants", o44(), cfg));
  a.erase("timestamp");
  b.erase("timestamp");
  EXPECT_EQ(a.dump(), b.dump());
}

TEST(Report, MergePrefixesAndStatusCombines) {
  VerificationReport inner("inner");
  inner.add(exact_check("a", true, "0"));
  VerificationReport outer("outer");
  outer.merge(inner);
  EXPECT_NE(outer.find("inner/a"), nullptr);
  EXPECT_EQ(outer.status(), Status::Pass);
  auto c = float_check("b", true, 0.1);
  c.status = Status::Inconclusive;
  outer.add(c);
  EXPECT_EQ(outer.status(), Status::Inconclusive);
  outer.add(exact_check("c", false, "1"));
  EXPECT_EQ(outer.status(), Status::Fail);
  EXPECT_EQ(outer.failures(), std::vector<std::string>{"c"});
}
