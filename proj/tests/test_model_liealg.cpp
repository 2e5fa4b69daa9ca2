#include "minrep/liealg.hpp"
#include "models.hpp"

#include <gtest/gtest.h>

using namespace minrep;
using minrep::testing::model;

namespace {

struct Case {
  ModelFamily f;
  int n;
};

class AllModels : public ::testing::TestWithParam<Case> {
 protected:
  const GradedModel& m() const { return model(GetParam().f, GetParam().n); }
};

std::string case_name(const ::testing::TestParamInfo<Case>& info) {
  return model_tag(info.param.f) + "_n" + std::to_string(info.param.n);
}

}  // namespace

TEST_P(AllModels, Dimensions) {
  const auto n = static_cast<std::size_t>(GetParam().n);
  if (GetParam().f == ModelFamily::O2n2n) {
    EXPECT_EQ(m().dim(), 2 * n * (4 * n - 1));
    EXPECT_EQ(m().dim_nbar(), n * (2 * n - 1));
    EXPECT_EQ(m().dim_l(), 4 * n * n);
  } else {
    EXPECT_EQ(m().dim(), 4 * n * n);
    EXPECT_EQ(m().dim_nbar(), n * n);
    EXPECT_EQ(m().dim_l(), 2 * n * n);
  }
  EXPECT_EQ(m().dim_n(), m().dim_nbar());
  EXPECT_EQ(static_cast<long>(m().dim_nbar()), catalog::dim_nbar(m().group_class()));
}

TEST_P(AllModels, StructuralSuiteIsExact) {
  const auto rep = structural_suite(m(), 0);
  for (const auto& c : rep.checks()) EXPECT_EQ(c.status, Status::Pass) << c.name << " " << c.detail;
  EXPECT_NE(rep.find("jacobi"), nullptr);
}

TEST_P(AllModels, PairingsOfFirstTriple) {
  EXPECT_EQ(m().pair(m().x(0), m().y(0)), 1);
  EXPECT_EQ(m().pair(m().y(0), m().theta(m().y(0))), -1);
  for (int j = 0; j < m().n(); ++j) EXPECT_EQ(m().nu(m().h(j)), 1);
}

TEST_P(AllModels, ThetaIsMinusTranspose) {
  for (std::size_t a = 0; a < m().dim(); a += 3) {
    const Element e = m().basis_element(a);
    const RationalMatrix lhs = m().to_matrix(m().theta(e));
    const RationalMatrix rhs = m().to_matrix(e).transpose() * Rational(-1);
    EXPECT_TRUE(lhs == rhs) << m().label(a);
  }
}

TEST_P(AllModels, BracketTableMatchesMatrices) {
  Rng rng(7);
  const long hi = static_cast<long>(m().dim()) - 1;
  for (int t = 0; t < 50; ++t) {
    const Element a = m().basis_element(static_cast<std::size_t>(uniform_int(rng, 0, hi)));
    const Element b = m().basis_element(static_cast<std::size_t>(uniform_int(rng, 0, hi)));
    EXPECT_EQ(m().bracket(a, b), m().bracket_via_matrices(a, b));
  }
}

TEST_P(AllModels, CasimirScalarIsTwo) { EXPECT_EQ(casimir_omega_scalar(m()), 2); }

TEST_P(AllModels, ModularCharacter) {
  const auto rep = modular_character_check(m());
  ASSERT_EQ(rep.checks().size(), 1u);
  EXPECT_EQ(rep.checks()[0].status, Status::Pass);
}

TEST_P(AllModels, NuClosedForm) {
  for (std::size_t a = m().l_begin(); a < m().l_end(); ++a)
    EXPECT_EQ(m().nu(m().basis_element(a)), nu_closed_form(m(), m().basis_element(a)));
}

INSTANTIATE_TEST_SUITE_P(Models, AllModels,
                         ::testing::Values(Case{ModelFamily::O2n2n, 2}, Case{ModelFamily::O2n2n, 3},
                                           Case{ModelFamily::GL2n, 2}, Case{ModelFamily::GL2n, 3}),
                         case_name);

TEST(Stabilizer, DimS1) {
  EXPECT_EQ(stabilizer_algebra(minrep::testing::o44(), minrep::testing::o44().y(0)).size(), 11u);
  EXPECT_EQ(stabilizer_algebra(minrep::testing::gl4(), minrep::testing::gl4().y(0)).size(), 5u);
}

TEST(Model, RejectsWrongLength) {
  const auto& m = minrep::testing::o44();
  EXPECT_THROW(m.bracket(Element(3), m.zero()), std::invalid_argument);
}

TEST(Model, ParseFamily) {
  EXPECT_EQ(parse_model_family("gl2n"), ModelFamily::GL2n);
  EXPECT_FALSE(parse_model_family("opq").has_value());
}

TEST(Model, BrokenJacobiIsDetected) {
  // a deliberately wrong bracket: [x, y] + x breaks the Jacobi identity
  const auto& m = minrep::testing::o44();
  detail::Residual r;
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 6; b < 12; ++b)
      for (std::size_t c = 12; c < 18; ++c) {
        auto br = [&](const Element& x, const Element& y) { return add(m.bracket(x, y), x); };
        const Element ea = m.basis_element(a), eb = m.basis_element(b), ec = m.basis_element(c);
        r.observe(add(add(br(ea, br(eb, ec)), br(eb, br(ec, ea))), br(ec, br(ea, eb))));
      }
  EXPECT_EQ(r.result("jacobi").status, Status::Fail);
}
