#include "minrep/catalog.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

using namespace minrep;
using namespace minrep::catalog;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Expected {
  const char* tag;
  int d;  // 0 for d = p
  int e;
};

}  // namespace

TEST(Catalog, ElevenRowsWithMultiplicities) {
  const Expected rows[] = {{"GL_2n_R", 1, 0}, {"O_2n2n", 2, 0}, {"E7_7", 4, 0},  {"O_p2p2", 0, 0},
                           {"Sp_n_C", 1, 1},  {"GL_2n_C", 2, 1}, {"O_4n_C", 4, 1}, {"E7_C", 8, 1},
                           {"O_p4_C", 0, 1},  {"Sp_nn", 2, 2},   {"GL_2n_H", 4, 3}};
  ASSERT_EQ(list_classes().size(), 11u);
  for (std::size_t i = 0; i < 11; ++i) {
    const auto& r = list_classes()[i];
    EXPECT_EQ(r.tag, rows[i].tag);
    EXPECT_EQ(r.d_fixed, rows[i].d);
    EXPECT_EQ(r.e, rows[i].e);
  }
}

TEST(Catalog, TauAndExponent) {
  const auto o = instantiate(Family::O_2n2n, 2);
  EXPECT_EQ(tau(o.mult).str(), "1/2");
  EXPECT_EQ(radial_exponent(o), 3);
  EXPECT_EQ(dim_nbar(o), 6);
  const auto g = instantiate(Family::GL_2n_R, 2);
  EXPECT_EQ(tau(g.mult).twice(), 0);
  EXPECT_EQ(dim_nbar(g), 4);
  EXPECT_EQ(tau(instantiate(Family::Sp_n_C, 3).mult).str(), "-1/2");
}

TEST(Catalog, InstantiateValidates) {
  EXPECT_EQ(instantiate(Family::E7_7, 0).n, 3);
  EXPECT_THROW(instantiate(Family::E7_7, 4), std::invalid_argument);
  EXPECT_THROW(instantiate(Family::O_p2p2, 2), std::invalid_argument);
  EXPECT_EQ(instantiate(Family::O_p2p2, 2, 3).mult.d, 3);
  EXPECT_THROW(instantiate(Family::GL_2n_R, 1), std::invalid_argument);
}

TEST(Catalog, IntegrabilityInequalityAtRankTwo) {
  for (const auto& r : list_classes()) {
    if (r.fixed_rank != 0 && r.fixed_rank != 2) continue;
    for (int p = 1; p <= 6; ++p) {
      const auto c = instantiate(r.family, 2, r.d_fixed == 0 ? p : 0);
      EXPECT_TRUE(satisfies_integrability(c)) << c.name();
    }
  }
}

TEST(Catalog, UnequalOpqRejected) {
  const auto a = validate_admissible({Family::O_pq, 0, 3, 5});
  EXPECT_FALSE(a.admissible);
  EXPECT_NE(a.diagnostic.find("O(3,5)"), std::string::npos);
  EXPECT_TRUE(validate_admissible({Family::O_pq, 0, 4, 4}).admissible);
  EXPECT_FALSE(validate_admissible({Family::O_p2p2, 2, 0}).admissible);
}

TEST(Catalog, DualPairs) {
  const auto o = dual_pair(instantiate(Family::O_2n2n, 3), 2);
  EXPECT_EQ(o.g_dim, 10);
  EXPECT_EQ(o.h_dim, 6);
  EXPECT_EQ(o.str(), "Sp_4(R)/[SL_2(R)]^2");
  const auto g = dual_pair(instantiate(Family::GL_2n_R, 3), 2);
  EXPECT_EQ(g.g_dim, 4);
  EXPECT_EQ(g.h_dim, 2);
  EXPECT_THROW(dual_pair(instantiate(Family::O_2n2n, 3), 3), DomainError);
  EXPECT_THROW(dual_pair(instantiate(Family::O_p2p2, 2, 1), 1), DomainError);
}

TEST(Catalog, GoldenCsv) { EXPECT_EQ(catalog_csv(), slurp(MINREP_TEST_DATA "/catalog.csv")); }

TEST(Catalog, GoldenJson) {
  const auto golden = nlohmann::ordered_json::parse(slurp(MINREP_TEST_DATA "/catalog.json"));
  EXPECT_EQ(catalog_json(), golden);
}

TEST(Catalog, FamilyTags) {
  EXPECT_EQ(family_from_tag("O_2n2n"), Family::O_2n2n);
  EXPECT_FALSE(family_from_tag("O_pq").has_value());
  EXPECT_FALSE(family_from_tag("nonsense").has_value());
}
