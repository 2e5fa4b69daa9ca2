#pragma once

// Classification data for the conformal groups of non-Euclidean Jordan
// algebras: root multiplicities (d, e), the Bessel index tau, and the
// dual pairs G_k/H_k that govern tensor powers of the minimal representation.

#include "minrep/half_integer.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace minrep::catalog {

enum class Family {
  GL_2n_R,
  O_2n2n,
  E7_7,
  O_p2p2,
  Sp_n_C,
  GL_2n_C,
  O_4n_C,
  E7_C,
  O_p4_C,
  Sp_nn,
  GL_2n_H,
  /// O(p,q), N = R^{p-1,q-1}; never a table row, only used for admissibility checks.
  O_pq,
};

struct Multiplicities {
  int d = 1;
  int e = 0;
};

/// One row of the classification table, with its symbolic columns as printed.
struct CatalogRow {
  Family family;
  std::string_view tag;
  std::string_view name;
  std::string_view n_symbol;
  int fixed_rank;  // 0 when the rank n is a free parameter
  std::string_view d_symbol;
  int d_fixed;  // 0 when d = p is a free parameter
  int e;
  std::string_view km_label;
  std::string_view dual_family;
  bool model_available;
};

inline constexpr std::array<CatalogRow, 11> kRows{{
    {Family::GL_2n_R, "GL_2n_R", "GL_{2n}(R)", "n", 0, "1", 1, 0, "O_{2n}/(O_n x O_n)", "GL_k(R)/[GL_1(R)]^k", true},
    {Family::O_2n2n, "O_2n2n", "O_{2n,2n}", "n", 0, "2", 2, 0, "(O_{2n} x O_{2n})/O_{2n}", "Sp_{2k}(R)/[SL_2(R)]^k",
     true},
    {Family::E7_7, "E7_7", "E_{7(7)}", "3", 3, "4", 4, 0, "SU_8/Sp_4", "Spin(4,5)/Spin(4,4)", false},
    {Family::O_p2p2, "O_p2p2", "O_{p+2,p+2}", "2", 2, "p", 0, 0, "[O_{p+2}]^2/[O_1 x O_{p+1}^2]", "", false},
    {Family::Sp_n_C, "Sp_n_C", "Sp_n(C)", "n", 0, "1", 1, 1, "Sp_n/U_n", "O_k(C)/[O_1(C)]^k", false},
    {Family::GL_2n_C, "GL_2n_C", "GL_{2n}(C)", "n", 0, "2", 2, 1, "U_{2n}/(U_n x U_n)", "GL_k(C)/[GL_1(C)]^k", false},
    {Family::O_4n_C, "O_4n_C", "O_{4n}(C)", "n", 0, "4", 4, 1, "O_{4n}/U_{2n}", "Sp_{2k}(C)/[SL_2(C)]^k", false},
    {Family::E7_C, "E7_C", "E_7(C)", "3", 3, "8", 8, 1, "E_7/(E_6 x U_1)", "SO_9(C)/SO_8(C)", false},
    {Family::O_p4_C, "O_p4_C", "O_{p+4}(C)", "2", 2, "p", 0, 1, "O_{p+4}/(O_{p+2} x U_1)", "", false},
    {Family::Sp_nn, "Sp_nn", "Sp_{n,n}", "n", 0, "2", 2, 2, "(Sp_n x Sp_n)/Sp_n", "O_k^*/[O_1^*]^k", false},
    {Family::GL_2n_H, "GL_2n_H", "GL_{2n}(H)", "n", 0, "4", 4, 3, "Sp_{2n}/(Sp_n x Sp_n)", "GL_k(H)/[GL_1(H)]^k",
     false},
}};

/// The classification table in table order.
inline std::span<const CatalogRow> list_classes() { return kRows; }

inline const CatalogRow& row(Family f) {
  for (const auto& r : kRows)
    if (r.family == f) return r;
  throw std::invalid_argument("family is not a table row");
}

inline std::optional<Family> family_from_tag(std::string_view tag) {
  for (const auto& r : kRows)
    if (r.tag == tag) return r.family;
  return std::nullopt;
}

/// A table row with its free parameters (n, and p for the rank-2 rows) fixed.
struct GroupClass {
  Family family;
  int n;
  int p;  // 0 unless the row is parametric in p
  Multiplicities mult;

  const CatalogRow& table_row() const { return row(family); }
  std::string name() const {
    std::ostringstream os;
    os << table_row().name << " [n=" << n;
    if (p != 0) os << ", p=" << p;
    os << "]";
    return os.str();
  }
};

inline GroupClass instantiate(Family f, int n, int p = 0) {
  const CatalogRow& r = row(f);
  if (r.fixed_rank != 0) {
    if (n != 0 && n != r.fixed_rank)
      throw std::invalid_argument(std::string(r.name) + " has rank " + std::to_string(r.fixed_rank));
    n = r.fixed_rank;
  }
  if (n < 2) throw std::invalid_argument("Jordan rank n must be at least 2");
  int d = r.d_fixed;
  if (d == 0) {
    if (p < 1) throw std::invalid_argument(std::string(r.name) + " needs a parameter p >= 1");
    d = p;
  } else {
    p = 0;
  }
  return GroupClass{f, n, p, Multiplicities{d, r.e}};
}

/// tau = (d - e - 1)/2.
inline HalfInteger tau(Multiplicities m) { return HalfInteger::from_twice(m.d - m.e - 1); }

/// dim nbar = d n(n-1) + (e+1) n: short roots -e_i-e_j contribute 2d each, long roots -2e_j contribute e+1.
inline long dim_nbar(const GroupClass& c) {
  const long n = c.n;
  return static_cast<long>(c.mult.d) * n * (n - 1) + static_cast<long>(c.mult.e + 1) * n;
}

/// Exponent of the radial measure w^{dn-1} dw on the minimal orbit.
inline long radial_exponent(const GroupClass& c) { return static_cast<long>(c.mult.d) * c.n - 1; }

/// The square-integrability inequality 4 tau < d n - 1.
inline bool satisfies_integrability(const GroupClass& c) {
  return 2 * tau(c.mult).twice() < radial_exponent(c);
}

struct DualPair {
  std::string g_name;
  std::string h_name;
  long g_dim;  // real dimension
  long h_dim;
  std::string str() const { return g_name + "/" + h_name; }
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// (G_k, H_k) with k substituted; defined for 2 <= k < n on rows with a dual family.
inline DualPair dual_pair(const GroupClass& c, int k) {
  const CatalogRow& r = c.table_row();
  if (r.dual_family.empty())
    throw DomainError(std::string(r.name) + " has no dual pair in the table (rank-2 family)");
  if (k < 2 || k >= c.n)
    throw DomainError("dual pair needs 2 <= k < n (k=" + std::to_string(k) + ", n=" + std::to_string(c.n) + ")");
  const std::string ks = std::to_string(k);
  const std::string k2 = std::to_string(2 * k);
  const long kl = k;
  switch (c.family) {
    case Family::GL_2n_R:
      return {"GL_" + ks + "(R)", "[GL_1(R)]^" + ks, kl * kl, kl};
    case Family::O_2n2n:
      return {"Sp_" + k2 + "(R)", "[SL_2(R)]^" + ks, kl * (2 * kl + 1), 3 * kl};
    case Family::E7_7:
      return {"Spin(4,5)", "Spin(4,4)", 36, 28};
    case Family::Sp_n_C:
      return {"O_" + ks + "(C)", "[O_1(C)]^" + ks, kl * (kl - 1), 0};
    case Family::GL_2n_C:
      return {"GL_" + ks + "(C)", "[GL_1(C)]^" + ks, 2 * kl * kl, 2 * kl};
    case Family::O_4n_C:
      return {"Sp_" + k2 + "(C)", "[SL_2(C)]^" + ks, 2 * kl * (2 * kl + 1), 6 * kl};
    case Family::E7_C:
      return {"SO_9(C)", "SO_8(C)", 72, 56};
    case Family::Sp_nn:
      // O_k^* read as the quaternionic orthogonal group O*(2k).
      return {"O_" + ks + "^*", "[O_1^*]^" + ks, kl * (2 * kl - 1), kl};
    case Family::GL_2n_H:
      return {"GL_" + ks + "(H)", "[GL_1(H)]^" + ks, 4 * kl * kl, 4 * kl};
    default:
      break;
  }
  throw DomainError("no dual pair for " + std::string(r.name));
}

/// A family named by the user: a table row with parameters, or O(p,q).
struct FamilyDescriptor {
  Family family;
  int n = 0;
  int p = 0;
  int q = 0;
};

struct Admissibility {
  bool admissible;
  std::string diagnostic;
};

inline Admissibility validate_admissible(const FamilyDescriptor& f) {
  if (f.family == Family::O_pq) {
    if (f.p != f.q)
      return {false, "rank-2 unequal multiplicities: O(" + std::to_string(f.p) + "," + std::to_string(f.q) +
                         ") has a D_2 root system with distinct multiplicities; the Bessel spherical vector "
                         "construction does not apply"};
    if (f.p < 3) return {false, "O(p,p) with p < 3 has no Jordan rank-2 structure"};
    return {true, "O(" + std::to_string(f.p) + "," + std::to_string(f.q) + ") is the table row O_{p+2,p+2} with p=" +
                      std::to_string(f.p - 2)};
  }
  try {
    const GroupClass c = instantiate(f.family, f.n, f.p);
    return {true, "table row " + c.name()};
  } catch (const std::invalid_argument& e) {
    return {false, e.what()};
  }
}

namespace detail {
inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}
}  // namespace detail

inline std::string catalog_csv() {
  std::string out = "family,n,d,e,km_label,dual_family\n";
  for (const auto& r : kRows) {
    out += detail::csv_field(r.name) + "," + detail::csv_field(r.n_symbol) + "," + detail::csv_field(r.d_symbol) +
           "," + std::to_string(r.e) + "," + detail::csv_field(r.km_label) + "," + detail::csv_field(r.dual_family) +
           "\n";
  }
  return out;
}

inline nlohmann::ordered_json row_json(const CatalogRow& r) {
  nlohmann::ordered_json j;
  j["family"] = r.name;
  j["n"] = r.n_symbol;
  j["d"] = r.d_symbol;
  j["e"] = r.e;
  j["km_label"] = r.km_label;
  j["dual_family"] = r.dual_family;
  return j;
}

inline nlohmann::ordered_json catalog_json() {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : kRows) arr.push_back(row_json(r));
  return arr;
}

}  // namespace minrep::catalog
