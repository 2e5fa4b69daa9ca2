#pragma once

// Stabilizers in l of the rank-k points xi = y_1 + ... + y_k and of the tuple
// (y_1, ..., y_k), split into g_k, l_k and the nilradical u_k.

#include "minrep/catalog.hpp"
#include "minrep/liealg.hpp"
#include "minrep/model.hpp"
#include "minrep/report.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace minrep {

struct StabilizerDecomposition {
  int k = 0;
  std::vector<Element> s_k;
  std::vector<Element> s_k_prime;
  std::vector<Element> levi;        // s_k cap centralizer of h_1 + ... + h_k
  std::vector<Element> nilradical;  // radical of the invariant form on s_k
  std::vector<Element> g_k;
  std::vector<Element> h_k;
  std::vector<Element> l_k;

  nlohmann::ordered_json dims_json() const {
    return {{"s_k", s_k.size()},       {"s_k_prime", s_k_prime.size()}, {"levi", levi.size()},
            {"u_k", nilradical.size()}, {"g_k", g_k.size()},            {"h_k", h_k.size()},
            {"l_k", l_k.size()}};
  }
};

namespace detail {

inline std::vector<Element> intersect(const GradedModel& m, const std::vector<Element>& a, const std::vector<Element>& b) {
  if (a.empty() || b.empty()) return {};
  // a c = b c' solved as a kernel on the concatenated columns
  std::vector<Element> cols = a;
  for (const auto& v : b) cols.push_back(scaled(v, -1));
  RationalMatrix mat = from_columns(cols, m.dim());
  std::vector<Element> out;
  Subspace span(m.dim());
  for (const auto& c : kernel(mat)) {
    Element e = m.zero();
    for (std::size_t i = 0; i < a.size(); ++i) axpy(e, c[i], a[i]);
    if (!is_zero(e) && span.insert(e)) out.push_back(std::move(e));
  }
  return out;
}

/// Ambient indices touched by the matrices of the triples j in [lo, hi).
inline std::vector<bool> triple_support(const GradedModel& m, int lo, int hi) {
  std::vector<bool> in(m.dim_ambient(), false);
  for (int j = lo; j < hi; ++j)
    for (const Element* e : {&m.x(j), &m.y(j)}) {
      const RationalMatrix mat = m.to_matrix(*e);
      for (std::size_t r = 0; r < mat.rows(); ++r)
        for (std::size_t c = 0; c < mat.cols(); ++c)
          if (sgn(mat(r, c)) != 0) in[r] = in[c] = true;
    }
  return in;
}

/// Elements of `domain` whose matrices vanish outside the block support x support.
inline std::vector<Element> supported_in(const GradedModel& m, const std::vector<Element>& domain,
                                         const std::vector<bool>& support) {
  return kernel_in_span(m, domain, [&](const Element& x) {
    const RationalMatrix mat = m.to_matrix(x);
    Element outside;
    for (std::size_t r = 0; r < mat.rows(); ++r)
      for (std::size_t c = 0; c < mat.cols(); ++c)
        if (!(support[r] && support[c])) outside.push_back(mat(r, c));
    return outside;
  });
}

/// Elements of `domain` annihilating every vector in `targets`.
inline std::vector<Element> annihilator(const GradedModel& m, const std::vector<Element>& domain,
                                        const std::vector<Element>& targets) {
  if (targets.empty()) return domain;
  return kernel_in_span(m, domain, [&](const Element& x) {
    Element stacked(m.dim() * targets.size());
    for (std::size_t t = 0; t < targets.size(); ++t) {
      const Element b = m.bracket(x, targets[t]);
      for (std::size_t i = 0; i < b.size(); ++i) stacked[t * m.dim() + i] = b[i];
    }
    return stacked;
  });
}

}  // namespace detail

/// Stabilizers of xi = y_1 + ... + y_k and of (y_1, ..., y_k) in l, with the g_k / l_k / u_k split.
inline StabilizerDecomposition stabilizer_sk(const GradedModel& m, int k) {
  if (k < 1 || k >= m.n())
    throw std::out_of_range("stabilizer_sk: k must satisfy 1 <= k < n (k = " + std::to_string(k) + ")");
  StabilizerDecomposition d;
  d.k = k;
  const auto lb = grade_basis(m, 0);
  Element xi = m.zero();
  Element hk = m.zero();
  std::vector<Element> ys;
  for (int j = 0; j < k; ++j) {
    xi = add(xi, m.y(j));
    hk = add(hk, m.h(j));
    ys.push_back(m.y(j));
  }
  d.s_k = kernel_in_span(m, lb, [&](const Element& x) { return m.bracket(x, xi); });
  d.s_k_prime = detail::annihilator(m, lb, ys);

  d.nilradical = kernel_in_span(m, d.s_k, [&](const Element& x) {
    Element row(d.s_k.size());
    for (std::size_t j = 0; j < d.s_k.size(); ++j) row[j] = m.pair(x, d.s_k[j]);
    return row;
  });
  const auto centralizer = detail::annihilator(m, lb, {hk});
  d.levi = detail::intersect(m, d.s_k, centralizer);
  const auto levi_prime = detail::intersect(m, d.s_k_prime, centralizer);

  // g_k and h_k act on the block carried by the first k triples, l_k on the block of the others
  const auto first = detail::triple_support(m, 0, k);
  const auto rest = detail::triple_support(m, k, m.n());
  d.g_k = detail::supported_in(m, d.levi, first);
  d.h_k = detail::supported_in(m, levi_prime, first);
  d.l_k = detail::supported_in(m, d.levi, rest);
  return d;
}

/// dim O_k from the closed forms: so(N) orbits of rank-2k skew forms, or rank-k n x n matrices.
inline std::size_t orbit_dimension_closed_form(const GradedModel& m, int k) {
  const auto n = static_cast<std::size_t>(m.n());
  const auto kk = static_cast<std::size_t>(k);
  if (m.family() == ModelFamily::O2n2n) {
    const std::size_t big = 2 * n;
    const std::size_t rest = big - 2 * kk;
    return big * (big - 1) / 2 - rest * (rest > 0 ? rest - 1 : 0) / 2;
  }
  return n * n - (n - kk) * (n - kk);
}

/// Structural properties of the decomposition, all exact.
inline VerificationReport stabilizer_report(const GradedModel& m, int k) {
  VerificationReport rep("stabilizer_k" + std::to_string(k));
  const auto d = stabilizer_sk(m, k);
  const std::size_t orbit_dim = m.dim_l() - d.s_k.size();
  const std::size_t closed = orbit_dimension_closed_form(m, k);
  rep.add(exact_check("orbit_stabilizer", orbit_dim == closed,
                      std::to_string(orbit_dim > closed ? orbit_dim - closed : closed - orbit_dim),
                      "dim l - dim s_k = " + std::to_string(orbit_dim) + ", closed form " + std::to_string(closed)));

  Subspace s(m.dim());
  for (const auto& v : d.s_k) s.insert(v);
  bool prime_inside = d.s_k_prime.size() <= d.s_k.size();
  for (const auto& v : d.s_k_prime) prime_inside = prime_inside && s.contains(v);
  rep.add(exact_check("s_k_prime_in_s_k", prime_inside, prime_inside ? "0" : "1"));

  Subspace sum(m.dim());
  for (const auto& v : d.levi) sum.insert(v);
  for (const auto& v : d.nilradical) sum.insert(v);
  const bool direct = sum.dim() == d.s_k.size() && d.levi.size() + d.nilradical.size() == d.s_k.size();
  rep.add(exact_check("levi_plus_nilradical", direct, direct ? "0" : "1",
                      std::to_string(d.levi.size()) + " + " + std::to_string(d.nilradical.size()) + " = " +
                          std::to_string(d.s_k.size())));

  Subspace gl(m.dim());
  for (const auto& v : d.g_k) gl.insert(v);
  for (const auto& v : d.l_k) gl.insert(v);
  const bool split = gl.dim() == d.levi.size() && d.g_k.size() + d.l_k.size() == d.levi.size();
  rep.add(exact_check("levi_is_g_plus_l", split, split ? "0" : "1",
                      std::to_string(d.g_k.size()) + " + " + std::to_string(d.l_k.size()) + " = " +
                          std::to_string(d.levi.size())));

  Subspace u(m.dim());
  for (const auto& v : d.nilradical) u.insert(v);
  detail::Residual ideal;
  for (const auto& a : d.s_k)
    for (const auto& b : d.nilradical) ideal.observe(Rational(u.contains(m.bracket(a, b)) ? 0 : 1));
  rep.add(ideal.result("nilradical_is_ideal", "[s_k, u_k] in u_k"));

  detail::Residual iso;
  for (const auto& a : d.nilradical)
    for (const auto& b : d.nilradical) iso.observe(m.pair(a, b));
  rep.add(iso.result("nilradical_isotropic"));

  if (k == 1) {
    const auto s1 = stabilizer_algebra(m, m.y(0));
    bool same = s1.size() == d.s_k.size() && d.s_k_prime.size() == d.s_k.size();
    for (const auto& v : s1) same = same && s.contains(v);
    rep.add(exact_check("k1_matches_stabilizer_of_y1", same, same ? "0" : "1"));
  }
  auto c = exact_check("dimensions", true, "0");
  c.data = d.dims_json();
  rep.add(std::move(c));
  return rep;
}

/// dim g_k and dim h_k against the groups of the catalog's dual pair.
inline VerificationReport audit_dual_pair(const GradedModel& m, int k, const catalog::DualPair& expected) {
  VerificationReport rep("tensor_audit");
  const auto d = stabilizer_sk(m, k);
  const auto gd = static_cast<long>(d.g_k.size());
  const auto hd = static_cast<long>(d.h_k.size());
  auto g = exact_check("dim_g_k", gd == expected.g_dim, std::to_string(std::labs(gd - expected.g_dim)),
                       "dim g_" + std::to_string(k) + " = " + std::to_string(gd) + " vs dim " + expected.g_name + " = " +
                           std::to_string(expected.g_dim));
  rep.add(std::move(g));
  auto h = exact_check("dim_h_k", hd == expected.h_dim, std::to_string(std::labs(hd - expected.h_dim)),
                       "dim h_" + std::to_string(k) + " = " + std::to_string(hd) + " vs dim " + expected.h_name + " = " +
                           std::to_string(expected.h_dim));
  rep.add(std::move(h));
  auto meta = exact_check("decomposition", true, "0", "representation-theoretic content not computed");
  meta.data = {{"dims", d.dims_json()}, {"dual_pair", expected.str()}};
  rep.add(std::move(meta));
  return rep;
}

inline VerificationReport audit_dual_pair(const GradedModel& m, int k) {
  return audit_dual_pair(m, k, catalog::dual_pair(m.group_class(), k));
}

}  // namespace minrep
