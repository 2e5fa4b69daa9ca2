#pragma once

// Exact structural checks and derived algebraic data on a GradedModel:
// Casimir-type operator on n, stabilizers in l, modular character.

#include "minrep/model.hpp"
#include "minrep/report.hpp"
#include "minrep/rng.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace minrep {

/// Basis of {X in span(domain) : f(X) = 0}.
template <class F>
std::vector<Element> kernel_in_span(const GradedModel& m, const std::vector<Element>& domain, F&& f) {
  if (domain.empty()) return {};
  std::vector<Element> images;
  images.reserve(domain.size());
  for (const auto& d : domain) images.push_back(f(d));
  const std::size_t rows = images.front().size();
  RationalMatrix mat(rows, domain.size());
  for (std::size_t j = 0; j < domain.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) mat(i, j) = images[j][i];
  std::vector<Element> out;
  for (const auto& v : kernel(mat)) {
    Element e = m.zero();
    for (std::size_t i = 0; i < domain.size(); ++i) axpy(e, v[i], domain[i]);
    out.push_back(std::move(e));
  }
  return out;
}

inline std::vector<Element> grade_basis(const GradedModel& m, int g) {
  std::vector<Element> out;
  for (std::size_t a = 0; a < m.dim(); ++a)
    if (m.grade(a) == g) out.push_back(m.basis_element(a));
  return out;
}

/// Coordinates of v in the basis `span`, or nullopt if v is not in the span.
inline std::optional<RationalVector> coordinates_in(const std::vector<Element>& span, const Element& v) {
  if (span.empty()) return is_zero(v) ? std::optional<RationalVector>(RationalVector{}) : std::nullopt;
  return solve(from_columns(span, v.size()), v);
}

/// {X in l : [X, y] = 0}.
inline std::vector<Element> stabilizer_algebra(const GradedModel& m, const Element& y) {
  if (!m.in_grade(y, -1)) throw std::invalid_argument("stabilizer_algebra: y must lie in nbar");
  return kernel_in_span(m, grade_basis(m, 0), [&](const Element& x) { return m.bracket(x, y); });
}

/// B(X, Y) = -<X, theta Y>, positive definite on g.
inline Rational cartan_form(const GradedModel& m, const Element& x, const Element& y) {
  return -m.pair(x, m.theta(y));
}

/// Basis of l of theta-eigenvectors, pairwise orthogonal for B.
inline std::vector<Element> theta_orthogonal_basis_l(const GradedModel& m) {
  const auto lb = grade_basis(m, 0);
  std::vector<Element> out;
  for (int sign : {1, -1}) {
    auto eig = kernel_in_span(m, lb, [&](const Element& x) { return sub(m.theta(x), scaled(x, sign)); });
    std::vector<Element> ortho;
    std::vector<Rational> norms;
    for (auto& v : eig) {
      Element w = v;
      for (std::size_t i = 0; i < ortho.size(); ++i) axpy(w, -cartan_form(m, v, ortho[i]) / norms[i], ortho[i]);
      const Rational nrm = cartan_form(m, w, w);
      if (sgn(nrm) <= 0) throw std::logic_error("degenerate Cartan pairing on l");
      ortho.push_back(std::move(w));
      norms.push_back(nrm);
    }
    for (auto& v : ortho) out.push_back(std::move(v));
  }
  if (out.size() != m.dim_l()) throw std::logic_error("theta eigenvectors do not span l");
  return out;
}

struct CasimirResult {
  std::optional<Rational> scalar;  // set when Omega acts on n by a scalar
  std::vector<Element> images;     // Omega x for each basis vector x of n
};

/// Omega = sum_j ad(theta l_j) ad(theta l^j), with l^j the B-dual basis; applied to every basis vector of n.
inline CasimirResult casimir_omega(const GradedModel& m) {
  const auto basis = theta_orthogonal_basis_l(m);
  std::vector<Rational> inv_norm;
  std::vector<Element> tb;
  for (const auto& l : basis) {
    inv_norm.push_back(1 / cartan_form(m, l, l));
    tb.push_back(m.theta(l));
  }
  CasimirResult res;
  bool scalar = true;
  std::optional<Rational> value;
  for (std::size_t a = m.n_begin(); a < m.n_end(); ++a) {
    const Element x = m.basis_element(a);
    Element w = m.zero();
    for (std::size_t j = 0; j < basis.size(); ++j) axpy(w, inv_norm[j], m.bracket(tb[j], m.bracket(tb[j], x)));
    const Rational c = w[a];
    if (w != scaled(x, c)) scalar = false;
    if (!value) value = c;
    if (*value != c) scalar = false;
    res.images.push_back(std::move(w));
  }
  if (scalar) res.scalar = value;
  return res;
}

/// The scalar by which Omega acts on n; throws if the action is not scalar.
inline Rational casimir_omega_scalar(const GradedModel& m) {
  auto r = casimir_omega(m);
  if (!r.scalar) throw std::logic_error("Casimir operator does not act on n by a scalar");
  return *r.scalar;
}

/// tr(ad X) restricted to the subalgebra with basis `span` (X must preserve it).
inline Rational trace_on_subalgebra(const GradedModel& m, const std::vector<Element>& span, const Element& x) {
  Rational tr = 0;
  const RationalMatrix cols = from_columns(span, m.dim());
  for (std::size_t i = 0; i < span.size(); ++i) {
    auto c = solve(cols, m.bracket(x, span[i]));
    if (!c) throw std::logic_error("ad X does not preserve the subalgebra");
    tr += (*c)[i];
  }
  return tr;
}

/// tr ad_{s_1}(H) = 2d nu(H) for H in a cap s_1, a the span of the h_j.
inline VerificationReport modular_character_check(const GradedModel& m, std::optional<Element> y = std::nullopt) {
  VerificationReport rep("modular_character");
  const Element y1 = y ? *y : m.y(0);
  const auto s1 = stabilizer_algebra(m, y1);
  std::vector<Element> hs;
  for (const auto& t : m.triples()) hs.push_back(t.h);
  const auto as1 = kernel_in_span(m, hs, [&](const Element& x) { return m.bracket(x, y1); });
  const Rational two_d = 2 * m.multiplicities().d;
  Rational worst = 0;
  nlohmann::ordered_json per = nlohmann::ordered_json::array();
  for (const auto& h : as1) {
    const Rational tr = trace_on_subalgebra(m, s1, h);
    const Rational rhs = two_d * m.nu(h);
    const Rational r = abs(tr - rhs);
    if (r > worst) worst = r;
    per.push_back({{"trace", to_string(tr)}, {"two_d_nu", to_string(rhs)}});
  }
  auto& c = rep.add(exact_check("trace_ad_s1_equals_2d_nu", sgn(worst) == 0 && !as1.empty(), to_string(worst),
                                "dim s1 = " + std::to_string(s1.size()) +
                                    ", dim (a cap s1) = " + std::to_string(as1.size())));
  c.data = {{"dim_s1", s1.size()}, {"dim_a_cap_s1", as1.size()}, {"elements", per}};
  return rep;
}

namespace detail {

/// Exact residual tracker: the largest |coordinate| seen over all violations.
struct Residual {
  Rational worst = 0;
  std::size_t tested = 0;
  void observe(const Rational& r) {
    ++tested;
    if (abs(r) > worst) worst = abs(r);
  }
  void observe(const Element& v) {
    ++tested;
    const Rational r = max_abs(v);
    if (r > worst) worst = r;
  }
  CheckResult result(std::string name, std::string detail = {}) const {
    auto c = exact_check(std::move(name), sgn(worst) == 0, to_string(worst), std::move(detail));
    c.samples = tested;
    return c;
  }
};

/// Sparse accumulator for sums of basis vectors.
struct Accumulator {
  explicit Accumulator(std::size_t n) : v(n) {}
  RationalVector v;
  std::vector<std::uint32_t> touched;
  void add(std::uint32_t i, const Rational& x) {
    if (sgn(v[i]) == 0) touched.push_back(i);
    v[i] += x;
  }
  Rational max_abs_and_clear() {
    Rational m = 0;
    for (auto i : touched) {
      if (abs(v[i]) > m) m = abs(v[i]);
      v[i] = 0;
    }
    touched.clear();
    return m;
  }
};

}  // namespace detail

/// Triples (a, b, c) to sweep: every a < b < c when small, else a seeded random sample.
inline std::vector<std::array<std::uint32_t, 3>> sweep_triples(std::size_t dim, bool ordered, std::uint64_t seed,
                                                              std::size_t full_limit = 400000,
                                                              std::size_t random_count = 20000) {
  std::vector<std::array<std::uint32_t, 3>> out;
  const std::size_t full = ordered ? dim * dim * dim : dim * (dim - 1) * (dim - 2) / 6;
  if (full <= full_limit) {
    for (std::uint32_t a = 0; a < dim; ++a)
      for (std::uint32_t b = ordered ? 0 : a + 1; b < dim; ++b)
        for (std::uint32_t c = ordered ? 0 : b + 1; c < dim; ++c) out.push_back({a, b, c});
    return out;
  }
  Rng rng(seed);
  const long hi = static_cast<long>(dim) - 1;
  for (std::size_t i = 0; i < random_count; ++i)
    out.push_back({static_cast<std::uint32_t>(uniform_int(rng, 0, hi)), static_cast<std::uint32_t>(uniform_int(rng, 0, hi)),
                   static_cast<std::uint32_t>(uniform_int(rng, 0, hi))});
  return out;
}

/// Expected dimension of the theta-fixed subalgebra k.
inline std::size_t expected_dim_k(const GradedModel& m) {
  const std::size_t nn = static_cast<std::size_t>(m.n());
  if (m.family() == ModelFamily::O2n2n) return 2 * nn * (2 * nn - 1);  // so(2n) + so(2n)
  return nn * (2 * nn - 1);                                            // so(2n)
}

/// nu as a closed-form trace: half the trace of the D block (o2n2n), half of tr A - tr D (gl2n).
inline Rational nu_closed_form(const GradedModel& m, const Element& x) {
  const RationalMatrix mat = m.to_matrix(x);
  const std::size_t half = m.dim_ambient() / 2;
  Rational ta = 0;
  Rational td = 0;
  for (std::size_t i = 0; i < half; ++i) {
    ta += mat(i, i);
    td += mat(half + i, half + i);
  }
  if (m.family() == ModelFamily::O2n2n) return td / 2;
  return (ta - td) / 2;
}

/// Exact structural suite: closure, grading, Jacobi, theta, invariant form, sl2 triples, nu.
inline VerificationReport structural_suite(const GradedModel& m, std::uint64_t seed = 0) {
  VerificationReport rep("structural");
  const std::size_t d = m.dim();
  const auto sc = [&](std::size_t a, std::size_t b) -> const auto& { return m.structure_constants(a, b); };

  {
    // Table against the matrix commutator on random combinations.
    detail::Residual r;
    Rng rng(derive_seed(seed, 1));
    auto random_element = [&] {
      Element e = m.zero();
      for (int k = 0; k < 4; ++k)
        e[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(d) - 1))] += small_rational(rng);
      return e;
    };
    for (int i = 0; i < 200; ++i) {
      const Element x = random_element();
      const Element y = random_element();
      r.observe(sub(m.bracket(x, y), m.bracket_via_matrices(x, y)));
    }
    rep.add(r.result("closure_and_table", "brackets of basis matrices expand exactly in the basis"));
  }
  {
    detail::Residual r;
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        const int g = m.grade(a) + m.grade(b);
        for (const auto& [c, v] : sc(a, b)) r.observe(m.grade(c) == g ? Rational(0) : v);
      }
    rep.add(r.result("grading", "[g_a, g_b] in g_{a+b}; zero in degree +-2"));
  }
  {
    detail::Residual r;
    detail::Accumulator acc(d);
    const auto triples = sweep_triples(d, false, derive_seed(seed, 2));
    auto nested = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
      for (const auto& [e, v] : sc(b, c))
        for (const auto& [f, w] : sc(a, e)) acc.add(f, v * w);
    };
    for (const auto& [a, b, c] : triples) {
      nested(a, b, c);
      nested(b, c, a);
      nested(c, a, b);
      r.observe(acc.max_abs_and_clear());
    }
    rep.add(r.result("jacobi"));
  }
  {
    detail::Residual inv;
    detail::Residual aut;
    detail::Residual grades;
    for (std::size_t a = 0; a < d; ++a) {
      const Element ea = m.basis_element(a);
      const Element ta = m.theta(ea);
      inv.observe(sub(m.theta(ta), ea));
      grades.observe(sub(ta, m.project(ta, -m.grade(a))));
      for (std::size_t b = a + 1; b < d; ++b) {
        const Element eb = m.basis_element(b);
        aut.observe(sub(m.theta(m.bracket(ea, eb)), m.bracket(ta, m.theta(eb))));
      }
    }
    rep.add(inv.result("theta_involution"));
    rep.add(aut.result("theta_automorphism"));
    rep.add(grades.result("theta_swaps_grades"));
  }
  {
    // <[e_c, e_a], e_b> + <e_a, [e_c, e_b]>
    std::vector<RationalVector> gram(d, RationalVector(d));
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) gram[a][b] = m.pair(m.basis_element(a), m.basis_element(b));
    detail::Residual r;
    const auto triples = sweep_triples(d, true, derive_seed(seed, 3));
    for (const auto& [c, a, b] : triples) {
      Rational s = 0;
      for (const auto& [e, v] : sc(c, a)) s += v * gram[e][b];
      for (const auto& [e, v] : sc(c, b)) s += v * gram[a][e];
      r.observe(s);
    }
    rep.add(r.result("form_invariance"));

    detail::Residual sym;
    detail::Residual orth;
    detail::Residual trace;
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        sym.observe(gram[a][b] - gram[b][a]);
        if (m.grade(a) + m.grade(b) != 0) orth.observe(gram[a][b]);
        if (a <= b && (a % 3 == 0 || d < 40)) trace.observe(gram[a][b] - m.pair_via_trace(m.basis_element(a), m.basis_element(b)));
      }
    rep.add(sym.result("form_symmetric"));
    rep.add(trace.result("form_matches_trace"));
    rep.add(orth.result("grading_orthogonality", "<n,n> = <nbar,nbar> = <l,n> = <l,nbar> = 0"));

    RationalMatrix pairing(m.dim_n(), m.dim_nbar());
    for (std::size_t i = 0; i < m.dim_n(); ++i)
      for (std::size_t j = 0; j < m.dim_nbar(); ++j) pairing(i, j) = gram[m.n_begin() + i][m.nbar_begin() + j];
    const std::size_t rk = rank(pairing);
    rep.add(exact_check("n_nbar_pairing_nondegenerate", rk == m.dim_n() && rk == m.dim_nbar(),
                        std::to_string(m.dim_n() - rk), "rank " + std::to_string(rk)));

    RationalMatrix pos(m.dim_nbar(), m.dim_nbar());
    for (std::size_t i = 0; i < m.dim_nbar(); ++i)
      for (std::size_t j = 0; j < m.dim_nbar(); ++j)
        pos(i, j) = -m.pair(m.basis_element(i), m.theta(m.basis_element(j)));
    rep.add(exact_check("nbar_norm_positive_definite", is_positive_definite(pos), "0", "-<y, theta y> on nbar"));
  }
  {
    detail::Residual r;
    detail::Residual commute;
    for (std::size_t i = 0; i < m.triples().size(); ++i) {
      const auto& t = m.triples()[i];
      r.observe(sub(m.bracket(t.h, t.x), scaled(t.x, 2)));
      r.observe(add(m.bracket(t.h, t.y), scaled(t.y, 2)));
      r.observe(sub(m.bracket(t.x, t.y), t.h));
      for (std::size_t j = 0; j < m.triples().size(); ++j) {
        if (i == j) continue;
        const auto& u = m.triples()[j];
        for (const Element* p : {&t.x, &t.y, &t.h})
          for (const Element* q : {&u.x, &u.y, &u.h}) commute.observe(m.bracket(*p, *q));
      }
    }
    rep.add(r.result("sl2_relations"));
    rep.add(commute.result("triples_commute"));
  }
  {
    detail::Residual r;
    const Element h = m.h_sum();
    for (std::size_t a = 0; a < d; ++a) {
      const Element e = m.basis_element(a);
      r.observe(sub(m.bracket(h, e), scaled(e, 2 * m.grade(a))));
    }
    rep.add(r.result("ad_h_grading", "[h, y] = -2y on nbar, [h, l] = 0, [h, x] = 2x on n"));
  }
  {
    const Rational p = m.pair(m.x(0), m.y(0));
    rep.add(exact_check("x1_y1_pairing", p == 1, to_string(abs(p - 1)), "<x1, y1> = " + to_string(p)));
    const Rational q = m.pair(m.y(0), m.theta(m.y(0)));
    rep.add(exact_check("y1_theta_y1_pairing", q == -1, to_string(abs(q + 1)), "<y1, theta y1> = " + to_string(q)));
    const Element diff = add(m.theta(m.y(0)), m.x(0));
    rep.add(exact_check("theta_y1_is_minus_x1", is_zero(diff), to_string(max_abs(diff))));
  }
  {
    const auto fixed =
        kernel_in_span(m, [&] {
          std::vector<Element> all;
          for (std::size_t a = 0; a < d; ++a) all.push_back(m.basis_element(a));
          return all;
        }(), [&](const Element& x) { return sub(m.theta(x), x); });
    const std::size_t want = expected_dim_k(m);
    rep.add(exact_check("theta_fixed_dimension", fixed.size() == want,
                        std::to_string(fixed.size() > want ? fixed.size() - want : want - fixed.size()),
                        "dim k = " + std::to_string(fixed.size()) + ", expected " + std::to_string(want)));
  }
  {
    detail::Residual ll;
    detail::Residual hj;
    detail::Residual closed;
    for (std::size_t a = m.l_begin(); a < m.l_end(); ++a) {
      const Element ea = m.basis_element(a);
      closed.observe(m.nu(ea) - nu_closed_form(m, ea));
      for (std::size_t b = a + 1; b < m.l_end(); ++b) ll.observe(m.nu(m.bracket(ea, m.basis_element(b))));
    }
    for (const auto& t : m.triples()) hj.observe(m.nu(t.h) - 1);
    rep.add(ll.result("nu_vanishes_on_commutators"));
    rep.add(hj.result("nu_h_j_equals_1"));
    rep.add(closed.result("nu_trace_formula"));
  }
  return rep;
}

}  // namespace minrep
