#pragma once

// Exact matrix models of graded Lie algebras g = nbar + l + n.
//
//   o2n2n: so(2n,2n) preserving J = [[0,I],[I,0]] on R^{4n}. Elements are
//          [[-D^T, B], [C, D]] with B, C skew; nbar = B, l = D in gl_{2n}, n = C.
//   gl2n:  gl_{2n}(R) in 2x2 blocks of size n; nbar = lower-left, l = diagonal
//          blocks, n = upper-right.
//
// Elements are coordinate vectors in the model basis, ordered nbar, l, n.

#include "minrep/catalog.hpp"
#include "minrep/linalg.hpp"
#include "minrep/rational.hpp"
#include "minrep/rng.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace minrep {

using Element = RationalVector;

inline bool is_zero(const Element& v) {
  for (const auto& q : v)
    if (sgn(q) != 0) return false;
  return true;
}

inline Element add(Element a, const Element& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline Element sub(Element a, const Element& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline Element scaled(Element a, const Rational& s) {
  for (auto& q : a) q *= s;
  return a;
}

/// y += s * x
inline void axpy(Element& y, const Rational& s, const Element& x) {
  if (sgn(s) == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (sgn(x[i]) != 0) y[i] += s * x[i];
}

/// Largest absolute coordinate; the exact residual of an identity X = 0.
inline Rational max_abs(const Element& v) {
  Rational m = 0;
  for (const auto& q : v)
    if (abs(q) > m) m = abs(q);
  return m;
}

enum class ModelFamily { O2n2n, GL2n };

inline std::string model_tag(ModelFamily f) { return f == ModelFamily::O2n2n ? "o2n2n" : "gl2n"; }

struct MatrixEntry {
  std::uint32_t row;
  std::uint32_t col;
  Rational value;
};
using SparseMatrix = std::vector<MatrixEntry>;

class OutsideSpan : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct SL2Triple {
  std::size_t x_index;
  std::size_t y_index;
  Element x;
  Element y;
  Element h;
};

/// Element of the Levi group L acting on g by conjugation.
struct LeviElement {
  RationalMatrix g;
  RationalMatrix ginv;
};

class GradedModel {
 public:
  ModelFamily family() const { return family_; }
  int n() const { return n_; }
  std::size_t dim_ambient() const { return size_; }
  std::size_t dim() const { return basis_.size(); }

  std::size_t nbar_begin() const { return 0; }
  std::size_t nbar_end() const { return dim_nbar_; }
  std::size_t l_begin() const { return dim_nbar_; }
  std::size_t l_end() const { return dim_nbar_ + dim_l_; }
  std::size_t n_begin() const { return dim_nbar_ + dim_l_; }
  std::size_t n_end() const { return basis_.size(); }
  std::size_t dim_nbar() const { return dim_nbar_; }
  std::size_t dim_l() const { return dim_l_; }
  std::size_t dim_n() const { return basis_.size() - dim_nbar_ - dim_l_; }

  int grade(std::size_t a) const { return a < l_begin() ? -1 : (a < l_end() ? 0 : 1); }
  const std::string& label(std::size_t a) const { return labels_[a]; }
  const SparseMatrix& basis_matrix(std::size_t a) const { return basis_[a]; }

  catalog::Multiplicities multiplicities() const {
    return family_ == ModelFamily::O2n2n ? catalog::Multiplicities{2, 0} : catalog::Multiplicities{1, 0};
  }
  catalog::GroupClass group_class() const {
    return catalog::instantiate(family_ == ModelFamily::O2n2n ? catalog::Family::O_2n2n : catalog::Family::GL_2n_R,
                                n_);
  }

  Element zero() const { return Element(dim()); }
  Element basis_element(std::size_t a) const {
    Element e(dim());
    e[a] = 1;
    return e;
  }

  /// Component of X in the given grade.
  Element project(const Element& x, int g) const {
    Element out(dim());
    for (std::size_t a = 0; a < dim(); ++a)
      if (grade(a) == g) out[a] = x[a];
    return out;
  }
  bool in_grade(const Element& x, int g) const {
    for (std::size_t a = 0; a < dim(); ++a)
      if (grade(a) != g && sgn(x[a]) != 0) return false;
    return true;
  }

  RationalMatrix to_matrix(const Element& x) const {
    check_length(x);
    RationalMatrix m(size_, size_);
    for (std::size_t a = 0; a < dim(); ++a) {
      if (sgn(x[a]) == 0) continue;
      for (const auto& e : basis_[a]) m(e.row, e.col) += x[a] * e.value;
    }
    return m;
  }

  /// Coordinates of a matrix in the model basis; throws OutsideSpan if it is not in g.
  Element from_matrix(const RationalMatrix& m) const {
    if (m.rows() != size_ || m.cols() != size_) throw std::invalid_argument("from_matrix: wrong matrix size");
    Element x(dim());
    for (std::size_t a = 0; a < dim(); ++a) {
      const auto& p = basis_[a].front();
      x[a] = m(p.row, p.col) / p.value;
    }
    if (!(to_matrix(x) == m)) throw OutsideSpan("matrix is not in the span of the model basis");
    return x;
  }

  /// [X, Y] from the structure-constant table.
  Element bracket(const Element& x, const Element& y) const {
    check_length(x);
    check_length(y);
    Element out(dim());
    std::vector<std::size_t> ys;
    for (std::size_t b = 0; b < dim(); ++b)
      if (sgn(y[b]) != 0) ys.push_back(b);
    Rational t;
    for (std::size_t a = 0; a < dim(); ++a) {
      if (sgn(x[a]) == 0) continue;
      for (std::size_t b : ys) {
        const auto& entry = table_[a * dim() + b];
        if (entry.empty()) continue;
        t = x[a] * y[b];
        for (const auto& [c, coeff] : entry) out[c] += t * coeff;
      }
    }
    return out;
  }

  /// [e_a, e_b] as a sparse list of (index, coefficient).
  const std::vector<std::pair<std::uint32_t, Rational>>& structure_constants(std::size_t a, std::size_t b) const {
    return table_[a * dim() + b];
  }

  /// [X, Y] computed as XY - YX on matrices; independent of the table.
  Element bracket_via_matrices(const Element& x, const Element& y) const {
    return from_matrix(commutator(to_matrix(x), to_matrix(y)));
  }

  Element theta(const Element& x) const {
    check_length(x);
    Element out(dim());
    for (std::size_t a = 0; a < dim(); ++a) {
      if (sgn(x[a]) == 0) continue;
      for (const auto& [c, coeff] : theta_[a]) out[c] += x[a] * coeff;
    }
    return out;
  }

  Rational form_scale() const { return form_scale_; }

  /// <X, Y> = form_scale * tr(XY).
  Rational pair(const Element& x, const Element& y) const {
    check_length(x);
    check_length(y);
    Rational s = 0;
    for (std::size_t a = 0; a < dim(); ++a) {
      if (sgn(x[a]) == 0) continue;
      for (const auto& [b, g] : gram_[a])
        if (sgn(y[b]) != 0) s += x[a] * g * y[b];
    }
    return s;
  }

  Rational pair_via_trace(const Element& x, const Element& y) const {
    return form_scale_ * (to_matrix(x) * to_matrix(y)).trace();
  }

  /// -<y, theta y>, the squared norm on nbar.
  Rational norm_sq_nbar(const Element& y) const {
    if (!in_grade(y, -1)) throw std::invalid_argument("norm_nbar: element is not in nbar");
    const Rational r = -pair(y, theta(y));
    if (sgn(r) < 0) throw std::logic_error("norm_nbar: negative radicand, the model is inconsistent");
    return r;
  }
  double norm_nbar(const Element& y) const { return std::sqrt(to_double(norm_sq_nbar(y))); }

  const std::vector<SL2Triple>& triples() const { return triples_; }
  const Element& x(int j) const { return triples_.at(static_cast<std::size_t>(j)).x; }
  const Element& y(int j) const { return triples_.at(static_cast<std::size_t>(j)).y; }
  const Element& h(int j) const { return triples_.at(static_cast<std::size_t>(j)).h; }

  /// h = h_1 + ... + h_n.
  Element h_sum() const {
    Element s = zero();
    for (const auto& t : triples_) s = add(std::move(s), t.h);
    return s;
  }

  /// Character nu of l as a covector on all of g (zero off l).
  const RationalVector& nu_covector() const { return nu_; }
  Rational nu(const Element& x) const {
    if (!in_grade(x, 0)) throw std::invalid_argument("nu: element is not in l");
    Rational s = 0;
    for (std::size_t a = l_begin(); a < l_end(); ++a)
      if (sgn(x[a]) != 0) s += nu_[a] * x[a];
    return s;
  }

  /// Conjugation X -> g X g^{-1}.
  Element adjoint(const LeviElement& l, const Element& x) const { return from_matrix(l.g * to_matrix(x) * l.ginv); }

  /// Product of random elementary factors (transvections and diagonal scalings) in L.
  LeviElement random_levi_element(Rng& rng, int factors = 6) const {
    auto random_gl = [&](std::size_t m, RationalMatrix& a, RationalMatrix& ainv) {
      a = RationalMatrix::identity(m);
      ainv = RationalMatrix::identity(m);
      for (int f = 0; f < factors; ++f) {
        RationalMatrix e = RationalMatrix::identity(m);
        RationalMatrix einv = RationalMatrix::identity(m);
        const auto i = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(m) - 1));
        auto j = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(m) - 1));
        if (uniform_int(rng, 0, 3) == 0) {
          const Rational s = small_rational(rng, 3, 2);
          e(i, i) = s;
          einv(i, i) = 1 / s;
        } else {
          if (j == i) j = (i + 1) % m;
          const Rational t = small_rational(rng);
          e(i, j) = t;
          einv(i, j) = -t;
        }
        a = a * e;
        ainv = einv * ainv;
      }
    };
    LeviElement out{RationalMatrix(size_, size_), RationalMatrix(size_, size_)};
    if (family_ == ModelFamily::O2n2n) {
      // diag(M^{-T}, M)
      const std::size_t nn = size_ / 2;
      RationalMatrix m, minv;
      random_gl(nn, m, minv);
      for (std::size_t i = 0; i < nn; ++i)
        for (std::size_t j = 0; j < nn; ++j) {
          out.g(i, j) = minv(j, i);
          out.g(nn + i, nn + j) = m(i, j);
          out.ginv(i, j) = m(j, i);
          out.ginv(nn + i, nn + j) = minv(i, j);
        }
    } else {
      const std::size_t nn = size_ / 2;
      RationalMatrix a, ainv, d, dinv;
      random_gl(nn, a, ainv);
      random_gl(nn, d, dinv);
      for (std::size_t i = 0; i < nn; ++i)
        for (std::size_t j = 0; j < nn; ++j) {
          out.g(i, j) = a(i, j);
          out.g(nn + i, nn + j) = d(i, j);
          out.ginv(i, j) = ainv(i, j);
          out.ginv(nn + i, nn + j) = dinv(i, j);
        }
    }
    return out;
  }

  friend GradedModel build_model(ModelFamily family, int n);

 private:
  GradedModel() = default;

  void check_length(const Element& x) const {
    if (x.size() != dim()) throw std::invalid_argument("element has wrong length for this model");
  }

  void add_basis(SparseMatrix m, std::string label) {
    pivot_index_.emplace(key(m.front().row, m.front().col), basis_.size());
    basis_.push_back(std::move(m));
    labels_.push_back(std::move(label));
  }

  std::uint64_t key(std::uint32_t r, std::uint32_t c) const { return static_cast<std::uint64_t>(r) * size_ + c; }

  /// Expresses a sparse matrix (given as an entry map) in the basis, verifying exact reconstruction.
  std::vector<std::pair<std::uint32_t, Rational>> expand(const std::map<std::uint64_t, Rational>& entries) const {
    std::map<std::uint32_t, Rational> coeffs;
    for (const auto& [k, v] : entries) {
      if (sgn(v) == 0) continue;
      auto it = pivot_index_.find(k);
      if (it == pivot_index_.end()) continue;
      const auto& p = basis_[it->second].front();
      coeffs[static_cast<std::uint32_t>(it->second)] = v / p.value;
    }
    std::map<std::uint64_t, Rational> rebuilt;
    for (const auto& [a, c] : coeffs)
      for (const auto& e : basis_[a]) rebuilt[key(e.row, e.col)] += c * e.value;
    auto nonzero = [](const std::map<std::uint64_t, Rational>& m) {
      std::map<std::uint64_t, Rational> out;
      for (const auto& [k, v] : m)
        if (sgn(v) != 0) out.emplace(k, v);
      return out;
    };
    if (nonzero(rebuilt) != nonzero(entries)) throw OutsideSpan("bracket of basis elements leaves the span");
    std::vector<std::pair<std::uint32_t, Rational>> out;
    for (const auto& [a, c] : coeffs)
      if (sgn(c) != 0) out.emplace_back(a, c);
    return out;
  }

  void build_tables();
  void build_triples();
  void solve_nu();

  ModelFamily family_ = ModelFamily::O2n2n;
  int n_ = 0;
  std::size_t size_ = 0;
  std::size_t dim_nbar_ = 0;
  std::size_t dim_l_ = 0;
  std::vector<SparseMatrix> basis_;
  std::vector<std::string> labels_;
  std::unordered_map<std::uint64_t, std::size_t> pivot_index_;
  std::vector<std::vector<std::pair<std::uint32_t, Rational>>> table_;
  std::vector<std::vector<std::pair<std::uint32_t, Rational>>> theta_;
  std::vector<std::vector<std::pair<std::uint32_t, Rational>>> gram_;
  Rational form_scale_;
  std::vector<SL2Triple> triples_;
  RationalVector nu_;
};

inline void GradedModel::build_tables() {
  const std::size_t d = dim();
  table_.assign(d * d, {});
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      std::map<std::uint64_t, Rational> prod;
      for (const auto& e : basis_[a])
        for (const auto& f : basis_[b]) {
          if (e.col == f.row) prod[key(e.row, f.col)] += e.value * f.value;
          if (f.col == e.row) prod[key(f.row, e.col)] -= e.value * f.value;
        }
      table_[a * d + b] = expand(prod);
      auto neg = table_[a * d + b];
      for (auto& [c, v] : neg) v = -v;
      table_[b * d + a] = std::move(neg);
    }

  theta_.assign(d, {});
  for (std::size_t a = 0; a < d; ++a) {
    std::map<std::uint64_t, Rational> t;
    for (const auto& e : basis_[a]) t[key(e.col, e.row)] -= e.value;
    theta_[a] = expand(t);
  }
}

inline void GradedModel::build_triples() {
  triples_.clear();
  for (int j = 0; j < n_; ++j) {
    std::size_t yi = 0;
    std::size_t xi = 0;
    const auto ju = static_cast<std::uint32_t>(j);
    const auto half = static_cast<std::uint32_t>(size_ / 2);
    if (family_ == ModelFamily::O2n2n) {
      yi = pivot_index_.at(key(2 * ju + 1, half + 2 * ju));
      xi = pivot_index_.at(key(half + 2 * ju, 2 * ju + 1));
    } else {
      yi = pivot_index_.at(key(half + ju, ju));
      xi = pivot_index_.at(key(ju, half + ju));
    }
    SL2Triple t{xi, yi, basis_element(xi), basis_element(yi), {}};
    t.h = bracket(t.x, t.y);
    triples_.push_back(std::move(t));
  }
  if (triples_[0].x != theta(scaled(triples_[0].y, -1)))
    throw std::logic_error("x_1 must equal -theta(y_1)");

  // <x_1, y_1> = 1 fixes the scale.
  Rational tr = 0;
  for (const auto& e : basis_[triples_[0].x_index])
    for (const auto& f : basis_[triples_[0].y_index])
      if (e.col == f.row && e.row == f.col) tr += e.value * f.value;
  if (sgn(tr) == 0) throw std::logic_error("tr(x_1 y_1) vanishes");
  form_scale_ = 1 / tr;

  const std::size_t d = dim();
  gram_.assign(d, {});
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      Rational s = 0;
      for (const auto& e : basis_[a])
        for (const auto& f : basis_[b])
          if (e.col == f.row && e.row == f.col) s += e.value * f.value;
      if (sgn(s) != 0) gram_[a].emplace_back(static_cast<std::uint32_t>(b), form_scale_ * s);
    }
}

inline void GradedModel::solve_nu() {
  // nu vanishes on [l, l] and on the part of the center of g lying in l, with nu(h_j) = 1.
  const std::size_t dl = dim_l_;
  Subspace constraints(dl);
  for (std::size_t a = l_begin(); a < l_end(); ++a)
    for (std::size_t b = a + 1; b < l_end(); ++b) {
      const auto& sc = table_[a * dim() + b];
      if (sc.empty()) continue;
      RationalVector row(dl);
      for (const auto& [c, v] : sc) row[c - l_begin()] = v;
      constraints.insert(std::move(row));
    }
  // center of g inside l: X in l with [X, e_c] = 0 for every c
  Subspace ad_rows(dl);
  for (std::size_t c = 0; c < dim(); ++c) {
    std::map<std::uint32_t, RationalVector> rows;
    for (std::size_t a = l_begin(); a < l_end(); ++a)
      for (const auto& [out, v] : table_[a * dim() + c]) {
        auto& r = rows[out];
        if (r.empty()) r.assign(dl, Rational(0));
        r[a - l_begin()] = v;
      }
    for (auto& [out, r] : rows) ad_rows.insert(std::move(r));
  }
  RationalMatrix adm(ad_rows.dim(), dl);
  for (std::size_t i = 0; i < ad_rows.dim(); ++i)
    for (std::size_t j = 0; j < dl; ++j) adm(i, j) = ad_rows.basis()[i][j];
  for (auto& z : kernel(adm)) constraints.insert(std::move(z));

  const std::size_t zero_rows = constraints.dim();
  RationalMatrix sys(zero_rows + triples_.size(), dl);
  RationalVector rhs(zero_rows + triples_.size());
  for (std::size_t i = 0; i < zero_rows; ++i)
    for (std::size_t j = 0; j < dl; ++j) sys(i, j) = constraints.basis()[i][j];
  for (std::size_t t = 0; t < triples_.size(); ++t) {
    for (std::size_t j = 0; j < dl; ++j) sys(zero_rows + t, j) = triples_[t].h[l_begin() + j];
    rhs[zero_rows + t] = 1;
  }
  auto sol = solve(sys, rhs);
  if (!sol) throw std::logic_error("no character of l with nu(h_j) = 1");
  if (rank(sys) != dl) throw std::logic_error("character nu is not uniquely determined");
  nu_.assign(dim(), Rational(0));
  for (std::size_t j = 0; j < dl; ++j) nu_[l_begin() + j] = (*sol)[j];
}

/// Builds the o2n2n (so(2n,2n), 4n x 4n) or gl2n (gl_{2n}(R), 2n x 2n) model.
inline GradedModel build_model(ModelFamily family, int n) {
  if (n < 2 || n > 6) throw std::invalid_argument("model rank n must lie in [2, 6]");
  GradedModel m;
  m.family_ = family;
  m.n_ = n;
  auto entry = [](std::size_t r, std::size_t c, long v) {
    return MatrixEntry{static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c), Rational(v)};
  };
  auto idx = [](std::size_t a, std::size_t b) {
    return "(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
  };
  if (family == ModelFamily::O2n2n) {
    const std::size_t big_n = 2 * static_cast<std::size_t>(n);
    m.size_ = 2 * big_n;
    for (std::size_t a = 0; a < big_n; ++a)
      for (std::size_t b = a + 1; b < big_n; ++b)
        m.add_basis({entry(b, big_n + a, 1), entry(a, big_n + b, -1)}, "nbar" + idx(a, b));
    m.dim_nbar_ = m.basis_.size();
    for (std::size_t a = 0; a < big_n; ++a)
      for (std::size_t b = 0; b < big_n; ++b)
        m.add_basis({entry(big_n + a, big_n + b, 1), entry(b, a, -1)}, "l" + idx(a, b));
    m.dim_l_ = m.basis_.size() - m.dim_nbar_;
    for (std::size_t a = 0; a < big_n; ++a)
      for (std::size_t b = a + 1; b < big_n; ++b)
        m.add_basis({entry(big_n + a, b, 1), entry(big_n + b, a, -1)}, "n" + idx(a, b));
  } else {
    const auto nn = static_cast<std::size_t>(n);
    m.size_ = 2 * nn;
    for (std::size_t i = 0; i < nn; ++i)
      for (std::size_t j = 0; j < nn; ++j) m.add_basis({entry(nn + i, j, 1)}, "nbar" + idx(i, j));
    m.dim_nbar_ = m.basis_.size();
    for (std::size_t i = 0; i < nn; ++i)
      for (std::size_t j = 0; j < nn; ++j) m.add_basis({entry(i, j, 1)}, "lA" + idx(i, j));
    for (std::size_t i = 0; i < nn; ++i)
      for (std::size_t j = 0; j < nn; ++j) m.add_basis({entry(nn + i, nn + j, 1)}, "lD" + idx(i, j));
    m.dim_l_ = m.basis_.size() - m.dim_nbar_;
    for (std::size_t i = 0; i < nn; ++i)
      for (std::size_t j = 0; j < nn; ++j) m.add_basis({entry(i, nn + j, 1)}, "n" + idx(i, j));
  }
  m.build_tables();
  m.build_triples();
  m.solve_nu();
  return m;
}

inline std::optional<ModelFamily> parse_model_family(std::string_view s) {
  if (s == "o2n2n") return ModelFamily::O2n2n;
  if (s == "gl2n") return ModelFamily::GL2n;
  return std::nullopt;
}

/// JSON dump: exact basis matrices, grades, triple indices and form scale.
inline nlohmann::ordered_json model_to_json(const GradedModel& m) {
  nlohmann::ordered_json j;
  j["family"] = model_tag(m.family());
  j["n"] = m.n();
  j["dim_ambient"] = m.dim_ambient();
  j["dim"] = m.dim();
  j["form_scale"] = to_string(m.form_scale());
  auto basis = nlohmann::ordered_json::array();
  for (std::size_t a = 0; a < m.dim(); ++a) {
    nlohmann::ordered_json b;
    b["label"] = m.label(a);
    b["grade"] = m.grade(a);
    const RationalMatrix mat = m.to_matrix(m.basis_element(a));
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < mat.rows(); ++r) {
      auto row = nlohmann::ordered_json::array();
      for (std::size_t c = 0; c < mat.cols(); ++c) row.push_back(to_string(mat(r, c)));
      rows.push_back(std::move(row));
    }
    b["matrix"] = std::move(rows);
    basis.push_back(std::move(b));
  }
  j["basis"] = std::move(basis);
  auto triples = nlohmann::ordered_json::array();
  for (const auto& t : m.triples()) {
    nlohmann::ordered_json tj;
    tj["x"] = t.x_index;
    tj["y"] = t.y_index;
    auto h = nlohmann::ordered_json::object();
    for (std::size_t a = 0; a < m.dim(); ++a)
      if (sgn(t.h[a]) != 0) h[std::to_string(a)] = to_string(t.h[a]);
    tj["h"] = std::move(h);
    triples.push_back(std::move(tj));
  }
  j["triples"] = std::move(triples);
  auto nu = nlohmann::ordered_json::object();
  for (std::size_t a = m.l_begin(); a < m.l_end(); ++a)
    if (sgn(m.nu_covector()[a]) != 0) nu[std::to_string(a)] = to_string(m.nu_covector()[a]);
  j["nu"] = std::move(nu);
  return j;
}

}  // namespace minrep
