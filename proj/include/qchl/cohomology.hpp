#pragma once

#include <optional>
#include <vector>

#include "qchl/algebra.hpp"
#include "qchl/representations.hpp"

namespace qchl {

/// Homogeneous 1- or 2-cochain stored as a full table of module vectors:
/// n = 1: values[i] = phi(e_i); n = 2: values[i*dim + j] = phi(e_i, e_j).
struct Cochain {
  int n = 2;
  GroupElement degree;
  std::size_t algebra_dim = 0;
  std::size_t module_dim = 0;
  std::vector<Vec> values;

  static Cochain zero(int n, GroupElement degree, std::size_t algebra_dim, std::size_t module_dim) {
    const std::size_t cells = n == 1 ? algebra_dim : algebra_dim * algebra_dim;
    return Cochain{n, std::move(degree), algebra_dim, module_dim, std::vector<Vec>(cells, Vec(module_dim))};
  }

  const Vec& operator()(std::size_t i) const { return values[i]; }
  const Vec& operator()(std::size_t i, std::size_t j) const { return values[i * algebra_dim + j]; }
  Vec& at(std::size_t i, std::size_t j) { return values[i * algebra_dim + j]; }

  bool is_zero() const {
    for (const auto& v : values)
      if (!qchl::is_zero(v)) return false;
    return true;
  }

  /// phi(x) / phi(x, y) for arbitrary algebra elements.
  Vec apply(const Vec& x) const {
    Vec out(module_dim);
    for (std::size_t i = 0; i < algebra_dim; ++i)
      if (!qchl::is_zero(x[i])) axpy(out, x[i], values[i]);
    return out;
  }
  Vec apply(const Vec& x, const Vec& y) const {
    Vec out(module_dim);
    for (std::size_t i = 0; i < algebra_dim; ++i) {
      if (qchl::is_zero(x[i])) continue;
      for (std::size_t j = 0; j < algebra_dim; ++j)
        if (!qchl::is_zero(y[j])) axpy(out, x[i] * y[j], (*this)(i, j));
    }
    return out;
  }

  bool operator==(const Cochain&) const = default;
};

/// Coordinates of degree-d cochains: one slot per (index tuple, module basis
/// vector) that homogeneity allows. 2-cochains use pairs i < j plus the
/// diagonal (i, i) when eps(e_i, e_i) = -1.
class CochainLayout {
 public:
  struct Slot {
    std::size_t i, j, r;
  };

  CochainLayout(const ColorHomAlgebra& a, const GradedSpace& module, int n, const GroupElement& degree)
      : n_(n), algebra_dim_(a.dim()), module_dim_(module.dim()), degree_(a.space().group().element(degree.coords)) {
    if (n != 1 && n != 2) throw Error(ErrorCode::BadParams, "cochains are supported in arity 1 and 2");
    const auto& s = a.space();
    const std::size_t d = a.dim();
    index_.assign((n == 1 ? d : d * d) * module_dim_, -1);
    auto push = [&](std::size_t i, std::size_t j, const GroupElement& target) {
      for (std::size_t r = 0; r < module_dim_; ++r)
        if (module.degree(r) == target) {
          index_[cell(i, j) * module_dim_ + r] = static_cast<long>(slots_.size());
          slots_.push_back({i, j, r});
        }
    };
    if (n == 1) {
      for (std::size_t i = 0; i < d; ++i) push(i, 0, s.add(degree_, s.degree(i)));
    } else {
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
          if (i == j && s.eps(i, i) == 1) continue;
          push(i, j, s.add(degree_, s.add(s.degree(i), s.degree(j))));
        }
    }
    eps_full_ = RatMatrix(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) eps_full_(i, j) = s.eps(i, j);
  }

  int n() const { return n_; }
  std::size_t size() const { return slots_.size(); }
  const std::vector<Slot>& slots() const { return slots_; }
  const GroupElement& degree() const { return degree_; }
  std::size_t algebra_dim() const { return algebra_dim_; }
  std::size_t module_dim() const { return module_dim_; }

  /// Coordinate feeding table entry (i, j, r) and the sign relating them.
  std::optional<std::pair<std::size_t, Rational>> locate(std::size_t i, std::size_t j, std::size_t r) const {
    Rational sign = 1;
    if (n_ == 2 && i > j) {
      std::swap(i, j);
      sign = -eps_full_(i, j);  // phi(e_j, e_i) = -eps(e_i, e_j) phi(e_i, e_j)
    }
    const long k = index_[cell(i, j) * module_dim_ + r];
    if (k < 0) return std::nullopt;
    return std::make_pair(static_cast<std::size_t>(k), sign);
  }

  Cochain to_cochain(const Vec& coords) const {
    auto c = Cochain::zero(n_, degree_, algebra_dim_, module_dim_);
    for (std::size_t k = 0; k < slots_.size(); ++k) {
      const auto& s = slots_[k];
      if (n_ == 1) {
        c.values[s.i][s.r] = coords[k];
      } else {
        c.at(s.i, s.j)[s.r] = coords[k];
        if (s.i != s.j) c.at(s.j, s.i)[s.r] = -eps_full_(s.i, s.j) * coords[k];
      }
    }
    return c;
  }

  /// Reads the canonical coordinates off a full table. Entries outside the
  /// layout are ignored; use fits to validate.
  Vec coordinates(const Cochain& c) const {
    Vec v(slots_.size());
    for (std::size_t k = 0; k < slots_.size(); ++k) {
      const auto& s = slots_[k];
      v[k] = n_ == 1 ? c.values[s.i][s.r] : c(s.i, s.j)[s.r];
    }
    return v;
  }

  /// True when the table is exactly the expansion of its coordinates.
  bool fits(const Cochain& c) const { return c.n == n_ && to_cochain(coordinates(c)).values == c.values; }

 private:
  std::size_t cell(std::size_t i, std::size_t j) const { return n_ == 1 ? i : i * algebra_dim_ + j; }

  int n_;
  std::size_t algebra_dim_, module_dim_;
  GroupElement degree_;
  std::vector<Slot> slots_;
  std::vector<long> index_;
  RatMatrix eps_full_;
};

/// Coordinate vectors (in `layout`) spanning the cochains compatible with the
/// twists: phi∘alpha^{⊗n} = beta∘phi.
inline std::vector<Vec> cochain_space_coordinates(const Representation& rep, const CochainLayout& layout) {
  const auto& al = rep.algebra().alpha_matrix();
  const auto& beta = rep.beta_matrix();
  const std::size_t d = layout.algebra_dim(), m = layout.module_dim();
  RowReducer sys(layout.size());
  auto add_term = [&](Vec& row, std::size_t i, std::size_t j, std::size_t r, const Rational& c) {
    if (auto loc = layout.locate(i, j, r)) row[loc->first] += c * loc->second;
  };
  if (layout.n() == 1) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t r = 0; r < m; ++r) {
        Vec row(layout.size());
        for (std::size_t a = 0; a < d; ++a)
          if (!is_zero(al(a, i))) add_term(row, a, 0, r, al(a, i));
        for (std::size_t t = 0; t < m; ++t)
          if (!is_zero(beta(r, t))) add_term(row, i, 0, t, -beta(r, t));
        if (!is_zero(row)) sys.add(std::move(row));
      }
  } else {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i; j < d; ++j)
        for (std::size_t r = 0; r < m; ++r) {
          Vec row(layout.size());
          for (std::size_t a = 0; a < d; ++a) {
            if (is_zero(al(a, i))) continue;
            for (std::size_t b = 0; b < d; ++b)
              if (!is_zero(al(b, j))) add_term(row, a, b, r, al(a, i) * al(b, j));
          }
          for (std::size_t t = 0; t < m; ++t)
            if (!is_zero(beta(r, t))) add_term(row, i, j, t, -beta(r, t));
          if (!is_zero(row)) sys.add(std::move(row));
        }
  }
  return sys.kernel();
}

/// Basis of the degree-d cochain space C^n(g, M).
inline std::vector<Cochain> cochain_space_basis(const Representation& rep, int n, const GroupElement& degree) {
  CochainLayout layout(rep.algebra(), rep.module(), n, degree);
  std::vector<Cochain> out;
  for (const auto& v : cochain_space_coordinates(rep, layout)) out.push_back(layout.to_cochain(v));
  return out;
}

/// delta^0 m (x) = m·x = -eps(m, x) rho(x) m, as a 1-cochain of degree deg(m).
inline Cochain apply_delta0(const Representation& rep, std::size_t module_index) {
  const auto& a = rep.algebra();
  const auto& M = rep.module();
  auto c = Cochain::zero(1, M.degree(module_index), a.dim(), M.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    c.values[i] = scaled(-M.eps(M.degree(module_index), a.degree(i)), rep.rho(i).column(module_index));
  return c;
}

/// delta^1 phi(x0,x1) = eps(phi,x0) rho(x0) phi(x1) - eps(phi+x0,x1) rho(x1) phi(x0) - phi([x0,x1]).
inline Cochain apply_delta1(const Representation& rep, const Cochain& phi) {
  if (phi.n != 1) throw Error(ErrorCode::BadParams, "delta^1 takes a 1-cochain");
  const auto& a = rep.algebra();
  const auto& s = a.space();
  const std::size_t d = a.dim();
  auto out = Cochain::zero(2, phi.degree, d, phi.module_dim);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec v = scaled(s.eps(phi.degree, s.degree(i)), rep.rho(i) * phi(j));
      axpy(v, -s.eps(s.add(phi.degree, s.degree(i)), s.degree(j)), rep.rho(j) * phi(i));
      axpy(v, Rational(-1), phi.apply(a.bracket()(i, j)));
      out.at(i, j) = std::move(v);
    }
  return out;
}

/// Raw table of delta^2 phi on all basis triples, index (i*d + j)*d + k.
inline std::vector<Vec> apply_delta2(const Representation& rep, const Cochain& phi) {
  if (phi.n != 2) throw Error(ErrorCode::BadParams, "delta^2 takes a 2-cochain");
  const auto& a = rep.algebra();
  const auto& s = a.space();
  const auto& al = a.alpha_matrix();
  const std::size_t d = a.dim();
  std::vector<RatMatrix> ra;
  for (std::size_t i = 0; i < d; ++i) ra.push_back(rep.rho(al.column(i)));
  // phi(u, alpha e_k) and phi(alpha e_i, u) as tables over basis u
  std::vector<Vec> phi_u_ak(d * d), phi_ai_u(d * d);
  for (std::size_t u = 0; u < d; ++u)
    for (std::size_t k = 0; k < d; ++k) {
      phi_u_ak[u * d + k] = phi.apply(unit_vector(d, u), al.column(k));
      phi_ai_u[k * d + u] = phi.apply(al.column(k), unit_vector(d, u));
    }
  auto phi_bracket_alpha = [&](const Vec& br, std::size_t k) {
    Vec out(phi.module_dim);
    for (std::size_t u = 0; u < d; ++u)
      if (!is_zero(br[u])) axpy(out, br[u], phi_u_ak[u * d + k]);
    return out;
  };
  std::vector<Vec> out(d * d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const auto& x0 = s.degree(i);
        const auto& x1 = s.degree(j);
        const auto& x2 = s.degree(k);
        const auto p0 = s.add(phi.degree, x0);
        Vec v = scaled(s.eps(phi.degree, x0), ra[i] * phi(j, k));
        axpy(v, -s.eps(p0, x1), ra[j] * phi(i, k));
        axpy(v, s.eps(s.add(p0, x1), x2), ra[k] * phi(i, j));
        axpy(v, Rational(-1), phi_bracket_alpha(a.bracket()(i, j), k));
        axpy(v, s.eps(j, k), phi_bracket_alpha(a.bracket()(i, k), j));
        const auto& br = a.bracket()(j, k);
        for (std::size_t u = 0; u < d; ++u)
          if (!is_zero(br[u])) axpy(v, br[u], phi_ai_u[i * d + u]);
        out[(i * d + j) * d + k] = std::move(v);
      }
  return out;
}

inline bool all_zero(const std::vector<Vec>& table) {
  for (const auto& v : table)
    if (!is_zero(v)) return false;
  return true;
}

struct CohomologyResult {
  std::size_t dim_c1 = 0;
  std::size_t dim_c2 = 0;
  std::size_t dim_z2 = 0;
  std::size_t dim_b2 = 0;
  std::size_t dim_h2 = 0;
  bool b2_in_z2 = true;            // every computed coboundary is closed
  bool coboundaries_in_c2 = true;  // every delta^1 image satisfies the twist condition
  std::vector<Cochain> z2_basis;
  std::vector<Cochain> representatives;
  // filled only when H^1 is requested
  std::optional<std::size_t> dim_z1, dim_b1, dim_h1;
};

namespace detail {

inline std::vector<Vec> flatten_columns(const std::vector<std::vector<Vec>>& tables) {
  std::vector<Vec> cols;
  for (const auto& t : tables) {
    Vec c;
    for (const auto& v : t) c.insert(c.end(), v.begin(), v.end());
    cols.push_back(std::move(c));
  }
  return cols;
}

/// Basis (in ambient coordinates) of span(U) ∩ span(V), both given as lists.
inline std::vector<Vec> intersect(const std::vector<Vec>& U, const std::vector<Vec>& V, std::size_t len) {
  std::vector<Vec> u_basis;
  {
    RowReducer r(len);
    for (const auto& u : U)
      if (r.add(u)) u_basis.push_back(u);
  }
  std::vector<Vec> v_basis;
  {
    RowReducer r(len);
    for (const auto& v : V)
      if (r.add(v)) v_basis.push_back(v);
  }
  const std::size_t p = u_basis.size(), q = v_basis.size();
  if (p == 0 || q == 0) return {};
  RatMatrix m(len, p + q);
  for (std::size_t c = 0; c < p; ++c)
    for (std::size_t t = 0; t < len; ++t) m(t, c) = u_basis[c][t];
  for (std::size_t c = 0; c < q; ++c)
    for (std::size_t t = 0; t < len; ++t) m(t, p + c) = -v_basis[c][t];
  const RatMatrix ker = kernel_basis(m);
  std::vector<Vec> out;
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    Vec w(len);
    for (std::size_t t = 0; t < p; ++t)
      if (!is_zero(ker(t, c))) axpy(w, ker(t, c), u_basis[t]);
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace detail

/// Z^2, B^2 and H^2 of g with coefficients in rep, in one degree.
inline CohomologyResult cohomology(const Representation& rep, const GroupElement& degree, bool with_h1 = false) {
  const auto& a = rep.algebra();
  if (a.kind() != Kind::lie) throw Error(ErrorCode::KindMismatch, "cohomology is defined for Lie-type algebras");
  CohomologyResult res;
  CochainLayout l1(a, rep.module(), 1, degree);
  CochainLayout l2(a, rep.module(), 2, degree);
  const auto c1 = cochain_space_coordinates(rep, l1);
  const auto c2 = cochain_space_coordinates(rep, l2);
  res.dim_c1 = c1.size();
  res.dim_c2 = c2.size();

  // Z^2: kernel of delta^2 restricted to C^2, in C^2-basis coordinates.
  std::vector<std::vector<Vec>> d2;
  for (const auto& v : c2) d2.push_back(apply_delta2(rep, l2.to_cochain(v)));
  const auto d2_cols = detail::flatten_columns(d2);
  const std::size_t rows = d2_cols.empty() ? 0 : d2_cols[0].size();
  RatMatrix D2(rows, c2.size());
  for (std::size_t c = 0; c < c2.size(); ++c)
    for (std::size_t t = 0; t < rows; ++t) D2(t, c) = d2_cols[c][t];
  const RatMatrix zk = kernel_basis(D2);
  std::vector<Vec> z2;
  for (std::size_t c = 0; c < zk.cols(); ++c) {
    Vec w(l2.size());
    for (std::size_t t = 0; t < c2.size(); ++t)
      if (!is_zero(zk(t, c))) axpy(w, zk(t, c), c2[t]);
    z2.push_back(std::move(w));
  }
  res.dim_z2 = z2.size();
  for (const auto& w : z2) res.z2_basis.push_back(l2.to_cochain(w));

  // B^2: image of delta^1 on C^1, intersected with C^2.
  std::vector<Vec> images;
  for (const auto& v : c1) {
    const auto img = apply_delta1(rep, l1.to_cochain(v));
    if (!l2.fits(img)) throw Error(ErrorCode::VerificationFailed, "delta^1 image is not an alternating cochain");
    images.push_back(l2.coordinates(img));
  }
  {
    RowReducer c2r(l2.size());
    for (const auto& v : c2) c2r.add(v);
    for (const auto& v : images)
      if (!is_zero(c2r.reduce(v))) res.coboundaries_in_c2 = false;
  }
  const auto b2 = detail::intersect(images, c2, l2.size());
  res.dim_b2 = b2.size();
  {
    RowReducer zr(l2.size());
    for (const auto& v : z2) zr.add(v);
    for (const auto& v : b2)
      if (!is_zero(zr.reduce(v))) res.b2_in_z2 = false;
  }
  // H^2 = Z^2 / (B^2 ∩ Z^2); representatives in Z^2-basis order.
  RowReducer quotient(l2.size());
  for (const auto& v : detail::intersect(b2, z2, l2.size())) quotient.add(v);
  const std::size_t base = quotient.rank();
  for (const auto& w : z2)
    if (quotient.add(w)) res.representatives.push_back(l2.to_cochain(w));
  res.dim_h2 = quotient.rank() - base;

  if (with_h1) {
    // Z^1 = ker delta^1 on C^1; B^1 = delta^0(M_degree) ∩ C^1.
    std::vector<Vec> d1_cols;
    for (const auto& v : c1) d1_cols.push_back(l2.coordinates(apply_delta1(rep, l1.to_cochain(v))));
    RatMatrix D1(l2.size(), c1.size());
    for (std::size_t c = 0; c < c1.size(); ++c)
      for (std::size_t t = 0; t < l2.size(); ++t) D1(t, c) = d1_cols[c][t];
    const std::size_t z1 = c1.size() - rank(D1);
    std::vector<Vec> b1_images;
    const auto deg = a.space().group().element(degree.coords);
    for (std::size_t r = 0; r < rep.module_dim(); ++r)
      if (rep.module().degree(r) == deg) b1_images.push_back(l1.coordinates(apply_delta0(rep, r)));
    const auto b1 = detail::intersect(b1_images, c1, l1.size());
    res.dim_z1 = z1;
    res.dim_b1 = b1.size();
    res.dim_h1 = z1 >= b1.size() ? z1 - b1.size() : 0;
  }
  return res;
}

}  // namespace qchl
