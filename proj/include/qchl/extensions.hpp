#pragma once

#include <vector>

#include "qchl/cohomology.hpp"
#include "qchl/constructions.hpp"

namespace qchl {

namespace detail {

/// First basis triple where the cyclic sum eps(z,x) psi(alpha x, [y,z]) is nonzero.
inline std::optional<std::vector<std::size_t>> cyclic_witness(const ColorHomAlgebra& a, const Cochain& psi) {
  const std::size_t n = a.dim();
  const auto& al = a.alpha_matrix();
  // psi(alpha e_i, [e_j, e_k])
  auto term = [&](std::size_t i, std::size_t j, std::size_t k) { return psi.apply(al.column(i), a.bracket()(j, k)); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec s = scaled(a.eps(k, i), term(i, j, k));
        axpy(s, a.eps(i, j), term(j, k, i));
        axpy(s, a.eps(j, k), term(k, i, j));
        if (!is_zero(s)) return std::vector<std::size_t>{i, j, k};
      }
  return std::nullopt;
}

inline void require_shape(const ColorHomAlgebra& a, const Cochain& c, int n, std::size_t module_dim) {
  if (c.n != n || c.algebra_dim != a.dim() || c.module_dim != module_dim ||
      c.values.size() != (n == 1 ? a.dim() : a.dim() * a.dim()))
    throw Error(ErrorCode::DimensionMismatch, "cochain does not match the algebra and module");
}

inline void require_even(const ColorHomAlgebra& a, const Cochain& c) {
  if (a.space().group().element(c.degree.coords) != a.space().zero_degree())
    throw Error(ErrorCode::GradingViolation, "cochain must be even");
}

/// Checks that a 2-cochain is eps-alternating and homogeneous for the given module.
inline void require_alternating(const ColorHomAlgebra& a, const GradedSpace& module, const Cochain& c) {
  CochainLayout layout(a, module, 2, c.degree);
  if (layout.fits(c)) return;
  const auto expected = layout.to_cochain(layout.coordinates(c));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t r = 0; r < module.dim(); ++r)
        if (c(i, j)[r] != expected(i, j)[r])
          throw Error(ErrorCode::GradingViolation, "cochain is not homogeneous and eps-alternating", {i, j, r});
}

}  // namespace detail

/// g ⊕ M with [x+m, y+n] = [x,y] + psi(x,y) and twist alpha ⊕ id.
inline ColorHomAlgebra central_extension(const ColorHomAlgebra& a, const GradedSpace& m_space, const Cochain& psi,
                                         const BuildOptions& opt = {}) {
  detail::require_shape(a, psi, 2, m_space.dim());
  detail::require_even(a, psi);
  detail::require_alternating(a, m_space, psi);
  if (auto w = detail::cyclic_witness(a, psi))
    throw Error(ErrorCode::CocycleConditionFailed, "cyclic cocycle condition fails", *w);
  const std::size_t n = a.dim(), m = m_space.dim();
  GradedSpace s = direct_sum(a.space(), m_space);
  StructureConstants b(s);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b.set(i, j, detail::concat(a.bracket()(i, j), psi(i, j)));
  ColorHomAlgebra out(std::move(b), detail::block_diag(a.alpha_matrix(), RatMatrix::identity(m)), Kind::lie);
  return detail::finish(std::move(out), opt, "central extension");
}

struct DerivationElement {
  GradedLinearMap map;
  unsigned k = 0;
  bool skew_certified = false;
};

/// Checks D alpha = alpha D, the alpha^k-derivation rule and, optionally,
/// B(Dx,y) = -eps(d,x) B(x,Dy).
inline Report check_derivation(const ColorHomAlgebra& a, const GradedLinearMap& D, unsigned k, bool skew) {
  const auto& s = a.space();
  const std::size_t n = a.dim();
  const auto& d = D.matrix();
  const auto& al = a.alpha_matrix();
  Report r;
  if (D.homogeneity_witness()) return Report{{fail("derivation", {}, "map is not homogeneous")}};
  r.add(d * al == al * d ? pass("commutes_with_alpha") : fail("commutes_with_alpha", {}));
  const RatMatrix ak = matrix_power(al, k);
  Check c = pass("derivation");
  for (std::size_t i = 0; i < n && c.passed; ++i) {
    const Rational e = s.eps(D.degree(), s.degree(i));
    for (std::size_t j = 0; j < n; ++j) {
      Vec v = d * a.bracket()(i, j);
      axpy(v, Rational(-1), a.bracket().apply(d.column(i), ak.column(j)));
      axpy(v, -e, a.bracket().apply(ak.column(i), d.column(j)));
      if (!is_zero(v)) {
        c = fail("derivation", {i, j});
        break;
      }
    }
  }
  r.add(c);
  if (skew) {
    const auto& B = a.form_matrix();
    const RatMatrix lhs = d.transpose() * B;  // B(D e_i, e_j)
    const RatMatrix rhs = B * d;              // B(e_i, D e_j)
    Check sk = pass("form_skew");
    for (std::size_t i = 0; i < n && sk.passed; ++i) {
      const Rational e = s.eps(D.degree(), s.degree(i));
      for (std::size_t j = 0; j < n; ++j)
        if (lhs(i, j) + e * rhs(i, j) != 0) {
          sk = fail("form_skew", {i, j});
          break;
        }
    }
    r.add(sk);
  }
  return r;
}

/// Basis of homogeneous alpha^k-derivations of the given degree, B-skew when requested.
inline std::vector<DerivationElement> derivation_space(const ColorHomAlgebra& a, unsigned k, const GroupElement& degree,
                                                       bool skew = false) {
  if (skew && !a.has_form()) throw Error(ErrorCode::NoForm, "skew derivations need a bilinear form");
  const auto& s = a.space();
  const auto deg = s.group().element(degree.coords);
  const std::size_t n = a.dim();
  std::vector<long> var(n * n, -1);
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (s.degree(r) == s.add(s.degree(c), deg)) {
        var[r * n + c] = static_cast<long>(slots.size());
        slots.emplace_back(r, c);
      }
  const std::size_t nv = slots.size();
  auto at = [&](std::size_t r, std::size_t c) { return var[r * n + c]; };
  const auto& al = a.alpha_matrix();
  const RatMatrix ak = matrix_power(al, k);
  const auto& b = a.bracket();
  RowReducer sys(nv);
  auto push = [&](Vec row) {
    if (!is_zero(row)) sys.add(std::move(row));
  };
  // D alpha - alpha D
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      Vec row(nv);
      for (std::size_t t = 0; t < n; ++t) {
        if (!is_zero(al(t, c)) && at(r, t) >= 0) row[at(r, t)] += al(t, c);
        if (!is_zero(al(r, t)) && at(t, c) >= 0) row[at(t, c)] -= al(r, t);
      }
      push(std::move(row));
    }
  std::vector<RatMatrix> right_ak, left_ak;
  for (std::size_t j = 0; j < n; ++j) {
    right_ak.push_back(b.right(ak.column(j)));
    left_ak.push_back(b.left(ak.column(j)));
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Rational e = s.eps(deg, s.degree(i));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t q = 0; q < n; ++q) {
        Vec row(nv);
        const auto& br = b(i, j);
        for (std::size_t c = 0; c < n; ++c)
          if (!is_zero(br[c]) && at(q, c) >= 0) row[at(q, c)] += br[c];
        for (std::size_t r = 0; r < n; ++r) {
          if (at(r, i) >= 0 && !is_zero(right_ak[j](q, r))) row[at(r, i)] -= right_ak[j](q, r);
          if (at(r, j) >= 0 && !is_zero(left_ak[i](q, r))) row[at(r, j)] -= e * left_ak[i](q, r);
        }
        push(std::move(row));
      }
  }
  if (skew) {
    const auto& B = a.form_matrix();
    for (std::size_t i = 0; i < n; ++i) {
      const Rational e = s.eps(deg, s.degree(i));
      for (std::size_t j = 0; j < n; ++j) {
        Vec row(nv);
        for (std::size_t r = 0; r < n; ++r) {
          if (at(r, i) >= 0 && !is_zero(B(r, j))) row[at(r, i)] += B(r, j);
          if (at(r, j) >= 0 && !is_zero(B(i, r))) row[at(r, j)] += e * B(i, r);
        }
        push(std::move(row));
      }
    }
  }
  std::vector<DerivationElement> out;
  for (const auto& v : sys.kernel()) {
    RatMatrix m(n, n);
    for (std::size_t t = 0; t < nv; ++t) m(slots[t].first, slots[t].second) = v[t];
    out.push_back({GradedLinearMap(s, s, deg, std::move(m)), k, skew});
  }
  return out;
}

/// Scalar 2-cocycle conditions: homogeneous, eps-alternating, alpha-symmetric
/// and closed under delta^2 with trivial coefficients.
inline Report check_scalar_cocycle(const ColorHomAlgebra& a, const Cochain& w) {
  detail::require_shape(a, w, 2, 1);
  const auto triv = trivial_rep(a);
  CochainLayout layout(a, triv.module(), 2, w.degree);
  Report r;
  r.add(layout.fits(w) ? pass("alternating") : fail("alternating", {}));
  const auto& al = a.alpha_matrix();
  Check sym = pass("alpha_symmetric");
  for (std::size_t i = 0; i < a.dim() && sym.passed; ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (w.apply(al.column(i), unit_vector(a.dim(), j)) != w.apply(unit_vector(a.dim(), i), al.column(j))) {
        sym = fail("alpha_symmetric", {i, j});
        break;
      }
  r.add(sym);
  const auto d2 = apply_delta2(triv, w);
  Check closed = pass("closed");
  for (std::size_t t = 0; t < d2.size(); ++t)
    if (!is_zero(d2[t])) {
      const std::size_t n = a.dim();
      closed = fail("closed", {t / (n * n), (t / n) % n, t % n});
      break;
    }
  r.add(closed);
  return r;
}

/// Basis of homogeneous scalar 2-cocycles of the given degree.
inline std::vector<Cochain> scalar_cocycle_space(const ColorHomAlgebra& a, const GroupElement& degree) {
  const auto triv = trivial_rep(a);
  CochainLayout layout(a, triv.module(), 2, degree);
  const std::size_t n = a.dim(), nv = layout.size();
  const auto& al = a.alpha_matrix();
  std::vector<Vec> cols;
  for (std::size_t t = 0; t < nv; ++t) {
    Vec e(nv);
    e[t] = 1;
    const auto w = layout.to_cochain(e);
    Vec col;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vec v = w.apply(al.column(i), unit_vector(n, j));
        axpy(v, Rational(-1), w.apply(unit_vector(n, i), al.column(j)));
        col.push_back(v[0]);
      }
    for (const auto& v : apply_delta2(triv, w)) col.push_back(v[0]);
    cols.push_back(std::move(col));
  }
  std::vector<Cochain> out;
  if (nv == 0) return out;
  RatMatrix m(cols[0].size(), nv);
  for (std::size_t c = 0; c < nv; ++c)
    for (std::size_t r = 0; r < cols[c].size(); ++r) m(r, c) = cols[c][r];
  const RatMatrix ker = kernel_basis(m);
  for (std::size_t c = 0; c < ker.cols(); ++c) out.push_back(layout.to_cochain(ker.column(c)));
  return out;
}

namespace detail {

inline void require_skew_alpha_derivation(const ColorHomAlgebra& a, const DerivationElement& d) {
  if (!a.has_form()) throw Error(ErrorCode::NoForm, "skew derivations need a bilinear form");
  if (!(d.map.source() == a.space()) || !(d.map.target() == a.space()))
    throw Error(ErrorCode::SpaceMismatch, "derivation acts on a different space");
  const auto r = check_derivation(a, d.map, 1, true);
  if (const auto* f = r.first_failure())
    throw Error(ErrorCode::NotSkewDerivation, "'" + f->name + "' fails", f->witness);
}

/// omega(e_i, e_j) = B(D e_i, e_j) as a scalar cochain of degree deg D.
inline Cochain form_cocycle(const ColorHomAlgebra& a, const DerivationElement& d) {
  const RatMatrix om = d.map.matrix().transpose() * a.form_matrix();
  auto w = Cochain::zero(2, d.map.degree(), a.dim(), 1);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) w.at(i, j)[0] = om(i, j);
  return w;
}

}  // namespace detail

/// omega(x,y) = B(Dx, y) for a B-skew alpha-derivation D of a quadratic multiplicative algebra.
inline Cochain derivation_to_cocycle(const ColorHomAlgebra& a, const DerivationElement& d) {
  if (auto q = check_quadratic(a); !q.passed())
    throw Error(ErrorCode::NotQuadratic, "input fails '" + q.first_failure()->name + "'", q.first_failure()->witness);
  if (auto m = check_multiplicative(a); !m.passed())
    throw Error(ErrorCode::NotMultiplicative, "input is not multiplicative", m.checks[0].witness);
  detail::require_skew_alpha_derivation(a, d);
  auto w = detail::form_cocycle(a, d);
  if (auto r = check_scalar_cocycle(a, w); !r.passed())
    throw Error(ErrorCode::VerificationFailed, "image fails '" + r.first_failure()->name + "'",
                r.first_failure()->witness);
  return w;
}

/// The unique D with B(Dx, y) = omega(x, y).
inline DerivationElement cocycle_to_derivation(const ColorHomAlgebra& a, const Cochain& omega) {
  if (auto q = check_quadratic(a); !q.passed())
    throw Error(ErrorCode::NotQuadratic, "input fails '" + q.first_failure()->name + "'", q.first_failure()->witness);
  if (auto r = check_scalar_cocycle(a, omega); !r.passed())
    throw Error(ErrorCode::NotCocycle, "'" + r.first_failure()->name + "' fails", r.first_failure()->witness);
  const std::size_t n = a.dim();
  RatMatrix om(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) om(i, j) = omega(i, j)[0];
  // D^T B = Omega  =>  D = (B^T)^{-1} Omega^T
  const auto inv = inverse(a.form_matrix().transpose());
  if (!inv) throw Error(ErrorCode::NotQuadratic, "form is degenerate");
  const auto& s = a.space();
  DerivationElement d{GradedLinearMap(s, s, s.group().element(omega.degree.coords), *inv * om.transpose()), 1, false};
  if (auto r = check_derivation(a, d.map, 1, true); !r.passed())
    throw Error(ErrorCode::VerificationFailed, "recovered map fails '" + r.first_failure()->name + "'",
                r.first_failure()->witness);
  d.skew_certified = true;
  return d;
}

/// g ⊕ K with [x+l, y+m] = [x,y] + B(Dx, y) and twist alpha ⊕ id.
inline ColorHomAlgebra derivation_central_extension(const ColorHomAlgebra& a, const DerivationElement& d,
                                                    const BuildOptions& opt = {}) {
  if (!a.has_form()) throw Error(ErrorCode::NoForm, "needs a bilinear form");
  if (!d.map.is_even()) throw Error(ErrorCode::NotSkewDerivation, "derivation must be even");
  detail::require_skew_alpha_derivation(a, d);
  return central_extension(a, scalar_space(a.space().bicharacter()), detail::form_cocycle(a, d), opt);
}

/// g ⊕ g* with [x+f, y+g] = [x,y] + omega(x,y) + pi(x)g - eps(x,y) pi(y)f and
/// twist alpha ⊕ alpha^T. With a form on g the hyperbolic form
/// B(x,y) + f(y) + eps(x,y) g(x) is attached. `strict` rejects non-cocycles;
/// otherwise the unverified algebra is returned with its check record.
inline ColorHomAlgebra tstar_extension(const ColorHomAlgebra& a, const Cochain& omega, bool strict = true,
                                       const BuildOptions& opt = {}) {
  auto [pi, cond] = coadjoint_rep(a);
  if (!cond.passed()) throw Error(ErrorCode::CoadjointUndefined, "coadjoint representation does not exist",
                                  cond.checks[0].witness);
  const std::size_t n = a.dim();
  detail::require_shape(a, omega, 2, n);
  detail::require_even(a, omega);
  detail::require_alternating(a, pi.module(), omega);
  const auto d2 = apply_delta2(pi, omega);
  std::optional<std::vector<std::size_t>> witness;
  for (std::size_t t = 0; t < d2.size() && !witness; ++t)
    if (!is_zero(d2[t])) witness = std::vector<std::size_t>{t / (n * n), (t / n) % n, t % n};
  if (witness && strict) throw Error(ErrorCode::NotCocycle, "omega is not a 2-cocycle", *witness);

  GradedSpace s = direct_sum(a.space(), pi.module());
  StructureConstants b(s);
  const Vec zn(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      b.set(i, j, detail::concat(a.bracket()(i, j), omega(i, j)));
      b.set(i, n + j, detail::concat(zn, pi.rho(i).column(j)));
      b.set(n + j, i, detail::concat(zn, scaled(-s.eps(n + j, i), pi.rho(i).column(j))));
    }
  }
  std::optional<RatMatrix> form;
  if (a.has_form()) {
    RatMatrix B(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) B(i, j) = a.form_matrix()(i, j);
      B(n + i, i) = 1;
      B(i, n + i) = s.eps(i, n + i);
    }
    form = std::move(B);
  }
  ColorHomAlgebra out(std::move(b), detail::block_diag(a.alpha_matrix(), a.alpha_matrix().transpose()), Kind::lie,
                      std::move(form));
  if (witness) {
    certify(out, {.quadratic = out.has_form()});
    return out;
  }
  if (!opt.verify) return out;
  // The form is invariant only for cyclic omega; its checks are recorded, not enforced.
  const auto r = certify(out, {.quadratic = out.has_form()});
  Report core;
  for (const auto& c : r.checks)
    if (c.name == "graded" || c.name == "skew" || c.name == "hom_jacobi") core.checks.push_back(c);
  detail::require_passed(core, "T*-extension");
  return out;
}

}  // namespace qchl
