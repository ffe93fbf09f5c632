#pragma once

#include <utility>

#include "qchl/constructions.hpp"
#include "qchl/representations.hpp"

namespace qchl {

/// The map D: M ⊗ M* -> g determined by
///   B(x, D(m⊗f)) = eps(x+m, f) f(rho(alpha x) m).
/// M ⊗ M* is ordered m-major: index v * dim M + t is m_v ⊗ f_t.
struct FaulknerData {
  ColorHomAlgebra algebra;
  Representation rep;
  Representation dual;
  GradedLinearMap dmap;
  std::size_t rank = 0;
  bool surjective = false;
  bool faithful = false;
  bool dual_ok = false;
};

namespace detail {

/// Coordinates of the functional x -> eps(x+m_v, f_t) f_t(rho(alpha x) m_v).
inline Vec faulkner_functional(const Representation& r, std::size_t v, std::size_t t) {
  const auto& a = r.algebra();
  const auto& M = r.module();
  const auto& al = a.alpha_matrix();
  const auto ft = M.group().negate(M.degree(t));
  Vec c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Rational val = (r.rho(al.column(i)) * unit_vector(M.dim(), v))[t];
    if (!is_zero(val)) c[i] = M.eps(M.add(a.degree(i), M.degree(v)), ft) * val;
  }
  return c;
}

/// Matrix of (rho ⊗ dual)(x) on M ⊗ M*: rho(x) ⊗ beta~ + eps(x, m) beta ⊗ rho~(x).
inline RatMatrix tensor_action(const Representation& r, const Representation& d, const Vec& x,
                               const GroupElement& deg) {
  const auto& M = r.module();
  RatMatrix b = r.beta_matrix();
  for (std::size_t u = 0; u < M.dim(); ++u) {
    const Rational e = M.eps(deg, M.degree(u));
    for (std::size_t t = 0; t < M.dim(); ++t) b(t, u) *= e;
  }
  return kron(r.rho(x), d.beta_matrix()) + kron(b, d.rho(x));
}

}  // namespace detail

inline FaulknerData faulkner_map(const ColorHomAlgebra& a, const Representation& r) {
  if (!(r.algebra() == a)) throw Error(ErrorCode::AlgebraMismatch, "representation of a different algebra");
  if (!a.has_form()) throw Error(ErrorCode::NotQuadratic, "algebra carries no form");
  if (auto q = check_quadratic(a); !q.passed())
    throw Error(ErrorCode::NotQuadratic, "input fails '" + q.first_failure()->name + "'", q.first_failure()->witness);
  if (auto m = check_multiplicative(a); !m.passed())
    throw Error(ErrorCode::NotMultiplicative, "algebra is not multiplicative", m.checks[0].witness);
  const auto& al = a.alpha_matrix();
  if (al * al != RatMatrix::identity(a.dim())) throw Error(ErrorCode::NotInvolutive, "alpha is not an involution");
  const auto& beta = r.beta_matrix();
  if (beta * beta != RatMatrix::identity(r.module_dim()))
    throw Error(ErrorCode::NotInvolutive, "beta is not an involution");
  if (auto rep = check_representation(r, true); !rep.passed())
    throw Error(ErrorCode::NotRepresentation, "'" + rep.first_failure()->name + "' fails", rep.first_failure()->witness);

  const std::size_t n = a.dim(), m = r.module_dim();
  const auto inv = inverse(a.form_matrix());
  auto [dual, cond] = dual_rep(r);
  RatMatrix D(n, m * m);
  for (std::size_t v = 0; v < m; ++v)
    for (std::size_t t = 0; t < m; ++t) {
      const Vec d = *inv * detail::faulkner_functional(r, v, t);
      for (std::size_t i = 0; i < n; ++i) D(i, v * m + t) = d[i];
    }
  GradedSpace src = tensor(r.module(), dual.module());
  FaulknerData fd{a, r, dual, GradedLinearMap(src, a.space(), a.space().zero_degree(), D)};
  if (auto w = fd.dmap.homogeneity_witness())
    throw Error(ErrorCode::VerificationFailed, "D is not even", {w->first, w->second});
  fd.rank = rank(D);
  fd.surjective = fd.rank == n;
  RatMatrix stacked(m * m, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = 0; q < m; ++q) stacked(p * m + q, i) = r.rho(i)(p, q);
  fd.faithful = rank(stacked) == n;
  fd.dual_ok = cond.passed();
  return fd;
}

/// Re-checks the defining identity of D, [x, D(m⊗f)] = D((rho ⊗ rho~)(x)(m⊗f))
/// and alpha D = D (beta ⊗ beta~).
inline Report check_dmap_morphism(const FaulknerData& fd) {
  const auto& a = fd.algebra;
  const auto& r = fd.rep;
  const std::size_t n = a.dim(), m = r.module_dim();
  const auto& D = fd.dmap.matrix();
  Report rep;
  Check def = pass("dmap_defining");
  const RatMatrix BD = a.form_matrix() * D;
  for (std::size_t v = 0; v < m && def.passed; ++v)
    for (std::size_t t = 0; t < m; ++t)
      if (BD.column(v * m + t) != detail::faulkner_functional(r, v, t)) {
        def = fail("dmap_defining", {v, t});
        break;
      }
  rep.add(def);
  Check mor = pass("dmap_morphism");
  for (std::size_t i = 0; i < n; ++i) {
    const RatMatrix lhs = a.bracket().left(i) * D;
    const RatMatrix rhs = D * detail::tensor_action(r, fd.dual, unit_vector(n, i), a.degree(i));
    if (lhs != rhs) {
      for (std::size_t p = 0; p < m * m; ++p)
        if (lhs.column(p) != rhs.column(p)) {
          mor = fail("dmap_morphism", {i, p / m, p % m});
          break;
        }
      break;
    }
  }
  rep.add(mor);
  const RatMatrix bb = kron(r.beta_matrix(), fd.dual.beta_matrix());
  rep.add(a.alpha_matrix() * D == D * bb ? pass("dmap_twist") : fail("dmap_twist", {}));
  return rep;
}

/// [m⊗f, m'⊗f'] = rho(D(m⊗f))m' ⊗ beta~ f' + eps(m+f, m') beta m' ⊗ rho~(D(m⊗f)) f'
/// on M ⊗ M* with twist beta ⊗ beta~.
inline ColorHomAlgebra faulkner_leibniz(const FaulknerData& fd, const BuildOptions& opt = {}) {
  if (!fd.faithful) throw Error(ErrorCode::NotFaithful, "representation is not faithful");
  const auto& r = fd.rep;
  const std::size_t m = r.module_dim(), N = m * m;
  const auto& s = fd.dmap.source();
  const auto& D = fd.dmap.matrix();
  StructureConstants b(s);
  for (std::size_t p = 0; p < N; ++p) {
    const RatMatrix L = detail::tensor_action(r, fd.dual, D.column(p), s.degree(p));
    for (std::size_t q = 0; q < N; ++q) b.set(p, q, L.column(q));
  }
  ColorHomAlgebra out(std::move(b), kron(r.beta_matrix(), fd.dual.beta_matrix()), Kind::leibniz);
  return detail::finish(std::move(out), opt, "Faulkner Leibniz algebra");
}

/// Pullback form B(D u, D v) on M ⊗ M*, and the quadratic checks of the
/// Leibniz algebra carrying it.
inline std::pair<RatMatrix, Report> faulkner_quadratic(const FaulknerData& fd) {
  const auto& D = fd.dmap.matrix();
  if (D.cols() != D.rows() || fd.rank != D.cols())
    throw Error(ErrorCode::DNotBijective, "D has rank " + std::to_string(fd.rank) + " on a space of dimension " +
                                              std::to_string(D.cols()) + " with target dimension " +
                                              std::to_string(D.rows()));
  RatMatrix form = D.transpose() * fd.algebra.form_matrix() * D;
  const auto alg = faulkner_leibniz(fd).with_form(form);
  return {std::move(form), check_quadratic(alg)};
}

}  // namespace qchl
