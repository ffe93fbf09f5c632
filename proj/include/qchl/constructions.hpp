#pragma once

#include <cstdlib>
#include <string>
#include <vector>

#include "qchl/algebra.hpp"
#include "qchl/checks.hpp"
#include "qchl/representations.hpp"

namespace qchl {

/// Post-construction verification switch. On by default; QCHL_NO_VERIFY=1 turns it off.
struct BuildOptions {
  bool verify = default_verify();

  static bool default_verify() {
    const char* v = std::getenv("QCHL_NO_VERIFY");
    return !(v && std::string(v) == "1");
  }
};

namespace detail {

inline void require_passed(const Report& r, const std::string& what) {
  if (const auto* f = r.first_failure())
    throw Error(ErrorCode::VerificationFailed, what + ": check '" + f->name + "' failed", f->witness);
}

inline ColorHomAlgebra finish(ColorHomAlgebra out, const BuildOptions& opt, const std::string& what,
                              VerifyOptions vopt = {}) {
  if (opt.verify) {
    auto r = certify(out, vopt);
    require_passed(r, what);
  }
  return out;
}

inline RatMatrix block_diag(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

inline Vec concat(const Vec& a, const Vec& b) {
  Vec v = a;
  v.insert(v.end(), b.begin(), b.end());
  return v;
}

inline GradedLinearMap as_endomorphism(const ColorHomAlgebra& a, const RatMatrix& m) {
  return GradedLinearMap::even(a.space(), m);
}

}  // namespace detail

/// Same structure over a bigger grading group: every degree maps to 0.
/// Only meaningful from the trivial group, where eps is identically 1.
inline ColorHomAlgebra lift_to_group(const ColorHomAlgebra& a, const Bicharacter& bc) {
  if (a.space().group().arity() != 0)
    throw Error(ErrorCode::GroupMismatch, "only algebras graded by the trivial group can be lifted");
  std::vector<BasisVector> basis;
  for (const auto& v : a.space().basis()) basis.push_back({v.name, bc.group().zero()});
  GradedSpace s(bc, std::move(basis));
  StructureConstants b(s);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) b.set(i, j, a.bracket()(i, j));
  return ColorHomAlgebra(std::move(b), a.alpha_matrix(), a.kind(),
                         a.has_form() ? std::optional<RatMatrix>(a.form_matrix()) : std::nullopt);
}

/// (g, beta∘[.,.], beta∘alpha) for a weak self-morphism beta. The form is dropped.
inline ColorHomAlgebra twist_by_weak_morphism(const ColorHomAlgebra& a, const RatMatrix& beta,
                                              const BuildOptions& opt = {}) {
  const auto f = detail::as_endomorphism(a, beta);
  auto r = check_morphism(f, a, a, true);
  if (!r.passed()) throw Error(ErrorCode::NotWeakMorphism, "map does not preserve the bracket", r.checks[0].witness);
  ColorHomAlgebra out(a.bracket().mapped(beta), beta * a.alpha_matrix(), a.kind());
  return detail::finish(std::move(out), opt, "weak-morphism twist");
}

/// (g, beta∘[.,.], beta∘alpha, B_beta) with B_beta(x,y) = B(beta x, y), for a
/// bijective B-symmetric morphism beta commuting with alpha.
inline ColorHomAlgebra twist_quadratic(const ColorHomAlgebra& a, const RatMatrix& beta, const BuildOptions& opt = {}) {
  if (!a.has_form()) throw Error(ErrorCode::NoForm, "quadratic twist needs a bilinear form");
  if (auto q = check_quadratic(a); !q.passed())
    throw Error(ErrorCode::NotQuadratic, "input fails '" + q.first_failure()->name + "'", q.first_failure()->witness);
  const auto f = detail::as_endomorphism(a, beta);
  auto r = check_morphism(f, a, a, false);
  if (!r.checks[0].passed)
    throw Error(ErrorCode::NotSymmetricAutomorphism, "weak_morphism fails", r.checks[0].witness);
  if (!r.checks[1].passed)
    throw Error(ErrorCode::NotSymmetricAutomorphism, "commutes_with_alpha fails", r.checks[1].witness);
  if (rank(beta) != a.dim()) throw Error(ErrorCode::NotSymmetricAutomorphism, "bijective fails");
  const auto& B = a.form_matrix();
  const RatMatrix Bb = beta.transpose() * B;
  if (Bb != B * beta) throw Error(ErrorCode::NotSymmetricAutomorphism, "form_symmetric fails");
  ColorHomAlgebra out(a.bracket().mapped(beta), beta * a.alpha_matrix(), a.kind(), Bb);
  return detail::finish(std::move(out), opt, "quadratic twist", {.quadratic = true});
}

/// n-th power twist (g, alpha^n∘[.,.], alpha^{n+1}); keeps a form as B_{alpha^n}
/// when one is attached.
inline ColorHomAlgebra power_twist(const ColorHomAlgebra& a, unsigned n, const BuildOptions& opt = {}) {
  if (auto m = check_multiplicative(a); !m.passed())
    throw Error(ErrorCode::NotMultiplicative, "power twist needs a multiplicative algebra", m.checks[0].witness);
  const RatMatrix an = matrix_power(a.alpha_matrix(), n);
  if (a.has_form()) return twist_quadratic(a, an, opt);
  return twist_by_weak_morphism(a, an, opt);
}

struct CentroidElement {
  GradedLinearMap map;
  bool certified = false;
};

/// Basis of the centroid in the given degree (kernel of the defining linear system).
inline std::vector<CentroidElement> centroid_basis(const ColorHomAlgebra& a, const GroupElement& degree) {
  const auto& s = a.space();
  const auto deg = s.group().element(degree.coords);
  const std::size_t n = a.dim();
  // unknowns: theta(r, c) with deg r = deg c + degree
  std::vector<long> var(n * n, -1);
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (s.degree(r) == s.add(s.degree(c), deg)) {
        var[r * n + c] = static_cast<long>(slots.size());
        slots.emplace_back(r, c);
      }
  const auto& b = a.bracket();
  RowReducer sys(slots.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Rational e = s.eps(deg, s.degree(i));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec row1(slots.size()), row2(slots.size());
        // theta[e_i,e_j]_k
        for (std::size_t c = 0; c < n; ++c)
          if (!is_zero(b(i, j)[c]) && var[k * n + c] >= 0) {
            row1[var[k * n + c]] += b(i, j)[c];
            row2[var[k * n + c]] += b(i, j)[c];
          }
        for (std::size_t r = 0; r < n; ++r) {
          // [theta e_i, e_j]_k
          if (var[r * n + i] >= 0 && !is_zero(b(r, j)[k])) row1[var[r * n + i]] -= b(r, j)[k];
          // eps(theta, e_i)[e_i, theta e_j]_k
          if (var[r * n + j] >= 0 && !is_zero(b(i, r)[k])) row2[var[r * n + j]] -= e * b(i, r)[k];
        }
        if (!is_zero(row1)) sys.add(std::move(row1));
        if (!is_zero(row2)) sys.add(std::move(row2));
      }
  }
  std::vector<CentroidElement> out;
  for (const auto& v : sys.kernel()) {
    RatMatrix m(n, n);
    for (std::size_t t = 0; t < slots.size(); ++t) m(slots[t].first, slots[t].second) = v[t];
    out.push_back({GradedLinearMap(s, s, deg, std::move(m)), true});
  }
  return out;
}

/// Certifies theta as a centroid element of a.
inline CentroidElement make_centroid_element(const ColorHomAlgebra& a, const RatMatrix& theta) {
  GradedLinearMap m(a.space(), a.space(), a.space().zero_degree(), theta);
  return {m, m.is_even() && check_centroid(a, m).passed()};
}

enum class CentroidBracket { original, first, second };
enum class TwistOrder { theta_after_alpha, alpha_after_theta };

inline StructureConstants centroid_bracket(const ColorHomAlgebra& a, const RatMatrix& theta, CentroidBracket which) {
  const auto& b = a.bracket();
  if (which == CentroidBracket::original) return b;
  StructureConstants out(a.space());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Vec ti = theta.column(i);
    for (std::size_t j = 0; j < a.dim(); ++j)
      out.set(i, j, which == CentroidBracket::first ? b.apply(ti, unit_vector(a.dim(), j)) : b.apply(ti, theta.column(j)));
  }
  return out;
}

/// One of the six algebras built from an even centroid element: bracket
/// [x,y], [theta x, y] or [theta x, theta y], twist theta∘alpha or alpha∘theta.
inline ColorHomAlgebra centroid_twist(const ColorHomAlgebra& a, const CentroidElement& theta, CentroidBracket which,
                                      TwistOrder order, const BuildOptions& opt = {}) {
  if (!theta.map.is_even()) throw Error(ErrorCode::NotCentroid, "centroid element must be even");
  if (auto r = check_centroid(a, theta.map); !r.passed())
    throw Error(ErrorCode::NotCentroid, "map is not in the centroid", r.checks[0].witness);
  const auto& t = theta.map.matrix();
  RatMatrix tw = order == TwistOrder::theta_after_alpha ? t * a.alpha_matrix() : a.alpha_matrix() * t;
  ColorHomAlgebra out(centroid_bracket(a, t, which), std::move(tw), a.kind());
  return detail::finish(std::move(out), opt, "centroid twist");
}

/// (g, [.,.]_i^theta, theta, B_theta) for a quadratic color Lie algebra (alpha = id)
/// and an invertible B-symmetric centroid element theta.
inline ColorHomAlgebra centroid_quadratic(const ColorHomAlgebra& a, const CentroidElement& theta, CentroidBracket which,
                                          const BuildOptions& opt = {}) {
  if (which == CentroidBracket::original)
    throw Error(ErrorCode::BadParams, "quadratic centroid construction uses the first or second bracket");
  if (a.alpha_matrix() != RatMatrix::identity(a.dim()))
    throw Error(ErrorCode::NotColorLie, "quadratic centroid construction needs alpha = id");
  if (!a.has_form()) throw Error(ErrorCode::NoForm, "quadratic centroid construction needs a form");
  const auto& t = theta.map.matrix();
  if (!theta.map.is_even() || rank(t) != a.dim()) throw Error(ErrorCode::NotInvertible, "theta is not invertible");
  const auto& B = a.form_matrix();
  const RatMatrix Bt = t.transpose() * B;
  if (Bt != B * t) throw Error(ErrorCode::NotBSymmetric, "theta is not B-symmetric");
  if (auto r = check_centroid(a, theta.map); !r.passed())
    throw Error(ErrorCode::NotCentroid, "map is not in the centroid", r.checks[0].witness);
  ColorHomAlgebra out(centroid_bracket(a, t, which), t, Kind::lie, Bt);
  return detail::finish(std::move(out), opt, "quadratic centroid twist", {.quadratic = true});
}

/// [x,y] = mu(x,y) - eps(x,y) mu(y,x) on a color Hom-associative algebra.
inline ColorHomAlgebra commutator_algebra(const ColorHomAlgebra& a, const BuildOptions& opt = {}) {
  if (auto r = check_hom_associative(a); !r.passed())
    throw Error(ErrorCode::NotHomAssociative, "input is not Hom-associative", r.checks[0].witness);
  if (a.has_form())
    if (auto q = check_quadratic(a); !q.passed())
      throw Error(ErrorCode::NotQuadratic, "input fails '" + q.first_failure()->name + "'", q.first_failure()->witness);
  StructureConstants b(a.space());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vec v = a.bracket()(i, j);
      axpy(v, -a.eps(i, j), a.bracket()(j, i));
      b.set(i, j, std::move(v));
    }
  ColorHomAlgebra out(std::move(b), a.alpha_matrix(), Kind::lie,
                      a.has_form() ? std::optional<RatMatrix>(a.form_matrix()) : std::nullopt);
  return detail::finish(std::move(out), opt, "commutator algebra", {.quadratic = a.has_form()});
}

/// g ⊗ A with [x⊗a, y⊗b] = eps(a,y)[x,y]⊗ab, twist alpha_g⊗alpha_A, and when
/// both forms are present B(x⊗a, y⊗b) = eps(a,y) B_g(x,y) B_A(a,b).
inline ColorHomAlgebra tensor_product_algebra(const ColorHomAlgebra& g, const ColorHomAlgebra& A,
                                              const BuildOptions& opt = {}) {
  if (!g.space().same_grading(A.space())) throw Error(ErrorCode::GroupMismatch, "factors graded differently");
  if (g.kind() != Kind::lie) throw Error(ErrorCode::KindMismatch, "first factor must be a Lie-type algebra");
  if (A.kind() != Kind::associative) throw Error(ErrorCode::KindMismatch, "second factor must be associative");
  if (auto r = check_hom_associative(A, true); !r.passed())
    throw Error(ErrorCode::NotHomAssociative, "second factor is not commutative Hom-associative",
                r.first_failure()->witness);
  const std::size_t n = g.dim(), m = A.dim();
  const auto& gs = g.space();
  const auto& as = A.space();
  GradedSpace s = tensor(gs, as);
  StructureConstants b(s);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t q = 0; q < m; ++q) {
          const auto& xy = g.bracket()(i, j);
          const auto& ab = A.bracket()(p, q);
          if (is_zero(xy) || is_zero(ab)) continue;
          const Rational e = gs.eps(as.degree(p), gs.degree(j));
          Vec v(n * m);
          for (std::size_t k = 0; k < n; ++k) {
            if (is_zero(xy[k])) continue;
            for (std::size_t r = 0; r < m; ++r)
              if (!is_zero(ab[r])) v[k * m + r] = e * xy[k] * ab[r];
          }
          b.set(i * m + p, j * m + q, std::move(v));
        }
  std::optional<RatMatrix> form;
  if (g.has_form() && A.has_form()) {
    RatMatrix B(n * m, n * m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t p = 0; p < m; ++p)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t q = 0; q < m; ++q) {
            const Rational v = g.form_matrix()(i, j) * A.form_matrix()(p, q);
            if (!is_zero(v)) B(i * m + p, j * m + q) = gs.eps(as.degree(p), gs.degree(j)) * v;
          }
    form = std::move(B);
  }
  ColorHomAlgebra out(std::move(b), kron(g.alpha_matrix(), A.alpha_matrix()), Kind::lie, std::move(form));
  return detail::finish(std::move(out), opt, "tensor product", {.quadratic = g.has_form() && A.has_form()});
}

/// g ⋉ M: [x+u, y+v] = [x,y] + rho(x)v - eps(x,y) rho(y)u, twist alpha ⊕ beta.
inline ColorHomAlgebra semidirect_product(const Representation& rep, const BuildOptions& opt = {}) {
  if (auto r = check_representation(rep); !r.passed())
    throw Error(ErrorCode::NotRepresentation, "module is not a representation", r.checks[0].witness);
  const auto& g = rep.algebra();
  const std::size_t n = g.dim(), m = rep.module_dim();
  GradedSpace s = direct_sum(g.space(), rep.module());
  StructureConstants b(s);
  const Vec zm(m), zn(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) b.set(i, j, detail::concat(g.bracket()(i, j), zm));
    for (std::size_t v = 0; v < m; ++v) {
      const Vec act = rep.rho(i).column(v);
      b.set(i, n + v, detail::concat(zn, act));
      b.set(n + v, i, detail::concat(zn, scaled(-s.eps(n + v, i), act)));
    }
  }
  ColorHomAlgebra out(std::move(b), detail::block_diag(g.alpha_matrix(), rep.beta_matrix()), Kind::lie);
  return detail::finish(std::move(out), opt, "semidirect product");
}

}  // namespace qchl
