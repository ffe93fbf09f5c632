#pragma once

#include <string>
#include <vector>

#include "qchl/algebra.hpp"
#include "qchl/report.hpp"

namespace qchl {

namespace detail {

inline std::vector<Vec> columns(const RatMatrix& m) {
  std::vector<Vec> out;
  out.reserve(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m.column(j));
  return out;
}

/// ad(alpha(e_i)) for each i.
inline std::vector<RatMatrix> left_alpha(const ColorHomAlgebra& a) {
  std::vector<RatMatrix> out;
  for (std::size_t i = 0; i < a.dim(); ++i) out.push_back(a.bracket().left(a.alpha_matrix().column(i)));
  return out;
}

/// x -> [x, alpha(e_k)] for each k.
inline std::vector<RatMatrix> right_alpha(const ColorHomAlgebra& a) {
  std::vector<RatMatrix> out;
  for (std::size_t k = 0; k < a.dim(); ++k) out.push_back(a.bracket().right(a.alpha_matrix().column(k)));
  return out;
}

}  // namespace detail

/// Every nonzero coefficient of e_i * e_j sits in degree deg(i) + deg(j).
inline Report check_graded(const StructureConstants& b) {
  const auto& s = b.space();
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) {
      const auto target = s.add(s.degree(i), s.degree(j));
      const auto& v = b(i, j);
      for (std::size_t k = 0; k < b.dim(); ++k)
        if (!is_zero(v[k]) && s.degree(k) != target)
          return Report{{fail("graded", {i, j, k}, "coefficient of " + s.name(k) + " in [" + s.name(i) + "," +
                                                       s.name(j) + "] has the wrong degree")}};
    }
  return Report{{pass("graded")}};
}

inline Report check_graded(const ColorHomAlgebra& a) { return check_graded(a.bracket()); }

/// [e_i, e_j] = -eps(i,j) [e_j, e_i] for all i <= j.
inline Report check_skew(const ColorHomAlgebra& a) {
  const auto& b = a.bracket();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j) {
      Vec s = b(i, j);
      axpy(s, a.eps(i, j), b(j, i));
      if (!is_zero(s)) return Report{{fail("skew", {i, j})}};
    }
  return Report{{pass("skew")}};
}

/// Cyclic sum eps(k,i)[a e_i,[e_j,e_k]] + eps(i,j)[a e_j,[e_k,e_i]] + eps(j,k)[a e_k,[e_i,e_j]] = 0.
inline Report check_hom_jacobi(const ColorHomAlgebra& a) {
  const auto la = detail::left_alpha(a);
  const auto& b = a.bracket();
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec s(n);
        axpy(s, a.eps(k, i), la[i] * b(j, k));
        axpy(s, a.eps(i, j), la[j] * b(k, i));
        axpy(s, a.eps(j, k), la[k] * b(i, j));
        if (!is_zero(s)) return Report{{fail("hom_jacobi", {i, j, k})}};
      }
  return Report{{pass("hom_jacobi")}};
}

/// alpha[e_i, e_j] = [alpha e_i, alpha e_j].
inline Report check_multiplicative(const ColorHomAlgebra& a) {
  const auto la = detail::left_alpha(a);
  const auto& al = a.alpha_matrix();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (al * a.bracket()(i, j) != la[i] * al.column(j)) return Report{{fail("multiplicative", {i, j})}};
  return Report{{pass("multiplicative")}};
}

/// mu(alpha x, mu(y,z)) = mu(mu(x,y), alpha z); optionally mu(x,y) = eps(x,y) mu(y,x).
inline Report check_hom_associative(const ColorHomAlgebra& a, bool commutative = false) {
  Report r;
  const auto la = detail::left_alpha(a);
  const auto ra = detail::right_alpha(a);
  const auto& b = a.bracket();
  const std::size_t n = a.dim();
  Check assoc = pass("hom_associative");
  for (std::size_t i = 0; i < n && assoc.passed; ++i)
    for (std::size_t j = 0; j < n && assoc.passed; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (la[i] * b(j, k) != ra[k] * b(i, j)) {
          assoc = fail("hom_associative", {i, j, k});
          break;
        }
  r.add(assoc);
  if (commutative) {
    Check comm = pass("commutative");
    for (std::size_t i = 0; i < n && comm.passed; ++i)
      for (std::size_t j = i; j < n; ++j)
        if (b(i, j) != scaled(a.eps(i, j), b(j, i))) {
          comm = fail("commutative", {i, j});
          break;
        }
    r.add(comm);
  }
  return r;
}

/// [alpha x,[y,z]] - eps(x,y)[alpha y,[x,z]] - [[x,y],alpha z] = 0.
inline Report check_hom_leibniz(const ColorHomAlgebra& a) {
  const auto la = detail::left_alpha(a);
  const auto ra = detail::right_alpha(a);
  const auto& b = a.bracket();
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec s = la[i] * b(j, k);
        axpy(s, -a.eps(i, j), la[j] * b(i, k));
        axpy(s, Rational(-1), ra[k] * b(i, j));
        if (!is_zero(s)) return Report{{fail("hom_leibniz", {i, j, k})}};
      }
  return Report{{pass("hom_leibniz")}};
}

namespace detail {

/// B(x*y, z) as a row over z, and B(x, y*z) as a row over x, compared on basis triples.
inline Check invariance(const StructureConstants& b, const RatMatrix& B, const std::string& name) {
  const std::size_t n = b.dim();
  const RatMatrix Bt = B.transpose();
  std::vector<Vec> rhs(n * n);  // rhs[j*n+k][i] = B(e_i, [e_j,e_k])
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) rhs[j * n + k] = B * b(j, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec lhs = Bt * b(i, j);  // lhs[k] = B([e_i,e_j], e_k)
      for (std::size_t k = 0; k < n; ++k)
        if (lhs[k] != rhs[j * n + k][i]) return fail(name, {i, j, k});
    }
  return pass(name);
}

}  // namespace detail

/// Four sub-checks on the attached form: eps-symmetry, invariance,
/// nondegeneracy and B-symmetry of alpha.
inline Report check_quadratic(const ColorHomAlgebra& a) {
  if (!a.has_form()) throw Error(ErrorCode::NoForm, "quadratic check needs a bilinear form");
  const auto& B = a.form_matrix();
  const std::size_t n = a.dim();
  Report r;

  Check sym = pass("form_eps_symmetric");
  for (std::size_t i = 0; i < n && sym.passed; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (B(i, j) != a.eps(i, j) * B(j, i)) {
        sym = fail("form_eps_symmetric", {i, j});
        break;
      }
  r.add(sym);

  r.add(detail::invariance(a.bracket(), B, "form_invariant"));

  const auto red = rref(B);
  if (red.rank == n) {
    r.add(pass("form_nondegenerate"));
  } else {
    r.add(fail("form_nondegenerate", {}, "rank " + std::to_string(red.rank) + " < " + std::to_string(n)));
  }

  const auto& al = a.alpha_matrix();
  const RatMatrix lhs = al.transpose() * B;  // B(alpha e_i, e_j)
  const RatMatrix rhs = B * al;              // B(e_i, alpha e_j)
  Check asym = pass("alpha_form_symmetric");
  for (std::size_t i = 0; i < n && asym.passed; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (lhs(i, j) != rhs(i, j)) {
        asym = fail("alpha_form_symmetric", {i, j});
        break;
      }
  r.add(asym);
  return r;
}

/// B(beta x, [y,z]) = B([x,y], beta z).
inline Report check_beta_invariance(const ColorHomAlgebra& a, const GradedLinearMap& beta) {
  if (!a.has_form()) throw Error(ErrorCode::NoForm, "beta-invariance needs a bilinear form");
  if (!beta.is_even() || !(beta.source() == a.space()) || !(beta.target() == a.space()))
    throw Error(ErrorCode::SpaceMismatch, "beta must be an even endomorphism of the algebra");
  const auto& B = a.form_matrix();
  const auto& b = a.bracket();
  const std::size_t n = a.dim();
  const RatMatrix left = beta.matrix().transpose() * B;  // B(beta e_i, e_m)
  const RatMatrix right = B * beta.matrix();             // B(e_m, beta e_k)
  const RatMatrix right_t = right.transpose();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec r = right_t * b(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        const Vec l = left * b(j, k);
        if (l[i] != r[k]) return Report{{fail("beta_invariance", {i, j, k})}};
      }
    }
  return Report{{pass("beta_invariance")}};
}

/// f[x,y] = [f x, f y]'; when not weak, also f∘alpha = alpha'∘f.
inline Report check_morphism(const GradedLinearMap& f, const ColorHomAlgebra& a, const ColorHomAlgebra& b,
                             bool weak) {
  if (!(f.source() == a.space()) || !(f.target() == b.space()))
    throw Error(ErrorCode::SpaceMismatch, "map does not go between the algebras' spaces");
  if (!f.is_even()) throw Error(ErrorCode::GradingViolation, "morphisms must be even");
  Report r;
  const auto& m = f.matrix();
  std::vector<RatMatrix> lf;
  for (std::size_t i = 0; i < a.dim(); ++i) lf.push_back(b.bracket().left(m.column(i)));
  Check w = pass("weak_morphism");
  for (std::size_t i = 0; i < a.dim() && w.passed; ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (m * a.bracket()(i, j) != lf[i] * m.column(j)) {
        w = fail("weak_morphism", {i, j});
        break;
      }
  r.add(w);
  if (!weak) {
    const RatMatrix lhs = m * a.alpha_matrix();
    const RatMatrix rhs = b.alpha_matrix() * m;
    Check t = pass("twist_intertwining");
    for (std::size_t j = 0; j < a.dim() && t.passed; ++j)
      if (lhs.column(j) != rhs.column(j)) t = fail("twist_intertwining", {j});
    r.add(t);
  }
  return r;
}

/// theta[x,y] = [theta x, y] = eps(theta,x)[x, theta y].
inline Report check_centroid(const ColorHomAlgebra& a, const GradedLinearMap& theta) {
  if (!(theta.source() == a.space()) || !(theta.target() == a.space()))
    throw Error(ErrorCode::SpaceMismatch, "centroid element must be an endomorphism");
  if (theta.homogeneity_witness()) return Report{{fail("centroid", {}, "map is not homogeneous")}};
  const auto& t = theta.matrix();
  const auto& b = a.bracket();
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    const RatMatrix lt = b.left(t.column(i));
    const Rational e = a.space().eps(theta.degree(), a.degree(i));
    const RatMatrix li = b.left(i);
    for (std::size_t j = 0; j < n; ++j) {
      const Vec lhs = t * b(i, j);
      if (lhs != lt.column(j) || lhs != scaled(e, li * t.column(j))) return Report{{fail("centroid", {i, j})}};
    }
  }
  return Report{{pass("centroid")}};
}

struct VerifyOptions {
  bool quadratic = false;
  bool multiplicative = false;
  bool commutative = false;
};

/// The axiom checks appropriate for the algebra's declared kind.
inline Report verify(const ColorHomAlgebra& a, VerifyOptions opt = {}) {
  Report r = check_graded(a);
  switch (a.kind()) {
    case Kind::lie:
      r.merge(check_skew(a)).merge(check_hom_jacobi(a));
      break;
    case Kind::associative:
      r.merge(check_hom_associative(a, opt.commutative));
      break;
    case Kind::leibniz:
      r.merge(check_hom_leibniz(a));
      break;
  }
  if (opt.multiplicative) r.merge(check_multiplicative(a));
  if (opt.quadratic) r.merge(check_quadratic(a));
  return r;
}

/// Runs verify() and stores each check outcome on the algebra.
inline Report certify(ColorHomAlgebra& a, VerifyOptions opt = {}) {
  Report r = verify(a, opt);
  for (const auto& c : r.checks) a.record(c.name, c.passed);
  return r;
}

}  // namespace qchl
