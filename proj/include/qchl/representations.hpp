#pragma once

#include <utility>
#include <vector>

#include "qchl/algebra.hpp"
#include "qchl/checks.hpp"
#include "qchl/report.hpp"

namespace qchl {

/// rho(e_i) for each algebra basis vector, acting on a graded module with twist beta.
class Representation {
 public:
  Representation() = default;

  Representation(ColorHomAlgebra algebra, GradedSpace module, RatMatrix beta, std::vector<RatMatrix> rho)
      : algebra_(std::move(algebra)),
        module_(std::move(module)),
        beta_(GradedLinearMap::even(module_, std::move(beta))),
        rho_(std::move(rho)) {
    if (!algebra_.space().same_grading(module_))
      throw Error(ErrorCode::GroupMismatch, "module graded differently from the algebra");
    if (rho_.size() != algebra_.dim())
      throw Error(ErrorCode::DimensionMismatch, "need one action matrix per algebra basis vector");
    for (std::size_t i = 0; i < rho_.size(); ++i) {
      if (rho_[i].rows() != module_.dim() || rho_[i].cols() != module_.dim())
        throw Error(ErrorCode::DimensionMismatch, "action matrix has wrong shape", {i});
      GradedLinearMap f(module_, module_, algebra_.degree(i), rho_[i]);
      if (auto w = f.homogeneity_witness())
        throw Error(ErrorCode::GradingViolation, "action of " + algebra_.space().name(i) + " is not homogeneous",
                    {i, w->first, w->second});
    }
  }

  const ColorHomAlgebra& algebra() const { return algebra_; }
  const GradedSpace& module() const { return module_; }
  std::size_t module_dim() const { return module_.dim(); }
  const GradedLinearMap& beta() const { return beta_; }
  const RatMatrix& beta_matrix() const { return beta_.matrix(); }
  const std::vector<RatMatrix>& rho() const { return rho_; }
  const RatMatrix& rho(std::size_t i) const { return rho_[i]; }

  /// rho(x) for an arbitrary algebra element.
  RatMatrix rho(const Vec& x) const {
    RatMatrix m(module_dim(), module_dim());
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!is_zero(x[i])) m = m + x[i] * rho_[i];
    return m;
  }

  Vec action(const Vec& x, const Vec& m) const { return rho(x) * m; }

  /// eps(deg e_i, deg m_v)
  Rational eps(std::size_t i, std::size_t v) const { return module_.eps(algebra_.degree(i), module_.degree(v)); }

  bool operator==(const Representation& o) const {
    return algebra_ == o.algebra_ && module_ == o.module_ && beta_ == o.beta_ && rho_ == o.rho_;
  }

 private:
  ColorHomAlgebra algebra_;
  GradedSpace module_;
  GradedLinearMap beta_;
  std::vector<RatMatrix> rho_;
};

namespace detail {

inline std::vector<RatMatrix> rho_alpha(const Representation& r) {
  std::vector<RatMatrix> out;
  const auto& al = r.algebra().alpha_matrix();
  for (std::size_t i = 0; i < r.algebra().dim(); ++i) out.push_back(r.rho(al.column(i)));
  return out;
}

}  // namespace detail

/// rho([x,y]) beta = rho(alpha x) rho(y) - eps(x,y) rho(alpha y) rho(x); with the
/// flag also beta rho(x) = rho(alpha x) beta.
inline Report check_representation(const Representation& r, bool multiplicative = false) {
  const auto& a = r.algebra();
  const auto ra = detail::rho_alpha(r);
  const auto& beta = r.beta_matrix();
  Report rep;
  Check c = pass("representation");
  for (std::size_t i = 0; i < a.dim() && c.passed; ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const RatMatrix lhs = r.rho(a.bracket()(i, j)) * beta;
      const RatMatrix rhs = ra[i] * r.rho(j) - a.eps(i, j) * (ra[j] * r.rho(i));
      if (lhs != rhs) {
        c = fail("representation", {i, j});
        break;
      }
    }
  rep.add(c);
  if (multiplicative) {
    Check m = pass("representation_multiplicative");
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (beta * r.rho(i) != ra[i] * beta) {
        m = fail("representation_multiplicative", {i});
        break;
      }
    rep.add(m);
  }
  return rep;
}

/// The action bracket [x,m] = rho(x)m, with [m,x] = -eps(m,x)[x,m].
class HomModule {
 public:
  explicit HomModule(const Representation& r) : r_(&r) {}

  Vec act(std::size_t i, const Vec& m) const { return r_->rho(i) * m; }
  /// [m_v, e_i]
  Vec right(std::size_t v, std::size_t i) const {
    return scaled(-r_->module().eps(r_->module().degree(v), r_->algebra().degree(i)), r_->rho(i).column(v));
  }
  const Representation& representation() const { return *r_; }

 private:
  const Representation* r_;
};

/// Cyclic module identity
///   eps(m,x)[alpha x,[y,m]] + c(x,y,m)[alpha y,[m,x]] + eps(y,m)[beta m,[x,y]] = 0
/// with c = eps(x,y); `literal_middle` uses c = eps(m,x) instead.
inline Report check_hom_module(const Representation& r, bool literal_middle = false) {
  const auto& a = r.algebra();
  const auto& M = r.module();
  const auto ra = detail::rho_alpha(r);
  const auto& beta = r.beta_matrix();
  const std::string name = literal_middle ? "hom_module_literal" : "hom_module";
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const auto dxy = a.space().add(a.degree(i), a.degree(j));
      const RatMatrix rb = r.rho(a.bracket()(i, j)) * beta;
      for (std::size_t v = 0; v < M.dim(); ++v) {
        const auto& dm = M.degree(v);
        const Rational e_mx = M.eps(dm, a.degree(i));
        const Rational e_ym = M.eps(a.degree(j), dm);
        const Rational mid = literal_middle ? e_mx : a.eps(i, j);
        Vec s = scaled(e_mx, ra[i] * r.rho(j).column(v));
        axpy(s, mid * -e_mx, ra[j] * r.rho(i).column(v));
        // [beta m, u] = -eps(m, deg u) rho(u) beta m
        axpy(s, e_ym * -M.eps(dm, dxy), rb.column(v));
        if (!is_zero(s)) return Report{{fail(name, {i, j, v})}};
      }
    }
  return Report{{pass(name)}};
}

/// Even isomorphism f with f beta = beta' f and f rho(x) = rho'(x) f.
inline Report check_equivalence(const RatMatrix& f, const Representation& r1, const Representation& r2) {
  if (!(r1.algebra() == r2.algebra())) throw Error(ErrorCode::AlgebraMismatch, "representations of different algebras");
  GradedLinearMap map(r1.module(), r2.module(), r1.module().zero_degree(), f);
  if (!map.is_even()) return Report{{fail("equivalence", {}, "map is not even")}};
  if (!inverse(f)) return Report{{fail("equivalence", {}, "map is not invertible")}};
  if (f * r1.beta_matrix() != r2.beta_matrix() * f) return Report{{fail("equivalence", {}, "twists not intertwined")}};
  for (std::size_t i = 0; i < r1.algebra().dim(); ++i)
    if (f * r1.rho(i) != r2.rho(i) * f) return Report{{fail("equivalence", {i})}};
  return Report{{pass("equivalence")}};
}

/// rho = 0 on the given module with twist beta (identity by default).
inline Representation trivial_rep(const ColorHomAlgebra& a, const GradedSpace& module,
                                  std::optional<RatMatrix> beta = std::nullopt) {
  std::vector<RatMatrix> rho(a.dim(), RatMatrix(module.dim(), module.dim()));
  return Representation(a, module, beta ? *beta : RatMatrix::identity(module.dim()), std::move(rho));
}

/// The ground field in degree 0 with rho = 0 and beta = id.
inline Representation trivial_rep(const ColorHomAlgebra& a) {
  return trivial_rep(a, scalar_space(a.space().bicharacter()));
}

inline Representation adjoint_rep(const ColorHomAlgebra& a) {
  std::vector<RatMatrix> rho;
  for (std::size_t i = 0; i < a.dim(); ++i) rho.push_back(a.bracket().left(i));
  return Representation(a, a.space(), a.alpha_matrix(), std::move(rho));
}

/// Candidate dual representation on M* plus a report on the condition
///   rho(x) rho(alpha y) - eps(x,y) rho(y) rho(alpha x) = beta rho([x,y]),
/// which holds iff the candidate is a representation.
inline std::pair<Representation, Report> dual_rep(const Representation& r, const std::string& check_name = "dual_condition") {
  const auto& a = r.algebra();
  const auto& M = r.module();
  GradedSpace Md = dual(M);
  std::vector<RatMatrix> rho;
  for (std::size_t k = 0; k < a.dim(); ++k) {
    RatMatrix t = r.rho(k).transpose();
    for (std::size_t i = 0; i < M.dim(); ++i) {
      const Rational e = -M.eps(a.degree(k), Md.degree(i));
      for (std::size_t j = 0; j < M.dim(); ++j)
        if (!is_zero(t(j, i))) t(j, i) *= e;
    }
    rho.push_back(std::move(t));
  }
  Representation d(a, Md, r.beta_matrix().transpose(), std::move(rho));

  const auto ra = detail::rho_alpha(r);
  Check c = pass(check_name);
  for (std::size_t i = 0; i < a.dim() && c.passed; ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const RatMatrix lhs = r.rho(i) * ra[j] - a.eps(i, j) * (r.rho(j) * ra[i]);
      const RatMatrix rhs = r.beta_matrix() * r.rho(a.bracket()(i, j));
      if (lhs != rhs) {
        c = fail(check_name, {i, j});
        break;
      }
    }
  return {std::move(d), Report{{c}}};
}

/// Dual of the adjoint representation, on g* with twist alpha^T.
inline std::pair<Representation, Report> coadjoint_rep(const ColorHomAlgebra& a) {
  return dual_rep(adjoint_rep(a), "coadjoint_condition");
}

/// (rho1 ⊗ rho2)(x)(m1⊗m2) = rho1(x)m1 ⊗ beta2 m2 + eps(x,m1) beta1 m1 ⊗ rho2(x) m2.
inline Representation tensor_rep(const Representation& r1, const Representation& r2) {
  if (!(r1.algebra() == r2.algebra())) throw Error(ErrorCode::AlgebraMismatch, "representations of different algebras");
  if (!check_multiplicative(r1.algebra()).passed())
    throw Error(ErrorCode::NotMultiplicative, "tensor product of representations needs a multiplicative algebra");
  for (const auto* r : {&r1, &r2}) {
    auto rep = check_representation(*r, true);
    if (!rep.checks[0].passed) throw Error(ErrorCode::NotRepresentation, "factor is not a representation", rep.checks[0].witness);
    if (!rep.checks[1].passed)
      throw Error(ErrorCode::NotMultiplicative, "factor is not a multiplicative representation", rep.checks[1].witness);
  }
  const auto& a = r1.algebra();
  std::vector<RatMatrix> rho;
  for (std::size_t k = 0; k < a.dim(); ++k) {
    RatMatrix b1 = r1.beta_matrix();
    for (std::size_t u = 0; u < r1.module_dim(); ++u) {
      const Rational e = r1.eps(k, u);
      for (std::size_t t = 0; t < r1.module_dim(); ++t) b1(t, u) *= e;
    }
    rho.push_back(kron(r1.rho(k), r2.beta_matrix()) + kron(b1, r2.rho(k)));
  }
  return Representation(a, tensor(r1.module(), r2.module()), kron(r1.beta_matrix(), r2.beta_matrix()),
                        std::move(rho));
}

}  // namespace qchl
