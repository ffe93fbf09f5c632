#pragma once

#include <set>
#include <string>
#include <vector>

#include "qchl/qchl.hpp"

namespace qchl::testing {

inline GroupElement deg(std::initializer_list<std::int64_t> c) { return GroupElement{std::vector<std::int64_t>(c)}; }

/// tr(ad x ∘ ad y) on basis vectors.
inline RatMatrix killing_by_trace(const ColorHomAlgebra& a) {
  const std::size_t n = a.dim();
  std::vector<RatMatrix> ad;
  for (std::size_t i = 0; i < n; ++i) {
    RatMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m(k, j) = a.bracket()(i, j)[k];
    ad.push_back(std::move(m));
  }
  RatMatrix K(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const RatMatrix p = ad[i] * ad[j];
      for (std::size_t t = 0; t < n; ++t) K(i, j) += p(t, t);
    }
  return K;
}

/// Abelian algebra on n even vectors over the trivial group with alpha = id.
inline ColorHomAlgebra abelian(std::size_t n, std::optional<RatMatrix> form = std::nullopt) {
  std::vector<BasisVector> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back({"e" + std::to_string(i + 1), {}});
  GradedSpace s(Bicharacter::trivial(make_group(0, {})), std::move(basis));
  return ColorHomAlgebra(StructureConstants(s), RatMatrix::identity(n), Kind::lie, std::move(form));
}

inline RatMatrix diag(const std::vector<Rational>& d) {
  RatMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

/// exp(D) for nilpotent D; nullopt when D is not nilpotent.
inline std::optional<RatMatrix> exp_nilpotent(const RatMatrix& D) {
  const std::size_t n = D.rows();
  RatMatrix out = RatMatrix::identity(n), term = RatMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    term = (Rational(1, k) * (term * D));
    if (term.is_zero()) return out;
    out = out + term;
  }
  return std::nullopt;
}

/// Maps x -> chi(deg x) x for the characters of Z_2^k sending each generator to ±1.
inline std::vector<RatMatrix> grading_characters(const ColorHomAlgebra& a) {
  const auto& g = a.space().group();
  std::vector<RatMatrix> out;
  if (g.free_rank() != 0) return out;
  for (auto o : g.torsion_orders())
    if (o != 2) return out;
  const std::size_t k = g.arity();
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    std::vector<Rational> d;
    for (std::size_t i = 0; i < a.dim(); ++i) {
      std::int64_t s = 0;
      for (std::size_t t = 0; t < k; ++t)
        if (mask >> t & 1) s += a.degree(i).coords[t];
      d.push_back(s % 2 ? -1 : 1);
    }
    out.push_back(diag(d));
  }
  return out;
}

inline bool contains(const std::vector<RatMatrix>& v, const RatMatrix& m) {
  for (const auto& x : v)
    if (x == m) return true;
  return false;
}

/// At least `want` distinct even maps passing check_morphism(weak), built from
/// identity, zero, powers of alpha, grading characters, exponentials of
/// nilpotent derivations and their products.
inline std::vector<RatMatrix> sample_weak_morphisms(const ColorHomAlgebra& a, std::size_t want = 10) {
  const std::size_t n = a.dim();
  std::vector<RatMatrix> cands{RatMatrix::identity(n), RatMatrix(n, n)};
  for (unsigned k = 1; k <= 3; ++k) cands.push_back(matrix_power(a.alpha_matrix(), k));
  for (const auto& c : grading_characters(a)) cands.push_back(c);
  const auto zero = a.space().zero_degree();
  const auto ders = derivation_space(a.with_alpha(RatMatrix::identity(n)), 0, zero);
  for (const auto& d : ders)
    for (const Rational& t : {Rational(1), Rational(2), Rational(-1), Rational(1, 2), Rational(3)})
      if (auto e = exp_nilpotent(t * d.map.matrix())) cands.push_back(*e);
  for (std::size_t i = 0; i + 1 < ders.size(); ++i)
    if (auto e = exp_nilpotent(ders[i].map.matrix() + ders[i + 1].map.matrix())) cands.push_back(*e);
  std::vector<RatMatrix> good;
  auto consider = [&](const RatMatrix& m) {
    if (contains(good, m)) return;
    GradedLinearMap f(a.space(), a.space(), zero, m);
    if (!f.is_even()) return;
    if (check_morphism(f, a, a, true).checks[0].passed) good.push_back(m);
  };
  for (const auto& c : cands) consider(c);
  for (std::size_t i = 0; good.size() < want && i < good.size(); ++i)
    for (std::size_t j = 0; good.size() < want && j < good.size(); ++j) consider(good[i] * good[j]);
  return good;
}

/// Bijective weak morphisms commuting with alpha that are B-symmetric.
inline std::vector<RatMatrix> filter_symmetric(const ColorHomAlgebra& a, const std::vector<RatMatrix>& cands) {
  std::vector<RatMatrix> good;
  const auto& B = a.form_matrix();
  for (const auto& m : cands) {
    if (contains(good, m)) continue;
    GradedLinearMap f(a.space(), a.space(), a.space().zero_degree(), m);
    if (!f.is_even() || rank(m) != a.dim()) continue;
    if (!check_morphism(f, a, a, false).passed()) continue;
    if (m.transpose() * B != B * m) continue;
    good.push_back(m);
  }
  return good;
}

/// Symmetric automorphisms: identity, alpha, grading characters, products, plus `extra`.
inline std::vector<RatMatrix> sample_symmetric_automorphisms(const ColorHomAlgebra& a,
                                                             const std::vector<RatMatrix>& extra = {}) {
  std::vector<RatMatrix> cands{RatMatrix::identity(a.dim()), a.alpha_matrix()};
  for (const auto& c : grading_characters(a)) cands.push_back(c);
  for (const auto& e : extra) cands.push_back(e);
  auto good = filter_symmetric(a, cands);
  const std::size_t base = good.size();
  std::vector<RatMatrix> prods;
  for (std::size_t i = 0; i < base; ++i)
    for (std::size_t j = 0; j < base; ++j) prods.push_back(good[i] * good[j]);
  for (const auto& p : filter_symmetric(a, prods))
    if (!contains(good, p)) good.push_back(p);
  return good;
}

/// x1 -> -x1, x2 -> t x3, x3 -> x2 / t on sl2.
inline RatMatrix sl2_weyl(const Rational& t) {
  RatMatrix m(3, 3);
  m(0, 0) = -1;
  m(2, 1) = t;
  m(1, 2) = 1 / t;
  return m;
}

/// Dense brute-force cohomology: unknowns are all table entries phi(i,j)[r];
/// constraints and coboundaries are assembled directly from the formulas.
struct DenseCohomology {
  std::size_t dim_c1, dim_c2, dim_z2, dim_b2, dim_h2;
};

namespace dense {

/// Rows forcing homogeneity, alternation and compatibility on full 2-tables
/// (or 1-tables when n = 1), over d^n * m unknowns.
inline RatMatrix constraints(const Representation& rep, int n, const GroupElement& degree) {
  const auto& a = rep.algebra();
  const auto& s = a.space();
  const auto& M = rep.module();
  const std::size_t d = a.dim(), m = M.dim();
  const std::size_t cells = n == 1 ? d : d * d;
  const std::size_t nv = cells * m;
  const auto& al = a.alpha_matrix();
  const auto& beta = rep.beta_matrix();
  std::vector<Vec> rows;
  auto var = [&](std::size_t i, std::size_t j, std::size_t r) { return ((n == 1 ? i : i * d + j) * m) + r; };
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < (n == 1 ? 1 : d); ++j)
      for (std::size_t r = 0; r < m; ++r) {
        auto target = s.add(degree, s.degree(i));
        if (n == 2) target = s.add(target, s.degree(j));
        if (M.degree(r) != target) {
          Vec row(nv);
          row[var(i, j, r)] = 1;
          rows.push_back(std::move(row));
        }
        if (n == 2) {
          Vec row(nv);
          row[var(j, i, r)] += 1;
          row[var(i, j, r)] += s.eps(i, j);
          rows.push_back(std::move(row));
        }
        Vec row(nv);
        if (n == 1) {
          for (std::size_t p = 0; p < d; ++p) row[var(p, 0, r)] += al(p, i);
        } else {
          for (std::size_t p = 0; p < d; ++p)
            for (std::size_t q = 0; q < d; ++q) row[var(p, q, r)] += al(p, i) * al(q, j);
        }
        for (std::size_t t = 0; t < m; ++t) row[var(i, j, t)] -= beta(r, t);
        rows.push_back(std::move(row));
      }
  RatMatrix out(rows.size(), nv);
  for (std::size_t t = 0; t < rows.size(); ++t)
    for (std::size_t c = 0; c < nv; ++c) out(t, c) = rows[t][c];
  return out;
}

/// Matrix of delta^1 from full 1-tables (d*m) to full 2-tables (d*d*m).
inline RatMatrix delta1(const Representation& rep, const GroupElement& degree) {
  const auto& a = rep.algebra();
  const auto& s = a.space();
  const std::size_t d = a.dim(), m = rep.module_dim();
  RatMatrix out(d * d * m, d * m);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t r = 0; r < m; ++r) {
        const std::size_t row = (i * d + j) * m + r;
        const Rational e0 = s.eps(degree, s.degree(i));
        const Rational e1 = s.eps(s.add(degree, s.degree(i)), s.degree(j));
        for (std::size_t t = 0; t < m; ++t) {
          out(row, j * m + t) += e0 * rep.rho(i)(r, t);
          out(row, i * m + t) -= e1 * rep.rho(j)(r, t);
        }
        for (std::size_t u = 0; u < d; ++u) out(row, u * m + r) -= a.bracket()(i, j)[u];
      }
  return out;
}

/// Matrix of delta^2 from full 2-tables to full 3-tables.
inline RatMatrix delta2(const Representation& rep, const GroupElement& degree) {
  const auto& a = rep.algebra();
  const auto& s = a.space();
  const std::size_t d = a.dim(), m = rep.module_dim();
  const auto& al = a.alpha_matrix();
  auto col = [&](std::size_t p, std::size_t q, std::size_t t) { return (p * d + q) * m + t; };
  RatMatrix out(d * d * d * m, d * d * m);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t r = 0; r < m; ++r) {
          const std::size_t row = ((i * d + j) * d + k) * m + r;
          const auto g0 = s.add(degree, s.degree(i));
          const auto g1 = s.add(g0, s.degree(j));
          const Rational c0 = s.eps(degree, s.degree(i));
          const Rational c1 = -s.eps(g0, s.degree(j));
          const Rational c2 = s.eps(g1, s.degree(k));
          for (std::size_t u = 0; u < d; ++u) {
            for (std::size_t t = 0; t < m; ++t) {
              // rho(alpha x) terms
              out(row, col(j, k, t)) += c0 * al(u, i) * rep.rho(u)(r, t);
              out(row, col(i, k, t)) += c1 * al(u, j) * rep.rho(u)(r, t);
              out(row, col(i, j, t)) += c2 * al(u, k) * rep.rho(u)(r, t);
            }
            for (std::size_t v = 0; v < d; ++v) {
              out(row, col(u, v, r)) -= a.bracket()(i, j)[u] * al(v, k);
              out(row, col(u, v, r)) += s.eps(j, k) * a.bracket()(i, k)[u] * al(v, j);
              out(row, col(u, v, r)) += al(u, i) * a.bracket()(j, k)[v];
            }
          }
        }
  return out;
}

inline RatMatrix stack(const RatMatrix& top, const RatMatrix& bottom) {
  RatMatrix out(top.rows() + bottom.rows(), top.cols());
  for (std::size_t i = 0; i < top.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) out(i, j) = top(i, j);
  for (std::size_t i = 0; i < bottom.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) out(top.rows() + i, j) = bottom(i, j);
  return out;
}

inline RatMatrix side_by_side(const RatMatrix& l, const RatMatrix& r) {
  RatMatrix out(l.rows(), l.cols() + r.cols());
  for (std::size_t i = 0; i < l.rows(); ++i) {
    for (std::size_t j = 0; j < l.cols(); ++j) out(i, j) = l(i, j);
    for (std::size_t j = 0; j < r.cols(); ++j) out(i, l.cols() + j) = r(i, j);
  }
  return out;
}

}  // namespace dense

inline DenseCohomology dense_cohomology(const Representation& rep, const GroupElement& degree) {
  using namespace dense;
  const RatMatrix C1 = kernel_basis(constraints(rep, 1, degree));
  const RatMatrix K2 = constraints(rep, 2, degree);
  const RatMatrix C2 = kernel_basis(K2);
  const RatMatrix D2 = delta2(rep, degree);
  const RatMatrix Z2 = kernel_basis(stack(K2, D2));
  const RatMatrix img = delta1(rep, degree) * C1;
  // dim(U ∩ V) = dim U + dim V - dim(U + V)
  auto meet = [](const RatMatrix& U, const RatMatrix& V) {
    if (U.cols() == 0 || V.cols() == 0) return std::size_t{0};
    return rank(U) + rank(V) - rank(side_by_side(U, V));
  };
  DenseCohomology out{};
  out.dim_c1 = C1.cols();
  out.dim_c2 = C2.cols();
  out.dim_z2 = Z2.cols();
  out.dim_b2 = meet(img, C2);
  // B^2 inside Z^2 is what the quotient sees: intersect image ∩ C2 with Z2.
  out.dim_h2 = out.dim_z2 - meet(img, Z2);
  return out;
}

inline std::vector<GroupElement> all_degrees(const GradingGroup& g) {
  std::vector<GroupElement> out{g.zero()};
  if (g.free_rank() != 0) return out;
  for (std::size_t t = 0; t < g.arity(); ++t) {
    std::vector<GroupElement> next;
    for (const auto& e : out)
      for (std::int64_t v = 0; v < g.torsion_orders()[t]; ++v) {
        auto f = e;
        f.coords[t] = v;
        next.push_back(f);
      }
    out = std::move(next);
  }
  return out;
}

/// Lie-type catalog algebras used across suites.
inline std::vector<std::pair<std::string, ColorHomAlgebra>> lie_catalog() {
  std::vector<std::pair<std::string, ColorHomAlgebra>> out;
  for (auto& [id, a] : catalog_defaults())
    if (a.kind() == Kind::lie) out.emplace_back(id, a);
  return out;
}

}  // namespace qchl::testing
