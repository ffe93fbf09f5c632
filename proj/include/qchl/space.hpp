#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qchl/error.hpp"
#include "qchl/grading.hpp"
#include "qchl/linalg.hpp"

namespace qchl {

struct BasisVector {
  std::string name;
  GroupElement degree;

  bool operator==(const BasisVector&) const = default;
};

/// Graded vector space with a distinguished homogeneous basis. Cheap to copy;
/// the basis and the table of eps values between basis vectors are shared.
class GradedSpace {
 public:
  GradedSpace() : GradedSpace(Bicharacter::trivial(make_group(0, {})), {}) {}

  GradedSpace(Bicharacter bc, std::vector<BasisVector> basis) {
    auto d = std::make_shared<Data>();
    std::set<std::string> names;
    for (auto& b : basis) {
      if (!names.insert(b.name).second) throw Error(ErrorCode::ParseError, "duplicate basis name '" + b.name + "'");
      b.degree = bc.group().element(b.degree.coords);
    }
    const std::size_t n = basis.size();
    d->eps = RatMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d->eps(i, j) = bc(basis[i].degree, basis[j].degree);
    d->bc = std::move(bc);
    d->basis = std::move(basis);
    d_ = std::move(d);
  }

  const Bicharacter& bicharacter() const { return d_->bc; }
  const GradingGroup& group() const { return d_->bc.group(); }
  std::size_t dim() const { return d_->basis.size(); }
  const std::vector<BasisVector>& basis() const { return d_->basis; }
  const BasisVector& operator[](std::size_t i) const { return d_->basis[i]; }
  const GroupElement& degree(std::size_t i) const { return d_->basis[i].degree; }
  const std::string& name(std::size_t i) const { return d_->basis[i].name; }

  /// eps between basis vectors i and j.
  const Rational& eps(std::size_t i, std::size_t j) const { return d_->eps(i, j); }
  Rational eps(const GroupElement& a, const GroupElement& b) const { return d_->bc(a, b); }

  GroupElement add(const GroupElement& a, const GroupElement& b) const { return group().add(a, b); }
  GroupElement zero_degree() const { return group().zero(); }

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < dim(); ++i)
      if (d_->basis[i].name == name) return i;
    return std::nullopt;
  }

  /// Same grading group and commutation factor.
  bool same_grading(const GradedSpace& o) const { return d_ == o.d_ || d_->bc == o.d_->bc; }

  friend bool operator==(const GradedSpace& a, const GradedSpace& b) {
    return a.d_ == b.d_ || (a.d_->bc == b.d_->bc && a.d_->basis == b.d_->basis);
  }

  /// Same grading and the same degree sequence; names are ignored.
  bool same_shape(const GradedSpace& o) const {
    if (d_ == o.d_) return true;
    if (!same_grading(o) || dim() != o.dim()) return false;
    for (std::size_t i = 0; i < dim(); ++i)
      if (degree(i) != o.degree(i)) return false;
    return true;
  }

 private:
  struct Data {
    Bicharacter bc;
    std::vector<BasisVector> basis;
    RatMatrix eps;
  };
  std::shared_ptr<const Data> d_;
};

namespace detail {

inline std::string fresh_name(const std::set<std::string>& taken, std::string name) {
  while (taken.count(name)) name += "'";
  return name;
}

}  // namespace detail

/// a ⊕ b with a's basis first; clashing names from b get primes appended.
inline GradedSpace direct_sum(const GradedSpace& a, const GradedSpace& b) {
  if (!a.same_grading(b)) throw Error(ErrorCode::GroupMismatch, "direct sum of spaces graded differently");
  std::vector<BasisVector> basis = a.basis();
  std::set<std::string> taken;
  for (const auto& v : basis) taken.insert(v.name);
  for (const auto& v : b.basis()) {
    auto name = detail::fresh_name(taken, v.name);
    taken.insert(name);
    basis.push_back({name, v.degree});
  }
  return GradedSpace(a.bicharacter(), std::move(basis));
}

/// a ⊗ b, basis a_i ⊗ b_j at index i * dim(b) + j.
inline GradedSpace tensor(const GradedSpace& a, const GradedSpace& b) {
  if (!a.same_grading(b)) throw Error(ErrorCode::GroupMismatch, "tensor product of spaces graded differently");
  std::vector<BasisVector> basis;
  basis.reserve(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      basis.push_back({a.name(i) + "⊗" + b.name(j), a.add(a.degree(i), b.degree(j))});
  return GradedSpace(a.bicharacter(), std::move(basis));
}

/// Dual space; the functional dual to basis vector i has degree -degree(i).
inline GradedSpace dual(const GradedSpace& a) {
  std::vector<BasisVector> basis;
  for (std::size_t i = 0; i < a.dim(); ++i) basis.push_back({a.name(i) + "*", a.group().negate(a.degree(i))});
  return GradedSpace(a.bicharacter(), std::move(basis));
}

/// One-dimensional space K placed in degree 0.
inline GradedSpace scalar_space(const Bicharacter& bc, std::string name = "c") {
  return GradedSpace(bc, {{std::move(name), bc.group().zero()}});
}

/// Homogeneous linear map between graded spaces.
class GradedLinearMap {
 public:
  GradedLinearMap() = default;

  GradedLinearMap(GradedSpace source, GradedSpace target, GroupElement degree, RatMatrix matrix)
      : source_(std::move(source)), target_(std::move(target)), degree_(std::move(degree)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim())
      throw Error(ErrorCode::DimensionMismatch, "linear map matrix does not match source/target dimensions");
    if (!source_.same_grading(target_)) throw Error(ErrorCode::GroupMismatch, "map between differently graded spaces");
    degree_ = source_.group().element(degree_.coords);
  }

  /// Degree-0 endomorphism; throws GradingViolation when the matrix is not even.
  static GradedLinearMap even(const GradedSpace& space, RatMatrix matrix) {
    GradedLinearMap f(space, space, space.zero_degree(), std::move(matrix));
    if (auto w = f.homogeneity_witness())
      throw Error(ErrorCode::GradingViolation, "map is not even", {w->first, w->second});
    return f;
  }

  static GradedLinearMap identity(const GradedSpace& space) {
    return GradedLinearMap(space, space, space.zero_degree(), RatMatrix::identity(space.dim()));
  }

  const GradedSpace& source() const { return source_; }
  const GradedSpace& target() const { return target_; }
  const GroupElement& degree() const { return degree_; }
  const RatMatrix& matrix() const { return matrix_; }

  bool is_even() const { return degree_ == source_.zero_degree() && !homogeneity_witness(); }

  /// First entry (row, col) with a nonzero coefficient of the wrong degree.
  std::optional<std::pair<std::size_t, std::size_t>> homogeneity_witness() const {
    for (std::size_t j = 0; j < source_.dim(); ++j) {
      const auto expected = source_.add(source_.degree(j), degree_);
      for (std::size_t i = 0; i < target_.dim(); ++i)
        if (!is_zero(matrix_(i, j)) && target_.degree(i) != expected) return std::make_pair(i, j);
    }
    return std::nullopt;
  }

  Vec operator()(const Vec& x) const { return matrix_ * x; }
  Vec column(std::size_t j) const { return matrix_.column(j); }

  /// this ∘ g
  GradedLinearMap after(const GradedLinearMap& g) const {
    if (!(g.target_ == source_)) throw Error(ErrorCode::SpaceMismatch, "composition of incompatible maps");
    return GradedLinearMap(g.source_, target_, source_.add(degree_, g.degree_), matrix_ * g.matrix_);
  }

  bool operator==(const GradedLinearMap& o) const {
    return source_ == o.source_ && target_ == o.target_ && degree_ == o.degree_ && matrix_ == o.matrix_;
  }

 private:
  GradedSpace source_;
  GradedSpace target_;
  GroupElement degree_;
  RatMatrix matrix_;
};

/// Even bilinear form, matrix(i, j) = B(e_i, e_j).
class BilinearForm {
 public:
  BilinearForm() = default;

  BilinearForm(GradedSpace space, RatMatrix matrix) : space_(std::move(space)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != space_.dim() || matrix_.cols() != space_.dim())
      throw Error(ErrorCode::DimensionMismatch, "form matrix does not match space dimension");
    const auto zero = space_.zero_degree();
    for (std::size_t i = 0; i < space_.dim(); ++i)
      for (std::size_t j = 0; j < space_.dim(); ++j)
        if (!is_zero(matrix_(i, j)) && space_.add(space_.degree(i), space_.degree(j)) != zero)
          throw Error(ErrorCode::GradingViolation, "bilinear form is not even", {i, j});
  }

  const GradedSpace& space() const { return space_; }
  const RatMatrix& matrix() const { return matrix_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return matrix_(i, j); }

  Rational operator()(const Vec& x, const Vec& y) const {
    Rational s;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (is_zero(x[i])) continue;
      for (std::size_t j = 0; j < y.size(); ++j)
        if (!is_zero(y[j]) && !is_zero(matrix_(i, j))) s += x[i] * matrix_(i, j) * y[j];
    }
    return s;
  }

  bool operator==(const BilinearForm& o) const { return space_ == o.space_ && matrix_ == o.matrix_; }

 private:
  GradedSpace space_;
  RatMatrix matrix_;
};

}  // namespace qchl
