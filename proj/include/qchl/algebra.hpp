#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qchl/error.hpp"
#include "qchl/space.hpp"

namespace qchl {

enum class Kind { lie, associative, leibniz };

inline std::string_view to_string(Kind k) {
  switch (k) {
    case Kind::lie: return "lie";
    case Kind::associative: return "associative";
    case Kind::leibniz: return "leibniz";
  }
  return "lie";
}

inline Kind parse_kind(std::string_view s) {
  if (s == "lie") return Kind::lie;
  if (s == "associative") return Kind::associative;
  if (s == "leibniz") return Kind::leibniz;
  throw Error(ErrorCode::ParseError, "unknown kind '" + std::string(s) + "'");
}

/// Multiplication table: entry (i, j) is the coordinate vector of e_i * e_j.
/// Grading is not enforced here; check_graded reports violations.
class StructureConstants {
 public:
  StructureConstants() = default;
  explicit StructureConstants(GradedSpace space)
      : space_(std::move(space)), table_(space_.dim() * space_.dim(), Vec(space_.dim())) {}

  const GradedSpace& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }

  const Vec& operator()(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

  void set(std::size_t i, std::size_t j, Vec v) {
    if (v.size() != dim()) throw Error(ErrorCode::DimensionMismatch, "bracket value has wrong length");
    table_[i * dim() + j] = std::move(v);
  }
  void add(std::size_t i, std::size_t j, std::size_t k, const Rational& c) { table_[i * dim() + j][k] += c; }

  /// Nonzero coefficients of e_i * e_j in increasing k.
  std::vector<std::pair<std::size_t, Rational>> terms(std::size_t i, std::size_t j) const {
    std::vector<std::pair<std::size_t, Rational>> out;
    const auto& v = (*this)(i, j);
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!is_zero(v[k])) out.emplace_back(k, v[k]);
    return out;
  }

  Vec apply(const Vec& x, const Vec& y) const {
    Vec out(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (is_zero(y[j])) continue;
        axpy(out, x[i] * y[j], (*this)(i, j));
      }
    }
    return out;
  }

  /// Matrix of y -> x * y.
  RatMatrix left(const Vec& x) const {
    RatMatrix m(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        const auto& v = (*this)(i, j);
        for (std::size_t k = 0; k < dim(); ++k)
          if (!is_zero(v[k])) m(k, j) += x[i] * v[k];
      }
    }
    return m;
  }
  RatMatrix left(std::size_t i) const { return left(unit_vector(dim(), i)); }

  /// Matrix of x -> x * y.
  RatMatrix right(const Vec& y) const {
    RatMatrix m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
      if (is_zero(y[j])) continue;
      for (std::size_t i = 0; i < dim(); ++i) {
        const auto& v = (*this)(i, j);
        for (std::size_t k = 0; k < dim(); ++k)
          if (!is_zero(v[k])) m(k, i) += y[j] * v[k];
      }
    }
    return m;
  }

  /// f ∘ (this), the table with every value mapped through the matrix f.
  StructureConstants mapped(const RatMatrix& f) const {
    StructureConstants out(space_);
    for (std::size_t p = 0; p < table_.size(); ++p) out.table_[p] = f * table_[p];
    return out;
  }

  bool operator==(const StructureConstants& o) const { return space_ == o.space_ && table_ == o.table_; }

 private:
  GradedSpace space_;
  std::vector<Vec> table_;
};

/// Graded algebra with structure constants, an even twist map and an optional
/// bilinear form. `kind` is declared; `verified` records checker outcomes.
class ColorHomAlgebra {
 public:
  ColorHomAlgebra() = default;

  ColorHomAlgebra(StructureConstants bracket, RatMatrix alpha, Kind kind = Kind::lie,
                  std::optional<RatMatrix> form = std::nullopt)
      : bracket_(std::move(bracket)),
        alpha_(GradedLinearMap::even(bracket_.space(), std::move(alpha))),
        kind_(kind) {
    if (form) form_ = BilinearForm(bracket_.space(), std::move(*form));
  }

  const GradedSpace& space() const { return bracket_.space(); }
  std::size_t dim() const { return bracket_.dim(); }
  const StructureConstants& bracket() const { return bracket_; }
  const GradedLinearMap& alpha() const { return alpha_; }
  const RatMatrix& alpha_matrix() const { return alpha_.matrix(); }
  Kind kind() const { return kind_; }
  const std::optional<BilinearForm>& form() const { return form_; }
  bool has_form() const { return form_.has_value(); }
  const RatMatrix& form_matrix() const {
    if (!form_) throw Error(ErrorCode::NoForm, "algebra carries no bilinear form");
    return form_->matrix();
  }

  const Rational& eps(std::size_t i, std::size_t j) const { return space().eps(i, j); }
  const GroupElement& degree(std::size_t i) const { return space().degree(i); }

  const std::map<std::string, bool>& verified() const { return verified_; }
  void record(const std::string& check, bool passed) { verified_[check] = passed; }

  ColorHomAlgebra with_kind(Kind k) const {
    auto out = *this;
    out.kind_ = k;
    out.verified_.clear();
    return out;
  }
  ColorHomAlgebra with_form(std::optional<RatMatrix> form) const {
    return ColorHomAlgebra(bracket_, alpha_.matrix(), kind_, std::move(form));
  }
  ColorHomAlgebra with_alpha(RatMatrix alpha) const {
    return ColorHomAlgebra(bracket_, std::move(alpha), kind_,
                           form_ ? std::optional<RatMatrix>(form_->matrix()) : std::nullopt);
  }

  /// Equality of presentations; verification records are ignored.
  bool operator==(const ColorHomAlgebra& o) const {
    return bracket_ == o.bracket_ && alpha_ == o.alpha_ && kind_ == o.kind_ && form_ == o.form_;
  }

 private:
  StructureConstants bracket_;
  GradedLinearMap alpha_;
  Kind kind_ = Kind::lie;
  std::optional<BilinearForm> form_;
  std::map<std::string, bool> verified_;
};

}  // namespace qchl
