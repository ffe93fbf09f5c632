#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "qchl/error.hpp"
#include "qchl/linalg.hpp"
#include "qchl/rational.hpp"

namespace qchl {

/// Degree vector: free coordinates first, then torsion coordinates in [0, n_i).
struct GroupElement {
  std::vector<std::int64_t> coords;

  auto operator<=>(const GroupElement&) const = default;
  bool operator==(const GroupElement&) const = default;
};

inline std::string to_string(const GroupElement& g) {
  std::string s = "(";
  for (std::size_t i = 0; i < g.coords.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(g.coords[i]);
  }
  return s + ")";
}

/// Z^free_rank x Z_{n_1} x ... x Z_{n_k}.
class GradingGroup {
 public:
  GradingGroup() = default;

  static GradingGroup make(std::size_t free_rank, std::vector<std::int64_t> torsion_orders) {
    for (auto n : torsion_orders)
      if (n < 2) throw Error(ErrorCode::BadOrder, "torsion order " + std::to_string(n) + " < 2");
    GradingGroup g;
    g.free_rank_ = free_rank;
    g.torsion_ = std::move(torsion_orders);
    return g;
  }

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<std::int64_t>& torsion_orders() const { return torsion_; }
  std::size_t arity() const { return free_rank_ + torsion_.size(); }

  /// Order of generator i, or 0 for a free generator.
  std::int64_t generator_order(std::size_t i) const { return i < free_rank_ ? 0 : torsion_[i - free_rank_]; }

  GroupElement zero() const { return GroupElement{std::vector<std::int64_t>(arity(), 0)}; }

  GroupElement generator(std::size_t i) const {
    auto g = zero();
    g.coords.at(i) = 1;
    return g;
  }

  /// Reduces torsion coordinates into their canonical residues.
  GroupElement element(std::vector<std::int64_t> coords) const {
    if (coords.size() != arity())
      throw Error(ErrorCode::ArityMismatch,
                  "element of arity " + std::to_string(coords.size()) + " in group of arity " + std::to_string(arity()));
    for (std::size_t i = free_rank_; i < coords.size(); ++i) {
      const auto n = torsion_[i - free_rank_];
      coords[i] = ((coords[i] % n) + n) % n;
    }
    return GroupElement{std::move(coords)};
  }

  GroupElement add(const GroupElement& g, const GroupElement& h) const {
    require(g);
    require(h);
    std::vector<std::int64_t> c(arity());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = g.coords[i] + h.coords[i];
    return element(std::move(c));
  }

  GroupElement negate(const GroupElement& g) const {
    require(g);
    std::vector<std::int64_t> c(arity());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -g.coords[i];
    return element(std::move(c));
  }

  GroupElement sub(const GroupElement& g, const GroupElement& h) const { return add(g, negate(h)); }

  bool contains(const GroupElement& g) const {
    if (g.coords.size() != arity()) return false;
    for (std::size_t i = free_rank_; i < arity(); ++i)
      if (g.coords[i] < 0 || g.coords[i] >= torsion_[i - free_rank_]) return false;
    return true;
  }

  void require(const GroupElement& g) const {
    if (g.coords.size() != arity())
      throw Error(ErrorCode::ArityMismatch,
                  "element of arity " + std::to_string(g.coords.size()) + " in group of arity " + std::to_string(arity()));
  }

  bool operator==(const GradingGroup&) const = default;

 private:
  std::size_t free_rank_ = 0;
  std::vector<std::int64_t> torsion_;
};

inline GradingGroup make_group(std::size_t free_rank, std::vector<std::int64_t> torsion_orders) {
  return GradingGroup::make(free_rank, std::move(torsion_orders));
}

/// Commutation factor on a finitely generated abelian group, stored on
/// generator pairs and extended multiplicatively in both arguments.
class Bicharacter {
 public:
  Bicharacter() = default;

  /// Validates the generator table: nonzero entries, roots of unity of the
  /// right order on torsion generators, and eps(g_i,g_j) eps(g_j,g_i) = 1.
  static Bicharacter make(GradingGroup group, RatMatrix table) {
    const std::size_t n = group.arity();
    if (table.rows() != n || table.cols() != n)
      throw Error(ErrorCode::ArityMismatch, "bicharacter table must be " + std::to_string(n) + "x" + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (is_zero(table(i, j)))
          throw Error(ErrorCode::NotBicharacter, "zero value at generator pair", {i, j});
    // eps(a, n b) = eps(a, b)^n must equal eps(a, 0) = 1 when n b = 0.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (auto order = group.generator_order(j); order && pow(table(i, j), order) != 1)
          throw Error(ErrorCode::NotBicharacter,
                      "identity (2) eps(a,b+c)=eps(a,b)eps(a,c) fails: eps(g" + std::to_string(i) + ",g" +
                          std::to_string(j) + ")^" + std::to_string(order) + " != 1",
                      {i, j});
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (auto order = group.generator_order(i); order && pow(table(i, j), order) != 1)
          throw Error(ErrorCode::NotBicharacter,
                      "identity (3) eps(a+b,c)=eps(a,c)eps(b,c) fails: eps(g" + std::to_string(i) + ",g" +
                          std::to_string(j) + ")^" + std::to_string(order) + " != 1",
                      {i, j});
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        if (table(i, j) * table(j, i) != 1)
          throw Error(ErrorCode::NotBicharacter,
                      "identity (1) eps(a,b)eps(b,a)=1 fails on generators g" + std::to_string(i) + ", g" +
                          std::to_string(j),
                      {i, j});
    Bicharacter bc;
    bc.group_ = std::move(group);
    bc.table_ = std::move(table);
    return bc;
  }

  /// Trivial bicharacter (all ones) on the group.
  static Bicharacter trivial(GradingGroup group) {
    RatMatrix t(group.arity(), group.arity());
    for (std::size_t i = 0; i < t.rows(); ++i)
      for (std::size_t j = 0; j < t.cols(); ++j) t(i, j) = 1;
    return make(std::move(group), std::move(t));
  }

  /// Z_2 with eps(1,1) = -1.
  static Bicharacter super() { return make(make_group(0, {2}), RatMatrix{{-1}}); }

  const GradingGroup& group() const { return group_; }
  const RatMatrix& table() const { return table_; }

  Rational operator()(const GroupElement& a, const GroupElement& b) const {
    group_.require(a);
    group_.require(b);
    Rational v(1);
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
      if (a.coords[i] == 0) continue;
      for (std::size_t j = 0; j < b.coords.size(); ++j) {
        if (b.coords[j] == 0) continue;
        const Rational& t = table_(i, j);
        if (t == 1) continue;
        if (t == -1) {
          if ((a.coords[i] * b.coords[j]) % 2 != 0) v = -v;
          continue;
        }
        v *= pow(t, a.coords[i] * b.coords[j]);
      }
    }
    return v;
  }

  bool operator==(const Bicharacter& o) const { return group_ == o.group_ && table_ == o.table_; }

 private:
  GradingGroup group_;
  RatMatrix table_;
};

inline Bicharacter make_bicharacter(GradingGroup group, RatMatrix table) {
  return Bicharacter::make(std::move(group), std::move(table));
}

inline Rational eps(const Bicharacter& bc, const GroupElement& a, const GroupElement& b) { return bc(a, b); }

}  // namespace qchl
