#pragma once

#include <map>
#include <string>
#include <vector>

#include "qchl/constructions.hpp"

namespace qchl {

/// Parameter values as text: rationals for numeric entries, entry ids for tensor.
using Params = std::map<std::string, std::string>;

struct CatalogEntry {
  std::string id;
  std::vector<std::pair<std::string, Rational>> defaults;
  std::string description;
};

inline const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"sl2_hom",
       {{"a", 1}, {"b", 1}, {"c", 0}, {"d", 0}, {"e", 0}, {"f", 0}},
       "Hom-sl2 with the six-parameter twist family and the Killing form"},
      {"nilpotent_L",
       {{"p", 1}, {"q", 1}, {"a", 1}, {"b", 0}, {"c", 0}, {"d", 1}},
       "4-dimensional 2-nilpotent Hom-Lie superalgebra with form B_{p,q}"},
      {"super_A2", {}, "2-dimensional odd symmetric super-commutative associative algebra"},
      {"super_A4",
       {{"a", 1}, {"alpha", 1}, {"beta", 0}, {"gamma", 1}},
       "4-dimensional symmetric super-commutative associative algebra with f0.f0 = a e0"},
      {"tensor", {}, "g ⊗ A with g in {sl2_hom, nilpotent_L} and a in {super_A2, super_A4} at their defaults"},
  };
  return entries;
}

namespace detail {

inline std::map<std::string, Rational> with_defaults(const CatalogEntry& e, const Params& given) {
  std::map<std::string, Rational> out;
  for (const auto& [k, v] : e.defaults) out[k] = v;
  for (const auto& [k, v] : given) {
    if (!out.count(k)) throw Error(ErrorCode::BadParams, "entry '" + e.id + "' has no parameter '" + k + "'");
    try {
      out[k] = parse_rational(v);
    } catch (const Error&) {
      throw Error(ErrorCode::BadParams, "parameter '" + k + "' is not a rational: '" + v + "'");
    }
  }
  return out;
}

inline const CatalogEntry& entry(const std::string& id) {
  for (const auto& e : catalog_entries())
    if (e.id == id) return e;
  throw Error(ErrorCode::UnknownEntry, "unknown catalog entry '" + id + "'");
}

inline ColorHomAlgebra certified(ColorHomAlgebra a, VerifyOptions opt) {
  certify(a, opt);
  return a;
}

}  // namespace detail

/// [x1,x2] = 2x2, [x1,x3] = -2x3, [x2,x3] = x1 with the twist family and Killing form.
inline ColorHomAlgebra sl2_hom(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                               const Rational& e, const Rational& f) {
  const auto bc = Bicharacter::trivial(make_group(0, {}));
  GradedSpace s(bc, {{"x1", {}}, {"x2", {}}, {"x3", {}}});
  StructureConstants br(s);
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, const Rational& v) {
    br.add(i, j, k, v);
    br.add(j, i, k, -v);
  };
  set(0, 1, 1, 2);
  set(0, 2, 2, -2);
  set(1, 2, 0, 1);
  RatMatrix alpha{{a, d, c}, {2 * c, b, f}, {2 * d, e, b}};
  RatMatrix killing{{8, 0, 0}, {0, 0, 4}, {0, 4, 0}};
  return ColorHomAlgebra(std::move(br), std::move(alpha), Kind::lie, std::move(killing));
}

/// Basis l0, k0 (even), l1, k1 (odd); [l0,l1] = k1, [l1,l1] = k0.
inline ColorHomAlgebra nilpotent_L(const Rational& p, const Rational& q, const Rational& a, const Rational& b,
                                   const Rational& c, const Rational& d) {
  if (is_zero(q)) throw Error(ErrorCode::BadParams, "q must be nonzero");
  GradedSpace s(Bicharacter::super(), {{"l0", {{0}}}, {"k0", {{0}}}, {"l1", {{1}}}, {"k1", {{1}}}});
  StructureConstants br(s);
  br.add(0, 2, 3, 1);
  br.add(2, 0, 3, -1);
  br.add(2, 2, 1, 1);
  RatMatrix alpha(4, 4);
  alpha(0, 0) = a;
  alpha(1, 0) = b;
  alpha(0, 1) = c;
  alpha(1, 1) = a + p * c / q;
  alpha(2, 2) = d;
  alpha(3, 3) = d;
  RatMatrix form{{p, -q, 0, 0}, {-q, 0, 0, 0}, {0, 0, 0, q}, {0, 0, -q, 0}};
  return ColorHomAlgebra(std::move(br), std::move(alpha), Kind::lie, std::move(form));
}

/// Two odd vectors e1, f1 with zero product and form [[0,1],[-1,0]].
inline ColorHomAlgebra super_A2() {
  GradedSpace s(Bicharacter::super(), {{"e1", {{1}}}, {"f1", {{1}}}});
  return ColorHomAlgebra(StructureConstants(s), RatMatrix::identity(2), Kind::associative,
                         RatMatrix{{0, 1}, {-1, 0}});
}

/// Basis e0, f0 (even), e1, f1 (odd); only nonzero product f0.f0 = a e0.
inline ColorHomAlgebra super_A4(const Rational& a, const Rational& alpha, const Rational& beta,
                                const Rational& gamma) {
  if (is_zero(a)) throw Error(ErrorCode::BadParams, "a must be nonzero");
  if (is_zero(alpha) || is_zero(gamma)) throw Error(ErrorCode::BadParams, "alpha and gamma must be nonzero");
  GradedSpace s(Bicharacter::super(), {{"e0", {{0}}}, {"f0", {{0}}}, {"e1", {{1}}}, {"f1", {{1}}}});
  StructureConstants br(s);
  br.add(1, 1, 0, a);
  RatMatrix form{{0, alpha, 0, 0}, {alpha, beta, 0, 0}, {0, 0, 0, gamma}, {0, 0, -gamma, 0}};
  return ColorHomAlgebra(std::move(br), RatMatrix::identity(4), Kind::associative, std::move(form));
}

/// Builds a catalog entry at the given parameters and records its checks.
/// Instances that fail their checks are returned with the failures recorded.
inline ColorHomAlgebra catalog_build(const std::string& id, const Params& given = {});
inline ColorHomAlgebra catalog_build_named_tensor(const std::string& g_id, const std::string& a_id);

namespace detail {

inline ColorHomAlgebra build_factor(const std::string& id) {
  auto a = catalog_build(id);
  if (a.space().group().arity() == 0) a = lift_to_group(a, Bicharacter::super());
  return a;
}

}  // namespace detail

inline ColorHomAlgebra catalog_build(const std::string& id, const Params& given) {
  const auto& e = detail::entry(id);
  const VerifyOptions quad{.quadratic = true};
  if (id == "sl2_hom") {
    const auto p = detail::with_defaults(e, given);
    return detail::certified(sl2_hom(p.at("a"), p.at("b"), p.at("c"), p.at("d"), p.at("e"), p.at("f")), quad);
  }
  if (id == "nilpotent_L") {
    const auto p = detail::with_defaults(e, given);
    return detail::certified(nilpotent_L(p.at("p"), p.at("q"), p.at("a"), p.at("b"), p.at("c"), p.at("d")), quad);
  }
  if (id == "super_A2") {
    detail::with_defaults(e, given);
    return detail::certified(super_A2(), {.quadratic = true, .commutative = true});
  }
  if (id == "super_A4") {
    const auto p = detail::with_defaults(e, given);
    return detail::certified(super_A4(p.at("a"), p.at("alpha"), p.at("beta"), p.at("gamma")),
                             {.quadratic = true, .commutative = true});
  }
  std::map<std::string, std::string> p{{"g", "sl2_hom"}, {"a", "super_A2"}};
  for (const auto& [k, v] : given) {
    if (!p.count(k)) throw Error(ErrorCode::BadParams, "entry 'tensor' has no parameter '" + k + "'");
    p[k] = v;
  }
  if (p["g"] != "sl2_hom" && p["g"] != "nilpotent_L") throw Error(ErrorCode::BadParams, "g must be sl2_hom or nilpotent_L");
  if (p["a"] != "super_A2" && p["a"] != "super_A4") throw Error(ErrorCode::BadParams, "a must be super_A2 or super_A4");
  return catalog_build_named_tensor(p["g"], p["a"]);
}

inline ColorHomAlgebra catalog_build_named_tensor(const std::string& g_id, const std::string& a_id) {
  const auto g = detail::build_factor(g_id);
  const auto A = detail::build_factor(a_id);
  return detail::certified(tensor_product_algebra(g, A, BuildOptions{false}), {.quadratic = true});
}

/// Default instances of every entry, including all four tensor products.
inline std::vector<std::pair<std::string, ColorHomAlgebra>> catalog_defaults() {
  std::vector<std::pair<std::string, ColorHomAlgebra>> out;
  for (const std::string id : {"sl2_hom", "nilpotent_L", "super_A2", "super_A4"}) out.emplace_back(id, catalog_build(id));
  for (const std::string g : {"sl2_hom", "nilpotent_L"})
    for (const std::string a : {"super_A2", "super_A4"})
      out.emplace_back("tensor(" + g + "," + a + ")", catalog_build_named_tensor(g, a));
  return out;
}

}  // namespace qchl
