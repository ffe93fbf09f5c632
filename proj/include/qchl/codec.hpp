#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "qchl/algebra.hpp"
#include "qchl/checks.hpp"
#include "qchl/cohomology.hpp"
#include "qchl/representations.hpp"

namespace qchl {

using Json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

namespace codec {

[[noreturn]] inline void bad(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::ParseError, field + ": " + what);
}

inline const Json& member(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(path + "." + key, "missing");
  return *it;
}

inline Json rational(const Rational& r) { return to_string(r); }

inline Rational rational(const Json& j, const std::string& path) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      bad(path, e.what());
    }
  }
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()), 10);
  bad(path, "expected a rational string");
}

inline std::int64_t integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) bad(path, "expected an integer");
  return j.get<std::int64_t>();
}

inline std::size_t index(const Json& j, const std::string& path, std::size_t bound) {
  const auto v = integer(j, path);
  if (v < 0 || static_cast<std::size_t>(v) >= bound) bad(path, "index out of range");
  return static_cast<std::size_t>(v);
}

inline Json matrix(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline RatMatrix matrix(const Json& j, const std::string& path, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) bad(path, "expected " + std::to_string(rows) + " rows");
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto rp = path + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != cols) bad(rp, "expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = rational(j[i][c], rp + "[" + std::to_string(c) + "]");
  }
  return m;
}

/// Square matrix whose size is taken from the file.
inline RatMatrix square_matrix(const Json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected a matrix");
  return matrix(j, path, j.size(), j.size());
}

inline Json vector(const Vec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rational(x));
  return a;
}

inline Vec vector(const Json& j, const std::string& path, std::size_t len) {
  if (!j.is_array() || j.size() != len) bad(path, "expected " + std::to_string(len) + " entries");
  Vec v(len);
  for (std::size_t i = 0; i < len; ++i) v[i] = rational(j[i], path + "[" + std::to_string(i) + "]");
  return v;
}

inline Json degree(const GroupElement& g) { return g.coords; }

inline GroupElement degree(const Json& j, const std::string& path, const GradingGroup& g) {
  if (!j.is_array() || j.size() != g.arity()) bad(path, "expected " + std::to_string(g.arity()) + " coordinates");
  GroupElement e;
  for (std::size_t i = 0; i < j.size(); ++i) e.coords.push_back(integer(j[i], path + "[" + std::to_string(i) + "]"));
  return g.element(e.coords);
}

inline Json basis(const GradedSpace& s) {
  Json b = Json::array();
  for (const auto& v : s.basis()) b.push_back(Json{{"name", v.name}, {"degree", degree(v.degree)}});
  return b;
}

inline GradedSpace basis(const Json& j, const std::string& path, const Bicharacter& bc) {
  if (!j.is_array()) bad(path, "expected an array");
  std::vector<BasisVector> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto p = path + "[" + std::to_string(i) + "]";
    const auto& name = member(j[i], "name", p);
    if (!name.is_string()) bad(p + ".name", "expected a string");
    out.push_back({name.get<std::string>(), degree(member(j[i], "degree", p), p + ".degree", bc.group())});
  }
  return GradedSpace(bc, std::move(out));
}

inline std::pair<std::size_t, std::size_t> pair_key(const std::string& key, const std::string& path, std::size_t n) {
  const auto comma = key.find(',');
  if (comma == std::string::npos) bad(path, "key '" + key + "' is not of the form \"i,j\"");
  auto num = [&](const std::string& s) -> std::size_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) bad(path, "bad index in key '" + key + "'");
    const auto v = std::stoul(s);
    if (v >= n) bad(path, "index out of range in key '" + key + "'");
    return v;
  };
  return {num(key.substr(0, comma)), num(key.substr(comma + 1))};
}

}  // namespace codec

inline Json to_json(const ColorHomAlgebra& a) {
  const auto& s = a.space();
  Json j;
  j["schema_version"] = schema_version;
  j["group"] = Json{{"free_rank", s.group().free_rank()}, {"torsion", s.group().torsion_orders()}};
  j["bicharacter"] = codec::matrix(s.bicharacter().table());
  j["basis"] = codec::basis(s);
  j["kind"] = std::string(to_string(a.kind()));
  Json br = Json::object();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < a.dim(); ++k) {
      const auto terms = a.bracket().terms(i, k);
      if (terms.empty()) continue;
      Json list = Json::array();
      for (const auto& [t, c] : terms) list.push_back(Json{{"k", t}, {"c", codec::rational(c)}});
      br[std::to_string(i) + "," + std::to_string(k)] = std::move(list);
    }
  j["bracket"] = std::move(br);
  j["alpha"] = codec::matrix(a.alpha_matrix());
  if (a.has_form()) j["form"] = codec::matrix(a.form_matrix());
  return j;
}

/// Builds the algebra described by j; bracket entries must respect the grading.
inline ColorHomAlgebra algebra_from_json(const Json& j, const std::string& path = "$") {
  if (!j.is_object()) codec::bad(path, "expected an object");
  if (auto it = j.find("schema_version"); it != j.end() && (!it->is_number_integer() || *it != schema_version))
    codec::bad(path + ".schema_version", "unsupported schema version");
  const auto& g = codec::member(j, "group", path);
  const auto& fr = codec::member(g, "free_rank", path + ".group");
  if (!fr.is_number_unsigned()) codec::bad(path + ".group.free_rank", "expected a non-negative integer");
  std::vector<std::int64_t> torsion;
  if (auto it = g.find("torsion"); it != g.end()) {
    if (!it->is_array()) codec::bad(path + ".group.torsion", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i)
      torsion.push_back(codec::integer((*it)[i], path + ".group.torsion[" + std::to_string(i) + "]"));
  }
  const auto group = make_group(fr.get<std::size_t>(), torsion);
  const auto bc = make_bicharacter(
      group, codec::matrix(codec::member(j, "bicharacter", path), path + ".bicharacter", group.arity(), group.arity()));
  const auto space = codec::basis(codec::member(j, "basis", path), path + ".basis", bc);
  const std::size_t n = space.dim();
  Kind kind = Kind::lie;
  if (auto it = j.find("kind"); it != j.end()) {
    if (!it->is_string()) codec::bad(path + ".kind", "expected a string");
    try {
      kind = parse_kind(it->get<std::string>());
    } catch (const Error& e) {
      codec::bad(path + ".kind", e.what());
    }
  }
  StructureConstants b(space);
  const auto& br = codec::member(j, "bracket", path);
  if (!br.is_object()) codec::bad(path + ".bracket", "expected an object");
  for (const auto& [key, list] : br.items()) {
    const auto p = path + ".bracket[\"" + key + "\"]";
    const auto [i, k] = codec::pair_key(key, p, n);
    if (!list.is_array()) codec::bad(p, "expected an array of terms");
    for (std::size_t t = 0; t < list.size(); ++t) {
      const auto tp = p + "[" + std::to_string(t) + "]";
      const auto idx = codec::index(codec::member(list[t], "k", tp), tp + ".k", n);
      b.add(i, k, idx, codec::rational(codec::member(list[t], "c", tp), tp + ".c"));
    }
  }
  if (auto r = check_graded(b); !r.passed())
    throw Error(ErrorCode::GradingViolation, "bracket entry violates degree additivity", r.checks[0].witness);
  const RatMatrix alpha = codec::matrix(codec::member(j, "alpha", path), path + ".alpha", n, n);
  std::optional<RatMatrix> form;
  if (auto it = j.find("form"); it != j.end() && !it->is_null()) form = codec::matrix(*it, path + ".form", n, n);
  return ColorHomAlgebra(std::move(b), alpha, kind, std::move(form));
}

inline Json to_json(const Representation& r) {
  Json j;
  j["schema_version"] = schema_version;
  j["algebra"] = to_json(r.algebra());
  j["module_basis"] = codec::basis(r.module());
  j["beta"] = codec::matrix(r.beta_matrix());
  Json rho = Json::array();
  for (const auto& m : r.rho()) rho.push_back(codec::matrix(m));
  j["rho"] = std::move(rho);
  return j;
}

inline Representation representation_from_json(const Json& j, const std::string& path = "$") {
  auto a = algebra_from_json(codec::member(j, "algebra", path), path + ".algebra");
  auto M = codec::basis(codec::member(j, "module_basis", path), path + ".module_basis", a.space().bicharacter());
  const std::size_t m = M.dim();
  RatMatrix beta = codec::matrix(codec::member(j, "beta", path), path + ".beta", m, m);
  const auto& rj = codec::member(j, "rho", path);
  if (!rj.is_array() || rj.size() != a.dim()) codec::bad(path + ".rho", "expected one matrix per algebra basis vector");
  std::vector<RatMatrix> rho;
  for (std::size_t i = 0; i < rj.size(); ++i)
    rho.push_back(codec::matrix(rj[i], path + ".rho[" + std::to_string(i) + "]", m, m));
  return Representation(std::move(a), std::move(M), std::move(beta), std::move(rho));
}

/// Canonical components only: "i" for 1-cochains, "i,j" with i <= j for 2-cochains.
inline Json to_json(const Cochain& c, const GradedSpace& algebra_space) {
  Json j;
  j["n"] = c.n;
  j["degree"] = codec::degree(c.degree);
  j["module_dim"] = c.module_dim;
  Json vals = Json::object();
  for (std::size_t i = 0; i < c.algebra_dim; ++i) {
    if (c.n == 1) {
      if (!is_zero(c(i))) vals[std::to_string(i)] = codec::vector(c(i));
      continue;
    }
    for (std::size_t k = i; k < c.algebra_dim; ++k) {
      if (i == k && algebra_space.eps(i, i) == 1) continue;
      if (!is_zero(c(i, k))) vals[std::to_string(i) + "," + std::to_string(k)] = codec::vector(c(i, k));
    }
  }
  j["values"] = std::move(vals);
  return j;
}

/// Reads a cochain on the given algebra; 2-cochains are completed by eps-alternation.
inline Cochain cochain_from_json(const Json& j, const ColorHomAlgebra& a, const std::string& path = "$") {
  const auto& nj = codec::member(j, "n", path);
  const auto n = codec::integer(nj, path + ".n");
  if (n != 1 && n != 2) codec::bad(path + ".n", "cochains have arity 1 or 2");
  const auto deg = codec::degree(codec::member(j, "degree", path), path + ".degree", a.space().group());
  const auto md = codec::integer(codec::member(j, "module_dim", path), path + ".module_dim");
  if (md < 0) codec::bad(path + ".module_dim", "must be non-negative");
  const std::size_t d = a.dim(), m = static_cast<std::size_t>(md);
  auto c = Cochain::zero(static_cast<int>(n), deg, d, m);
  const auto& vals = codec::member(j, "values", path);
  if (!vals.is_object()) codec::bad(path + ".values", "expected an object");
  for (const auto& [key, v] : vals.items()) {
    const auto p = path + ".values[\"" + key + "\"]";
    if (n == 1) {
      if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos) codec::bad(p, "bad key");
      const auto i = std::stoul(key);
      if (i >= d) codec::bad(p, "index out of range");
      c.values[i] = codec::vector(v, p, m);
      continue;
    }
    const auto [i, k] = codec::pair_key(key, p, d);
    if (i > k) codec::bad(p, "use the key with the smaller index first");
    const Vec val = codec::vector(v, p, m);
    if (i == k && a.eps(i, i) == 1 && !is_zero(val)) codec::bad(p, "diagonal entry of an even vector must vanish");
    c.at(i, k) = val;
    if (i != k) c.at(k, i) = scaled(-a.eps(i, k), val);
  }
  return c;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
  }
}

/// Algebra or representation, told apart by the "rho" key.
inline std::variant<ColorHomAlgebra, Representation> parse(const std::string& text) {
  const Json j = parse_json(text);
  if (j.is_object() && j.contains("rho")) return representation_from_json(j);
  return algebra_from_json(j);
}

inline std::string serialize(const ColorHomAlgebra& a) { return dump(to_json(a)); }
inline std::string serialize(const Representation& r) { return dump(to_json(r)); }

}  // namespace qchl
