#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qchl/catalog.hpp"
#include "qchl/codec.hpp"
#include "qchl/constructions.hpp"
#include "qchl/extensions.hpp"
#include "qchl/faulkner.hpp"

namespace qchl {

/// Exit codes: 0 all checks pass, 1 a check or construction failed,
/// 2 usage error, unreadable input, unknown catalog entry or bad parameters.
enum ExitCode { exit_ok = 0, exit_check_failed = 1, exit_usage = 2 };

namespace cli {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline ColorHomAlgebra load_algebra(const std::string& path) {
  auto v = parse(read_file(path));
  if (!std::holds_alternative<ColorHomAlgebra>(v)) throw Error(ErrorCode::ParseError, path + ": expected an algebra");
  return std::get<ColorHomAlgebra>(std::move(v));
}

inline Representation load_rep(const std::string& path) {
  auto v = parse(read_file(path));
  if (!std::holds_alternative<Representation>(v))
    throw Error(ErrorCode::ParseError, path + ": expected a representation");
  return std::get<Representation>(std::move(v));
}

inline RatMatrix load_matrix(const std::string& path, std::size_t n) {
  return codec::matrix(parse_json(read_file(path)), path, n, n);
}

inline GroupElement parse_degree(const std::string& text, const GradingGroup& g) {
  GroupElement e;
  if (!text.empty()) {
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
      try {
        std::size_t used = 0;
        e.coords.push_back(std::stoll(part, &used));
        if (used != part.size()) throw std::invalid_argument(part);
      } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "bad degree '" + text + "'");
      }
    }
  } else {
    e = g.zero();
  }
  if (e.coords.size() != g.arity())
    throw Error(ErrorCode::ParseError, "degree needs " + std::to_string(g.arity()) + " comma-separated coordinates");
  return g.element(e.coords);
}

inline Json report_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json j{{"name", c.name}, {"passed", c.passed}};
    if (!c.passed) {
      j["witness"] = c.witness;
      if (!c.detail.empty()) j["detail"] = c.detail;
    }
    checks.push_back(std::move(j));
  }
  return Json{{"passed", r.passed()}, {"checks", std::move(checks)}};
}

inline Json error_json(const Error& e) {
  return Json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}, {"witness", e.witness()}};
}

inline int exit_code(const Error& e) {
  switch (e.code()) {
    case ErrorCode::ParseError:
    case ErrorCode::UnknownEntry:
    case ErrorCode::BadParams:
      return exit_usage;
    default:
      return exit_check_failed;
  }
}

inline CentroidBracket parse_bracket(const std::string& s) {
  if (s == "original") return CentroidBracket::original;
  if (s == "first") return CentroidBracket::first;
  if (s == "second") return CentroidBracket::second;
  throw Error(ErrorCode::ParseError, "unknown centroid bracket '" + s + "'");
}

/// Module for a central extension: the cocycle's "module_basis" when given,
/// otherwise module_dim copies of K in degree 0.
inline GradedSpace central_module(const Json& j, const ColorHomAlgebra& a, std::size_t m) {
  if (auto it = j.find("module_basis"); it != j.end())
    return codec::basis(*it, "$.module_basis", a.space().bicharacter());
  std::vector<BasisVector> basis;
  for (std::size_t r = 0; r < m; ++r) basis.push_back({m == 1 ? "c" : "c" + std::to_string(r), a.space().zero_degree()});
  return GradedSpace(a.space().bicharacter(), std::move(basis));
}

}  // namespace cli

/// Runs one CLI invocation; args excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification and constructions for quadratic color Hom-Lie algebras", "qchl"};
  app.require_subcommand(1);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "check the axioms of an algebra or representation file");
  std::string file;
  bool quadratic = false, multiplicative = false, commutative = false, literal = false;
  std::string kind;
  verify_cmd->add_option("file", file, "algebra or representation JSON")->required();
  verify_cmd->add_flag("--quadratic", quadratic, "also check the form");
  verify_cmd->add_flag("--multiplicative", multiplicative, "also check multiplicativity");
  verify_cmd->add_flag("--commutative", commutative, "also check eps-commutativity (associative kind)");
  verify_cmd->add_option("--kind", kind, "override the declared kind")
      ->check(CLI::IsMember({"lie", "associative", "leibniz"}));
  verify_cmd->add_flag("--literal-module", literal, "representations: also report the literal module identity");

  // construct
  auto* construct_cmd = app.add_subcommand("construct", "build a new algebra and print it as JSON");
  construct_cmd->require_subcommand(1);
  std::string file2, map_file, cocycle_file, bracket = "first", order = "theta-alpha";
  unsigned power = 1;
  bool lenient = false, no_verify = false;
  construct_cmd->add_flag("--no-verify", no_verify, "skip post-construction verification");

  auto* twist_cmd = construct_cmd->add_subcommand("twist", "twist by a weak self-morphism");
  twist_cmd->add_option("algebra", file)->required();
  twist_cmd->add_option("--map", map_file, "matrix JSON of the morphism")->required();
  twist_cmd->add_flag("--quadratic", quadratic, "symmetric automorphism twist keeping the form");

  auto* power_cmd = construct_cmd->add_subcommand("power", "twist by alpha^n");
  power_cmd->add_option("algebra", file)->required();
  power_cmd->add_option("--n", power, "exponent")->default_val(1);

  auto* centroid_cmd = construct_cmd->add_subcommand("centroid", "bracket variant from a centroid element");
  centroid_cmd->add_option("algebra", file)->required();
  centroid_cmd->add_option("--map", map_file, "matrix JSON of theta")->required();
  centroid_cmd->add_option("--bracket", bracket)->check(CLI::IsMember({"original", "first", "second"}));
  centroid_cmd->add_option("--order", order)->check(CLI::IsMember({"theta-alpha", "alpha-theta"}));
  centroid_cmd->add_flag("--quadratic", quadratic, "quadratic color Lie variant with twist theta");

  auto* commutator_cmd = construct_cmd->add_subcommand("commutator", "commutator of a Hom-associative algebra");
  commutator_cmd->add_option("algebra", file)->required();

  auto* tensor_cmd = construct_cmd->add_subcommand("tensor", "g ⊗ A");
  tensor_cmd->add_option("lie", file)->required();
  tensor_cmd->add_option("associative", file2)->required();

  auto* semidirect_cmd = construct_cmd->add_subcommand("semidirect", "semidirect product with a representation");
  semidirect_cmd->add_option("representation", file)->required();

  auto* central_cmd = construct_cmd->add_subcommand("central", "central extension by a cocycle");
  central_cmd->add_option("algebra", file)->required();
  central_cmd->add_option("--cocycle", cocycle_file, "cochain JSON")->required();

  auto* tstar_cmd = construct_cmd->add_subcommand("tstar", "T*-extension by a g*-valued cocycle");
  tstar_cmd->add_option("algebra", file)->required();
  tstar_cmd->add_option("--cocycle", cocycle_file, "cochain JSON; zero when omitted");
  tstar_cmd->add_flag("--lenient", lenient, "build even when the cochain is not a cocycle");

  auto* faulkner_cmd = construct_cmd->add_subcommand("faulkner", "Leibniz algebra on M ⊗ M*");
  faulkner_cmd->add_option("algebra", file)->required();
  faulkner_cmd->add_option("representation", file2)->required();

  // cohomology
  auto* coh_cmd = app.add_subcommand("cohomology", "dimensions of Z^2, B^2, H^2");
  std::string coefficients = "trivial", degree;
  bool h1 = false;
  coh_cmd->add_option("algebra", file)->required();
  coh_cmd->add_option("--coefficients", coefficients)->check(CLI::IsMember({"trivial", "coadjoint"}));
  coh_cmd->add_option("--degree", degree, "comma-separated coordinates; 0 when omitted");
  coh_cmd->add_flag("--h1", h1, "also report H^1");

  // catalog
  auto* catalog_cmd = app.add_subcommand("catalog", "built-in examples");
  catalog_cmd->require_subcommand(1);
  auto* list_cmd = catalog_cmd->add_subcommand("list", "list entries and default parameters");
  auto* emit_cmd = catalog_cmd->add_subcommand("emit", "print an entry as JSON");
  std::string id;
  std::vector<std::string> params;
  bool adjoint = false;
  emit_cmd->add_option("id", id)->required();
  emit_cmd->add_option("--param", params, "k=v")->allow_extra_args(false);
  emit_cmd->add_flag("--adjoint", adjoint, "emit the adjoint representation instead");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    BuildOptions opt;
    if (no_verify) opt.verify = false;

    if (*verify_cmd) {
      auto v = parse(cli::read_file(file));
      Report r;
      Json head;
      if (auto* a = std::get_if<ColorHomAlgebra>(&v)) {
        ColorHomAlgebra alg = kind.empty() ? *a : a->with_kind(parse_kind(kind));
        r = verify(alg, {.quadratic = quadratic, .multiplicative = multiplicative, .commutative = commutative});
        head = Json{{"object", "algebra"}, {"kind", std::string(to_string(alg.kind()))}, {"dim", alg.dim()}};
      } else {
        const auto& rep = std::get<Representation>(v);
        r = verify(rep.algebra());
        r.merge(check_representation(rep, multiplicative));
        r.merge(check_hom_module(rep));
        if (literal) r.merge(check_hom_module(rep, true));
        head = Json{{"object", "representation"}, {"dim", rep.algebra().dim()}, {"module_dim", rep.module_dim()}};
      }
      Json j = head;
      const Json body = cli::report_json(r);
      for (const auto& [k, val] : body.items()) j[k] = val;
      out << dump(j);
      return r.passed() ? exit_ok : exit_check_failed;
    }

    if (*construct_cmd) {
      ColorHomAlgebra result;
      if (*twist_cmd) {
        const auto a = cli::load_algebra(file);
        const auto m = cli::load_matrix(map_file, a.dim());
        result = quadratic ? twist_quadratic(a, m, opt) : twist_by_weak_morphism(a, m, opt);
      } else if (*power_cmd) {
        result = power_twist(cli::load_algebra(file), power, opt);
      } else if (*centroid_cmd) {
        const auto a = cli::load_algebra(file);
        const auto theta = make_centroid_element(a, cli::load_matrix(map_file, a.dim()));
        const auto which = cli::parse_bracket(bracket);
        result = quadratic ? centroid_quadratic(a, theta, which, opt)
                           : centroid_twist(a, theta, which,
                                            order == "theta-alpha" ? TwistOrder::theta_after_alpha
                                                                   : TwistOrder::alpha_after_theta,
                                            opt);
      } else if (*commutator_cmd) {
        result = commutator_algebra(cli::load_algebra(file), opt);
      } else if (*tensor_cmd) {
        result = tensor_product_algebra(cli::load_algebra(file), cli::load_algebra(file2), opt);
      } else if (*semidirect_cmd) {
        result = semidirect_product(cli::load_rep(file), opt);
      } else if (*central_cmd) {
        const auto a = cli::load_algebra(file);
        const Json cj = parse_json(cli::read_file(cocycle_file));
        const auto psi = cochain_from_json(cj, a);
        result = central_extension(a, cli::central_module(cj, a, psi.module_dim), psi, opt);
      } else if (*tstar_cmd) {
        const auto a = cli::load_algebra(file);
        const auto omega = cocycle_file.empty()
                               ? Cochain::zero(2, a.space().zero_degree(), a.dim(), a.dim())
                               : cochain_from_json(parse_json(cli::read_file(cocycle_file)), a);
        result = tstar_extension(a, omega, !lenient, opt);
      } else if (*faulkner_cmd) {
        const auto a = cli::load_algebra(file);
        const auto fd = faulkner_map(a, cli::load_rep(file2));
        result = faulkner_leibniz(fd, opt);
        if (fd.rank == fd.dmap.source().dim() && fd.rank == a.dim())
          result = result.with_form(faulkner_quadratic(fd).first);
      }
      out << serialize(result);
      for (const auto& [name, ok] : result.verified())
        if (!ok) return exit_check_failed;
      return exit_ok;
    }

    if (*coh_cmd) {
      const auto a = cli::load_algebra(file);
      const auto deg = cli::parse_degree(degree, a.space().group());
      Representation rep;
      if (coefficients == "trivial") {
        rep = trivial_rep(a);
      } else {
        auto [pi, cond] = coadjoint_rep(a);
        if (!cond.passed())
          throw Error(ErrorCode::CoadjointUndefined, "coadjoint representation does not exist", cond.checks[0].witness);
        rep = std::move(pi);
      }
      const auto res = cohomology(rep, deg, h1);
      Json reps = Json::array();
      for (const auto& c : res.representatives) reps.push_back(to_json(c, a.space()));
      Json j{{"coefficients", coefficients},
             {"degree", codec::degree(deg)},
             {"dimC1", res.dim_c1},
             {"dimC2", res.dim_c2},
             {"dimZ2", res.dim_z2},
             {"dimB2", res.dim_b2},
             {"dimH2", res.dim_h2},
             {"representatives", std::move(reps)}};
      if (res.dim_h1) {
        j["dimZ1"] = *res.dim_z1;
        j["dimB1"] = *res.dim_b1;
        j["dimH1"] = *res.dim_h1;
      }
      out << dump(j);
      return res.b2_in_z2 && res.coboundaries_in_c2 ? exit_ok : exit_check_failed;
    }

    if (*list_cmd) {
      Json j = Json::array();
      for (const auto& e : catalog_entries()) {
        Json p = Json::object();
        for (const auto& [k, v] : e.defaults) p[k] = to_string(v);
        if (e.id == "tensor") p = Json{{"g", "sl2_hom"}, {"a", "super_A2"}};
        j.push_back(Json{{"id", e.id}, {"params", std::move(p)}, {"description", e.description}});
      }
      out << dump(j);
      return exit_ok;
    }

    if (*emit_cmd) {
      Params p;
      for (const auto& kv : params) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) throw Error(ErrorCode::BadParams, "expected k=v, got '" + kv + "'");
        p[kv.substr(0, eq)] = kv.substr(eq + 1);
      }
      const auto a = catalog_build(id, p);
      if (adjoint) {
        out << serialize(adjoint_rep(a));
      } else {
        out << serialize(a);
      }
      for (const auto& [name, ok] : a.verified())
        if (!ok) {
          err << "warning: instance fails '" << name << "'\n";
          return exit_check_failed;
        }
      return exit_ok;
    }
  } catch (const Error& e) {
    out << dump(cli::error_json(e));
    return cli::exit_code(e);
  }
  return exit_usage;
}

inline int run_cli(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, out, err);
}

}  // namespace qchl
