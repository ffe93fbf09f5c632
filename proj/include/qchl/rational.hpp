#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "qchl/error.hpp"

namespace qchl {

using Rational = mpq_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

/// Canonical text form: lowest terms, positive denominator, "p" when integral.
inline std::string to_string(const Rational& r) {
  Rational c(r);
  c.canonicalize();
  return c.get_str();
}

/// Accepts "p", "-p", "p/q" with q != 0. Anything else is a ParseError.
inline Rational parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
  };
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  if (!digits(num)) throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
  if (slash != std::string_view::npos) {
    const std::string_view den = body.substr(slash + 1);
    if (!digits(den)) throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
    if (den.find_first_not_of('0') == std::string_view::npos)
      throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  }
  Rational r(std::string(text), 10);
  r.canonicalize();
  return r;
}

/// r^e for any integer exponent; r must be nonzero when e < 0.
inline Rational pow(const Rational& r, std::int64_t e) {
  if (e == 0) return Rational(1);
  Rational base(r);
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
  if (e < 0) base = 1 / base;
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), n);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), n);
  Rational out(num, den);
  out.canonicalize();
  return out;
}

}  // namespace qchl
