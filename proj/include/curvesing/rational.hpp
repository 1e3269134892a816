#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <string>

#include "curvesing/error.hpp"

namespace curvesing {

/// Exact rational number. GMP keeps it canonical: gcd(|num|, den) = 1, den > 0.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Serialises as "num" when the denominator is 1, otherwise "num/den".
inline std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat parse_rat(const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  Rat r;
  if (s.empty() || r.set_str(s, 10) != 0) fail(ErrorKind::Input, "polycore", "not a rational literal: '" + text + "'");
  require(r.get_den() != 0, ErrorKind::Input, "polycore", "zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

/// Bit size of the larger of numerator and denominator.
inline std::size_t height(const Rat& r) {
  return std::max(mpz_sizeinbase(r.get_num_mpz_t(), 2), mpz_sizeinbase(r.get_den_mpz_t(), 2));
}

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Rat pow(const Rat& base, unsigned e) {
  Rat r(1);
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
  r.canonicalize();
  return r;
}

}  // namespace curvesing
