#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <random>
#include <string>
#include <string_view>

namespace sakai {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
/// Variable-precision binary float. The precision of newly created values is
/// the thread default, managed through PrecisionScope.
using Real = boost::multiprecision::mpfr_float;

/// Parses "7", "-3/4", "1.25", "2.5e-3" exactly. Throws ParseError.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" for integers.
std::string to_string(const Rational& q);

/// Scientific notation with `digits` significant digits, "0" for zero.
std::string to_decimal(const Real& x, int digits = 6);

/// Fixed number of significant digits, suitable for tables.
std::string to_decimal_full(const Real& x, int digits);

/// Sets the default Real precision (decimal digits) for its lifetime.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

/// Converts at the current default precision.
Real to_real(const Rational& q);

/// 10^(-digits), at the current default precision.
Real decimal_epsilon(int digits);

/// Rational with numerator and denominator drawn uniformly from
/// [-bound, bound] and [1, bound].
Rational random_rational(std::mt19937_64& rng, long bound = 1000);

inline bool is_zero(const Rational& q) { return q == 0; }
inline bool is_zero(const Real& x) { return x == 0; }

}  // namespace sakai
