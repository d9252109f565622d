#pragma once

// Sparse bivariate polynomials over Q in chart variables (u, v), and formal
// quotients of them. No gcd is taken; callers strip monomial content when they
// need the reduced form along an exceptional divisor.

#include "sakai/numeric.hpp"

#include <map>
#include <utility>
#include <vector>

namespace sakai {

class Poly2 {
 public:
  using Exponent = std::pair<int, int>;

  Poly2() = default;
  Poly2(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly2(long c) : Poly2(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static Poly2 u();
  static Poly2 v();

  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  int degree() const;

  Rational evaluate(const Rational& u, const Rational& v) const;
  /// p(u_expr, v_expr).
  Poly2 substitute(const Poly2& u_expr, const Poly2& v_expr) const;
  /// Largest (i, j) with u^i v^j dividing p; (0, 0) for the zero polynomial.
  Exponent monomial_content() const;
  Poly2 divide_monomial(Exponent e) const;
  /// Coefficients in the surviving variable after setting u = 0 (or v = 0).
  std::vector<Rational> restrict_u_zero() const;
  std::vector<Rational> restrict_v_zero() const;

  Poly2& operator+=(const Poly2& o);
  Poly2& operator-=(const Poly2& o);
  Poly2& operator*=(const Poly2& o);
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(Poly2 a, const Poly2& b) { return a *= b; }
  Poly2 operator-() const;
  friend bool operator==(const Poly2&, const Poly2&) = default;

 private:
  void add_term(Exponent e, const Rational& c);
  std::map<Exponent, Rational> terms_;
};

Poly2 pow(const Poly2& p, int k);

/// Formal quotient num/den. Division by a zero polynomial throws
/// IndeterminatePoint.
class RatFn {
 public:
  RatFn() : num_(0), den_(1) {}
  RatFn(const Poly2& num, const Poly2& den);
  RatFn(const Poly2& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFn(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFn(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFn(int c) : num_(long(c)), den_(1) {}  // NOLINT(google-explicit-constructor)

  const Poly2& num() const { return num_; }
  const Poly2& den() const { return den_; }

  RatFn substitute(const Poly2& u_expr, const Poly2& v_expr) const;
  /// Removes the common monomial factor of numerator and denominator.
  RatFn strip_common_monomial() const;

  friend RatFn operator+(const RatFn& a, const RatFn& b);
  friend RatFn operator-(const RatFn& a, const RatFn& b);
  friend RatFn operator*(const RatFn& a, const RatFn& b);
  friend RatFn operator/(const RatFn& a, const RatFn& b);
  RatFn operator-() const { return RatFn(-num_, den_); }
  RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
  RatFn& operator-=(const RatFn& o) { return *this = *this - o; }
  RatFn& operator*=(const RatFn& o) { return *this = *this * o; }
  RatFn& operator/=(const RatFn& o) { return *this = *this / o; }

 private:
  Poly2 num_;
  Poly2 den_;
};

bool is_zero(const RatFn& r);

}  // namespace sakai
