#include "sakai/poly.hpp"

#include "sakai/error.hpp"

#include <algorithm>
#include <climits>

namespace sakai {

Poly2::Poly2(const Rational& c) {
  if (c != 0) terms_[{0, 0}] = c;
}

Poly2 Poly2::u() {
  Poly2 p;
  p.terms_[{1, 0}] = 1;
  return p;
}

Poly2 Poly2::v() {
  Poly2 p;
  p.terms_[{0, 1}] = 1;
  return p;
}

void Poly2::add_term(Exponent e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int Poly2::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

Rational Poly2::evaluate(const Rational& u, const Rational& v) const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < e.first; ++i) term *= u;
    for (int j = 0; j < e.second; ++j) term *= v;
    sum += term;
  }
  return sum;
}

Poly2 Poly2::substitute(const Poly2& u_expr, const Poly2& v_expr) const {
  int max_i = 0, max_j = 0;
  for (const auto& [e, c] : terms_) {
    max_i = std::max(max_i, e.first);
    max_j = std::max(max_j, e.second);
  }
  std::vector<Poly2> upow{Poly2(1)}, vpow{Poly2(1)};
  for (int i = 1; i <= max_i; ++i) upow.push_back(upow.back() * u_expr);
  for (int j = 1; j <= max_j; ++j) vpow.push_back(vpow.back() * v_expr);
  Poly2 out;
  for (const auto& [e, c] : terms_) out += Poly2(c) * upow[e.first] * vpow[e.second];
  return out;
}

Poly2::Exponent Poly2::monomial_content() const {
  if (terms_.empty()) return {0, 0};
  int i = INT_MAX, j = INT_MAX;
  for (const auto& [e, c] : terms_) {
    i = std::min(i, e.first);
    j = std::min(j, e.second);
  }
  return {i, j};
}

Poly2 Poly2::divide_monomial(Exponent m) const {
  Poly2 out;
  for (const auto& [e, c] : terms_) {
    if (e.first < m.first || e.second < m.second)
      throw DomainError("divide_monomial: monomial does not divide polynomial");
    out.terms_[{e.first - m.first, e.second - m.second}] = c;
  }
  return out;
}

std::vector<Rational> Poly2::restrict_u_zero() const {
  std::vector<Rational> coeffs;
  for (const auto& [e, c] : terms_) {
    if (e.first != 0) continue;
    if (coeffs.size() <= static_cast<std::size_t>(e.second)) coeffs.resize(e.second + 1);
    coeffs[e.second] += c;
  }
  return coeffs;
}

std::vector<Rational> Poly2::restrict_v_zero() const {
  std::vector<Rational> coeffs;
  for (const auto& [e, c] : terms_) {
    if (e.second != 0) continue;
    if (coeffs.size() <= static_cast<std::size_t>(e.first)) coeffs.resize(e.first + 1);
    coeffs[e.first] += c;
  }
  return coeffs;
}

Poly2& Poly2::operator+=(const Poly2& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly2& Poly2::operator*=(const Poly2& o) {
  Poly2 out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_)
      out.add_term({e1.first + e2.first, e1.second + e2.second}, c1 * c2);
  return *this = std::move(out);
}

Poly2 Poly2::operator-() const {
  Poly2 out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Poly2 pow(const Poly2& p, int k) {
  Poly2 out(1);
  for (int i = 0; i < k; ++i) out *= p;
  return out;
}

// ---------------------------------------------------------------------------

RatFn::RatFn(const Poly2& num, const Poly2& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw IndeterminatePoint("zero polynomial", "RatFn");
}

RatFn RatFn::substitute(const Poly2& u_expr, const Poly2& v_expr) const {
  return RatFn(num_.substitute(u_expr, v_expr), den_.substitute(u_expr, v_expr));
}

RatFn RatFn::strip_common_monomial() const {
  auto [ni, nj] = num_.monomial_content();
  auto [di, dj] = den_.monomial_content();
  Poly2::Exponent common{num_.is_zero() ? di : std::min(ni, di), num_.is_zero() ? dj : std::min(nj, dj)};
  return RatFn(num_.is_zero() ? Poly2() : num_.divide_monomial(common), den_.divide_monomial(common));
}

RatFn operator+(const RatFn& a, const RatFn& b) {
  if (a.den_ == b.den_) return RatFn(a.num_ + b.num_, a.den_);
  return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFn operator-(const RatFn& a, const RatFn& b) {
  if (a.den_ == b.den_) return RatFn(a.num_ - b.num_, a.den_);
  return RatFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFn operator*(const RatFn& a, const RatFn& b) { return RatFn(a.num_ * b.num_, a.den_ * b.den_); }

RatFn operator/(const RatFn& a, const RatFn& b) {
  if (b.num_.is_zero()) throw IndeterminatePoint("zero rational function", "RatFn division");
  return RatFn(a.num_ * b.den_, a.den_ * b.num_);
}

bool is_zero(const RatFn& r) { return r.num().is_zero(); }

}  // namespace sakai
