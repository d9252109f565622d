#include "sakai/quadrature.hpp"

#include "sakai/error.hpp"

#include <cmath>

namespace sakai::quadrature {

Recurrence shifted_jacobi_recurrence(const Real& a, const Real& b, std::size_t count) {
  if (a <= -1 || b <= -1) throw DomainError("Jacobi exponents must exceed -1");
  // Coefficients on [-1, 1] for (1-t)^A (1+t)^B with A = b, B = a, then
  // x = (1 + t) / 2.
  const Real& A = b;
  const Real& B = a;
  const Real ab = A + B;
  Recurrence r;
  r.alpha.reserve(count);
  r.beta.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    Real kk(static_cast<long>(k));
    Real at;
    if (k == 0)
      at = (B - A) / (ab + 2);
    else
      at = (B * B - A * A) / ((2 * kk + ab) * (2 * kk + ab + 2));
    r.alpha.push_back((1 + at) / 2);

    Real bt;
    if (k == 0) {
      r.beta.push_back(jacobi_mass(a, b));
      continue;
    }
    if (k == 1) {
      bt = 4 * (1 + A) * (1 + B) / ((2 + ab) * (2 + ab) * (3 + ab));
    } else {
      Real s = 2 * kk + ab;
      bt = 4 * kk * (kk + A) * (kk + B) * (kk + ab) / (s * s * (s + 1) * (s - 1));
    }
    r.beta.push_back(bt / 4);
  }
  return r;
}

Real jacobi_mass(const Real& a, const Real& b) {
  return tgamma(a + 1) * tgamma(b + 1) / tgamma(a + b + 2);
}

namespace {

// Number of eigenvalues of the Jacobi matrix below x (Sturm sequence).
std::size_t count_below(const std::vector<double>& diag, const std::vector<double>& off2, double x) {
  std::size_t count = 0;
  double q = 1;
  for (std::size_t k = 0; k < diag.size(); ++k) {
    q = diag[k] - x - (k == 0 ? 0.0 : off2[k] / q);
    if (q == 0) q = 1e-300;
    if (q < 0) ++count;
  }
  return count;
}

}  // namespace

Rule gauss_jacobi_unit(const Real& a, const Real& b, std::size_t n) {
  if (n == 0) throw DomainError("Gauss rule needs at least one node");
  const Recurrence rec = shifted_jacobi_recurrence(a, b, n + 1);

  std::vector<double> diag(n), off2(n);
  for (std::size_t k = 0; k < n; ++k) {
    diag[k] = rec.alpha[k].convert_to<double>();
    off2[k] = k == 0 ? 0.0 : rec.beta[k].convert_to<double>();
  }

  const int digits = static_cast<int>(Real::default_precision());
  // Newton converges quadratically, so one step past half the digits suffices.
  const Real tol = decimal_epsilon(digits / 2 + 2);

  Rule rule;
  rule.nodes.reserve(n);
  rule.weights.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    // i-th eigenvalue by bisection on [0, 1].
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 200 && hi - lo > 4e-17; ++it) {
      double mid = 0.5 * (lo + hi);
      if (count_below(diag, off2, mid) > i)
        hi = mid;
      else
        lo = mid;
    }
    Real x(0.5 * (lo + hi));

    // Newton on the monic degree-n polynomial.
    bool last = false;
    for (int it = 0; it < 100; ++it) {
      Real p_prev = 0, p = 1, dp_prev = 0, dp = 0;
      for (std::size_t k = 0; k < n; ++k) {
        Real shift = x - rec.alpha[k];
        Real p_next = shift * p - (k == 0 ? Real(0) : Real(rec.beta[k] * p_prev));
        Real dp_next = p + shift * dp - (k == 0 ? Real(0) : Real(rec.beta[k] * dp_prev));
        p_prev = p;
        p = p_next;
        dp_prev = dp;
        dp = dp_next;
      }
      Real step = p / dp;
      x -= step;
      if (last) break;
      if (abs(step) <= tol * abs(x)) last = true;
      if (it == 99) throw PrecisionExhausted("Gauss-Jacobi Newton iteration did not converge");
    }

    // Christoffel weight from the orthonormal polynomials.
    Real q_prev = 0, q = 1 / sqrt(rec.beta[0]);
    Real sum = q * q;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      Real q_next = ((x - rec.alpha[k]) * q - (k == 0 ? Real(0) : Real(sqrt(rec.beta[k]) * q_prev))) /
                    sqrt(rec.beta[k + 1]);
      q_prev = q;
      q = q_next;
      sum += q * q;
    }
    rule.nodes.push_back(x);
    rule.weights.push_back(1 / sum);
  }
  return rule;
}

}  // namespace sakai::quadrature
