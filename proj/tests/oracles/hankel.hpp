#pragma once

// Exact recurrence coefficients from Hankel determinants of rational moments.
// Only for s = 0 and integer alpha, beta >= 0, where
//   mu_k = (k+alpha)! beta! / (k+alpha+beta+1)!.

#include "sakai/numeric.hpp"

#include <vector>

namespace oracle {

using sakai::Integer;
using sakai::Rational;

inline Integer factorial(long n) {
  Integer f = 1;
  for (long i = 2; i <= n; ++i) f *= i;
  return f;
}

inline Rational jacobi_moment(long k, long alpha, long beta) {
  return Rational(factorial(k + alpha) * factorial(beta), factorial(k + alpha + beta + 1));
}

inline Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      Rational factor = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= factor * m[c][k];
    }
  }
  return det;
}

struct HankelCoefficients {
  std::vector<Rational> alpha;  // alpha_0..alpha_{n_max}
  std::vector<Rational> beta;   // beta_0 = 0, beta_1..beta_{n_max}
};

inline HankelCoefficients hankel_coefficients(long alpha, long beta, int n_max) {
  std::vector<Rational> mu;
  for (long k = 0; k <= 2 * n_max + 3; ++k) mu.push_back(jacobi_moment(k, alpha, beta));
  // D[n] = det(mu_{i+j}), i, j < n; E[n] has the last column shifted by one.
  std::vector<Rational> D{Rational(1)}, E{Rational(0)};
  for (int n = 1; n <= n_max + 2; ++n) {
    std::vector<std::vector<Rational>> h(n, std::vector<Rational>(n)), g(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        h[i][j] = mu[i + j];
        g[i][j] = j + 1 < n ? mu[i + j] : mu[i + j + 1];
      }
    D.push_back(determinant(h));
    E.push_back(determinant(g));
  }
  // P_n = x^n + p(n) x^{n-1} + ..., p(n) = -E_n / D_n.
  auto p = [&](int n) { return n == 0 ? Rational(0) : Rational(-E[n] / D[n]); };
  HankelCoefficients out;
  for (int n = 0; n <= n_max; ++n) {
    out.alpha.push_back(p(n) - p(n + 1));
    out.beta.push_back(n == 0 ? Rational(0) : Rational(D[n + 1] * D[n - 1] / (D[n] * D[n])));
  }
  return out;
}

}  // namespace oracle
