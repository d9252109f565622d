#include "oracles/hankel.hpp"
#include "sakai/error.hpp"
#include "sakai/quadrature.hpp"

#include <doctest.h>

using namespace sakai;

TEST_CASE("Legendre rule on [0, 1]") {
  PrecisionScope scope(50);
  quadrature::Rule r = quadrature::gauss_jacobi_unit(Real(0), Real(0), 12);
  Real total = 0;
  for (const auto& w : r.weights) total += w;
  CHECK(abs(total - 1) < decimal_epsilon(45));
  for (std::size_t i = 0; i < 12; ++i) CHECK(abs(r.nodes[i] + r.nodes[11 - i] - 1) < decimal_epsilon(45));
  for (std::size_t i = 1; i < 12; ++i) CHECK(r.nodes[i] > r.nodes[i - 1]);
}

TEST_CASE("Jacobi rule integrates polynomials exactly") {
  PrecisionScope scope(50);
  const long a = 1, b = 2;
  const std::size_t n = 10;
  quadrature::Rule r = quadrature::gauss_jacobi_unit(Real(a), Real(b), n);
  for (long k = 0; k < static_cast<long>(2 * n); ++k) {
    Real sum = 0;
    for (std::size_t i = 0; i < n; ++i) sum += r.weights[i] * pow(r.nodes[i], k);
    Real exact = to_real(oracle::jacobi_moment(k, a, b));
    CHECK(abs(sum - exact) / exact < decimal_epsilon(45));
  }
}

TEST_CASE("singular endpoint weights") {
  PrecisionScope scope(40);
  quadrature::Rule r = quadrature::gauss_jacobi_unit(Real(1) / 2, Real(-1) / 2, 20);
  Real total = 0;
  for (const auto& w : r.weights) total += w;
  // B(3/2, 1/2) = pi / 2.
  CHECK(abs(total - acos(Real(-1)) / 2) < decimal_epsilon(35));
  CHECK_THROWS_AS(quadrature::gauss_jacobi_unit(Real(-1), Real(0), 4), DomainError);
}
