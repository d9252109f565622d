#pragma once

#include "sakai/numeric.hpp"

#include <cstddef>
#include <vector>

namespace sakai::quadrature {

struct Rule {
  std::vector<Real> nodes;
  std::vector<Real> weights;
};

/// Monic recurrence coefficients (alpha_k, beta_k), k < count, of the Jacobi
/// weight x^a (1-x)^b on [0, 1]. beta_0 is the total mass.
struct Recurrence {
  std::vector<Real> alpha;
  std::vector<Real> beta;
};

Recurrence shifted_jacobi_recurrence(const Real& a, const Real& b, std::size_t count);

/// B(a+1, b+1) = integral of x^a (1-x)^b over [0, 1].
Real jacobi_mass(const Real& a, const Real& b);

/// n-point Gauss rule for x^a (1-x)^b on [0, 1], a, b > -1, at the current
/// default precision. Nodes are ascending.
Rule gauss_jacobi_unit(const Real& a, const Real& b, std::size_t n);

}  // namespace sakai::quadrature
