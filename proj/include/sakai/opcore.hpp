#pragma once

// Orthogonal polynomials for w(x) = x^alpha (1-x)^beta e^{-s x} on [0, 1]:
// recurrence coefficients by discretized Stieltjes on a Gauss-Jacobi rule,
// ladder quantities R_n, r_n, and residual checks of the identities they obey.
//
// Every Real produced here carries the precision of WeightParams::digits.
// Evaluate further expressions under a PrecisionScope with the same digits.

#include "sakai/numeric.hpp"
#include "sakai/report.hpp"

#include <vector>

namespace sakai::opcore {

struct WeightParams {
  Rational alpha;
  Rational beta;
  Rational s;
  unsigned digits = 60;

  /// alpha, beta > -1, s >= 0, digits >= 10. Throws DomainError.
  void validate() const;
  /// v'(x) = -alpha/x - beta/(x-1) + s, v = -ln w.
  Real v_prime(const Real& x) const;
};

/// Pass threshold 10^(-digits/2).
Real tolerance(unsigned digits);

/// |lhs - rhs| / max(|lhs|, |rhs|, 1).
Real relative_residual(const Real& lhs, const Real& rhs);

/// Gauss nodes used for coefficients up to index n_max.
std::size_t node_count(int n_max, const Rational& s);

/// Integral of x^{k+alpha} (1-x)^beta e^{-s x} over [0, 1].
Real moment(int k, const WeightParams& params);

struct RecurrenceData {
  unsigned digits = 0;
  /// Indexed by n = 0..n_max. beta[0] = 0 by convention.
  std::vector<Real> h;
  std::vector<Real> alpha;
  std::vector<Real> beta;
  /// Sub-leading coefficients p(n), n = 0..n_max+1, with p(0) = 0.
  std::vector<Real> p;
  /// Worst orthonormality residual seen on the independent check rule.
  Real orthogonality_residual;

  int n_max() const { return static_cast<int>(alpha.size()) - 1; }
  /// Monic P_n(x), n <= n_max + 1.
  Real evaluate(int n, const Real& x) const;
};

/// Throws PrecisionExhausted when orthogonality fails to half the digits.
RecurrenceData recurrence_coefficients(const WeightParams& params, int n_max);

struct LadderData {
  unsigned digits = 0;
  Real s;
  /// Indexed by n = 0..n_max; r[0] = 0.
  std::vector<Real> R;
  std::vector<Real> r;

  int n_max() const { return static_cast<int>(R.size()) - 1; }
  /// R_n/x + (s - R_n)/(x - 1).
  Real A(int n, const Real& x) const;
  /// r_n/x - (n + r_n)/(x - 1).
  Real B(int n, const Real& x) const;
};

/// Requires alpha > 0 and s > 0 (DomainError otherwise); `rec` must reach n_max.
LadderData ladder_quantities(const WeightParams& params, const RecurrenceData& rec, int n_max);
LadderData ladder_quantities(const WeightParams& params, int n_max);

/// (S1), (S2) and (S2') at index n for each sample x. Needs recurrence data up
/// to n+1 and ladder data up to n+1 (IndexRange otherwise).
VerificationReport check_compatibility(const WeightParams& params, const RecurrenceData& rec,
                                       const LadderData& lad, int n, const std::vector<Real>& xs);
VerificationReport check_compatibility(const WeightParams& params, int n,
                                       const std::vector<Rational>& xs);

/// The two string equations: the R equation for 0 <= n < n_max, the r equation
/// for 1 <= n <= n_max.
VerificationReport check_string_equations(const WeightParams& params, const LadderData& lad);
VerificationReport check_string_equations(const WeightParams& params, int n_max);

struct XYSequence {
  unsigned digits = 0;
  /// x[n] for n = 1..n_max (x[0] unused, zero); y[n] for n = 0..n_max, y[0] = 0.
  std::vector<Real> x;
  std::vector<Real> y;

  int n_max() const { return static_cast<int>(x.size()) - 1; }
};

/// x_n = 1/s - 1/R_{n-1}, y_n = -r_n. Throws IndeterminatePoint if R_{n-1} = 0.
XYSequence xy_sequence(const WeightParams& params, const LadderData& lad, int n_max);
XYSequence xy_sequence(const WeightParams& params, int n_max);

/// Both recurrence lines for the sequence: the x line for 1 <= n < n_max, the
/// y line for 1 <= n <= n_max (y_0 = 0).
VerificationReport check_xy_recurrence(const WeightParams& params, const XYSequence& seq);

/// Everything above at one parameter set: compatibility for n <= n_max,
/// string equations, recurrence lines, positivity.
VerificationReport ladder_report(const WeightParams& params, int n_max);

/// Runs ladder_report at `low` and `high` digits and requires the worst
/// residual to drop by at least `orders` decades.
VerificationReport precision_scaling(const WeightParams& params, int n_max, unsigned low,
                                     unsigned high, int orders = 10);

/// Acceptance parameter sets (1.5, 0.5, 1), (2, 1, 0.5), (0.5, 2, 2).
std::vector<WeightParams> acceptance_parameter_sets(unsigned digits = 60);

}  // namespace sakai::opcore
