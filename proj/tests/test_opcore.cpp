#include "oracles/hankel.hpp"
#include "sakai/error.hpp"
#include "sakai/opcore.hpp"

#include <doctest.h>

using namespace sakai;
using namespace sakai::opcore;
using Q = Rational;

namespace {

WeightParams set1(unsigned digits = 60) { return {Q(3, 2), Q(1, 2), Q(1), digits}; }

}  // namespace

TEST_CASE("moments") {
  PrecisionScope scope(60);
  const Real tol = decimal_epsilon(55);
  for (int k = 0; k < 6; ++k) CHECK(abs(moment(k, {Q(0), Q(0), Q(0), 60}) - Real(1) / (k + 1)) < tol);
  CHECK(abs(moment(0, {Q(0), Q(0), Q(1), 60}) - (1 - exp(Real(-1)))) < tol);
  CHECK(abs(moment(0, {Q(1), Q(1), Q(0), 60}) - Real(1) / 6) < tol);
}

TEST_CASE("Legendre coefficients match the Hankel oracle") {
  RecurrenceData rec = recurrence_coefficients({Q(0), Q(0), Q(0), 60}, 10);
  oracle::HankelCoefficients h = oracle::hankel_coefficients(0, 0, 10);
  PrecisionScope scope(60);
  for (int n = 1; n <= 10; ++n) {
    Q closed(n * n, 4 * (4 * n * n - 1));
    CHECK(h.beta[n] == closed);
    CHECK(abs(rec.beta[n] - to_real(h.beta[n])) < decimal_epsilon(40));
  }
  CHECK(abs(rec.beta[1] - Real(1) / 12) < decimal_epsilon(50));
  CHECK(abs(rec.beta[2] - Real(1) / 15) < decimal_epsilon(50));
  CHECK(rec.beta[0] == 0);
}

TEST_CASE("integer Jacobi exponents match the Hankel oracle") {
  RecurrenceData rec = recurrence_coefficients({Q(2), Q(1), Q(0), 60}, 8);
  oracle::HankelCoefficients h = oracle::hankel_coefficients(2, 1, 8);
  PrecisionScope scope(60);
  for (int n = 0; n <= 8; ++n) {
    CHECK(abs(rec.alpha[n] - to_real(h.alpha[n])) < decimal_epsilon(40));
    CHECK(abs(rec.beta[n] - to_real(h.beta[n])) < decimal_epsilon(40));
  }
}

TEST_CASE("recurrence data invariants") {
  WeightParams p = set1();
  RecurrenceData rec = recurrence_coefficients(p, 12);
  PrecisionScope scope(60);
  const Real tol = tolerance(60);
  CHECK(abs(rec.alpha[0] - moment(1, p) / moment(0, p)) < tol);
  for (int n = 0; n <= 12; ++n) {
    CHECK(rec.h[n] > 0);
    CHECK(abs(rec.alpha[n] - (rec.p[n] - rec.p[n + 1])) < tol);
    if (n > 0) {
      CHECK(rec.beta[n] > 0);
      CHECK(abs(rec.beta[n] - rec.h[n] / rec.h[n - 1]) < tol);
    }
  }
  CHECK(rec.orthogonality_residual < tol);
  // P_n vanishes at its own nodes only; evaluate P_1 at alpha_0.
  CHECK(abs(rec.evaluate(1, rec.alpha[0])) < tol);
  CHECK_THROWS_AS(recurrence_coefficients(p, 0), IndexRange);
}

TEST_CASE("ladder quantities") {
  WeightParams p = set1();
  LadderData lad = ladder_quantities(p, 6);
  PrecisionScope scope(60);
  CHECK(lad.r[0] == 0);
  // A_n(x) x (x - 1) = s x - R_n.
  for (int n = 0; n <= 6; ++n)
    for (Real x : {Real(-3), Real(1) / 3, Real(5)})
      CHECK(abs(lad.A(n, x) * x * (x - 1) - (lad.s * x - lad.R[n])) < decimal_epsilon(50));
  CHECK_THROWS_AS(ladder_quantities({Q(0), Q(1), Q(1), 60}, 4), DomainError);
  CHECK_THROWS_AS(ladder_quantities({Q(-1, 2), Q(1), Q(1), 60}, 4), DomainError);
  CHECK_THROWS_AS(ladder_quantities({Q(1), Q(1), Q(0), 60}, 4), DomainError);
  CHECK_THROWS_AS(lad.A(7, Real(2)), IndexRange);
}

TEST_CASE("compatibility at n = 3") {
  VerificationReport r = check_compatibility(set1(), 3, {Q(-1), Q(1, 2), Q(2)});
  CHECK(r.passed());
  CHECK(r.max_residual_value() < 1e-30);
  CHECK(r.details().size() == 9);
}

TEST_CASE("corrupted beta_n breaks (S2')") {
  WeightParams p = set1();
  RecurrenceData rec = recurrence_coefficients(p, 5);
  LadderData lad = ladder_quantities(p, rec, 5);
  {
    PrecisionScope scope(60);
    rec.beta[3] *= Real(101) / 100;
  }
  PrecisionScope scope(60);
  VerificationReport r = check_compatibility(p, rec, lad, 3, {Real(2)});
  bool s2p_failed = false;
  for (const auto& item : r.details())
    if (item.name.rfind("S2'", 0) == 0 && !item.passed) s2p_failed = true;
  CHECK(s2p_failed);
  CHECK_THROWS_AS(check_compatibility(p, rec, lad, 5, {Real(2)}), IndexRange);
}

TEST_CASE("string equations and the xy recurrence") {
  WeightParams p = set1();
  LadderData lad = ladder_quantities(p, 20);
  VerificationReport s = check_string_equations(p, lad);
  CHECK(s.passed());
  CHECK(s.details().size() == 40);
  XYSequence seq = xy_sequence(p, lad, 20);
  {
    PrecisionScope scope(60);
    CHECK(seq.y[1] == -lad.r[1]);
    CHECK(abs(seq.x[1] - (1 / lad.s - 1 / lad.R[0])) < decimal_epsilon(55));
  }
  VerificationReport x = check_xy_recurrence(p, seq);
  CHECK(x.passed());
  CHECK(x.details().front().name == "x line n=1");
}

TEST_CASE("precision scaling") {
  VerificationReport r = precision_scaling(set1(), 8, 40, 60);
  CHECK(r.passed());
}
