#include "sakai/opcore.hpp"
#include "sakai/painleve.hpp"

#include <doctest.h>

using namespace sakai;
using namespace sakai::painleve;
using Q = Rational;

namespace {

// Direct evaluation of the standard step, written out independently.
struct Direct {
  std::array<Q, 4> a;
  Q f, g;
};

Direct oracle_step(std::array<Q, 4> a, const Q& t, const Q& f, const Q& g) {
  Q fb = Q(1) - a[2] / g - a[0] / (g + t) - f;
  std::array<Q, 4> ab{a[0] + 1, a[1] - 1, a[2] + 1, a[3] - 1};
  Q gb = -t + ab[1] / fb + ab[3] / (fb - 1) - g;
  return {ab, fb, gb};
}

}  // namespace

TEST_CASE("standard step worked example") {
  StdOrbitState<Q> s{{Q(1, 2), Q(1, 4), Q(1, 8), Q(1, 8)}, Q(1), Q(2), Q(1), 0};
  auto out = std_step_forward(s);
  Direct d = oracle_step(s.a, s.t, s.f, s.g);
  CHECK(out.f == d.f);
  CHECK(out.g == d.g);
  CHECK(out.f == Q(-11, 8));
  CHECK(out.g == Q(-227, 209));
  CHECK(out.a == std::array<Q, 4>{Q(3, 2), Q(-3, 4), Q(9, 8), Q(-7, 8)});
  CHECK(out.a[0] + out.a[1] + out.a[2] + out.a[3] == 1);
  CHECK(out.step_index == 1);
  CHECK(std_step_backward(out) == s);
}

TEST_CASE("singular steps name the denominator and index") {
  StdOrbitState<Q> s{{Q(1, 2), Q(1, 4), Q(1, 8), Q(1, 8)}, Q(1), Q(1), Q(3), 4};
  try {
    std_step_backward(s);
    FAIL("expected a singular step");
  } catch (const SingularStep& e) {
    CHECK(e.denominator() == "f-1");
    CHECK(e.index() == 4);
  }
  s.g = -1;  // g + t = 0
  CHECK_THROWS_AS(std_step_forward(s), SingularStep);
}

TEST_CASE("exact standard-step suite") {
  VerificationReport r = check_standard_step(11, 100);
  CHECK(r.passed());
}

TEST_CASE("coordinate change worked example") {
  auto fg = to_fg<Q>(Q(1, 3), Q(2), 1, Q(1));
  // f = (1-sx)(n-y+sxy)/(s^2 x), g = s(y-n)/((1-sx)y-n), evaluated by hand.
  CHECK(fg.f == Q(-2, 3));
  CHECK(fg.g == Q(3));
  CHECK(fg.t == Q(-1));
  auto xy = to_xy<Q>(fg.f, fg.g, 1, fg.t);
  CHECK(xy.x == Q(1, 3));
  CHECK(xy.y == Q(2));
  CHECK(xy.s == Q(1));
  CHECK_THROWS_AS(to_fg<Q>(Q(0), Q(2), 1, Q(1)), IndeterminatePoint);
}

TEST_CASE("round trip at random rational points") {
  VerificationReport r = check_coordinate_round_trip(3, 100);
  CHECK(r.passed());
  CHECK(r.samples() == 100);
}

TEST_CASE("recurrence half-maps") {
  const Q a(3, 2), b(1, 2), s(1);
  // y = n kills the numerator of the first half-map.
  CHECK(rec_half_forward_x<Q>(Q(2, 7), Q(3), 3, a, b, s) == 0);
  CHECK_THROWS_AS(rec_half_forward_x<Q>(Q(0), Q(3), 3, a, b, s), SingularStep);
  // The second half-map is an involution in y.
  Q x(2, 9), y(5, 4);
  Q y1 = rec_half_backward_y<Q>(x, y, 4, a, b, s);
  CHECK(rec_half_backward_y<Q>(x, y1, 4, a, b, s) == y);
  RecOrbitState<Q> st{a, b, s, 2, Q(1, 5), Q(7, 3)};
  CHECK(rec_step_backward(rec_step_forward(st)) == st);
}

TEST_CASE("root variables sum to one") {
  for (long n = 1; n < 6; ++n) {
    auto a = recurrence_root_variables<Q>(n, Q(3, 2), Q(1, 2));
    CHECK(a[0] + a[1] + a[2] + a[3] == 1);
    CHECK(a[1] == Q(-n));
  }
}

TEST_CASE("orthogonal-polynomial orbit hands off to the recurrence stepper") {
  opcore::WeightParams p{Q(3, 2), Q(1, 2), Q(1), 60};
  opcore::XYSequence seq = opcore::xy_sequence(p, 3);
  PrecisionScope scope(60);
  RecOrbitState<Real> st{to_real(p.alpha), to_real(p.beta), to_real(p.s), 1, seq.x[1], seq.y[1]};
  auto next = rec_step_forward(st);
  CHECK(opcore::relative_residual(next.x, seq.x[2]) < opcore::tolerance(60));
  CHECK(opcore::relative_residual(next.y, seq.y[2]) < opcore::tolerance(60));
}

TEST_CASE("equivalence with the half-step convention") {
  VerificationReport r = verify_equivalence(Q(3, 2), Q(1, 2), Q(1), 8, 40);
  CHECK(r.passed());
  CHECK(r.max_residual_value() < 1e-18);
}

TEST_CASE("the other parameter convention fails") {
  VerificationReport r = verify_equivalence(Q(3, 2), Q(1, 2), Q(1), 4, 40, {true});
  CHECK_FALSE(r.passed());
}
