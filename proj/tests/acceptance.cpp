// One PASS/FAIL line per acceptance criterion.

#include "oracles/hankel.hpp"
#include "sakai/basepoints.hpp"
#include "sakai/lattice.hpp"
#include "sakai/opcore.hpp"
#include "sakai/painleve.hpp"
#include "sakai/weyl_maps.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace sakai;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void line(const std::string& name, const std::function<std::string(bool&)>& body) {
  bool ok = false;
  std::string detail;
  try {
    detail = body(ok);
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  if (!ok) ++failures;
  std::printf("%s %s: %s\n", ok ? "PASS" : "FAIL", name.c_str(), detail.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  line("lattice suite", [](bool& ok) {
    auto t0 = Clock::now();
    VerificationReport r = lattice::lattice_suite();
    double dt = seconds_since(t0);
    ok = r.passed() && dt < 1.0;
    return std::to_string(r.details().size()) + " exact checks, " + std::to_string(dt) + " s";
  });

  line("weyl suite", [](bool& ok) {
    auto t0 = Clock::now();
    VerificationReport r = weyl::check_relations(7, 100);
    double dt = seconds_since(t0);
    ok = r.passed() && dt < 30.0;
    return std::to_string(r.details().size()) + " checks, relations at 100 states each, seed 7, " + std::to_string(dt) +
           " s";
  });

  line("ladder suite", [](bool& ok) {
    ok = true;
    std::string detail;
    for (const auto& p : opcore::acceptance_parameter_sets(60)) {
      VerificationReport r = opcore::ladder_report(p, 20);
      VerificationReport scaling = opcore::precision_scaling(p, 20, 60, 80);
      PrecisionScope scope(60);
      bool below = r.passed() && r.worst_residual() && *r.worst_residual() < decimal_epsilon(30);
      ok = ok && below && scaling.passed();
      detail += "(" + to_string(p.alpha) + "," + to_string(p.beta) + "," + to_string(p.s) + ") worst " +
                r.max_residual() + ", " + scaling.details().front().note + "; ";
    }
    return detail;
  });

  line("equivalence", [](bool& ok) {
    ok = true;
    std::string detail;
    for (const auto& p : opcore::acceptance_parameter_sets(60)) {
      VerificationReport r = painleve::verify_equivalence(p.alpha, p.beta, p.s, 20, 60);
      PrecisionScope scope(60);
      ok = ok && r.passed() && r.worst_residual() && *r.worst_residual() < decimal_epsilon(30);
      detail += "(" + to_string(p.alpha) + "," + to_string(p.beta) + "," + to_string(p.s) + ") worst " +
                r.max_residual() + "; ";
    }
    VerificationReport trip = painleve::check_coordinate_round_trip(7, 100);
    ok = ok && trip.passed() && trip.samples() == 100;
    return detail + "round trip exact at " + std::to_string(trip.samples()) + " points";
  });

  line("classical regression", [](bool& ok) {
    opcore::RecurrenceData rec = opcore::recurrence_coefficients({Rational(0), Rational(0), Rational(0), 60}, 10);
    oracle::HankelCoefficients h = oracle::hankel_coefficients(0, 0, 10);
    PrecisionScope scope(60);
    ok = true;
    Real worst = 0;
    for (int n = 1; n <= 10; ++n) {
      ok = ok && h.beta[n] == Rational(n * n, 4 * (4 * n * n - 1));
      worst = max(worst, Real(abs(rec.beta[n] - to_real(h.beta[n]))));
    }
    ok = ok && worst < decimal_epsilon(40);
    return "max |beta_n - oracle| = " + to_decimal(worst) + " for n <= 10";
  });

  line("base points", [](bool& ok) {
    VerificationReport s = painleve::verify_base_points(painleve::default_standard_params());
    VerificationReport r = painleve::verify_base_points(painleve::default_recurrence_params());
    VerificationReport r2 = painleve::verify_base_points(
        painleve::RecurrenceParams{Rational(2, 3), Rational(3, 5), Rational(7, 4), 3});
    ok = s.passed() && r.passed() && r2.passed();
    return std::to_string(s.details().size() + r.details().size() + r2.details().size()) + " exact checks";
  });

  return failures == 0 ? 0 : 1;
}
