#include "sakai/painleve.hpp"

#include "sakai/opcore.hpp"
#include "sakai/weyl_maps.hpp"

#include <random>
#include <string>

namespace sakai::painleve {

namespace {

std::string at(const char* what, long n) { return std::string(what) + " n=" + std::to_string(n); }

using RealState = weyl::BasicParamPointState<Real>;

RealState as_state(const std::array<Real, 4>& a, const Real& t, const Real& f, const Real& g) {
  return {a, t, f, g};
}

Real state_distance(const RealState& u, const RealState& v) {
  Real worst = 0;
  for (int i = 0; i < 4; ++i) worst = max(worst, opcore::relative_residual(u.a[i], v.a[i]));
  worst = max(worst, opcore::relative_residual(u.t, v.t));
  worst = max(worst, opcore::relative_residual(u.f, v.f));
  worst = max(worst, opcore::relative_residual(u.g, v.g));
  return worst;
}

}  // namespace

VerificationReport verify_equivalence(const Rational& alpha, const Rational& beta, const Rational& s, int n_max,
                                      unsigned digits, EquivalenceOptions options) {
  if (n_max < 1) throw IndexRange("equivalence needs n_max >= 1");
  opcore::WeightParams params{alpha, beta, s, digits};
  opcore::LadderData lad = opcore::ladder_quantities(params, n_max + 1);
  opcore::XYSequence seq = opcore::xy_sequence(params, lad, n_max + 1);

  PrecisionScope scope(digits);
  const Real tol = opcore::tolerance(digits);
  const Real a = to_real(alpha), b = to_real(beta), sr = to_real(s);
  const Real t = -sr;

  VerificationReport r("equivalence alpha=" + to_string(alpha) + " beta=" + to_string(beta) +
                       " s=" + to_string(s) + " digits=" + std::to_string(digits));
  r.merge(opcore::check_xy_recurrence(params, seq));

  std::vector<FGT<Real>> fg(static_cast<std::size_t>(n_max) + 2);
  for (long n = 1; n <= n_max + 1; ++n) fg[n] = to_fg<Real>(seq.x[n], seq.y[n], n, sr);

  const GeneratorWord std_word = standard_step_word();
  const GeneratorWord rec_word = recurrence_step_word();
  const GeneratorWord w1 = GeneratorWord::parse("w1");

  bool sums_ok = true;
  for (long n = 1; n <= n_max; ++n) {
    auto an = recurrence_root_variables<Real>(n, a, b);
    auto an1 = recurrence_root_variables<Real>(n + 1, a, b);
    auto exact = recurrence_root_variables<Rational>(n, alpha, beta);
    sums_ok = sums_ok && exact[0] + exact[1] + exact[2] + exact[3] == 1;
    const auto& cur = fg[n];
    const auto& next = fg[n + 1];

    Real rhs1 = 1 - an[2] / cur.g - an[0] / (cur.g + t);
    r.add_residual(at("dP line 1", n), opcore::relative_residual(next.f + cur.f, rhs1), tol);

    const auto& a2 = options.second_line_uses_old_parameters ? an : an1;
    Real rhs2 = -t + a2[1] / next.f + a2[3] / (next.f - 1);
    r.add_residual(at("dP line 2", n), opcore::relative_residual(next.g + cur.g, rhs2), tol,
                   options.second_line_uses_old_parameters ? "parameters of step n" : "parameters of step n+1");

    // Word routes through the birational generators.
    RealState sn = as_state(an, t, cur.f, cur.g);
    RealState sn1 = as_state(an1, t, next.f, next.g);
    r.add_residual(at("standard word", n), state_distance(weyl::apply_word(std_word, sn), sn1), tol);
    r.add_residual(at("recurrence word conjugated by w1", n),
                   state_distance(weyl::apply_word(rec_word, weyl::apply_word(w1, sn)), weyl::apply_word(w1, sn1)),
                   tol);

    // Handoff to the recurrence stepping code.
    RecOrbitState<Real> rs{a, b, sr, n, seq.x[n], seq.y[n]};
    RecOrbitState<Real> rn = rec_step_forward(rs);
    Real handoff = max(opcore::relative_residual(rn.x, seq.x[n + 1]), opcore::relative_residual(rn.y, seq.y[n + 1]));
    r.add_residual(at("recurrence step", n), handoff, tol);

    // And back to (x, y).
    XYS<Real> back = to_xy<Real>(cur.f, cur.g, n, t);
    r.add_residual(at("coordinate round trip", n),
                   max(opcore::relative_residual(back.x, seq.x[n]), opcore::relative_residual(back.y, seq.y[n])),
                   tol);
    r.add_samples(1);
  }
  r.add_exact("root variables sum to 1", sums_ok);
  return r;
}

VerificationReport check_coordinate_round_trip(std::uint64_t seed, std::size_t trials) {
  VerificationReport r("coordinate round trip", seed);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> index(1, 30);
  std::size_t done = 0, rejected = 0;
  Rational worst = 0;
  while (done < trials) {
    Rational x = random_rational(rng), y = random_rational(rng), s = random_rational(rng);
    long n = index(rng);
    try {
      FGT<Rational> fg = to_fg<Rational>(x, y, n, s);
      XYS<Rational> xy = to_xy<Rational>(fg.f, fg.g, n, fg.t);
      FGT<Rational> again = to_fg<Rational>(xy.x, xy.y, n, xy.s);
      Rational d = abs(xy.x - x) + abs(xy.y - y) + abs(xy.s - s) + abs(fg.t + s) + abs(again.f - fg.f) +
                   abs(again.g - fg.g);
      if (d > worst) worst = d;
      ++done;
    } catch (const IndeterminatePoint&) {
      if (++rejected > 100 * trials) throw SamplingExhausted("coordinate round trip: too many singular samples");
    }
  }
  r.add_exact("to_xy after to_fg is the identity, t = -s", worst,
              std::to_string(trials) + " points, " + std::to_string(rejected) + " rejected");
  r.add_samples(trials);
  return r;
}

VerificationReport check_standard_step(std::uint64_t seed, std::size_t trials) {
  VerificationReport r("standard step", seed);
  using Q = Rational;

  StdOrbitState<Q> ex{{Q(1, 2), Q(1, 4), Q(1, 8), Q(1, 8)}, Q(1), Q(2), Q(1), 0};
  StdOrbitState<Q> img = std_step_forward(ex);
  StdOrbitState<Q> want{{Q(3, 2), Q(-3, 4), Q(9, 8), Q(-7, 8)}, Q(1), Q(-11, 8), Q(-227, 209), 1};
  r.add_exact("worked example a=(1/2,1/4,1/8,1/8), t=1, f=2, g=1", img == want,
              "f=" + to_string(img.f) + " g=" + to_string(img.g));

  std::mt19937_64 rng(seed);
  std::size_t done = 0, rejected = 0;
  Q inverse_gap = 0, word_gap = 0, sum_gap = 0, forward_gap = 0;
  while (done < trials) {
    weyl::ParamPointState w = weyl::random_state(rng);
    StdOrbitState<Q> st{w.a, w.t, w.f, w.g, 0};
    try {
      StdOrbitState<Q> fwd = std_step_forward(st);
      StdOrbitState<Q> back = std_step_backward(fwd);
      StdOrbitState<Q> again = std_step_forward(back);
      weyl::ParamPointState word = weyl::composed_standard_step(w);
      Q d1 = abs(back.f - st.f) + abs(back.g - st.g) + abs(back.t - st.t);
      Q d2 = abs(word.f - fwd.f) + abs(word.g - fwd.g) + abs(word.t - fwd.t);
      Q d3 = abs(again.f - fwd.f) + abs(again.g - fwd.g);
      for (int i = 0; i < 4; ++i) {
        d1 += abs(back.a[i] - st.a[i]);
        d2 += abs(word.a[i] - fwd.a[i]);
        d3 += abs(again.a[i] - fwd.a[i]);
      }
      Q sum = fwd.a[0] + fwd.a[1] + fwd.a[2] + fwd.a[3] - 1;
      if (d1 > inverse_gap) inverse_gap = d1;
      if (d2 > word_gap) word_gap = d2;
      if (d3 > forward_gap) forward_gap = d3;
      if (abs(sum) > sum_gap) sum_gap = abs(sum);
      ++done;
    } catch (const SingularStep&) {
      if (++rejected > 100 * trials) throw SamplingExhausted("standard step: too many singular samples");
    } catch (const IndeterminatePoint&) {
      if (++rejected > 100 * trials) throw SamplingExhausted("standard step: too many singular samples");
    }
  }
  const std::string note = std::to_string(trials) + " states, " + std::to_string(rejected) + " rejected";
  r.add_exact("backward after forward is the identity", inverse_gap, note);
  r.add_exact("forward after backward is the identity", forward_gap, note);
  r.add_exact("forward step equals the composed word", word_gap, note);
  r.add_exact("root variables stay normalized", sum_gap, note);

  bool raised = false;
  try {
    std_step_backward(StdOrbitState<Q>{{Q(1, 2), Q(1, 4), Q(1, 8), Q(1, 8)}, Q(1), Q(1), Q(3), 0});
  } catch (const SingularStep& e) {
    raised = e.denominator() == "f-1";
  }
  r.add_exact("backward step at f = 1 is singular", raised);
  r.add_samples(trials + 1);
  return r;
}

}  // namespace sakai::painleve
