#include "sakai/basepoints.hpp"

#include "sakai/error.hpp"
#include "sakai/painleve.hpp"
#include "sakai/poly.hpp"

namespace sakai::painleve {

namespace {

using Q = Rational;

// Affine coordinates (p, q) of P1 x P1 as functions of the final chart
// variables.
std::pair<RatFn, RatFn> chart_coordinates(AffineChart chart, const std::vector<BlowupStep>& cascade) {
  const Poly2 u = Poly2::u(), v = Poly2::v();
  RatFn p = (chart == AffineChart::xy || chart == AffineChart::xY) ? RatFn(u) : RatFn(Poly2(1), u);
  RatFn q = (chart == AffineChart::xy || chart == AffineChart::Xy) ? RatFn(v) : RatFn(Poly2(1), v);
  for (const auto& step : cascade) {
    Poly2 su, sv;
    if (step.kind == BlowupKind::U) {
      su = Poly2(step.at_u) + u;
      sv = Poly2(step.at_v) + u * v;
    } else {
      su = Poly2(step.at_u) + u * v;
      sv = Poly2(step.at_v) + v;
    }
    p = p.substitute(su, sv);
    q = q.substitute(su, sv);
  }
  return {p, q};
}

RatFn changed_coordinate(Surface surface, int half_map, const RatFn& p, const RatFn& q,
                         const StandardParams& sp, const RecurrenceParams& rp) {
  if (surface == Surface::standard) {
    const RatFn a0(sp.a[0]), a1(sp.a[1]), a2(sp.a[2]), a3(sp.a[3]), t(sp.t);
    const RatFn& f = p;
    const RatFn& g = q;
    if (half_map == 1) return RatFn(1) - a2 / g - a0 / (g + t) - f;
    return -t + a1 / f + a3 / (f - RatFn(1)) - g;
  }
  const RatFn alpha(rp.alpha), beta(rp.beta), s(rp.s);
  if (half_map == 1) return rec_half_forward_x<RatFn>(p, q, rp.n, alpha, beta, s);
  return rec_half_backward_y<RatFn>(p, q, rp.n, alpha, beta, s);
}

bool determinate_at(const RatFn& c, const Q& u, const Q& v) {
  return c.num().evaluate(u, v) != 0 || c.den().evaluate(u, v) != 0;
}

std::string fmt(const Q& q) { return to_string(q); }

}  // namespace

std::vector<BasePointSpec> standard_base_points(const StandardParams& p) {
  const auto& a = p.a;
  const Q& t = p.t;
  using K = BlowupKind;
  return {
      {"p1", "", "F=1/f=0, g=-t = " + fmt(-t), AffineChart::Xy, {}, 0, -t, 1},
      {"p2", "p1", "u1=1/f=0, v1=f(g+t)=-a0 = " + fmt(-a[0]), AffineChart::Xy, {{K::U, 0, -t}}, 0,
       -a[0], 1},
      {"p3", "", "F=1/f=0, g=0", AffineChart::Xy, {}, 0, 0, 1},
      {"p4", "p3", "u3=1/f=0, v3=fg=-a2 = " + fmt(-a[2]), AffineChart::Xy, {{K::U, 0, 0}}, 0, -a[2], 1},
      {"p5", "", "f=0, G=1/g=0", AffineChart::xY, {}, 0, 0, 2},
      {"p6", "p5", "U5=fg=a1 = " + fmt(a[1]) + ", V5=1/g=0", AffineChart::xY, {{K::V, 0, 0}}, a[1], 0, 2},
      {"p7", "", "f=1, G=1/g=0", AffineChart::xY, {}, 1, 0, 2},
      {"p8", "p7", "U7=(f-1)g=a3 = " + fmt(a[3]) + ", V7=1/g=0", AffineChart::xY, {{K::V, 1, 0}}, a[3],
       0, 2},
  };
}

std::vector<BasePointSpec> recurrence_base_points(const RecurrenceParams& p) {
  const Q n(p.n);
  const Q& s = p.s;
  const Q s3 = s * s * s;
  const Q u7 = s3 * s * (1 - 2 * n + s - p.alpha - p.beta);
  using K = BlowupKind;
  const std::vector<BlowupStep> c6{{K::U, s, 0}};
  const std::vector<BlowupStep> c7{{K::U, s, 0}, {K::V, 0, 0}};
  const std::vector<BlowupStep> c8{{K::U, s, 0}, {K::V, 0, 0}, {K::V, -s3, 0}};
  return {
      {"q1", "", "x=0, y=n = " + fmt(n), AffineChart::xy, {}, 0, n, 1},
      {"q2", "", "x=0, y=n+beta = " + fmt(n + p.beta), AffineChart::xy, {}, 0, n + p.beta, 1},
      {"q3", "", "X=1/x=0, y=0", AffineChart::Xy, {}, 0, 0, 1},
      {"q4", "", "X=1/x=0, y=-alpha = " + fmt(-p.alpha), AffineChart::Xy, {}, 0, -p.alpha, 1},
      {"q5", "", "X=1/x=s = " + fmt(s) + ", Y=1/y=0", AffineChart::XY, {}, s, 0, 2},
      {"q6", "q5", "u5=X-s=0, v5=Y/(X-s)=0", AffineChart::XY, c6, 0, 0, 2},
      {"q7", "q6", "U6=u5/v5=-s^3 = " + fmt(-s3) + ", V6=v5=0", AffineChart::XY, c7, -s3, 0, 2},
      {"q8", "q7", "U7=(U6+s^3)/V6=s^4(1-2n+s-alpha-beta) = " + fmt(u7) + ", V7=V6=0",
       AffineChart::XY, c8, u7, 0, 2},
  };
}

BasePointCheck check_base_point(Surface surface, const BasePointSpec& spec,
                                const StandardParams& sp, const RecurrenceParams& rp) {
  auto [p, q] = chart_coordinates(spec.chart, spec.cascade);
  RatFn c = changed_coordinate(surface, spec.half_map, p, q, sp, rp).strip_common_monomial();

  BasePointCheck out;
  out.label = spec.label;
  out.numerator_vanishes = c.num().evaluate(spec.u, spec.v) == 0;
  out.denominator_vanishes = c.den().evaluate(spec.u, spec.v) == 0;

  const Q step(3, 17);
  if (spec.cascade.empty()) {
    out.neighbour_determinate = determinate_at(c, spec.u + step, spec.v) &&
                                determinate_at(c, spec.u, spec.v + step);
    return out;
  }
  // The denominator vanishes along the last exceptional divisor; the
  // numerator restricted to it vanishes exactly at the base point.
  std::vector<Rational> lead;
  if (spec.cascade.back().kind == BlowupKind::U) {
    out.neighbour_determinate = determinate_at(c, spec.u, spec.v + step);
    lead = c.num().restrict_u_zero();
  } else {
    out.neighbour_determinate = determinate_at(c, spec.u + step, spec.v);
    lead = c.num().restrict_v_zero();
  }
  while (!lead.empty() && lead.back() == 0) lead.pop_back();
  if (lead.size() == 2) out.leading_root = -lead[0] / lead[1];
  return out;
}

namespace {

VerificationReport verify(Surface surface, const std::vector<BasePointSpec>& specs,
                          const StandardParams& sp, const RecurrenceParams& rp) {
  VerificationReport r(surface == Surface::standard ? "basepoints standard" : "basepoints recurrence");
  for (const auto& spec : specs) {
    BasePointCheck chk = check_base_point(surface, spec, sp, rp);
    std::string where = spec.label + " (" + spec.description + ", half-map " +
                        std::to_string(spec.half_map) + ")";
    r.add_exact(where + ": numerator and denominator vanish",
                chk.numerator_vanishes && chk.denominator_vanishes);
    r.add_exact(where + ": neighbouring point is determinate", chk.neighbour_determinate);
    if (!spec.cascade.empty()) {
      const Rational& stated = spec.cascade.back().kind == BlowupKind::U ? spec.v : spec.u;
      std::string note = chk.leading_root ? "root on the exceptional divisor " + to_string(*chk.leading_root)
                                          : "restriction to the exceptional divisor is not linear";
      r.add_exact(where + ": chart value is the root on the exceptional divisor",
                  chk.leading_root && *chk.leading_root == stated, note);
    }
    r.add_samples(1);
  }
  return r;
}

}  // namespace

VerificationReport verify_base_points(const StandardParams& p) {
  return verify(Surface::standard, standard_base_points(p), p, default_recurrence_params());
}

VerificationReport verify_base_points(const RecurrenceParams& p) {
  if (p.s == 0) throw DomainError("recurrence base points need s != 0");
  return verify(Surface::recurrence, recurrence_base_points(p), default_standard_params(), p);
}

StandardParams default_standard_params() {
  return {{Q(3, 7), Q(-2, 5), Q(5, 11), Q(1) - Q(3, 7) + Q(2, 5) - Q(5, 11)}, Q(13, 9)};
}

RecurrenceParams default_recurrence_params() { return {Q(3, 2), Q(1, 2), Q(1), 2}; }

}  // namespace sakai::painleve
