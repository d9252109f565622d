#include "sakai/opcore.hpp"

#include "sakai/error.hpp"
#include "sakai/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sakai::opcore {

namespace {

std::string label(const char* what, int n) { return std::string(what) + " n=" + std::to_string(n); }

std::string label(const char* what, int n, const std::string& x) {
  return label(what, n) + " x=" + x;
}

// Gauss rule for x^a (1-x)^b with the exponential folded into the weights.
quadrature::Rule exponential_rule(const Real& a, const Real& b, const Real& s, std::size_t n) {
  quadrature::Rule rule = quadrature::gauss_jacobi_unit(a, b, n);
  for (std::size_t i = 0; i < n; ++i) rule.weights[i] *= exp(-s * rule.nodes[i]);
  return rule;
}

// Rows k = 0..top of P_k at each node.
std::vector<std::vector<Real>> polynomial_table(const RecurrenceData& rec, const std::vector<Real>& nodes,
                                                int top) {
  std::vector<std::vector<Real>> table;
  table.emplace_back(nodes.size(), Real(1));
  for (int k = 0; k < top; ++k) {
    std::vector<Real> next(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      next[i] = (nodes[i] - rec.alpha[k]) * table[k][i];
      if (k > 0) next[i] -= rec.beta[k] * table[k - 1][i];
    }
    table.push_back(std::move(next));
  }
  return table;
}

void require_ladder_domain(const WeightParams& params) {
  params.validate();
  if (params.alpha <= 0)
    throw DomainError("ladder quantities need alpha > 0 (alpha = " + to_string(params.alpha) + ")");
  if (params.s <= 0) throw DomainError("ladder quantities need s > 0");
}

}  // namespace

void WeightParams::validate() const {
  if (alpha <= -1) throw DomainError("alpha must exceed -1");
  if (beta <= -1) throw DomainError("beta must exceed -1");
  if (s < 0) throw DomainError("s must be non-negative");
  if (digits < 10) throw DomainError("precision must be at least 10 digits");
}

Real WeightParams::v_prime(const Real& x) const {
  return -to_real(alpha) / x - to_real(beta) / (x - 1) + to_real(s);
}

Real tolerance(unsigned digits) {
  PrecisionScope scope(digits);
  return decimal_epsilon(static_cast<int>(digits / 2));
}

Real relative_residual(const Real& lhs, const Real& rhs) {
  Real scale = std::max({Real(abs(lhs)), Real(abs(rhs)), Real(1)});
  return abs(lhs - rhs) / scale;
}

std::size_t node_count(int n_max, const Rational& s) {
  double sd = s.convert_to<double>();
  return static_cast<std::size_t>(2 * std::max(n_max, 0) + 64 + 2 * static_cast<long>(std::ceil(sd)));
}

Real moment(int k, const WeightParams& params) {
  params.validate();
  if (k < 0) throw IndexRange("moment index must be non-negative");
  PrecisionScope scope(params.digits);
  quadrature::Rule rule =
      exponential_rule(to_real(params.alpha), to_real(params.beta), to_real(params.s), node_count(k, params.s));
  Real sum = 0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * pow(rule.nodes[i], k);
  return sum;
}

Real RecurrenceData::evaluate(int n, const Real& x) const {
  if (n < 0 || n > n_max() + 1) throw IndexRange("P_n evaluation index out of range");
  PrecisionScope scope(digits);
  Real prev = 0, cur = 1;
  for (int k = 0; k < n; ++k) {
    Real next = (x - alpha[k]) * cur - (k > 0 ? Real(beta[k] * prev) : Real(0));
    prev = cur;
    cur = next;
  }
  return cur;
}

RecurrenceData recurrence_coefficients(const WeightParams& params, int n_max) {
  params.validate();
  if (n_max < 1) throw IndexRange("recurrence coefficients need n_max >= 1");
  PrecisionScope scope(params.digits);
  const Real a = to_real(params.alpha), b = to_real(params.beta), s = to_real(params.s);
  const std::size_t nodes = node_count(n_max, params.s);
  quadrature::Rule rule = exponential_rule(a, b, s, nodes);

  RecurrenceData rec;
  rec.digits = params.digits;
  std::vector<Real> prev(nodes, Real(0)), cur(nodes, Real(1));
  for (int k = 0; k <= n_max; ++k) {
    Real h = 0, xh = 0;
    for (std::size_t i = 0; i < nodes; ++i) {
      Real wp = rule.weights[i] * cur[i] * cur[i];
      h += wp;
      xh += wp * rule.nodes[i];
    }
    rec.h.push_back(h);
    rec.alpha.push_back(xh / h);
    rec.beta.push_back(k == 0 ? Real(0) : Real(h / rec.h[k - 1]));
    for (std::size_t i = 0; i < nodes; ++i) {
      Real next = (rule.nodes[i] - rec.alpha[k]) * cur[i] - rec.beta[k] * prev[i];
      prev[i] = std::move(cur[i]);
      cur[i] = std::move(next);
    }
  }
  rec.p.push_back(Real(0));
  for (int k = 0; k <= n_max; ++k) rec.p.push_back(rec.p[k] - rec.alpha[k]);

  // Independent rule with a different node set.
  quadrature::Rule check = exponential_rule(a, b, s, nodes + 17);
  auto table = polynomial_table(rec, check.nodes, n_max);
  Real worst = 0;
  for (int n = 0; n <= n_max; ++n) {
    for (int m = 0; m <= n; ++m) {
      Real sum = 0;
      for (std::size_t i = 0; i < check.nodes.size(); ++i) sum += check.weights[i] * table[m][i] * table[n][i];
      Real res = m == n ? Real(abs(sum - rec.h[n]) / rec.h[n]) : Real(abs(sum) / sqrt(rec.h[m] * rec.h[n]));
      worst = std::max(worst, res);
    }
  }
  rec.orthogonality_residual = worst;
  if (worst > tolerance(params.digits))
    throw PrecisionExhausted("orthogonality lost beyond half the working digits (residual " +
                             to_decimal(worst) + ")");
  return rec;
}

Real LadderData::A(int n, const Real& x) const {
  if (n < 0 || n > n_max()) throw IndexRange(label("A_n unavailable at", n));
  PrecisionScope scope(digits);
  return R[n] / x + (s - R[n]) / (x - 1);
}

Real LadderData::B(int n, const Real& x) const {
  if (n < 0 || n > n_max()) throw IndexRange(label("B_n unavailable at", n));
  PrecisionScope scope(digits);
  return r[n] / x - (n + r[n]) / (x - 1);
}

LadderData ladder_quantities(const WeightParams& params, const RecurrenceData& rec, int n_max) {
  require_ladder_domain(params);
  if (n_max < 1) throw IndexRange("ladder quantities need n_max >= 1");
  if (rec.n_max() < n_max) throw IndexRange("recurrence data too short for ladder quantities");
  PrecisionScope scope(params.digits);
  const Real a = to_real(params.alpha);
  quadrature::Rule rule = exponential_rule(a - 1, to_real(params.beta), to_real(params.s),
                                           node_count(n_max, params.s));
  auto table = polynomial_table(rec, rule.nodes, n_max);

  LadderData lad;
  lad.digits = params.digits;
  lad.s = to_real(params.s);
  for (int n = 0; n <= n_max; ++n) {
    Real sq = 0, mixed = 0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      sq += rule.weights[i] * table[n][i] * table[n][i];
      if (n > 0) mixed += rule.weights[i] * table[n][i] * table[n - 1][i];
    }
    lad.R.push_back(a * sq / rec.h[n]);
    lad.r.push_back(n == 0 ? Real(0) : Real(a * mixed / rec.h[n - 1]));
  }
  return lad;
}

LadderData ladder_quantities(const WeightParams& params, int n_max) {
  require_ladder_domain(params);
  return ladder_quantities(params, recurrence_coefficients(params, n_max), n_max);
}

VerificationReport check_compatibility(const WeightParams& params, const RecurrenceData& rec,
                                       const LadderData& lad, int n, const std::vector<Real>& xs) {
  if (n < 0) throw IndexRange("compatibility index must be non-negative");
  if (rec.n_max() < n + 1 || lad.n_max() < n + 1)
    throw IndexRange(label("compatibility needs data up to index n+1 at", n));
  PrecisionScope scope(params.digits);
  const Real tol = tolerance(params.digits);
  VerificationReport r("compatibility");
  for (const Real& x : xs) {
    if (x == 0 || x == 1) throw DomainError("sample points must avoid 0 and 1");
    const std::string xs_label = to_decimal(x, 6);
    const Real vp = params.v_prime(x);
    const Real An = lad.A(n, x), Bn = lad.B(n, x), Bn1 = lad.B(n + 1, x), An1 = lad.A(n + 1, x);
    const Real shift = x - rec.alpha[n];

    r.add_residual(label("S1", n, xs_label), relative_residual(Bn1 + Bn, shift * An - vp), tol);

    Real lower = n > 0 ? Real(rec.beta[n] * lad.A(n - 1, x)) : Real(0);
    r.add_residual(label("S2", n, xs_label),
                   relative_residual(1 + shift * (Bn1 - Bn), rec.beta[n + 1] * An1 - lower), tol);

    if (n >= 1) {
      Real sum = 0;
      for (int j = 0; j < n; ++j) sum += lad.A(j, x);
      r.add_residual(label("S2'", n, xs_label),
                     relative_residual(Bn * Bn + vp * Bn + sum, rec.beta[n] * An * lad.A(n - 1, x)), tol);
    }
    r.add_samples(1);
  }
  return r;
}

VerificationReport check_compatibility(const WeightParams& params, int n, const std::vector<Rational>& xs) {
  require_ladder_domain(params);
  RecurrenceData rec = recurrence_coefficients(params, std::max(n + 1, 1));
  LadderData lad = ladder_quantities(params, rec, std::max(n + 1, 1));
  PrecisionScope scope(params.digits);
  std::vector<Real> reals;
  for (const auto& q : xs) reals.push_back(to_real(q));
  return check_compatibility(params, rec, lad, n, reals);
}

VerificationReport check_string_equations(const WeightParams& params, const LadderData& lad) {
  if (lad.n_max() < 1) throw IndexRange("string equations need n_max >= 1");
  PrecisionScope scope(params.digits);
  const Real tol = tolerance(params.digits);
  const Real a = to_real(params.alpha), b = to_real(params.beta), s = to_real(params.s);
  VerificationReport r("string equations");
  for (int n = 0; n < lad.n_max(); ++n) {
    const Real& R = lad.R[n];
    Real lhs = s * (lad.r[n + 1] + lad.r[n]);
    Real rhs = R * R - (2 * n + 1 + a + b + s) * R + s * a;
    r.add_residual(label("R equation", n), relative_residual(lhs, rhs), tol);
  }
  for (int n = 1; n <= lad.n_max(); ++n) {
    const Real &R = lad.R[n], &Rp = lad.R[n - 1], &rn = lad.r[n];
    if (R == 0 || Rp == 0) throw IndeterminatePoint("R_n R_{n-1}", label("r equation", n));
    Real lhs = n * (n + b) + (2 * n + a + b) * rn;
    Real rhs = (rn * rn - a * rn) * (s * s / (R * Rp) - s / R - s / Rp);
    r.add_residual(label("r equation", n), relative_residual(lhs, rhs), tol);
  }
  r.add_samples(static_cast<std::size_t>(2 * lad.n_max()));
  return r;
}

VerificationReport check_string_equations(const WeightParams& params, int n_max) {
  return check_string_equations(params, ladder_quantities(params, n_max));
}

XYSequence xy_sequence(const WeightParams& params, const LadderData& lad, int n_max) {
  require_ladder_domain(params);
  if (n_max < 1) throw IndexRange("xy sequence needs n_max >= 1");
  if (lad.n_max() < n_max) throw IndexRange("ladder data too short for the xy sequence");
  PrecisionScope scope(params.digits);
  const Real s = to_real(params.s);
  XYSequence seq;
  seq.digits = params.digits;
  seq.x.push_back(Real(0));
  seq.y.push_back(-lad.r[0]);
  for (int n = 1; n <= n_max; ++n) {
    if (lad.R[n - 1] == 0) throw IndeterminatePoint("R_{n-1}", label("xy_sequence", n));
    seq.x.push_back(1 / s - 1 / lad.R[n - 1]);
    seq.y.push_back(-lad.r[n]);
  }
  return seq;
}

XYSequence xy_sequence(const WeightParams& params, int n_max) {
  return xy_sequence(params, ladder_quantities(params, n_max), n_max);
}

VerificationReport check_xy_recurrence(const WeightParams& params, const XYSequence& seq) {
  PrecisionScope scope(params.digits);
  const Real tol = tolerance(params.digits);
  const Real a = to_real(params.alpha), b = to_real(params.beta), s = to_real(params.s);
  VerificationReport r("xy recurrence");
  for (int n = 1; n < seq.n_max(); ++n) {
    const Real& y = seq.y[n];
    Real den = s * s * (y * y + a * y);
    if (den == 0) throw IndeterminatePoint("s^2 (y^2 + alpha y)", label("x line", n));
    Real rhs = (y * y - (2 * n + b) * y + n * (n + b)) / den;
    r.add_residual(label("x line", n), relative_residual(seq.x[n] * seq.x[n + 1], rhs), tol);
  }
  for (int n = 1; n <= seq.n_max(); ++n) {
    const Real& x = seq.x[n];
    Real q = 1 - s * x;
    if (q == 0) throw IndeterminatePoint("1 - s x", label("y line", n));
    Real num = a * s * s * x * x + s * (2 * n - 1 - a + b + s) * x - 2 * n - b + 1;
    r.add_residual(label("y line", n), relative_residual(seq.y[n] + seq.y[n - 1], -num / (q * q)), tol,
                   n == 1 ? "uses y_0 = -r_0 = 0" : "");
  }
  r.add_samples(static_cast<std::size_t>(2 * seq.n_max() - 1));
  return r;
}

VerificationReport ladder_report(const WeightParams& params, int n_max) {
  require_ladder_domain(params);
  if (n_max < 1) throw IndexRange("ladder report needs n_max >= 1");
  const std::string name = "ladder alpha=" + to_string(params.alpha) + " beta=" + to_string(params.beta) +
                           " s=" + to_string(params.s) + " digits=" + std::to_string(params.digits);
  VerificationReport report(name);
  RecurrenceData rec = recurrence_coefficients(params, n_max + 1);
  LadderData lad = ladder_quantities(params, rec, n_max + 1);
  PrecisionScope scope(params.digits);
  const Real tol = tolerance(params.digits);

  bool positive = true;
  for (int n = 0; n <= rec.n_max(); ++n)
    positive = positive && rec.h[n] > 0 && (n == 0 || rec.beta[n] > 0);
  report.add_exact("h_n > 0 and beta_n > 0", positive);
  report.add_residual("orthogonality", rec.orthogonality_residual, tol);

  const std::vector<Real> xs{Real(-1), Real(1) / 2, Real(2)};
  for (int n = 0; n <= n_max; ++n) report.merge(check_compatibility(params, rec, lad, n, xs));
  report.merge(check_string_equations(params, lad));
  report.merge(check_xy_recurrence(params, xy_sequence(params, lad, n_max + 1)));
  return report;
}

VerificationReport precision_scaling(const WeightParams& params, int n_max, unsigned low, unsigned high,
                                     int orders) {
  WeightParams lo = params, hi = params;
  lo.digits = low;
  hi.digits = high;
  VerificationReport rl = ladder_report(lo, n_max);
  VerificationReport rh = ladder_report(hi, n_max);
  PrecisionScope scope(high);
  VerificationReport r("precision scaling alpha=" + to_string(params.alpha) + " beta=" +
                       to_string(params.beta) + " s=" + to_string(params.s));
  Real wl = rl.worst_residual() ? *rl.worst_residual() : Real(0);
  Real wh = rh.worst_residual() ? *rh.worst_residual() : Real(0);
  std::string note = std::to_string(low) + " digits: " + to_decimal(wl) + ", " + std::to_string(high) +
                     " digits: " + to_decimal(wh);
  r.add_residual("worst residual at the higher precision", wh, wl * decimal_epsilon(orders), note);
  r.add_exact("both precisions pass", rl.passed() && rh.passed());
  r.add_samples(2);
  return r;
}

std::vector<WeightParams> acceptance_parameter_sets(unsigned digits) {
  return {{parse_rational("1.5"), parse_rational("0.5"), parse_rational("1"), digits},
          {parse_rational("2"), parse_rational("1"), parse_rational("0.5"), digits},
          {parse_rational("0.5"), parse_rational("2"), parse_rational("2"), digits}};
}

}  // namespace sakai::opcore
