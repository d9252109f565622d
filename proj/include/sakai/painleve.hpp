#pragma once

// Orbit engines for the standard d-P(A3(1)/D5(1)) equation
//     f_next + f = 1 - a2/g - a0/(g+t),
//     g_next + g = -t + a1'/f_next + a3'/(f_next-1),      a' = a + (1,-1,1,-1),
// and for the time-evolved Jacobi recurrence in (x_n, y_n), together with the
// coordinate change between them.
//
// Half-step convention: the first line uses the parameters of step n, the
// second line those of step n+1.

#include "sakai/error.hpp"
#include "sakai/numeric.hpp"
#include "sakai/report.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace sakai::painleve {

template <class T>
struct StdOrbitState {
  std::array<T, 4> a;
  T t;
  T f;
  T g;
  long step_index = 0;

  friend bool operator==(const StdOrbitState&, const StdOrbitState&) = default;
};

template <class T>
struct RecOrbitState {
  T alpha;
  T beta;
  T s;
  long n = 1;
  T x;
  T y;

  friend bool operator==(const RecOrbitState&, const RecOrbitState&) = default;
};

namespace detail {

template <class T>
T checked(T d, const char* denominator, long index, const char* where) {
  if (is_zero(d)) throw SingularStep(denominator, index, where);
  return d;
}

}  // namespace detail

template <class T>
StdOrbitState<T> std_step_forward(const StdOrbitState<T>& st) {
  using detail::checked;
  const char* where = "std_step_forward";
  const auto& a = st.a;
  T g = checked<T>(st.g, "g", st.step_index, where);
  T gt = checked<T>(st.g + st.t, "g+t", st.step_index, where);
  T f_next = 1 - a[2] / g - a[0] / gt - st.f;
  std::array<T, 4> a_next{a[0] + 1, a[1] - 1, a[2] + 1, a[3] - 1};
  T fn = checked<T>(f_next, "f", st.step_index + 1, where);
  T fn1 = checked<T>(f_next - 1, "f-1", st.step_index + 1, where);
  T g_next = -st.t + a_next[1] / fn + a_next[3] / fn1 - st.g;
  return {a_next, st.t, f_next, g_next, st.step_index + 1};
}

template <class T>
StdOrbitState<T> std_step_backward(const StdOrbitState<T>& st) {
  using detail::checked;
  const char* where = "std_step_backward";
  const auto& a = st.a;
  T f = checked<T>(st.f, "f", st.step_index, where);
  T f1 = checked<T>(st.f - 1, "f-1", st.step_index, where);
  T g_prev = -st.t + a[1] / f + a[3] / f1 - st.g;
  std::array<T, 4> a_prev{a[0] - 1, a[1] + 1, a[2] - 1, a[3] + 1};
  T gp = checked<T>(g_prev, "g", st.step_index - 1, where);
  T gpt = checked<T>(g_prev + st.t, "g+t", st.step_index - 1, where);
  T f_prev = 1 - a_prev[2] / gp - a_prev[0] / gpt - st.f;
  return {a_prev, st.t, f_prev, g_prev, st.step_index - 1};
}

/// Numerator of the second recurrence line at index m, as a function of x_m:
/// alpha s^2 x^2 + s(2m-1-alpha+beta+s) x - 2m - beta + 1.
template <class T>
T rec_second_numerator(const T& x, long m, const T& alpha, const T& beta, const T& s) {
  T mm(m);
  return alpha * s * s * x * x + s * (2 * mm - 1 - alpha + beta + s) * x - 2 * mm - beta + 1;
}

/// Forward half-map (x, y) -> (x_next, y) at index n.
template <class T>
T rec_half_forward_x(const T& x, const T& y, long n, const T& alpha, const T& beta, const T& s) {
  using detail::checked;
  const char* where = "rec_half_forward";
  T nn(n);
  T den = checked<T>(s * s * x * y * (y + alpha), "s^2 x y (y+alpha)", n, where);
  return (y - nn) * (y - nn - beta) / den;
}

/// Backward half-map (x, y) -> (x, y_prev) at index n. It is an involution in y.
template <class T>
T rec_half_backward_y(const T& x, const T& y, long n, const T& alpha, const T& beta, const T& s) {
  using detail::checked;
  T q = checked<T>(1 - s * x, "1-s x", n, "rec_half_backward");
  return -y - rec_second_numerator(x, n, alpha, beta, s) / (q * q);
}

template <class T>
RecOrbitState<T> rec_step_forward(const RecOrbitState<T>& st) {
  T x_next = rec_half_forward_x(st.x, st.y, st.n, st.alpha, st.beta, st.s);
  T y_next = rec_half_backward_y(x_next, st.y, st.n + 1, st.alpha, st.beta, st.s);
  return {st.alpha, st.beta, st.s, st.n + 1, x_next, y_next};
}

template <class T>
RecOrbitState<T> rec_step_backward(const RecOrbitState<T>& st) {
  T y_prev = rec_half_backward_y(st.x, st.y, st.n, st.alpha, st.beta, st.s);
  T x_prev = rec_half_forward_x(st.x, y_prev, st.n - 1, st.alpha, st.beta, st.s);
  return {st.alpha, st.beta, st.s, st.n - 1, x_prev, y_prev};
}

template <class T>
struct FGT {
  T f;
  T g;
  T t;
};

template <class T>
struct XYS {
  T x;
  T y;
  T s;
};

/// (x, y) at index n, time s -> (f, g, t) with t = -s.
template <class T>
FGT<T> to_fg(const T& x, const T& y, long n, const T& s) {
  T nn(n);
  T sx = s * x;
  T d1 = s * s * x;
  T d2 = (1 - sx) * y - nn;
  if (is_zero(d1)) throw IndeterminatePoint("s^2 x", "to_fg");
  if (is_zero(d2)) throw IndeterminatePoint("(1-s x) y - n", "to_fg");
  T f = (1 - sx) * (nn - y + sx * y) / d1;
  T g = s * (y - nn) / d2;
  return {f, g, T(-s)};
}

/// (f, g) at index n, time t -> (x, y, s) with s = -t.
template <class T>
XYS<T> to_xy(const T& f, const T& g, long n, const T& t) {
  T nn(n);
  T fgn = f * g + nn;
  T d = t * fgn;
  if (is_zero(d)) throw IndeterminatePoint("t (f g + n)", "to_xy");
  T x = -(f * (g + t) + nn) / d;
  T y = fgn * (g + t) / t;
  return {x, y, T(-t)};
}

/// Root variables attached to the orthogonal-polynomial orbit at index n:
/// (n+beta, -n, n+alpha, 1-n-alpha-beta).
template <class T>
std::array<T, 4> recurrence_root_variables(long n, const T& alpha, const T& beta) {
  T nn(n);
  return {nn + beta, -nn, nn + alpha, 1 - nn - alpha - beta};
}

struct EquivalenceOptions {
  /// Use the parameters of step n (rather than n+1) in the second dP line.
  /// Only for diagnostics; the half-step convention is the default.
  bool second_line_uses_old_parameters = false;
};

/// Maps the orthogonal-polynomial orbit (x_n, y_n), n = 1..n_max, to (f_n, g_n)
/// and checks both dP lines, the recurrence residuals and the word route.
/// Parameters are exact decimals; `digits` is the working precision.
VerificationReport verify_equivalence(const Rational& alpha, const Rational& beta, const Rational& s,
                                      int n_max, unsigned digits,
                                      EquivalenceOptions options = {});

/// Round trip to_xy(to_fg(.)) at random rational points, exact.
VerificationReport check_coordinate_round_trip(std::uint64_t seed, std::size_t trials);

/// Exact forward/backward and word-vs-direct checks for the standard equation.
VerificationReport check_standard_step(std::uint64_t seed, std::size_t trials);

}  // namespace sakai::painleve
