#ifndef SALPROP_SALPETER_HPP
#define SALPROP_SALPETER_HPP

// Relativistic quantum propagator in 1+1 dimensions for the Hamiltonian
// H = sqrt(m^2 + p^2) - m, i.e.
//   G(x, t) = (e^{i m t} / 2 pi) int e^{-i sqrt(m^2+p^2) t + i p x} dp.
// Three independent evaluation routes are provided (closed form in Bessel
// functions, split momentum-space integral inside the cone, exponential
// integral outside the cone) plus the non-relativistic reference amplitude
// and the leading light-cone asymptote.  G is even in x; all routines fold
// x to |x|.

#include <cmath>
#include <complex>
#include <limits>

#include "salprop/errors.hpp"
#include "salprop/quadrature.hpp"
#include "salprop/specfun.hpp"

namespace salprop {

struct PropagatorQuery {
  double x = 0.0;
  double t = 0.0;
  double m = 0.0;
};

namespace detail {

inline void validate_query(const PropagatorQuery& q, const char* who) {
  if (!(q.t > 0.0))
    throw DomainError(std::string(who) + ": t must be positive");
  if (q.m < 0.0)
    throw DomainError(std::string(who) + ": m must be non-negative");
}

inline void reject_cone(const PropagatorQuery& q, const char* who) {
  if (std::abs(std::abs(q.x) - q.t) < 1e-12 * q.t)
    throw LightConeSingularity(std::string(who) +
                               ": |x| = t is a non-removable singularity");
}

}  // namespace detail

namespace detail {

// Inside-cone Hankel convention: the closed form is
//   G = -(m t e^{imt} / 2 s) * [sign] * H(m s),  H in {H1^(1), H1^(2)},
// and the source equations disagree about which Hankel kind (equivalently,
// the sign of its argument) appears.  The convention is fixed once at
// startup by demanding agreement with the inner integral representation at
// (x, t, m) = (0.5, 1, 1); the winner is reported via
// salpeter_hankel_convention().
struct HankelConvention {
  double sign = 1.0;       // overall sign of the Hankel term
  double y1_sign = -1.0;   // -1: H1^(2) = J1 - i Y1;  +1: H1^(1)
  const char* name = "";
};

inline Complex salpeter_closed_inside(double x, double t, double m,
                                      const HankelConvention& c) {
  const double s = std::sqrt((t - x) * (t + x));
  const Complex h(bessel_j1(m * s), c.y1_sign * bessel_y1(m * s));
  return -c.sign * (m * t / (2.0 * s)) * std::exp(Complex(0.0, m * t)) * h;
}

const HankelConvention& hankel_convention();  // defined below

}  // namespace detail

// Closed-form propagator.  With s the invariant distance from the cone:
//   |x| > t:  G = i m t e^{imt} K1(m s) / (pi s),          s = sqrt(x^2-t^2)
//   |x| < t:  G = -(m t e^{imt} / 2 s) H(m s), H calibrated (see above),
//                                                          s = sqrt(t^2-x^2)
//   m = 0:    G = i t / (pi (x^2 - t^2)).
inline Complex salpeter_closed(const PropagatorQuery& q) {
  detail::validate_query(q, "salpeter_closed");
  detail::reject_cone(q, "salpeter_closed");
  const double x = std::abs(q.x), t = q.t, m = q.m;
  if (m == 0.0) return Complex(0.0, t / (detail::kPi * (x * x - t * t)));
  if (x > t) {
    const double s = std::sqrt((x - t) * (x + t));
    bool under = false;
    const double k1 = bessel_k1(m * s, &under);
    return Complex(0.0, 1.0) * (m * t / (detail::kPi * s)) *
           std::exp(Complex(0.0, m * t)) * k1;
  }
  return detail::salpeter_closed_inside(x, t, m, detail::hankel_convention());
}

// Inside-cone momentum integral (|x| < t):
//   G = e^{imt}/(i pi) [ int_0^m e^{-i sqrt(m^2-q^2) t} cosh(q x) dq
//                      + int_m^inf e^{-sqrt(q^2-m^2) t} cosh(q x) dq ].
// The tail exponents are assembled in the cancellation-free form
// q(x - t) + t m^2 / (q + sqrt(q^2 - m^2)).
inline QuadratureResult salpeter_integral_inner(
    const PropagatorQuery& q, const QuadratureConfig& cfg = {}) {
  detail::validate_query(q, "salpeter_integral_inner");
  const double x = std::abs(q.x), t = q.t, m = q.m;
  if (!(x < t))
    throw DomainError("salpeter_integral_inner: requires |x| < t");
  QuadratureResult res;
  Complex sum(0.0, 0.0);
  if (m > 0.0) {
    const Integrand osc = [=](double p) {
      const double root = std::sqrt((m - p) * (m + p)) * t;
      return Complex(std::cos(root), -std::sin(root)) * std::cosh(p * x);
    };
    const QuadratureResult part = integrate_finite(osc, 0.0, m, cfg);
    sum += part.value;
    res.error_estimate += part.error_estimate;
    res.evaluations += part.evaluations;
    res.converged = part.converged;
  } else {
    res.converged = true;
  }
  const double cut = cfg.tail_cutoff_exponent;
  const Integrand tail = [=](double p) {
    const double rm = std::sqrt(std::max(0.0, (p - m) * (p + m)));
    const double shift = t * m * m / (p + rm);  // = t (p - sqrt(p^2-m^2))
    const double e1 = p * (x - t) + shift;
    const double e2 = -p * (x + t) + shift;
    return Complex(0.5 * (safe_exp(e1, cut) + safe_exp(e2, cut)), 0.0);
  };
  const QuadratureResult part =
      integrate_semi_infinite_decaying(tail, m, t - x, cfg);
  sum += part.value;
  res.error_estimate += part.error_estimate;
  res.evaluations += part.evaluations;
  res.converged = res.converged && part.converged;
  // 1/(i pi) = -i/pi
  res.value = Complex(0.0, -1.0 / detail::kPi) *
              std::exp(Complex(0.0, m * t)) * sum;
  res.error_estimate /= detail::kPi;
  return res;
}

// Outside-cone integral (|x| > t):
//   G = (i e^{imt} / pi) int_m^inf sinh(sqrt(q^2-m^2) t) e^{-q x} dq,
// assembled as half the difference of two pure exponentials with the
// stable exponent -q(x - t) - t m^2 / (q + sqrt(q^2 - m^2)).
inline QuadratureResult salpeter_integral_outer(
    const PropagatorQuery& q, const QuadratureConfig& cfg = {}) {
  detail::validate_query(q, "salpeter_integral_outer");
  const double x = std::abs(q.x), t = q.t, m = q.m;
  if (!(x > t))
    throw DomainError("salpeter_integral_outer: requires |x| > t");
  const double cut = cfg.tail_cutoff_exponent;
  const Integrand f = [=](double p) {
    const double rm = std::sqrt(std::max(0.0, (p - m) * (p + m)));
    const double shift = t * m * m / (p + rm);
    const double eplus = -p * (x - t) - shift;   // sqrt(q^2-m^2) t - q x
    const double eminus = -p * (x + t) + shift;  // -sqrt(q^2-m^2) t - q x
    return Complex(0.5 * (safe_exp(eplus, cut) - safe_exp(eminus, cut)), 0.0);
  };
  QuadratureResult res = integrate_semi_infinite_decaying(f, m, x - t, cfg);
  res.value *= Complex(0.0, 1.0 / detail::kPi) *
               std::exp(Complex(0.0, q.m * q.t));
  res.error_estimate /= detail::kPi;
  return res;
}

namespace detail {

inline const HankelConvention& hankel_convention() {
  static const HankelConvention chosen = [] {
    const PropagatorQuery cal{0.5, 1.0, 1.0};
    const Complex target = salpeter_integral_inner(cal).value;
    const HankelConvention candidates[] = {
        {+1.0, -1.0, "+H1(2)"},
        {-1.0, -1.0, "-H1(2)"},
        {+1.0, +1.0, "+H1(1)"},
        {-1.0, +1.0, "-H1(1)"},
    };
    const HankelConvention* best = &candidates[0];
    double best_dev = std::numeric_limits<double>::max();
    for (const auto& c : candidates) {
      const double dev =
          std::abs(salpeter_closed_inside(0.5, 1.0, 1.0, c) - target);
      if (dev < best_dev) {
        best_dev = dev;
        best = &c;
      }
    }
    if (best_dev > 1e-2 * std::abs(target))
      throw SignCalibrationError(
          "salpeter_closed: no Hankel convention matches the inner integral");
    HankelConvention out = *best;
    return out;
  }();
  return chosen;
}

}  // namespace detail

// Name of the inside-cone Hankel convention selected at startup.
inline const char* salpeter_hankel_convention() {
  return detail::hankel_convention().name;
}

// Non-relativistic (Schroedinger) free-particle amplitude for H = p^2/2m:
//   G = sqrt(m / (2 pi t)) e^{-i pi/4} e^{i m x^2 / (2 t)}.
inline Complex salpeter_classical(const PropagatorQuery& q) {
  detail::validate_query(q, "salpeter_classical");
  if (!(q.m > 0.0))
    throw DomainError("salpeter_classical: m must be positive");
  const double amp = std::sqrt(q.m / (2.0 * detail::kPi * q.t));
  const Complex phase =
      std::exp(Complex(0.0, q.m * q.x * q.x / (2.0 * q.t) - 0.25 * detail::kPi));
  return amp * phase;
}

// Leading behaviour near the forward light cone, d = t - |x|, |d| << t:
//   G ~ (e^{imt}/pi) [ 1/(2 i d) + (i m^2 t / 4) log(i m d) ],
// valid on both sides of the cone through the principal branch of the log.
inline Complex salpeter_singular_asymptote(const PropagatorQuery& q) {
  detail::validate_query(q, "salpeter_singular_asymptote");
  const double d = q.t - std::abs(q.x);
  if (d == 0.0)
    throw LightConeSingularity("salpeter_singular_asymptote: d = 0");
  if (std::abs(d) > 0.1 * q.t)
    throw DomainError(
        "salpeter_singular_asymptote: valid only for |t - |x|| <= 0.1 t");
  const Complex i(0.0, 1.0);
  Complex bracket = 1.0 / (2.0 * i * d);
  if (q.m > 0.0)
    bracket += i * q.m * q.m * q.t / 4.0 * std::log(i * q.m * d);
  return std::exp(Complex(0.0, q.m * q.t)) / detail::kPi * bracket;
}

}  // namespace salprop

#endif  // SALPROP_SALPETER_HPP
