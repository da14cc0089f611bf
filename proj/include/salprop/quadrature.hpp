#ifndef SALPROP_QUADRATURE_HPP
#define SALPROP_QUADRATURE_HPP

// Adaptive quadrature built on a Gauss-Kronrod 15(7) panel rule:
//  - integrate_finite: worst-panel-first bisection on [a, b];
//  - integrate_semi_infinite_decaying: geometric panels for exponentially
//    decaying tails;
//  - integrate_oscillatory_cos: half-period partition at the cosine zeros
//    with iterated-mean (Euler) acceleration of the alternating tail;
//  - principal_value: symmetric pole excision with Richardson extrapolation
//    of the excision radius to zero.
// All routines report an error estimate and the evaluation count, and they
// throw rather than silently return garbage when their budget runs out.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <vector>

#include "salprop/errors.hpp"
#include "salprop/specfun.hpp"

namespace salprop {

struct QuadratureConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  int max_subdivisions = 2000;
  double tail_cutoff_exponent = 745.0;
};

struct QuadratureResult {
  Complex value{0.0, 0.0};
  double error_estimate = 0.0;
  long evaluations = 0;
  bool converged = false;
};

using Integrand = std::function<Complex(double)>;
using RealFunction = std::function<double(double)>;

namespace detail {

// Gauss-Kronrod 15-point nodes/weights on [-1, 1] (positive half; the rule
// is symmetric).  Even-indexed abscissae are the Kronrod extensions, odd
// ones the embedded 7-point Gauss nodes.
inline constexpr double kGK15Nodes[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
inline constexpr double kGK15WeightsK[8] = {
    0.02293532201052922, 0.06309209262997855, 0.1047900103222502,
    0.1406532597155259,  0.1690047266392679,  0.1903505780647854,
    0.2044329400752989,  0.2094821410847278};
inline constexpr double kGK15WeightsG[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694};

struct Panel {
  double a = 0.0, b = 0.0;
  Complex value{0.0, 0.0};
  double error = 0.0;
};

inline Panel gk15_panel(const Integrand& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  Complex k15 = kGK15WeightsK[7] * f(c);
  Complex g7 = kGK15WeightsG[3] * f(c);
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kGK15Nodes[i];
    const Complex pair = f(c - dx) + f(c + dx);
    k15 += kGK15WeightsK[i] * pair;
    if (i % 2 == 1) g7 += kGK15WeightsG[i / 2] * pair;
  }
  Panel p;
  p.a = a;
  p.b = b;
  p.value = h * k15;
  p.error = std::abs(h * (k15 - g7));
  return p;
}

}  // namespace detail

// Adaptive Gauss-Kronrod integration of f over the finite interval [a, b].
// Throws ConvergenceError once max_subdivisions panels fail to reach
// max(abs_tol, rel_tol * |value|).
inline QuadratureResult integrate_finite(const Integrand& f, double a,
                                         double b,
                                         const QuadratureConfig& cfg = {}) {
  if (!(std::isfinite(a) && std::isfinite(b)))
    throw DomainError("integrate_finite: endpoints must be finite");
  QuadratureResult res;
  if (a == b) {
    res.converged = true;
    return res;
  }
  double sign = 1.0;
  double lo = a, hi = b;
  if (lo > hi) {
    std::swap(lo, hi);
    sign = -1.0;
  }
  std::vector<detail::Panel> panels;
  panels.push_back(detail::gk15_panel(f, lo, hi));
  res.evaluations = 15;
  const auto worse = [](const detail::Panel& x, const detail::Panel& y) {
    return x.error < y.error;
  };
  std::make_heap(panels.begin(), panels.end(), worse);
  for (;;) {
    Complex total(0.0, 0.0);
    double err = 0.0;
    for (const auto& p : panels) {
      total += p.value;
      err += p.error;
    }
    const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total));
    if (err <= tol) {
      res.value = sign * total;
      res.error_estimate = err;
      res.converged = true;
      return res;
    }
    if (static_cast<int>(panels.size()) >= cfg.max_subdivisions)
      throw ConvergenceError(
          "integrate_finite: max_subdivisions exhausted (error " +
          std::to_string(err) + " > tol " + std::to_string(tol) + ")");
    std::pop_heap(panels.begin(), panels.end(), worse);
    const detail::Panel worst = panels.back();
    panels.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    panels.push_back(detail::gk15_panel(f, worst.a, mid));
    std::push_heap(panels.begin(), panels.end(), worse);
    panels.push_back(detail::gk15_panel(f, mid, worst.b));
    std::push_heap(panels.begin(), panels.end(), worse);
    res.evaluations += 30;
  }
}

// Integral of f over [a, inf) for integrands that eventually decay
// exponentially at roughly decay_rate_hint.  Panels grow geometrically;
// the sum stops once two consecutive panel contributions are negligible.
// Throws DecayError when 20 consecutive panels fail to shrink.
inline QuadratureResult integrate_semi_infinite_decaying(
    const Integrand& f, double a, double decay_rate_hint,
    const QuadratureConfig& cfg = {}) {
  if (!(decay_rate_hint > 0.0) || !std::isfinite(decay_rate_hint))
    decay_rate_hint = 1.0;
  QuadratureResult res;
  const double w0 =
      std::clamp(1.0 / decay_rate_hint, 1e-8, 1e8);
  QuadratureConfig panel_cfg = cfg;
  panel_cfg.abs_tol = cfg.abs_tol / 20.0;
  double cur = a;
  double width = w0;
  Complex total(0.0, 0.0);
  double err = 0.0;
  double prev_mag = std::numeric_limits<double>::max();
  int growing = 0;
  int small_in_a_row = 0;
  for (int k = 0; k < 600; ++k) {
    const QuadratureResult part =
        integrate_finite(f, cur, cur + width, panel_cfg);
    total += part.value;
    err += part.error_estimate;
    res.evaluations += part.evaluations;
    const double mag = std::abs(part.value);
    if (mag >= prev_mag && mag > 0.0) {
      if (++growing >= 20)
        throw DecayError(
            "integrate_semi_infinite_decaying: tail is not decaying");
    } else {
      growing = 0;
    }
    prev_mag = mag;
    const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total));
    if (mag < 0.1 * tol) {
      if (++small_in_a_row >= 2) {
        res.value = total;
        res.error_estimate = err + mag;
        res.converged = err + mag <= tol;
        return res;
      }
    } else {
      small_in_a_row = 0;
    }
    cur += width;
    width *= 1.6;
  }
  throw ConvergenceError(
      "integrate_semi_infinite_decaying: panel budget exhausted");
}

// Integral of envelope(p) * cos(omega * p) over [a, inf) for a smooth,
// eventually exponentially decaying envelope.  omega ~ 0 falls back to the
// plain decaying routine.  Otherwise the range is cut at the cosine zeros
// and the alternating half-period sums are accelerated with the iterated
// averaging triangle; the roundoff floor eps * sum |u_k| enters the error
// estimate so that heavily cancelling tails report honest uncertainty.
inline QuadratureResult integrate_oscillatory_cos(
    const RealFunction& envelope, double omega, double a,
    const QuadratureConfig& cfg = {}, double decay_rate_hint = 1.0) {
  if (!(omega >= 0.0))
    throw DomainError("integrate_oscillatory_cos: omega must be >= 0");
  const Integrand g = [&](double p) {
    return Complex(envelope(p) * std::cos(omega * p), 0.0);
  };
  if (omega < 1e-12)
    return integrate_semi_infinite_decaying(g, a, decay_rate_hint, cfg);

  QuadratureResult res;
  QuadratureConfig panel_cfg = cfg;
  panel_cfg.abs_tol = cfg.abs_tol / 100.0;
  const double half = detail::kPi / omega;
  // First cosine zero strictly past a.
  const long k0 = static_cast<long>(std::ceil(a * omega / detail::kPi - 0.5));
  double z = (static_cast<double>(k0) + 0.5) * detail::kPi / omega;
  while (z <= a) z += half;
  double head_err = 0.0;
  Complex head(0.0, 0.0);
  {
    const QuadratureResult part = integrate_finite(g, a, z, panel_cfg);
    head = part.value;
    head_err = part.error_estimate;
    res.evaluations += part.evaluations;
  }
  std::vector<double> partial;  // partial sums of Re(head) + sum u_k
  partial.reserve(256);
  partial.push_back(head.real());
  double running = head.real();
  double abs_terms = std::abs(head.real());
  double quad_err = head_err;
  double prev_u = 0.0;
  int nonalt = 0;
  double est = running, prev_est = std::numeric_limits<double>::max();
  int stable = 0;
  const int max_terms = 2000;
  for (int k = 0; k < max_terms; ++k) {
    const QuadratureResult part = integrate_finite(g, z, z + half, panel_cfg);
    res.evaluations += part.evaluations;
    const double u = part.value.real();
    quad_err += part.error_estimate;
    running += u;
    abs_terms += std::abs(u);
    partial.push_back(running);
    z += half;
    const double floor = 8.0 * std::numeric_limits<double>::epsilon() * abs_terms;
    if (k > 0 && std::abs(u) > 100.0 * floor && u * prev_u > 0.0) {
      if (++nonalt >= 5)
        throw AccelerationError(
            "integrate_oscillatory_cos: half-period sums are not alternating");
    }
    prev_u = u;
    // Direct convergence: tail terms themselves negligible.
    const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(running));
    if (std::abs(u) < 0.1 * tol && k > 0) {
      res.value = Complex(running, 0.0);
      res.error_estimate = quad_err + std::abs(u) + floor;
      res.converged = res.error_estimate <= tol;
      return res;
    }
    // Averaging-triangle acceleration over the trailing window.
    if (partial.size() >= 4) {
      const std::size_t w = std::min<std::size_t>(partial.size(), 30);
      std::vector<double> tri(partial.end() - w, partial.end());
      while (tri.size() > 1) {
        for (std::size_t i = 0; i + 1 < tri.size(); ++i)
          tri[i] = 0.5 * (tri[i] + tri[i + 1]);
        tri.pop_back();
      }
      prev_est = est;
      est = tri[0];
      const double tol_e = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(est));
      if (std::abs(est - prev_est) < 0.25 * tol_e) {
        if (++stable >= 2) {
          res.value = Complex(est, 0.0);
          res.error_estimate =
              quad_err + std::abs(est - prev_est) + floor;
          res.converged = res.error_estimate <= tol_e;
          return res;
        }
      } else {
        stable = 0;
      }
    }
  }
  throw ConvergenceError("integrate_oscillatory_cos: term budget exhausted");
}

// Cauchy principal value of f over [a, b] with simple poles at the given
// locations.  Integrates with symmetric excisions eps, eps/2, eps/4 and
// Richardson-extrapolates the excision radius to zero.
inline QuadratureResult principal_value(const Integrand& f,
                                        std::vector<double> poles, double a,
                                        double b,
                                        const QuadratureConfig& cfg = {}) {
  if (poles.empty()) return integrate_finite(f, a, b, cfg);
  std::sort(poles.begin(), poles.end());
  double minsep = std::numeric_limits<double>::max();
  for (std::size_t i = 0; i < poles.size(); ++i) {
    if (!(poles[i] > a && poles[i] < b))
      throw PoleSeparationError(
          "principal_value: pole not strictly inside the interval");
    minsep = std::min(minsep, poles[i] - a);
    minsep = std::min(minsep, b - poles[i]);
    if (i > 0) minsep = std::min(minsep, poles[i] - poles[i - 1]);
  }
  const double eps0 = 1e-3 * minsep;
  if (!(eps0 > 0.0) || minsep <= 16.0 * std::numeric_limits<double>::epsilon() *
                                     std::max(std::abs(a), std::abs(b)))
    throw PoleSeparationError("principal_value: poles too close together");

  QuadratureResult res;
  QuadratureConfig seg_cfg = cfg;
  seg_cfg.abs_tol = cfg.abs_tol / 50.0;
  double quad_err = 0.0;
  const auto excised = [&](double eps) {
    Complex total(0.0, 0.0);
    double left = a;
    for (const double p : poles) {
      const QuadratureResult part =
          integrate_finite(f, left, p - eps, seg_cfg);
      total += part.value;
      quad_err += part.error_estimate;
      res.evaluations += part.evaluations;
      left = p + eps;
    }
    const QuadratureResult part = integrate_finite(f, left, b, seg_cfg);
    total += part.value;
    quad_err += part.error_estimate;
    res.evaluations += part.evaluations;
    return total;
  };
  const double e0 = eps0, e1 = 0.5 * eps0, e2 = 0.25 * eps0;
  const Complex x0 = excised(e0), x1 = excised(e1), x2 = excised(e2);
  // Neville extrapolation of (eps, X(eps)) to eps = 0.
  const Complex p01 = x1 + (x1 - x0) * (e1 / (e0 - e1));
  const Complex p12 = x2 + (x2 - x1) * (e2 / (e1 - e2));
  const Complex p012 = p12 + (p12 - p01) * (e2 / (e0 - e2));
  res.value = p012;
  const double disagree = std::abs(p012 - p12);
  res.error_estimate = quad_err + disagree;
  const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(p012));
  res.converged = res.error_estimate <= tol;
  if (disagree > 1000.0 * std::max(tol, 1e-300))
    throw ConvergenceError(
        "principal_value: Richardson extrapolants disagree beyond tolerance");
  return res;
}

}  // namespace salprop

#endif  // SALPROP_QUADRATURE_HPP
