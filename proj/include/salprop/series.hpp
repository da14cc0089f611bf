#ifndef SALPROP_SERIES_HPP
#define SALPROP_SERIES_HPP

// Perturbative (short-time) expansion of the Salpeter propagator, split at
// the momentum cut p = m:
//   G1 = int_0^m e^{-it sqrt(m^2+p^2)} cos(px) dp
//      = m e^{-imt} sum_n g1^(n)(mt)/n! f_n(m x)          (odd n vanish)
//   G2 = int_m^inf e^{-it sqrt(m^2+p^2)} cos(px) dp
//      = (m/2) sum_n g2^(n)(mt)/n! [E_n(im(t-x)) + E_n(im(t+x))]
// and G = (e^{imt}/pi) (G1 + G2) in the same convention as the closed form
// (Hamiltonian sqrt(m^2+p^2) - m; see the calibration test).  The G2 block
// carries the entire light-cone singularity through E_0 and E_1.

#include <cmath>
#include <complex>

#include "salprop/errors.hpp"
#include "salprop/specfun.hpp"

namespace salprop {

struct SeriesEvaluation {
  Complex value{0.0, 0.0};
  int order_used = 0;
  Complex g1_partial{0.0, 0.0};  // already in the final (e^{imt}/pi) convention
  Complex g2_partial{0.0, 0.0};
  double last_term_magnitude = 0.0;
};

namespace detail {

inline void validate_series_args(double t, double m, int order_max,
                                 const char* who) {
  if (!(t > 0.0)) throw DomainError(std::string(who) + ": t must be positive");
  if (!(m > 0.0)) throw DomainError(std::string(who) + ": m must be positive");
  if (order_max < 0)
    throw DomainError(std::string(who) + ": order_max must be >= 0");
}

}  // namespace detail

// Partial sum of the small-momentum block G1 (defined above), through
// order_max.  Odd orders are identically zero and skipped.
inline Complex series_g1(double x, double t, double m, int order_max) {
  detail::validate_series_args(t, m, order_max, "series_g1");
  const double ax = std::abs(x);
  const SeriesCoefficients g1 = g1_coefficients(m * t, order_max);
  Complex sum(0.0, 0.0);
  double fact = 1.0;
  for (int n = 0; n <= order_max; ++n) {
    if (n > 0) fact *= n;
    if (n % 2 == 1) continue;
    sum += g1.values[n] / fact * f_n(n, m * ax);
  }
  return m * std::exp(Complex(0.0, -m * t)) * sum;
}

// Partial sum of the large-momentum block G2 through order_max.
inline Complex series_g2(double x, double t, double m, int order_max) {
  detail::validate_series_args(t, m, order_max, "series_g2");
  const double ax = std::abs(x);
  if (std::abs(ax - t) < 1e-14 * t)
    throw SingularityError("series_g2: E_n arguments vanish at |x| = t");
  const SeriesCoefficients g2 = g2_coefficients(m * t, order_max);
  const Complex zm(0.0, m * (t - ax));
  const Complex zp(0.0, m * (t + ax));
  Complex sum(0.0, 0.0);
  double fact = 1.0;
  for (int n = 0; n <= order_max; ++n) {
    if (n > 0) fact *= n;
    sum += g2.values[n] / fact * (expint_en(n, zm) + expint_en(n, zp));
  }
  return 0.5 * m * sum;
}

// Combined series evaluation in the main-text convention.
inline SeriesEvaluation series_propagator(double x, double t, double m,
                                          int order_max = 10) {
  detail::validate_series_args(t, m, order_max, "series_propagator");
  const Complex norm =
      std::exp(Complex(0.0, m * t)) / detail::kPi;  // global phase + 1/pi
  SeriesEvaluation ev;
  ev.order_used = order_max;
  ev.g1_partial = norm * series_g1(x, t, m, order_max);
  ev.g2_partial = norm * series_g2(x, t, m, order_max);
  ev.value = ev.g1_partial + ev.g2_partial;
  // Size of the last retained term pair, for validity rejection by callers.
  {
    const double ax = std::abs(x);
    const int n = order_max;
    const SeriesCoefficients g1 = g1_coefficients(m * t, n);
    const SeriesCoefficients g2 = g2_coefficients(m * t, n);
    double fact = 1.0;
    for (int k = 2; k <= n; ++k) fact *= k;
    double mag = 0.0;
    const int n1 = (n % 2 == 0) ? n : n - 1;  // last even g1 order
    double fact1 = 1.0;
    for (int k = 2; k <= n1; ++k) fact1 *= k;
    mag += std::abs(m * g1.values[n1] / fact1 * f_n(n1, m * ax));
    mag += std::abs(0.5 * m * g2.values[n] / fact *
                    (expint_en(n, Complex(0.0, m * (t - ax))) +
                     expint_en(n, Complex(0.0, m * (t + ax)))));
    ev.last_term_magnitude = mag / detail::kPi;
  }
  return ev;
}

}  // namespace salprop

#endif  // SALPROP_SERIES_HPP
