#ifndef SALPROP_WAVEFUNC_HPP
#define SALPROP_WAVEFUNC_HPP

// One-shot evolution of a compact-support initial wave function through
// the singular Salpeter kernel:
//   psi(t, x) = PV int G(x', t) psi0(x - x') dx'
//               + (1/2)[psi0(x - t) + psi0(x + t)] e^{imt}.
// The kernel has first-order poles at x' = +-t with residue coefficients
// A(+-t) = +- i e^{imt} / (2 pi); inside the convolution window the pole
// part A/(x' -+ t) is split off analytically and handled by the
// principal-value rule, while the (log-singular but integrable) remainder
// goes through plain adaptive quadrature.

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "salprop/errors.hpp"
#include "salprop/quadrature.hpp"
#include "salprop/salpeter.hpp"

namespace salprop {

struct GridSpec {
  double x_min = 0.0;
  double x_max = 0.0;
  int n_points = 0;
};

struct WaveState {
  std::vector<double> grid;
  std::vector<Complex> amplitudes;
  double time = 0.0;
  double mass = 0.0;
  double delta = 0.0;
};

// psi0(x) = sqrt(2/delta) cos(pi x / delta) on |x| < delta/2, else 0.
inline std::function<double(double)> initial_cosine_bump(double delta) {
  if (!(delta > 0.0))
    throw DomainError("initial_cosine_bump: delta must be positive");
  return [delta](double x) -> double {
    if (std::abs(x) >= 0.5 * delta) return 0.0;
    return std::sqrt(2.0 / delta) * std::cos(detail::kPi * x / delta);
  };
}

namespace detail {

// Evolved amplitude at a single point x >= 0.
inline Complex evolve_point(double x, double delta, double t, double m,
                            const QuadratureConfig& cfg) {
  const auto psi0 = initial_cosine_bump(delta);
  const double a = x - 0.5 * delta;
  const double b = x + 0.5 * delta;
  const Complex phase = std::exp(Complex(0.0, m * t));
  const Complex a_plus = Complex(0.0, 1.0) * phase / (2.0 * kPi);
  // Poles of G(x', t) at x' = +-t that fall inside the window, with their
  // residue coefficients: G ~ A_p / (x' - p).
  struct Pole {
    double p;
    Complex coeff;
  };
  std::vector<Pole> inside, boundary;
  const double margin = 1e-6 * delta;
  for (const double sgn : {+1.0, -1.0}) {
    const double p = sgn * t;
    if (p > a + margin && p < b - margin)
      inside.push_back({p, sgn * a_plus});
    else if (p > a - margin && p <= a + margin)
      boundary.push_back({p, sgn * a_plus});
    else if (p >= b - margin && p < b + margin)
      boundary.push_back({p, sgn * a_plus});
  }
  // Quadrature nodes can land exactly on the cone (dyadic bisection of a
  // window with dyadic endpoints); nudge such nodes off the pole and use
  // the nudged coordinate consistently for the kernel and the subtracted
  // pole term.
  const auto nudged = [&](double xp) -> double {
    const double d = std::abs(std::abs(xp) - t);
    if (d < 4e-12 * t) {
      const double s = (std::abs(xp) > t) ? 1.0 : -1.0;
      xp = (xp >= 0.0) ? (t + s * 4e-12 * t) : -(t + s * 4e-12 * t);
    }
    return xp;
  };
  Complex result(0.0, 0.0);
  if (inside.empty()) {
    // No interior pole: G * psi0 is finite (psi0 vanishes at any boundary
    // pole); integrate directly.
    const Integrand f = [&](double xp) {
      xp = nudged(xp);
      return salpeter_closed({xp, t, m}) * psi0(x - xp);
    };
    result += integrate_finite(f, a, b, cfg).value;
  } else {
    // Smooth remainder R = G - sum A_p/(x'-p), integrable across the cone.
    const Integrand smooth = [&](double xp) {
      xp = nudged(xp);
      Complex g = salpeter_closed({xp, t, m});
      for (const auto& pl : inside) g -= pl.coeff / (xp - pl.p);
      return g * psi0(x - xp);
    };
    result += integrate_finite(smooth, a, b, cfg).value;
    // Pure pole part by the principal-value rule.
    std::vector<double> poles;
    for (const auto& pl : inside) poles.push_back(pl.p);
    const Integrand polepart = [&](double xp) {
      Complex s(0.0, 0.0);
      for (const auto& pl : inside) s += pl.coeff / (xp - pl.p);
      return s * psi0(x - xp);
    };
    result += principal_value(polepart, poles, a, b, cfg).value;
  }
  (void)boundary;  // boundary poles are killed by psi0 -> 0; direct path
  // Residue (semicircle) corrections.
  result += 0.5 * phase * (psi0(x - t) + psi0(x + t));
  return result;
}

}  // namespace detail

// Evolve the cosine bump to time t on a uniform grid.  For a symmetric
// grid the x >= 0 half is computed and mirrored (the state is even).
inline WaveState evolve(double delta, double t, double m,
                        const GridSpec& spec,
                        const QuadratureConfig& cfg = {}) {
  if (!(delta > 0.0) || !(t > 0.0) || m < 0.0)
    throw DomainError("evolve: need delta > 0, t > 0, m >= 0");
  if (spec.n_points < 2 || !(spec.x_max > spec.x_min))
    throw DomainError("evolve: invalid grid spec");
  const double front = t + 0.5 * delta;  // sharp edge of the evolved state
  if (spec.x_min > -front + 0.1 * delta || spec.x_max < front - 0.1 * delta)
    throw GridError("evolve: grid misses the support of the evolved state");
  WaveState st;
  st.time = t;
  st.mass = m;
  st.delta = delta;
  const int n = spec.n_points;
  const double h = (spec.x_max - spec.x_min) / (n - 1);
  st.grid.resize(n);
  st.amplitudes.assign(n, Complex(0.0, 0.0));
  for (int i = 0; i < n; ++i) st.grid[i] = spec.x_min + i * h;
  const bool symmetric =
      std::abs(spec.x_min + spec.x_max) < 1e-12 * (spec.x_max - spec.x_min);
  for (int i = 0; i < n; ++i) {
    const double x = st.grid[i];
    if (symmetric && x < 0.0) continue;
    st.amplitudes[i] = detail::evolve_point(std::abs(x), delta, t, m, cfg);
  }
  if (symmetric) {
    for (int i = 0; i < n; ++i)
      if (st.grid[i] < 0.0) st.amplitudes[i] = st.amplitudes[n - 1 - i];
  }
  return st;
}

// Trapezoid integral of |psi|^2 over the grid.
inline double total_probability(const WaveState& st) {
  if (st.grid.size() < 2)
    throw DomainError("total_probability: need at least two grid points");
  const double h = st.grid[1] - st.grid[0];
  double sum = 0.0;
  for (std::size_t i = 0; i < st.grid.size(); ++i) {
    const double w =
        (i == 0 || i + 1 == st.grid.size()) ? 0.5 : 1.0;
    sum += w * std::norm(st.amplitudes[i]);
  }
  return sum * h;
}

}  // namespace salprop

#endif  // SALPROP_WAVEFUNC_HPP
