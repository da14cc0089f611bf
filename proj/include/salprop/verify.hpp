#ifndef SALPROP_VERIFY_HPP
#define SALPROP_VERIFY_HPP

// Cross-method and cross-model validation suites: the scaling symmetry
// G(lambda x, lambda t, m) = lambda^{-1} G(x, t, lambda m), the Wick
// bridge between the diffusion and quantum kernels, the Klein-Gordon
// residual of the closed form, and a closed-vs-integral-vs-series
// agreement sweep.  Each suite returns a machine-readable report.

#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "salprop/baeumer.hpp"
#include "salprop/quadrature.hpp"
#include "salprop/salpeter.hpp"
#include "salprop/series.hpp"

namespace salprop {

struct ValidationCase {
  std::string inputs;
  std::string relation;
  double deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
};

struct ValidationReport {
  std::string suite;
  std::vector<ValidationCase> cases;
  double worst_deviation = 0.0;
  std::map<std::string, std::string> sign_calibrations;

  void add(ValidationCase c) {
    c.pass = c.deviation <= c.tolerance;
    if (c.deviation > worst_deviation) worst_deviation = c.deviation;
    cases.push_back(std::move(c));
  }
  bool all_pass() const {
    for (const auto& c : cases)
      if (!c.pass) return false;
    return true;
  }
};

namespace detail {

inline std::string fmt_point(double x, double t, double m) {
  std::ostringstream os;
  os << "x=" << x << " t=" << t << " m=" << m;
  return os.str();
}

inline void record_signs(ValidationReport& r) {
  r.sign_calibrations["salpeter_closed_hankel"] = salpeter_hankel_convention();
  r.sign_calibrations["baeumer_outer_sigma"] =
      (baeumer_outer_sign() > 0) ? "+1" : "-1";
}

}  // namespace detail

// Scaling symmetry check for both models on the given (x, t) points.
inline ValidationReport check_scaling(double m, double lambda,
                                      const std::vector<std::pair<double, double>>& points,
                                      double tolerance = 1e-9) {
  if (!(lambda > 0.0) || !(m > 0.0))
    throw DomainError("check_scaling: lambda and m must be positive");
  ValidationReport r;
  r.suite = "scaling";
  detail::record_signs(r);
  for (const auto& [x, t] : points) {
    // Skip points that the scaling maps onto the light cone band.
    if (std::abs(std::abs(x) - t) < 1e-9 * t) {
      ValidationCase c;
      c.inputs = detail::fmt_point(x, t, m);
      c.relation = "skipped (on light cone)";
      c.tolerance = tolerance;
      c.note = "singular point skipped";
      r.add(std::move(c));
      continue;
    }
    {
      const Complex lhs = salpeter_closed({lambda * x, lambda * t, m});
      const Complex rhs = salpeter_closed({x, t, lambda * m}) / lambda;
      ValidationCase c;
      c.inputs = detail::fmt_point(x, t, m) + " lambda=" + std::to_string(lambda);
      c.relation = "salpeter: G(lx,lt,m) = G(x,t,lm)/l";
      c.deviation = std::abs(lhs - rhs) / std::abs(rhs);
      c.tolerance = tolerance;
      r.add(std::move(c));
    }
    {
      const double lhs = baeumer_closed({lambda * x, lambda * t, m});
      const double rhs = baeumer_closed({x, t, lambda * m}) / lambda;
      ValidationCase c;
      c.inputs = detail::fmt_point(x, t, m) + " lambda=" + std::to_string(lambda);
      c.relation = "baeumer: G(lx,lt,m) = G(x,t,lm)/l";
      c.deviation = std::abs(lhs - rhs) / std::abs(rhs);
      c.tolerance = tolerance;
      r.add(std::move(c));
    }
  }
  return r;
}

// Wick bridge: the diffusion kernel equals the quantum kernel continued to
// imaginary time.  Checked three ways: (a) the outer integral
// representations under sinh(iz) = i sin z, which gives
// G_B(x, t) = -e^{2mt} G_S(x, it); (b) the closed K1 forms, an exact
// identity; (c) the massless closed forms.
inline ValidationReport check_wick(
    const std::vector<std::array<double, 3>>& points,
    double tol_numeric = 1e-6, double tol_closed = 1e-12) {
  ValidationReport r;
  r.suite = "wick";
  detail::record_signs(r);
  for (const auto& p : points) {
    const double x = p[0], t = p[1], m = p[2];
    if (!(x > t))
      throw DomainError("check_wick: points must satisfy x > t");
    // (a) Integral representations.  G_S(x, it) evaluated through the
    // outer Salpeter integrand continued to imaginary time:
    //   sinh(sqrt(q^2-m^2) * it) = i sin(sqrt(q^2-m^2) t)
    //   => G_S(x, it) = (i e^{-mt}/pi) * i * I = -(e^{-mt}/pi) I,
    // with I = int_m^inf sin(sqrt(q^2-m^2) t) e^{-qx} dq, so that
    //   G_B = (e^{mt}/pi) I = -e^{2mt} G_S(x, it).
    {
      const double gb = baeumer_integral_outer({x, t, m}).value.real();
      const Integrand f = [=](double q) {
        const double rm = std::sqrt(std::max(0.0, (q - m) * (q + m)));
        return Complex(std::sin(rm * t) * safe_exp(-q * x), 0.0);
      };
      const double integral =
          integrate_semi_infinite_decaying(f, m, x).value.real();
      const double gs_it = -safe_exp(-m * t) / detail::kPi * integral;
      const double rhs = -safe_exp(2.0 * m * t) * gs_it;
      ValidationCase c;
      c.inputs = detail::fmt_point(x, t, m);
      c.relation = "G_B(x,t) = -e^{2mt} G_S(x,it), integral route";
      c.deviation = std::abs(gb - rhs) / std::abs(gb);
      c.tolerance = tol_numeric;
      r.add(std::move(c));
    }
    // (b) Closed K1 forms under the polar substitution r = sqrt(x^2+t^2),
    // cos(theta) = t/r: both sides reduce to (m/pi) cos(theta) e^{m r
    // cos(theta)} K1(m r).
    if (m > 0.0) {
      const double gb = baeumer_closed({x, t, m});
      const double rr = std::hypot(x, t);
      const double ct = t / rr;
      const double polar =
          m / detail::kPi * ct * safe_exp(m * rr * ct) * bessel_k1(m * rr);
      ValidationCase c;
      c.inputs = detail::fmt_point(x, t, m);
      c.relation = "closed K1 polar identity";
      c.deviation = std::abs(gb - polar) / std::abs(gb);
      c.tolerance = tol_closed;
      r.add(std::move(c));
    }
    // (c) Massless forms: G_B = -G_S(x, it) with G_S = i tau/(pi(x^2-tau^2))
    // at tau = it, an exact algebraic identity (the -e^{2mt} factor of the
    // bridge reduces to -1 at m = 0).
    {
      const double gb = baeumer_closed({x, t, 0.0});
      const Complex tau(0.0, t);
      const Complex gs_it =
          Complex(0.0, 1.0) * tau / (detail::kPi * (x * x - tau * tau));
      ValidationCase c;
      c.inputs = detail::fmt_point(x, t, 0.0);
      c.relation = "massless Wick identity";
      c.deviation = std::abs(Complex(gb, 0.0) + gs_it) / gb;
      c.tolerance = tol_closed;
      r.add(std::move(c));
    }
  }
  return r;
}

namespace detail {

// (-d^2/dx^2 + d^2/dt^2 + m^2) G by 5-point central cross stencil.
// The evolution kernel subtracts the rest energy from the Hamiltonian, so
// the closed form carries a rest phase e^{imt}; the Klein-Gordon identity
// holds for the unshifted kernel e^{-imt} G, which is what the stencil
// samples.
inline double kg_residual(double x, double t, double m, double h) {
  const auto G = [&](double xx, double tt) {
    return std::exp(Complex(0.0, -m * tt)) * salpeter_closed({xx, tt, m});
  };
  const Complex g0 = G(x, t);
  const Complex dxx =
      (G(x + h, t) - 2.0 * g0 + G(x - h, t)) / (h * h);
  const Complex dtt =
      (G(x, t + h) - 2.0 * g0 + G(x, t - h)) / (h * h);
  return std::abs(-dxx + dtt + m * m * g0);
}

}  // namespace detail

// Klein-Gordon residual: the closed form must satisfy
// (-dxx + dtt + m^2) G = 0; the finite-difference residual must vanish at
// second order in h.
inline ValidationReport check_klein_gordon(
    const std::vector<std::pair<double, double>>& points, double m,
    const std::vector<double>& h_list, double order_tol = 0.2,
    double residual_tol_factor = 1e-4) {
  if (h_list.size() < 2)
    throw DomainError("check_klein_gordon: need at least two step sizes");
  ValidationReport r;
  r.suite = "kg";
  detail::record_signs(r);
  for (const auto& [x, t] : points) {
    std::vector<double> res;
    for (const double h : h_list)
      res.push_back(detail::kg_residual(x, t, m, h));
    // Least-squares slope of ln(residual) vs ln(h).
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const int n = static_cast<int>(h_list.size());
    for (int i = 0; i < n; ++i) {
      const double lx = std::log(h_list[i]), ly = std::log(res[i]);
      sx += lx;
      sy += ly;
      sxx += lx * lx;
      sxy += lx * ly;
    }
    const double order = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double scale =
        (m > 0.0) ? m * m * std::abs(salpeter_closed({x, t, m}))
                  : std::abs(salpeter_closed({x, t, m}));
    {
      ValidationCase c;
      c.inputs = detail::fmt_point(x, t, m);
      c.relation = "KG residual order ~ 2";
      // When the residual already sits at roundoff (the stencil cancels
      // the solution exactly, e.g. the massless d'Alembert form), the
      // log-log fit measures noise; the order statement is then vacuous.
      if (res.back() < 1e-8 * scale) {
        c.deviation = 0.0;
        c.note = "residual at roundoff; order fit skipped";
      } else {
        c.deviation = std::abs(order - 2.0);
      }
      c.tolerance = order_tol;
      r.add(std::move(c));
    }
    {
      ValidationCase c;
      c.inputs = detail::fmt_point(x, t, m) + " h=" +
                 std::to_string(h_list.back());
      c.relation = "KG residual small at finest h";
      c.deviation = res.back() / scale;
      c.tolerance = residual_tol_factor;
      r.add(std::move(c));
    }
  }
  return r;
}

// Closed vs integral (vs series where valid) sweep over the paper-style
// grid t = 2^n/100, x in [0, 5t] minus a 5% cone band.
// The series tolerance covers the measured order-10 truncation over the
// whole inclusion region mt <= 1, mx <= 1: the error grows toward the
// mx = 1 edge and tops out near 1.5e-3 (it keeps shrinking with order,
// ~3e-4 at order 20, so this is truncation, not a defect).
inline ValidationReport cross_validate(int n_x, const std::vector<double>& m_list,
                                       const QuadratureConfig& cfg = {},
                                       double tol_integral = 1e-6,
                                       double tol_series = 2e-3,
                                       double perturb = 0.0) {
  ValidationReport r;
  r.suite = "cross";
  detail::record_signs(r);
  for (const double m : m_list) {
    for (int n = 0; n <= 8; ++n) {
      const double t = std::pow(2.0, n) / 100.0;
      for (int i = 0; i < n_x; ++i) {
        const double x = 5.0 * t * i / (n_x - 1);
        if (std::abs(x - t) < 0.05 * t) continue;  // cone band
        const Complex closed = salpeter_closed({x, t, m});
        Complex integral = (x < t)
                               ? salpeter_integral_inner({x, t, m}, cfg).value
                               : salpeter_integral_outer({x, t, m}, cfg).value;
        integral *= (1.0 + perturb);
        {
          ValidationCase c;
          c.inputs = detail::fmt_point(x, t, m);
          c.relation = "closed vs integral";
          c.deviation = std::abs(closed - integral) / std::abs(closed);
          c.tolerance = tol_integral;
          r.add(std::move(c));
        }
        if (m > 0.0 && m * t <= 1.0 && m * x <= 1.0 &&
            std::abs(x - t) > 0.05 * t) {
          const SeriesEvaluation sev = series_propagator(x, t, m, 10);
          ValidationCase c;
          c.inputs = detail::fmt_point(x, t, m);
          c.relation = "closed vs series(10)";
          c.deviation = std::abs(closed - sev.value) / std::abs(closed);
          c.tolerance = tol_series;
          r.add(std::move(c));
        }
      }
    }
  }
  return r;
}

}  // namespace salprop

#endif  // SALPROP_VERIFY_HPP
