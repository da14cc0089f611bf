#ifndef SALPROP_SPECFUN_HPP
#define SALPROP_SPECFUN_HPP

// Special functions needed by the propagator evaluations: the modified
// Bessel function K1, the Bessel/Hankel functions of order one, the
// generalized exponential integral E_n for complex argument, the moment
// integrals f_n(rho) = int_0^1 e^n cos(rho*e) de, and the exponential
// series coefficients g1^(n), g2^(n) used by the short-time expansion.
//
// Everything is self-contained: each regime uses a classical series,
// continued fraction, or asymptotic expansion, and the unit tests pin
// each branch against independent oracles.

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "salprop/errors.hpp"

namespace salprop {

using Complex = std::complex<double>;

namespace detail {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kEulerGamma = 0.577215664901532860606512090082402431;

// digamma at positive integer n: psi(n) = -gamma + sum_{i=1}^{n-1} 1/i.
inline double digamma_int(int n) {
  double psi = -kEulerGamma;
  for (int i = 1; i < n; ++i) psi += 1.0 / i;
  return psi;
}

}  // namespace detail

// exp(x) that flushes to zero once the exponent is beyond the underflow
// cutoff instead of producing denormal noise.
inline double safe_exp(double x, double cutoff = 745.0) {
  if (x < -cutoff) return 0.0;
  return std::exp(x);
}

// ---------------------------------------------------------------------------
// Modified Bessel function K1.
// ---------------------------------------------------------------------------

// Scaled modified Bessel function e^y K1(y), y > 0.
// y <= 2: ascending series (DLMF 10.31.2); y > 2: Steed/Temme continued
// fraction CF2 at order zero plus the Wronskian step up to order one.
inline double bessel_k1_scaled(double y) {
  if (!(y > 0.0)) throw DomainError("bessel_k1: argument must be positive");
  if (y <= 2.0) {
    const double q = 0.25 * y * y;  // (y/2)^2
    const double lh = std::log(0.5 * y);
    // I1(y) = (y/2) sum q^k / (k! (k+1)!)
    // K1(y) = 1/y + log(y/2) I1(y)
    //         - (y/4) sum (psi(k+1)+psi(k+2)) q^k / (k! (k+1)!)
    double term = 1.0;      // q^k / (k! (k+1)!)
    double i1 = 0.0, ks = 0.0;
    double psi_sum = detail::digamma_int(1) + detail::digamma_int(2);
    for (int k = 0; k < 40; ++k) {
      i1 += term;
      ks += term * psi_sum;
      const double next = term * q / ((k + 1.0) * (k + 2.0));
      psi_sum += 1.0 / (k + 1.0) + 1.0 / (k + 2.0);
      if (next < 1e-18 * i1 && k > 2) {
        term = next;
        break;
      }
      term = next;
    }
    i1 *= 0.5 * y;
    const double k1 = 1.0 / y + lh * i1 - 0.25 * y * ks;
    return k1 * std::exp(y);
  }
  // Continued fraction CF2 for K_mu with mu = 0 (a la Temme / NR besselik),
  // then K1 = K0 (y + 1/2 - h) / y.
  const double eps = std::numeric_limits<double>::epsilon();
  double a = -0.25;  // mu^2 - 1/4 with mu = 0
  double b = 2.0 * (1.0 + y);
  double d = 1.0 / b;
  double h = d, delh = d;
  double q1 = 0.0, q2 = 1.0;
  const double a1 = 0.25;
  double q = a1, c = a1;
  double s = 1.0 + q * delh;
  for (int i = 2; i <= 20000; ++i) {
    a -= 2.0 * (i - 1);
    c = -a * c / i;
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) <= eps) break;
  }
  h = a1 * h;
  const double k0s = std::sqrt(detail::kPi / (2.0 * y)) / s;  // e^y K0(y)
  return k0s * (y + 0.5 - h) / y;
}

// K1(y) for y > 0.  Returns 0 (and sets *underflow if given) when e^{-y}
// underflows past the cutoff exponent.
inline double bessel_k1(double y, bool* underflow = nullptr) {
  if (underflow) *underflow = false;
  const double scaled = bessel_k1_scaled(y);
  if (y > 745.0) {
    if (underflow) *underflow = true;
    return 0.0;
  }
  return scaled * std::exp(-y);
}

// ---------------------------------------------------------------------------
// Bessel J1, Y1 and the Hankel function H1^(1) = J1 + i Y1.
// ---------------------------------------------------------------------------

namespace detail {

// Ascending series for J1 and Y1, valid for complex z with |z| <= ~12.
// J1(z) = (z/2) sum (-1)^k (z^2/4)^k / (k! (k+1)!)
// Y1(z) = (2/pi) log(z/2) J1(z) - 2/(pi z)
//         - (z/(2 pi)) sum (-1)^k (psi(k+1)+psi(k+2)) (z^2/4)^k / (k!(k+1)!)
template <typename T>
inline void bessel_j1y1_series(const T& z, T& j1, T& y1) {
  using R = typename T::value_type;
  const R pi = std::numbers::pi_v<R>;
  const T q = R(0.25) * z * z;
  T term(R(1));  // (z^2/4)^k / (k! (k+1)!) with alternating sign folded in
  T js(R(0)), ys(R(0));
  R psi_sum = R(digamma_int(1) + digamma_int(2));
  for (int k = 0; k < 120; ++k) {
    js += term;
    ys += term * psi_sum;
    const T next = -term * q / R((k + 1.0) * (k + 2.0));
    psi_sum += R(1) / R(k + 1) + R(1) / R(k + 2);
    if (std::abs(next) <
            R(1e-22) * (std::abs(js) + R(1e-300)) &&
        k > 4) {
      term = next;
      break;
    }
    term = next;
  }
  j1 = R(0.5) * z * js;
  y1 = (R(2) * std::log(R(0.5) * z) * j1 - R(2) / z - R(0.5) * z * ys) / pi;
}

// Real arguments go through the long-double series: the alternating sum
// cancels ~e^{|z|} of its leading terms, and the extra mantissa bits keep
// the y <= 12 branch accurate through the handover to the asymptotics.
template <>
inline void bessel_j1y1_series<double>(const double& z, double& j1,
                                       double& y1) {
  std::complex<long double> jc, yc;
  bessel_j1y1_series<std::complex<long double>>(
      std::complex<long double>(static_cast<long double>(z), 0.0L), jc, yc);
  j1 = static_cast<double>(jc.real());
  y1 = static_cast<double>(yc.real());
}

// Hankel asymptotic expansion for order one, y > 12:
//   J1 = sqrt(2/(pi y)) (P cos w - Q sin w),  w = y - 3 pi / 4,
//   Y1 = sqrt(2/(pi y)) (P sin w + Q cos w),
// with P, Q the standard even/odd mu = 4 Poisson series.
inline void bessel_j1y1_asymptotic(double y, double& j1, double& y1) {
  const double mu = 4.0;
  double p = 1.0, q = 0.0;
  double a = 1.0;  // running product a_j = prod (mu - (2i-1)^2) / (i 8 y)
  double prev = std::numeric_limits<double>::max();
  for (int j = 1; j < 40; ++j) {
    const double odd = 2.0 * j - 1.0;
    a *= (mu - odd * odd) / (j * 8.0 * y);
    if (std::abs(a) >= prev) break;  // asymptotic tail started growing
    prev = std::abs(a);
    if (j % 2 == 1) {
      q += (j % 4 == 1) ? a : -a;
    } else {
      p += (j % 4 == 2) ? -a : a;
    }
    if (std::abs(a) < 1e-18) break;
  }
  const double w = y - 0.75 * kPi;
  const double amp = std::sqrt(2.0 / (kPi * y));
  const double cw = std::cos(w), sw = std::sin(w);
  j1 = amp * (p * cw - q * sw);
  y1 = amp * (p * sw + q * cw);
}

}  // namespace detail

inline double bessel_j1(double y) {
  if (!(y > 0.0)) throw DomainError("bessel_j1: argument must be positive");
  double j1, y1;
  if (y <= 12.0)
    detail::bessel_j1y1_series(y, j1, y1);
  else
    detail::bessel_j1y1_asymptotic(y, j1, y1);
  return j1;
}

inline double bessel_y1(double y) {
  if (!(y > 0.0)) throw DomainError("bessel_y1: argument must be positive");
  double j1, y1;
  if (y <= 12.0)
    detail::bessel_j1y1_series(y, j1, y1);
  else
    detail::bessel_j1y1_asymptotic(y, j1, y1);
  return y1;
}

// H1^(1)(y) = J1(y) + i Y1(y) for real y > 0.
inline Complex hankel1_order1(double y) {
  if (!(y > 0.0))
    throw DomainError("hankel1_order1: argument must be positive");
  double j1, y1;
  if (y <= 12.0)
    detail::bessel_j1y1_series(y, j1, y1);
  else
    detail::bessel_j1y1_asymptotic(y, j1, y1);
  return Complex(j1, y1);
}

// H1^(1)(z) for complex z via the ascending series (|z| <= 12).  Used to
// cross-check the K1 <-> Hankel bridge on the imaginary axis.  Evaluated
// in extended precision: the log-term cancellation costs ~|z|/ln10 digits.
inline Complex hankel1_order1_complex(const Complex& z) {
  if (std::abs(z) > 12.0)
    throw DomainError("hankel1_order1_complex: |z| too large for the series");
  if (std::abs(z) == 0.0)
    throw SingularityError("hankel1_order1_complex: z = 0");
  using CL = std::complex<long double>;
  CL j1, y1;
  const CL zl(static_cast<long double>(z.real()),
              static_cast<long double>(z.imag()));
  detail::bessel_j1y1_series<CL>(zl, j1, y1);
  const CL h = j1 + CL(0.0L, 1.0L) * y1;
  return Complex(static_cast<double>(h.real()),
                 static_cast<double>(h.imag()));
}

// ---------------------------------------------------------------------------
// Generalized exponential integral E_n(z), Re z >= 0.
// ---------------------------------------------------------------------------

// E_n(z) = int_1^inf t^{-n} e^{-z t} dt.
// n = 0 is e^{-z}/z; |z| < 1 uses the log-plus-power series; otherwise the
// continued fraction (modified Lentz) evaluated directly at order n.
inline Complex expint_en(int n, const Complex& z) {
  if (n < 0) throw DomainError("expint_en: order must be non-negative");
  if (z.real() < -1e-14)
    throw DomainError("expint_en: Re(z) must be non-negative");
  const double az = std::abs(z);
  if (az == 0.0) {
    if (n <= 1) throw SingularityError("expint_en: E_n(0) diverges for n <= 1");
    return Complex(1.0 / (n - 1.0), 0.0);
  }
  if (n == 0) return std::exp(-z) / z;
  if (az < 1.0) {
    // E_n(z) = (-z)^{n-1}/(n-1)! (psi(n) - log z)
    //          - sum_{k != n-1} (-z)^k / ((k - n + 1) k!)
    Complex prefac(1.0, 0.0);
    for (int i = 1; i < n; ++i) prefac *= -z / static_cast<double>(i);
    Complex result = prefac * (detail::digamma_int(n) - std::log(z));
    Complex powk(1.0, 0.0);  // (-z)^k / k!
    for (int k = 0; k < 200; ++k) {
      if (k != n - 1) {
        const Complex term = powk / static_cast<double>(k - n + 1);
        result -= term;
        if (std::abs(term) < 1e-18 * std::abs(result) && k > n + 3) break;
      }
      powk *= -z / (k + 1.0);
    }
    return result;
  }
  // Modified Lentz on the standard continued fraction
  //   E_n(z) = e^{-z} / (z + n / (1 + 1 / (z + (n+1) / (1 + 2 / (z + ...)))))
  // in the condensed (even) form used by the classical recipes.
  const double fpmin = 1e-290;
  Complex b = z + static_cast<double>(n);
  Complex c(1.0 / fpmin, 0.0);
  Complex d = 1.0 / b;
  Complex h = d;
  for (int i = 1; i <= 100000; ++i) {
    const double a = -static_cast<double>(i) * (n - 1.0 + i);
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const Complex del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) return h * std::exp(-z);
  }
  throw ConvergenceError("expint_en: continued fraction failed to converge");
}

// ---------------------------------------------------------------------------
// Generalized hypergeometric 1F2 and the moment integrals f_n.
// ---------------------------------------------------------------------------

// 1F2(a; b1, b2; z) by its power series.  Terminates when three consecutive
// terms fall below 1e-16 of the accumulated sum; throws past 500 terms.
inline double hyp1f2(double a, double b1, double b2, double z) {
  double term = 1.0, sum = 1.0;
  int quiet = 0;
  for (int k = 0; k < 500; ++k) {
    term *= (a + k) / ((b1 + k) * (b2 + k)) * z / (k + 1.0);
    sum += term;
    if (std::abs(term) < 1e-16 * std::abs(sum)) {
      if (++quiet >= 3) return sum;
    } else {
      quiet = 0;
    }
  }
  throw ConvergenceError("hyp1f2: series did not terminate in 500 terms");
}

// f_n(rho) = int_0^1 e^n cos(rho e) de
//          = 1F2((n+1)/2; 1/2, (n+3)/2; -rho^2/4) / (n+1).
// |rho| <= 20 uses the series; beyond that the closed trigonometric
// recurrences I_n = sin(rho)/rho - (n/rho) J_{n-1},
// J_n = -cos(rho)/rho + (n/rho) I_{n-1} (stable upward for n < rho).
inline double f_n(int n, double rho) {
  if (n < 0) throw DomainError("f_n: order must be non-negative");
  const double ar = std::abs(rho);
  if (ar <= 20.0) {
    if (ar < 1e-300) return 1.0 / (n + 1.0);
    return hyp1f2(0.5 * (n + 1), 0.5, 0.5 * (n + 3), -0.25 * rho * rho) /
           (n + 1.0);
  }
  const double s = std::sin(ar) / ar, c = std::cos(ar) / ar;
  double in = s;            // I_0
  double jn = (1.0 - std::cos(ar)) / ar;  // J_0
  for (int k = 1; k <= n; ++k) {
    const double inew = s - k / ar * jn;
    jn = -c + k / ar * in;
    in = inew;
  }
  return in;  // even in rho
}

// ---------------------------------------------------------------------------
// Exponential series coefficients g1^(n)(y), g2^(n)(y).
// ---------------------------------------------------------------------------

struct SeriesCoefficients {
  int order_max = 0;
  std::vector<Complex> values;  // values[n] = g^(n)(y), n = 0..order_max
};

namespace detail {

// Coefficients of sqrt(1 + u) - 1 = sum_{k>=1} binom(1/2, k) u^k.
inline std::vector<double> sqrt_binomials(int kmax) {
  std::vector<double> c(kmax + 1, 0.0);
  double b = 1.0;  // binom(1/2, k)
  for (int k = 1; k <= kmax; ++k) {
    b *= (0.5 - (k - 1.0)) / k;
    c[k] = b;
  }
  return c;
}

// exp of a truncated power series A (A[0] must be 0) via the standard
// recurrence B_n = (1/n) sum_{k=1}^n k A_k B_{n-k}.
inline std::vector<Complex> exp_series(const std::vector<Complex>& a) {
  const std::size_t n = a.size();
  std::vector<Complex> b(n, Complex(0.0, 0.0));
  b[0] = 1.0;
  for (std::size_t m = 1; m < n; ++m) {
    Complex acc(0.0, 0.0);
    for (std::size_t k = 1; k <= m; ++k)
      acc += static_cast<double>(k) * a[k] * b[m - k];
    b[m] = acc / static_cast<double>(m);
  }
  return b;
}

inline SeriesCoefficients g_coefficients(double y, int order_max,
                                         bool inner_piece) {
  if (order_max < 0) throw DomainError("g coefficients: order must be >= 0");
  std::vector<Complex> a(order_max + 1, Complex(0.0, 0.0));
  // inner: A(eps) = -i y (sqrt(1 + eps^2) - 1)      (even powers only)
  // outer: A(eps) = -i y (sqrt(1 + eps^2) - 1)/eps  (odd powers only)
  const int kmax = order_max;  // generous
  const std::vector<double> bin = sqrt_binomials(kmax + 1);
  const Complex miy(0.0, -y);
  for (int k = 1; k <= kmax + 1; ++k) {
    const int pow = inner_piece ? 2 * k : 2 * k - 1;
    if (pow > order_max) break;
    a[pow] = miy * bin[k];
  }
  std::vector<Complex> b = exp_series(a);
  SeriesCoefficients out;
  out.order_max = order_max;
  out.values.resize(order_max + 1);
  double fact = 1.0;
  for (int n = 0; n <= order_max; ++n) {
    if (n > 0) fact *= n;
    out.values[n] = fact * b[n];  // g^(n) = n! * (series coefficient)
  }
  return out;
}

}  // namespace detail

// Taylor coefficients g1^(n)(y) of exp(-i y (sqrt(1+eps^2) - 1)) in eps.
// Odd orders are identically zero.
inline SeriesCoefficients g1_coefficients(double y, int order_max) {
  return detail::g_coefficients(y, order_max, true);
}

// Taylor coefficients g2^(n)(y) of exp(-i y (sqrt(1+eps^2) - 1)/eps) in eps.
inline SeriesCoefficients g2_coefficients(double y, int order_max) {
  return detail::g_coefficients(y, order_max, false);
}

}  // namespace salprop

#endif  // SALPROP_SPECFUN_HPP
