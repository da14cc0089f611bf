// Special-function layer: K1, H1(1), E_n, 1F2, f_n, and the g1/g2
// coefficient families.  Oracles are independent of the implementation:
// long-double quadrature of integral definitions, frozen high-precision
// constants, recurrences, and exact small-order closed forms.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "salprop/specfun.hpp"

using salprop::Complex;
using Catch::Approx;

namespace {

// Oracle: K1(y) = int_0^inf e^{-y cosh u} cosh u du by composite Simpson in
// long double on a truncated interval (integrand < 1e-24 beyond the cut).
long double k1_integral_oracle(long double y) {
  const long double cut = std::acosh(745.0L / y) + 2.0L;
  const int n = 20000;  // even
  const long double h = cut / n;
  long double sum = 0.0L;
  for (int i = 0; i <= n; ++i) {
    const long double u = i * h;
    const long double f = std::exp(-y * std::cosh(u)) * std::cosh(u);
    const long double w = (i == 0 || i == n) ? 1.0L : (i % 2 ? 4.0L : 2.0L);
    sum += w * f;
  }
  return sum * h / 3.0L;
}

}  // namespace

TEST_CASE("bessel_k1 against frozen values and the integral oracle") {
  CHECK(salprop::bessel_k1(1.0) == Approx(0.6019072301972346).epsilon(1e-13));
  CHECK(salprop::bessel_k1(1e-8) == Approx(1e8).epsilon(1e-6));
  // Derived oracle across both algorithm branches (series <= 2 < CF).
  for (double y : {0.05, 0.3, 1.0, 1.9, 2.0, 2.1, 4.0, 10.0, 30.0, 100.0}) {
    const double ref = static_cast<double>(k1_integral_oracle(y));
    CHECK(salprop::bessel_k1(y) == Approx(ref).epsilon(1e-12));
  }
}

TEST_CASE("bessel_k1 asymptotes") {
  // y*K1(y) -> 1 as y -> 0.
  CHECK(1e-6 * salprop::bessel_k1(1e-6) == Approx(1.0).epsilon(1e-4));
  // K1(y) e^y sqrt(2y/pi) -> 1 as y -> inf.
  const double y = 200.0;
  CHECK(salprop::bessel_k1_scaled(y) * std::sqrt(2.0 * y / M_PI) ==
        Approx(1.0).epsilon(1e-2));
  // Scaled variant consistency where the plain one still has range.
  CHECK(salprop::bessel_k1_scaled(50.0) * std::exp(-50.0) ==
        Approx(salprop::bessel_k1(50.0)).epsilon(1e-13));
}

TEST_CASE("bessel_k1 underflow flag and domain errors") {
  bool uf = false;
  const double v = salprop::bessel_k1(800.0, &uf);
  CHECK(uf);
  CHECK(v == 0.0);
  uf = true;
  salprop::bessel_k1(1.0, &uf);
  CHECK_FALSE(uf);
  CHECK_THROWS_AS(salprop::bessel_k1(0.0), salprop::DomainError);
  CHECK_THROWS_AS(salprop::bessel_k1(-1.0), salprop::DomainError);
  CHECK_THROWS_AS(salprop::bessel_k1(std::nan("")), salprop::DomainError);
}

TEST_CASE("hankel1_order1 fixed point and small-argument law") {
  const Complex h = salprop::hankel1_order1(1.0);
  CHECK(h.real() == Approx(0.4400505857).epsilon(1e-9));
  CHECK(h.imag() == Approx(-0.7812128213).epsilon(1e-9));
  // y -> 0+: Im H1(y) * y -> -2/pi.
  const double y = 1e-6;
  CHECK(salprop::hankel1_order1(y).imag() * y ==
        Approx(-2.0 / M_PI).epsilon(1e-6));
  CHECK_THROWS_AS(salprop::hankel1_order1(0.0), salprop::DomainError);
}

TEST_CASE("hankel1_order1 branch continuity at the series/asymptotic switch") {
  // Evaluate both algorithm branches at the same point: any handover
  // discontinuity shows up as a disagreement right at y = 12.
  double js, ys, ja, ya;
  salprop::detail::bessel_j1y1_series(12.0, js, ys);
  salprop::detail::bessel_j1y1_asymptotic(12.0, ja, ya);
  const Complex a(js, ys), b(ja, ya);
  CHECK(std::abs(a - b) / std::abs(a) < 1e-9);
}

TEST_CASE("K1/H1 bridge identity") {
  // K1(y) = -(pi/2) H1(iy), checked in the complex evaluator.
  for (double y = 0.25; y <= 10.0; y += 0.25) {
    const Complex b =
        -0.5 * M_PI * salprop::hankel1_order1_complex(Complex(0.0, y));
    const double k = salprop::bessel_k1(y);
    CHECK(std::abs(b.real() - k) <= 1e-9 * k);
    CHECK(std::abs(b.imag()) <= 1e-9 * k);
  }
}

TEST_CASE("expint_en closed forms and frozen values") {
  // E0(z) = e^{-z}/z.
  CHECK(salprop::expint_en(0, Complex(1.0, 0.0)).real() ==
        Approx(std::exp(-1.0)).epsilon(1e-12));
  // E_n(0+) = 1/(n-1) for n > 1.
  CHECK(salprop::expint_en(3, Complex(1e-10, 0.0)).real() ==
        Approx(0.5).margin(1e-8));
  // E1(1), frozen from the classical exponential-integral value.
  CHECK(salprop::expint_en(1, Complex(1.0, 0.0)).real() ==
        Approx(0.2193839343955203).epsilon(1e-10));
  // E1(i) = -Ci(1) + i(Si(1) - pi/2), from frozen Ci/Si values.
  const Complex e1i = salprop::expint_en(1, Complex(0.0, 1.0));
  CHECK(e1i.real() == Approx(-0.3374039229009681).epsilon(1e-9));
  CHECK(e1i.imag() ==
        Approx(0.9460830703671830 - M_PI / 2.0).epsilon(1e-9));
}

TEST_CASE("expint_en recurrence n E_{n+1} = e^{-z} - z E_n") {
  const Complex zs[] = {Complex(0.3, 0.0), Complex(2.0, 0.0),
                        Complex(0.0, 0.7), Complex(0.0, 3.0),
                        Complex(1.0, 1.0), Complex(0.2, -0.9)};
  for (const Complex& z : zs) {
    for (int n = 1; n <= 8; ++n) {
      const Complex lhs = static_cast<double>(n) * salprop::expint_en(n + 1, z);
      const Complex rhs = std::exp(-z) - z * salprop::expint_en(n, z);
      CHECK(std::abs(lhs - rhs) <= 1e-10 * std::abs(rhs));
    }
  }
}

TEST_CASE("expint_en domain guards") {
  CHECK_THROWS_AS(salprop::expint_en(1, Complex(-0.5, 0.0)),
                  salprop::DomainError);
  CHECK_THROWS_AS(salprop::expint_en(0, Complex(0.0, 0.0)),
                  salprop::SingularityError);
  CHECK_THROWS_AS(salprop::expint_en(1, Complex(0.0, 0.0)),
                  salprop::SingularityError);
  CHECK_NOTHROW(salprop::expint_en(2, Complex(0.0, 0.0)));
}

TEST_CASE("f_n small-argument and exact values") {
  CHECK(salprop::f_n(3, 0.0) == Approx(0.25).epsilon(1e-14));
  CHECK(std::abs(salprop::f_n(0, M_PI)) < 1e-12);  // sin(pi)/pi
  // Exact: f_2(1) = int_0^1 e^2 cos(e) de = 2 cos 1 - sin 1  (by parts).
  CHECK(salprop::f_n(2, 1.0) ==
        Approx(2.0 * std::cos(1.0) - std::sin(1.0)).epsilon(1e-12));
  // Evenness in rho.
  CHECK(salprop::f_n(4, -2.5) == salprop::f_n(4, 2.5));
}

TEST_CASE("f_n series/recurrence handover and large-rho law") {
  // The series (|rho| <= 20) and the trig recurrence (beyond) must agree
  // where they meet.
  // Both branches near the switch, each against a long-double Simpson
  // oracle of the defining integral.  The series side loses ~e^{rho} * eps
  // to cancellation; the recurrence side is clean.
  const auto oracle = [](int n, long double rho) {
    const int np = 20000;
    const long double h = 1.0L / np;
    long double sum = 0.0L;
    for (int i = 0; i <= np; ++i) {
      const long double e = i * h;
      const long double w = (i == 0 || i == np) ? 1.0L : (i % 2 ? 4.0L : 2.0L);
      long double en = 1.0L;
      for (int k = 0; k < n; ++k) en *= e;
      sum += w * en * std::cos(rho * e);
    }
    return static_cast<double>(sum * h / 3.0L);
  };
  for (int n = 0; n <= 6; ++n) {
    CHECK(std::abs(salprop::f_n(n, 19.9) - oracle(n, 19.9L)) <= 2e-7);
    CHECK(std::abs(salprop::f_n(n, 20.1) - oracle(n, 20.1L)) <= 1e-12);
  }
  // f_n(rho) -> sin(rho)/rho with corrections O(n/rho^2); test at points
  // where |sin rho| is near 1 so the ratio is well conditioned.
  for (double rho : {51.3, 102.6, 507.7}) {
    for (int n = 0; n <= 6; ++n) {
      CHECK(std::abs(salprop::f_n(n, rho) - std::sin(rho) / rho) <=
            2.2 * std::max(n, 1) / (rho * rho));
    }
  }
}

TEST_CASE("hyp1f2 sanity: 1F2(a;1/2,a+1;-r^2/4) route equals direct sums") {
  // n = 0 gives f_0 = sin(rho)/rho exactly.
  for (double rho : {0.1, 1.0, 5.0, 12.0}) {
    CHECK(salprop::f_n(0, rho) ==
          Approx(std::sin(rho) / rho).epsilon(1e-12));
  }
  // n = 1: f_1(rho) = sin(rho)/rho + (cos(rho) - 1)/rho^2  (by parts).
  for (double rho : {0.2, 2.0, 9.0}) {
    CHECK(salprop::f_n(1, rho) ==
          Approx(std::sin(rho) / rho +
                 (std::cos(rho) - 1.0) / (rho * rho)).epsilon(1e-11));
  }
}

TEST_CASE("g1 coefficients match the closed-form table") {
  for (double y : {0.1, 1.0, 10.0}) {
    const auto g = salprop::g1_coefficients(y, 8);
    REQUIRE(g.values.size() == 9u);
    const Complex i(0.0, 1.0);
    const Complex want[5] = {
        Complex(1.0, 0.0),
        -i * y,
        3.0 * y * (i - y),
        15.0 * y * (-3.0 * i + 3.0 * y + i * y * y),
        105.0 * y * (15.0 * i - 15.0 * y - 6.0 * i * y * y + y * y * y)};
    for (int k = 0; k <= 4; ++k) {
      CHECK(std::abs(g.values[2 * k] - want[k]) <=
            1e-12 * std::max(1.0, std::abs(want[k])));
    }
    for (int n = 1; n <= 7; n += 2) CHECK(g.values[n] == Complex(0.0, 0.0));
  }
}

TEST_CASE("g2 coefficients match the closed-form table") {
  for (double y : {0.1, 1.0, 10.0}) {
    const auto g = salprop::g2_coefficients(y, 8);
    REQUIRE(g.values.size() == 9u);
    const Complex mi(0.0, -1.0);  // (-i)^n prefactor
    const double y2 = y * y;
    const Complex body[9] = {
        Complex(1.0, 0.0),
        Complex(y / 2.0, 0.0),
        Complex(y2 / 4.0, 0.0),
        Complex(y / 8.0 * (6.0 + y2), 0.0),
        Complex(y2 / 16.0 * (24.0 + y2), 0.0),
        Complex(y / 32.0 * (240.0 + 60.0 * y2 + y2 * y2), 0.0),
        Complex(y2 / 64.0 * (1800.0 + 120.0 * y2 + y2 * y2), 0.0),
        Complex(y / 128.0 * (25200.0 + 7560.0 * y2 + 210.0 * y2 * y2 +
                             y2 * y2 * y2),
                0.0),
        Complex(y2 / 256.0 * (282240.0 + 23520.0 * y2 + 336.0 * y2 * y2 +
                              y2 * y2 * y2),
                0.0)};
    Complex ph(1.0, 0.0);
    for (int n = 0; n <= 8; ++n) {
      const Complex want = ph * body[n];
      CHECK(std::abs(g.values[n] - want) <=
            1e-12 * std::max(1.0, std::abs(want)));
      ph *= mi;
    }
  }
}

TEST_CASE("g2 high-order coefficient vs Richardson finite differences") {
  // g2^(5)(y) equals the 5th derivative at eps = 0 of
  // exp(-i (y/eps)(sqrt(1+eps^2)-1)); estimate it with a high-order
  // central finite-difference stencil in long double.
  const double y = 1.0;
  const auto f = [&](long double e) -> std::complex<long double> {
    const long double a = -(y / e) * (std::sqrt(1.0L + e * e) - 1.0L);
    return std::exp(std::complex<long double>(0.0L, a));
  };
  // 9-point central 5th-derivative stencil, O(h^4), followed by one
  // Richardson step to cancel the leading h^4 term.
  const long double c[9] = {1.0L / 6,  -3.0L / 2, 13.0L / 3, -29.0L / 6,
                            0.0L,      29.0L / 6, -13.0L / 3, 3.0L / 2,
                            -1.0L / 6};
  const auto stencil = [&](long double h) {
    std::complex<long double> s(0.0L, 0.0L);
    for (int k = -4; k <= 4; ++k)
      s += c[k + 4] * f(k * h + ((k == 0) ? h * 1e-9L : 0.0L));
    return s / (h * h * h * h * h);
  };
  const long double h = 0.05L;
  const std::complex<long double> d5 =
      (16.0L * stencil(h / 2) - stencil(h)) / 15.0L;
  const auto g = salprop::g2_coefficients(y, 5);
  const Complex want(static_cast<double>(d5.real()),
                     static_cast<double>(d5.imag()));
  CHECK(std::abs(g.values[5] - want) <= 1e-4 * std::abs(want));
}

TEST_CASE("g family basics") {
  const auto g1 = salprop::g1_coefficients(2.0, 2);
  CHECK(g1.values[2] == Complex(0.0, -2.0));  // -iy at y = 2
  const auto g2 = salprop::g2_coefficients(7.3, 0);
  CHECK(g2.values[0] == Complex(1.0, 0.0));
  CHECK(g2.order_max == 0);
}
