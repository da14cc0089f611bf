// Perturbative expansion of the quantum propagator: the two momentum
// blocks, their integral-definition oracles, truncation behaviour, and the
// light-cone singularity carried by the large-momentum block.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "salprop/quadrature.hpp"
#include "salprop/salpeter.hpp"
#include "salprop/series.hpp"

using salprop::Complex;
using Catch::Approx;

namespace {
double rel(const Complex& got, const Complex& want) {
  return std::abs(got - want) / std::abs(want);
}
}  // namespace

TEST_CASE("series structure invariants") {
  const auto ev = salprop::series_propagator(0.3, 0.8, 1.0, 8);
  CHECK(ev.order_used == 8);
  CHECK(ev.value == ev.g1_partial + ev.g2_partial);  // exact by construction
  CHECK(ev.last_term_magnitude >= 0.0);
  // Symmetry in x is exact (all arguments are even-symmetrized).
  const auto evm = salprop::series_propagator(-0.3, 0.8, 1.0, 8);
  CHECK(ev.value == evm.value);
}

TEST_CASE("order 0 of the small-momentum block is m e^{-imt} sinc(mx)") {
  const double x = 0.7, t = 0.9, m = 1.3;
  const Complex got = salprop::series_g1(x, t, m, 0);
  const Complex want =
      m * std::exp(Complex(0.0, -m * t)) * std::sin(m * x) / (m * x);
  CHECK(std::abs(got - want) < 1e-14);
}

TEST_CASE("small-momentum block against its defining integral") {
  // G1 = int_0^m e^{-it sqrt(m^2+p^2)} cos(px) dp, by direct quadrature.
  const double x = 0.3, t = 0.5, m = 1.0;
  const auto oracle = salprop::integrate_finite(
      [&](double p) {
        const double root = std::hypot(m, p);
        return std::exp(Complex(0.0, -t * root)) * std::cos(p * x);
      },
      0.0, m);
  const Complex s8 = salprop::series_g1(x, t, m, 8);
  // Truncation bound: the next omitted order.
  const Complex s10 = salprop::series_g1(x, t, m, 10);
  const double trunc = std::abs(s10 - s8);
  CHECK(std::abs(s8 - oracle.value) < 10.0 * trunc + 1e-9);
}

TEST_CASE("large-momentum block against its defining integral") {
  // G2 = int_m^inf e^{-it sqrt(m^2+p^2)} cos(px) dp.  The integrand
  // oscillates without decay, so the oracle integrates the phase-rotated
  // decaying form obtained by contour rotation... instead, use the exact
  // relation G1 + G2 = pi e^{-imt} G_closed, which isolates G2.
  const double x = 0.3, t = 0.5, m = 1.0;
  const Complex closed = salprop::salpeter_closed({x, t, m});
  const Complex g1_oracle = salprop::integrate_finite(
      [&](double p) {
        const double root = std::hypot(m, p);
        return std::exp(Complex(0.0, -t * root)) * std::cos(p * x);
      },
      0.0, m).value;
  const Complex g2_exact = M_PI * std::exp(Complex(0.0, -m * t)) * closed -
                           g1_oracle;
  const Complex s8 = salprop::series_g2(x, t, m, 8);
  const Complex s10 = salprop::series_g2(x, t, m, 10);
  const double trunc = std::abs(s10 - s8);
  CHECK(std::abs(s8 - g2_exact) < 10.0 * trunc + 1e-6);
}

TEST_CASE("order-10 agreement and monotone refinement at the pinned point") {
  const double x = 0.4, t = 1.0, m = 0.5;
  const Complex closed = salprop::salpeter_closed({x, t, m});
  double prev = 1e9;
  for (int ord : {4, 6, 8, 10}) {
    const auto ev = salprop::series_propagator(x, t, m, ord);
    const double dev = rel(ev.value, closed);
    INFO("order " << ord);
    CHECK(dev < prev);
    prev = dev;
  }
  CHECK(prev < 1e-3);
}

TEST_CASE("truncation monotonicity on a compact off-cone set") {
  const Complex closed_ref[] = {
      salprop::salpeter_closed({0.2, 0.6, 1.0}),
      salprop::salpeter_closed({0.8, 0.5, 0.7}),
      salprop::salpeter_closed({1.5, 0.9, 0.4}),
  };
  const double pts[][3] = {
      {0.2, 0.6, 1.0}, {0.8, 0.5, 0.7}, {1.5, 0.9, 0.4}};
  for (int c = 0; c < 3; ++c) {
    double prev = 1e9;
    for (int ord : {2, 4, 6, 8, 10}) {
      const auto ev =
          salprop::series_propagator(pts[c][0], pts[c][1], pts[c][2], ord);
      const double dev = rel(ev.value, closed_ref[c]);
      INFO("case " << c << " order " << ord);
      CHECK(dev <= prev * (1.0 + 1e-12));
      prev = dev;
    }
  }
}

TEST_CASE("singularity of the large-momentum block at the cone") {
  // (t - x) * G2 -> 1/(2i) as x -> t-.
  const double t = 1.0, m = 1.0;
  double prev_dev = 1e9;
  for (int k = 2; k <= 4; ++k) {
    const double d = std::pow(10.0, -k);
    const Complex g2 = salprop::series_g2(t - d, t, m, 10);
    const double dev = std::abs(d * g2 - Complex(0.0, -0.5));
    CHECK(dev < prev_dev);
    prev_dev = dev;
  }
  CHECK(prev_dev < 1e-2);
  CHECK_THROWS_AS(salprop::series_g2(1.0, 1.0, 1.0, 4),
                  salprop::SingularityError);
}

TEST_CASE("massless-limit consistency of the combined series") {
  // As m -> 0 the propagator tends to i t/(pi (x^2 - t^2)); the series at
  // tiny m must approach the same value (G1 -> 0 with the cut).
  const double x = 0.4, t = 1.0, m = 1e-4;
  const auto ev = salprop::series_propagator(x, t, m, 10);
  const Complex want(0.0, t / (M_PI * (x * x - t * t)));
  CHECK(rel(ev.value, want) < 1e-3);
}

TEST_CASE("last_term_magnitude flags series breakdown") {
  // Well inside the validity region the last term is small...
  const auto good = salprop::series_propagator(0.4, 1.0, 0.5, 10);
  CHECK(good.last_term_magnitude <
        1e-3 * std::abs(good.value));
  // ... and far outside (mt >> 1) it is not.
  const auto bad = salprop::series_propagator(1.0, 8.0, 2.0, 10);
  CHECK(bad.last_term_magnitude > 1e-3 * std::abs(bad.value));
}

TEST_CASE("argument guards") {
  CHECK_THROWS_AS(salprop::series_propagator(0.4, -1.0, 1.0, 4),
                  salprop::DomainError);
  CHECK_THROWS_AS(salprop::series_propagator(0.4, 1.0, 0.0, 4),
                  salprop::DomainError);
  CHECK_THROWS_AS(salprop::series_propagator(0.4, 1.0, 1.0, -2),
                  salprop::DomainError);
}
