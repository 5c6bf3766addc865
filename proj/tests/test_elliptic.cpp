#include <doctest.h>

#include <cmath>
#include <numbers>

#include "kdv/elliptic.hpp"

using namespace kdv;

namespace {

// Periodic trapezoid rule on the full period of 1/sqrt(1 - k^2 sin^2); the
// integrand is smooth and periodic so the rule converges geometrically.
long double quadrature_K(long double k) {
  const int n = 400;
  long double sum = 0;
  for (int i = 0; i < n; ++i) {
    const long double th = 2 * std::numbers::pi_v<long double> * i / n;
    const long double s = std::sin(th);
    sum += 1 / std::sqrt(1 - k * k * s * s);
  }
  return sum / n * std::numbers::pi_v<long double> / 2;
}

// Incomplete integral F(phi, k) by composite Simpson.
long double incomplete_F(long double phi, long double k) {
  const int n = 2000;
  const long double h = phi / n;
  long double sum = 0;
  for (int i = 0; i <= n; ++i) {
    const long double s = std::sin(i * h);
    const long double w = (i == 0 || i == n) ? 1 : (i % 2 ? 4 : 2);
    sum += w / std::sqrt(1 - k * k * s * s);
  }
  return sum * h / 3;
}

// Amplitude phi with F(phi, k) = u for 0 <= u <= K, by bisection.
long double amplitude(long double u, long double k) {
  long double lo = 0, hi = std::numbers::pi_v<long double> / 2;
  for (int it = 0; it < 80; ++it) {
    const long double mid = (lo + hi) / 2;
    (incomplete_F(mid, k) < u ? lo : hi) = mid;
  }
  return (lo + hi) / 2;
}

}  // namespace

TEST_CASE("complete_K matches the quadrature oracle") {
  for (double k : {0.0, 0.1, 0.5, std::sqrt(0.5), std::sqrt(0.7), 0.9, 0.99}) {
    CHECK(complete_K(k) == doctest::Approx(static_cast<double>(quadrature_K(k))).epsilon(1e-13));
  }
  CHECK(complete_K(0.0) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
}

TEST_CASE("frozen complete integrals") {
  CHECK(complete_K(std::sqrt(0.5)) == doctest::Approx(1.85407467730137192).epsilon(1e-14));
  CHECK(complete_K(std::sqrt(0.7)) == doctest::Approx(2.07536313529246914).epsilon(1e-14));
}

TEST_CASE("complete_K rejects k = 1 and out-of-range moduli") {
  CHECK_THROWS_AS(complete_K(1.0), DomainError);
  CHECK_THROWS_AS(complete_K(1.5), DomainError);
  CHECK_THROWS_AS(complete_K(-0.1), DomainError);
}

TEST_CASE("sn, cn agree with the inverted incomplete integral") {
  for (double k : {0.3, std::sqrt(0.7), 0.95}) {
    const double K = complete_K(k);
    for (double frac : {0.05, 0.3, 0.61, 0.97}) {
      const double u = frac * K;
      const long double phi = amplitude(u, k);
      const auto t = jacobi_sncndn(u, EllipticModulus<double>(k));
      CHECK(t.sn == doctest::Approx(static_cast<double>(std::sin(phi))).epsilon(1e-11));
      CHECK(t.cn == doctest::Approx(static_cast<double>(std::cos(phi))).epsilon(1e-11));
      const double dn = std::sqrt(1 - k * k * std::sin(static_cast<double>(phi)) * std::sin(static_cast<double>(phi)));
      CHECK(t.dn == doctest::Approx(dn).epsilon(1e-11));
    }
  }
}

TEST_CASE("frozen Jacobi values at k^2 = 0.7") {
  const double k = std::sqrt(0.7);
  CHECK(jacobi_cn(0.5, k) == doctest::Approx(0.884103037958547514).epsilon(1e-14));
  CHECK(jacobi_sn(0.5, k) == doctest::Approx(0.467292005359033607).epsilon(1e-14));
  CHECK(jacobi_sncndn(0.5, EllipticModulus<double>(k)).dn == doctest::Approx(0.920405740534723651).epsilon(1e-14));
}

TEST_CASE("elliptic identities") {
  for (double k : {0.0, 0.2, 0.7, 0.999}) {
    const EllipticModulus<double> m(k);
    for (double u = -7.3; u < 7.3; u += 0.37) {
      const auto t = jacobi_sncndn(u, m);
      CHECK(std::abs(t.sn * t.sn + t.cn * t.cn - 1) <= 1e-12);
      CHECK(std::abs(t.dn * t.dn + k * k * t.sn * t.sn - 1) <= 1e-12);
    }
  }
}

TEST_CASE("symmetry and quarter-period values") {
  const double k = 0.8;
  const double K = complete_K(k);
  CHECK(std::abs(jacobi_cn(K, k)) <= 1e-13);
  CHECK(jacobi_sn(K, k) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(jacobi_cn(2 * K, k) == doctest::Approx(-1.0).epsilon(1e-13));
  for (double u : {0.1, 0.9, 2.5}) {
    CHECK(jacobi_sn(-u, k) == doctest::Approx(-jacobi_sn(u, k)).epsilon(1e-14));
    CHECK(jacobi_cn(-u, k) == doctest::Approx(jacobi_cn(u, k)).epsilon(1e-14));
    CHECK(jacobi_cn(u + 4 * K, k) == doctest::Approx(jacobi_cn(u, k)).epsilon(1e-12));
    CHECK(jacobi_sn(u + 4 * K, k) == doctest::Approx(jacobi_sn(u, k)).epsilon(1e-12));
  }
}

TEST_CASE("degenerate moduli reduce to circular and hyperbolic functions") {
  for (double u : {-1.3, 0.2, 0.77, 3.0}) {
    CHECK(jacobi_sn(u, 0.0) == doctest::Approx(std::sin(u)).epsilon(1e-14));
    CHECK(jacobi_cn(u, 0.0) == doctest::Approx(std::cos(u)).epsilon(1e-14));
    CHECK(jacobi_sn(u, 1.0) == doctest::Approx(std::tanh(u)).epsilon(1e-14));
    CHECK(jacobi_cn(u, 1.0) == doctest::Approx(1 / std::cosh(u)).epsilon(1e-14));
  }
}

TEST_CASE("long double instantiation agrees with double") {
  const long double k = std::sqrt(0.7L);
  const long double cn = jacobi_cn(0.5L, k);
  CHECK(std::abs(cn - 0.884103037958547514616L) <= 1e-17L);
  CHECK(std::abs(complete_K(k) - 2.07536313529246914385L) <= 1e-17L);
}
