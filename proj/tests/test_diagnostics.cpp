#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "kdv/diagnostics.hpp"
#include "kdv/errors.hpp"

using namespace kdv;

namespace {

MeshLayer layer_from(const Vector& x, const Vector& u, double time = 0.0) { return MeshLayer{time, x, u}; }

Vector jittered(int n, double L, unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> jitter(-0.3, 0.3);
  Vector x(n);
  for (int i = 0; i < n; ++i) x(i) = (i + jitter(gen)) * L / n;
  return x;
}

}  // namespace

TEST_CASE("rmse and linf on small vectors") {
  Vector a(3), b = Vector::Zero(3);
  a << 0, 3, 4;
  CHECK(rmse(a, b) == doctest::Approx(5 / std::sqrt(3.0)));
  CHECK(linf_error(a, b) == 4.0);
  CHECK(rmse(a, a) == 0.0);
  CHECK(linf_error(-a, b) == 4.0);
  CHECK(rmse(a, b) <= linf_error(a, b));
  CHECK_THROWS_AS(rmse(a, Vector::Zero(2)), DomainError);
}

TEST_CASE("momentum of a constant is amplitude times length") {
  const Vector x = jittered(17, 3.0, 1);
  const Vector u = Vector::Constant(17, 1.7);
  CHECK(discrete_momentum(layer_from(x, u), Periodic{3.0}) == doctest::Approx(1.7 * 3.0).epsilon(1e-14));
  const BoundaryKind dirichlet = DirichletFromExact{ExactSolution(solution::Constant{1.7})};
  CHECK(discrete_momentum(layer_from(x, u), dirichlet) == doctest::Approx(1.7 * (x(16) - x(0))).epsilon(1e-14));
}

TEST_CASE("momentum of odd data on a symmetric mesh vanishes") {
  const Vector x = Vector::LinSpaced(21, -1.0, 1.0);
  const Vector u = x.array().sin().matrix();
  const BoundaryKind dirichlet = DirichletFromExact{ExactSolution(solution::Constant{0.0})};
  CHECK(std::abs(discrete_momentum(layer_from(x, u), dirichlet)) <= 1e-15);
}

TEST_CASE("Dirichlet momentum equals the trapezoid rule") {
  const Vector x = jittered(25, 2.0, 2);
  const Vector u = x.array().exp().matrix();
  double trapezoid = 0;
  for (int i = 0; i + 1 < 25; ++i) trapezoid += (u(i) + u(i + 1)) / 2 * (x(i + 1) - x(i));
  const BoundaryKind dirichlet = DirichletFromExact{ExactSolution(solution::Constant{0.0})};
  CHECK(discrete_momentum(layer_from(x, u), dirichlet) == doctest::Approx(trapezoid).epsilon(1e-14));
}

TEST_CASE("momentum shifts by eps times length under a boost") {
  const Vector x = jittered(30, 2.0, 3);
  const Vector u = (std::numbers::pi * x.array()).cos().matrix();
  const double m = discrete_momentum(layer_from(x, u, 0.5), Periodic{2.0});
  const double eps = 0.8;
  const Vector xb = (x.array() + eps * 0.5).matrix();
  const Vector ub = (u.array() + eps).matrix();
  CHECK(discrete_momentum(layer_from(xb, ub, 0.5), Periodic{2.0}) == doctest::Approx(m + eps * 2.0).epsilon(1e-13));
}

TEST_CASE("convergence order of exact power laws") {
  std::vector<std::pair<int, double>> s;
  for (int n : {16, 24, 32, 48}) s.emplace_back(n, 3.0 * std::pow(n, -2.0));
  CHECK(convergence_order(s) == doctest::Approx(-2.0).epsilon(1e-12));
  s.clear();
  for (int n : {10, 20}) s.emplace_back(n, 0.5 / n);
  CHECK(convergence_order(s) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK_THROWS_AS(convergence_order({{16, 1e-3}}), DomainError);
  CHECK_THROWS_AS(convergence_order({{16, 1e-3}, {16, 2e-3}}), DomainError);
  CHECK_THROWS_AS(convergence_order({{16, 0.0}, {32, 1e-3}}), DomainError);
}

TEST_CASE("soliton counting") {
  const Vector x = Vector::LinSpaced(200, -10.0, 10.0);
  CHECK(soliton_count(layer_from(x, Vector::Constant(200, 2.0)), 0.3) == 0);

  const ExactSolution one(solution::SolitonBoosted{1.0});
  const Vector single = x.unaryExpr([&](double s) { return one(0.0, s); });
  CHECK(soliton_count(layer_from(x, single), 0.3) == 1);
  CHECK(soliton_count(layer_from(x, single), 5.0) == 0);

  Vector two = single;
  for (int i = 0; i < 200; ++i) two(i) += one(0.0, x(i) - 6.0);
  CHECK(soliton_count(layer_from(x, two), 0.3) == 2);

  Vector plateau = Vector::Zero(9);
  plateau << 0, 1, 2, 2, 2, 1, 0, 1, 0;
  CHECK(soliton_count(layer_from(Vector::LinSpaced(9, 0, 8), plateau), 0.3) == 2);

  // The peak straddles the periodic seam.
  Vector seam(8);
  seam << 2, 1, 0, 0, 0, 0, 1, 2;
  CHECK(soliton_count(layer_from(Vector::LinSpaced(8, 0, 7), seam), 0.3, true) == 1);
  CHECK(soliton_count(layer_from(Vector::LinSpaced(8, 0, 7), seam), 0.3, false) == 0);
}

TEST_CASE("Galilean discrepancy vanishes at rest") {
  SchemeConfig cfg;
  cfg.kind = SchemeKind::InvariantTrapezoidalTen;
  cfg.dt = 1e-3;
  const KdvSolution sol = solution::SolitonBoosted{1.0};
  CHECK(galilean_discrepancy(cfg, sol, 0.0, 0.05, -15.0, 15.0, 64) == 0.0);

  SchemeConfig ftcs = cfg;
  ftcs.kind = SchemeKind::StandardFTCS;
  ftcs.dt = 1e-5;
  CHECK(galilean_discrepancy(ftcs, sol, 0.0, 0.002, -15.0, 15.0, 64) == 0.0);
}
