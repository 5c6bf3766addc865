#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include <Eigen/LU>

#include "kdv/diagnostics.hpp"
#include "kdv/errors.hpp"
#include "kdv/schemes.hpp"

using namespace kdv;

namespace {

constexpr double kPeriod = 2.0;

MeshLayer random_periodic_layer(int n, unsigned seed, double time = 0.3) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> jitter(-0.25, 0.25);
  MeshLayer layer;
  layer.time = time;
  layer.nodes.resize(n);
  layer.values.resize(n);
  const double h = kPeriod / n;
  for (int i = 0; i < n; ++i) {
    layer.nodes(i) = (i + jitter(gen)) * h;
    const double x = layer.nodes(i);
    layer.values(i) = 0.8 + std::sin(std::numbers::pi * x) + 0.3 * std::cos(3 * std::numbers::pi * x);
  }
  return layer;
}

Vector perturbed_nodes(const MeshLayer& layer, double dt, unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> wiggle(-0.05, 0.05);
  const double h = kPeriod / layer.size();
  Vector x = layer.nodes + dt * layer.values;
  for (int i = 0; i < x.size(); ++i) x(i) += wiggle(gen) * h;
  return x;
}

SchemeConfig config(SchemeKind kind, double dt = 1e-4, double period = kPeriod) {
  SchemeConfig cfg;
  cfg.kind = kind;
  cfg.dt = dt;
  cfg.dispersion = 0.05;
  cfg.boundary = Periodic{period};
  return cfg;
}

// Periodic layer with integer-indexed access past both ends.
struct Wrap {
  const Vector& x;
  const Vector& u;
  double L;

  int n() const { return static_cast<int>(x.size()); }
  int mod(int j) const { return ((j % n()) + n()) % n(); }
  double X(int j) const { return x(mod(j)) + L * std::floor(static_cast<double>(j) / n()); }
  double U(int j) const { return u(mod(j)); }
  double h(int j) const { return X(j + 1) - X(j); }
  double D(int j) const { return (U(j + 1) - U(j)) / h(j); }
  double C(int j) const { return 2 * (D(j) - D(j - 1)) / (X(j + 1) - X(j - 1)); }
  double slope(int j) const { return (D(j) + D(j - 1)) / 2; }
  double B(int j) const { return ((C(j + 1) - C(j)) / h(j) + (C(j) - C(j - 1)) / h(j - 1)) / 2; }
};

// Residual of the theta scheme; zero at the scheme's solution.
Vector theta_residual(const MeshLayer& l0, const Vector& x1, const Vector& u1, const SchemeConfig& cfg,
                      double theta) {
  const double L = std::get<Periodic>(cfg.boundary).period;
  const Wrap w0{l0.nodes, l0.values, L};
  const Wrap w1{x1, u1, L};
  const int n = l0.size();
  Vector r(n);
  for (int i = 0; i < n; ++i) {
    const double a = l0.values(i) - (x1(i) - l0.nodes(i)) / cfg.dt;
    const double f0 = a * w0.slope(i) + cfg.dispersion * w0.B(i);
    const double f1 = a * w1.slope(i) + cfg.dispersion * w1.B(i);
    r(i) = u1(i) - l0.values(i) + cfg.dt * (theta * f1 + (1 - theta) * f0);
  }
  return r;
}

// Residual of the momentum-conserving scheme with trapezoidal flux levels.
Vector mcons_residual(const MeshLayer& l0, const Vector& x1, const Vector& u1, const SchemeConfig& cfg) {
  const double L = std::get<Periodic>(cfg.boundary).period;
  const Wrap w0{l0.nodes, l0.values, L};
  const Wrap w1{x1, u1, L};
  auto xdot = [&](int j) { return (w1.X(j) - w0.X(j)) / cfg.dt; };
  auto flux = [&](int j) {
    return -xdot(j) * (w0.U(j) + w1.U(j)) / 2 + w0.U(j) * w1.U(j) / 2 + cfg.dispersion * (w0.C(j) + w1.C(j)) / 2;
  };
  const int n = l0.size();
  Vector r(n);
  for (int i = 0; i < n; ++i) {
    r(i) = (w1.X(i + 1) - w1.X(i - 1)) * w1.U(i) - (w0.X(i + 1) - w0.X(i - 1)) * w0.U(i) +
           cfg.dt * (flux(i + 1) - flux(i - 1));
  }
  return r;
}

// Solves an affine residual map r(u) = 0 by probing columns and dense LU.
Vector dense_solve(const std::function<Vector(const Vector&)>& r, int n) {
  const Vector r0 = r(Vector::Zero(n));
  Matrix a(n, n);
  for (int j = 0; j < n; ++j) a.col(j) = r(Vector::Unit(n, j)) - r0;
  return a.partialPivLu().solve(-r0);
}

MeshLayer boost(const MeshLayer& l, double eps) {
  MeshLayer b = l;
  b.nodes.array() += eps * l.time;
  b.values.array() += eps;
  return b;
}

MeshLayer dilate(const MeshLayer& l, double lambda) {
  MeshLayer d = l;
  d.time *= lambda * lambda * lambda;
  d.nodes *= lambda;
  d.values /= lambda * lambda;
  return d;
}

const SchemeKind kInvariantKinds[] = {SchemeKind::InvariantExplicitSix, SchemeKind::InvariantImplicitSix,
                                      SchemeKind::InvariantTrapezoidalTen,
                                      SchemeKind::MomentumConservingInvariant};

}  // namespace

TEST_CASE("difference invariants are unchanged by boost, shift and dilation") {
  // Dyadic times keep the recomputed time step exact under the time shift.
  const MeshLayer l0 = random_periodic_layer(24, 1, 0.25);
  const double dt = 1.0 / 1024;
  MeshLayer l1{l0.time + dt, perturbed_nodes(l0, dt, 2), l0.values};
  l1.values.array() += 0.01 * l0.nodes.array().cos();
  const Periodic box{kPeriod};

  for (int i : {0, 5, 23}) {
    const DifferenceInvariants ref = compute_invariants(l0, l1, i, box);
    auto agree = [&](const DifferenceInvariants& other) {
      for (int k = 1; k <= 18; ++k) {
        CAPTURE(k);
        CHECK(std::abs(other[k] - ref[k]) <= 1e-13 * std::max(1.0, std::abs(ref[k])));
      }
    };
    agree(compute_invariants(boost(l0, 1.7), boost(l1, 1.7), i, box));

    MeshLayer s0 = l0, s1 = l1;
    s0.time += 0.5;
    s1.time += 0.5;
    s0.nodes.array() += 0.37;
    s1.nodes.array() += 0.37;
    agree(compute_invariants(s0, s1, i, box));

    const double lambda = 1.6;
    agree(compute_invariants(dilate(l0, lambda), dilate(l1, lambda), i, Periodic{kPeriod * lambda}));
  }
}

TEST_CASE("invariants on a uniform resting mesh") {
  MeshLayer l0;
  l0.nodes = Vector::LinSpaced(10, 0.0, 0.9);
  l0.values = Vector::Constant(10, 2.0);
  MeshLayer l1{0.01, l0.nodes.array() + 0.02, l0.values};
  const DifferenceInvariants inv = compute_invariants(l0, l1, 3, Periodic{1.0});
  for (int k : {1, 2, 3, 4, 5, 6, 7}) CHECK(inv[k] == doctest::Approx(1.0));
  CHECK(inv[8] == doctest::Approx(0.1));
  CHECK(std::abs(inv[9]) <= 1e-13);
  CHECK(inv[10] == 0.0);
  for (int k = 11; k <= 18; ++k) CHECK(inv[k] == 0.0);
  CHECK_THROWS_AS(compute_invariants(l0, l1, 10, Periodic{1.0}), DomainError);
}

TEST_CASE("a constant state is preserved by every scheme on any mesh motion") {
  MeshLayer l0 = random_periodic_layer(20, 3);
  l0.values.setConstant(1.3);
  const Vector x1 = perturbed_nodes(l0, 1e-3, 4);
  for (SchemeKind kind : kInvariantKinds) {
    const Vector u = step_values(l0, x1, config(kind, 1e-3));
    CHECK((u.array() - 1.3).abs().maxCoeff() <= 1e-13);
  }
  MeshLayer uniform = l0;
  uniform.nodes = Vector::LinSpaced(20, 0.0, kPeriod - kPeriod / 20);
  const Vector u = step_values(uniform, uniform.nodes, config(SchemeKind::StandardFTCS, 1e-3));
  CHECK((u.array() - 1.3).abs().maxCoeff() <= 1e-13);
}

TEST_CASE("Lagrangian invariant steps reproduce the Galilean ramp") {
  const ExactSolution ramp(solution::GalileanRamp{0.0, 0.0});
  MeshLayer l0;
  l0.time = 1.0;
  l0.nodes = Vector::LinSpaced(35, 0.0, 20.0);
  l0.values = l0.nodes.unaryExpr([&](double x) { return ramp(1.0, x); });
  for (SchemeKind kind : kInvariantKinds) {
    SchemeConfig cfg = config(kind, 1e-3);
    cfg.boundary = DirichletFromExact{ramp};
    MeshLayer layer = l0;
    for (int s = 0; s < 20; ++s) {
      const Vector x1 = lagrangian_advance(layer, cfg.dt);
      layer.values = step_values(layer, x1, cfg);
      layer.nodes = x1;
      layer.time += cfg.dt;
    }
    const Vector exact = layer.nodes.unaryExpr([&](double x) { return ramp(layer.time, x); });
    CHECK((layer.values - exact).lpNorm<Eigen::Infinity>() <= 1e-12);
  }
}

TEST_CASE("explicit six-point step matches the straight-line oracle") {
  const MeshLayer l0 = random_periodic_layer(30, 5);
  const SchemeConfig cfg = config(SchemeKind::InvariantExplicitSix, 2e-5);
  const Vector x1 = perturbed_nodes(l0, cfg.dt, 6);
  const Vector u = step_explicit_six(l0, x1, cfg);
  const Vector zero_step = theta_residual(l0, x1, Vector::Zero(30), cfg, 0.0);
  // With theta = 0 the residual is u1 - (explicit update), so at u1 = 0 it is minus the update.
  CHECK((u + zero_step).lpNorm<Eigen::Infinity>() <= 1e-13 * (1 + u.lpNorm<Eigen::Infinity>()));
}

TEST_CASE("standard FTCS step matches the straight-line oracle") {
  MeshLayer l0 = random_periodic_layer(32, 7);
  const double h = kPeriod / 32;
  l0.nodes = Vector::LinSpaced(32, 0.0, kPeriod - h);
  const SchemeConfig cfg = config(SchemeKind::StandardFTCS, 1e-6);
  const Vector u = step_standard_ftcs(l0, cfg);
  const Wrap w{l0.nodes, l0.values, kPeriod};
  for (int i = 0; i < 32; ++i) {
    const double adv = w.U(i) * (w.U(i + 1) - w.U(i - 1)) / (2 * h);
    const double disp = (w.U(i + 2) - 2 * w.U(i + 1) + 2 * w.U(i - 1) - w.U(i - 2)) / (2 * h * h * h);
    CHECK(std::abs(u(i) - (w.U(i) - cfg.dt * (adv + cfg.dispersion * disp))) <= 1e-14);
  }
  MeshLayer skewed = l0;
  skewed.nodes(4) += 0.1 * h;
  CHECK_THROWS_AS(step_standard_ftcs(skewed, cfg), DomainError);
}

TEST_CASE("implicit six-point and trapezoidal steps agree with a dense solve") {
  const MeshLayer l0 = random_periodic_layer(26, 8);
  for (double theta : {1.0, 0.5}) {
    const SchemeKind kind = theta == 1.0 ? SchemeKind::InvariantImplicitSix : SchemeKind::InvariantTrapezoidalTen;
    const SchemeConfig cfg = config(kind, 1e-3);
    const Vector x1 = perturbed_nodes(l0, cfg.dt, 9);
    const Vector oracle =
        dense_solve([&](const Vector& u1) { return theta_residual(l0, x1, u1, cfg, theta); }, 26);
    const Vector u = step_values(l0, x1, cfg);
    CHECK((u - oracle).lpNorm<Eigen::Infinity>() <= 1e-12);
    CHECK(theta_residual(l0, x1, u, cfg, theta).lpNorm<Eigen::Infinity>() <= 1e-11);
  }
}

TEST_CASE("momentum-conserving step agrees with a dense solve and conserves momentum") {
  const MeshLayer l0 = random_periodic_layer(22, 10);
  const SchemeConfig cfg = config(SchemeKind::MomentumConservingInvariant, 1e-3);
  const Vector x1 = perturbed_nodes(l0, cfg.dt, 11);
  const Vector oracle = dense_solve([&](const Vector& u1) { return mcons_residual(l0, x1, u1, cfg); }, 22);
  const Vector u = step_momentum_conserving(l0, x1, cfg);
  CHECK((u - oracle).lpNorm<Eigen::Infinity>() <= 1e-12);

  const Periodic box{kPeriod};
  const double m0 = discrete_momentum(l0, box);
  const double m1 = discrete_momentum(MeshLayer{l0.time + cfg.dt, x1, u}, box);
  CHECK(std::abs(m1 - m0) <= 1e-13 * std::abs(m0));

  SchemeConfig explicit_cfg = cfg;
  explicit_cfg.momentum_levels = MomentumLevels::Explicit;
  const Vector ue = step_momentum_conserving(l0, x1, explicit_cfg);
  CHECK(std::abs(discrete_momentum(MeshLayer{l0.time + cfg.dt, x1, ue}, box) - m0) <= 1e-13 * std::abs(m0));
}

TEST_CASE("momentum stays fixed over a thousand moving-mesh steps") {
  MeshLayer layer = random_periodic_layer(32, 12);
  const SchemeConfig cfg = config(SchemeKind::MomentumConservingInvariant, 1e-4);
  const Periodic box{kPeriod};
  const double h = kPeriod / 32;
  auto oscillating = [&](double t) {
    Vector x(32);
    for (int i = 0; i < 32; ++i) x(i) = (i + 0.2 * std::sin(2.0 * i + 30 * t)) * h;
    return x;
  };
  layer.nodes = oscillating(layer.time);
  const double m0 = discrete_momentum(layer, box);
  for (int s = 0; s < 1000; ++s) {
    const Vector x1 = oscillating(layer.time + cfg.dt);
    layer.values = step_momentum_conserving(layer, x1, cfg);
    layer.nodes = x1;
    layer.time += cfg.dt;
  }
  CHECK(std::abs(discrete_momentum(layer, box) - m0) <= 1e-12 * std::abs(m0));
}

TEST_CASE("invariant trapezoidal steps on a Lagrangian mesh do not conserve momentum") {
  MeshLayer layer = random_periodic_layer(32, 13);
  const SchemeConfig cfg = config(SchemeKind::InvariantTrapezoidalTen, 1e-3);
  const Periodic box{kPeriod};
  const double m0 = discrete_momentum(layer, box);
  for (int s = 0; s < 50; ++s) {
    const Vector x1 = lagrangian_advance(layer, cfg.dt);
    layer.values = step_values(layer, x1, cfg);
    layer.nodes = x1;
    layer.time += cfg.dt;
  }
  CHECK(std::abs(discrete_momentum(layer, box) - m0) > 1e-6);
}

TEST_CASE("invariant steps commute with boosts, shifts and dilations") {
  const MeshLayer l0 = random_periodic_layer(24, 14);
  for (SchemeKind kind : kInvariantKinds) {
    const SchemeConfig cfg = config(kind, 2e-5);
    const Vector x1 = perturbed_nodes(l0, cfg.dt, 15);
    const Vector base = step_values(l0, x1, cfg);
    const double tol = 1e-11 * (1 + base.lpNorm<Eigen::Infinity>());

    const double eps = 0.9;
    const Vector boosted = step_values(boost(l0, eps), (x1.array() + eps * (l0.time + cfg.dt)).matrix(), cfg);
    CHECK((boosted.array() - eps - base.array()).abs().maxCoeff() <= tol);

    MeshLayer shifted = l0;
    shifted.nodes.array() += 0.45;
    const Vector s = step_values(shifted, (x1.array() + 0.45).matrix(), cfg);
    CHECK((s - base).lpNorm<Eigen::Infinity>() <= tol);

    const double lambda = 1.3;
    SchemeConfig dcfg = config(kind, cfg.dt * lambda * lambda * lambda, kPeriod * lambda);
    const Vector d = step_values(dilate(l0, lambda), x1 * lambda, dcfg);
    CHECK((d * lambda * lambda - base).lpNorm<Eigen::Infinity>() <= tol);
  }
}

TEST_CASE("FTCS is not Galilean invariant") {
  MeshLayer l0 = random_periodic_layer(32, 16);
  l0.nodes = Vector::LinSpaced(32, 0.0, kPeriod - kPeriod / 32);
  const SchemeConfig cfg = config(SchemeKind::StandardFTCS, 1e-6);
  const Vector base = step_standard_ftcs(l0, cfg);
  MeshLayer lifted = l0;
  lifted.values.array() += 0.9;
  const Vector moved = step_standard_ftcs(lifted, cfg);
  CHECK((moved.array() - 0.9 - base.array()).abs().maxCoeff() > 1e-6);
  CHECK_FALSE(is_invariant(SchemeKind::StandardFTCS));
  for (SchemeKind kind : kInvariantKinds) CHECK(is_invariant(kind));
}

TEST_CASE("configuration and input checks") {
  SchemeConfig cfg = config(SchemeKind::InvariantTrapezoidalTen);
  CHECK_NOTHROW(cfg.validate());
  cfg.dt = -1;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = config(SchemeKind::StandardFTCS);
  cfg.mesh = LagrangianMesh{};
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = config(SchemeKind::InvariantTrapezoidalTen);
  cfg.mesh = EvolutionProjection{3, StencilVariant::Spread};
  CHECK_THROWS_AS(cfg.validate(), ConfigError);

  const MeshLayer l0 = random_periodic_layer(12, 17);
  CHECK_THROWS_AS(step_values(l0, Vector::Zero(11), config(SchemeKind::InvariantImplicitSix)), DomainError);
  Vector tangled = l0.nodes;
  std::swap(tangled(3), tangled(4));
  CHECK_THROWS_AS(step_values(l0, tangled, config(SchemeKind::InvariantImplicitSix)), TanglingError);
}
