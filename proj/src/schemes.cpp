#include "kdv/schemes.hpp"

#include <cmath>

#include "kdv/banded.hpp"
#include "kdv/errors.hpp"

namespace kdv {

namespace {

using Stencil = std::array<double, 5>;  // weights on offsets -2..2

bool periodic(const BoundaryKind& b) { return std::holds_alternative<Periodic>(b); }

double h(const ExtendedLayer& e, int k) { return e.x(k + 1) - e.x(k); }

/// Weights of C_k on u_{k-1}, u_k, u_{k+1} (extended indexing).
std::array<double, 3> curvature_weights(const ExtendedLayer& e, int k) {
  const double hp = h(e, k);
  const double hm = h(e, k - 1);
  const double f = 2.0 / (hp + hm);
  return {f / hm, -f * (1.0 / hp + 1.0 / hm), f / hp};
}

/// Weights of (D_k + D_{k-1})/2.
Stencil slope_weights(const ExtendedLayer& e, int k) {
  const double hp = h(e, k);
  const double hm = h(e, k - 1);
  return {0.0, -0.5 / hm, 0.5 * (1.0 / hm - 1.0 / hp), 0.5 / hp, 0.0};
}

/// Weights of the dispersive bracket B_k.
Stencil dispersion_weights(const ExtendedLayer& e, int k) {
  const double hp = h(e, k);
  const double hm = h(e, k - 1);
  Stencil w{};
  const auto ahead = curvature_weights(e, k + 1);
  const auto here = curvature_weights(e, k);
  const auto behind = curvature_weights(e, k - 1);
  for (int j = 0; j < 3; ++j) {
    w[j + 2] += 0.5 / hp * ahead[j];
    w[j + 1] += 0.5 * (1.0 / hm - 1.0 / hp) * here[j];
    w[j] -= 0.5 / hm * behind[j];
  }
  return w;
}

/// D and C on a whole extended layer, computed from differences so that a
/// constant offset in u cancels before any scaling.
struct Differences {
  Vector D;  // D(k), k = 0 .. size-2
  Vector C;  // C(k), k = 1 .. size-2
};

Differences differences(const ExtendedLayer& e) {
  const int total = static_cast<int>(e.x.size());
  Differences d;
  d.D = (e.u.tail(total - 1) - e.u.head(total - 1)).cwiseQuotient(e.x.tail(total - 1) - e.x.head(total - 1));
  d.C = Vector::Zero(total);
  for (int k = 1; k < total - 1; ++k) {
    d.C(k) = 2.0 * (d.D(k) - d.D(k - 1)) / (h(e, k) + h(e, k - 1));
  }
  return d;
}

double slope(const Differences& d, int k) { return 0.5 * (d.D(k) + d.D(k - 1)); }

double bracket(const ExtendedLayer& e, const Differences& d, int k) {
  return 0.5 * ((d.C(k + 1) - d.C(k)) / h(e, k) + (d.C(k) - d.C(k - 1)) / h(e, k - 1));
}

ExtendedLayer next_extension(const MeshLayer& layer_n, const Vector& x_next, const SchemeConfig& cfg) {
  if (x_next.size() != layer_n.nodes.size()) {
    throw DomainError("next mesh has the wrong length", static_cast<double>(x_next.size()));
  }
  check_ordering(x_next, cfg.boundary);
  MeshLayer shell{layer_n.time + cfg.dt, x_next, layer_n.values};
  return extend(shell, cfg.boundary, 2);
}

void check_finite(const Vector& u) {
  for (int i = 0; i < u.size(); ++i) {
    if (!std::isfinite(u(i))) throw OverflowError("non-finite value after step", i);
  }
}

/// Row assembly for the linear implicit steps. Couplings to Dirichlet ghost
/// values are known and go to the right-hand side.
struct LinearSystem {
  CyclicBandMatrix<double> A;
  Vector rhs;
  const ExtendedLayer& next;
  bool wrap;

  LinearSystem(int n, const ExtendedLayer& e1, bool is_periodic)
      : A(n), rhs(Vector::Zero(n)), next(e1), wrap(is_periodic) {}

  void add(int i, const Stencil& w, double scale) {
    const int n = A.size();
    for (int k = -2; k <= 2; ++k) {
      const double c = scale * w[k + 2];
      if (c == 0.0) continue;
      const int j = i + k;
      if (wrap || (j >= 0 && j < n)) {
        A(i, k) += c;
      } else {
        rhs(i) -= c * next.value(j);
      }
    }
  }

  Vector solve() const { return solve_banded_cyclic(A, rhs); }
};

void check_start(const MeshLayer& layer_n, const SchemeConfig& cfg) {
  validate_layer(layer_n);
  check_ordering(layer_n.nodes, cfg.boundary);
}

/// Slope/dispersion step shared by the implicit six-point (theta = 1) and
/// trapezoidal ten-point (theta = 1/2) schemes.
Vector step_theta(const MeshLayer& layer_n, const Vector& x_next, const SchemeConfig& cfg, double theta) {
  check_start(layer_n, cfg);
  const int n = layer_n.size();
  const ExtendedLayer e0 = extend(layer_n, cfg.boundary, 2);
  const ExtendedLayer e1 = next_extension(layer_n, x_next, cfg);
  const Differences d0 = differences(e0);
  const double dt = cfg.dt;
  const double d2 = cfg.dispersion;

  LinearSystem sys(n, e1, periodic(cfg.boundary));
  for (int i = 0; i < n; ++i) {
    const int k = i + 2;
    const double xdot = (x_next(i) - layer_n.nodes(i)) / dt;
    const double a = layer_n.values(i) - xdot;
    sys.A(i, 0) += 1.0;
    sys.add(i, slope_weights(e1, k), theta * dt * a);
    sys.add(i, dispersion_weights(e1, k), theta * dt * d2);
    const double old = theta < 1.0 ? (1.0 - theta) * dt * (a * slope(d0, k) + d2 * bracket(e0, d0, k)) : 0.0;
    sys.rhs(i) += layer_n.values(i) - old;
  }
  Vector u = sys.solve();
  check_finite(u);
  return u;
}

}  // namespace

void SchemeConfig::validate() const {
  if (!(dt > 0) || !std::isfinite(dt)) throw ConfigError("time step must be positive");
  if (!(dispersion > 0) || !std::isfinite(dispersion)) throw ConfigError("dispersion must be positive");
  if (const auto* p = std::get_if<Periodic>(&boundary)) {
    if (!(p->period > 0)) throw ConfigError("period must be positive");
  }
  if (kind == SchemeKind::StandardFTCS && !std::holds_alternative<FixedMesh>(mesh)) {
    throw ConfigError("the standard FTCS scheme runs on a fixed mesh only");
  }
  if (const auto* ep = std::get_if<EvolutionProjection>(&mesh)) {
    if (ep->order < 1) throw ConfigError("interpolation order must be >= 1");
    if (ep->variant == StencilVariant::Spread && ep->order != 2) {
      throw ConfigError("spread stencil requires order 2");
    }
  }
  if (const auto* ad = std::get_if<AdaptiveMesh>(&mesh)) {
    const double alpha = std::visit([](const auto& m) { return m.alpha; }, ad->monitor);
    if (!(alpha >= 0)) throw ConfigError("monitor alpha must be non-negative");
  }
}

bool is_invariant(SchemeKind kind) { return kind != SchemeKind::StandardFTCS; }

DifferenceInvariants compute_invariants(const MeshLayer& layer_n, const MeshLayer& layer_np1, int i,
                                        const BoundaryKind& boundary) {
  const int n = layer_n.size();
  if (i < 0 || i >= n) throw DomainError("invariant index out of range", i);
  const ExtendedLayer e0 = extend(layer_n, boundary, 2);
  const ExtendedLayer e1 = extend(layer_np1, boundary, 2);
  const int k = i + 2;
  for (int j = k - 2; j <= k + 1; ++j) {
    if (!(h(e0, j) > 0) || !(h(e1, j) > 0)) throw TanglingError("zero or negative spacing", j - 2);
  }
  const double dt = layer_np1.time - layer_n.time;
  const double hi = h(e0, k);
  auto du = [](const ExtendedLayer& e, int j) { return (e.u(j + 1) - e.u(j)) / (e.x(j + 1) - e.x(j)); };

  DifferenceInvariants inv;
  inv[1] = h(e0, k - 1) / hi;
  inv[2] = h(e0, k + 1) / hi;
  inv[3] = h(e0, k - 2) / hi;
  inv[4] = h(e1, k) / hi;
  inv[5] = h(e1, k - 1) / hi;
  inv[6] = h(e1, k + 1) / hi;
  inv[7] = h(e1, k - 2) / hi;
  inv[8] = hi * hi * hi / dt;
  inv[9] = (e1.x(k) - e0.x(k) - dt * e0.u(k)) / hi;
  inv[10] = (e1.u(k) - e0.u(k)) * hi * hi;
  inv[11] = dt * du(e0, k);
  inv[12] = dt * du(e0, k + 1);
  inv[13] = dt * du(e0, k - 1);
  inv[14] = dt * du(e0, k - 2);
  inv[15] = dt * du(e1, k);
  inv[16] = dt * du(e1, k + 1);
  inv[17] = dt * du(e1, k - 1);
  inv[18] = dt * du(e1, k - 2);
  return inv;
}

Vector step_standard_ftcs(const MeshLayer& layer_n, const SchemeConfig& cfg) {
  check_start(layer_n, cfg);
  const Vector hs = spacings(layer_n.nodes, cfg.boundary);
  const double hh = hs(0);
  if ((hs.array() - hh).abs().maxCoeff() > 1e-9 * hh) {
    throw DomainError("standard FTCS needs a uniform mesh", (hs.array() - hh).abs().maxCoeff());
  }
  const ExtendedLayer e = extend(layer_n, cfg.boundary, 2);
  const int n = layer_n.size();
  Vector next(n);
  for (int i = 0; i < n; ++i) {
    const int k = i + 2;
    const double adv = e.u(k) * (e.u(k + 1) - e.u(k - 1)) / (2 * hh);
    const double disp = (e.u(k + 2) - 2 * e.u(k + 1) + 2 * e.u(k - 1) - e.u(k - 2)) / (2 * hh * hh * hh);
    next(i) = e.u(k) - cfg.dt * (adv + cfg.dispersion * disp);
  }
  check_finite(next);
  return next;
}

Vector step_explicit_six(const MeshLayer& layer_n, const Vector& x_next, const SchemeConfig& cfg) {
  check_start(layer_n, cfg);
  next_extension(layer_n, x_next, cfg);
  const ExtendedLayer e0 = extend(layer_n, cfg.boundary, 2);
  const Differences d0 = differences(e0);
  const int n = layer_n.size();
  Vector next(n);
  for (int i = 0; i < n; ++i) {
    const int k = i + 2;
    const double xdot = (x_next(i) - layer_n.nodes(i)) / cfg.dt;
    const double a = layer_n.values(i) - xdot;
    next(i) = layer_n.values(i) - cfg.dt * (a * slope(d0, k) + cfg.dispersion * bracket(e0, d0, k));
  }
  check_finite(next);
  return next;
}

Vector step_implicit_six(const MeshLayer& layer_n, const Vector& x_next, const SchemeConfig& cfg) {
  return step_theta(layer_n, x_next, cfg, 1.0);
}

Vector step_trapezoidal_ten(const MeshLayer& layer_n, const Vector& x_next, const SchemeConfig& cfg) {
  return step_theta(layer_n, x_next, cfg, 0.5);
}

Vector step_momentum_conserving(const MeshLayer& layer_n, const Vector& x_next, const SchemeConfig& cfg) {
  check_start(layer_n, cfg);
  const int n = layer_n.size();
  const ExtendedLayer e0 = extend(layer_n, cfg.boundary, 2);
  const ExtendedLayer e1 = next_extension(layer_n, x_next, cfg);
  const Differences d0 = differences(e0);
  const double dt = cfg.dt;
  const double d2 = cfg.dispersion;
  auto xdot = [&](int k) { return (e1.x(k) - e0.x(k)) / dt; };
  auto measure = [](const ExtendedLayer& e, int k) { return e.x(k + 1) - e.x(k - 1); };

  if (cfg.momentum_levels == MomentumLevels::Explicit) {
    auto flux = [&](int k) { return -xdot(k) * e0.u(k) + 0.5 * e0.u(k) * e0.u(k) + d2 * d0.C(k); };
    Vector next(n);
    for (int i = 0; i < n; ++i) {
      const int k = i + 2;
      next(i) = (measure(e0, k) * e0.u(k) - dt * (flux(k + 1) - flux(k - 1))) / measure(e1, k);
    }
    check_finite(next);
    return next;
  }

  // F_j = -xdot_j (u^n_j + u^{n+1}_j)/2 + u^n_j u^{n+1}_j / 2 + delta^2 (C^n_j + C^{n+1}_j)/2
  auto known = [&](int k) { return -0.5 * xdot(k) * e0.u(k) + 0.5 * d2 * d0.C(k); };
  LinearSystem sys(n, e1, periodic(cfg.boundary));
  for (int i = 0; i < n; ++i) {
    const int k = i + 2;
    sys.A(i, 0) += measure(e1, k);
    Stencil w{};
    w[3] += 0.5 * (e0.u(k + 1) - xdot(k + 1));
    w[1] -= 0.5 * (e0.u(k - 1) - xdot(k - 1));
    const auto ahead = curvature_weights(e1, k + 1);
    const auto behind = curvature_weights(e1, k - 1);
    for (int j = 0; j < 3; ++j) {
      w[j + 2] += 0.5 * d2 * ahead[j];
      w[j] -= 0.5 * d2 * behind[j];
    }
    sys.add(i, w, dt);
    sys.rhs(i) += measure(e0, k) * e0.u(k) - dt * (known(k + 1) - known(k - 1));
  }
  Vector u = sys.solve();
  check_finite(u);
  return u;
}

Vector step_values(const MeshLayer& layer_n, const Vector& x_next, const SchemeConfig& cfg) {
  switch (cfg.kind) {
    case SchemeKind::StandardFTCS:
      return step_standard_ftcs(layer_n, cfg);
    case SchemeKind::InvariantExplicitSix:
      return step_explicit_six(layer_n, x_next, cfg);
    case SchemeKind::InvariantImplicitSix:
      return step_implicit_six(layer_n, x_next, cfg);
    case SchemeKind::InvariantTrapezoidalTen:
      return step_trapezoidal_ten(layer_n, x_next, cfg);
    case SchemeKind::MomentumConservingInvariant:
      return step_momentum_conserving(layer_n, x_next, cfg);
  }
  throw ConfigError("unknown scheme kind");
}

}  // namespace kdv
