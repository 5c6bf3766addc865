#pragma once

// Finite-difference steppers for u_t + u u_x + delta^2 u_xxx = 0 on moving
// meshes with horizontal time layers, and the ten-point difference invariants.
//
// Notation on a layer: h_j = x_{j+1} - x_j, D_j = (u_{j+1} - u_j)/h_j,
// C_j = 2 (D_j - D_{j-1}) / (h_j + h_{j-1}), grid velocity
// xdot_i = (x^{n+1}_i - x^n_i)/dt, and the dispersive bracket
// B_i = [(C_{i+1} - C_i)/h_i + (C_i - C_{i-1})/h_{i-1}] / 2.

#include <array>
#include <variant>

#include "kdv/mesh.hpp"
#include "kdv/projection.hpp"

namespace kdv {

enum class SchemeKind {
  StandardFTCS,                // uniform fixed mesh, forward Euler
  InvariantExplicitSix,        // forward Euler on the moving mesh
  InvariantImplicitSix,        // slope and dispersion at n+1
  InvariantTrapezoidalTen,     // slope and dispersion averaged over n, n+1
  MomentumConservingInvariant  // flux form, conserves sum of (h_i + h_{i-1}) u_i
};

/// Time levels entering the fluxes of the momentum-conserving scheme.
enum class MomentumLevels {
  Explicit,     // all fluxes at level n
  Trapezoidal,  // fluxes averaged so that the update stays linear in u^{n+1}
};

struct FixedMesh {};
struct LagrangianMesh {};
struct EvolutionProjection {
  int order = 2;
  StencilVariant variant = StencilVariant::Contiguous;
};
struct AdaptiveMesh {
  MonitorKind monitor = ArcLengthInvariant{0.0};
  PeriodicGauge gauge = PeriodicGauge::Comoving;
  bool smooth_monitor = false;
};
using MeshStrategy = std::variant<FixedMesh, LagrangianMesh, EvolutionProjection, AdaptiveMesh>;

struct SchemeConfig {
  SchemeKind kind = SchemeKind::InvariantTrapezoidalTen;
  double dt = 1e-3;
  double dispersion = 1.0;  // delta^2
  BoundaryKind boundary = Periodic{1.0};
  MeshStrategy mesh = FixedMesh{};
  MomentumLevels momentum_levels = MomentumLevels::Trapezoidal;

  /// Throws ConfigError when the combination is not meaningful.
  void validate() const;
};

/// I1..I18 at one node; `operator[]` is 1-based to match the usual labels.
struct DifferenceInvariants {
  std::array<double, 18> values{};

  double operator[](int k) const { return values.at(k - 1); }
  double& operator[](int k) { return values.at(k - 1); }
};

DifferenceInvariants compute_invariants(const MeshLayer& layer_n, const MeshLayer& layer_np1,
                                        int i, const BoundaryKind& boundary);

Vector step_standard_ftcs(const MeshLayer& layer_n, const SchemeConfig& cfg);
Vector step_explicit_six(const MeshLayer& layer_n, const Vector& x_next, const SchemeConfig& cfg);
Vector step_implicit_six(const MeshLayer& layer_n, const Vector& x_next, const SchemeConfig& cfg);
Vector step_trapezoidal_ten(const MeshLayer& layer_n, const Vector& x_next, const SchemeConfig& cfg);
Vector step_momentum_conserving(const MeshLayer& layer_n, const Vector& x_next,
                                const SchemeConfig& cfg);

/// Dispatches on cfg.kind.
Vector step_values(const MeshLayer& layer_n, const Vector& x_next, const SchemeConfig& cfg);

/// True for the kinds built from difference invariants.
bool is_invariant(SchemeKind kind);

}  // namespace kdv
