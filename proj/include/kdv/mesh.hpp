#pragma once

// Time layers on moving 1D meshes, boundary ghosting, Lagrangian node motion
// and equidistribution against a monitor function.

#include <variant>

#include "kdv/solutions.hpp"
#include "kdv/types.hpp"

namespace kdv {

/// One time level: t^n, nodes x^n_i (strictly increasing) and values u^n_i.
struct MeshLayer {
  double time = 0.0;
  Vector nodes;
  Vector values;

  int size() const { return static_cast<int>(nodes.size()); }
};

/// Throws DomainError on size mismatch, N < 5 or non-finite entries.
void validate_layer(const MeshLayer& layer);

struct Periodic {
  double period;
};
/// Ghost nodes are mirrored through the end nodes; ghost values come from
/// the reference solution at the layer's time.
struct DirichletFromExact {
  ExactSolution reference;
};
using BoundaryKind = std::variant<Periodic, DirichletFromExact>;

/// Slope monitor sqrt(1 + alpha (dt Du)^2), invariant under the full group.
struct ArcLengthInvariant {
  double alpha;
};
/// Second-difference monitor; breaks scale invariance.
struct CurvatureNonInvariant {
  double alpha;
};
using MonitorKind = std::variant<ArcLengthInvariant, CurvatureNonInvariant>;

/// How a periodic mesh is anchored after equidistribution.
enum class PeriodicGauge {
  Pinned,    // x_0 stays at x^n_0
  Comoving,  // node mean advances by dt * mean(u), as the Lagrangian mesh would
};

struct EquidistributionGauge {
  PeriodicGauge kind = PeriodicGauge::Pinned;
  double dt = 0.0;  // used by Comoving
};

/// Layer padded with `ghosts` nodes on each side. Index i of the physical
/// layer is entry i + ghosts.
struct ExtendedLayer {
  Vector x;
  Vector u;
  int ghosts = 0;

  double node(int i) const { return x(i + ghosts); }
  double value(int i) const { return u(i + ghosts); }
  int physical_size() const { return static_cast<int>(x.size()) - 2 * ghosts; }
};

ExtendedLayer extend(const MeshLayer& layer, const BoundaryKind& boundary, int ghosts = 2);

/// Spacings h_i = x_{i+1} - x_i, i = 0..N-2, plus the wrap cell for Periodic.
Vector spacings(const Vector& nodes, const BoundaryKind& boundary);

/// Throws TanglingError at the first h_i <= 1e-12 * mean spacing.
void check_ordering(const Vector& nodes, const BoundaryKind& boundary);
void check_ordering(const Vector& nodes);

Vector lagrangian_advance(const MeshLayer& layer, double dt);
Vector lagrangian_advance(const MeshLayer& layer, double dt, const BoundaryKind& boundary);

Vector monitor_values(const MeshLayer& layer, double dt, const MonitorKind& kind,
                      const BoundaryKind& boundary);

/// One pass of (1, 2, 1)/4 averaging.
Vector smooth_monitor(const Vector& rho, const BoundaryKind& boundary);

/// Nodes satisfying w_{i+1/2} (x_{i+1} - x_i) = const with w_{i+1/2} the
/// average of neighbouring monitor values.
Vector equidistribute(const MeshLayer& layer, const Vector& rho, const BoundaryKind& boundary,
                      const EquidistributionGauge& gauge = {});

}  // namespace kdv
