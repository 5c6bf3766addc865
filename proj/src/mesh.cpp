#include "kdv/mesh.hpp"

#include <cmath>

#include "kdv/errors.hpp"

namespace kdv {

namespace {

constexpr double tangle_fraction = 1e-12;

const Periodic* as_periodic(const BoundaryKind& boundary) { return std::get_if<Periodic>(&boundary); }

}  // namespace

void validate_layer(const MeshLayer& layer) {
  if (layer.nodes.size() != layer.values.size()) {
    throw DomainError("nodes and values differ in length", static_cast<double>(layer.values.size()));
  }
  if (layer.size() < 5) throw DomainError("a mesh layer needs at least 5 nodes", layer.size());
  if (!layer.nodes.allFinite() || !layer.values.allFinite() || !std::isfinite(layer.time)) {
    throw DomainError("mesh layer holds non-finite entries");
  }
}

ExtendedLayer extend(const MeshLayer& layer, const BoundaryKind& boundary, int ghosts) {
  const int n = layer.size();
  ExtendedLayer ext;
  ext.ghosts = ghosts;
  ext.x.resize(n + 2 * ghosts);
  ext.u.resize(n + 2 * ghosts);
  ext.x.segment(ghosts, n) = layer.nodes;
  ext.u.segment(ghosts, n) = layer.values;

  if (const Periodic* p = as_periodic(boundary)) {
    if (ghosts > n) throw DomainError("more ghosts than nodes", ghosts);
    for (int g = 1; g <= ghosts; ++g) {
      ext.x(ghosts - g) = layer.nodes(n - g) - p->period;
      ext.u(ghosts - g) = layer.values(n - g);
      ext.x(ghosts + n - 1 + g) = layer.nodes(g - 1) + p->period;
      ext.u(ghosts + n - 1 + g) = layer.values(g - 1);
    }
  } else {
    const auto& ref = std::get<DirichletFromExact>(boundary).reference;
    if (ghosts >= n) throw DomainError("more ghosts than nodes", ghosts);
    const double x0 = layer.nodes(0);
    const double xn = layer.nodes(n - 1);
    for (int g = 1; g <= ghosts; ++g) {
      const double left = 2 * x0 - layer.nodes(g);
      const double right = 2 * xn - layer.nodes(n - 1 - g);
      ext.x(ghosts - g) = left;
      ext.u(ghosts - g) = ref(layer.time, left);
      ext.x(ghosts + n - 1 + g) = right;
      ext.u(ghosts + n - 1 + g) = ref(layer.time, right);
    }
  }
  return ext;
}

Vector spacings(const Vector& nodes, const BoundaryKind& boundary) {
  const int n = static_cast<int>(nodes.size());
  const Periodic* p = as_periodic(boundary);
  Vector h(p ? n : n - 1);
  h.head(n - 1) = nodes.tail(n - 1) - nodes.head(n - 1);
  if (p) h(n - 1) = nodes(0) + p->period - nodes(n - 1);
  return h;
}

namespace {

void check_spacings(const Vector& h) {
  const double mean = h.mean();
  for (int i = 0; i < h.size(); ++i) {
    if (!(h(i) > tangle_fraction * mean)) throw TanglingError("mesh tangled", i);
  }
}

}  // namespace

void check_ordering(const Vector& nodes, const BoundaryKind& boundary) {
  check_spacings(spacings(nodes, boundary));
}

void check_ordering(const Vector& nodes) {
  const int n = static_cast<int>(nodes.size());
  check_spacings(nodes.tail(n - 1) - nodes.head(n - 1));
}

Vector lagrangian_advance(const MeshLayer& layer, double dt) {
  Vector next = layer.nodes + dt * layer.values;
  check_ordering(next);
  return next;
}

Vector lagrangian_advance(const MeshLayer& layer, double dt, const BoundaryKind& boundary) {
  Vector next = layer.nodes + dt * layer.values;
  check_ordering(next, boundary);
  return next;
}

Vector monitor_values(const MeshLayer& layer, double dt, const MonitorKind& kind,
                      const BoundaryKind& boundary) {
  const int n = layer.size();
  const ExtendedLayer e = extend(layer, boundary, 2);
  Vector rho(n);
  if (const auto* arc = std::get_if<ArcLengthInvariant>(&kind)) {
    for (int i = 0; i < n; ++i) {
      const double s = dt * (e.value(i + 1) - e.value(i)) / (e.node(i + 1) - e.node(i));
      rho(i) = std::sqrt(1 + arc->alpha * s * s);
    }
  } else {
    const double alpha = std::get<CurvatureNonInvariant>(kind).alpha;
    for (int i = 0; i < n; ++i) {
      const double ahead = 2 * (e.value(i + 2) - e.value(i)) / (e.node(i + 2) - e.node(i));
      const double behind = 2 * (e.value(i + 1) - e.value(i - 1)) / (e.node(i + 1) - e.node(i - 1));
      const double width = e.node(i + 2) - e.node(i) + e.node(i + 1) - e.node(i - 2);
      const double s = dt * (ahead - behind) / width;
      rho(i) = std::sqrt(1 + alpha * s * s);
    }
  }
  return rho;
}

Vector smooth_monitor(const Vector& rho, const BoundaryKind& boundary) {
  const int n = static_cast<int>(rho.size());
  const bool periodic = as_periodic(boundary) != nullptr;
  Vector out(n);
  for (int i = 0; i < n; ++i) {
    const double left = i > 0 ? rho(i - 1) : (periodic ? rho(n - 1) : rho(i));
    const double right = i < n - 1 ? rho(i + 1) : (periodic ? rho(0) : rho(i));
    out(i) = (left + 2 * rho(i) + right) / 4;
  }
  return out;
}

Vector equidistribute(const MeshLayer& layer, const Vector& rho, const BoundaryKind& boundary,
                      const EquidistributionGauge& gauge) {
  const int n = layer.size();
  if (rho.size() != n) throw DomainError("monitor length mismatch", static_cast<double>(rho.size()));
  if (!(rho.minCoeff() > 0)) throw DomainError("monitor must be positive", rho.minCoeff());

  // The discrete principle makes w_{i+1/2} h_i the same for every cell, so
  // the spacings are proportional to 1 / w_{i+1/2}.
  const Periodic* p = as_periodic(boundary);
  const int cells = p ? n : n - 1;
  Vector inv_w(cells);
  for (int i = 0; i < cells; ++i) inv_w(i) = 2.0 / (rho(i) + rho((i + 1) % n));
  const double span = p ? p->period : layer.nodes(n - 1) - layer.nodes(0);
  const Vector h = inv_w * (span / inv_w.sum());

  Vector x(n);
  x(0) = 0;
  for (int i = 1; i < n; ++i) x(i) = x(i - 1) + h(i - 1);

  if (!p) {
    x.array() += layer.nodes(0);
    x(n - 1) = layer.nodes(n - 1);
  } else if (gauge.kind == PeriodicGauge::Pinned) {
    x.array() += layer.nodes(0);
  } else {
    const double target = (layer.nodes + gauge.dt * layer.values).mean();
    x.array() += target - x.mean();
  }
  check_ordering(x, boundary);
  return x;
}

}  // namespace kdv
