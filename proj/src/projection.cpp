#include "kdv/projection.hpp"

#include <algorithm>

namespace kdv {

MeshLayer project_layer(const MeshLayer& advanced, const Vector& target_nodes,
                        const BoundaryKind& boundary, int order, StencilVariant variant) {
  if (order < 1) throw DomainError("interpolation order must be >= 1", order);
  if (variant == StencilVariant::Spread && order != 2) {
    throw DomainError("spread stencil is quadratic only", order);
  }
  const int ghosts = variant == StencilVariant::Spread ? 2 * order : std::max(order, 2);
  const ExtendedLayer e = extend(advanced, boundary, ghosts);
  const int total = static_cast<int>(e.x.size());
  const Periodic* periodic = std::get_if<Periodic>(&boundary);

  MeshLayer out;
  out.time = advanced.time;
  out.nodes = target_nodes;
  out.values.resize(target_nodes.size());

  InterpolationStencil<double> s;
  for (int t = 0; t < target_nodes.size(); ++t) {
    double y = target_nodes(t);
    if (periodic) {
      // Bring the target into the window spanned by the physical nodes.
      const double base = e.node(0);
      y -= periodic->period * std::floor((y - base) / periodic->period);
    }
    const auto it = std::lower_bound(e.x.data(), e.x.data() + total, y);
    int c = static_cast<int>(it - e.x.data());
    if (c == total || (c > 0 && y - e.x(c - 1) < e.x(c) - y)) --c;

    int first = 0;
    int stride = 1;
    if (variant == StencilVariant::Spread) {
      first = c - 2;
      stride = 2;
    } else if (order % 2 == 0) {
      first = c - order / 2;
    } else {
      first = y < e.x(c) ? c - (order + 1) / 2 : c - (order - 1) / 2;
    }
    const int last = first + stride * order;
    if (first < 0 || last >= total) {
      throw ExtrapolationError("projection target outside advanced mesh", target_nodes(t));
    }
    s.x.clear();
    s.u.clear();
    for (int k = first; k <= last; k += stride) {
      s.x.push_back(e.x(k));
      s.u.push_back(e.u(k));
    }
    out.values(t) = lagrange_interpolate(s, y);
  }
  return out;
}

}  // namespace kdv
