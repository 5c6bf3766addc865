#pragma once

// Polynomial (Lagrange) interpolation and projection of an advanced layer
// back onto a target mesh.

#include <cmath>
#include <vector>

#include "kdv/errors.hpp"
#include "kdv/mesh.hpp"

namespace kdv {

template <typename Scalar>
struct InterpolationStencil {
  std::vector<Scalar> x;
  std::vector<Scalar> u;

  int order() const { return static_cast<int>(x.size()) - 1; }
};

/// Sum of u_i L_i(x) over the stencil. Targets outside [x_0, x_m] (beyond a
/// rounding allowance) are rejected.
template <typename Scalar>
Scalar lagrange_interpolate(const InterpolationStencil<Scalar>& s, Scalar x) {
  const int m = s.order();
  if (m < 1 || s.u.size() != s.x.size()) throw DomainError("stencil needs at least two samples", m);
  for (int i = 0; i < m; ++i) {
    if (!(s.x[i + 1] > s.x[i])) throw DomainError("stencil nodes must be strictly increasing", s.x[i]);
  }
  const Scalar slack = Scalar(1e-12) * (s.x[m] - s.x[0]);
  if (x < s.x[0] - slack || x > s.x[m] + slack) {
    throw ExtrapolationError("interpolation target outside stencil", static_cast<double>(x));
  }
  Scalar sum = 0;
  for (int i = 0; i <= m; ++i) {
    Scalar basis = 1;
    for (int j = 0; j <= m; ++j) {
      if (j != i) basis *= (x - s.x[j]) / (s.x[i] - s.x[j]);
    }
    sum += basis * s.u[i];
  }
  return sum;
}

enum class StencilVariant {
  Contiguous,  // {c-1, c, c+1} around the nearest node c
  Spread,      // {c-2, c, c+2}, quadratic only
};

/// Interpolates `advanced` (ghosted per `boundary`) at every target node.
/// The result carries the advanced layer's time.
MeshLayer project_layer(const MeshLayer& advanced, const Vector& target_nodes,
                        const BoundaryKind& boundary, int order = 2,
                        StencilVariant variant = StencilVariant::Contiguous);

}  // namespace kdv
