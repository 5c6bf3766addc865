#pragma once

// Error norms, discrete momentum, convergence fits and soliton counting.

#include <utility>
#include <vector>

#include "kdv/mesh.hpp"
#include "kdv/schemes.hpp"

namespace kdv {

/// One row of run diagnostics.
struct ErrorReport {
  int step = 0;
  double time = 0.0;
  double rmse = 0.0;
  double linf = 0.0;
  double momentum = 0.0;
  double momentum_drift = 0.0;  // |M - M_0|
  double min_spacing = 0.0;
  int N = 0;
  double dt = 0.0;
  double wall_time = 0.0;  // seconds
};

double rmse(const Vector& numerical, const Vector& reference);
double linf_error(const Vector& numerical, const Vector& reference);

/// sum_i u_i (h_i + h_{i-1})/2 with the wrap cell for Periodic and half end
/// cells otherwise.
double discrete_momentum(const MeshLayer& layer, const BoundaryKind& boundary);

/// Least-squares slope of log(error) against log(N).
double convergence_order(const std::vector<std::pair<int, double>>& samples);

/// Strict local maxima with u >= threshold; runs of equal values count once.
int soliton_count(const MeshLayer& layer, double threshold, bool periodic = false);

/// RMSE between a run at rest and the same run in a frame moving with speed
/// c, after mapping the moving-frame result back (x - cT, u - c). Values are
/// compared at the rest-frame nodes; the moved result is interpolated there.
double galilean_discrepancy(const SchemeConfig& cfg, const KdvSolution& solution, double c,
                            double t_final, double left, double right, int N,
                            double t_start = 0.0);

}  // namespace kdv
