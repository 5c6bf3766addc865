#pragma once

// Named experiments: the Galilean ramp, cnoidal and soliton accuracy runs,
// the double-soliton frame sweep and the Zabusky-Kruskal problem.

#include <string>
#include <vector>

#include "kdv/simulation.hpp"

namespace kdv {

/// A scheme kind paired with a mesh strategy, as one row of a comparison.
struct SchemeVariant {
  std::string label;
  SchemeKind kind;
  MeshStrategy mesh;
};

namespace variants {

SchemeVariant standard();              // trapezoidal ten-point, fixed mesh
SchemeVariant standard_mcons();        // momentum-conserving, fixed mesh
SchemeVariant explicit_lagrangian();   // explicit six-point, Lagrangian mesh
SchemeVariant lagrangian();
SchemeVariant lagrangian_mcons();
SchemeVariant projection();
SchemeVariant projection_mcons();
SchemeVariant adaptive(double alpha);            // arc-length monitor
SchemeVariant adaptive_mcons(double alpha);
SchemeVariant adaptive_curvature(double alpha);  // curvature monitor
SchemeVariant adaptive_curvature_mcons(double alpha);
SchemeVariant ftcs();

}  // namespace variants

/// Ramp u = x/t on [0, 20], N = 35, dt = 1e-3, t from 1 to 2.
ExperimentPreset ramp_preset(const SchemeVariant& v);
/// Cnoidal wave (a = 3.332, v = 0.784) over one spatial period, dt = 1e-4, T = 0.2.
ExperimentPreset cnoidal_preset(const SchemeVariant& v, int N);
/// Soliton with speed 7 on [-4, 4], N = 48, dt = 1e-4, T = 0.05.
ExperimentPreset soliton_preset(const SchemeVariant& v, bool periodic = true);
/// Double soliton on the periodic box [-22, 22], N = 128, dt = 1e-3, T = 1.
ExperimentPreset double_soliton_preset(const SchemeVariant& v, double frame_speed = 0.0);
KdvSolution double_soliton_solution();
/// cos(pi x) on the periodic interval [0, 2], delta = 0.022, T = 3.6/pi.
ExperimentPreset zabusky_kruskal_preset(const SchemeVariant& v, int N = 512, double dt = 5e-6);
ExperimentPreset zabusky_kruskal_reference();

std::vector<SchemeVariant> convergence_variants();
std::vector<SchemeVariant> cnoidal_rmse_variants();
std::vector<SchemeVariant> soliton_rmse_variants();
std::vector<SchemeVariant> zabusky_kruskal_variants();

struct ConvergenceRow {
  std::string label;
  std::vector<std::pair<int, double>> linf;
  double order = 0.0;
  std::string failure;  // empty when all runs completed
};
std::vector<ConvergenceRow> cnoidal_convergence_study(const std::vector<int>& sizes = {16, 24, 32, 48});

struct AccuracyRow {
  std::string problem;  // cnoidal or soliton
  std::string label;
  ExperimentReport report;
};
std::vector<AccuracyRow> cnoidal_soliton_study();

struct BoostRow {
  std::string label;
  double c_over_dx = 0.0;
  double discrepancy = 0.0;
};
std::vector<BoostRow> double_soliton_boost_study(
    const std::vector<double>& ratios = {-10, -1, 0, 1, 5, 10, 30});

struct ZabuskyKruskalRow {
  std::string label;
  ExperimentReport report;
  int solitons = 0;
  double rmse_vs_reference = 0.0;
};
struct ZabuskyKruskalResult {
  ExperimentReport reference;
  std::vector<ZabuskyKruskalRow> rows;
};
/// Runs the reference once, then every variant; RMSE uses quadratic
/// interpolation of the reference onto each run's final nodes.
ZabuskyKruskalResult zabusky_kruskal_study(const std::vector<SchemeVariant>& variants);

/// Names accepted by `preset <name>`.
std::vector<std::string> preset_names();
bool is_preset(const std::string& name);

}  // namespace kdv
