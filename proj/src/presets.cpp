#include "kdv/presets.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "kdv/errors.hpp"
#include "kdv/projection.hpp"

namespace kdv {

namespace variants {

namespace {
SchemeVariant make(std::string label, SchemeKind kind, MeshStrategy mesh) {
  return {std::move(label), kind, std::move(mesh)};
}
constexpr auto trap = SchemeKind::InvariantTrapezoidalTen;
constexpr auto mcons = SchemeKind::MomentumConservingInvariant;
}  // namespace

SchemeVariant standard() { return make("standard", trap, FixedMesh{}); }
SchemeVariant standard_mcons() { return make("standard_mcons", mcons, FixedMesh{}); }
SchemeVariant explicit_lagrangian() {
  return make("explicit_lagrangian", SchemeKind::InvariantExplicitSix, LagrangianMesh{});
}
SchemeVariant lagrangian() { return make("lagrangian", trap, LagrangianMesh{}); }
SchemeVariant lagrangian_mcons() { return make("lagrangian_mcons", mcons, LagrangianMesh{}); }
SchemeVariant projection() { return make("projection", trap, EvolutionProjection{}); }
SchemeVariant projection_mcons() { return make("projection_mcons", mcons, EvolutionProjection{}); }
SchemeVariant adaptive(double alpha) {
  return make("adaptive", trap, AdaptiveMesh{ArcLengthInvariant{alpha}});
}
SchemeVariant adaptive_mcons(double alpha) {
  return make("adaptive_mcons", mcons, AdaptiveMesh{ArcLengthInvariant{alpha}});
}
SchemeVariant adaptive_curvature(double alpha) {
  return make("adaptive_curvature", trap, AdaptiveMesh{CurvatureNonInvariant{alpha}});
}
SchemeVariant adaptive_curvature_mcons(double alpha) {
  return make("adaptive_curvature_mcons", mcons, AdaptiveMesh{CurvatureNonInvariant{alpha}});
}
SchemeVariant ftcs() { return make("ftcs", SchemeKind::StandardFTCS, FixedMesh{}); }

}  // namespace variants

namespace {

ExperimentPreset base(const SchemeVariant& v, std::string prefix) {
  ExperimentPreset p;
  p.name = std::move(prefix) + "_" + v.label;
  p.scheme.kind = v.kind;
  p.scheme.mesh = v.mesh;
  return p;
}

const solution::CnoidalBoosted cnoidal_wave{3.332, 0.784};

}  // namespace

ExperimentPreset ramp_preset(const SchemeVariant& v) {
  ExperimentPreset p = base(v, "exact_ramp");
  p.initial = ExactSolution(solution::GalileanRamp{0.0, 0.0});
  p.domain = Domain{0.0, 20.0, false};
  p.N = 35;
  p.t_start = 1.0;
  p.t_final = 2.0;
  p.scheme.dt = 1e-3;
  return p;
}

ExperimentPreset cnoidal_preset(const SchemeVariant& v, int N) {
  ExperimentPreset p = base(v, "cnoidal");
  p.name += "_N" + std::to_string(N);
  p.initial = ExactSolution(cnoidal_wave);
  p.domain = Domain{0.0, spatial_period(cnoidal_wave), true};
  p.N = N;
  p.t_final = 0.2;
  p.scheme.dt = 1e-4;
  return p;
}

ExperimentPreset soliton_preset(const SchemeVariant& v, bool periodic) {
  ExperimentPreset p = base(v, "soliton");
  p.initial = ExactSolution(solution::SolitonBoosted{7.0});
  p.domain = Domain{-4.0, 4.0, periodic};
  p.N = 48;
  p.t_final = 0.05;
  p.scheme.dt = 1e-4;
  return p;
}

KdvSolution double_soliton_solution() { return solution::DoubleSoliton{-2.0, -1.0, 1e4, 1.0, 0.0}; }

ExperimentPreset double_soliton_preset(const SchemeVariant& v, double frame_speed) {
  ExperimentPreset p = base(v, "double_soliton");
  p.initial = transform(double_soliton_solution(), GroupElement::boost(frame_speed));
  p.domain = Domain{-22.0, 22.0, true};
  p.N = 128;
  p.t_final = 1.0;
  p.scheme.dt = 1e-3;
  return p;
}

ExperimentPreset zabusky_kruskal_preset(const SchemeVariant& v, int N, double dt) {
  ExperimentPreset p = base(v, "zabusky_kruskal");
  p.initial = CosineProfile{1.0, std::numbers::pi};
  p.domain = Domain{0.0, 2.0, true};
  p.N = N;
  p.t_final = 3.6 / std::numbers::pi;
  p.scheme.dt = dt;
  p.scheme.dispersion = 0.022 * 0.022;
  return p;
}

ExperimentPreset zabusky_kruskal_reference() {
  ExperimentPreset p = zabusky_kruskal_preset(variants::standard(), 2048, 3.125e-7);
  p.name = "zabusky_kruskal_reference";
  return p;
}

std::vector<SchemeVariant> convergence_variants() {
  using namespace variants;
  return {standard(),          standard_mcons(),    lagrangian(),
          lagrangian_mcons(),  projection(),        projection_mcons(),
          adaptive(5e6),       adaptive_mcons(5e6), adaptive_curvature(1e6),
          adaptive_curvature_mcons(1e6)};
}

std::vector<SchemeVariant> cnoidal_rmse_variants() {
  using namespace variants;
  return {standard(),       standard_mcons(),         explicit_lagrangian(),
          lagrangian(),     lagrangian_mcons(),       projection(),
          projection_mcons(), adaptive_curvature(1e6), adaptive_curvature_mcons(1e6),
          adaptive(5e6),    adaptive_mcons(5e6)};
}

std::vector<SchemeVariant> soliton_rmse_variants() {
  using namespace variants;
  return {standard(),       standard_mcons(),         explicit_lagrangian(),
          lagrangian(),     lagrangian_mcons(),       projection(),
          projection_mcons(), adaptive_curvature(1e4), adaptive_curvature_mcons(1e4),
          adaptive(1e4),    adaptive_mcons(1e4)};
}

std::vector<SchemeVariant> zabusky_kruskal_variants() {
  using namespace variants;
  return {standard(),  standard_mcons(),    projection(),           projection_mcons(),
          adaptive(1e4), adaptive_mcons(1e4), adaptive_curvature(1e2), adaptive_curvature_mcons(1e2)};
}

std::vector<ConvergenceRow> cnoidal_convergence_study(const std::vector<int>& sizes) {
  std::vector<ConvergenceRow> rows;
  for (const auto& v : convergence_variants()) {
    ConvergenceRow row;
    row.label = v.label;
    for (int N : sizes) {
      const ExperimentReport r = run(cnoidal_preset(v, N));
      if (!r.ok()) {
        row.failure = r.failure->kind + " at N=" + std::to_string(N);
        break;
      }
      row.linf.emplace_back(N, r.summary.linf);
    }
    if (row.failure.empty()) row.order = convergence_order(row.linf);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<AccuracyRow> cnoidal_soliton_study() {
  std::vector<AccuracyRow> rows;
  for (const auto& v : cnoidal_rmse_variants()) rows.push_back({"cnoidal", v.label, run(cnoidal_preset(v, 48))});
  for (const auto& v : soliton_rmse_variants()) rows.push_back({"soliton", v.label, run(soliton_preset(v))});
  return rows;
}

std::vector<BoostRow> double_soliton_boost_study(const std::vector<double>& ratios) {
  std::vector<BoostRow> rows;
  for (const auto& v : {variants::standard_mcons(), variants::adaptive_mcons(1e4)}) {
    const ExperimentPreset p = double_soliton_preset(v);
    const double dx = p.domain.length() / p.N;
    for (double ratio : ratios) {
      const double d = galilean_discrepancy(resolved_scheme(p), double_soliton_solution(), ratio * dx,
                                            p.t_final, p.domain.left, p.domain.right, p.N);
      rows.push_back({v.label, ratio, d});
    }
  }
  return rows;
}

ZabuskyKruskalResult zabusky_kruskal_study(const std::vector<SchemeVariant>& list) {
  ZabuskyKruskalResult out;
  out.reference = run(zabusky_kruskal_reference());
  const BoundaryKind boundary = make_boundary(zabusky_kruskal_reference());
  for (const auto& v : list) {
    ZabuskyKruskalRow row;
    row.label = v.label;
    const ExperimentPreset p = zabusky_kruskal_preset(v);
    row.report = run(p);
    const MeshLayer& fin = row.report.final_layer;
    row.solitons = soliton_count(fin, p.soliton_threshold, true);
    if (row.report.ok() && out.reference.ok()) {
      const MeshLayer ref = project_layer(out.reference.final_layer, fin.nodes, boundary, 2);
      row.rmse_vs_reference = rmse(fin.values, ref.values);
    } else {
      row.rmse_vs_reference = std::nan("");
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::vector<std::string> preset_names() {
  return {"exact_ramp",
          "exact_ramp_mcons",
          "exact_ramp_projection",
          "exact_ramp_projection_mcons",
          "exact_ramp_standard",
          "exact_ramp_standard_mcons",
          "exact_ramp_ftcs",
          "cnoidal_convergence",
          "cnoidal_soliton_rmse",
          "double_soliton_boost",
          "zabusky_kruskal",
          "zabusky_kruskal_lagrangian"};
}

bool is_preset(const std::string& name) {
  const auto names = preset_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

}  // namespace kdv
