// Acceptance runner: one verdict line per criterion.
//
//   kdv_acceptance                 all criteria
//   kdv_acceptance --criterion 3   one criterion
//
// Detail rows are indented; the verdict line reads "criterion N: PASS ..." or
// "criterion N: FAIL ...". Exit status is 0 when every requested criterion
// passes, 1 otherwise.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "kdv/diagnostics.hpp"
#include "kdv/elliptic.hpp"
#include "kdv/presets.hpp"
#include "kdv/projection.hpp"
#include "kdv/schemes.hpp"
#include "kdv/simulation.hpp"
#include "kdv/solutions.hpp"

using namespace kdv;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void detail(const char* fmt, auto... args) {
  std::printf("  ");
  std::printf(fmt, args...);
  std::printf("\n");
  std::fflush(stdout);
}

bool verdict(int criterion, bool ok, const std::string& note) {
  std::printf("criterion %d: %s  %s\n", criterion, ok ? "PASS" : "FAIL", note.c_str());
  std::fflush(stdout);
  return ok;
}

std::string status(const ExperimentReport& r) {
  return r.ok() ? "ok" : r.failure->kind + " at step " + std::to_string(r.failure->step);
}

// Galilean ramp exactness.
bool criterion_1() {
  const auto start = Clock::now();
  bool ok = true;
  for (const auto& v : {variants::lagrangian(), variants::lagrangian_mcons(), variants::projection(),
                        variants::projection_mcons()}) {
    const ExperimentReport r = run(ramp_preset(v));
    const bool pass = r.ok() && r.summary.linf <= 1e-10 && r.summary.rmse <= 1e-10;
    detail("%-18s linf=%.3e rmse=%.3e %s %s", v.label.c_str(), r.summary.linf, r.summary.rmse,
           status(r).c_str(), pass ? "ok" : "out of bounds");
    ok = ok && pass;
  }
  const ExperimentReport f = run(ramp_preset(variants::ftcs()));
  const bool ftcs_pass = f.ok() && f.summary.linf >= 1e-7 && f.summary.linf <= 1e-4;
  detail("%-18s linf=%.3e rmse=%.3e %s %s (band [1e-7, 1e-4])", "ftcs", f.summary.linf, f.summary.rmse,
         status(f).c_str(), ftcs_pass ? "ok" : "out of bounds");
  ok = ok && ftcs_pass;
  const double elapsed = seconds_since(start);
  const bool fast = elapsed < 10.0;
  char note[96];
  std::snprintf(note, sizeof note, "ramp exactness, %.1f s (limit 10 s)", elapsed);
  return verdict(1, ok && fast, note);
}

// Convergence order on the cnoidal wave.
bool criterion_2() {
  const auto start = Clock::now();
  bool ok = true;
  for (const auto& row : cnoidal_convergence_study()) {
    const bool pass = row.failure.empty() && row.order >= -2.2 && row.order <= -1.85;
    if (row.failure.empty()) {
      detail("%-26s order=%.3f %s", row.label.c_str(), row.order, pass ? "ok" : "out of [-2.2, -1.85]");
    } else {
      detail("%-26s %s", row.label.c_str(), row.failure.c_str());
    }
    ok = ok && pass;
  }
  const double elapsed = seconds_since(start);
  char note[96];
  std::snprintf(note, sizeof note, "cnoidal convergence order, %.1f s (limit 300 s)", elapsed);
  return verdict(2, ok && elapsed < 300.0, note);
}

// Published cnoidal RMSE at N = 48, keyed by variant label.
const std::map<std::string, double>& cnoidal_reference_rmse() {
  static const std::map<std::string, double> table{
      {"standard", 3.98e-3},           {"standard_mcons", 1.52e-3},
      {"explicit_lagrangian", 4.59e-2}, {"lagrangian", 7.69e-3},
      {"lagrangian_mcons", 9.91e-3},   {"projection", 4.93e-3},
      {"projection_mcons", 5.58e-3},   {"adaptive_curvature", 3.92e-3},
      {"adaptive_curvature_mcons", 1.57e-3}, {"adaptive", 3.99e-3},
      {"adaptive_mcons", 1.48e-3}};
  return table;
}

const std::map<std::string, double>& soliton_reference_rmse() {
  static const std::map<std::string, double> table{
      {"standard", 9.56e-2},          {"standard_mcons", 3.38e-2},
      {"explicit_lagrangian", 0.439}, {"lagrangian", 0.346},
      {"lagrangian_mcons", 0.436},    {"projection", 0.288},
      {"projection_mcons", 0.327},    {"adaptive_curvature", 9.49e-2},
      {"adaptive_curvature_mcons", 2.94e-2}, {"adaptive", 9.28e-2},
      {"adaptive_mcons", 0.682}};
  return table;
}

// Cnoidal RMSE within a factor of 3 of the published values.
bool criterion_3() {
  bool ok = true;
  for (const auto& v : cnoidal_rmse_variants()) {
    const ExperimentReport r = run(cnoidal_preset(v, 48));
    const double ref = cnoidal_reference_rmse().at(v.label);
    const double ratio = r.summary.rmse / ref;
    const bool pass = r.ok() && ratio <= 3.0 && ratio >= 1.0 / 3.0;
    detail("cnoidal %-26s rmse=%.3e ref=%.3e ratio=%.2f %s", v.label.c_str(), r.summary.rmse, ref, ratio,
           r.ok() ? (pass ? "ok" : "outside factor 3") : status(r).c_str());
    ok = ok && pass;
  }
  // Soliton column for information; not part of the verdict.
  for (const auto& v : soliton_rmse_variants()) {
    const ExperimentReport r = run(soliton_preset(v));
    const double ref = soliton_reference_rmse().at(v.label);
    detail("soliton %-26s rmse=%.3e ref=%.3e ratio=%.2f %s (info)", v.label.c_str(), r.summary.rmse, ref,
           r.summary.rmse / ref, status(r).c_str());
  }
  return verdict(3, ok, "cnoidal RMSE within a factor of 3 at N=48");
}

// Momentum drift on the cnoidal run.
bool criterion_4() {
  bool ok = true;
  for (const auto& v : {variants::standard_mcons(), variants::lagrangian_mcons(),
                        variants::adaptive_curvature_mcons(1e6), variants::adaptive_mcons(5e6)}) {
    const ExperimentReport r = run(cnoidal_preset(v, 48));
    const bool pass = r.ok() && r.summary.momentum_drift <= 1e-12;
    detail("%-26s dM=%.3e %s", v.label.c_str(), r.summary.momentum_drift, pass ? "ok" : "above 1e-12");
    ok = ok && pass;
  }
  const ExperimentReport lag = run(cnoidal_preset(variants::lagrangian(), 48));
  const bool drifts = lag.ok() && lag.summary.momentum_drift >= 1e-6;
  detail("%-26s dM=%.3e %s", "lagrangian", lag.summary.momentum_drift, drifts ? "ok" : "below 1e-6");
  // Projection breaks the flux form; listed for information only.
  const ExperimentReport ep = run(cnoidal_preset(variants::projection_mcons(), 48));
  detail("%-26s dM=%.3e (info)", "projection_mcons", ep.summary.momentum_drift);
  return verdict(4, ok && drifts, "momentum conservation on the cnoidal run");
}

// Galilean frame sweep on the double soliton.
bool criterion_5() {
  const std::vector<BoostRow> rows = double_soliton_boost_study();
  bool ok = true;
  std::vector<double> standard_growth;
  for (const auto& row : rows) {
    bool pass = true;
    if (row.label == "adaptive_mcons") {
      pass = row.discrepancy <= 1e-9;
    } else if (std::abs(row.c_over_dx) >= 1) {
      pass = row.discrepancy >= 1e-2;
      if (row.c_over_dx >= 1) standard_growth.push_back(row.discrepancy);
    }
    detail("%-16s c/dx=%6.1f discrepancy=%.3e %s", row.label.c_str(), row.c_over_dx, row.discrepancy,
           pass ? "ok" : "out of bounds");
    ok = ok && pass;
  }
  const bool monotone =
      standard_growth.size() == 4 && std::is_sorted(standard_growth.begin(), standard_growth.end()) &&
      std::adjacent_find(standard_growth.begin(), standard_growth.end()) == standard_growth.end();
  detail("standard_mcons growth over c/dx = 1, 5, 10, 30: %s", monotone ? "monotone" : "not monotone");
  return verdict(5, ok && monotone, "frame-speed sweep");
}

// Zabusky-Kruskal soliton formation.
bool criterion_6() {
  const auto start = Clock::now();
  const ZabuskyKruskalResult res = zabusky_kruskal_study(zabusky_kruskal_variants());
  // Peak count with no height cut, printed for context only.
  const double no_cut = -std::numeric_limits<double>::infinity();
  const int ref_count = soliton_count(res.reference.final_layer, 0.3, true);
  detail("reference N=2048 solitons=%d (all maxima %d) %s (%.0f s)", ref_count,
         soliton_count(res.reference.final_layer, no_cut, true), status(res.reference).c_str(),
         res.reference.summary.wall_time);
  bool ok = res.reference.ok();
  for (const auto& row : res.rows) {
    const bool is_projection = row.label.rfind("projection", 0) == 0;
    const double limit = is_projection ? 0.4 : 0.05;
    bool pass = row.report.ok() && row.rmse_vs_reference <= limit;
    if (!is_projection) pass = pass && row.solitons == 8;
    detail("%-26s solitons=%d (all maxima %d) rmse=%.4f (limit %.2f) %s %s", row.label.c_str(), row.solitons,
           soliton_count(row.report.final_layer, no_cut, true), row.rmse_vs_reference, limit, status(row.report).c_str(), pass ? "ok" : "out of bounds");
    ok = ok && pass;
  }
  const double elapsed = seconds_since(start);
  char note[96];
  std::snprintf(note, sizeof note, "Zabusky-Kruskal, %.0f s (limit 3600 s)", elapsed);
  return verdict(6, ok && elapsed < 3600.0, note);
}

MeshLayer jittered_layer(int n, double L, unsigned seed, double time) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> jitter(-0.25, 0.25);
  MeshLayer layer;
  layer.time = time;
  layer.nodes.resize(n);
  layer.values.resize(n);
  for (int i = 0; i < n; ++i) {
    layer.nodes(i) = (i + jitter(gen)) * L / n;
    layer.values(i) = 0.5 + std::sin(2 * std::numbers::pi * layer.nodes(i) / L) + 0.2 * jitter(gen);
  }
  return layer;
}

// Property suites.
bool criterion_7() {
  const auto start = Clock::now();
  bool ok = true;
  auto report = [&](const char* name, double worst, double limit, bool below = true) {
    const bool pass = below ? worst <= limit : worst >= limit;
    detail("%-34s %.3e (%s %g) %s", name, worst, below ? "<=" : ">=", limit, pass ? "ok" : "FAIL");
    ok = ok && pass;
  };

  double elliptic = 0;
  for (double k = 0; k <= 1.0; k += 0.05) {
    for (double u = -8; u <= 8; u += 0.173) {
      const auto t = jacobi_sncndn(u, EllipticModulus<double>(k));
      elliptic = std::max({elliptic, std::abs(t.sn * t.sn + t.cn * t.cn - 1),
                           std::abs(t.dn * t.dn + k * k * t.sn * t.sn - 1)});
    }
  }
  report("elliptic identities", elliptic, 1e-12);

  double invariants = 0;
  const double L = 2.0, dt = 1e-3;
  for (unsigned seed = 1; seed <= 5; ++seed) {
    const MeshLayer l0 = jittered_layer(24, L, seed, 0.3);
    MeshLayer l1 = l0;
    l1.time += dt;
    l1.nodes += dt * l0.values;
    l1.values.array() += 0.01 * l0.nodes.array().cos();
    auto act = [](MeshLayer l, double eps, double shift, double lambda) {
      l.nodes = (l.nodes.array() + eps * l.time + shift) * lambda;
      l.values = (l.values.array() + eps) / (lambda * lambda);
      l.time *= lambda * lambda * lambda;
      return l;
    };
    for (int i = 0; i < 24; ++i) {
      const DifferenceInvariants ref = compute_invariants(l0, l1, i, Periodic{L});
      for (auto [eps, shift, lambda] : {std::tuple{1.7, 0.0, 1.0}, {0.0, 0.37, 1.0}, {0.0, 0.0, 1.6}}) {
        const DifferenceInvariants g =
            compute_invariants(act(l0, eps, shift, lambda), act(l1, eps, shift, lambda), i, Periodic{L * lambda});
        for (int k = 1; k <= 18; ++k) {
          invariants = std::max(invariants, std::abs(g[k] - ref[k]) / std::max(1.0, std::abs(ref[k])));
        }
      }
    }
  }
  report("difference invariants (relative)", invariants, 1e-13);

  double unity = 0, quadratic = 0;
  std::mt19937 gen(3);
  std::uniform_real_distribution<double> dist(-1, 1);
  for (int trial = 0; trial < 200; ++trial) {
    InterpolationStencil<double> s{{-1.0 + 0.3 * dist(gen), 0.1 * dist(gen), 1.0 + 0.3 * dist(gen)}, {}};
    const double x = s.x[0] + (0.5 + 0.5 * dist(gen)) * (s.x[2] - s.x[0]);
    s.u = {1.0, 1.0, 1.0};
    unity = std::max(unity, std::abs(lagrange_interpolate(s, x) - 1.0));
    auto q = [](double y) { return 2 * y * y - y + 0.5; };
    s.u = {q(s.x[0]), q(s.x[1]), q(s.x[2])};
    quadratic = std::max(quadratic, std::abs(lagrange_interpolate(s, x) - q(x)));
  }
  report("interpolation partition of unity", unity, 1e-13);
  report("interpolation quadratic exactness", quadratic, 1e-13);

  double equi = 0;
  for (unsigned seed = 1; seed <= 5; ++seed) {
    const MeshLayer layer = jittered_layer(40, L, seed, 0.0);
    const Vector rho = monitor_values(layer, dt, ArcLengthInvariant{1e4}, Periodic{L});
    const Vector x = equidistribute(layer, rho, Periodic{L}, {PeriodicGauge::Pinned, 0.0});
    const Vector h = spacings(x, Periodic{L});
    for (int i = 0; i < 40; ++i) {
      const int ip = (i + 1) % 40, im = (i + 39) % 40;
      equi = std::max(equi, std::abs((rho(ip) + rho(i)) / 2 * h(i) - (rho(i) + rho(im)) / 2 * h(im)));
    }
  }
  report("equidistribution residual", equi, 1e-10);

  double constant = 0;
  std::vector<SchemeVariant> all = cnoidal_rmse_variants();
  all.push_back(variants::ftcs());
  for (const auto& v : all) {
    ExperimentPreset p;
    p.name = "constant_" + v.label;
    p.initial = ExactSolution(solution::Constant{1.3});
    p.domain = {0.0, 2.0, true};
    p.N = 32;
    p.t_final = 0.01;
    p.scheme.kind = v.kind;
    p.scheme.mesh = v.mesh;
    p.scheme.dt = 1e-4;
    const ExperimentReport r = run(p);
    constant = std::max(constant, r.ok() ? r.summary.linf : INFINITY);
  }
  report("constant state, every variant", constant, 1e-13);

  // Second-order decay of the finite-difference residual at regular points.
  const std::vector<std::tuple<KdvSolution, double, double>> samples{
      {solution::Constant{2.5}, 0.3, 0.1},
      {solution::GalileanRamp{-1.0, 0.5}, 0.7, 2.0},
      {solution::Rational{-1}, 0.2, 1.3},
      {solution::Rational{-2}, 1.0, 1.0},
      {solution::Rational{-3}, 0.5, 2.2},
      {solution::CnoidalBoosted{3.332, 0.784}, 0.05, 0.7},
      {solution::SolitonBoosted{7.0}, 0.01, 0.5},
      {solution::Soliton{3.0}, 0.2, -0.4},
      {solution::AlgebraicSolitonBoosted{0.8}, 0.4, 2.5},
      {solution::ComplexRootWave{0.7, 1.2}, 0.0, 1.4},
      {solution::DoubleSoliton{-2.0, -1.0, 1e4, 1.0, 0.0}, 0.3, -3.0},
  };
  double worst_order = INFINITY;
  for (const auto& [sol, t, x] : samples) {
    const ExactSolution s(sol);
    const double coarse = std::abs(residual(s, t, x, 2e-2, 2e-2));
    const double fine = std::abs(residual(s, t, x, 1e-2, 1e-2));
    if (coarse < 1e-11 && fine < 1e-11) continue;  // exact to rounding
    worst_order = std::min(worst_order, std::log2(coarse / fine));
  }
  report("exact-solution residual order", worst_order, 1.9, false);

  const double elapsed = seconds_since(start);
  char note[96];
  std::snprintf(note, sizeof note, "property suites, %.1f s (limit 60 s)", elapsed);
  return verdict(7, ok && elapsed < 60.0, note);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria for the KdV scheme library"};
  std::vector<int> chosen;
  app.add_option("--criterion,-c", chosen, "criterion number (1-7); repeatable")->check(CLI::Range(1, 7));
  CLI11_PARSE(app, argc, argv);
  if (chosen.empty()) chosen = {1, 2, 3, 4, 5, 6, 7};

  const std::map<int, std::function<bool()>> criteria{{1, criterion_1}, {2, criterion_2}, {3, criterion_3},
                                                      {4, criterion_4}, {5, criterion_5}, {6, criterion_6},
                                                      {7, criterion_7}};
  bool all = true;
  for (int c : chosen) all = criteria.at(c)() && all;
  return all ? 0 : 1;
}
