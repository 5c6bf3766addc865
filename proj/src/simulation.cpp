#include "kdv/simulation.hpp"

#include <chrono>
#include <cmath>
#include <limits>

#include "kdv/errors.hpp"
#include "kdv/projection.hpp"

namespace kdv {

void ExperimentPreset::validate() const {
  if (N < 5) throw ConfigError("N must be at least 5");
  if (!(t_final > t_start)) throw ConfigError("t_final must exceed t_start");
  if (!(domain.right > domain.left)) throw ConfigError("domain must have positive length");
  if (report_every < 0) throw ConfigError("report_every must be non-negative");
  if (!domain.periodic && !std::holds_alternative<ExactSolution>(initial)) {
    throw ConfigError("a non-periodic domain needs an exact solution for boundary data");
  }
  resolved_scheme(*this).validate();
}

BoundaryKind make_boundary(const ExperimentPreset& preset) {
  if (preset.domain.periodic) return Periodic{preset.domain.length()};
  return DirichletFromExact{std::get<ExactSolution>(preset.initial)};
}

SchemeConfig resolved_scheme(const ExperimentPreset& preset) {
  SchemeConfig cfg = preset.scheme;
  cfg.boundary = make_boundary(preset);
  return cfg;
}

MeshLayer initial_layer(const ExperimentPreset& preset) {
  const int n = preset.N;
  const Domain& d = preset.domain;
  MeshLayer layer;
  layer.time = preset.t_start;
  const double h = d.periodic ? d.length() / n : d.length() / (n - 1);
  layer.nodes = Vector::LinSpaced(n, 0.0, (n - 1) * h).array() + d.left;
  if (!d.periodic) layer.nodes(n - 1) = d.right;
  layer.values.resize(n);
  if (const auto* exact = std::get_if<ExactSolution>(&preset.initial)) {
    for (int i = 0; i < n; ++i) layer.values(i) = (*exact)(layer.time, layer.nodes(i));
  } else {
    const auto& c = std::get<CosineProfile>(preset.initial);
    layer.values = (c.wavenumber * layer.nodes.array()).cos() * c.amplitude;
  }
  return layer;
}

int step_count(const ExperimentPreset& preset) {
  return static_cast<int>(std::llround((preset.t_final - preset.t_start) / preset.scheme.dt));
}

Vector next_nodes(const MeshLayer& layer, const SchemeConfig& cfg) {
  return std::visit(
      [&](const auto& strategy) -> Vector {
        using T = std::decay_t<decltype(strategy)>;
        if constexpr (std::is_same_v<T, FixedMesh>) {
          return layer.nodes;
        } else if constexpr (std::is_same_v<T, LagrangianMesh> || std::is_same_v<T, EvolutionProjection>) {
          return lagrangian_advance(layer, cfg.dt, cfg.boundary);
        } else {
          Vector rho = monitor_values(layer, cfg.dt, strategy.monitor, cfg.boundary);
          if (strategy.smooth_monitor) rho = smooth_monitor(rho, cfg.boundary);
          return equidistribute(layer, rho, cfg.boundary, {strategy.gauge, cfg.dt});
        }
      },
      cfg.mesh);
}

MeshLayer advance(const MeshLayer& layer, const SchemeConfig& cfg) {
  MeshLayer next;
  next.time = layer.time + cfg.dt;
  next.nodes = next_nodes(layer, cfg);
  next.values = step_values(layer, next.nodes, cfg);
  if (const auto* ep = std::get_if<EvolutionProjection>(&cfg.mesh)) {
    return project_layer(next, layer.nodes, cfg.boundary, ep->order, ep->variant);
  }
  return next;
}

ErrorReport measure(const MeshLayer& layer, const ExperimentPreset& preset, const BoundaryKind& boundary,
                    int step, double initial_momentum) {
  ErrorReport r;
  r.step = step;
  r.time = layer.time;
  r.N = layer.size();
  r.dt = preset.scheme.dt;
  r.momentum = discrete_momentum(layer, boundary);
  r.momentum_drift = std::abs(r.momentum - initial_momentum);
  r.min_spacing = spacings(layer.nodes, boundary).minCoeff();
  if (const auto* exact = std::get_if<ExactSolution>(&preset.initial)) {
    Vector ref(layer.size());
    for (int i = 0; i < layer.size(); ++i) ref(i) = (*exact)(layer.time, layer.nodes(i));
    r.rmse = rmse(layer.values, ref);
    r.linf = linf_error(layer.values, ref);
  } else {
    r.rmse = std::numeric_limits<double>::quiet_NaN();
    r.linf = std::numeric_limits<double>::quiet_NaN();
  }
  return r;
}

ExperimentReport run(const ExperimentPreset& preset) {
  preset.validate();
  const auto started = std::chrono::steady_clock::now();
  const SchemeConfig cfg = resolved_scheme(preset);
  const int steps = step_count(preset);

  ExperimentReport report;
  report.name = preset.name;
  report.has_reference = std::holds_alternative<ExactSolution>(preset.initial);
  MeshLayer layer = initial_layer(preset);
  report.initial_momentum = discrete_momentum(layer, cfg.boundary);
  if (preset.report_every > 0) report.series.push_back(measure(layer, preset, cfg.boundary, 0, report.initial_momentum));

  int n = 0;
  try {
    for (n = 0; n < steps; ++n) {
      MeshLayer next = advance(layer, cfg);
      // Time from the step index, so long runs do not accumulate drift.
      next.time = preset.t_start + (n + 1) * cfg.dt;
      layer = std::move(next);
      if (preset.report_every > 0 && (n + 1) % preset.report_every == 0 && n + 1 < steps) {
        report.series.push_back(measure(layer, preset, cfg.boundary, n + 1, report.initial_momentum));
      }
    }
  } catch (const TanglingError& e) {
    report.failure = RunFailure{"tangling", e.what(), n + 1, layer.time + cfg.dt, e.index()};
  } catch (const OverflowError& e) {
    report.failure = RunFailure{"overflow", e.what(), n + 1, layer.time + cfg.dt, e.index()};
  } catch (const SolverError& e) {
    report.failure = RunFailure{"solver", e.what(), n + 1, layer.time + cfg.dt, e.row()};
  } catch (const ExtrapolationError& e) {
    report.failure = RunFailure{"extrapolation", e.what(), n + 1, layer.time + cfg.dt, -1};
  } catch (const DomainError& e) {
    report.failure = RunFailure{"domain", e.what(), n + 1, layer.time + cfg.dt, -1};
  }

  report.final_layer = layer;
  report.summary = measure(layer, preset, cfg.boundary, n, report.initial_momentum);
  report.summary.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  if (preset.report_every > 0) report.series.push_back(report.summary);
  return report;
}

}  // namespace kdv
