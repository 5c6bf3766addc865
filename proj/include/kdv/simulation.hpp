#pragma once

// Time integration driver: mesh strategy + scheme per step, diagnostics
// along the way.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kdv/diagnostics.hpp"
#include "kdv/schemes.hpp"
#include "kdv/solutions.hpp"

namespace kdv {

/// u(0, x) = amplitude * cos(wavenumber * x); no exact solution attached.
struct CosineProfile {
  double amplitude = 1.0;
  double wavenumber = 3.14159265358979323846;
};
using InitialData = std::variant<ExactSolution, CosineProfile>;

struct Domain {
  double left = 0.0;
  double right = 1.0;
  bool periodic = true;

  double length() const { return right - left; }
};

struct ExperimentPreset {
  std::string name;
  InitialData initial = CosineProfile{};
  Domain domain;
  int N = 64;
  double t_start = 0.0;
  double t_final = 1.0;
  SchemeConfig scheme;  // boundary is derived from domain and initial data
  int report_every = 0;  // 0: final state only
  double soliton_threshold = 0.3;

  void validate() const;
};

struct RunFailure {
  std::string kind;  // tangling, overflow, solver, domain
  std::string message;
  int step = 0;
  double time = 0.0;
  int index = -1;
};

struct ExperimentReport {
  std::string name;
  std::vector<ErrorReport> series;
  ErrorReport summary;
  MeshLayer final_layer;
  std::optional<RunFailure> failure;
  double initial_momentum = 0.0;
  bool has_reference = false;

  bool ok() const { return !failure.has_value(); }
};

BoundaryKind make_boundary(const ExperimentPreset& preset);
SchemeConfig resolved_scheme(const ExperimentPreset& preset);
MeshLayer initial_layer(const ExperimentPreset& preset);
int step_count(const ExperimentPreset& preset);

/// Node positions at n+1 prescribed by the mesh strategy.
Vector next_nodes(const MeshLayer& layer, const SchemeConfig& cfg);

/// One full step: mesh motion, value update and, for evolution-projection,
/// the projection back onto the old nodes.
MeshLayer advance(const MeshLayer& layer, const SchemeConfig& cfg);

/// Diagnostics for a layer against the preset's exact solution (if any).
ErrorReport measure(const MeshLayer& layer, const ExperimentPreset& preset, const BoundaryKind& boundary,
                    int step, double initial_momentum);

ExperimentReport run(const ExperimentPreset& preset);

}  // namespace kdv
