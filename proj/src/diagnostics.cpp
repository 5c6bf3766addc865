#include "kdv/diagnostics.hpp"

#include <cmath>

#include "kdv/errors.hpp"
#include "kdv/projection.hpp"
#include "kdv/simulation.hpp"

namespace kdv {

namespace {

void check_lengths(const Vector& a, const Vector& b) {
  if (a.size() != b.size() || a.size() == 0) {
    throw DomainError("vectors must have equal, non-zero length", static_cast<double>(b.size()));
  }
}

}  // namespace

double rmse(const Vector& numerical, const Vector& reference) {
  check_lengths(numerical, reference);
  return std::sqrt((numerical - reference).squaredNorm() / static_cast<double>(numerical.size()));
}

double linf_error(const Vector& numerical, const Vector& reference) {
  check_lengths(numerical, reference);
  return (numerical - reference).cwiseAbs().maxCoeff();
}

double discrete_momentum(const MeshLayer& layer, const BoundaryKind& boundary) {
  const int n = layer.size();
  const Vector h = spacings(layer.nodes, boundary);
  double m = 0.0;
  if (std::holds_alternative<Periodic>(boundary)) {
    for (int i = 0; i < n; ++i) m += layer.values(i) * (h(i) + h((i + n - 1) % n));
  } else {
    m += layer.values(0) * h(0) + layer.values(n - 1) * h(n - 2);
    for (int i = 1; i < n - 1; ++i) m += layer.values(i) * (h(i) + h(i - 1));
  }
  return 0.5 * m;
}

double convergence_order(const std::vector<std::pair<int, double>>& samples) {
  if (samples.size() < 2) throw DomainError("need at least two samples", static_cast<double>(samples.size()));
  const int n = static_cast<int>(samples.size());
  Vector lx(n), ly(n);
  for (int i = 0; i < n; ++i) {
    if (!(samples[i].first > 0) || !(samples[i].second > 0)) {
      throw DomainError("sizes and errors must be positive", samples[i].second);
    }
    lx(i) = std::log(static_cast<double>(samples[i].first));
    ly(i) = std::log(samples[i].second);
  }
  const Vector cx = lx.array() - lx.mean();
  const double sxx = cx.squaredNorm();
  if (!(sxx > 0)) throw DomainError("all sample sizes are equal");
  return cx.dot(ly.array().matrix() - Vector::Constant(n, ly.mean())) / sxx;
}

int soliton_count(const MeshLayer& layer, double threshold, bool periodic) {
  const Vector& u = layer.values;
  const int n = static_cast<int>(u.size());
  if (n == 0) return 0;
  if ((u.array() == u(0)).all()) return 0;

  auto at = [&](int i) { return u(((i % n) + n) % n); };
  // Start scanning just after a strict drop so wrapped plateaus stay whole.
  int start = 0;
  if (periodic) {
    for (int i = 0; i < n; ++i) {
      if (at(i) != at(i - 1)) {
        start = i;
        break;
      }
    }
  }
  int count = 0;
  int i = start;
  const int stop = periodic ? start + n : n;
  while (i < stop) {
    int j = i;
    while (j + 1 < stop && at(j + 1) == at(i)) ++j;
    const bool has_left = periodic || i > 0;
    const bool has_right = periodic || j < n - 1;
    const bool left_lower = has_left && at(i - 1) < at(i);
    const bool right_lower = has_right && at(j + 1) < at(i);
    if (left_lower && right_lower && at(i) >= threshold) ++count;
    i = j + 1;
  }
  return count;
}

double galilean_discrepancy(const SchemeConfig& cfg, const KdvSolution& solution, double c, double t_final,
                            double left, double right, int N, double t_start) {
  const bool periodic = std::holds_alternative<Periodic>(cfg.boundary);
  ExperimentPreset rest;
  rest.name = "rest";
  rest.initial = ExactSolution(solution);
  rest.domain = Domain{left, right, periodic};
  rest.N = N;
  rest.t_start = t_start;
  rest.t_final = t_final;
  rest.scheme = cfg;

  ExperimentPreset moving = rest;
  moving.name = "moving";
  moving.initial = transform(solution, GroupElement::boost(c));
  // Same physical nodes seen from the moving frame.
  moving.domain = Domain{left + c * t_start, right + c * t_start, periodic};

  const ExperimentReport a = run(rest);
  if (!a.ok()) throw Error("rest-frame run failed: " + a.failure->message);
  const ExperimentReport b = run(moving);
  if (!b.ok()) throw Error("moving-frame run failed: " + b.failure->message);

  const double T = a.final_layer.time;
  MeshLayer mapped = b.final_layer;
  mapped.nodes.array() -= c * T;
  mapped.values.array() -= c;
  // Ghost data for the mapped layer comes from the rest-frame problem.
  const BoundaryKind boundary = make_boundary(rest);
  const MeshLayer compared = project_layer(mapped, a.final_layer.nodes, boundary, 2);
  return rmse(compared.values, a.final_layer.values);
}

}  // namespace kdv
