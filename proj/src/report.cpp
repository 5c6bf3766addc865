#include "kdv/report.hpp"

#include <cmath>
#include <cstdio>

namespace kdv {

std::string csv_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10e", value);
  return buf;
}

namespace {

void series_row(std::ostream& out, const std::string& first, const ErrorReport& r) {
  out << first << ',' << csv_number(r.time) << ',' << csv_number(r.rmse) << ',' << csv_number(r.linf)
      << ',' << csv_number(r.momentum) << ',' << csv_number(r.min_spacing) << '\n';
}

std::string status(const ExperimentReport& r) {
  if (r.ok()) return "ok";
  return r.failure->kind + "@" + std::to_string(r.failure->step);
}

}  // namespace

void write_series_csv(std::ostream& out, const ExperimentReport& report) {
  out << "step,time,rmse,linf,momentum,min_spacing\n";
  for (const auto& r : report.series) {
    if (&r == &report.series.back() && r.step == report.summary.step) break;
    series_row(out, std::to_string(r.step), r);
  }
  series_row(out, "summary", report.summary);
}

void write_summary_csv(std::ostream& out, const std::vector<ExperimentReport>& reports) {
  out << "name,N,dt,steps,time,rmse,linf,momentum,momentum_drift,min_spacing,status\n";
  for (const auto& rep : reports) {
    const ErrorReport& r = rep.summary;
    out << rep.name << ',' << r.N << ',' << csv_number(r.dt) << ',' << r.step << ',' << csv_number(r.time)
        << ',' << csv_number(r.rmse) << ',' << csv_number(r.linf) << ',' << csv_number(r.momentum) << ','
        << csv_number(r.momentum_drift) << ',' << csv_number(r.min_spacing) << ',' << status(rep) << '\n';
  }
}

void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows) {
  out << "scheme,N,linf\n";
  for (const auto& row : rows) {
    for (const auto& [n, e] : row.linf) out << row.label << ',' << n << ',' << csv_number(e) << '\n';
    out << row.label << ",order," << (row.failure.empty() ? csv_number(row.order) : row.failure) << '\n';
  }
}

void write_accuracy_csv(std::ostream& out, const std::vector<AccuracyRow>& rows) {
  out << "problem,scheme,rmse,linf,momentum_drift,status\n";
  for (const auto& row : rows) {
    const ErrorReport& r = row.report.summary;
    out << row.problem << ',' << row.label << ',' << csv_number(r.rmse) << ',' << csv_number(r.linf) << ','
        << csv_number(r.momentum_drift) << ',' << status(row.report) << '\n';
  }
}

void write_boost_csv(std::ostream& out, const std::vector<BoostRow>& rows) {
  out << "scheme,c_over_dx,discrepancy\n";
  for (const auto& row : rows) {
    out << row.label << ',' << csv_number(row.c_over_dx) << ',' << csv_number(row.discrepancy) << '\n';
  }
}

void write_zabusky_kruskal_csv(std::ostream& out, const ZabuskyKruskalResult& result) {
  out << "scheme,solitons,rmse_vs_reference,momentum_drift,status\n";
  out << "reference," << soliton_count(result.reference.final_layer, 0.3, true) << ",0,"
      << csv_number(result.reference.summary.momentum_drift) << ',' << status(result.reference) << '\n';
  for (const auto& row : result.rows) {
    out << row.label << ',' << row.solitons << ',' << csv_number(row.rmse_vs_reference) << ','
        << csv_number(row.report.summary.momentum_drift) << ',' << status(row.report) << '\n';
  }
}

}  // namespace kdv
