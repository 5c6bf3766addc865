#pragma once

// CSV output. Wall-clock time is kept out of every file so that repeated
// runs produce identical bytes.

#include <ostream>
#include <string>
#include <vector>

#include "kdv/presets.hpp"

namespace kdv {

std::string csv_number(double value);

/// Header `step,time,rmse,linf,momentum,min_spacing`, one row per recorded
/// step, then a row whose first field is `summary`.
void write_series_csv(std::ostream& out, const ExperimentReport& report);

/// One row per run: name,N,dt,steps,time,rmse,linf,momentum,momentum_drift,min_spacing,status.
void write_summary_csv(std::ostream& out, const std::vector<ExperimentReport>& reports);

void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows);
void write_accuracy_csv(std::ostream& out, const std::vector<AccuracyRow>& rows);
void write_boost_csv(std::ostream& out, const std::vector<BoostRow>& rows);
void write_zabusky_kruskal_csv(std::ostream& out, const ZabuskyKruskalResult& result);

}  // namespace kdv
