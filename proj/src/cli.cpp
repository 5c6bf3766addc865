#include "kdv/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "kdv/config.hpp"
#include "kdv/errors.hpp"
#include "kdv/presets.hpp"
#include "kdv/report.hpp"

namespace kdv {

namespace {

namespace fs = std::filesystem;

struct Options {
  std::string out_dir = ".";
  int report_every = -1;
};

std::ofstream open_output(const Options& opt, const std::string& file) {
  fs::create_directories(opt.out_dir);
  std::ofstream f(fs::path(opt.out_dir) / file);
  if (!f) throw ConfigError("cannot write " + (fs::path(opt.out_dir) / file).string());
  return f;
}

void print_report(std::ostream& out, const ExperimentReport& r) {
  out << r.name << ": steps=" << r.summary.step << " t=" << csv_number(r.summary.time)
      << " rmse=" << csv_number(r.summary.rmse) << " linf=" << csv_number(r.summary.linf)
      << " dM=" << csv_number(r.summary.momentum_drift);
  if (!r.ok()) out << " FAILED(" << r.failure->kind << " at step " << r.failure->step << ")";
  out << '\n';
}

int finish_single(const Options& opt, const ExperimentReport& r, std::ostream& out) {
  {
    auto f = open_output(opt, r.name + ".csv");
    write_series_csv(f, r);
  }
  {
    auto f = open_output(opt, "summary.csv");
    write_summary_csv(f, {r});
  }
  print_report(out, r);
  return r.ok() ? 0 : 1;
}

SchemeVariant ramp_variant(const std::string& name) {
  using namespace variants;
  if (name == "exact_ramp") return lagrangian();
  if (name == "exact_ramp_mcons") return lagrangian_mcons();
  if (name == "exact_ramp_projection") return projection();
  if (name == "exact_ramp_projection_mcons") return projection_mcons();
  if (name == "exact_ramp_standard") return standard();
  if (name == "exact_ramp_standard_mcons") return standard_mcons();
  return ftcs();
}

int run_preset(const std::string& name, const Options& opt, std::ostream& out) {
  if (!is_preset(name)) throw ConfigError("unknown preset '" + name + "' (see `list`)");

  if (name.rfind("exact_ramp", 0) == 0) {
    ExperimentPreset p = ramp_preset(ramp_variant(name));
    p.name = name;
    if (opt.report_every >= 0) p.report_every = opt.report_every;
    return finish_single(opt, run(p), out);
  }

  if (name == "zabusky_kruskal_lagrangian") {
    ExperimentPreset p = zabusky_kruskal_preset(variants::lagrangian());
    p.name = name;
    if (opt.report_every >= 0) p.report_every = opt.report_every;
    const ExperimentReport r = run(p);
    finish_single(opt, r, out);
    // Node crossing before the final time is the expected outcome here. Nodes can
    // also pinch together far enough that the implicit solve goes singular first.
    if (!r.ok() && (r.failure->kind == "tangling" || r.failure->kind == "solver")) {
      out << "expected failure observed: mesh " << (r.failure->kind == "tangling" ? "tangling" : "collapse")
          << " at t=" << csv_number(r.failure->time) << " (min spacing " << csv_number(r.summary.min_spacing)
          << ", " << r.failure->kind << ")\n";
      return 0;
    }
    out << "note: the Lagrangian run reached the final time\n";
    return r.ok() ? 0 : 1;
  }

  std::vector<ExperimentReport> reports;
  bool all_ok = true;
  if (name == "cnoidal_convergence") {
    const auto rows = cnoidal_convergence_study();
    auto f = open_output(opt, "convergence.csv");
    write_convergence_csv(f, rows);
    for (const auto& row : rows) {
      out << row.label << ": order " << (row.failure.empty() ? csv_number(row.order) : row.failure) << '\n';
      all_ok = all_ok && row.failure.empty();
    }
  } else if (name == "cnoidal_soliton_rmse") {
    const auto rows = cnoidal_soliton_study();
    auto f = open_output(opt, "accuracy.csv");
    write_accuracy_csv(f, rows);
    for (const auto& row : rows) {
      ExperimentReport r = row.report;
      r.name = row.problem + "_" + row.label;
      print_report(out, r);
      reports.push_back(std::move(r));
    }
  } else if (name == "double_soliton_boost") {
    const auto rows = double_soliton_boost_study();
    auto f = open_output(opt, "boost.csv");
    write_boost_csv(f, rows);
    for (const auto& row : rows) {
      out << row.label << " c/dx=" << csv_number(row.c_over_dx) << " discrepancy=" << csv_number(row.discrepancy)
          << '\n';
    }
  } else if (name == "zabusky_kruskal") {
    const auto result = zabusky_kruskal_study(zabusky_kruskal_variants());
    auto f = open_output(opt, "zabusky_kruskal.csv");
    write_zabusky_kruskal_csv(f, result);
    ExperimentReport ref = result.reference;
    reports.push_back(ref);
    print_report(out, ref);
    all_ok = all_ok && ref.ok();
    for (const auto& row : result.rows) {
      out << row.label << ": solitons=" << row.solitons << " rmse_vs_reference=" << csv_number(row.rmse_vs_reference)
          << '\n';
      reports.push_back(row.report);
    }
  }
  for (const auto& r : reports) all_ok = all_ok && r.ok();
  if (!reports.empty()) {
    auto f = open_output(opt, "summary.csv");
    write_summary_csv(f, reports);
  }
  return all_ok ? 0 : 1;
}

int run_config(const std::string& path, const Options& opt, std::ostream& out) {
  ExperimentPreset p = preset_from_config(read_config_file(path));
  if (opt.report_every >= 0) p.report_every = opt.report_every;
  return finish_single(opt, run(p), out);
}

int run_sweep(const std::string& path, const std::string& param, const Options& opt, std::ostream& out) {
  const auto eq = param.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == param.size()) {
    throw ConfigError("--param expects key=v1,v2,...");
  }
  const std::string key = param.substr(0, eq);
  std::vector<std::string> values;
  std::stringstream list(param.substr(eq + 1));
  for (std::string v; std::getline(list, v, ',');) {
    if (v.empty()) throw ConfigError("empty value in --param");
    values.push_back(v);
  }

  const ConfigFile base = read_config_file(path);
  std::vector<ExperimentPreset> presets;
  for (const auto& v : values) {
    ConfigFile file = base;
    set_parameter(file, key, v);
    ExperimentPreset p = preset_from_config(file);
    p.name += "_" + key + "_" + v;
    if (opt.report_every >= 0) p.report_every = opt.report_every;
    presets.push_back(std::move(p));
  }

  std::vector<ExperimentReport> reports;
  bool all_ok = true;
  for (const auto& p : presets) {
    reports.push_back(run(p));
    auto f = open_output(opt, reports.back().name + ".csv");
    write_series_csv(f, reports.back());
    print_report(out, reports.back());
    all_ok = all_ok && reports.back().ok();
  }
  auto f = open_output(opt, "summary.csv");
  write_summary_csv(f, reports);

  const std::string bare = key.substr(key.find('.') == std::string::npos ? 0 : key.find('.') + 1);
  if (bare == "N" && all_ok && reports.front().has_reference && reports.size() >= 2) {
    std::vector<std::pair<int, double>> samples;
    for (const auto& r : reports) samples.emplace_back(r.summary.N, r.summary.linf);
    out << "observed order (linf vs N): " << csv_number(convergence_order(samples)) << '\n';
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-difference KdV benchmark driver"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  std::string seed;
  app.add_option("--out", opt.out_dir, "Directory for CSV output");
  app.add_option("--report-every", opt.report_every, "Record diagnostics every k steps")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", seed, "Rejected: every run is deterministic");

  std::string config_path;
  std::string preset_name;
  std::string param;
  auto* run_cmd = app.add_subcommand("run", "Run one experiment from a config file");
  run_cmd->add_option("config", config_path, "Experiment config file")->required();
  auto* preset_cmd = app.add_subcommand("preset", "Run a named experiment");
  preset_cmd->add_option("name", preset_name, "Preset name (see list)")->required();
  auto* list_cmd = app.add_subcommand("list", "List named experiments");
  auto* sweep_cmd = app.add_subcommand("sweep", "Run a config for several values of one parameter");
  sweep_cmd->add_option("config", config_path, "Experiment config file")->required();
  sweep_cmd->add_option("--param", param, "key=v1,v2,...")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  if (app.count("--seed") > 0) {
    err << "error: --seed is not supported; all runs are deterministic\n";
    return 2;
  }

  try {
    if (*list_cmd) {
      for (const auto& name : preset_names()) out << name << '\n';
      return 0;
    }
    if (*preset_cmd) return run_preset(preset_name, opt, out);
    if (*run_cmd) return run_config(config_path, opt, out);
    if (*sweep_cmd) return run_sweep(config_path, param, opt, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace kdv
