#include "kdv/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <set>

#include "kdv/errors.hpp"

namespace kdv {

namespace {

const std::set<std::string> known_sections{"scheme", "mesh", "solution", "domain", "output"};

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string strip_comment(const std::string& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if ((s[i] == '#' || s[i] == ';') && (i == 0 || s[i - 1] == ' ' || s[i - 1] == '\t')) return s.substr(0, i);
  }
  return s;
}

/// Consumes entries of one section; anything left unread is an error.
class SectionReader {
 public:
  SectionReader(const ConfigFile& file, const std::string& name) : name_(name) {
    const auto it = file.sections.find(name);
    if (it != file.sections.end()) entries_ = &it->second;
    const auto line = file.section_lines.find(name);
    line_ = line == file.section_lines.end() ? 0 : line->second;
  }

  bool has(const std::string& key) const { return entries_ && entries_->count(key) > 0; }

  const ConfigEntry& entry(const std::string& key) {
    if (!has(key)) throw ConfigError("missing key '" + key + "' in [" + name_ + "]", line_);
    used_.insert(key);
    return entries_->at(key);
  }

  std::string text(const std::string& key, const std::string& fallback) {
    return has(key) ? entry(key).value : fallback;
  }
  std::string text(const std::string& key) { return entry(key).value; }

  double number(const std::string& key) {
    const ConfigEntry& e = entry(key);
    double v = 0;
    const char* begin = e.value.data();
    const char* end = begin + e.value.size();
    const auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end) throw ConfigError("'" + key + "' is not a number: " + e.value, e.line);
    return v;
  }
  double number(const std::string& key, double fallback) { return has(key) ? number(key) : fallback; }

  int integer(const std::string& key) {
    const ConfigEntry& e = entry(key);
    int v = 0;
    const char* begin = e.value.data();
    const char* end = begin + e.value.size();
    const auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end) throw ConfigError("'" + key + "' is not an integer: " + e.value, e.line);
    return v;
  }
  int integer(const std::string& key, int fallback) { return has(key) ? integer(key) : fallback; }

  bool boolean(const std::string& key, bool fallback) {
    if (!has(key)) return fallback;
    const ConfigEntry& e = entry(key);
    if (e.value == "true" || e.value == "1" || e.value == "yes") return true;
    if (e.value == "false" || e.value == "0" || e.value == "no") return false;
    throw ConfigError("'" + key + "' is not a boolean: " + e.value, e.line);
  }

  int line_of(const std::string& key) const { return has(key) ? entries_->at(key).line : line_; }

  [[noreturn]] void bad_value(const std::string& key, const std::string& expected) {
    const ConfigEntry& e = entry(key);
    throw ConfigError("'" + key + "' must be " + expected + ", got '" + e.value + "'", e.line);
  }

  void finish() const {
    if (!entries_) return;
    for (const auto& [key, e] : *entries_) {
      if (!used_.count(key)) throw ConfigError("unknown key '" + key + "' in [" + name_ + "]", e.line);
    }
  }

 private:
  std::string name_;
  const std::map<std::string, ConfigEntry>* entries_ = nullptr;
  std::set<std::string> used_;
  int line_ = 0;
};

SchemeKind parse_kind(SectionReader& s) {
  const std::string k = s.text("kind");
  if (k == "standard_ftcs") return SchemeKind::StandardFTCS;
  if (k == "explicit_six") return SchemeKind::InvariantExplicitSix;
  if (k == "implicit_six") return SchemeKind::InvariantImplicitSix;
  if (k == "trapezoidal_ten") return SchemeKind::InvariantTrapezoidalTen;
  if (k == "momentum_conserving") return SchemeKind::MomentumConservingInvariant;
  s.bad_value("kind", "standard_ftcs, explicit_six, implicit_six, trapezoidal_ten or momentum_conserving");
}

MeshStrategy parse_mesh(SectionReader& s) {
  const std::string strategy = s.text("strategy", "fixed");
  if (strategy == "fixed") return FixedMesh{};
  if (strategy == "lagrangian") return LagrangianMesh{};
  if (strategy == "projection") {
    EvolutionProjection ep;
    ep.order = s.integer("order", 2);
    const std::string stencil = s.text("stencil", "contiguous");
    if (stencil == "spread") {
      ep.variant = StencilVariant::Spread;
    } else if (stencil != "contiguous") {
      s.bad_value("stencil", "contiguous or spread");
    }
    return ep;
  }
  if (strategy == "adaptive") {
    AdaptiveMesh am;
    const double alpha = s.number("alpha", 0.0);
    const std::string monitor = s.text("monitor", "arclength");
    if (monitor == "arclength") {
      am.monitor = ArcLengthInvariant{alpha};
    } else if (monitor == "curvature") {
      am.monitor = CurvatureNonInvariant{alpha};
    } else {
      s.bad_value("monitor", "arclength or curvature");
    }
    const std::string gauge = s.text("gauge", "comoving");
    if (gauge == "pinned") {
      am.gauge = PeriodicGauge::Pinned;
    } else if (gauge != "comoving") {
      s.bad_value("gauge", "comoving or pinned");
    }
    am.smooth_monitor = s.boolean("smooth", false);
    return am;
  }
  s.bad_value("strategy", "fixed, lagrangian, projection or adaptive");
}

struct ParsedSolution {
  InitialData data;
  std::optional<solution::CnoidalBoosted> cnoidal;
};

ParsedSolution parse_solution(SectionReader& s) {
  const std::string type = s.text("type");
  auto n = [&](const char* key) { return s.number(key); };
  KdvSolution sol = solution::Constant{0.0};
  std::optional<solution::CnoidalBoosted> cnoidal;
  if (type == "cosine") {
    CosineProfile c;
    c.amplitude = s.number("amplitude", 1.0);
    c.wavenumber = s.number("wavenumber", c.wavenumber);
    return {c, std::nullopt};
  } else if (type == "constant") {
    sol = solution::Constant{n("A")};
  } else if (type == "galilean_ramp") {
    sol = solution::GalileanRamp{s.number("t0", 0.0), s.number("x0", 0.0)};
  } else if (type == "rational") {
    sol = solution::Rational{s.integer("order")};
  } else if (type == "cnoidal_boosted") {
    cnoidal = solution::CnoidalBoosted{n("a"), n("v")};
    sol = *cnoidal;
  } else if (type == "soliton_boosted") {
    sol = solution::SolitonBoosted{n("v")};
  } else if (type == "soliton") {
    sol = solution::Soliton{n("a")};
  } else if (type == "singular_snoidal") {
    sol = solution::SingularSnoidal{n("a"), n("c")};
  } else if (type == "singular_soliton") {
    sol = solution::SingularSoliton{n("a")};
  } else if (type == "singular_trig") {
    sol = solution::SingularTrig{n("a")};
  } else if (type == "algebraic_soliton") {
    sol = solution::AlgebraicSolitonBoosted{n("v")};
  } else if (type == "complex_root_wave") {
    sol = solution::ComplexRootWave{n("a"), n("q")};
  } else if (type == "double_soliton") {
    sol = solution::DoubleSoliton{n("alpha1"), n("alpha2"), n("B1"), n("B2"), s.number("c", 0.0)};
  } else {
    s.bad_value("type", "a known solution type");
  }
  GroupElement g;
  g.d = s.number("dilation", 0.0);
  g.v = s.number("boost", 0.0);
  g.t0 = s.number("shift_t", 0.0);
  g.x0 = s.number("shift_x", 0.0);
  g.reflect = s.boolean("reflect", false);
  try {
    return {ExactSolution(sol, g), cnoidal};
  } catch (const DomainError& e) {
    throw ConfigError(e.what(), s.line_of("type"));
  }
}

}  // namespace

ConfigFile parse_config(std::istream& in) {
  ConfigFile file;
  std::string raw;
  std::string section;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string s = trim(strip_comment(raw));
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') throw ConfigError("unterminated section header", line);
      section = trim(s.substr(1, s.size() - 2));
      if (!known_sections.count(section)) throw ConfigError("unknown section [" + section + "]", line);
      if (file.section_lines.count(section)) throw ConfigError("duplicate section [" + section + "]", line);
      file.section_lines[section] = line;
      file.sections[section];
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw ConfigError("expected 'key = value'", line);
    if (section.empty()) throw ConfigError("entry before any section header", line);
    const std::string key = trim(s.substr(0, eq));
    const std::string value = trim(s.substr(eq + 1));
    if (key.empty()) throw ConfigError("empty key", line);
    if (value.empty()) throw ConfigError("empty value for '" + key + "'", line);
    auto& entries = file.sections[section];
    if (entries.count(key)) throw ConfigError("duplicate key '" + key + "'", line);
    entries[key] = ConfigEntry{value, line};
  }
  return file;
}

ConfigFile read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  return parse_config(in);
}

void set_parameter(ConfigFile& file, const std::string& key, const std::string& value) {
  const auto dot = key.find('.');
  if (dot != std::string::npos) {
    const std::string section = key.substr(0, dot);
    if (!known_sections.count(section)) throw ConfigError("unknown section in parameter " + key);
    file.sections[section][key.substr(dot + 1)].value = value;
    return;
  }
  std::string owner;
  for (const auto& [section, entries] : file.sections) {
    if (entries.count(key)) {
      if (!owner.empty()) throw ConfigError("parameter '" + key + "' is ambiguous; use section.key");
      owner = section;
    }
  }
  if (owner.empty()) {
    // Sweeps commonly vary these without listing them first.
    if (key == "N") owner = "domain";
    else if (key == "dt") owner = "scheme";
    else throw ConfigError("parameter '" + key + "' not present in config");
  }
  file.sections[owner][key].value = value;
}

ExperimentPreset preset_from_config(const ConfigFile& file) {
  SectionReader scheme(file, "scheme");
  SectionReader mesh(file, "mesh");
  SectionReader sol(file, "solution");
  SectionReader domain(file, "domain");
  SectionReader output(file, "output");

  ExperimentPreset p;
  p.scheme.kind = parse_kind(scheme);
  p.scheme.dt = scheme.number("dt");
  if (!(p.scheme.dt > 0)) throw ConfigError("dt must be positive", scheme.line_of("dt"));
  p.scheme.dispersion = scheme.number("dispersion", 1.0);
  if (!(p.scheme.dispersion > 0)) throw ConfigError("dispersion must be positive", scheme.line_of("dispersion"));
  const std::string levels = scheme.text("momentum_levels", "trapezoidal");
  if (levels == "explicit") {
    p.scheme.momentum_levels = MomentumLevels::Explicit;
  } else if (levels != "trapezoidal") {
    scheme.bad_value("momentum_levels", "explicit or trapezoidal");
  }
  p.scheme.mesh = parse_mesh(mesh);

  const ParsedSolution parsed = parse_solution(sol);
  p.initial = parsed.data;

  p.domain.left = domain.number("left", 0.0);
  if (domain.has("right") && domain.text("right") == "period") {
    if (!parsed.cnoidal) throw ConfigError("'right = period' needs a cnoidal solution", domain.line_of("right"));
    p.domain.right = p.domain.left + spatial_period(*parsed.cnoidal);
  } else {
    p.domain.right = domain.number("right");
  }
  const std::string boundary = domain.text("boundary", "periodic");
  if (boundary == "dirichlet") {
    p.domain.periodic = false;
  } else if (boundary != "periodic") {
    domain.bad_value("boundary", "periodic or dirichlet");
  }
  p.N = domain.integer("N");
  if (p.N < 5) throw ConfigError("N must be at least 5", domain.line_of("N"));
  p.t_start = domain.number("t_start", 0.0);
  p.t_final = domain.number("t_final");
  if (!(p.t_final > p.t_start)) throw ConfigError("t_final must exceed t_start", domain.line_of("t_final"));

  p.name = output.text("name", "run");
  p.report_every = output.integer("report_every", 0);
  if (p.report_every < 0) throw ConfigError("report_every must be non-negative", output.line_of("report_every"));
  p.soliton_threshold = output.number("soliton_threshold", 0.3);

  for (const SectionReader* r : {&scheme, &mesh, &sol, &domain, &output}) r->finish();
  try {
    p.validate();
  } catch (const ConfigError& e) {
    throw ConfigError(e.what(), scheme.line_of("kind"));
  }
  return p;
}

}  // namespace kdv
