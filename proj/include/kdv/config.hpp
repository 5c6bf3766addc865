#pragma once

// Experiment configuration files.
//
//   # comment                 (also ';', and trailing " # ...")
//   [section]                 scheme | mesh | solution | domain | output
//   key = value
//
// Errors carry the 1-based line of the offending entry.

#include <istream>
#include <map>
#include <string>

#include "kdv/simulation.hpp"

namespace kdv {

struct ConfigEntry {
  std::string value;
  int line = 0;
};

struct ConfigFile {
  std::map<std::string, std::map<std::string, ConfigEntry>> sections;
  std::map<std::string, int> section_lines;
};

ConfigFile parse_config(std::istream& in);
ConfigFile read_config_file(const std::string& path);

/// Overrides `key` (either "section.key" or a key unique across sections).
void set_parameter(ConfigFile& file, const std::string& key, const std::string& value);

ExperimentPreset preset_from_config(const ConfigFile& file);

}  // namespace kdv
