#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ahs/asymptotics.hpp"
#include "ahs/points.hpp"

namespace ahs {

enum class OutputFormat { kJson, kCsv };

struct RunConfig {
  Precision precision_bits = kDefaultPrecision;
  EpsilonSplit epsilon;
  std::optional<unsigned long> scan_max;  // unset means 10 delta + 100
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
  OutputFormat output_format = OutputFormat::kJson;

  unsigned long scan_max_for(unsigned long delta) const {
    return scan_max ? *scan_max : default_scan_max(delta);
  }
};

// Environment variable naming the default config file.
inline constexpr const char* kConfigEnvVar = "AHS_CONFIG";

// Applies one "key = value" setting; throws ParseError on unknown keys or
// bad values.
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value);

// Parses key=value lines; '#' starts a comment. Keys: precision_bits,
// epsilon, scan_max, enumeration_cap, output_format.
RunConfig parse_config(const std::string& text, RunConfig base = {});
RunConfig load_config_file(const std::string& path, RunConfig base = {});
// Reads the file named by AHS_CONFIG if set, else returns the defaults.
RunConfig load_default_config();

const char* to_string(OutputFormat f);

}  // namespace ahs
