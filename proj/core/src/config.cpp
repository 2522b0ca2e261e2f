#include "ahs/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ahs/errors.hpp"

namespace ahs {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

unsigned long long parse_unsigned(const std::string& key, const std::string& value) {
  if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError(key + ": expected a nonnegative integer, got '" + value + "'", 0);
  }
  try {
    return std::stoull(value);
  } catch (const std::out_of_range&) {
    throw ParseError(key + ": value out of range", 0);
  }
}

}  // namespace

const char* to_string(OutputFormat f) { return f == OutputFormat::kJson ? "json" : "csv"; }

void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "precision_bits") {
    auto v = parse_unsigned(key, value);
    if (v < static_cast<unsigned long long>(kMinPrecision) || v > static_cast<unsigned long long>(kMaxPrecision)) {
      throw ParseError("precision_bits must lie in [" + std::to_string(kMinPrecision) + ", " +
                           std::to_string(kMaxPrecision) + "]",
                       0);
    }
    cfg.precision_bits = static_cast<Precision>(v);
  } else if (key == "epsilon") {
    Rational e;
    try {
      e = Rational(value);
      e.canonicalize();
    } catch (const std::invalid_argument&) {
      throw ParseError("epsilon: expected p/q or an integer, got '" + value + "'", 0);
    }
    try {
      cfg.epsilon = EpsilonSplit(e);
    } catch (const DomainError& err) {
      throw ParseError(std::string("epsilon: ") + err.what(), 0);
    }
  } else if (key == "scan_max") {
    cfg.scan_max = parse_unsigned(key, value);
  } else if (key == "enumeration_cap") {
    cfg.enumeration_cap = parse_unsigned(key, value);
  } else if (key == "output_format") {
    if (value == "json") {
      cfg.output_format = OutputFormat::kJson;
    } else if (value == "csv") {
      cfg.output_format = OutputFormat::kCsv;
    } else {
      throw ParseError("output_format must be json or csv", 0);
    }
  } else {
    throw ParseError("unknown config key '" + key + "'", 0);
  }
}

RunConfig parse_config(const std::string& text, RunConfig base) {
  std::istringstream in(text);
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    std::size_t line_start = offset;
    offset += line.size() + 1;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected key = value", line_start);
    try {
      apply_setting(base, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()).substr(0, std::string(e.what()).rfind(" at position")),
                       line_start);
    }
  }
  return base;
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file '" + path + "'", 0);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), std::move(base));
}

RunConfig load_default_config() {
  const char* path = std::getenv(kConfigEnvVar);
  if (!path || !*path) return {};
  return load_config_file(path);
}

}  // namespace ahs
