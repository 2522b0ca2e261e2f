#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "ahs/config.hpp"
#include "ahs/enclosure.hpp"

namespace ahs::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kJsonSchema = "ahs-report/1";
inline constexpr const char* kCsvSchema = "ahs-csv/1";

enum ExitCode { kOk = 0, kCertificationFailure = 1, kUsageError = 2, kResourceCap = 3 };

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

// Everything a command emits. When table has no columns the CSV form is
// the flattened results object.
struct Report {
  std::string command;
  Json arguments = Json::object();
  Json config = Json::object();
  Json results = Json::object();
  Json metadata = Json::object();
  Table table;
  int exit_code = kOk;
};

// {"lo": ..., "hi": ..., "precision": ...} with outward-rounded endpoints.
Json enclosure(const Real& x);
std::string verdict_name(Verdict v);
Json config_json(const RunConfig& cfg);

void write_json(std::ostream& os, const Report& r);
void write_csv(std::ostream& os, const Report& r);

}  // namespace ahs::cli
