#pragma once

#include <optional>
#include <string>

#include "ahs/config.hpp"
#include "ahs/suites.hpp"
#include "report.hpp"

namespace ahs::cli {

struct CArgs {
  unsigned n = 1;
  unsigned long D = 2;
  std::string method = "recurrence";  // brute | recurrence | bounds
};

struct TableArgs {
  unsigned n = 1;
  unsigned long d_max = 10;
  std::string what = "c";  // c | q | s | coeffs
};

struct HeightArgs {
  std::optional<std::string> poly;
  std::optional<std::string> point;
  std::optional<unsigned> n;
};

struct SlopeArgs {
  std::string poly;
  std::optional<unsigned> n;
  unsigned long D = 1;
  std::string mode = "exact";  // exact | bounds | b0
};

struct PointsArgs {
  std::string poly;
  std::optional<unsigned> n;
  std::string bound = "3";
  bool with_cover = false;
};

struct VerifyArgs {
  std::string suite = "all";
  SuiteGrid grid{0, 0, 0, 0, 0, 0};
};

Report cmd_c(const CArgs& a, const RunConfig& cfg);
Report cmd_table(const TableArgs& a, const RunConfig& cfg);
Report cmd_height(const HeightArgs& a, const RunConfig& cfg);
Report cmd_slope(const SlopeArgs& a, const RunConfig& cfg);
Report cmd_points(const PointsArgs& a, const RunConfig& cfg);
Report cmd_verify(const VerifyArgs& a, const RunConfig& cfg);

// Exact rational from "p/q", an integer or a finite decimal such as "5.1".
Rational parse_exact(const std::string& text);

}  // namespace ahs::cli
