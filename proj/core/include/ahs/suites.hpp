#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ahs/asymptotics.hpp"

namespace ahs {

// Grid of a verification run. Zero fields fall back to the defaults.
struct SuiteGrid {
  unsigned n_max = 3;                // appendix n range is [2, n_max]
  unsigned long d_max = 60;          // appendix D range is [4, d_max]
  unsigned long d_max_c1 = 200;      // C(1,D) range is [4, d_max_c1]
  unsigned long lemma_d_max = 8;     // Jia-Jiao D, D' range is [0, lemma_d_max]
  unsigned random_count = 200;       // random forms and pairs
  std::uint64_t seed = 20240601;

  // Replaces zero fields by the defaults.
  SuiteGrid with_defaults() const;
};

// One certified check. verdict is kTrue when certified, kFalse when
// certainly violated and kUnknown when undecided.
struct CheckRow {
  std::string suite;
  std::string check;
  std::string params;
  Verdict verdict = Verdict::kUnknown;
  std::string detail;
};

enum class Suite { kAppendix, kLemmas, kHilbert, kHeights, kAll };

Suite parse_suite(const std::string& name);
const char* to_string(Suite s);

// Runs a suite and returns every check, failures included.
std::vector<CheckRow> run_suite(Suite suite, const SuiteGrid& grid, const EpsilonSplit& eps, Precision prec);

}  // namespace ahs
