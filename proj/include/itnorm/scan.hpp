#pragma once

#include <map>
#include <ostream>
#include <string>

#include <json.hpp>

#include "itnorm/repdata.hpp"

namespace itnorm {

// Grid scan over (a, r1, r2) tuples.  Generated tuples either pass support
// validation or are skipped with a counted reason; reports stream as
// newline-delimited JSON in lexicographic (a, r1, r2) order regardless of how
// the classifications were scheduled.
struct ScanSpec {
  GroupType group = GroupType::Sp;
  int a_lo = 1, a_hi = 1;
  int r1_lo = 0, r1_hi = -1;
  int r2_lo = 0, r2_hi = -1;
  std::string parity = "any";  // "odd" | "even" | "any"
  bool has_sigma = true;
  bool step3_only = false;  // keep only straddling tuples r1 > a > r2
  std::string output = "-";
};

ScanSpec scan_spec_from_json(const nlohmann::json& j);  // throws Error(BadArgument) on bad fields

struct ScanSummary {
  long long scanned = 0;
  long long emitted = 0;
  std::map<std::string, long long> skipped;   // reason -> count
  std::map<std::string, long long> verdicts;  // verdict -> count
  std::vector<std::string> exceptional_beyond_zero;  // inputs with an exceptional point s != 0
};

ScanSummary run_scan(const ScanSpec& spec, std::ostream& reports, bool parallel = true);

nlohmann::ordered_json summary_to_json(const ScanSummary& s);

}  // namespace itnorm
