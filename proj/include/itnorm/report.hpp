#pragma once

#include <string>

#include <json.hpp>

#include "itnorm/analysis.hpp"

namespace itnorm {

// All rationals serialize as {"num": n, "den": d} with den > 0 and gcd 1;
// no floating point anywhere in the interface.
nlohmann::ordered_json rational_to_json(const Rational& q);
nlohmann::ordered_json atom_to_json(const LAtom& a, long long exp);
nlohmann::ordered_json product_to_json(const LProduct& p);
nlohmann::ordered_json datum_to_json(const InductionDatum& d);

// Top-level keys: input, strip_log, terminal_case, discrepancies, pole_sets,
// common_poles, exceptional, verdict, conventions.
nlohmann::ordered_json report_to_json(const HolomorphyReport& rep);

std::string report_text(const HolomorphyReport& rep);

}  // namespace itnorm
