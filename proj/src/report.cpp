#include "itnorm/report.hpp"

namespace itnorm {

using nlohmann::ordered_json;

ordered_json rational_to_json(const Rational& q) {
  return ordered_json{{"num", q.numerator()}, {"den", q.denominator()}};
}

ordered_json atom_to_json(const LAtom& a, long long exp) {
  return ordered_json{{"slope", rational_to_json(a.arg.slope)},
                      {"intercept", rational_to_json(a.arg.intercept)},
                      {"base", base_id(a.base)},
                      {"exp", exp}};
}

ordered_json product_to_json(const LProduct& p) {
  ordered_json arr = ordered_json::array();
  for (const auto& [a, e] : p.atoms()) arr.push_back(atom_to_json(a, e));
  return arr;
}

ordered_json datum_to_json(const InductionDatum& d) {
  return ordered_json{{"kind", "classical"},
                      {"group", group_name(d.group)},
                      {"a", d.a},
                      {"support", d.support.entries()},
                      {"has_sigma", d.has_sigma}};
}

namespace {

ordered_json poles_to_json(const std::vector<Rational>& poles) {
  ordered_json arr = ordered_json::array();
  for (const auto& q : poles) arr.push_back(rational_to_json(q));
  return arr;
}

ordered_json conventions_json(const HolomorphyReport& rep) {
  ordered_json conv;
  conv["bilinear_form"] = "antidiagonal (split convention)";
  conv["identity_a_second_shift"] = "(r1-r2)/4";
  conv["tau_self_dual"] = true;
  conv["sigma_tail"] = "support ending at 0 or -1 absorbs the sigma factor in way quotients";
  if (!rep.is_gl) {
    conv["rho"] = rho_label_name(rho_of(rep.input.group));
    conv["rho_minus"] = rho_label_name(rho_minus_of(rep.input.group));
    if (rep.input.group == GroupType::OEven) conv["rho_table"] = "reused from D (non-connected O_2n)";
  }
  return conv;
}

}  // namespace

ordered_json report_to_json(const HolomorphyReport& rep) {
  ordered_json j;
  if (rep.is_gl) {
    j["input"] = ordered_json{{"kind", "gl"}, {"a", rep.gl_a}, {"b", rep.gl_b}};
  } else {
    j["input"] = datum_to_json(rep.input);
  }

  ordered_json strip = ordered_json::array();
  for (const auto& e : rep.strip_log)
    strip.push_back(ordered_json{{"pair", {e.r_high, e.r_low}}, {"branch", e.branch}});
  for (const auto& g : rep.gl_reductions)
    strip.push_back(ordered_json{{"from", {g.from_a, g.from_b}}, {"to", {g.to_a, g.to_b}}, {"way", g.way}});
  j["strip_log"] = strip;

  j["terminal_case"] = terminal_case_name(rep.terminal_case);

  ordered_json disc;
  for (const auto& [w, p] : rep.discrepancies) disc[way_name(w)] = product_to_json(p);
  j["discrepancies"] = disc.is_null() ? ordered_json::object() : disc;

  ordered_json ps;
  for (const auto& [w, poles] : rep.pole_sets) ps[way_name(w)] = poles_to_json(poles);
  j["pole_sets"] = ps.is_null() ? ordered_json::object() : ps;

  j["common_poles"] = poles_to_json(rep.common_poles);

  ordered_json exc = ordered_json::array();
  for (const auto& pt : rep.exceptional)
    exc.push_back(ordered_json{{"s", rational_to_json(pt.s)},
                               {"condition", pt.condition},
                               {"resolution", resolution_tag_name(pt.tag)}});
  j["exceptional"] = exc;

  j["verdict"] = rep.verdict;
  j["conventions"] = conventions_json(rep);
  return j;
}

std::string report_text(const HolomorphyReport& rep) {
  std::string out;
  if (rep.is_gl) {
    out += "input: GL pair a=" + std::to_string(rep.gl_a) + ", b=" + std::to_string(rep.gl_b) + "\n";
  } else {
    out += "input: group " + std::string(group_name(rep.input.group)) + ", a=" + std::to_string(rep.input.a) +
           ", support " + rep.input.support.text() + ", sigma: " + (rep.input.has_sigma ? "yes" : "no") + "\n";
  }

  if (rep.strip_log.empty() && rep.gl_reductions.empty()) {
    out += "strip log: (none)\n";
  } else {
    out += "strip log:\n";
    for (const auto& e : rep.strip_log)
      out += "  stripped (" + std::to_string(e.r_high) + "," + std::to_string(e.r_low) + ")  [" + e.branch + "]\n";
    for (const auto& g : rep.gl_reductions)
      out += "  matched (" + std::to_string(g.from_a) + "," + std::to_string(g.from_b) + ") -> (" +
             std::to_string(g.to_a) + "," + std::to_string(g.to_b) + ")  [Way " + std::to_string(g.way) + "]\n";
  }

  out += "terminal case: " + std::string(terminal_case_name(rep.terminal_case)) + "\n";

  if (!rep.discrepancies.empty()) {
    out += "discrepancies:\n";
    for (const auto& [w, p] : rep.discrepancies) {
      out += "  " + std::string(way_name(w)) + ": " + p.text();
      auto it = rep.pole_sets.find(w);
      if (it != rep.pole_sets.end()) {
        out += "   [poles:";
        if (it->second.empty()) out += " none";
        for (const auto& q : it->second) out += " " + rational_text(q);
        out += "]";
      }
      out += "\n";
    }
  }

  out += "common poles:";
  if (rep.common_poles.empty()) out += " none";
  for (const auto& q : rep.common_poles) out += " " + rational_text(q);
  out += "\n";

  if (!rep.exceptional.empty()) {
    out += "exceptional:\n";
    for (const auto& pt : rep.exceptional) {
      out += "  s=" + rational_text(pt.s) + ": " + resolution_tag_name(pt.tag);
      if (!pt.condition.empty()) out += "  -- " + pt.condition;
      out += "\n";
    }
  }

  out += "verdict: " + rep.verdict + "\n";
  return out;
}

}  // namespace itnorm
