#include "itnorm/repdata.hpp"

#include <sstream>

#include "itnorm/error.hpp"

namespace itnorm {

const char* group_name(GroupType g) {
  switch (g) {
    case GroupType::SOOdd: return "B";
    case GroupType::Sp: return "C";
    case GroupType::SOEven: return "D";
    case GroupType::UEven: return "U-even";
    case GroupType::UOdd: return "U-odd";
    case GroupType::SOStarEven: return "D-star";
    case GroupType::OEven: return "O-even";
  }
  return "?";
}

GroupType parse_group(const std::string& name) {
  for (GroupType g : kAllGroups)
    if (name == group_name(g)) return g;
  throw Error(Errc::BadArgument,
              "unknown group '" + name + "' (expected B, C, D, U-even, U-odd, D-star, O-even)");
}

bool is_split(GroupType g) {
  return g == GroupType::SOOdd || g == GroupType::Sp || g == GroupType::SOEven;
}

const char* rho_label_name(RhoLabel r) {
  switch (r) {
    case RhoLabel::Sym2: return "Sym2";
    case RhoLabel::Lambda2: return "Lambda2";
    case RhoLabel::Asai: return "Asai";
    case RhoLabel::AsaiTwisted: return "Asai(x)chi";
  }
  return "?";
}

RhoLabel rho_of(GroupType g) {
  switch (g) {
    case GroupType::SOOdd: return RhoLabel::Sym2;
    case GroupType::Sp:
    case GroupType::SOEven:
    case GroupType::SOStarEven:
    case GroupType::OEven:  // non-connected O_{2n}: D table reused, flagged in reports
      return RhoLabel::Lambda2;
    case GroupType::UEven: return RhoLabel::Asai;
    case GroupType::UOdd: return RhoLabel::AsaiTwisted;
  }
  return RhoLabel::Sym2;
}

RhoLabel rho_minus_of(GroupType g) {
  switch (g) {
    case GroupType::SOOdd: return RhoLabel::Lambda2;
    case GroupType::Sp:
    case GroupType::SOEven:
    case GroupType::SOStarEven:
    case GroupType::OEven:
      return RhoLabel::Sym2;
    case GroupType::UEven: return RhoLabel::AsaiTwisted;
    case GroupType::UOdd: return RhoLabel::Asai;
  }
  return RhoLabel::Lambda2;
}

bool sigma_std_replacement(GroupType g) {
  return g == GroupType::Sp || g == GroupType::UOdd;
}

SupportTuple validate_support(const std::vector<int>& entries) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] < -1)
      throw Error(Errc::EntryBelowMinusOne, "r_" + std::to_string(i + 1) + " = " + std::to_string(entries[i]));
    if (i > 0 && entries[i - 1] <= entries[i])
      throw Error(Errc::NotDecreasing, "r_" + std::to_string(i) + " = " + std::to_string(entries[i - 1]) +
                                           " <= r_" + std::to_string(i + 1) + " = " + std::to_string(entries[i]));
    // -1 counts as odd
    if (((entries[i] % 2) + 2) % 2 != ((entries[0] % 2) + 2) % 2)
      throw Error(Errc::ParityMixed, "r_1 = " + std::to_string(entries[0]) + " vs r_" + std::to_string(i + 1) +
                                         " = " + std::to_string(entries[i]));
  }
  if (entries.size() % 2 != 0)
    throw Error(Errc::OddLength, "t = " + std::to_string(entries.size()) + " must be even");
  SupportTuple t;
  t.entries_ = entries;
  return t;
}

SupportTuple parse_support(const std::string& csv) {
  std::vector<int> entries;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    // tolerate surrounding blanks
    std::size_t b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    std::size_t e = item.find_last_not_of(" \t");
    try {
      entries.push_back(std::stoi(item.substr(b, e - b + 1)));
    } catch (const std::exception&) {
      throw Error(Errc::BadArgument, "support entry '" + item + "' is not an integer");
    }
  }
  return validate_support(entries);
}

std::string SupportTuple::text() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(entries_[i]);
  }
  return out + ")";
}

int SegmentPair::r_high() const {
  Rational r = Rational(2) * exponent + Rational(size);  // r1 = 2e + c
  return static_cast<int>(r.numerator() / r.denominator());
}

int SegmentPair::r_low() const { return 2 * size - r_high(); }  // r2 = c - 2e

std::vector<SegmentPair> segment_pairs(const SupportTuple& support) {
  std::vector<SegmentPair> pairs;
  for (std::size_t i = 0; i + 1 < support.size(); i += 2) {
    int r1 = support[i], r2 = support[i + 1];
    SegmentPair p;
    p.exponent = Rational(r1 - r2, 4);
    p.size = (r1 + r2) / 2;
    p.degenerate = (p.size == 0);  // exactly the pair (1,-1)
    pairs.push_back(p);
  }
  return pairs;
}

InductionDatum make_datum(GroupType g, int a, std::vector<int> support, bool has_sigma) {
  if (a < 1) throw Error(Errc::BadArgument, "segment length a must be >= 1, got " + std::to_string(a));
  return InductionDatum{g, a, validate_support(support), has_sigma};
}

}  // namespace itnorm
