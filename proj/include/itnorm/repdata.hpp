#pragma once

#include <optional>
#include <string>
#include <vector>

#include "itnorm/rational.hpp"

namespace itnorm {

// Quasi-split classical families.  B, C, D are the split types realized by
// the weyl module; the others enter the symbolic analysis only.
enum class GroupType { SOOdd, Sp, SOEven, UEven, UOdd, SOStarEven, OEven };

constexpr GroupType kAllGroups[] = {GroupType::SOOdd,  GroupType::Sp,        GroupType::SOEven,
                                    GroupType::UEven,  GroupType::UOdd,      GroupType::SOStarEven,
                                    GroupType::OEven};

// CLI names: "B", "C", "D", "U-even", "U-odd", "D-star", "O-even".
const char* group_name(GroupType g);
GroupType parse_group(const std::string& name);  // throws BadArgument

bool is_split(GroupType g);

// The concrete representation behind the abstract rho / rho^- pair.
enum class RhoLabel { Sym2, Lambda2, Asai, AsaiTwisted };

const char* rho_label_name(RhoLabel r);

RhoLabel rho_of(GroupType g);
RhoLabel rho_minus_of(GroupType g);

// Whether the n0 = 0 convention replaces L(s, tau x sigma) by the standard
// L-factor of tau (Sp and U-odd) or by 1 (everything else).
bool sigma_std_replacement(GroupType g);

// The parameter tuple (r_1, ..., r_t): strictly decreasing, same parity,
// r_t >= -1, t even (t = 0: supercuspidal sigma).
class SupportTuple {
 public:
  SupportTuple() = default;

  const std::vector<int>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }

  friend bool operator==(const SupportTuple&, const SupportTuple&) = default;

  std::string text() const;  // "(7,1)" ; "()" when empty

 private:
  friend SupportTuple validate_support(const std::vector<int>&);
  std::vector<int> entries_;
};

// Throws Error with the violated condition named: EntryBelowMinusOne,
// NotDecreasing, ParityMixed, OddLength.
SupportTuple validate_support(const std::vector<int>& entries);

// "3,-1" or "" -> tuple (validated).
SupportTuple parse_support(const std::string& csv);

// One segment |det|^exponent tau_size of the embedding attached to a pair
// (r_{2i-1}, r_{2i}); the pair (1,-1) has size 0 and is degenerate (it
// contributes nothing).
struct SegmentPair {
  Rational exponent;  // (r_{2i-1} - r_{2i}) / 4
  int size = 0;       // (r_{2i-1} + r_{2i}) / 2
  bool degenerate = false;

  int r_high() const;  // reconstructs r_{2i-1}
  int r_low() const;   // reconstructs r_{2i}

  friend bool operator==(const SegmentPair&, const SegmentPair&) = default;
};

std::vector<SegmentPair> segment_pairs(const SupportTuple& support);

// One input to the normalization analysis: |det|^s tau_a x| sigma_support on
// the given group.  has_sigma records whether the partial cuspidal support
// sits on a nontrivial group (n00 > 0).  tau is never materialized; the
// standing self-duality assumption tau ~ tau^vee is recorded on reports.
struct InductionDatum {
  GroupType group = GroupType::Sp;
  int a = 1;
  SupportTuple support;
  bool has_sigma = true;

  friend bool operator==(const InductionDatum&, const InductionDatum&) = default;
};

InductionDatum make_datum(GroupType g, int a, std::vector<int> support, bool has_sigma = true);

}  // namespace itnorm
