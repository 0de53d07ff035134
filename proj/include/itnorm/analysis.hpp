#pragma once

#include <map>
#include <string>
#include <vector>

#include "itnorm/lfactor.hpp"
#include "itnorm/repdata.hpp"

namespace itnorm {

// One reduced decomposition diagram.  GL ways act on a pair of segments,
// Step2A on tau_a vs supercuspidal sigma, Step2B on tau vs sigma_(r1,r2)
// with r1 > 1 > r2, Step3 on tau_a vs sigma_(r1,r2) with r1 > a > r2, and
// Step1_Reduction strips the leading segment pair.
enum class WayId {
  GL_Way1,
  GL_Way2,
  GL_Way3,
  GL_Way4,
  Step2A_Way1,
  Step2A_Way2,
  Step2B_Way3,
  Step2B_Way4,
  Step3_Way1,
  Step3_Way2,
  Step3_Way3,
  Step1_Reduction,
};

const char* way_name(WayId w);

// alpha(s, tau_a, sigma) = L(2s, tau_a, rho) * L(s, tau_a x sigma), with the
// tensor factor expanded along the support: one (B)-product per positive r_i,
// the inverse convention for r_i = -1, nothing for r_i = 0, and the sigma
// factor L(s+(a-1)/2, tau x sigma) (TauStd / absent when has_sigma is false).
LProduct alpha(const InductionDatum& d);

// beta: the rho part moves to 2s+1 and the tensor part to s+1.
LProduct beta(const InductionDatum& d);

// Normalization factor of the GL swap of |det|^x tau_a and |det|^y tau_b:
// L(x-y, tau_a x tau_b).  x - y must have positive slope (NonPositiveSlope
// signals a misapplied diagram).
LProduct alpha_gl(int a, int b, const Affine& x, const Affine& y);

// The canonicalized quotient of the three constituent normalization factors
// of the cited diagram by the normalization factor of the left-hand side.
// Quotient constituents follow the convention that a support ending at 0 or
// -1 absorbs the sigma factor (see closed_form, whose printed shapes force
// it); the public alpha() above keeps the faithful expansion.
LProduct discrepancy(WayId way, const InductionDatum& d);  // throws WayNotApplicable

// Direct transcription of the printed closed form for the applicable parity
// and r2-sign branch; oracle against discrepancy().
LProduct closed_form(WayId way, const InductionDatum& d);  // throws WayNotApplicable

enum class IdentityAShift { Corrected, Printed };  // +(r1-r2)/4 vs +(r1+r2)/4

struct IdentityWitness {
  bool ok = false;
  LProduct lhs;
  LProduct rhs;
  LProduct residual;  // lhs / rhs; empty iff ok
};

// The Step 1 L-function identity
//   L(s-(r1-r2)/4, tau_a x tau_c) L(s+shift, tau_a x tau_c)
//     = L(s, tau_a x tau_r1) L(s, tau_a x tau_r2),   c = (r1+r2)/2,
// checked as a multiset identity; the Printed variant uses +(r1+r2)/4 and
// fails the check.  Preconditions: a >= r1 > r2 >= 1 or r1 > r2 >= a >= 1,
// with r1, r2 of one parity.
IdentityWitness verify_identity_a(int a, int r1, int r2,
                                  IdentityAShift shift = IdentityAShift::Corrected);

struct ReductionWitness {
  bool ok = false;
  std::string branch;  // "a>=r1>r2", "r1>r2>=a", or "degenerate"
  LProduct residual;
};

// Checks that stripping the leading segment pair preserves normalization
// factors: alpha(d) == alpha_gl(a, size, s, e) * alpha(d') * alpha_gl(a,
// size, e, -s).  Throws PairNotStrippable when the pair straddles a.
ReductionWitness verify_reduction_step(const InductionDatum& d);

enum class TerminalCase { GLLemma, Step2Supercuspidal, Step2SegmentVsSigmaR, Step3, CorankOneBase };

const char* terminal_case_name(TerminalCase t);

enum class ResolutionTag { MultiplicityFreeInvolution, KernelDiagram, CoprimeInduction };

const char* resolution_tag_name(ResolutionTag t);

struct StripEntry {
  int r_high = 0;
  int r_low = 0;
  std::string branch;
};

struct GlReduction {
  int from_a = 0, from_b = 0;
  int to_a = 0, to_b = 0;
  int way = 0;  // 3 when a >= b, 2 when a < b
};

struct ExceptionalPoint {
  Rational s;
  std::string condition;
  ResolutionTag tag = ResolutionTag::KernelDiagram;
};

struct HolomorphyReport {
  bool is_gl = false;
  InductionDatum input;       // when !is_gl
  int gl_a = 0, gl_b = 0;     // when is_gl

  std::vector<StripEntry> strip_log;
  std::vector<GlReduction> gl_reductions;
  TerminalCase terminal_case = TerminalCase::CorankOneBase;
  InductionDatum terminal_datum;  // datum the ways were evaluated on (when !is_gl)
  std::map<WayId, LProduct> discrepancies;
  std::map<WayId, std::vector<Rational>> pole_sets;
  std::vector<Rational> common_poles;
  std::vector<ExceptionalPoint> exceptional;
  std::string verdict;
};

// Strips every strippable pair, dispatches the terminal case, computes the
// applicable discrepancies and pole sets, and intersects them.  At the Step 3
// terminal s = 0 is retained unconditionally (it is disposed of by the
// involution argument, never by coprimality), so common_poles there is the
// intersection together with 0.
HolomorphyReport classify(const InductionDatum& d);

// GL pair: reduces along the matching way (Way 3 for a >= b, Way 2 for
// a < b) to a corank-one-against-segment case, then intersects the two
// terminal discrepancies.
HolomorphyReport classify_gl(int a, int b);

std::vector<Rational> intersect_sorted(const std::vector<Rational>& a, const std::vector<Rational>& b);

}  // namespace itnorm
