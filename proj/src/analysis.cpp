#include "itnorm/analysis.hpp"

#include <algorithm>

#include "itnorm/error.hpp"

namespace itnorm {

namespace {

// Internal datum: entries may take the boundary forms (0,0) and (1,-1) that
// appear inside Way-3 numerators; SupportTuple validation applies to user
// input only.
struct FormalDatum {
  GroupType group;
  int a;
  std::vector<int> entries;
  bool has_sigma;
};

FormalDatum formal(const InductionDatum& d) {
  return FormalDatum{d.group, d.a, d.support.entries(), d.has_sigma};
}

enum class SigmaTail {
  Faithful,  // keep the tau_{-1} inverse and the sigma factor
  Absorbed,  // a support ending at 0 or -1 drops both (the convention the printed quotients use)
};

// alpha-shaped normalization factor with independent shifts of the rho part
// (argument 2s + 2*rho_shift) and the tensor part (s + tensor_shift).
LProduct norm_factor(const FormalDatum& fd, const Rational& rho_shift, const Rational& tensor_shift,
                     SigmaTail tail) {
  LProduct out = expand_rho(fd.a, two_s_plus(Rational(2) * rho_shift));
  bool absorbed = tail == SigmaTail::Absorbed && !fd.entries.empty() && fd.entries.back() <= 0;
  for (int r : fd.entries) {
    if (r >= 1) {
      out = out * expand_tensor(fd.a, r, s_plus(tensor_shift));
    } else if (r == -1 && !absorbed) {
      out = out * inverse(expand_tensor(fd.a, 1, s_plus(tensor_shift)));
    }
    // r == 0 contributes nothing
  }
  if (!absorbed) {
    Affine arg = s_plus(tensor_shift + Rational(fd.a - 1, 2));
    if (fd.has_sigma) {
      out.mul_atom(atom(arg, BaseKind::TauSigma));
    } else if (sigma_std_replacement(fd.group)) {
      out.mul_atom(atom(arg, BaseKind::TauStd));
    }
  }
  return out;
}

// alpha(s + t, tau_{a_seg}, sigma_entries)
LProduct alpha_at(const FormalDatum& base, int a_seg, const Rational& t, SigmaTail tail) {
  FormalDatum fd = base;
  fd.a = a_seg;
  return norm_factor(fd, t, t, tail);
}

struct Pair {
  int r1, r2;
};

Pair the_pair(const InductionDatum& d) {
  return Pair{d.support[0], d.support[1]};
}

void require(bool cond, WayId way, const std::string& need) {
  if (!cond) throw Error(Errc::WayNotApplicable, std::string(way_name(way)) + " needs " + need);
}

LProduct quotient(const LProduct& num, const LProduct& den) { return canonicalize(num * inverse(den)); }

// The sigma factor of a printed closed form, subject to the n0 = 0
// replacement applied before quotienting.
void push_sigma_atom(LProduct& p, const InductionDatum& d, const Rational& shift) {
  if (d.has_sigma) {
    p.mul_atom(atom(s_plus(shift), BaseKind::TauSigma));
  } else if (sigma_std_replacement(d.group)) {
    p.mul_atom(atom(s_plus(shift), BaseKind::TauStd));
  }
}

bool strippable(int a, int r1, int r2) { return a >= r1 || r2 >= a; }

struct StripCheck {
  bool ok;
  std::string branch;
  LProduct residual;
};

// Multiset identity behind removing pair `idx` from the support; valid for
// any non-straddling pair (the pairs commute).
StripCheck strip_check(const InductionDatum& d, std::size_t idx) {
  auto pairs = segment_pairs(d.support);
  const SegmentPair& p = pairs[idx];
  int r1 = p.r_high(), r2 = p.r_low();

  std::vector<int> rest;
  for (std::size_t i = 0; i < d.support.size(); ++i)
    if (i != 2 * idx && i != 2 * idx + 1) rest.push_back(d.support[i]);
  FormalDatum reduced = formal(d);
  reduced.entries = rest;

  LProduct rhs = alpha_at(reduced, d.a, Rational(0), SigmaTail::Faithful);
  if (!p.degenerate) {
    rhs = rhs * alpha_gl(d.a, p.size, s_plus(0), Affine{Rational(0), p.exponent});
    rhs = rhs * alpha_gl(d.a, p.size, Affine{Rational(0), p.exponent}, Affine{Rational(-1), Rational(0)});
  }
  LProduct lhs = alpha(d);

  StripCheck out;
  out.ok = lhs == rhs;
  out.residual = lhs * inverse(rhs);
  out.branch = p.degenerate ? "degenerate" : (d.a >= r1 ? "a>=r1>r2" : "r1>r2>=a");
  return out;
}

}  // namespace

const char* way_name(WayId w) {
  switch (w) {
    case WayId::GL_Way1: return "GL_Way1";
    case WayId::GL_Way2: return "GL_Way2";
    case WayId::GL_Way3: return "GL_Way3";
    case WayId::GL_Way4: return "GL_Way4";
    case WayId::Step2A_Way1: return "Step2A_Way1";
    case WayId::Step2A_Way2: return "Step2A_Way2";
    case WayId::Step2B_Way3: return "Step2B_Way3";
    case WayId::Step2B_Way4: return "Step2B_Way4";
    case WayId::Step3_Way1: return "Step3_Way1";
    case WayId::Step3_Way2: return "Step3_Way2";
    case WayId::Step3_Way3: return "Step3_Way3";
    case WayId::Step1_Reduction: return "Step1_Reduction";
  }
  return "?";
}

const char* terminal_case_name(TerminalCase t) {
  switch (t) {
    case TerminalCase::GLLemma: return "GLLemma";
    case TerminalCase::Step2Supercuspidal: return "Step2Supercuspidal";
    case TerminalCase::Step2SegmentVsSigmaR: return "Step2SegmentVsSigmaR";
    case TerminalCase::Step3: return "Step3";
    case TerminalCase::CorankOneBase: return "CorankOneBase";
  }
  return "?";
}

const char* resolution_tag_name(ResolutionTag t) {
  switch (t) {
    case ResolutionTag::MultiplicityFreeInvolution: return "MultiplicityFreeInvolution";
    case ResolutionTag::KernelDiagram: return "KernelDiagram";
    case ResolutionTag::CoprimeInduction: return "CoprimeInduction";
  }
  return "?";
}

LProduct alpha(const InductionDatum& d) {
  return norm_factor(formal(d), Rational(0), Rational(0), SigmaTail::Faithful);
}

LProduct beta(const InductionDatum& d) {
  return norm_factor(formal(d), Rational(1, 2), Rational(1), SigmaTail::Faithful);
}

LProduct alpha_gl(int a, int b, const Affine& x, const Affine& y) {
  Affine diff = x - y;
  if (diff.slope <= 0)
    throw Error(Errc::NonPositiveSlope,
                "GL swap of exponents " + affine_text(x) + " and " + affine_text(y));
  return expand_tensor(a, b, diff);
}

LProduct discrepancy(WayId way, const InductionDatum& d) {
  const int a = d.a;
  const FormalDatum fd = formal(d);
  const Affine minus_s{Rational(-1), Rational(0)};

  switch (way) {
    case WayId::GL_Way1: {
      require(a >= 2, way, "a >= 2");
      LProduct num = alpha_gl(a - 1, 1, s_plus(rat(-1, 2)), minus_s) *
                     alpha_gl(1, 1, s_plus(rat(a - 1, 2)), minus_s);
      return quotient(num, alpha_gl(a, 1, s_plus(0), minus_s));
    }
    case WayId::GL_Way2: {
      require(a >= 2, way, "a >= 2");
      LProduct num = alpha_gl(1, 1, s_plus(rat(-(a - 1), 2)), minus_s) *
                     alpha_gl(a - 1, 1, s_plus(rat(1, 2)), minus_s);
      return quotient(num, alpha_gl(a, 1, s_plus(0), minus_s));
    }
    case WayId::GL_Way3: {
      // the mirror terminal tau vs tau_b with b = d.a
      const int b = a;
      require(b >= 2, way, "segment length >= 2");
      LProduct num = alpha_gl(1, 1, s_plus(0), Affine{rat(-1), rat(b - 1, 2)}) *
                     alpha_gl(1, b - 1, s_plus(0), Affine{rat(-1), rat(-1, 2)});
      return quotient(num, alpha_gl(1, b, s_plus(0), minus_s));
    }
    case WayId::GL_Way4: {
      const int b = a;
      require(b >= 2, way, "segment length >= 2");
      LProduct num = alpha_gl(1, b - 1, s_plus(0), Affine{rat(-1), rat(1, 2)}) *
                     alpha_gl(1, 1, s_plus(0), Affine{rat(-1), rat(-(b - 1), 2)});
      return quotient(num, alpha_gl(1, b, s_plus(0), minus_s));
    }
    case WayId::Step2A_Way1:
    case WayId::Step3_Way1: {
      if (way == WayId::Step2A_Way1) {
        require(a >= 2 && d.support.empty(), way, "a >= 2 and supercuspidal sigma");
      } else {
        require(a >= 2 && d.support.size() == 2, way, "a >= 2 and one segment pair");
        auto [r1, r2] = the_pair(d);
        require(r1 > a && a > r2, way, "r1 > a > r2");
      }
      LProduct num = alpha_at(fd, a - 1, rat(-1, 2), SigmaTail::Absorbed) *
                     alpha_gl(1, a - 1, s_plus(rat(a - 1, 2)), Affine{rat(-1), rat(1, 2)}) *
                     alpha_at(fd, 1, rat(a - 1, 2), SigmaTail::Absorbed);
      return quotient(num, alpha_at(fd, a, rat(0), SigmaTail::Absorbed));
    }
    case WayId::Step2A_Way2:
    case WayId::Step3_Way2: {
      if (way == WayId::Step2A_Way2) {
        require(a >= 2 && d.support.empty(), way, "a >= 2 and supercuspidal sigma");
      } else {
        require(a >= 2 && d.support.size() == 2, way, "a >= 2 and one segment pair");
        auto [r1, r2] = the_pair(d);
        require(r1 > a && a > r2, way, "r1 > a > r2");
      }
      LProduct num = alpha_at(fd, 1, rat(-(a - 1), 2), SigmaTail::Absorbed) *
                     alpha_gl(a - 1, 1, s_plus(rat(1, 2)), Affine{rat(-1), rat(a - 1, 2)}) *
                     alpha_at(fd, a - 1, rat(1, 2), SigmaTail::Absorbed);
      return quotient(num, alpha_at(fd, a, rat(0), SigmaTail::Absorbed));
    }
    case WayId::Step2B_Way3:
    case WayId::Step3_Way3: {
      require(d.support.size() == 2, way, "one segment pair");
      auto [r1, r2] = the_pair(d);
      if (way == WayId::Step2B_Way3) {
        require(a == 1 && r1 > 1 && r2 < 1, way, "a = 1 and r1 > 1 > r2");
      } else {
        require(a >= 2 && r1 > a && a > r2, way, "a >= 2 and r1 > a > r2");
        require(r1 - 2 > r2, way, "r1 - 2 > r2 (the reduced support must not repeat a block)");
      }
      FormalDatum reduced = fd;
      reduced.entries = {r1 - 2, r2};
      Affine e{rat(0), rat(r1 - 1, 2)};
      LProduct num = alpha_gl(a, 1, s_plus(0), e) *
                     alpha_at(reduced, a, rat(0), SigmaTail::Absorbed) *
                     alpha_gl(a, 1, e, Affine{rat(-1), rat(0)});
      return quotient(num, alpha_at(fd, a, rat(0), SigmaTail::Absorbed));
    }
    case WayId::Step2B_Way4: {
      require(a == 1 && d.support.size() == 2, way, "a = 1 and one segment pair");
      auto [r1, r2] = the_pair(d);
      require(r1 > 1 && r2 < 1, way, "r1 > 1 > r2");
      SegmentPair p = segment_pairs(d.support)[0];
      FormalDatum bare = fd;
      bare.entries.clear();
      Affine e{rat(0), p.exponent};
      LProduct num = alpha_gl(1, p.size, s_plus(0), e) *
                     alpha_at(bare, 1, rat(0), SigmaTail::Absorbed) *
                     alpha_gl(1, p.size, e, Affine{rat(-1), rat(0)});
      return quotient(num, alpha_at(fd, a, rat(0), SigmaTail::Absorbed));
    }
    case WayId::Step1_Reduction: {
      require(!d.support.empty(), way, "a nonempty support");
      auto pairs = segment_pairs(d.support);
      int r1 = pairs[0].r_high(), r2 = pairs[0].r_low();
      if (!strippable(a, r1, r2))
        throw Error(Errc::PairNotStrippable,
                    "leading pair (" + std::to_string(r1) + "," + std::to_string(r2) +
                        ") straddles a = " + std::to_string(a));
      StripCheck c = strip_check(d, 0);
      return canonicalize(c.residual);
    }
  }
  throw Error(Errc::WayNotApplicable, "unknown way");
}

LProduct closed_form(WayId way, const InductionDatum& d) {
  const int a = d.a;
  const BaseKind rho_parity = (a % 2 != 0) ? BaseKind::TauRhoMinus : BaseKind::TauRho;
  LProduct out;

  switch (way) {
    case WayId::GL_Way1:
      require(a >= 2, way, "a >= 2");
      return LProduct{atom(two_s_plus(rat(a - 3, 2)), BaseKind::TauTau)};
    case WayId::GL_Way2:
      require(a >= 2, way, "a >= 2");
      return LProduct{atom(two_s_plus(rat(-(a - 1), 2)), BaseKind::TauTau)};
    case WayId::GL_Way3:
      require(a >= 2, way, "segment length >= 2");
      return LProduct{atom(two_s_plus(rat(-(a - 1), 2)), BaseKind::TauTau)};
    case WayId::GL_Way4:
      require(a >= 2, way, "segment length >= 2");
      return LProduct{atom(two_s_plus(rat(a - 3, 2)), BaseKind::TauTau)};
    case WayId::Step2A_Way1:
    case WayId::Step3_Way1: {
      int r2 = 1;  // > 0 placeholder for the Step2A shape
      if (way == WayId::Step3_Way1) {
        require(d.support.size() == 2, way, "one segment pair");
        r2 = the_pair(d).r2;
        require(a >= 2 && the_pair(d).r1 > a && a > r2, way, "r1 > a > r2");
      } else {
        require(a >= 2 && d.support.empty(), way, "a >= 2 and supercuspidal sigma");
      }
      out.mul_atom(atom(two_s_plus(rat(-1)), rho_parity));
      out.mul_atom(atom(two_s_plus(rat(a - 2)), BaseKind::TauRho));
      if (way == WayId::Step2A_Way1) {
        push_sigma_atom(out, d, rat(a - 3, 2));
      } else if (r2 > 0) {
        out.mul_atom(atom(s_plus(rat(a - r2 - 2, 2)), BaseKind::TauTau));
        push_sigma_atom(out, d, rat(a - 3, 2));
      }
      return out;
    }
    case WayId::Step2A_Way2:
    case WayId::Step3_Way2: {
      int r2 = 1;
      if (way == WayId::Step3_Way2) {
        require(d.support.size() == 2, way, "one segment pair");
        r2 = the_pair(d).r2;
        require(a >= 2 && the_pair(d).r1 > a && a > r2, way, "r1 > a > r2");
      } else {
        require(a >= 2 && d.support.empty(), way, "a >= 2 and supercuspidal sigma");
      }
      out.mul_atom(atom(two_s_plus(rat(0)), rho_parity));
      out.mul_atom(atom(two_s_plus(rat(-(a - 1))), BaseKind::TauRho));
      if (way == WayId::Step2A_Way2) {
        push_sigma_atom(out, d, rat(-(a - 1), 2));
      } else if (r2 > 0) {
        out.mul_atom(atom(s_plus(rat(-(a - r2), 2)), BaseKind::TauTau));
        push_sigma_atom(out, d, rat(-(a - 1), 2));
      }
      return out;
    }
    case WayId::Step3_Way3: {
      require(a >= 2 && d.support.size() == 2, way, "a >= 2 and one segment pair");
      auto [r1, r2] = the_pair(d);
      require(r1 > a && a > r2, way, "r1 > a > r2");
      require(r1 - 2 > r2, way, "r1 - 2 > r2");
      if (a <= r1 - 2) {
        out.mul_atom(atom(s_plus(rat(-(r1 - a), 2)), BaseKind::TauTau));
        out.mul_atom(atom(s_plus(rat(r1 - a - 2, 2)), BaseKind::TauTau));
      } else {  // a == r1 - 1
        out.mul_atom(atom(s_plus(rat(-1, 2)), BaseKind::TauTau));
      }
      return out;
    }
    case WayId::Step2B_Way3: {
      require(a == 1 && d.support.size() == 2, way, "a = 1 and one segment pair");
      auto [r1, r2] = the_pair(d);
      require(r1 > 1 && r2 < 1, way, "r1 > 1 > r2");
      out.mul_atom(atom(s_plus(rat(-(r1 - 1), 2)), BaseKind::TauTau));
      // the L(s+(r1'-1)/2) factor goes through the tau_0 convention at r1' = 0
      if (r1 - 2 >= 1) out.mul_atom(atom(s_plus(rat(r1 - 3, 2)), BaseKind::TauTau));
      return out;
    }
    case WayId::Step2B_Way4: {
      require(a == 1 && d.support.size() == 2, way, "a = 1 and one segment pair");
      auto [r1, r2] = the_pair(d);
      require(r1 > 1 && r2 < 1, way, "r1 > 1 > r2");
      push_sigma_atom(out, d, rat(0));
      out.mul_atom(atom(s_plus(rat(r2 - 1, 2)), BaseKind::TauTau));
      return out;
    }
    case WayId::Step1_Reduction:
      require(!d.support.empty(), way, "a nonempty support");
      return LProduct::one();  // the reduction step is discrepancy-free
  }
  throw Error(Errc::WayNotApplicable, "unknown way");
}

IdentityWitness verify_identity_a(int a, int r1, int r2, IdentityAShift shift) {
  bool branch1 = a >= r1 && r1 > r2 && r2 >= 1;
  bool branch2 = r1 > r2 && r2 >= a && a >= 1;
  if (!(branch1 || branch2))
    throw Error(Errc::PreconditionViolated, "need a >= r1 > r2 >= 1 or r1 > r2 >= a >= 1");
  if (((r1 - r2) % 2) != 0)
    throw Error(Errc::PreconditionViolated, "r1 and r2 must have one parity");

  Rational e(r1 - r2, 4);
  int c = (r1 + r2) / 2;
  Rational second = (shift == IdentityAShift::Corrected) ? e : Rational(r1 + r2, 4);

  IdentityWitness w;
  w.lhs = expand_tensor(a, c, s_plus(-e)) * expand_tensor(a, c, s_plus(second));
  w.rhs = expand_tensor(a, r1, s_plus(0)) * expand_tensor(a, r2, s_plus(0));
  w.residual = w.lhs * inverse(w.rhs);
  w.ok = w.residual.is_one();
  return w;
}

ReductionWitness verify_reduction_step(const InductionDatum& d) {
  if (d.support.empty()) throw Error(Errc::PairNotStrippable, "support is empty");
  auto pairs = segment_pairs(d.support);
  int r1 = pairs[0].r_high(), r2 = pairs[0].r_low();
  if (!strippable(d.a, r1, r2))
    throw Error(Errc::PairNotStrippable, "leading pair (" + std::to_string(r1) + "," + std::to_string(r2) +
                                             ") straddles a = " + std::to_string(d.a));
  StripCheck c = strip_check(d, 0);
  return ReductionWitness{c.ok, c.branch, c.residual};
}

std::vector<Rational> intersect_sorted(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

namespace {

void attach_exceptional(HolomorphyReport& rep) {
  for (const Rational& s : rep.common_poles) {
    ExceptionalPoint pt;
    pt.s = s;
    if (s == 0) {
      pt.tag = ResolutionTag::MultiplicityFreeInvolution;
    } else {
      pt.tag = ResolutionTag::KernelDiagram;
    }
    switch (rep.terminal_case) {
      case TerminalCase::Step3: {
        auto [r1, r2] = the_pair(rep.terminal_datum);
        int a = rep.terminal_datum.a;
        if (s == 0) {
          pt.condition = "s=0 retained unconditionally at the induction step";
        } else {
          std::string cond;
          if (a == r1 - 1 && a == r2 + 1) cond = "a=r1-1=r2+1";
          if (a == r1 - 1 && a == 2) cond += (cond.empty() ? "" : " and ") + std::string("a=r1-1=2");
          pt.condition = cond;
        }
        break;
      }
      case TerminalCase::Step2Supercuspidal:
        pt.condition = "a=" + std::to_string(rep.terminal_datum.a);
        break;
      case TerminalCase::Step2SegmentVsSigmaR:
        pt.condition = "r1=" + std::to_string(the_pair(rep.terminal_datum).r1);
        break;
      case TerminalCase::GLLemma:
        pt.condition = "terminal segment of length 2 against a supercuspidal (2Re(s)=1/2)";
        break;
      case TerminalCase::CorankOneBase:
        break;
    }
    rep.exceptional.push_back(pt);
  }
}

void finish_report(HolomorphyReport& rep, const std::vector<WayId>& ways, const InductionDatum& td) {
  bool first = true;
  std::vector<Rational> common;
  for (WayId w : ways) {
    LProduct disc = discrepancy(w, td);
    std::vector<Rational> poles = possible_poles(disc);
    rep.discrepancies.emplace(w, std::move(disc));
    common = first ? poles : intersect_sorted(common, poles);
    rep.pole_sets.emplace(w, std::move(poles));
    first = false;
  }
  if (rep.terminal_case == TerminalCase::Step3) {
    // s = 0 is never excluded by coprimality at the induction step
    if (!std::binary_search(common.begin(), common.end(), Rational(0)))
      common.insert(std::lower_bound(common.begin(), common.end(), Rational(0)), Rational(0));
  }
  rep.common_poles = common;
  attach_exceptional(rep);

  if (ways.empty()) {
    rep.verdict = "co-rank one base case; no decompositions to compare";
  } else if (rep.common_poles.empty()) {
    rep.verdict = "holomorphic: applicable discrepancies are coprime (CoprimeInduction)";
  } else {
    std::string pts;
    for (const Rational& s : rep.common_poles) {
      if (!pts.empty()) pts += ", ";
      pts += "s=" + rational_text(s);
    }
    rep.verdict = "holomorphic: exceptional points resolved at " + pts;
  }
}

}  // namespace

HolomorphyReport classify(const InductionDatum& d) {
  if (d.a < 1) throw Error(Errc::BadArgument, "segment length a must be >= 1");
  HolomorphyReport rep;
  rep.input = d;

  InductionDatum cur = d;
  for (;;) {
    auto pairs = segment_pairs(cur.support);
    std::size_t idx = pairs.size();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (strippable(cur.a, pairs[i].r_high(), pairs[i].r_low())) {
        idx = i;
        break;
      }
    }
    if (idx == pairs.size()) break;
    StripCheck chk = strip_check(cur, idx);
    if (!chk.ok)
      throw Error(Errc::PreconditionViolated, "reduction identity failed for pair (" +
                                                  std::to_string(pairs[idx].r_high()) + "," +
                                                  std::to_string(pairs[idx].r_low()) + ")");
    rep.strip_log.push_back(StripEntry{pairs[idx].r_high(), pairs[idx].r_low(), chk.branch});
    std::vector<int> rest;
    for (std::size_t i = 0; i < cur.support.size(); ++i)
      if (i != 2 * idx && i != 2 * idx + 1) rest.push_back(cur.support[i]);
    cur = make_datum(cur.group, cur.a, rest, cur.has_sigma);
  }
  rep.terminal_datum = cur;

  std::vector<WayId> ways;
  if (cur.support.empty()) {
    rep.terminal_case = (cur.a == 1) ? TerminalCase::CorankOneBase : TerminalCase::Step2Supercuspidal;
    if (cur.a >= 2) ways = {WayId::Step2A_Way1, WayId::Step2A_Way2};
  } else {
    auto [r1, r2] = the_pair(cur);
    if (cur.a == 1) {
      rep.terminal_case = TerminalCase::Step2SegmentVsSigmaR;
      ways = {WayId::Step2B_Way3, WayId::Step2B_Way4};
    } else {
      rep.terminal_case = TerminalCase::Step3;
      ways = {WayId::Step3_Way1, WayId::Step3_Way2};
      if (r1 - 2 > r2) ways.push_back(WayId::Step3_Way3);
    }
  }
  finish_report(rep, ways, cur);
  return rep;
}

HolomorphyReport classify_gl(int a, int b) {
  if (a < 1 || b < 1) throw Error(Errc::BadArgument, "segment lengths must be >= 1");
  HolomorphyReport rep;
  rep.is_gl = true;
  rep.gl_a = a;
  rep.gl_b = b;

  int A = a, B = b;
  while (A > 1 && B > 1) {
    if (A >= B) {
      rep.gl_reductions.push_back(GlReduction{A, B, A, B - 1, 3});
      --B;
    } else {
      rep.gl_reductions.push_back(GlReduction{A, B, A - 1, B, 2});
      --A;
    }
  }

  std::vector<WayId> ways;
  InductionDatum td;  // carrier for the remaining segment length; group does not enter GL forms
  if (A == 1 && B == 1) {
    rep.terminal_case = TerminalCase::CorankOneBase;
    td = make_datum(GroupType::Sp, 1, {});
  } else if (B == 1) {
    rep.terminal_case = TerminalCase::GLLemma;
    td = make_datum(GroupType::Sp, A, {});
    ways = {WayId::GL_Way1, WayId::GL_Way2};
  } else {
    rep.terminal_case = TerminalCase::GLLemma;
    td = make_datum(GroupType::Sp, B, {});
    ways = {WayId::GL_Way3, WayId::GL_Way4};
  }
  rep.terminal_datum = td;
  finish_report(rep, ways, td);
  return rep;
}

}  // namespace itnorm
