#include "itnorm/lfactor.hpp"

#include <algorithm>
#include <set>

#include "itnorm/error.hpp"

namespace itnorm {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::EntryBelowMinusOne: return "EntryBelowMinusOne";
    case Errc::NotDecreasing: return "NotDecreasing";
    case Errc::ParityMixed: return "ParityMixed";
    case Errc::OddLength: return "OddLength";
    case Errc::BadArgument: return "BadArgument";
    case Errc::NonPositiveSlope: return "NonPositiveSlope";
    case Errc::WayNotApplicable: return "WayNotApplicable";
    case Errc::PairNotStrippable: return "PairNotStrippable";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::NonSplitGroup: return "NonSplitGroup";
    case Errc::NoValidSign: return "NoValidSign";
    case Errc::DimensionMismatch: return "DimensionMismatch";
  }
  return "UnknownError";
}

const char* base_id(BaseKind b) {
  switch (b) {
    case BaseKind::TauTau: return "tau_x_tau";
    case BaseKind::TauSigma: return "tau_x_sigma";
    case BaseKind::TauStd: return "tau_std";
    case BaseKind::TauRho: return "rho";
    case BaseKind::TauRhoMinus: return "rho_minus";
  }
  return "?";
}

const char* base_text(BaseKind b) {
  switch (b) {
    case BaseKind::TauTau: return "tau x tau";
    case BaseKind::TauSigma: return "tau x sigma";
    case BaseKind::TauStd: return "tau";
    case BaseKind::TauRho: return "rho";
    case BaseKind::TauRhoMinus: return "rho^-";
  }
  return "?";
}

LAtom atom(Affine arg, BaseKind base) {
  if (arg.slope <= 0)
    throw Error(Errc::BadArgument, "L-factor argument needs positive slope, got " + affine_text(arg));
  return LAtom{arg, base};
}

LProduct::LProduct(std::initializer_list<LAtom> atoms) {
  for (const auto& a : atoms) mul_atom(a);
}

LProduct& LProduct::mul_atom(const LAtom& a, long long exp) {
  if (exp == 0) return *this;
  if (a.arg.slope <= 0)
    throw Error(Errc::BadArgument, "L-factor argument needs positive slope, got " + affine_text(a.arg));
  auto it = exps_.find(a);
  if (it == exps_.end()) {
    exps_.emplace(a, exp);
  } else if ((it->second += exp) == 0) {
    exps_.erase(it);
  }
  return *this;
}

long long LProduct::exponent(const LAtom& a) const {
  auto it = exps_.find(a);
  return it == exps_.end() ? 0 : it->second;
}

LProduct multiply(const LProduct& p, const LProduct& q) {
  LProduct out = p;
  for (const auto& [a, e] : q.atoms()) out.mul_atom(a, e);
  return out;
}

LProduct inverse(const LProduct& p) {
  LProduct out;
  for (const auto& [a, e] : p.atoms()) out.mul_atom(a, -e);
  return out;
}

LProduct shift_s(const LProduct& p, const Rational& t) {
  LProduct out;
  for (const auto& [a, e] : p.atoms())
    out.mul_atom(LAtom{{a.arg.slope, a.arg.intercept + a.arg.slope * t}, a.base}, e);
  return out;
}

LProduct canonicalize(const LProduct& p) {
  LProduct out;
  for (const auto& [a, e] : p.atoms()) {
    if (a.base == BaseKind::TauTau) {
      out.mul_atom(LAtom{a.arg, BaseKind::TauRho}, e);
      out.mul_atom(LAtom{a.arg, BaseKind::TauRhoMinus}, e);
    } else {
      out.mul_atom(a, e);
    }
  }
  return out;
}

LProduct expand_tensor(int a, int r, const Affine& arg) {
  if (a <= 0 || r <= 0)
    throw Error(Errc::BadArgument,
                "expand_tensor needs a, r >= 1, got a=" + std::to_string(a) + " r=" + std::to_string(r));
  if (arg.slope <= 0)
    throw Error(Errc::BadArgument, "expand_tensor argument needs positive slope");
  LProduct out;
  if (a >= r) {
    // product over i = -(r-1)/2 .. (r-1)/2 of L(arg + (a-1)/2 + i, tau x tau)
    for (int j = 0; j < r; ++j)
      out.mul_atom(atom(arg + (Rational(a - 1, 2) + Rational(2 * j - (r - 1), 2)), BaseKind::TauTau));
  } else {
    // product over i = -(a-1)/2 .. (a-1)/2 of L(arg + (r-1)/2 + i, tau x tau)
    for (int j = 0; j < a; ++j)
      out.mul_atom(atom(arg + (Rational(r - 1, 2) + Rational(2 * j - (a - 1), 2)), BaseKind::TauTau));
  }
  return out;
}

LProduct expand_rho(int a, const Affine& base_arg) {
  if (a <= 0) throw Error(Errc::BadArgument, "expand_rho needs a >= 1, got " + std::to_string(a));
  if (base_arg.slope != 2)
    throw Error(Errc::BadArgument, "expand_rho argument must have slope 2, got " + affine_text(base_arg));
  LProduct out;
  for (int i = 1; i <= (a + 1) / 2; ++i)  // ceil(a/2) factors L(base + a+1-2i, rho)
    out.mul_atom(atom(base_arg + Rational(a + 1 - 2 * i), BaseKind::TauRho));
  for (int i = 1; i <= a / 2; ++i)  // floor(a/2) factors L(base + a-2i, rho^-)
    out.mul_atom(atom(base_arg + Rational(a - 2 * i), BaseKind::TauRhoMinus));
  return out;
}

std::vector<Rational> possible_poles(const LProduct& p) {
  std::set<Rational> poles;
  for (const auto& [a, e] : canonicalize(p).atoms())
    if (e > 0) poles.insert(-a.arg.intercept / a.arg.slope);
  return {poles.begin(), poles.end()};
}

std::string affine_text(const Affine& a) {
  std::string out;
  if (a.slope != 0) {
    if (a.slope == 1) {
      out = "s";
    } else if (a.slope == -1) {
      out = "-s";
    } else if (a.slope.denominator() == 1) {
      out = std::to_string(a.slope.numerator()) + "s";
    } else {
      out = "(" + rational_text(a.slope) + ")s";
    }
  }
  if (a.intercept != 0 || a.slope == 0) {
    if (!out.empty() && a.intercept > 0) out += "+";
    out += rational_text(a.intercept);
  }
  return out;
}

std::string atom_text(const LAtom& a, long long exp) {
  std::string out = "L(" + affine_text(a.arg) + ", " + base_text(a.base) + ")";
  if (exp != 1) out += "^" + std::to_string(exp);
  return out;
}

std::string LProduct::text() const {
  if (exps_.empty()) return "1";
  std::string out;
  for (const auto& [a, e] : exps_) {
    if (!out.empty()) out += " ";
    out += atom_text(a, e);
  }
  return out;
}

}  // namespace itnorm
