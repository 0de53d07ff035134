#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "itnorm/rational.hpp"

namespace itnorm {

// Linear form mu*s + c in the formal variable s.  Used both for L-factor
// arguments (mu > 0) and for embedding exponents, where mu may be 0 or
// negative (e.g. -s + 1/2).  L(2s+c, .) and L(s+c/2, .) are distinct
// functions of s, so the slope is never normalized away.
struct Affine {
  Rational slope;
  Rational intercept;

  friend bool operator==(const Affine&, const Affine&) = default;
  friend auto operator<=>(const Affine&, const Affine&) = default;

  Affine operator+(const Rational& c) const { return {slope, intercept + c}; }
  Affine operator-(const Affine& o) const { return {slope - o.slope, intercept - o.intercept}; }
};

inline Affine s_plus(Rational c) { return Affine{Rational(1), c}; }    // s + c
inline Affine two_s_plus(Rational c) { return Affine{Rational(2), c}; }  // 2s + c

// The five kinds of local factors that occur in the normalization calculus.
// TauRho and TauRhoMinus are distinct bases even at equal arguments; which
// concrete representation (Sym^2 / Lambda^2 / Asai variants) they denote is a
// per-group label that lives in repdata and affects rendering only.
enum class BaseKind {
  TauTau,       // L(., tau x tau)
  TauSigma,     // L(., tau x sigma)
  TauStd,       // L(., tau)  -- the n0 = 0 replacement for Sp / U-odd
  TauRho,       // L(., tau, rho)
  TauRhoMinus,  // L(., tau, rho^-)
};

const char* base_id(BaseKind b);    // stable id used in JSON ("tau_x_tau", ...)
const char* base_text(BaseKind b);  // rendering ("tau x tau", "rho^-", ...)

struct LAtom {
  Affine arg;  // slope > 0
  BaseKind base;

  friend bool operator==(const LAtom&, const LAtom&) = default;
  friend auto operator<=>(const LAtom&, const LAtom&) = default;
};

LAtom atom(Affine arg, BaseKind base);  // validates slope > 0

// Formal product of L-factors: a multiset of atoms with signed integer
// exponents.  The empty product is the constant 1.  Zero exponents are
// removed eagerly.  Immutable in spirit: all operations return new values.
class LProduct {
 public:
  LProduct() = default;
  LProduct(std::initializer_list<LAtom> atoms);

  static LProduct one() { return LProduct{}; }

  LProduct& mul_atom(const LAtom& a, long long exp = 1);  // builder, in place

  bool is_one() const { return exps_.empty(); }
  std::size_t size() const { return exps_.size(); }
  long long exponent(const LAtom& a) const;
  const std::map<LAtom, long long>& atoms() const { return exps_; }

  friend bool operator==(const LProduct&, const LProduct&) = default;

  std::string text() const;  // "L(2s-1, rho^-) L(2s+1, rho)" ; "1" when empty

 private:
  std::map<LAtom, long long> exps_;
};

// Exponents add atomwise; exact cancellation removes atoms.
LProduct multiply(const LProduct& p, const LProduct& q);
inline LProduct operator*(const LProduct& p, const LProduct& q) { return multiply(p, q); }

// All exponents negated (the tau_{-1} convention L(s,tau_a x tau_{-1}) :=
// L(s,tau_a x tau)^{-1} is applied by the consumer).
LProduct inverse(const LProduct& p);

// Substitution s -> s + t: each intercept c becomes c + mu*t.
LProduct shift_s(const LProduct& p, const Rational& t);

// Splits every TauTau atom into TauRho * TauRhoMinus at the same argument,
// so that quotients can cancel across the split bases.  Idempotent.
LProduct canonicalize(const LProduct& p);

// Formula (B): the min(a,r)-factor tau x tau product for L(arg, tau_a x tau_r).
LProduct expand_tensor(int a, int r, const Affine& arg);

// Formula (A) line 1: ceil(a/2) rho atoms and floor(a/2) rho^- atoms for
// L(base_arg, tau_a, rho); base_arg must have slope 2.
LProduct expand_rho(int a, const Affine& base_arg);

// Canonicalizes, then lists -c/mu over atoms with positive exponent; every
// base kind is treated as possibly carrying a simple pole at argument 0, and
// negative exponents never mask a pole.  Sorted ascending.
std::vector<Rational> possible_poles(const LProduct& p);

std::string affine_text(const Affine& a);  // "2s-1", "s+3/2", ...
std::string atom_text(const LAtom& a, long long exp);

}  // namespace itnorm
