#pragma once

#include <stdexcept>
#include <string>

namespace itnorm {

// Every contract violation carries one of these codes so callers (and the
// CLI) can name the exact condition that failed.
enum class Errc {
  // support tuple validation
  EntryBelowMinusOne,
  NotDecreasing,
  ParityMixed,
  OddLength,
  // algebra
  BadArgument,       // slope <= 0 where a positive slope is required, a <= 0, ...
  NonPositiveSlope,  // alpha_gl applied to a misoriented diagram
  // analysis
  WayNotApplicable,
  PairNotStrippable,
  PreconditionViolated,
  // weyl
  NonSplitGroup,
  NoValidSign,
  DimensionMismatch,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace itnorm
