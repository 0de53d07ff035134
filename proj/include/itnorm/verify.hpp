#pragma once

#include <optional>
#include <string>
#include <vector>

namespace itnorm::verify {

struct SuiteResult {
  std::string suite;
  long long checks = 0;
  long long failures = 0;
  std::vector<std::string> sample_failures;  // first few failure descriptions

  bool passed() const { return failures == 0; }
  void merge(const SuiteResult& other);
};

// One function per acceptance check; each sweeps the full stated grid with
// exact comparisons (no tolerances exist anywhere in this toolkit).
SuiteResult check_a_consistency(bool parallel = true);   // formula (A) lines vs expand_rho/shift_s
SuiteResult check_b_symmetry(bool parallel = true);      // formula (B) branch agreement and symmetry
SuiteResult check_identity_a(bool parallel = true);      // corrected shift holds, printed shift fails
SuiteResult check_gl_lemma(bool parallel = true);        // P1/P2 closed forms, common pole iff a = 2
SuiteResult check_step2_case1(bool parallel = true);     // tau_a vs supercuspidal sigma
SuiteResult check_step2_case2(bool parallel = true);     // tau vs sigma_(r1, r2<=0)
SuiteResult check_step3(bool parallel = true);           // full induction-step grid
SuiteResult check_reduction(bool parallel = true);       // Step 1 stripping over the support grid
SuiteResult check_weyl(bool parallel = true);            // exhaustive block decompositions, n <= 6

// CLI suites: identities, gl, step2, step3, reduction, weyl, all.
std::optional<std::vector<SuiteResult>> run_suite(const std::string& name, bool parallel = true);
std::vector<std::string> suite_names();

}  // namespace itnorm::verify
