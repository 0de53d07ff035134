#include "itnorm/verify.hpp"

#include <functional>

#include "itnorm/analysis.hpp"
#include "itnorm/error.hpp"
#include "itnorm/grid.hpp"
#include "itnorm/weyl.hpp"

namespace itnorm::verify {

namespace {

constexpr std::size_t kMaxSamples = 8;

struct Item {
  long long checks = 0;
  std::vector<std::string> fails;

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++checks;
    if (!ok) fails.push_back(describe());
  }
};

// Runs fn over every work item (parallel when requested) and folds the
// per-item tallies in input order; exceptions become failures, never
// propagate out of the loop.
template <class Fn>
SuiteResult sweep(std::string suite, std::size_t count, bool parallel, Fn&& fn) {
  auto items = grid::map_indexed<Item>(count, parallel, [&](std::size_t i) {
    Item item;
    try {
      fn(i, item);
    } catch (const std::exception& e) {
      ++item.checks;
      item.fails.push_back(std::string("exception: ") + e.what());
    }
    return item;
  });
  SuiteResult out;
  out.suite = std::move(suite);
  for (const auto& item : items) {
    out.checks += item.checks;
    out.failures += static_cast<long long>(item.fails.size());
    for (const auto& f : item.fails)
      if (out.sample_failures.size() < kMaxSamples) out.sample_failures.push_back(f);
  }
  return out;
}

std::string describe(const InductionDatum& d) {
  return std::string("group ") + group_name(d.group) + " a=" + std::to_string(d.a) + " support " +
         d.support.text();
}

std::string poles_text(const std::vector<Rational>& poles) {
  std::string out = "{";
  for (std::size_t i = 0; i < poles.size(); ++i) {
    if (i) out += ", ";
    out += rational_text(poles[i]);
  }
  return out + "}";
}

// ---- independent transcriptions used as oracles ---------------------------

// Formula (A), transcribed term by term (not via expand_rho): line 1 is
// L(2s,tau_a,rho), lines 2 and 3 are L(2(s -+ 1/2), tau_{a-1}, rho).
LProduct a_line(int a, int line) {
  int lo_rho = 1, hi_rho = 0, lo_minus = 1, hi_minus = 0;
  switch (line) {
    case 1: hi_rho = (a + 1) / 2; hi_minus = a / 2; break;
    case 2: lo_rho = 2; hi_rho = (a + 2) / 2; lo_minus = 2; hi_minus = (a + 1) / 2; break;
    case 3: hi_rho = a / 2; hi_minus = (a - 1) / 2; break;
    default: throw Error(Errc::BadArgument, "line must be 1, 2 or 3");
  }
  LProduct out;
  for (int i = lo_rho; i <= hi_rho; ++i) out.mul_atom(atom(two_s_plus(rat(a + 1 - 2 * i)), BaseKind::TauRho));
  for (int i = lo_minus; i <= hi_minus; ++i)
    out.mul_atom(atom(two_s_plus(rat(a - 2 * i)), BaseKind::TauRhoMinus));
  return out;
}

// Formula (B), both printed branch formulas transcribed directly.
LProduct b_branch_ge(int a, int r) {
  LProduct out;
  for (int two_i = -(r - 1); two_i <= r - 1; two_i += 2)
    out.mul_atom(atom(s_plus(rat(a - 1, 2) + rat(two_i, 2)), BaseKind::TauTau));
  return out;
}

LProduct b_branch_lt(int a, int r) {
  LProduct out;
  for (int two_i = -(a - 1); two_i <= a - 1; two_i += 2)
    out.mul_atom(atom(s_plus(rat(r - 1, 2) + rat(two_i, 2)), BaseKind::TauTau));
  return out;
}

bool disc_matches_closed(WayId w, const InductionDatum& d, std::string& err) {
  LProduct disc = discrepancy(w, d);
  LProduct closed = canonicalize(closed_form(w, d));
  if (disc == closed) return true;
  err = std::string(way_name(w)) + " mismatch for " + describe(d) + ": computed " + disc.text() +
        " vs printed " + closed.text();
  return false;
}

}  // namespace

void SuiteResult::merge(const SuiteResult& other) {
  checks += other.checks;
  failures += other.failures;
  for (const auto& f : other.sample_failures)
    if (sample_failures.size() < kMaxSamples) sample_failures.push_back(f);
}

SuiteResult check_a_consistency(bool parallel) {
  return sweep("a-consistency", 20, parallel, [](std::size_t idx, Item& item) {
    int a = static_cast<int>(idx) + 1;  // lines 2,3 need a >= 2
    item.expect(expand_rho(a, two_s_plus(rat(0))) == a_line(a, 1),
                [&] { return "(A) line 1 vs expand_rho at a=" + std::to_string(a); });
    if (a < 2) return;
    item.expect(shift_s(expand_rho(a - 1, two_s_plus(rat(0))), rat(-1, 2)) == a_line(a, 2),
                [&] { return "(A) line 2 vs shift_s(expand_rho(a-1), -1/2) at a=" + std::to_string(a); });
    item.expect(shift_s(expand_rho(a - 1, two_s_plus(rat(0))), rat(1, 2)) == a_line(a, 3),
                [&] { return "(A) line 3 vs shift_s(expand_rho(a-1), +1/2) at a=" + std::to_string(a); });
  });
}

SuiteResult check_b_symmetry(bool parallel) {
  return sweep("b-symmetry", 20 * 20, parallel, [](std::size_t idx, Item& item) {
    int a = static_cast<int>(idx) / 20 + 1;
    int r = static_cast<int>(idx) % 20 + 1;
    Affine arg = s_plus(rat(0));
    LProduct lhs = expand_tensor(a, r, arg);
    item.expect(lhs == (a >= r ? b_branch_ge(a, r) : b_branch_lt(a, r)),
                [&] { return "(B) branch transcription at a=" + std::to_string(a) + " r=" + std::to_string(r); });
    item.expect(lhs == expand_tensor(r, a, arg),
                [&] { return "(B) swap symmetry at a=" + std::to_string(a) + " r=" + std::to_string(r); });
    if (a == r)
      item.expect(b_branch_ge(a, r) == b_branch_lt(a, r),
                  [&] { return "(B) branch agreement at a=r=" + std::to_string(a); });
  });
}

SuiteResult check_identity_a(bool parallel) {
  std::vector<std::array<int, 3>> triples;
  for (int a = 1; a <= 15; ++a)
    for (int r1 = 1; r1 <= 15; ++r1)
      for (int r2 = 1; r2 < r1; ++r2) {
        if ((r1 - r2) % 2 != 0) continue;
        if (!(a >= r1 || r2 >= a)) continue;
        triples.push_back({a, r1, r2});
      }
  SuiteResult res = sweep("identity-a", triples.size(), parallel, [&](std::size_t idx, Item& item) {
    auto [a, r1, r2] = triples[idx];
    item.expect(verify_identity_a(a, r1, r2, IdentityAShift::Corrected).ok, [&] {
      return "corrected identity (a) fails at (a,r1,r2)=(" + std::to_string(a) + "," + std::to_string(r1) +
             "," + std::to_string(r2) + ")";
    });
  });

  long long printed_failures = 0;
  for (const auto& [a, r1, r2] : triples)
    if (!verify_identity_a(a, r1, r2, IdentityAShift::Printed).ok) ++printed_failures;
  ++res.checks;
  if (printed_failures == 0) {
    ++res.failures;
    res.sample_failures.push_back("printed shift +(r1+r2)/4 never fails, expected at least one failure");
  }
  res.suite += " (printed-variant failures: " + std::to_string(printed_failures) + "/" +
               std::to_string(triples.size()) + ")";
  return res;
}

SuiteResult check_gl_lemma(bool parallel) {
  SuiteResult res = sweep("gl-lemma", 19, parallel, [](std::size_t idx, Item& item) {
    int a = static_cast<int>(idx) + 2;
    InductionDatum d = make_datum(GroupType::Sp, a, {});
    std::string err;
    item.expect(disc_matches_closed(WayId::GL_Way1, d, err), [&] { return err; });
    item.expect(disc_matches_closed(WayId::GL_Way2, d, err), [&] { return err; });
    item.expect(discrepancy(WayId::GL_Way1, d) ==
                    canonicalize(LProduct{atom(two_s_plus(rat(a - 3, 2)), BaseKind::TauTau)}),
                [&] { return "P1 != L(2s+(a-3)/2, tau x tau) at a=" + std::to_string(a); });
    item.expect(discrepancy(WayId::GL_Way2, d) ==
                    canonicalize(LProduct{atom(two_s_plus(rat(-(a - 1), 2)), BaseKind::TauTau)}),
                [&] { return "P2 != L(2s-(a-1)/2, tau x tau) at a=" + std::to_string(a); });
  });

  SuiteResult grid_res = sweep("gl-grid", 20 * 20, parallel, [](std::size_t idx, Item& item) {
    int a = static_cast<int>(idx) / 20 + 1;
    int b = static_cast<int>(idx) % 20 + 1;
    HolomorphyReport rep = classify_gl(a, b);
    bool lands_on_two_vs_one = (a >= b && a == 2) || (a == 1 && b == 2);
    std::vector<Rational> expected;
    if (lands_on_two_vs_one) expected = {rat(1, 4)};
    item.expect(rep.common_poles == expected, [&] {
      return "classify_gl(" + std::to_string(a) + "," + std::to_string(b) + ") common poles " +
             poles_text(rep.common_poles) + " != expected " + poles_text(expected);
    });
  });
  res.merge(grid_res);
  return res;
}

SuiteResult check_step2_case1(bool parallel) {
  const GroupType groups[] = {GroupType::SOOdd, GroupType::Sp, GroupType::SOEven};
  return sweep("step2-case1", 3 * 19, parallel, [&](std::size_t idx, Item& item) {
    GroupType g = groups[idx / 19];
    int a = static_cast<int>(idx % 19) + 2;
    InductionDatum d = make_datum(g, a, {});
    std::string err;
    item.expect(disc_matches_closed(WayId::Step2A_Way1, d, err), [&] { return err; });
    item.expect(disc_matches_closed(WayId::Step2A_Way2, d, err), [&] { return err; });

    HolomorphyReport rep = classify(d);
    std::vector<Rational> expected;
    if (a == 2) expected = {rat(0), rat(1, 2)};
    if (a == 3) expected = {rat(0)};
    item.expect(rep.common_poles == expected, [&] {
      return describe(d) + " common poles " + poles_text(rep.common_poles) + " != " + poles_text(expected);
    });
  });
}

SuiteResult check_step2_case2(bool parallel) {
  return sweep("step2-case2", 40, parallel, [](std::size_t idx, Item& item) {
    int r1 = static_cast<int>(idx) + 2;  // 2..41
    int r2 = (r1 % 2 == 0) ? 0 : -1;
    InductionDatum d = make_datum(GroupType::Sp, 1, {r1, r2});
    std::string err;
    item.expect(disc_matches_closed(WayId::Step2B_Way3, d, err), [&] { return err; });
    item.expect(disc_matches_closed(WayId::Step2B_Way4, d, err), [&] { return err; });

    HolomorphyReport rep = classify(d);
    std::vector<Rational> expected;
    if (r1 == 2) expected = {rat(1, 2)};
    if (r1 == 3) expected = {rat(0), rat(1)};
    item.expect(rep.common_poles == expected, [&] {
      return describe(d) + " common poles " + poles_text(rep.common_poles) + " != " + poles_text(expected);
    });
  });
}

SuiteResult check_step3(bool parallel) {
  struct Point {
    int a, r1, r2;
  };
  std::vector<Point> points;
  for (int a = 2; a <= 20; ++a)
    for (int r2 = -1; r2 < a; ++r2)
      for (int r1 = a + 1; r1 <= 41; ++r1) {
        if ((r1 - r2) % 2 != 0) continue;
        points.push_back({a, r1, r2});
      }

  return sweep("step3", points.size(), parallel, [&](std::size_t idx, Item& item) {
    auto [a, r1, r2] = points[idx];
    InductionDatum d = make_datum(GroupType::Sp, a, {r1, r2});
    std::string err;
    item.expect(disc_matches_closed(WayId::Step3_Way1, d, err), [&] { return err; });
    item.expect(disc_matches_closed(WayId::Step3_Way2, d, err), [&] { return err; });
    if (r1 - 2 > r2) item.expect(disc_matches_closed(WayId::Step3_Way3, d, err), [&] { return err; });

    HolomorphyReport rep = classify(d);
    std::vector<Rational> expected = {rat(0)};
    if (a == r1 - 1 && (a == r2 + 1 || a == 2)) expected.push_back(rat(1, 2));
    item.expect(rep.common_poles == expected, [&] {
      return describe(d) + " common poles " + poles_text(rep.common_poles) + " != " + poles_text(expected);
    });

    // pole bookkeeping must not depend on the group beyond the rho labels
    HolomorphyReport rep_b = classify(make_datum(GroupType::SOOdd, a, {r1, r2}));
    item.expect(rep_b.common_poles == rep.common_poles && rep_b.pole_sets == rep.pole_sets,
                [&] { return describe(d) + " pole data differs between groups B and C"; });
  });
}

SuiteResult check_reduction(bool parallel) {
  // every valid support with entries <= 15 and t <= 6, for every a <= 12
  std::vector<std::vector<int>> supports;
  std::vector<int> odd_vals, even_vals;
  for (int v = 15; v >= -1; v -= 2) odd_vals.push_back(v);
  for (int v = 14; v >= 0; v -= 2) even_vals.push_back(v);
  auto add_subsets = [&](const std::vector<int>& vals, int size) {
    std::vector<int> pick(size);
    std::function<void(int, int)> rec = [&](int start, int depth) {
      if (depth == size) {
        supports.emplace_back(pick);
        return;
      }
      for (int i = start; i < static_cast<int>(vals.size()); ++i) {
        pick[depth] = vals[i];
        rec(i + 1, depth + 1);
      }
    };
    rec(0, 0);
  };
  for (int t : {2, 4, 6}) {
    add_subsets(odd_vals, t);
    add_subsets(even_vals, t);
  }

  return sweep("reduction", supports.size() * 12, parallel, [&](std::size_t idx, Item& item) {
    const auto& sup = supports[idx / 12];
    int a = static_cast<int>(idx % 12) + 1;
    InductionDatum d = make_datum(GroupType::Sp, a, sup);

    // walk the leading-pair chain with the public check
    InductionDatum cur = d;
    while (!cur.support.empty()) {
      auto pairs = segment_pairs(cur.support);
      int r1 = pairs[0].r_high(), r2 = pairs[0].r_low();
      if (r1 > cur.a && cur.a > r2) break;  // straddles; later pairs are classify's business
      ReductionWitness w = verify_reduction_step(cur);
      item.expect(w.ok, [&] { return "reduction step fails for " + describe(cur) + ": residual " +
                                     w.residual.text(); });
      std::vector<int> rest(cur.support.entries().begin() + 2, cur.support.entries().end());
      cur = make_datum(cur.group, cur.a, rest, cur.has_sigma);
    }

    // classify re-checks every strip (in any order) and throws on failure
    HolomorphyReport rep = classify(d);
    item.expect(rep.strip_log.size() * 2 + rep.terminal_datum.support.size() == d.support.size(),
                [&] { return "stripping lost a pair for " + describe(d); });
  });
}

SuiteResult check_weyl(bool parallel) {
  using namespace itnorm::weyl;
  struct Job {
    GroupType g;
    int n, k, d;
    DecompWay way;
  };
  std::vector<Job> jobs;
  for (GroupType g : {GroupType::SOOdd, GroupType::Sp, GroupType::SOEven})
    for (int n = 1; n <= 6; ++n)
      for (int k = 1; k <= n; ++k) {
        for (int d = 0; d <= k; ++d) jobs.push_back({g, n, k, d, DecompWay::Way12});
        for (int d = 0; d <= n - k; ++d) jobs.push_back({g, n, k, d, DecompWay::Way34});
      }

  SuiteResult res = sweep("weyl-decompositions", jobs.size(), parallel, [&](std::size_t idx, Item& item) {
    const Job& job = jobs[idx];
    GroupForm form = build_form(job.g, job.n);
    SignedWeylElement wk = build_wk(job.g, job.n, job.k);
    std::string where = std::string(group_name(job.g)) + " n=" + std::to_string(job.n) +
                        " k=" + std::to_string(job.k) + " d=" + std::to_string(job.d) +
                        (job.way == DecompWay::Way12 ? " Way12" : " Way34");
    item.expect(preserves_form(form, wk.matrix), [&] { return "w_k breaks the form at " + where; });

    DecompCheck chk = check_decomposition(job.g, job.n, job.k, job.d, job.way);
    item.expect(chk.factors_preserve_form, [&] { return "a factor breaks the form at " + where; });
    item.expect(chk.outcome != DecompOutcome::Fail, [&] { return "decomposition fails at " + where; });
  });

  SuiteResult so_even = sweep("weyl-so-even", 6, parallel, [](std::size_t idx, Item& item) {
    using namespace itnorm::weyl;
    int n = static_cast<int>(idx) + 1;
    GroupForm form = build_form(GroupType::SOEven, n);
    BlockMatrix c = build_c(n);
    item.expect((c * c).is_identity(), [&] { return "c^2 != I at n=" + std::to_string(n); });
    item.expect(determinant(c) == -1, [&] { return "det(c) != -1 at n=" + std::to_string(n); });
    for (int k = 1; k <= n; ++k) {
      BlockMatrix m = build_wk(GroupType::SOEven, n, k).matrix;
      for (int j = 0; j < k; ++j) m = c * m;  // c^k w_k
      item.expect(preserves_form(form, m),
                  [&] { return "c^k w_k breaks the form at n=" + std::to_string(n) + " k=" + std::to_string(k); });
    }
  });
  res.merge(so_even);
  return res;
}

std::optional<std::vector<SuiteResult>> run_suite(const std::string& name, bool parallel) {
  std::vector<SuiteResult> out;
  if (name == "identities" || name == "all") {
    out.push_back(check_a_consistency(parallel));
    out.push_back(check_b_symmetry(parallel));
    out.push_back(check_identity_a(parallel));
  }
  if (name == "gl" || name == "all") out.push_back(check_gl_lemma(parallel));
  if (name == "step2" || name == "all") {
    out.push_back(check_step2_case1(parallel));
    out.push_back(check_step2_case2(parallel));
  }
  if (name == "step3" || name == "all") out.push_back(check_step3(parallel));
  if (name == "reduction" || name == "all") out.push_back(check_reduction(parallel));
  if (name == "weyl" || name == "all") out.push_back(check_weyl(parallel));
  if (out.empty()) return std::nullopt;
  return out;
}

std::vector<std::string> suite_names() {
  return {"identities", "gl", "step2", "step3", "reduction", "weyl", "all"};
}

}  // namespace itnorm::verify
