#include "powerindex/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <array>
#include <map>
#include <random>
#include <set>

#include "powerindex/divisor.hpp"
#include "powerindex/fixedpoint.hpp"
#include "powerindex/render.hpp"

namespace powerindex {
namespace {

using Clock = std::chrono::steady_clock;

// Runs body, stamps elapsed time, and enforces an optional time budget.
CheckResult timed(int id, std::string name, std::string claim, std::optional<std::int64_t> budget_ms,
                  const std::function<void(CheckResult&)>& body) {
  CheckResult r;
  r.id = id;
  r.name = std::move(name);
  r.claim = std::move(claim);
  const auto start = Clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.passed = false;
    r.details.push_back(std::string("error: ") + e.what());
  }
  r.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  if (budget_ms && r.elapsed_ms > *budget_ms) {
    r.passed = false;
    r.details.push_back("over time budget of " + std::to_string(*budget_ms) + " ms");
  }
  return r;
}

std::string vec(const std::vector<Rational>& v) { return "(" + join(v, ", ") + ")"; }

EngineOptions dp_options(const VerifyOptions& o) { return o.engine; }

}  // namespace

CheckResult check_perfect_closed_forms(const VerifyOptions& options) {
  return timed(1, "perfect", "perfect-number closed forms match the engine exactly", 1000,
               [&](CheckResult& r) {
    r.passed = true;
    for (std::uint64_t n : {6, 28, 496}) {
      const auto report = check_index_disagreement(n, dp_options(options));
      std::size_t ok = 0;
      for (const auto& c : report.formula_checks) {
        if (c.matches) {
          ++ok;
        } else {
          r.passed = false;
          r.details.push_back("n=" + std::to_string(n) + " " + c.index_class + " at " +
                              std::to_string(c.divisor) + ": predicted " +
                              c.predicted.to_string() + ", engine " + c.computed.to_string());
        }
      }
      if (report.formula_checks.empty()) r.passed = false;
      r.details.push_back("n=" + std::to_string(n) + ": " + std::to_string(ok) + "/" +
                          std::to_string(report.formula_checks.size()) + " formula values agree");
      if (n == 6) {
        const std::vector<Rational> bz{Rational(7, 10), Rational(1, 10), Rational(1, 10),
                                       Rational(1, 10)};
        const std::vector<Rational> ss{Rational(3, 4), Rational(1, 12), Rational(1, 12),
                                       Rational(1, 12)};
        const bool exact = report.banzhaf.values == bz && report.ss.values == ss;
        r.passed = r.passed && exact;
        r.details.push_back("n=6: banzhaf " + vec(report.banzhaf.values) + ", ss " +
                            vec(report.ss.values));
      }
    }
  });
}

CheckResult check_disagreement_sweep(const VerifyOptions& options) {
  return timed(
      2, "sweep",
      "Banzhaf and SS differ somewhere for every perfect or abundant n <= " +
          std::to_string(options.max_n) + " with sigma(n) - 2n <= " + std::to_string(options.max_k),
      120000, [&](CheckResult& r) {
        r.passed = true;
        std::vector<std::uint64_t> checked;
        for (std::uint64_t n = 2; n <= options.max_n; ++n) {
          const std::int64_t k = abundance_class(n);
          if (k < 0 || k > options.max_k) continue;
          checked.push_back(n);
          const auto report = check_index_disagreement(n, dp_options(options));
          std::string line = "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": ";
          if (report.disagrees()) {
            line += "differ at divisor " + std::to_string(report.witness_divisors.front());
          } else {
            line += "identical";
            r.passed = false;
          }
          r.details.push_back(line);
        }
        r.details.push_back(std::to_string(checked.size()) + " systems checked");
      });
}

CheckResult check_case_formulas(const VerifyOptions& options) {
  return timed(3, "case-formulas",
               "case formulas for k = 2, 3, 4 compared with the engine; the indices still differ",
               std::nullopt, [&](CheckResult& r) {
    r.finding = true;
    r.passed = true;
    for (std::uint64_t n : {20, 18, 12, 70}) {
      const auto report = check_index_disagreement(n, dp_options(options));
      if (!report.disagrees()) r.passed = false;
      for (const auto& c : report.formula_checks) {
        r.details.push_back("n=" + std::to_string(n) + " " + c.index_class + " (divisor " +
                            std::to_string(c.divisor) + "): predicted " +
                            c.predicted.to_string() + ", engine " + c.computed.to_string() +
                            (c.matches ? "  agree" : "  DISAGREE"));
      }
      for (const auto& note : report.notes) r.details.push_back("n=" + std::to_string(n) + ": " + note);
    }
  });
}

CheckResult check_pn_mn_counts(const VerifyOptions& options) {
  std::vector<std::array<std::uint64_t, 3>> cases;
  if (options.n || options.p || options.m) {
    cases.push_back({options.n.value_or(12), options.p.value_or(31), options.m.value_or(37)});
  } else {
    cases = {{12, 31, 37}, {6, 31, 37}};
  }
  return timed(4, "pn-mn-counts",
               "divisor systems of p n and m n have equal winning-coalition counts", 1000,
               [&](CheckResult& r) {
    r.passed = true;
    for (const auto& [n, p, m] : cases) {
      const auto report = compare_pn_mn(n, p, m, options.engine);
      r.passed = r.passed && report.counts_equal;
      r.details.push_back(std::to_string(n) + "*" + std::to_string(p) + ": " +
                          report.count_pn.get_str() + " winning, " + std::to_string(n) + "*" +
                          std::to_string(m) + ": " + report.count_mn.get_str() + " winning" +
                          (report.counts_equal ? "" : "  MISMATCH"));
      r.details.push_back("with quota (p sigma + sigma)/2 + 1: " + report.proof_count_pn.get_str() +
                          " vs " + report.proof_count_mn.get_str());
    }
  });
}

CheckResult check_pn_mn_indices(const VerifyOptions& options) {
  const std::uint64_t n = options.n.value_or(12), p = options.p.value_or(31),
                      m = options.m.value_or(37);
  return timed(5, "pn-mn-indices",
               "index vectors of p n and m n agree under d <-> d, p d <-> m d", std::nullopt,
               [&](CheckResult& r) {
    const auto report = compare_pn_mn(n, p, m, options.engine);
    r.passed = report.indices_equal();
    r.details.push_back("(" + std::to_string(n) + ", " + std::to_string(p) + ", " +
                        std::to_string(m) + "): banzhaf " +
                        (report.banzhaf_equal ? "equal" : "differ") + ", ss " +
                        (report.ss_equal ? "equal" : "differ"));
  });
}

CheckResult check_aab_tables(const VerifyOptions& options) {
  return timed(6, "aab-tables",
               "(a, a, b, ..., b) Shapley-Shubik fixed points reproduce the tabulated b values",
               60000, [&](CheckResult& r) {
    auto R = [](long p, long q) { return Rational(p, q); };
    const std::map<std::size_t, std::vector<Rational>> expected = {
        {2, {R(1, 3)}},
        {4, {R(2, 15), R(1, 5)}},
        {6, {R(3, 28), R(1, 7)}},
        {8, {R(13, 180), R(4, 45), R(1, 9)}},
        {10, {R(7, 110), R(5, 66), R(1, 11)}},
        {3, {R(2, 15)}},
        {5, {R(3, 35), R(11, 105)}},
        {7, {R(4, 63), R(11, 126)}},
        {9, {R(5, 99), R(31, 495), R(37, 495)}},
    };
    r.passed = true;
    std::size_t certified = 0, total = 0;
    for (const auto& [m, want] : expected) {
      const auto solutions = aab_fixed_solutions(m, options.engine);
      std::vector<Rational> got;
      for (const auto& s : solutions) {
        got.push_back(s.b);
        if (s.engine_certified == true) ++certified;
        else r.passed = false;
      }
      total += want.size();
      const bool same = got == want;
      r.passed = r.passed && same;
      r.details.push_back("m=" + std::to_string(m) + ": " + vec(got) + (same ? "" : "  expected " + vec(want)));
    }
    r.details.push_back(std::to_string(certified) + "/" + std::to_string(total) +
                        " certified by the engine");
  });
}

CheckResult check_aab_denominator(const VerifyOptions& options) {
  (void)options;
  return timed(7, "aab-denominator",
               "odd-m (a, a, b, ..., b) formula needs denominator (2k+2)(2k+3), not (2k+1)(2k+2)",
               std::nullopt, [&](CheckResult& r) {
    r.finding = true;
    const std::size_t m = 3;
    const Rational b(2, 15);
    const Rational a = (Rational(1) - Rational(static_cast<std::int64_t>(m)) * b) / Rational(2);
    std::vector<Rational> weights{a, a};
    weights.insert(weights.end(), m, b);
    const auto oracle = ss_enum_perms(VotingSystem::strict_majority(weights));
    const Rational truth = oracle.index[0];
    const Rational off = aab_ss_power_of_A(m, b, AabDenominator::OffByOne);
    const Rational fixed = aab_ss_power_of_A(m, b, AabDenominator::Corrected);
    const bool off_fails = off != a && off != truth;
    const bool fixed_passes = fixed == a && truth == a;
    r.passed = off_fails && fixed_passes && oracle.counts.total == 120;
    r.details.push_back("m=3, b=2/15, a=" + a.to_string() + "; permutation oracle (" +
                        oracle.counts.total.get_str() + " orders): " + truth.to_string());
    r.details.push_back("(2k+1)(2k+2): " + off.to_string() + (off_fails ? "  not fixed" : "  fixed"));
    r.details.push_back("(2k+2)(2k+3): " + fixed.to_string() + (fixed_passes ? "  fixed" : "  not fixed"));
  });
}

CheckResult check_ab_families(const VerifyOptions& options) {
  return timed(8, "ab-families",
               "(a, b, ..., b) family points passing the floor gate are Shapley-Shubik fixed points (k <= 6)",
               std::nullopt, [&](CheckResult& r) {
    r.passed = true;
    std::size_t valid = 0;
    for (long k = 2; k <= 6; ++k) {
      for (long c = 1; c < k; ++c) {
        for (bool odd : {true, false}) {
          const FamilySpec spec = odd ? ab_odd_family_point(k, c) : ab_even_family_point(k, c);
          if (!spec.valid) continue;
          ++valid;
          const auto w = spec.weights();
          const bool formula = ab_ss_power_of_A(spec.m, spec.b) == spec.a;
          const bool engine = apply_index_map(w, IndexKind::ShapleyShubik, options.engine) == w;
          if (!(formula && engine)) r.passed = false;
          r.details.push_back(std::string(odd ? "m=2k-1" : "m=2k") + " k=" + std::to_string(k) +
                              " C=" + std::to_string(c) + ": (" + compact_list(w) + ") formula " +
                              (formula ? "yes" : "no") + ", engine " + (engine ? "yes" : "no"));
        }
      }
    }
    const FamilySpec example = ab_odd_family_point(3, 1);
    std::vector<Rational> want{Rational(1, 3)};
    want.insert(want.end(), 5, Rational(2, 15));
    if (!example.valid || example.weights() != want) {
      r.passed = false;
      r.details.push_back("k=3, C=1 does not give (1/3, 2/15 x5)");
    }
    if (valid == 0) r.passed = false;
    r.details.push_back(std::to_string(valid) + " valid points checked");
  });
}

CheckResult check_joint_fixed_points(const VerifyOptions& options) {
  return timed(9, "joint-fixed-points",
               "only C = 1 family points are also Banzhaf fixed points; the m = 2k family has none (k <= 8)",
               std::nullopt, [&](CheckResult& r) {
    r.passed = true;
    const auto base = family_banzhaf_check(3, 1, FamilyKind::OddM, 24, options.engine);
    const bool base_ok = base.holds && base.engine_b_index == Rational(2, 15) &&
                         base.closed_form_b_index == Rational(2, 15);
    r.passed = base_ok;
    r.details.push_back("m=2k-1 k=3 C=1: type-B Banzhaf index " + base.closed_form_b_index.to_string() +
                        (base.engine_b_index ? ", engine " + base.engine_b_index->to_string() : ""));
    for (long k = 2; k <= 8; ++k) {
      std::vector<std::string> odd_pass, even_pass;
      for (long c = 1; c < k; ++c) {
        const auto odd = family_banzhaf_check(k, c, FamilyKind::OddM, 24, options.engine);
        const bool odd_engine = odd.engine_holds.value_or(odd.holds);
        if (odd.holds && odd_engine) odd_pass.push_back(std::to_string(c));
        if (c >= 2 && (odd.holds || odd_engine)) r.passed = false;
        if (odd.engine_holds && *odd.engine_holds != odd.holds) {
          r.details.push_back("m=2k-1 k=" + std::to_string(k) + " C=" + std::to_string(c) +
                              ": closed form and engine disagree (" + odd.point.reason + ")");
        }
        const auto even = family_banzhaf_check(k, c, FamilyKind::EvenM, 24, options.engine);
        if (even.holds || even.engine_holds.value_or(false)) {
          even_pass.push_back(std::to_string(c));
          r.passed = false;
        }
      }
      auto list = [](const std::vector<std::string>& v) {
        std::string s;
        for (const auto& x : v) s += (s.empty() ? "" : ",") + x;
        return s.empty() ? std::string("none") : s;
      };
      r.details.push_back("k=" + std::to_string(k) + ": Banzhaf-fixed C for m=2k-1: " +
                          list(odd_pass) + "; for m=2k: " + list(even_pass));
    }
  });
}

CheckResult check_engine_equivalence(const VerifyOptions& options) {
  return timed(10, "engines",
               "DP, subset enumeration and permutation engines agree on random systems", 120000,
               [&](CheckResult& r) {
    r.passed = true;
    std::mt19937_64 rng(options.seed);
    auto draw = [&](std::int64_t lo, std::int64_t hi) {
      return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
    };
    std::size_t done = 0, perms = 0;
    while (done < options.count) {
      const auto n = static_cast<std::size_t>(draw(1, 12));
      std::vector<Rational> weights;
      std::int64_t total = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t w = draw(0, 50);
        total += w;
        weights.emplace_back(w);
      }
      const QuotaMode mode = draw(0, 1) ? QuotaMode::MeetsOrExceeds : QuotaMode::StrictlyExceeds;
      // Half-integer quotas exercise the rounding at the boundary.
      const std::int64_t top = mode == QuotaMode::MeetsOrExceeds ? 2 * total : 2 * total - 1;
      if (top < 1) continue;
      const VotingSystem system(Rational(draw(1, top), 2), mode, weights);
      ++done;
      const auto be = banzhaf_enum(system, options.engine);
      const auto bd = banzhaf_dp(system, options.engine);
      const auto se = ss_enum_subsets(system, options.engine);
      const auto sd = ss_dp(system, options.engine);
      bool ok = be.counts == bd.counts && be.index == bd.index && se == sd;
      if (n <= 7) {
        ++perms;
        ok = ok && ss_enum_perms(system).index == se;
      }
      if (!ok) {
        r.passed = false;
        r.details.push_back("mismatch: " + to_json(system).dump());
      }
    }
    r.details.push_back(std::to_string(done) + " systems (seed " + std::to_string(options.seed) +
                        "), " + std::to_string(perms) + " also checked by permutations");
  });
}

CheckResult check_abundance_census(const VerifyOptions& options) {
  (void)options;
  return timed(11, "census", "abundant n <= 100 with exactly 6 divisors include 12, 18 and 20",
               std::nullopt, [&](CheckResult& r) {
    r.finding = true;
    std::set<std::uint64_t> found;
    std::string listed;
    for (const auto& e : scan_abundant(100, 6)) {
      found.insert(e.n);
      listed += (listed.empty() ? "" : ", ") + std::to_string(e.n) + " (k=" + std::to_string(e.k) + ")";
    }
    r.passed = found.count(12) && found.count(18) && found.count(20);
    r.details.push_back("found: " + listed);
    r.details.push_back("so 6 divisors do not by themselves rule out abundance");
  });
}

CheckResult check_dp_performance(const VerifyOptions& options) {
  return timed(12, "dp-performance", "Shapley-Shubik by DP on the divisor system of 360", 10000,
               [&](CheckResult& r) {
    const DivisorSystem ds = divisor_system(360);
    const IndexVector ss = ss_dp(ds.system, options.engine);
    const Rational total = sum(ss.values);
    r.passed = ss.size() == 24 && ds.sigma == 1170 && total == Rational(1);
    r.details.push_back(std::to_string(ss.size()) + " players, sigma " + std::to_string(ds.sigma) +
                        ", index sum " + total.to_string() + ", SS(360) = " + ss[0].to_string());
  });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"perfect", "prop21",  "prop22census", "prop24",
                                              "conj23",  "tables32", "sec33",       "engines",
                                              "perf",    "all"};
  return names;
}

std::vector<CheckResult> run_suite(std::string_view suite, const VerifyOptions& options) {
  using Check = CheckResult (*)(const VerifyOptions&);
  static const std::map<std::string, std::vector<Check>, std::less<>> suites = {
      {"perfect", {check_perfect_closed_forms}},
      {"prop21", {check_disagreement_sweep, check_case_formulas}},
      {"prop22census", {check_abundance_census}},
      {"prop24", {check_pn_mn_counts}},
      {"conj23", {check_pn_mn_indices}},
      {"tables32", {check_aab_tables, check_aab_denominator}},
      {"sec33", {check_ab_families, check_joint_fixed_points}},
      {"engines", {check_engine_equivalence}},
      {"perf", {check_dp_performance}},
      {"all",
       {check_perfect_closed_forms, check_disagreement_sweep, check_case_formulas,
        check_pn_mn_counts, check_pn_mn_indices, check_aab_tables, check_aab_denominator,
        check_ab_families, check_joint_fixed_points, check_engine_equivalence,
        check_abundance_census, check_dp_performance}},
  };
  auto it = suites.find(suite);
  if (it == suites.end()) throw InvalidInput("unknown verification suite '" + std::string(suite) + "'");
  std::vector<CheckResult> out;
  for (Check check : it->second) out.push_back(check(options));
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.passed; });
}

}  // namespace powerindex
