#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "powerindex/indices.hpp"

namespace powerindex {

struct VerifyOptions {
  std::uint64_t max_n = 1000;      // disagreement sweep bound
  std::int64_t max_k = 5;          // largest abundance excess swept
  std::optional<std::uint64_t> n, p, m;  // single pn/mn comparison override
  std::size_t count = 200;         // random systems in the engine suite
  std::uint64_t seed = 20240601;
  EngineOptions engine;
};

struct CheckResult {
  int id = 0;
  std::string name;
  std::string claim;
  bool passed = false;
  /// The check records a documented finding; its detail lines carry it.
  bool finding = false;
  std::vector<std::string> details;
  std::int64_t elapsed_ms = 0;
};

CheckResult check_perfect_closed_forms(const VerifyOptions& options);
CheckResult check_disagreement_sweep(const VerifyOptions& options);
CheckResult check_case_formulas(const VerifyOptions& options);
CheckResult check_pn_mn_counts(const VerifyOptions& options);
CheckResult check_pn_mn_indices(const VerifyOptions& options);
CheckResult check_aab_tables(const VerifyOptions& options);
CheckResult check_aab_denominator(const VerifyOptions& options);
CheckResult check_ab_families(const VerifyOptions& options);
CheckResult check_joint_fixed_points(const VerifyOptions& options);
CheckResult check_engine_equivalence(const VerifyOptions& options);
CheckResult check_abundance_census(const VerifyOptions& options);
CheckResult check_dp_performance(const VerifyOptions& options);

/// Suite names accepted by run_suite, "all" last.
const std::vector<std::string>& suite_names();
/// Throws InvalidInput for an unknown suite.
std::vector<CheckResult> run_suite(std::string_view suite, const VerifyOptions& options);
/// True when every check passed.
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace powerindex
