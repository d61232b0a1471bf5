#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "powerindex/core.hpp"
#include "powerindex/indices.hpp"

namespace powerindex {

/// The weighted game whose players are the divisors of n, each weighing
/// itself, with quota (sigma+1)/2 for even sigma and sigma/2 for odd sigma.
struct DivisorSystem {
  std::uint64_t n = 0;
  std::vector<std::uint64_t> divisors;  // descending: n first, 1 last
  std::uint64_t sigma = 0;
  std::int64_t abundance_excess = 0;    // sigma - 2n
  VotingSystem system;

  std::size_t divisor_count() const { return divisors.size(); }
  /// Position of a divisor in the player order, or nullopt.
  std::optional<std::size_t> position_of(std::uint64_t divisor) const;
};

/// Throws InvalidInput for n < 2.
std::vector<std::uint64_t> divisors_of(std::uint64_t n);
std::uint64_t sigma_of(std::uint64_t n);
std::int64_t abundance_class(std::uint64_t n);
DivisorSystem divisor_system(std::uint64_t n);

enum class ParityBranch { NotApplicable, Even, Odd };
const char* to_string(ParityBranch parity) noexcept;

/// Closed-form index predictions for sigma(n) = 2n + k, 0 <= k <= 5,
/// evaluated at d = number of divisors. A class the case does not derive is
/// left empty. "other" means the proper divisors other than 1.
struct CasePrediction {
  int case_k = 0;
  ParityBranch parity = ParityBranch::NotApplicable;
  std::size_t d = 0;
  std::optional<Rational> banzhaf_n, ss_n;
  std::optional<Rational> banzhaf_one, ss_one;
  std::optional<Rational> banzhaf_other, ss_other;
};

/// Throws UnsupportedCase when sigma(n) - 2n is outside 0..5.
CasePrediction case_formula_indices(const DivisorSystem& ds);

struct FormulaCheck {
  std::string index_class;  // e.g. "B(1)", "SS(d_i)"
  Rational predicted;
  std::uint64_t divisor = 0;
  Rational computed;
  bool matches = false;
};

struct DisagreementReport {
  std::uint64_t n = 0;
  std::int64_t k = 0;
  IndexVector banzhaf;
  IndexVector ss;
  /// Player positions where the two indices differ.
  std::vector<std::size_t> witness_positions;
  std::vector<std::uint64_t> witness_divisors;
  /// Empty when k is outside 0..5.
  std::vector<FormulaCheck> formula_checks;
  std::vector<std::string> notes;

  bool disagrees() const { return !witness_positions.empty(); }
  /// "Y", "N" or "NA" (no formulas for this k).
  std::string formula_match() const;
};

DisagreementReport check_index_disagreement(std::uint64_t n, const EngineOptions& options = {});

struct AbundantEntry {
  std::uint64_t n = 0;
  std::size_t d = 0;
  std::int64_t k = 0;

  friend bool operator==(const AbundantEntry&, const AbundantEntry&) = default;
};

/// Every n in [2, limit] with sigma(n) > 2n, optionally only those with the
/// given number of divisors. Uses a sieve so large limits stay cheap.
std::vector<AbundantEntry> scan_abundant(std::uint64_t limit,
                                         std::optional<std::size_t> divisor_count = {});

/// n in [2, limit] with sigma(n) = 2n + 1. None are known.
std::vector<std::uint64_t> find_quasiperfect(std::uint64_t limit);

bool is_prime(std::uint64_t n);

struct PnMnReport {
  std::uint64_t n = 0, p = 0, m = 0;
  BigInt count_pn, count_mn;
  bool counts_equal = false;
  /// Same comparison with the quota written in the counting argument,
  /// (p sigma(n) + sigma(n))/2 + 1.
  Rational proof_quota_pn, proof_quota_mn;
  BigInt proof_count_pn, proof_count_mn;
  bool proof_counts_equal = false;
  bool banzhaf_equal = false;
  bool ss_equal = false;
  bool indices_equal() const { return banzhaf_equal && ss_equal; }
};

/// Throws PreconditionFailed naming the violated condition unless p and m are
/// primes, both exceed sigma(n) + 1 and neither divides n.
PnMnReport compare_pn_mn(std::uint64_t n, std::uint64_t p, std::uint64_t m,
                         const EngineOptions& options = {});

/// One CSV row: n,d,sigma,k,banzhaf_vector,ss_vector,witness_positions,formula_match
std::string scan_csv_header();
std::string scan_csv_row(const DisagreementReport& report, const DivisorSystem& ds);

}  // namespace powerindex
