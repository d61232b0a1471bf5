#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "powerindex/core.hpp"
#include "powerindex/indices.hpp"

namespace powerindex {

// ---------------------------------------------------------------------------
// The index map on [1/2 strict; w] and its iteration.

/// Index vector of [1/2 strict; weights]. The weights must be non-negative and
/// sum to exactly 1 (InvalidInput otherwise).
std::vector<Rational> apply_index_map(std::span<const Rational> weights, IndexKind kind,
                                      const EngineOptions& options = {});

struct IterationOutcome {
  enum class Type { FixedPoint, Cycle, MaxIterationsReached };
  Type type = Type::MaxIterationsReached;
  /// FixedPoint: index of the fixed state. Cycle: index of the first state on the cycle.
  std::size_t entry = 0;
  /// Cycle length (1 for a fixed point, 0 when no recurrence was found).
  std::size_t length = 0;
};

const char* to_string(IterationOutcome::Type type) noexcept;

struct IterationTrace {
  IndexKind kind = IndexKind::Banzhaf;
  std::vector<std::vector<Rational>> states;
  IterationOutcome outcome;
};

/// Applies the index map until a state repeats or max_iters applications
/// have been made. Throws InvalidInput when max_iters == 0.
IterationTrace iterate(std::vector<Rational> weights, IndexKind kind, std::size_t max_iters,
                       const EngineOptions& options = {});

// ---------------------------------------------------------------------------
// Two-class weight vectors: (a, b, ..., b) and (a, a, b, ..., b), m players of
// weight b, all summing to 1.

enum class FamilyShape { AB, AAB };

struct FamilySpec {
  FamilyShape shape = FamilyShape::AB;
  std::size_t m = 0;
  long k = 0;
  long offset = 0;  // the family's positive integer offset C
  Rational a, b;
  bool valid = false;
  std::string reason;

  /// Weights in player order: the type-A player(s) first.
  std::vector<Rational> weights() const;
};

/// floor(1/(2b)) and whether 1/(2b) is an integer.
struct HalfReciprocal {
  BigInt floor;
  bool integral = false;
};
HalfReciprocal half_reciprocal(const Rational& b);

/// Closed-form Shapley-Shubik power of the type-A player in
/// [1/2 strict; 1 - m b, b, ..., b]. Throws InvalidFamily unless 0 < m b < 1.
/// Equals the engine while floor(1/(2b)) <= m; beyond that A is a dictator and
/// the expression exceeds 1.
Rational ab_ss_power_of_A(std::size_t m, const Rational& b);

/// Requires k >= 2, 1 <= C < k (InvalidFamily otherwise). Validity is the
/// explicit floor gate, never an asymptotic argument.
FamilySpec ab_odd_family_point(long k, long offset);
FamilySpec ab_even_family_point(long k, long offset);

/// Every b solving ab_ss_power_of_A(m, b) = 1 - m b, found by branching on
/// floor(1/(2b)); includes the uniform point 1/(m+1).
struct AbSolution {
  Rational b;
  bool trivial = false;
};
std::vector<AbSolution> ab_fixed_solutions(std::size_t m);

/// Which denominator to use in the odd-m (a, a, b, ..., b) formula.
enum class AabDenominator {
  Corrected,  // (2k+2)(2k+3), the permutation count ratio (2k+3)!/(2k+1)!
  OffByOne,   // (2k+1)(2k+2)
};

/// Closed-form Shapley-Shubik power of one type-A player in
/// [1/2 strict; a, a, b, ..., b], a = (1 - m b)/2. Throws InvalidFamily unless
/// 0 < m b < 1 and IntegerBoundary when 1/(2b) is an integer.
/// Equals the engine while 1/(2b) < m.
Rational aab_ss_power_of_A(std::size_t m, const Rational& b,
                           AabDenominator denominator = AabDenominator::Corrected);

struct AabSolution {
  Rational b;
  /// Engine verdict on the fixed point, present when m + 2 <= 12.
  std::optional<bool> engine_certified;
};

/// Non-trivial b with aab_ss_power_of_A(m, b) = (1 - m b)/2, ascending.
std::vector<AabSolution> aab_fixed_solutions(std::size_t m, const EngineOptions& options = {});

enum class Parity { Even, Odd };

/// Closed-form classes: m = 2k gives 1/(2k+1) and k/((k+1)(2k+1)); m = 2k+1
/// gives (k+1)/(4(k+1)^2 - 1). Ascending.
std::vector<Rational> aab_verified_classes(long k, Parity parity);

struct BanzhafPair {
  Rational a_index;
  Rational b_index;
};

/// Closed-form Banzhaf indices for [1/2 strict; 1 - m b, b, ..., b].
/// Throws InvalidFamily unless 0 < m b < 1.
BanzhafPair ab_banzhaf_index(std::size_t m, const Rational& b);

enum class FamilyKind { OddM, EvenM };  // m = 2k - 1 or m = 2k

struct FamilyBanzhafCheck {
  FamilySpec point;
  Rational closed_form_b_index;
  bool holds = false;  // closed form equals b
  std::optional<Rational> engine_b_index;
  std::optional<bool> engine_holds;
};

/// Whether the family point is also a Banzhaf fixed point, by the family's
/// specialised binomial closed form; cross-checked with the engine when the
/// system has at most max_engine_players players.
FamilyBanzhafCheck family_banzhaf_check(long k, long offset, FamilyKind which,
                                        std::size_t max_engine_players = 24,
                                        const EngineOptions& options = {});

}  // namespace powerindex
