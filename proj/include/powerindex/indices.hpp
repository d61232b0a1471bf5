#pragma once

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "powerindex/core.hpp"

namespace powerindex {

/// Which kernel computes an index.
///  - Enumeration: walk all 2^n coalitions (capped by EngineOptions::max_players).
///  - DynamicProgramming: generating-function subset counts over scaled weights.
///  - Auto: the cheaper of the two for the given system.
enum class Engine { Enumeration, DynamicProgramming, Auto };

std::string_view to_string(Engine engine) noexcept;
Engine parse_engine(std::string_view text);

struct EngineOptions {
  std::size_t max_players = 24;
  /// Worker threads for the enumeration and DP loops. Results never depend on it.
  std::size_t workers = 1;
  /// Upper bound on DP table cells ((n + 1) x (Q2 + 1) for Shapley-Shubik).
  std::size_t max_dp_cells = std::size_t{1} << 26;
};

/// Raw critical-player counts.
struct SwingCounts {
  std::vector<BigInt> per_player;
  BigInt total;

  friend bool operator==(const SwingCounts&, const SwingCounts&) = default;
};

/// Raw pivotal-permutation counts; total is n!.
struct PivotCounts {
  std::vector<BigInt> per_player;
  BigInt total;

  friend bool operator==(const PivotCounts&, const PivotCounts&) = default;
};

struct BanzhafResult {
  SwingCounts counts;
  IndexVector index;
};

struct PivotResult {
  PivotCounts counts;
  IndexVector index;
};

// Every index function throws DegenerateSystem when the grand coalition loses.

BanzhafResult banzhaf_enum(const VotingSystem& system, const EngineOptions& options = {});
BanzhafResult banzhaf_dp(const VotingSystem& system, const EngineOptions& options = {});

/// Permutation oracle, n <= 9.
PivotResult ss_enum_perms(const VotingSystem& system);
IndexVector ss_enum_subsets(const VotingSystem& system, const EngineOptions& options = {});
IndexVector ss_dp(const VotingSystem& system, const EngineOptions& options = {});

/// Number of winning coalitions out of all 2^n (the empty one included).
BigInt count_winning(const VotingSystem& system, Engine engine = Engine::Auto,
                     const EngineOptions& options = {});

/// Whether the DP tables for this system fit EngineOptions::max_dp_cells.
bool dp_feasible(const VotingSystem& system, IndexKind kind, const EngineOptions& options = {});

/// Resolves Auto to a concrete engine for this system and kind.
Engine choose_engine(const VotingSystem& system, IndexKind kind, Engine requested,
                     const EngineOptions& options);

IndexVector banzhaf(const VotingSystem& system, Engine engine = Engine::Auto,
                    const EngineOptions& options = {});
IndexVector shapley_shubik(const VotingSystem& system, Engine engine = Engine::Auto,
                           const EngineOptions& options = {});
IndexVector compute_index(const VotingSystem& system, IndexKind kind,
                          Engine engine = Engine::Auto, const EngineOptions& options = {});

}  // namespace powerindex
