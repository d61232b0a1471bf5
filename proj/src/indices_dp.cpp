// Generating-function engines. For each player i the coefficients of
// prod_{j != i} (1 + x^{W_j}) (optionally split by coalition size) count the
// coalitions of the other players by scaled weight. Only weights up to Q2
// matter for swings, so every table is truncated there.

#include <cstdint>
#include <vector>

#include "kernel.hpp"
#include "powerindex/indices.hpp"

namespace powerindex {

namespace {

struct DpSystem {
  std::vector<std::int64_t> weights;
  std::int64_t quota2 = 0;
  bool strict = false;
  std::size_t limit = 0;  // highest weight tracked

  /// Inclusive range of other-player weights w for which w loses and w + W_i wins.
  std::pair<std::int64_t, std::int64_t> swing_window(std::size_t i) const {
    const std::int64_t wi = weights[i];
    if (strict) return {std::max<std::int64_t>(0, quota2 - wi + 1), quota2};
    return {std::max<std::int64_t>(0, quota2 - wi), quota2 - 1};
  }
};

DpSystem prepare(const VotingSystem& system, const EngineOptions& options, std::size_t rows) {
  const ScaledSystem scaled = scale_to_integers(system);
  if (!detail::fits_int64(scaled)) {
    throw InvalidInput("scaled weights too large for the DP engine");
  }
  const BigInt cells = (scaled.quota2 + 1) * BigInt(static_cast<unsigned long>(rows));
  if (cells > BigInt(static_cast<unsigned long>(options.max_dp_cells))) {
    throw InvalidInput("DP table of " + cells.get_str() + " cells exceeds the limit of " +
                       std::to_string(options.max_dp_cells));
  }
  DpSystem out;
  const auto sys = detail::to_int64(scaled);
  out.weights = sys.weights;
  out.quota2 = sys.quota2;
  out.strict = sys.strict;
  out.limit = static_cast<std::size_t>(sys.quota2);
  return out;
}

/// Multiplies a truncated polynomial by (1 + x^w).
template <class Count>
void absorb(std::vector<Count>& poly, std::int64_t w) {
  if (w == 0) {
    for (auto& c : poly) c += c;
    return;
  }
  const auto step = static_cast<std::size_t>(w);
  for (std::size_t t = poly.size(); t-- > step;) poly[t] += poly[t - step];
}

/// Same, on a table indexed [size][weight]; row s+1 gains row s shifted by w.
template <class Count>
void absorb_sized(std::vector<std::vector<Count>>& table, std::size_t filled, std::int64_t w) {
  const auto step = static_cast<std::size_t>(w);
  for (std::size_t s = filled + 1; s-- > 0;) {
    auto& from = table[s];
    auto& to = table[s + 1];
    for (std::size_t t = step; t < from.size(); ++t) to[t] += from[t - step];
  }
}

template <class Count>
BigInt swings_for(const DpSystem& sys, std::size_t i) {
  std::vector<Count> poly(sys.limit + 1, Count(0));
  poly[0] = 1;
  for (std::size_t j = 0; j < sys.weights.size(); ++j) {
    if (j != i && static_cast<std::size_t>(sys.weights[j]) <= sys.limit) {
      absorb(poly, sys.weights[j]);
    }
  }
  auto [lo, hi] = sys.swing_window(i);
  BigInt total = 0;
  for (std::int64_t t = lo; t <= hi; ++t) total += detail::to_big_count(poly[static_cast<std::size_t>(t)]);
  return total;
}

template <class Count>
std::vector<BigInt> pivot_buckets_for(const DpSystem& sys, std::size_t i) {
  const std::size_t n = sys.weights.size();
  std::vector<std::vector<Count>> table(n, std::vector<Count>(sys.limit + 1, Count(0)));
  table[0][0] = 1;
  std::size_t filled = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == i) continue;
    // Players heavier than the window still change coalition sizes, but any
    // coalition containing them is past the quota and never reaches a bucket.
    if (static_cast<std::size_t>(sys.weights[j]) <= sys.limit) {
      absorb_sized(table, filled, sys.weights[j]);
    }
    ++filled;
  }
  auto [lo, hi] = sys.swing_window(i);
  std::vector<BigInt> buckets(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::int64_t t = lo; t <= hi; ++t) {
      buckets[s] += detail::to_big_count(table[s][static_cast<std::size_t>(t)]);
    }
  }
  return buckets;
}

/// Counts fit in 64 bits whenever n <= 63 since no count exceeds 2^n.
bool small_counts(std::size_t n) { return n <= 63; }

}  // namespace

BanzhafResult banzhaf_dp(const VotingSystem& system, const EngineOptions& options) {
  detail::require_grand_coalition_wins(system);
  const DpSystem sys = prepare(system, options, 1);
  const std::size_t n = system.size();
  BanzhafResult result;
  result.counts.per_player.assign(n, 0);
  detail::parallel_chunks(n, options.workers,
                          [&](std::uint64_t begin, std::uint64_t end, std::size_t) {
    for (std::uint64_t i = begin; i < end; ++i) {
      result.counts.per_player[i] = small_counts(n) ? swings_for<std::uint64_t>(sys, i)
                                                    : swings_for<BigInt>(sys, i);
    }
  });
  result.counts.total = 0;
  for (const auto& c : result.counts.per_player) result.counts.total += c;
  if (result.counts.total == 0) throw DegenerateSystem("no player is ever critical");
  result.index.kind = IndexKind::Banzhaf;
  for (const auto& c : result.counts.per_player) {
    result.index.values.emplace_back(c, result.counts.total);
  }
  return result;
}

IndexVector ss_dp(const VotingSystem& system, const EngineOptions& options) {
  detail::require_grand_coalition_wins(system);
  const std::size_t n = system.size();
  const DpSystem sys = prepare(system, options, n);
  const auto factors = detail::ss_bucket_weights(n);
  const BigInt all = factorial(n);
  std::vector<BigInt> permutations(n, 0);
  detail::parallel_chunks(n, options.workers,
                          [&](std::uint64_t begin, std::uint64_t end, std::size_t) {
    for (std::uint64_t i = begin; i < end; ++i) {
      const auto buckets = small_counts(n) ? pivot_buckets_for<std::uint64_t>(sys, i)
                                           : pivot_buckets_for<BigInt>(sys, i);
      for (std::size_t s = 0; s < n; ++s) permutations[i] += buckets[s] * factors[s];
    }
  });
  IndexVector out{IndexKind::ShapleyShubik, {}};
  for (const auto& p : permutations) out.values.emplace_back(p, all);
  return out;
}

namespace detail {

BigInt count_winning_dp(const VotingSystem& system, const EngineOptions& options) {
  const DpSystem sys = prepare(system, options, 1);
  const std::size_t n = system.size();
  std::vector<BigInt> poly(sys.limit + 1, 0);
  poly[0] = 1;
  for (auto w : sys.weights) {
    if (static_cast<std::size_t>(w) <= sys.limit) absorb(poly, w);
  }
  // Losing weights are those below the quota (or at it, in strict mode).
  const std::size_t last_losing = sys.strict ? sys.limit : sys.limit - 1;
  BigInt losing = 0;
  for (std::size_t t = 0; t <= last_losing && t < poly.size(); ++t) losing += poly[t];
  return (BigInt(1) << static_cast<mp_bitcnt_t>(n)) - losing;
}

}  // namespace detail

}  // namespace powerindex
