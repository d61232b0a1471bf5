#include "powerindex/indices.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <numeric>

#include "kernel.hpp"

namespace powerindex {

using detail::IntSystem;

std::string_view to_string(Engine engine) noexcept {
  switch (engine) {
    case Engine::Enumeration: return "enum";
    case Engine::DynamicProgramming: return "dp";
    case Engine::Auto: return "auto";
  }
  return "auto";
}

Engine parse_engine(std::string_view text) {
  if (text == "enum") return Engine::Enumeration;
  if (text == "dp") return Engine::DynamicProgramming;
  if (text == "auto") return Engine::Auto;
  throw InvalidInput("unknown engine '" + std::string(text) + "' (expected enum|dp|auto)");
}

namespace {

void require_enumerable(const VotingSystem& system, const EngineOptions& options) {
  if (system.size() > options.max_players || system.size() > 62) {
    throw InvalidInput("enumeration over " + std::to_string(system.size()) +
                       " players exceeds the cap of " + std::to_string(options.max_players));
  }
}

/// Visits every coalition mask in [begin, end) of the Gray-code order along
/// with its scaled weight, updating the weight one player at a time.
template <class W, class Visit>
void walk_gray(const IntSystem<W>& sys, std::uint64_t begin, std::uint64_t end, Visit&& visit) {
  if (begin >= end) return;
  std::uint64_t mask = begin ^ (begin >> 1);
  W weight = 0;
  for (std::uint64_t m = mask; m != 0; m &= m - 1) weight += sys.weights[std::countr_zero(m)];
  visit(mask, weight);
  for (std::uint64_t i = begin + 1; i < end; ++i) {
    const int bit = std::countr_zero(i);
    mask ^= std::uint64_t{1} << bit;
    if (mask >> bit & 1) {
      weight += sys.weights[bit];
    } else {
      weight -= sys.weights[bit];
    }
    visit(mask, weight);
  }
}

template <class W>
std::vector<std::uint64_t> swing_counts_enum(const IntSystem<W>& sys, std::size_t workers) {
  const std::size_t n = sys.weights.size();
  std::vector<std::vector<std::uint64_t>> partial(std::max<std::size_t>(workers, 1),
                                                  std::vector<std::uint64_t>(n, 0));
  detail::parallel_chunks(std::uint64_t{1} << n, workers,
                          [&](std::uint64_t begin, std::uint64_t end, std::size_t worker) {
    auto& counts = partial[worker];
    W reduced;
    walk_gray(sys, begin, end, [&](std::uint64_t mask, const W& weight) {
      if (!sys.wins(weight)) return;
      for (std::uint64_t m = mask; m != 0; m &= m - 1) {
        const int i = std::countr_zero(m);
        reduced = weight - sys.weights[i];
        if (!sys.wins(reduced)) ++counts[i];
      }
    });
  });
  std::vector<std::uint64_t> out(n, 0);
  for (const auto& p : partial) {
    for (std::size_t i = 0; i < n; ++i) out[i] += p[i];
  }
  return out;
}

/// counts[i * n + s]: losing coalitions of size s without i that i turns winning.
template <class W>
std::vector<std::uint64_t> pivot_buckets_enum(const IntSystem<W>& sys, std::size_t workers) {
  const std::size_t n = sys.weights.size();
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<std::vector<std::uint64_t>> partial(std::max<std::size_t>(workers, 1),
                                                  std::vector<std::uint64_t>(n * n, 0));
  detail::parallel_chunks(std::uint64_t{1} << n, workers,
                          [&](std::uint64_t begin, std::uint64_t end, std::size_t worker) {
    auto& counts = partial[worker];
    W grown;
    walk_gray(sys, begin, end, [&](std::uint64_t mask, const W& weight) {
      if (sys.wins(weight)) return;
      const auto s = static_cast<std::size_t>(std::popcount(mask));
      for (std::uint64_t m = full & ~mask; m != 0; m &= m - 1) {
        const int i = std::countr_zero(m);
        grown = weight + sys.weights[i];
        if (sys.wins(grown)) ++counts[static_cast<std::size_t>(i) * n + s];
      }
    });
  });
  std::vector<std::uint64_t> out(n * n, 0);
  for (const auto& p : partial) {
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += p[k];
  }
  return out;
}

template <class W>
std::uint64_t winning_count_enum(const IntSystem<W>& sys, std::size_t workers) {
  const std::size_t n = sys.weights.size();
  std::vector<std::uint64_t> partial(std::max<std::size_t>(workers, 1), 0);
  detail::parallel_chunks(std::uint64_t{1} << n, workers,
                          [&](std::uint64_t begin, std::uint64_t end, std::size_t worker) {
    std::uint64_t count = 0;
    walk_gray(sys, begin, end, [&](std::uint64_t, const W& weight) {
      if (sys.wins(weight)) ++count;
    });
    partial[worker] = count;
  });
  return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
}

template <class W>
std::vector<BigInt> pivot_counts_perms(const IntSystem<W>& sys) {
  const std::size_t n = sys.weights.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::uint64_t> counts(n, 0);
  do {
    W prefix = 0;
    for (std::size_t player : order) {
      prefix += sys.weights[player];
      if (sys.wins(prefix)) {
        ++counts[player];
        break;
      }
    }
  } while (std::next_permutation(order.begin(), order.end()));
  std::vector<BigInt> out;
  for (auto c : counts) out.push_back(detail::to_big_count(c));
  return out;
}

IndexVector ratio_vector(IndexKind kind, const std::vector<BigInt>& counts, const BigInt& total) {
  IndexVector out{kind, {}};
  out.values.reserve(counts.size());
  for (const auto& c : counts) out.values.emplace_back(c, total);
  return out;
}

/// Enumeration cost ~ n 2^n; DP cost ~ n^2 (Q2+1), times n again for SS.
/// nullopt when the engine cannot run on this system.
std::optional<BigInt> enum_cost(const VotingSystem& system, const EngineOptions& options) {
  const std::size_t n = system.size();
  if (n > options.max_players || n > 62) return std::nullopt;
  return BigInt(static_cast<unsigned long>(n)) << static_cast<mp_bitcnt_t>(n);
}

std::optional<BigInt> dp_cost(const VotingSystem& system, IndexKind kind,
                              const EngineOptions& options) {
  const ScaledSystem scaled = scale_to_integers(system);
  if (!detail::fits_int64(scaled)) return std::nullopt;
  const BigInt n(static_cast<unsigned long>(system.size()));
  BigInt cells = scaled.quota2 + 1;
  if (kind == IndexKind::ShapleyShubik) cells *= n;
  if (cells > BigInt(static_cast<unsigned long>(options.max_dp_cells))) return std::nullopt;
  return n * n * cells;
}

}  // namespace

BanzhafResult banzhaf_enum(const VotingSystem& system, const EngineOptions& options) {
  require_enumerable(system, options);
  detail::require_grand_coalition_wins(system);
  const ScaledSystem scaled = scale_to_integers(system);
  const auto raw = detail::with_int_system(
      scaled, [&](const auto& sys) { return swing_counts_enum(sys, options.workers); });
  BanzhafResult result;
  result.counts.total = 0;
  for (auto c : raw) {
    result.counts.per_player.push_back(detail::to_big_count(c));
    result.counts.total += result.counts.per_player.back();
  }
  if (result.counts.total == 0) throw DegenerateSystem("no player is ever critical");
  result.index = ratio_vector(IndexKind::Banzhaf, result.counts.per_player, result.counts.total);
  return result;
}

PivotResult ss_enum_perms(const VotingSystem& system) {
  if (system.size() > 9) {
    throw InvalidInput("permutation enumeration is limited to 9 players, got " +
                       std::to_string(system.size()));
  }
  detail::require_grand_coalition_wins(system);
  const ScaledSystem scaled = scale_to_integers(system);
  PivotResult result;
  result.counts.per_player =
      detail::with_int_system(scaled, [](const auto& sys) { return pivot_counts_perms(sys); });
  result.counts.total = factorial(system.size());
  result.index = ratio_vector(IndexKind::ShapleyShubik, result.counts.per_player,
                              result.counts.total);
  return result;
}

IndexVector ss_enum_subsets(const VotingSystem& system, const EngineOptions& options) {
  require_enumerable(system, options);
  detail::require_grand_coalition_wins(system);
  const std::size_t n = system.size();
  const ScaledSystem scaled = scale_to_integers(system);
  const auto buckets = detail::with_int_system(
      scaled, [&](const auto& sys) { return pivot_buckets_enum(sys, options.workers); });
  const auto factors = detail::ss_bucket_weights(n);
  const BigInt all = factorial(n);
  IndexVector out{IndexKind::ShapleyShubik, {}};
  for (std::size_t i = 0; i < n; ++i) {
    BigInt permutations = 0;
    for (std::size_t s = 0; s < n; ++s) {
      permutations += detail::to_big_count(buckets[i * n + s]) * factors[s];
    }
    out.values.emplace_back(permutations, all);
  }
  return out;
}

BigInt count_winning(const VotingSystem& system, Engine engine, const EngineOptions& options) {
  if (engine == Engine::Auto) engine = choose_engine(system, IndexKind::Banzhaf, engine, options);
  if (engine == Engine::Enumeration) {
    require_enumerable(system, options);
    const ScaledSystem scaled = scale_to_integers(system);
    return detail::to_big_count(detail::with_int_system(
        scaled, [&](const auto& sys) { return winning_count_enum(sys, options.workers); }));
  }
  return detail::count_winning_dp(system, options);
}

bool dp_feasible(const VotingSystem& system, IndexKind kind, const EngineOptions& options) {
  return dp_cost(system, kind, options).has_value();
}

Engine choose_engine(const VotingSystem& system, IndexKind kind, Engine requested,
                     const EngineOptions& options) {
  if (requested != Engine::Auto) return requested;
  const auto e = enum_cost(system, options);
  const auto d = dp_cost(system, kind, options);
  if (!e && !d) {
    throw InvalidInput("system with " + std::to_string(system.size()) +
                       " players is too large for both engines");
  }
  if (!e) return Engine::DynamicProgramming;
  if (!d) return Engine::Enumeration;
  return *d <= *e ? Engine::DynamicProgramming : Engine::Enumeration;
}

IndexVector banzhaf(const VotingSystem& system, Engine engine, const EngineOptions& options) {
  engine = choose_engine(system, IndexKind::Banzhaf, engine, options);
  return engine == Engine::Enumeration ? banzhaf_enum(system, options).index
                                       : banzhaf_dp(system, options).index;
}

IndexVector shapley_shubik(const VotingSystem& system, Engine engine,
                           const EngineOptions& options) {
  engine = choose_engine(system, IndexKind::ShapleyShubik, engine, options);
  return engine == Engine::Enumeration ? ss_enum_subsets(system, options)
                                       : ss_dp(system, options);
}

IndexVector compute_index(const VotingSystem& system, IndexKind kind, Engine engine,
                          const EngineOptions& options) {
  return kind == IndexKind::Banzhaf ? banzhaf(system, engine, options)
                                    : shapley_shubik(system, engine, options);
}

}  // namespace powerindex
