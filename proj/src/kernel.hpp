#pragma once

// Internal helpers shared by the enumeration and DP engines.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <limits>
#include <thread>
#include <vector>

#include "powerindex/core.hpp"
#include "powerindex/indices.hpp"

namespace powerindex::detail {

template <class W>
struct IntSystem {
  std::vector<W> weights;
  W quota2;
  bool strict = false;

  bool wins(const W& x) const { return strict ? x > quota2 : x >= quota2; }
};

inline bool fits_int64(const ScaledSystem& s) {
  // Leave headroom so sums of all weights cannot overflow.
  const BigInt limit = BigInt(1) << 62;
  return s.total_weight() < limit && s.quota2 < limit;
}

inline std::int64_t to_i64(const BigInt& v) { return static_cast<std::int64_t>(v.get_si()); }

inline IntSystem<std::int64_t> to_int64(const ScaledSystem& s) {
  IntSystem<std::int64_t> out;
  for (const auto& w : s.weights) out.weights.push_back(to_i64(w));
  out.quota2 = to_i64(s.quota2);
  out.strict = s.mode == QuotaMode::StrictlyExceeds;
  return out;
}

inline IntSystem<BigInt> to_big(const ScaledSystem& s) {
  return {s.weights, s.quota2, s.mode == QuotaMode::StrictlyExceeds};
}

/// Calls fn with the int64 form when it is safe, with big integers otherwise.
template <class Fn>
decltype(auto) with_int_system(const ScaledSystem& s, Fn&& fn) {
  if (fits_int64(s)) return fn(to_int64(s));
  return fn(to_big(s));
}

inline BigInt to_big_count(std::uint64_t v) {
  BigInt out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return out;
}
inline const BigInt& to_big_count(const BigInt& v) { return v; }

/// Splits [0, count) into contiguous chunks, one per worker, and runs
/// fn(begin, end, worker) on each. The first exception is rethrown.
template <class Fn>
void parallel_chunks(std::uint64_t count, std::size_t workers, Fn&& fn) {
  workers = std::max<std::size_t>(1, std::min<std::uint64_t>(workers, std::max<std::uint64_t>(count, 1)));
  if (workers == 1) {
    fn(std::uint64_t{0}, count, std::size_t{0});
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::size_t k = 0; k < workers; ++k) {
      std::uint64_t begin = count * k / workers;
      std::uint64_t end = count * (k + 1) / workers;
      threads.emplace_back([&, begin, end, k] {
        try {
          fn(begin, end, k);
        } catch (...) {
          errors[k] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

inline void require_grand_coalition_wins(const VotingSystem& system) {
  if (!system.wins_with(system.total_weight())) {
    throw DegenerateSystem("the grand coalition does not reach the quota " +
                           system.quota().to_string());
  }
}

/// s! (n-1-s)! for s = 0..n-1.
inline std::vector<BigInt> ss_bucket_weights(std::size_t n) {
  std::vector<BigInt> out;
  out.reserve(n);
  for (std::size_t s = 0; s < n; ++s) out.push_back(factorial(s) * factorial(n - 1 - s));
  return out;
}

/// Defined next to the DP engines.
BigInt count_winning_dp(const VotingSystem& system, const EngineOptions& options);

}  // namespace powerindex::detail
