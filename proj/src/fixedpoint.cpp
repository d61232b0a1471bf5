#include "powerindex/fixedpoint.hpp"

#include <algorithm>
#include <unordered_map>

namespace powerindex {

namespace {

struct StateHash {
  std::size_t operator()(const std::vector<Rational>& state) const noexcept {
    std::size_t h = state.size();
    for (const auto& r : state) h = h * 1000003u ^ hash_value(r);
    return h;
  }
};

void require_family_range(std::size_t m, const Rational& b) {
  const Rational mb = Rational(static_cast<std::int64_t>(m)) * b;
  if (b.sign() <= 0 || mb >= 1) {
    throw InvalidFamily("need 0 < m b < 1, got m = " + std::to_string(m) + ", b = " +
                        b.to_string());
  }
}

Rational from_long(long v) { return Rational(static_cast<std::int64_t>(v)); }

BigInt binomial_range_sum(long n, long lo, long hi) {
  BigInt total = 0;
  for (long q = std::max(lo, 0L); q <= std::min(hi, n); ++q) total += binomial(n, q);
  return total;
}

/// Numerator of the (a, a, b, ..., b) power of A over its denominator.
Rational aab_power_at_floor(std::size_t m, const BigInt& floor_value, AabDenominator denominator) {
  const BigInt F = floor_value;
  if (m % 2 == 0) {
    const BigInt k(static_cast<unsigned long>(m / 2));
    const BigInt twice = (F - k) * (3 * k - F + 1) + (F - k + 1) * (3 * k - F + 2);
    return Rational(twice, 2 * (2 * k + 1) * (2 * k + 2));
  }
  const BigInt k(static_cast<unsigned long>((m - 1) / 2));
  const BigInt numerator = (F - k) * (3 * k - F + 3);
  const BigInt den = denominator == AabDenominator::Corrected ? (2 * k + 2) * (2 * k + 3)
                                                              : (2 * k + 1) * (2 * k + 2);
  return Rational(numerator, den);
}

}  // namespace

std::vector<Rational> apply_index_map(std::span<const Rational> weights, IndexKind kind,
                                      const EngineOptions& options) {
  if (sum(weights) != Rational(1)) {
    throw InvalidInput("index map needs weights summing to 1, got " + sum(weights).to_string());
  }
  const VotingSystem system =
      VotingSystem::strict_majority(std::vector<Rational>(weights.begin(), weights.end()));
  const Engine engine =
      dp_feasible(system, kind, options) ? Engine::DynamicProgramming : Engine::Enumeration;
  // Weights summing to 1 always beat 1/2, so DegenerateSystem cannot surface.
  return compute_index(system, kind, engine, options).values;
}

const char* to_string(IterationOutcome::Type type) noexcept {
  switch (type) {
    case IterationOutcome::Type::FixedPoint: return "fixed";
    case IterationOutcome::Type::Cycle: return "cycle";
    case IterationOutcome::Type::MaxIterationsReached: return "max_iters";
  }
  return "max_iters";
}

IterationTrace iterate(std::vector<Rational> weights, IndexKind kind, std::size_t max_iters,
                       const EngineOptions& options) {
  if (max_iters == 0) throw InvalidInput("max_iters must be at least 1");
  if (sum(weights) != Rational(1)) {
    throw InvalidInput("iteration needs weights summing to 1, got " + sum(weights).to_string());
  }
  IterationTrace trace;
  trace.kind = kind;
  std::unordered_map<std::vector<Rational>, std::size_t, StateHash> seen;
  seen.emplace(weights, 0);
  trace.states.push_back(std::move(weights));

  for (std::size_t step = 0; step < max_iters; ++step) {
    const auto& current = trace.states.back();
    auto next = apply_index_map(current, kind, options);
    if (next == current) {
      trace.outcome = {IterationOutcome::Type::FixedPoint, trace.states.size() - 1, 1};
      return trace;
    }
    if (auto it = seen.find(next); it != seen.end()) {
      trace.outcome = {IterationOutcome::Type::Cycle, it->second,
                       trace.states.size() - it->second};
      return trace;
    }
    seen.emplace(next, trace.states.size());
    trace.states.push_back(std::move(next));
  }
  trace.outcome = {IterationOutcome::Type::MaxIterationsReached, 0, 0};
  return trace;
}

std::vector<Rational> FamilySpec::weights() const {
  std::vector<Rational> out;
  out.push_back(a);
  if (shape == FamilyShape::AAB) out.push_back(a);
  out.insert(out.end(), m, b);
  return out;
}

HalfReciprocal half_reciprocal(const Rational& b) {
  const Rational x = (Rational(2) * b).reciprocal();
  return {x.floor(), x.is_integer()};
}

Rational ab_ss_power_of_A(std::size_t m, const Rational& b) {
  require_family_range(m, b);
  const Rational mm(static_cast<std::int64_t>(m));
  const HalfReciprocal x = half_reciprocal(b);
  if (x.integral) return (Rational(1) - mm * b) / (b * (mm + 1));
  return (Rational(2) * Rational(x.floor) - mm + 1) / (mm + 1);
}

namespace {

FamilySpec make_ab_point(long k, long offset, bool odd_m) {
  if (k < 2 || offset < 1 || offset >= k) {
    throw InvalidFamily("need k >= 2 and 1 <= C < k, got k = " + std::to_string(k) +
                        ", C = " + std::to_string(offset));
  }
  FamilySpec spec;
  spec.shape = FamilyShape::AB;
  spec.k = k;
  spec.offset = offset;
  spec.m = static_cast<std::size_t>(odd_m ? 2 * k - 1 : 2 * k);
  const long den = odd_m ? 2 * k * k - k : 2 * k * k + k;
  spec.b = Rational(k - offset, den);
  spec.a = Rational(1) - Rational(static_cast<std::int64_t>(spec.m)) * spec.b;
  const HalfReciprocal x = half_reciprocal(spec.b);
  const long expected = odd_m ? k + offset - 1 : k + offset;
  if (x.integral) {
    spec.reason = "1/(2b) integer";
  } else if (x.floor != expected) {
    spec.reason = "floor(1/(2b)) = " + x.floor.get_str() + ", expected " + std::to_string(expected);
  } else {
    spec.valid = true;
  }
  return spec;
}

}  // namespace

FamilySpec ab_odd_family_point(long k, long offset) { return make_ab_point(k, offset, true); }
FamilySpec ab_even_family_point(long k, long offset) { return make_ab_point(k, offset, false); }

std::vector<AbSolution> ab_fixed_solutions(std::size_t m) {
  if (m == 0) throw InvalidFamily("need at least one type-B player");
  const Rational mm(static_cast<std::int64_t>(m));
  const Rational uniform = (mm + 1).reciprocal();
  std::vector<AbSolution> out;
  // Non-integral branch: (2F - m + 1)/(m + 1) = 1 - m b. F >= m forces b <= 0.
  for (std::size_t F = 0; F < m; ++F) {
    const Rational power = (Rational(2 * static_cast<std::int64_t>(F)) - mm + 1) / (mm + 1);
    const Rational b = (Rational(1) - power) / mm;
    if (b.sign() <= 0 || mm * b >= 1) continue;
    const HalfReciprocal x = half_reciprocal(b);
    if (x.integral || x.floor != static_cast<unsigned long>(F)) continue;
    out.push_back({b, b == uniform});
  }
  // Integral branch: (1 - m b)/(b(m + 1)) = 1 - m b only at b = 1/(m + 1).
  if (half_reciprocal(uniform).integral) out.push_back({uniform, true});
  std::sort(out.begin(), out.end(), [](const AbSolution& l, const AbSolution& r) { return l.b < r.b; });
  return out;
}

Rational aab_ss_power_of_A(std::size_t m, const Rational& b, AabDenominator denominator) {
  require_family_range(m, b);
  const HalfReciprocal x = half_reciprocal(b);
  if (x.integral) {
    throw IntegerBoundary("1/(2b) = " + x.floor.get_str() +
                          " is an integer; the closed form assumes otherwise");
  }
  return aab_power_at_floor(m, x.floor, denominator);
}

std::vector<AabSolution> aab_fixed_solutions(std::size_t m, const EngineOptions& options) {
  if (m < 2) throw InvalidFamily("need m >= 2, got " + std::to_string(m));
  const Rational mm(static_cast<std::int64_t>(m));
  std::vector<AabSolution> out;
  // The power is a quadratic in F that turns negative past F = 3m/2 + 2, and
  // a negative power would need m b > 1.
  for (std::size_t F = 0; F <= 2 * m + 4; ++F) {
    const Rational power = aab_power_at_floor(m, BigInt(static_cast<unsigned long>(F)),
                                              AabDenominator::Corrected);
    // power = (1 - m b)/2  =>  b = (1 - 2 power)/m
    const Rational b = (Rational(1) - Rational(2) * power) / mm;
    if (b.sign() <= 0 || mm * b >= 1) continue;
    const HalfReciprocal x = half_reciprocal(b);
    if (x.integral || x.floor != static_cast<unsigned long>(F)) continue;
    const Rational a = (Rational(1) - mm * b) / 2;
    if (a == b) continue;  // uniform, trivial
    AabSolution s{b, std::nullopt};
    if (m + 2 <= 12) {
      FamilySpec spec{FamilyShape::AAB, m, 0, 0, a, b, true, {}};
      const auto w = spec.weights();
      s.engine_certified = apply_index_map(w, IndexKind::ShapleyShubik, options) == w;
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const AabSolution& l, const AabSolution& r) { return l.b < r.b; });
  return out;
}

std::vector<Rational> aab_verified_classes(long k, Parity parity) {
  if (k < 1) throw InvalidFamily("need k >= 1, got " + std::to_string(k));
  const Rational kk = from_long(k);
  std::vector<Rational> out;
  if (parity == Parity::Even) {
    out.push_back((Rational(2) * kk + 1).reciprocal());
    out.push_back(kk / ((kk + 1) * (Rational(2) * kk + 1)));
  } else {
    out.push_back((kk + 1) / (Rational(4) * (kk + 1) * (kk + 1) - 1));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BanzhafPair ab_banzhaf_index(std::size_t m, const Rational& b) {
  require_family_range(m, b);
  const long mm = static_cast<long>(m);
  const Rational x = (Rational(2) * b).reciprocal();  // 1/(2b)
  // Without A, a coalition of q B's wins iff q b > 1/2, i.e. q > x; with A it
  // wins iff a + q b > 1/2, i.e. q > m - x.
  const long most_losing = x.floor().get_si();                                 // largest q with q b <= 1/2
  const long fewest_with_a = (Rational(static_cast<std::int64_t>(m)) - x).floor().get_si() + 1;
  const BigInt a_swings = binomial_range_sum(mm, fewest_with_a, most_losing);
  const BigInt b_swings = binomial(mm - 1, most_losing) + binomial(mm - 1, fewest_with_a - 1);
  const BigInt total = BigInt(mm) * b_swings + a_swings;
  return {Rational(a_swings, total), Rational(b_swings, total)};
}

FamilyBanzhafCheck family_banzhaf_check(long k, long offset, FamilyKind which,
                                        std::size_t max_engine_players,
                                        const EngineOptions& options) {
  FamilyBanzhafCheck out;
  out.point = which == FamilyKind::OddM ? ab_odd_family_point(k, offset) : ab_even_family_point(k, offset);
  const long c = offset;
  BigInt b_swings, a_swings, total;
  if (which == FamilyKind::OddM) {
    b_swings = binomial(2 * k - 2, k + c - 1) + binomial(2 * k - 2, k - c - 1);
    a_swings = binomial_range_sum(2 * k - 1, k - c, k + c - 1);
    total = BigInt(2 * k - 1) * b_swings + a_swings;
  } else {
    b_swings = binomial(2 * k - 1, k + c) + binomial(2 * k - 1, k - c);
    a_swings = binomial_range_sum(2 * k, k - c + 1, k + c);
    total = BigInt(2 * k) * b_swings + a_swings;
  }
  out.closed_form_b_index = Rational(b_swings, total);
  out.holds = out.closed_form_b_index == out.point.b;
  if (out.point.m + 1 <= max_engine_players) {
    const auto index = apply_index_map(out.point.weights(), IndexKind::Banzhaf, options);
    out.engine_b_index = index[1];
    out.engine_holds = index[1] == out.point.b;
  }
  return out;
}

}  // namespace powerindex
