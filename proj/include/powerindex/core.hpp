#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "powerindex/errors.hpp"
#include "powerindex/rational.hpp"

namespace powerindex {

/// How a coalition's weight is compared against the quota.
enum class QuotaMode {
  MeetsOrExceeds,   // weight >= quota
  StrictlyExceeds,  // weight > quota
};

std::string_view to_string(QuotaMode mode) noexcept;
/// Accepts "ge" / "gt" (and the long names). Throws InvalidInput otherwise.
QuotaMode parse_quota_mode(std::string_view text);

enum class IndexKind { Banzhaf, ShapleyShubik };

std::string_view to_string(IndexKind kind) noexcept;
IndexKind parse_index_kind(std::string_view text);

/// A weighted voting game [quota; w_0, ..., w_{n-1}]. Player i is position i.
class VotingSystem {
 public:
  /// Throws InvalidInput unless quota > 0, every weight >= 0 and n >= 1.
  VotingSystem(Rational quota, QuotaMode mode, std::vector<Rational> weights);

  /// [1/2 strict; weights]
  static VotingSystem strict_majority(std::vector<Rational> weights);

  const Rational& quota() const noexcept { return quota_; }
  QuotaMode mode() const noexcept { return mode_; }
  std::span<const Rational> weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return weights_.size(); }

  bool wins_with(const Rational& weight) const;
  Rational total_weight() const;

  friend bool operator==(const VotingSystem&, const VotingSystem&) = default;

 private:
  Rational quota_;
  QuotaMode mode_;
  std::vector<Rational> weights_;
};

/// A set of player positions. Membership is kept sorted and unique.
class Coalition {
 public:
  Coalition() = default;
  Coalition(std::initializer_list<std::size_t> members);
  explicit Coalition(std::vector<std::size_t> members);

  static Coalition from_mask(std::uint64_t mask);

  std::span<const std::size_t> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(std::size_t player) const;

  friend bool operator==(const Coalition&, const Coalition&) = default;

 private:
  std::vector<std::size_t> members_;
};

struct IndexVector {
  IndexKind kind = IndexKind::Banzhaf;
  std::vector<Rational> values;

  std::size_t size() const noexcept { return values.size(); }
  const Rational& operator[](std::size_t i) const { return values[i]; }

  friend bool operator==(const IndexVector&, const IndexVector&) = default;
};

/// Integer form of a system: W_i = 2 L w_i, Q2 = 2 L quota with L chosen so
/// that every value is integral. Winning-equivalent to the source system.
struct ScaledSystem {
  std::vector<BigInt> weights;
  BigInt quota2;
  QuotaMode mode = QuotaMode::MeetsOrExceeds;

  bool wins_with(const BigInt& weight) const {
    return mode == QuotaMode::MeetsOrExceeds ? weight >= quota2 : weight > quota2;
  }
  BigInt total_weight() const;
};

/// Throws InvalidCoalition when a member is not a player of the system.
Rational coalition_weight(const VotingSystem& system, const Coalition& coalition);
bool is_winning(const VotingSystem& system, const Coalition& coalition);

ScaledSystem scale_to_integers(const VotingSystem& system);

/// Divides by the total. Throws DegenerateSystem on an all-zero vector and
/// InvalidInput on a negative entry.
std::vector<Rational> normalize(std::span<const Rational> weights);

Rational sum(std::span<const Rational> values);

/// Comma separated list of rationals, e.g. "1/2,1/4,1/4".
std::vector<Rational> parse_rational_list(std::string_view text);

}  // namespace powerindex
