#include "powerindex/core.hpp"

#include <algorithm>

namespace powerindex {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::InvalidCoalition: return "InvalidCoalition";
    case ErrorKind::DegenerateSystem: return "DegenerateSystem";
    case ErrorKind::UnsupportedCase: return "UnsupportedCase";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::InvalidFamily: return "InvalidFamily";
    case ErrorKind::IntegerBoundary: return "IntegerBoundary";
  }
  return "Unknown";
}

std::string_view to_string(QuotaMode mode) noexcept {
  return mode == QuotaMode::MeetsOrExceeds ? "ge" : "gt";
}

QuotaMode parse_quota_mode(std::string_view text) {
  if (text == "ge" || text == "meets-or-exceeds") return QuotaMode::MeetsOrExceeds;
  if (text == "gt" || text == "strict" || text == "strictly-exceeds") {
    return QuotaMode::StrictlyExceeds;
  }
  throw InvalidInput("unknown quota mode '" + std::string(text) + "' (expected ge|gt)");
}

std::string_view to_string(IndexKind kind) noexcept {
  return kind == IndexKind::Banzhaf ? "banzhaf" : "ss";
}

IndexKind parse_index_kind(std::string_view text) {
  if (text == "banzhaf" || text == "bz") return IndexKind::Banzhaf;
  if (text == "ss" || text == "shapley-shubik") return IndexKind::ShapleyShubik;
  throw InvalidInput("unknown index kind '" + std::string(text) + "' (expected banzhaf|ss)");
}

VotingSystem::VotingSystem(Rational quota, QuotaMode mode, std::vector<Rational> weights)
    : quota_(std::move(quota)), mode_(mode), weights_(std::move(weights)) {
  if (weights_.empty()) throw InvalidInput("a voting system needs at least one player");
  if (quota_.sign() <= 0) throw InvalidInput("quota must be positive, got " + quota_.to_string());
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i].sign() < 0) {
      throw InvalidInput("weight of player " + std::to_string(i) + " is negative");
    }
  }
}

VotingSystem VotingSystem::strict_majority(std::vector<Rational> weights) {
  return VotingSystem(Rational(1, 2), QuotaMode::StrictlyExceeds, std::move(weights));
}

bool VotingSystem::wins_with(const Rational& weight) const {
  return mode_ == QuotaMode::MeetsOrExceeds ? weight >= quota_ : weight > quota_;
}

Rational VotingSystem::total_weight() const { return sum(weights_); }

Coalition::Coalition(std::initializer_list<std::size_t> members)
    : Coalition(std::vector<std::size_t>(members)) {}

Coalition::Coalition(std::vector<std::size_t> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

Coalition Coalition::from_mask(std::uint64_t mask) {
  std::vector<std::size_t> members;
  for (std::size_t i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1) members.push_back(i);
  }
  return Coalition(std::move(members));
}

bool Coalition::contains(std::size_t player) const {
  return std::binary_search(members_.begin(), members_.end(), player);
}

BigInt ScaledSystem::total_weight() const {
  BigInt total = 0;
  for (const auto& w : weights) total += w;
  return total;
}

Rational coalition_weight(const VotingSystem& system, const Coalition& coalition) {
  Rational total;
  for (std::size_t player : coalition.members()) {
    if (player >= system.size()) {
      throw InvalidCoalition("player " + std::to_string(player) + " out of range for a " +
                             std::to_string(system.size()) + "-player system");
    }
    total += system.weights()[player];
  }
  return total;
}

bool is_winning(const VotingSystem& system, const Coalition& coalition) {
  return system.wins_with(coalition_weight(system, coalition));
}

ScaledSystem scale_to_integers(const VotingSystem& system) {
  BigInt scale = 1;
  for (const auto& w : system.weights()) scale = lcm(scale, w.denominator());
  // The quota may still need a factor beyond the weights' common denominator.
  Rational doubled_quota = Rational(2) * Rational(scale) * system.quota();
  scale *= doubled_quota.denominator();

  ScaledSystem out;
  out.mode = system.mode();
  out.weights.reserve(system.size());
  const Rational factor = Rational(2) * Rational(scale);
  for (const auto& w : system.weights()) out.weights.push_back((factor * w).numerator());
  out.quota2 = (factor * system.quota()).numerator();
  return out;
}

std::vector<Rational> normalize(std::span<const Rational> weights) {
  for (const auto& w : weights) {
    if (w.sign() < 0) throw InvalidInput("cannot normalize negative weights");
  }
  Rational total = sum(weights);
  if (total.is_zero()) throw DegenerateSystem("cannot normalize an all-zero weight vector");
  std::vector<Rational> out;
  out.reserve(weights.size());
  for (const auto& w : weights) out.push_back(w / total);
  return out;
}

Rational sum(std::span<const Rational> values) {
  Rational total;
  for (const auto& v : values) total += v;
  return total;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos
                                                                               : comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    out.push_back(Rational::parse(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace powerindex
