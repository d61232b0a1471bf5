#pragma once

#include <json.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "powerindex/core.hpp"
#include "powerindex/divisor.hpp"
#include "powerindex/fixedpoint.hpp"
#include "powerindex/indices.hpp"

namespace powerindex {

enum class OutputFormat { Table, Json, Csv };

OutputFormat parse_output_format(std::string_view text);

nlohmann::json rationals_to_json(std::span<const Rational> values);
std::vector<Rational> rationals_from_json(const nlohmann::json& array);
nlohmann::json bigints_to_json(std::span<const BigInt> values);

nlohmann::json to_json(const VotingSystem& system);
/// Accepts the object produced by to_json(VotingSystem). Throws InvalidInput.
VotingSystem system_from_json(const nlohmann::json& object);

nlohmann::json to_json(const IterationTrace& trace);
nlohmann::json to_json(const DivisorSystem& ds);
nlohmann::json to_json(const CasePrediction& prediction);
nlohmann::json to_json(const DisagreementReport& report);
nlohmann::json to_json(const FamilySpec& spec);

/// "1/3, 2/15 x5" style compaction of repeated values, for tables.
std::string compact_list(std::span<const Rational> values);
std::string join(std::span<const Rational> values, std::string_view separator);

}  // namespace powerindex
