#include "powerindex/render.hpp"

namespace powerindex {

using nlohmann::json;

OutputFormat parse_output_format(std::string_view text) {
  if (text == "table") return OutputFormat::Table;
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  throw InvalidInput("unknown format '" + std::string(text) + "' (expected table|json|csv)");
}

json rationals_to_json(std::span<const Rational> values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

std::vector<Rational> rationals_from_json(const json& array) {
  if (!array.is_array()) throw InvalidInput("expected a JSON array of rationals");
  std::vector<Rational> out;
  for (const auto& item : array) {
    if (item.is_string()) {
      out.push_back(Rational::parse(item.get<std::string>()));
    } else if (item.is_number_integer()) {
      out.emplace_back(item.get<std::int64_t>());
    } else {
      throw InvalidInput("rationals must be \"p/q\" strings or integers");
    }
  }
  return out;
}

json bigints_to_json(std::span<const BigInt> values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(v.get_str());
  return out;
}

json to_json(const VotingSystem& system) {
  return {{"quota", system.quota().to_string()},
          {"mode", std::string(to_string(system.mode()))},
          {"weights", rationals_to_json(system.weights())}};
}

VotingSystem system_from_json(const json& object) {
  try {
    const json& s = object.contains("system") ? object.at("system") : object;
    const json& quota = s.at("quota");
    Rational q = quota.is_string() ? Rational::parse(quota.get<std::string>())
                                   : Rational(quota.get<std::int64_t>());
    QuotaMode mode = parse_quota_mode(s.value("mode", std::string("ge")));
    return VotingSystem(std::move(q), mode, rationals_from_json(s.at("weights")));
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed system JSON: ") + e.what());
  }
}

json to_json(const IterationTrace& trace) {
  json states = json::array();
  for (const auto& s : trace.states) states.push_back(rationals_to_json(s));
  json outcome = {{"type", to_string(trace.outcome.type)}};
  switch (trace.outcome.type) {
    case IterationOutcome::Type::FixedPoint:
      outcome["index"] = trace.outcome.entry;
      outcome["state"] = rationals_to_json(trace.states[trace.outcome.entry]);
      break;
    case IterationOutcome::Type::Cycle:
      outcome["entry"] = trace.outcome.entry;
      outcome["length"] = trace.outcome.length;
      break;
    case IterationOutcome::Type::MaxIterationsReached:
      outcome["iterations"] = trace.states.size() - 1;
      break;
  }
  return {{"kind", std::string(to_string(trace.kind))}, {"states", states}, {"outcome", outcome}};
}

json to_json(const DivisorSystem& ds) {
  return {{"n", ds.n},
          {"divisors", ds.divisors},
          {"d", ds.divisor_count()},
          {"sigma", ds.sigma},
          {"k", ds.abundance_excess},
          {"system", to_json(ds.system)}};
}

json to_json(const CasePrediction& p) {
  json out = {{"k", p.case_k}, {"parity", to_string(p.parity)}, {"d", p.d}};
  auto put = [&](const char* key, const std::optional<Rational>& v) {
    if (v) out[key] = v->to_string();
  };
  put("banzhaf_n", p.banzhaf_n);
  put("ss_n", p.ss_n);
  put("banzhaf_1", p.banzhaf_one);
  put("ss_1", p.ss_one);
  put("banzhaf_d_i", p.banzhaf_other);
  put("ss_d_i", p.ss_other);
  return out;
}

json to_json(const DisagreementReport& r) {
  json checks = json::array();
  for (const auto& c : r.formula_checks) {
    checks.push_back({{"class", c.index_class},
                      {"divisor", c.divisor},
                      {"predicted", c.predicted.to_string()},
                      {"computed", c.computed.to_string()},
                      {"matches", c.matches}});
  }
  return {{"n", r.n},
          {"k", r.k},
          {"banzhaf", rationals_to_json(r.banzhaf.values)},
          {"ss", rationals_to_json(r.ss.values)},
          {"witness_positions", r.witness_positions},
          {"witness_divisors", r.witness_divisors},
          {"formula_match", r.formula_match()},
          {"formula_checks", checks},
          {"notes", r.notes}};
}

json to_json(const FamilySpec& spec) {
  return {{"shape", spec.shape == FamilyShape::AB ? "ab" : "aab"},
          {"m", spec.m},
          {"k", spec.k},
          {"C", spec.offset},
          {"a", spec.a.to_string()},
          {"b", spec.b.to_string()},
          {"valid", spec.valid},
          {"reason", spec.reason},
          {"weights", rationals_to_json(spec.weights())}};
}

std::string join(std::span<const Rational> values, std::string_view separator) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += separator;
    out += values[i].to_string();
  }
  return out;
}

std::string compact_list(std::span<const Rational> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size();) {
    std::size_t j = i;
    while (j < values.size() && values[j] == values[i]) ++j;
    if (!out.empty()) out += ", ";
    out += values[i].to_string();
    if (j - i > 1) out += " x" + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace powerindex
