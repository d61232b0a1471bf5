#include "powerindex/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "powerindex/divisor.hpp"
#include "powerindex/fixedpoint.hpp"
#include "powerindex/indices.hpp"
#include "powerindex/render.hpp"
#include "powerindex/verify.hpp"

namespace powerindex {
namespace {

using nlohmann::json;
using Rows = std::vector<std::vector<std::string>>;

struct Globals {
  std::string format = "table";
  std::string engine = "auto";
  std::size_t max_players = EngineOptions{}.max_players;
  std::size_t workers = 1;

  OutputFormat output() const { return parse_output_format(format); }
  Engine engine_kind() const { return parse_engine(engine); }
  EngineOptions options() const {
    EngineOptions o;
    o.max_players = max_players;
    o.workers = std::max<std::size_t>(1, workers);
    return o;
  }
};

void print_table(std::ostream& out, const Rows& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    out << line << '\n';
  }
}

void print_csv(std::ostream& out, const Rows& rows) {
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << '\n';
  }
}

std::uint64_t parse_count(const std::string& text, const char* what) {
  std::uint64_t value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw InvalidInput(std::string(what) + " must be a non-negative integer, got '" + text + "'");
  }
  return value;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

std::string system_text(const VotingSystem& s) {
  return "[" + s.quota().to_string() + (s.mode() == QuotaMode::MeetsOrExceeds ? " ge; " : " gt; ") +
         compact_list(s.weights()) + "]";
}

// ---------------------------------------------------------------------------
// index

struct IndexArgs {
  std::string weights, quota, mode = "ge", kind = "both", from_json;
  bool normalize = false;
};

int cmd_index(const Globals& g, const IndexArgs& a, std::ostream& out) {
  std::optional<VotingSystem> system;
  if (!a.from_json.empty()) {
    system = system_from_json(read_json_file(a.from_json));
  } else {
    if (a.weights.empty() || a.quota.empty()) throw InvalidInput("index needs --weights and --quota");
    auto weights = parse_rational_list(a.weights);
    if (a.normalize) weights = normalize(weights);
    system.emplace(Rational::parse(a.quota), parse_quota_mode(a.mode), std::move(weights));
  }
  std::vector<IndexKind> kinds;
  if (a.kind == "both") {
    kinds = {IndexKind::Banzhaf, IndexKind::ShapleyShubik};
  } else {
    kinds = {parse_index_kind(a.kind)};
  }
  const EngineOptions options = g.options();
  std::vector<IndexVector> results;
  std::vector<Engine> used;
  for (IndexKind kind : kinds) {
    used.push_back(choose_engine(*system, kind, g.engine_kind(), options));
    results.push_back(compute_index(*system, kind, used.back(), options));
  }

  switch (g.output()) {
    case OutputFormat::Json: {
      json doc = {{"system", to_json(*system)}};
      for (std::size_t i = 0; i < results.size(); ++i) {
        const std::string key(to_string(results[i].kind));
        doc[key] = rationals_to_json(results[i].values);
        doc["engine"][key] = std::string(to_string(used[i]));
      }
      out << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv:
    case OutputFormat::Table: {
      Rows rows{{"player", "weight"}};
      for (const auto& r : results) rows[0].emplace_back(to_string(r.kind));
      for (std::size_t i = 0; i < system->size(); ++i) {
        rows.push_back({std::to_string(i), system->weights()[i].to_string()});
        for (const auto& r : results) rows.back().push_back(r[i].to_string());
      }
      if (g.output() == OutputFormat::Csv) {
        print_csv(out, rows);
      } else {
        out << "system " << system_text(*system) << '\n';
        for (std::size_t i = 0; i < results.size(); ++i) {
          out << to_string(results[i].kind) << " engine: " << to_string(used[i]) << '\n';
        }
        print_table(out, rows);
      }
      break;
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// divisor

struct DivisorArgs {
  std::string n;
  bool formulas = false, disagreement = false;
};

int cmd_divisor(const Globals& g, const DivisorArgs& a, std::ostream& out) {
  const std::uint64_t n = parse_count(a.n, "n");
  const DivisorSystem ds = divisor_system(n);
  const EngineOptions options = g.options();
  const IndexVector bz = banzhaf(ds.system, g.engine_kind(), options);
  const IndexVector ss = shapley_shubik(ds.system, g.engine_kind(), options);

  std::optional<CasePrediction> prediction;
  std::string prediction_note;
  std::optional<DisagreementReport> report;
  if (a.formulas || a.disagreement) report = check_index_disagreement(n, options);
  if (a.formulas) {
    try {
      prediction = case_formula_indices(ds);
    } catch (const UnsupportedCase& e) {
      prediction_note = e.what();
    }
  }

  if (g.output() == OutputFormat::Json) {
    json doc = to_json(ds);
    doc["banzhaf"] = rationals_to_json(bz.values);
    doc["ss"] = rationals_to_json(ss.values);
    if (a.formulas) {
      doc["prediction"] = prediction ? to_json(*prediction) : json(prediction_note);
      json checks = to_json(*report)["formula_checks"];
      doc["formula_checks"] = checks;
    }
    if (a.disagreement) doc["disagreement"] = to_json(*report);
    out << doc.dump(2) << '\n';
    return kExitOk;
  }

  Rows rows{{"divisor", "banzhaf", "ss"}};
  for (std::size_t i = 0; i < ds.divisor_count(); ++i) {
    rows.push_back({std::to_string(ds.divisors[i]), bz[i].to_string(), ss[i].to_string()});
  }
  if (g.output() == OutputFormat::Csv) {
    print_csv(out, rows);
    return kExitOk;
  }
  out << "n " << ds.n << ", d " << ds.divisor_count() << ", sigma " << ds.sigma << ", k "
      << ds.abundance_excess << '\n';
  out << "system " << system_text(ds.system) << '\n';
  print_table(out, rows);
  if (a.formulas) {
    if (!prediction) {
      out << "formulas: " << prediction_note << '\n';
    } else {
      out << "formulas (k=" << prediction->case_k;
      if (prediction->parity != ParityBranch::NotApplicable) out << ", d " << to_string(prediction->parity);
      out << "):\n";
      for (const auto& c : report->formula_checks) {
        out << "  " << c.index_class << " = " << c.predicted << " predicted, engine " << c.computed
            << " at divisor " << c.divisor << (c.matches ? "  agree" : "  disagree") << '\n';
      }
    }
  }
  if (a.disagreement) {
    if (report->disagrees()) {
      out << "indices differ at divisor";
      for (auto d : report->witness_divisors) out << ' ' << d;
      out << '\n';
    } else {
      out << "indices identical\n";
    }
    for (const auto& note : report->notes) out << "note: " << note << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// scan

struct ScanArgs {
  std::uint64_t limit = 0;
  std::optional<std::size_t> divisor_count;
  std::optional<std::int64_t> max_excess;
  bool report = false, quasiperfect = false;
};

int cmd_scan(const Globals& g, const ScanArgs& a, std::ostream& out) {
  const OutputFormat fmt = g.output();
  if (a.quasiperfect) {
    const auto found = find_quasiperfect(a.limit);
    if (fmt == OutputFormat::Json) {
      out << json{{"limit", a.limit}, {"quasiperfect", found}}.dump(2) << '\n';
    } else {
      out << (fmt == OutputFormat::Csv ? "n\n" : "");
      for (auto n : found) out << n << '\n';
      if (found.empty() && fmt == OutputFormat::Table) {
        out << "no n <= " << a.limit << " with sigma(n) = 2n + 1\n";
      }
    }
    return kExitOk;
  }

  if (a.report) {
    if (a.limit < 2) throw InvalidInput("scan limit must be at least 2");
    const std::int64_t top = a.max_excess.value_or(5);
    json docs = json::array();
    if (fmt != OutputFormat::Json) out << scan_csv_header() << '\n';
    for (std::uint64_t n = 2; n <= a.limit; ++n) {
      const std::int64_t k = abundance_class(n);
      if (k < 0 || k > top) continue;
      const DivisorSystem ds = divisor_system(n);
      if (a.divisor_count && ds.divisor_count() != *a.divisor_count) continue;
      const auto report = check_index_disagreement(n, g.options());
      if (fmt == OutputFormat::Json) {
        docs.push_back(to_json(report));
      } else {
        out << scan_csv_row(report, ds) << '\n';
      }
    }
    if (fmt == OutputFormat::Json) out << docs.dump(2) << '\n';
    return kExitOk;
  }

  auto entries = scan_abundant(a.limit, a.divisor_count);
  if (a.max_excess) {
    std::erase_if(entries, [&](const AbundantEntry& e) { return e.k > *a.max_excess; });
  }
  if (fmt == OutputFormat::Json) {
    json docs = json::array();
    for (const auto& e : entries) docs.push_back({{"n", e.n}, {"d", e.d}, {"k", e.k}});
    out << docs.dump(2) << '\n';
    return kExitOk;
  }
  Rows rows{{"n", "d", "k"}};
  for (const auto& e : entries) {
    rows.push_back({std::to_string(e.n), std::to_string(e.d), std::to_string(e.k)});
  }
  fmt == OutputFormat::Csv ? print_csv(out, rows) : print_table(out, rows);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// fixedpoint

struct FixedPointArgs {
  std::string weights, kind = "ss", from_json;
  std::size_t max_iters = 100;
  bool normalize = false;
};

int cmd_fixedpoint(const Globals& g, const FixedPointArgs& a, std::ostream& out) {
  std::vector<Rational> weights;
  IndexKind kind = parse_index_kind(a.kind);
  if (!a.from_json.empty()) {
    const json doc = read_json_file(a.from_json);
    try {
      weights = rationals_from_json(doc.at("states").at(0));
      if (doc.contains("kind")) kind = parse_index_kind(doc.at("kind").get<std::string>());
    } catch (const json::exception& e) {
      throw InvalidInput(std::string("malformed trace JSON: ") + e.what());
    }
  } else {
    if (a.weights.empty()) throw InvalidInput("fixedpoint needs --weights");
    weights = parse_rational_list(a.weights);
    if (std::all_of(weights.begin(), weights.end(), [](const Rational& w) { return w.is_zero(); })) {
      throw InvalidInput("all weights are zero");
    }
    if (a.normalize) weights = normalize(weights);
  }
  const IterationTrace trace = iterate(std::move(weights), kind, a.max_iters, g.options());

  switch (g.output()) {
    case OutputFormat::Json:
      out << to_json(trace).dump(2) << '\n';
      break;
    case OutputFormat::Csv: {
      out << "step";
      for (std::size_t i = 0; i < trace.states.front().size(); ++i) out << ",w" << i;
      out << '\n';
      for (std::size_t s = 0; s < trace.states.size(); ++s) {
        out << s << ',' << join(trace.states[s], ",") << '\n';
      }
      break;
    }
    case OutputFormat::Table: {
      for (std::size_t s = 0; s < trace.states.size(); ++s) {
        out << s << ": (" << join(trace.states[s], ", ") << ")\n";
      }
      const auto& o = trace.outcome;
      switch (o.type) {
        case IterationOutcome::Type::FixedPoint:
          out << "fixed point at state " << o.entry << '\n';
          break;
        case IterationOutcome::Type::Cycle:
          out << "cycle of length " << o.length << " entered at state " << o.entry << '\n';
          break;
        case IterationOutcome::Type::MaxIterationsReached:
          out << "no recurrence within " << a.max_iters << " iterations\n";
          break;
      }
      break;
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// family

struct FamilyArgs {
  std::string shape;
  std::optional<long> k, offset;
  std::optional<std::size_t> m;
  std::string b, parity = "odd", denominator = "corrected";
  bool solve = false, banzhaf_check = false;
};

const char* yes_no(bool v) { return v ? "yes" : "no"; }

int family_ab_point(const Globals& g, const FamilyArgs& a, std::ostream& out) {
  const bool odd = a.parity == "odd";
  if (!odd && a.parity != "even") throw InvalidInput("--parity must be odd or even");
  const FamilySpec spec = odd ? ab_odd_family_point(*a.k, *a.offset)
                              : ab_even_family_point(*a.k, *a.offset);
  json doc = to_json(spec);
  const auto weights = spec.weights();
  bool failed = false;
  std::optional<bool> ss_formula, ss_engine;
  if (spec.valid) {
    ss_formula = ab_ss_power_of_A(spec.m, spec.b) == spec.a;
    ss_engine = apply_index_map(weights, IndexKind::ShapleyShubik, g.options()) == weights;
    doc["ss_fixed"] = *ss_formula && *ss_engine;
  }
  std::optional<FamilyBanzhafCheck> bc;
  if (a.banzhaf_check) {
    bc = family_banzhaf_check(*a.k, *a.offset, odd ? FamilyKind::OddM : FamilyKind::EvenM,
                              g.max_players, g.options());
    const bool fixed = bc->holds && bc->engine_holds.value_or(true);
    doc["banzhaf_fixed"] = fixed;
    doc["banzhaf_b_index"] = bc->closed_form_b_index.to_string();
    if (bc->engine_b_index) doc["engine_banzhaf_b_index"] = bc->engine_b_index->to_string();
    failed = !fixed;
  }

  if (g.output() == OutputFormat::Json) {
    out << doc.dump(2) << '\n';
  } else if (g.output() == OutputFormat::Csv) {
    out << "k,C,m,a,b,valid,ss_fixed,banzhaf_fixed\n"
        << spec.k << ',' << spec.offset << ',' << spec.m << ',' << spec.a << ',' << spec.b << ','
        << yes_no(spec.valid) << ','
        << (ss_formula ? yes_no(*ss_formula && *ss_engine) : "") << ','
        << (bc ? yes_no(bc->holds && bc->engine_holds.value_or(true)) : "") << '\n';
  } else {
    out << "point (" << compact_list(weights) << "), m " << spec.m << '\n';
    if (!spec.valid) out << "invalid: " << spec.reason << '\n';
    if (ss_formula) out << "ss-fixed: " << yes_no(*ss_formula && *ss_engine) << '\n';
    if (bc) {
      out << "banzhaf-fixed: " << yes_no(bc->holds && bc->engine_holds.value_or(true))
          << " (type-B index " << bc->closed_form_b_index;
      if (bc->engine_b_index) out << ", engine " << *bc->engine_b_index;
      out << ")\n";
    }
  }
  return failed ? kExitCheckFailed : kExitOk;
}

void print_b_list(const Globals& g, std::ostream& out, std::size_t m, const Rows& rows,
                  const json& doc) {
  if (g.output() == OutputFormat::Json) {
    out << doc.dump(2) << '\n';
  } else if (g.output() == OutputFormat::Csv) {
    print_csv(out, rows);
  } else {
    out << "m " << m << '\n';
    print_table(out, rows);
  }
}

int cmd_family(const Globals& g, const FamilyArgs& a, std::ostream& out) {
  const bool ab = a.shape == "ab";
  if (!ab && a.shape != "aab") throw InvalidInput("family shape must be ab or aab");

  if (ab && a.k && a.offset) return family_ab_point(g, a, out);

  if (a.solve) {
    if (!a.m) throw InvalidInput("--solve needs --m");
    const std::size_t m = *a.m;
    if (ab) {
      Rows rows{{"b", "a", "trivial"}};
      json list = json::array();
      for (const auto& s : ab_fixed_solutions(m)) {
        const Rational av = Rational(1) - Rational(static_cast<std::int64_t>(m)) * s.b;
        rows.push_back({s.b.to_string(), av.to_string(), yes_no(s.trivial)});
        list.push_back({{"b", s.b.to_string()}, {"a", av.to_string()}, {"trivial", s.trivial}});
      }
      print_b_list(g, out, m, rows, {{"shape", "ab"}, {"m", m}, {"solutions", list}});
      return kExitOk;
    }
    bool failed = false;
    Rows rows{{"b", "a", "certified"}};
    json list = json::array();
    for (const auto& s : aab_fixed_solutions(m, g.options())) {
      const Rational av = (Rational(1) - Rational(static_cast<std::int64_t>(m)) * s.b) / Rational(2);
      std::string cert = s.engine_certified ? yes_no(*s.engine_certified) : "skipped";
      if (s.engine_certified == false) failed = true;
      rows.push_back({s.b.to_string(), av.to_string(), cert});
      json item = {{"b", s.b.to_string()}, {"a", av.to_string()}};
      if (s.engine_certified) item["certified"] = *s.engine_certified;
      list.push_back(item);
    }
    print_b_list(g, out, m, rows, {{"shape", "aab"}, {"m", m}, {"solutions", list}});
    return failed ? kExitCheckFailed : kExitOk;
  }

  if (a.m && !a.b.empty()) {
    const std::size_t m = *a.m;
    const Rational b = Rational::parse(a.b);
    const Rational mb = Rational(static_cast<std::int64_t>(m)) * b;
    json doc = {{"shape", a.shape}, {"m", m}, {"b", b.to_string()}};
    Rows rows{{"quantity", "value"}};
    bool failed = false;
    if (ab) {
      const Rational av = Rational(1) - mb;
      const Rational power = ab_ss_power_of_A(m, b);
      const BanzhafPair bz = ab_banzhaf_index(m, b);
      doc["a"] = av.to_string();
      doc["ss_power_of_A"] = power.to_string();
      doc["banzhaf_A"] = bz.a_index.to_string();
      doc["banzhaf_B"] = bz.b_index.to_string();
      doc["ss_fixed"] = power == av;
      doc["banzhaf_fixed"] = bz.b_index == b;
      rows.push_back({"a", av.to_string()});
      rows.push_back({"ss power of A", power.to_string()});
      rows.push_back({"banzhaf A", bz.a_index.to_string()});
      rows.push_back({"banzhaf B", bz.b_index.to_string()});
      rows.push_back({"ss-fixed", yes_no(power == av)});
      rows.push_back({"banzhaf-fixed", yes_no(bz.b_index == b)});
      if (a.banzhaf_check && bz.b_index != b) failed = true;
    } else {
      AabDenominator den;
      if (a.denominator == "corrected") den = AabDenominator::Corrected;
      else if (a.denominator == "off-by-one") den = AabDenominator::OffByOne;
      else throw InvalidInput("--denominator must be corrected or off-by-one");
      const Rational av = (Rational(1) - mb) / Rational(2);
      const Rational power = aab_ss_power_of_A(m, b, den);
      doc["a"] = av.to_string();
      doc["ss_power_of_A"] = power.to_string();
      doc["ss_fixed"] = power == av;
      rows.push_back({"a", av.to_string()});
      rows.push_back({"ss power of A", power.to_string()});
      rows.push_back({"ss-fixed", yes_no(power == av)});
    }
    print_b_list(g, out, m, rows, doc);
    return failed ? kExitCheckFailed : kExitOk;
  }

  if (!ab && a.k) {
    const Parity parity = a.parity == "even" ? Parity::Even : Parity::Odd;
    if (a.parity != "even" && a.parity != "odd") throw InvalidInput("--parity must be odd or even");
    const auto classes = aab_verified_classes(*a.k, parity);
    const std::size_t m = static_cast<std::size_t>(2 * *a.k + (parity == Parity::Odd ? 1 : 0));
    Rows rows{{"b"}};
    for (const auto& b : classes) rows.push_back({b.to_string()});
    print_b_list(g, out, m, rows,
                 {{"shape", "aab"}, {"k", *a.k}, {"parity", a.parity}, {"m", m},
                  {"classes", rationals_to_json(classes)}});
    return kExitOk;
  }

  throw InvalidInput(
      "family needs --k and --C (ab point), --m with --solve or --b, or --k with --parity (aab)");
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::string suite = "all";
  std::optional<std::uint64_t> max_n, n, p, m, seed;
  std::optional<std::int64_t> max_k;
  std::optional<std::size_t> count;
};

int cmd_verify(const Globals& g, const VerifyArgs& a, std::ostream& out) {
  VerifyOptions options;
  options.engine = g.options();
  if (a.max_n) options.max_n = *a.max_n;
  if (a.max_k) options.max_k = *a.max_k;
  if (a.count) options.count = *a.count;
  if (a.seed) options.seed = *a.seed;
  options.n = a.n;
  options.p = a.p;
  options.m = a.m;
  const auto results = run_suite(a.suite, options);
  const bool ok = all_passed(results);

  switch (g.output()) {
    case OutputFormat::Json: {
      json docs = json::array();
      for (const auto& r : results) {
        docs.push_back({{"id", r.id}, {"name", r.name}, {"claim", r.claim}, {"passed", r.passed},
                        {"finding", r.finding}, {"elapsed_ms", r.elapsed_ms},
                        {"details", r.details}});
      }
      out << json{{"suite", a.suite}, {"passed", ok}, {"checks", docs}}.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv:
      out << "id,name,passed,finding,elapsed_ms\n";
      for (const auto& r : results) {
        out << r.id << ',' << r.name << ',' << yes_no(r.passed) << ',' << yes_no(r.finding) << ','
            << r.elapsed_ms << '\n';
      }
      break;
    case OutputFormat::Table:
      for (const auto& r : results) {
        out << (r.passed ? "PASS" : "FAIL") << (r.finding ? " (finding)" : "") << "  [" << r.id
            << "] " << r.name << ": " << r.claim << "  (" << r.elapsed_ms << " ms)\n";
        for (const auto& d : r.details) out << "    " << d << '\n';
      }
      out << (ok ? "all checks passed" : "some checks FAILED") << '\n';
      break;
  }
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Banzhaf and Shapley-Shubik power indices for weighted voting games",
               "powerindex"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "Output format: table|json|csv")->capture_default_str();
  app.add_option("--engine", g.engine, "Index engine: enum|dp|auto")->capture_default_str();
  app.add_option("--max-players", g.max_players, "Enumeration cap")->capture_default_str();
  app.add_option("--workers", g.workers, "Worker threads")->capture_default_str();

  IndexArgs index_args;
  auto* index = app.add_subcommand("index", "Indices of a weighted voting system");
  index->add_option("--weights", index_args.weights, "Comma-separated weights (p or p/q)");
  index->add_option("--quota", index_args.quota, "Quota (p or p/q)");
  index->add_option("--mode", index_args.mode, "ge (meets or exceeds) or gt (strictly exceeds)")
      ->capture_default_str();
  index->add_option("--kind", index_args.kind, "banzhaf|ss|both")->capture_default_str();
  index->add_flag("--normalize", index_args.normalize, "Divide weights by their total");
  index->add_option("--from-json", index_args.from_json, "Read the system from JSON output");

  DivisorArgs divisor_args;
  auto* divisor = app.add_subcommand("divisor", "Divisor voting system of n");
  divisor->add_option("n", divisor_args.n, "n >= 2")->required();
  divisor->add_flag("--formulas", divisor_args.formulas, "Compare the case formulas with the engine");
  divisor->add_flag("--prop21", divisor_args.disagreement, "Report where Banzhaf and SS differ");

  ScanArgs scan_args;
  auto* scan = app.add_subcommand("scan", "Scan for perfect and abundant numbers");
  scan->add_option("--limit", scan_args.limit, "Largest n scanned")->required();
  scan->add_option("--divisor-count", scan_args.divisor_count, "Keep only n with this many divisors");
  scan->add_option("--max-excess", scan_args.max_excess, "Keep only sigma(n) - 2n <= this");
  scan->add_flag("--report", scan_args.report, "Index disagreement report per n (CSV rows)");
  scan->add_flag("--quasiperfect", scan_args.quasiperfect, "Search for sigma(n) = 2n + 1");

  FixedPointArgs fp_args;
  auto* fixedpoint = app.add_subcommand("fixedpoint", "Iterate the index map on [1/2 strict; w]");
  fixedpoint->add_option("--weights", fp_args.weights, "Weights summing to 1");
  fixedpoint->add_option("--kind", fp_args.kind, "banzhaf|ss")->capture_default_str();
  fixedpoint->add_option("--max-iters", fp_args.max_iters, "Iteration cap")->capture_default_str();
  fixedpoint->add_flag("--normalize", fp_args.normalize, "Divide weights by their total");
  fixedpoint->add_option("--from-json", fp_args.from_json, "Restart from a trace's first state");

  FamilyArgs fam_args;
  auto* family = app.add_subcommand("family", "Two-class fixed-point families");
  family->add_option("shape", fam_args.shape, "ab or aab")->required();
  family->add_option("--k", fam_args.k, "Family parameter k");
  family->add_option("--C", fam_args.offset, "Family offset C");
  family->add_option("--m", fam_args.m, "Number of type-B players");
  family->add_option("--b", fam_args.b, "Type-B weight");
  family->add_option("--parity", fam_args.parity, "odd (m = 2k-1 for ab, 2k+1 for aab) or even")
      ->capture_default_str();
  family->add_option("--denominator", fam_args.denominator, "corrected|off-by-one (aab, odd m)")
      ->capture_default_str();
  family->add_flag("--solve", fam_args.solve, "All Shapley-Shubik fixed points for --m");
  family->add_flag("--banzhaf-check", fam_args.banzhaf_check, "Also test the Banzhaf fixed point");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  std::string suites;
  for (const auto& s : suite_names()) suites += (suites.empty() ? "" : "|") + s;
  verify->add_option("suite", verify_args.suite, suites)->capture_default_str();
  verify->add_option("--max-n", verify_args.max_n, "Sweep bound");
  verify->add_option("--max-k", verify_args.max_k, "Largest sigma(n) - 2n swept");
  verify->add_option("--n", verify_args.n, "n for the pn/mn comparison");
  verify->add_option("--p", verify_args.p, "p for the pn/mn comparison");
  verify->add_option("--m", verify_args.m, "m for the pn/mn comparison");
  verify->add_option("--count", verify_args.count, "Random systems in the engine suite");
  verify->add_option("--seed", verify_args.seed, "Seed for the engine suite");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    g.output();
    g.engine_kind();
    if (*index) return cmd_index(g, index_args, out);
    if (*divisor) return cmd_divisor(g, divisor_args, out);
    if (*scan) return cmd_scan(g, scan_args, out);
    if (*fixedpoint) return cmd_fixedpoint(g, fp_args, out);
    if (*family) return cmd_family(g, fam_args, out);
    if (*verify) return cmd_verify(g, verify_args, out);
  } catch (const DegenerateSystem& e) {
    err << "error: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace powerindex
