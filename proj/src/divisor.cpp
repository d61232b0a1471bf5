#include "powerindex/divisor.hpp"

#include <algorithm>
#include <sstream>

namespace powerindex {

namespace {

void require_at_least_two(std::uint64_t n) {
  if (n < 2) throw InvalidInput("divisor systems need n >= 2, got " + std::to_string(n));
}

BigInt pow2(std::size_t e) { return BigInt(1) << static_cast<mp_bitcnt_t>(e); }

Rational ratio(const BigInt& num, const BigInt& den) { return Rational(num, den); }

std::string join_rationals(const IndexVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += v[i].to_string();
  }
  return out;
}

}  // namespace

std::optional<std::size_t> DivisorSystem::position_of(std::uint64_t divisor) const {
  auto it = std::find(divisors.begin(), divisors.end(), divisor);
  if (it == divisors.end()) return std::nullopt;
  return static_cast<std::size_t>(it - divisors.begin());
}

std::vector<std::uint64_t> divisors_of(std::uint64_t n) {
  require_at_least_two(n);
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t i = 1; i <= n / i; ++i) {
    if (n % i != 0) continue;
    small.push_back(i);
    if (i != n / i) large.push_back(n / i);
  }
  // large is already descending; small ascending.
  std::vector<std::uint64_t> out(large);
  out.insert(out.end(), small.rbegin(), small.rend());
  return out;
}

std::uint64_t sigma_of(std::uint64_t n) {
  std::uint64_t total = 0;
  for (auto d : divisors_of(n)) total += d;
  return total;
}

std::int64_t abundance_class(std::uint64_t n) {
  return static_cast<std::int64_t>(sigma_of(n)) - 2 * static_cast<std::int64_t>(n);
}

DivisorSystem divisor_system(std::uint64_t n) {
  auto divisors = divisors_of(n);
  std::uint64_t sigma = 0;
  for (auto d : divisors) sigma += d;
  const auto sigma_i = static_cast<std::int64_t>(sigma);
  Rational quota = sigma % 2 == 0 ? Rational(sigma_i + 1, 2) : Rational(sigma_i, 2);
  std::vector<Rational> weights;
  weights.reserve(divisors.size());
  for (auto d : divisors) weights.emplace_back(static_cast<std::int64_t>(d));
  return DivisorSystem{
      n, std::move(divisors), sigma, sigma_i - 2 * static_cast<std::int64_t>(n),
      VotingSystem(std::move(quota), QuotaMode::MeetsOrExceeds, std::move(weights))};
}

const char* to_string(ParityBranch parity) noexcept {
  switch (parity) {
    case ParityBranch::Even: return "even";
    case ParityBranch::Odd: return "odd";
    case ParityBranch::NotApplicable: return "n/a";
  }
  return "n/a";
}

CasePrediction case_formula_indices(const DivisorSystem& ds) {
  const std::int64_t k = ds.abundance_excess;
  if (k < 0 || k > 5) {
    throw UnsupportedCase("closed forms cover sigma(n) - 2n in 0..5, got " + std::to_string(k));
  }
  const std::size_t d = ds.divisor_count();
  const BigInt dd(static_cast<unsigned long>(d));
  const BigInt half = pow2(d - 1);  // 2^{d-1}
  CasePrediction p;
  p.case_k = static_cast<int>(k);
  p.d = d;
  const bool even = ds.n % 2 == 0;
  switch (k) {
    case 0: {
      const BigInt den = half + dd - 2;
      p.banzhaf_n = ratio(half - 1, den);
      p.banzhaf_other = ratio(1, den);
      p.ss_n = ratio(factorial(d) - factorial(d - 1), factorial(d));
      p.ss_other = ratio(1, dd * (dd - 1));
      // 1 is a proper divisor like any other here.
      p.banzhaf_one = p.banzhaf_other;
      p.ss_one = p.ss_other;
      break;
    }
    case 1:
      p.banzhaf_other = ratio(2, half + 2 * (dd - 2));
      p.ss_other = ratio(2, dd * (dd - 1));
      break;
    case 2:
      p.banzhaf_one = ratio(1, half + 3 * (dd - 2) - 2);
      p.ss_one = ratio(1, dd * (dd - 1));
      break;
    case 3:
      p.banzhaf_other = ratio(4, half + 4 * (dd - 2) - 4);
      p.ss_other = ratio(2, (dd - 1) * (dd - 2));
      break;
    case 4:
    case 5:
      p.parity = even ? ParityBranch::Even : ParityBranch::Odd;
      if (even) {
        p.banzhaf_one = ratio(1, half + 5 * (dd - 3) - (k == 4 ? 1 : 2));
        p.ss_one = ratio(2, dd * (dd - 1) * (dd - 2));
      } else {
        p.banzhaf_other = ratio(4, half + 4 * (dd - 2) - (k == 4 ? 3 : 6));
        p.ss_other = ratio(2, dd - 1);
      }
      break;
    default:
      break;
  }
  return p;
}

std::string DisagreementReport::formula_match() const {
  if (k < 0 || k > 5) return "NA";
  return std::all_of(formula_checks.begin(), formula_checks.end(),
                     [](const FormulaCheck& c) { return c.matches; })
             ? "Y"
             : "N";
}

DisagreementReport check_index_disagreement(std::uint64_t n, const EngineOptions& options) {
  const DivisorSystem ds = divisor_system(n);
  DisagreementReport report;
  report.n = n;
  report.k = ds.abundance_excess;
  report.banzhaf = banzhaf(ds.system, Engine::DynamicProgramming, options);
  report.ss = shapley_shubik(ds.system, Engine::DynamicProgramming, options);
  for (std::size_t i = 0; i < ds.divisor_count(); ++i) {
    if (report.banzhaf[i] != report.ss[i]) {
      report.witness_positions.push_back(i);
      report.witness_divisors.push_back(ds.divisors[i]);
    }
  }
  if (report.k < 0 || report.k > 5) return report;

  const CasePrediction pred = case_formula_indices(ds);
  auto check = [&](const char* label, const std::optional<Rational>& predicted,
                   const IndexVector& computed, std::size_t position) {
    if (!predicted) return;
    FormulaCheck c{label, *predicted, ds.divisors[position], computed[position],
                   *predicted == computed[position]};
    if (!c.matches) {
      report.notes.push_back(std::string(label) + " at divisor " + std::to_string(c.divisor) +
                             ": formula " + c.predicted.to_string() + ", engine " +
                             c.computed.to_string());
    }
    report.formula_checks.push_back(std::move(c));
  };
  const std::size_t last = ds.divisor_count() - 1;
  check("B(n)", pred.banzhaf_n, report.banzhaf, 0);
  check("SS(n)", pred.ss_n, report.ss, 0);
  check("B(1)", pred.banzhaf_one, report.banzhaf, last);
  check("SS(1)", pred.ss_one, report.ss, last);
  for (std::size_t i = 1; i < last; ++i) {
    check("B(d_i)", pred.banzhaf_other, report.banzhaf, i);
    check("SS(d_i)", pred.ss_other, report.ss, i);
  }
  return report;
}

std::vector<AbundantEntry> scan_abundant(std::uint64_t limit,
                                         std::optional<std::size_t> divisor_count) {
  if (limit < 2) throw InvalidInput("scan limit must be at least 2");
  std::vector<std::uint64_t> sigma(limit + 1, 0);
  std::vector<std::uint32_t> count(limit + 1, 0);
  for (std::uint64_t d = 1; d <= limit; ++d) {
    for (std::uint64_t multiple = d; multiple <= limit; multiple += d) {
      sigma[multiple] += d;
      ++count[multiple];
    }
  }
  std::vector<AbundantEntry> out;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    if (sigma[n] <= 2 * n) continue;
    if (divisor_count && count[n] != *divisor_count) continue;
    out.push_back({n, count[n], static_cast<std::int64_t>(sigma[n] - 2 * n)});
  }
  return out;
}

std::vector<std::uint64_t> find_quasiperfect(std::uint64_t limit) {
  if (limit < 2) return {};
  std::vector<std::uint64_t> sigma(limit + 1, 0);
  for (std::uint64_t d = 1; d <= limit; ++d) {
    for (std::uint64_t multiple = d; multiple <= limit; multiple += d) sigma[multiple] += d;
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    if (sigma[n] == 2 * n + 1) out.push_back(n);
  }
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t i = 2; i <= n / i; ++i) {
    if (n % i == 0) return false;
  }
  return true;
}

PnMnReport compare_pn_mn(std::uint64_t n, std::uint64_t p, std::uint64_t m,
                         const EngineOptions& options) {
  require_at_least_two(n);
  const std::uint64_t sigma = sigma_of(n);
  for (auto [name, q] : {std::pair{"p", p}, std::pair{"m", m}}) {
    const std::string label(name);
    if (!is_prime(q)) throw PreconditionFailed(label + " = " + std::to_string(q) + " is not prime");
    if (q <= sigma + 1) {
      throw PreconditionFailed(label + " = " + std::to_string(q) + " must exceed sigma(n) + 1 = " +
                               std::to_string(sigma + 1));
    }
    if (n % q == 0) throw PreconditionFailed(label + " divides n");
  }

  const DivisorSystem pn = divisor_system(n * p);
  const DivisorSystem mn = divisor_system(n * m);
  PnMnReport report;
  report.n = n;
  report.p = p;
  report.m = m;
  report.count_pn = count_winning(pn.system, Engine::Auto, options);
  report.count_mn = count_winning(mn.system, Engine::Auto, options);
  report.counts_equal = report.count_pn == report.count_mn;

  const auto sigma_i = static_cast<std::int64_t>(sigma);
  report.proof_quota_pn = Rational(static_cast<std::int64_t>(p) * sigma_i + sigma_i, 2) + 1;
  report.proof_quota_mn = Rational(static_cast<std::int64_t>(m) * sigma_i + sigma_i, 2) + 1;
  auto with_quota = [](const DivisorSystem& ds, const Rational& quota) {
    return VotingSystem(quota, QuotaMode::MeetsOrExceeds,
                        std::vector<Rational>(ds.system.weights().begin(),
                                              ds.system.weights().end()));
  };
  report.proof_count_pn = count_winning(with_quota(pn, report.proof_quota_pn), Engine::Auto, options);
  report.proof_count_mn = count_winning(with_quota(mn, report.proof_quota_mn), Engine::Auto, options);
  report.proof_counts_equal = report.proof_count_pn == report.proof_count_mn;

  // Align players: d <-> d for divisors of n, p d <-> m d for the rest.
  std::vector<std::size_t> mn_position(pn.divisor_count());
  for (std::size_t i = 0; i < pn.divisor_count(); ++i) {
    const std::uint64_t x = pn.divisors[i];
    const std::uint64_t image = (x % p == 0) ? (x / p) * m : x;
    auto pos = mn.position_of(image);
    if (!pos) throw PreconditionFailed("divisor " + std::to_string(x) + " has no partner");
    mn_position[i] = *pos;
  }
  auto aligned_equal = [&](const IndexVector& a, const IndexVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[mn_position[i]]) return false;
    }
    return true;
  };
  report.banzhaf_equal = aligned_equal(banzhaf(pn.system, Engine::Auto, options),
                                       banzhaf(mn.system, Engine::Auto, options));
  report.ss_equal = aligned_equal(shapley_shubik(pn.system, Engine::Auto, options),
                                  shapley_shubik(mn.system, Engine::Auto, options));
  return report;
}

std::string scan_csv_header() {
  return "n,d,sigma,k,banzhaf_vector,ss_vector,witness_positions,formula_match";
}

std::string scan_csv_row(const DisagreementReport& report, const DivisorSystem& ds) {
  std::ostringstream row;
  row << ds.n << ',' << ds.divisor_count() << ',' << ds.sigma << ',' << ds.abundance_excess << ','
      << join_rationals(report.banzhaf) << ',' << join_rationals(report.ss) << ',';
  for (std::size_t i = 0; i < report.witness_positions.size(); ++i) {
    if (i) row << ';';
    row << report.witness_positions[i];
  }
  row << ',' << report.formula_match();
  return row.str();
}

}  // namespace powerindex
