#include <doctest.h>

#include <algorithm>

#include "oracle.hpp"
#include "powerindex/divisor.hpp"

using namespace powerindex;

TEST_SUITE("divisor") {
  TEST_CASE("divisors, sigma and abundance") {
    CHECK(divisors_of(6) == std::vector<std::uint64_t>{6, 3, 2, 1});
    CHECK(divisors_of(20) == std::vector<std::uint64_t>{20, 10, 5, 4, 2, 1});
    CHECK(divisors_of(12) == std::vector<std::uint64_t>{12, 6, 4, 3, 2, 1});
    CHECK_THROWS_AS(divisors_of(1), InvalidInput);
    CHECK(sigma_of(6) == 12);
    CHECK(sigma_of(12) == 28);
    CHECK(sigma_of(20) == 42);
    CHECK(abundance_class(6) == 0);
    CHECK(abundance_class(20) == 2);
    CHECK(abundance_class(18) == 3);
    for (std::uint64_t n = 2; n <= 400; ++n) {
      CAPTURE(n);
      REQUIRE(divisors_of(n) == oracle::divisors_desc(n));
      REQUIRE(sigma_of(n) == oracle::sigma(n));
    }
  }

  TEST_CASE("quota rule") {
    CHECK(divisor_system(6).system.quota() == Rational(13, 2));
    CHECK(divisor_system(12).system.quota() == Rational(29, 2));
    CHECK(divisor_system(9).system.quota() == Rational(13, 2));
    const auto ds = divisor_system(28);
    CHECK(ds.system.mode() == QuotaMode::MeetsOrExceeds);
    CHECK(ds.divisor_count() == 6);
    CHECK(ds.position_of(28) == 0u);
    CHECK(ds.position_of(1) == 5u);
    CHECK_FALSE(ds.position_of(3).has_value());
  }

  TEST_CASE("perfect-number formulas") {
    const auto six = case_formula_indices(divisor_system(6));
    CHECK(six.case_k == 0);
    CHECK(six.banzhaf_n == Rational(7, 10));
    CHECK(six.ss_n == Rational(3, 4));
    CHECK(six.banzhaf_other == Rational(1, 10));
    CHECK(six.ss_other == Rational(1, 12));
    const auto p28 = case_formula_indices(divisor_system(28));
    CHECK(p28.banzhaf_n == Rational(31, 36));
    CHECK(p28.ss_n == Rational(5, 6));
    const auto p496 = case_formula_indices(divisor_system(496));
    CHECK(p496.banzhaf_n == Rational(511, 520));
    CHECK(p496.ss_n == Rational(9, 10));
  }

  TEST_CASE("abundant case formulas") {
    const auto p20 = case_formula_indices(divisor_system(20));
    CHECK(p20.case_k == 2);
    CHECK(p20.banzhaf_one == Rational(1, 42));
    CHECK(p20.ss_one == Rational(1, 30));
    const auto p12 = case_formula_indices(divisor_system(12));
    CHECK(p12.case_k == 4);
    CHECK(p12.parity == ParityBranch::Even);
    CHECK(p12.banzhaf_one == Rational(1, 46));
    CHECK(p12.ss_one == Rational(1, 60));
    const auto p18 = case_formula_indices(divisor_system(18));
    CHECK(p18.case_k == 3);
    CHECK(p18.banzhaf_other == Rational(1, 11));
    CHECK(p18.ss_other == Rational(1, 10));
    const auto p70 = case_formula_indices(divisor_system(70));
    CHECK(p70.banzhaf_one == Rational(1, 152));
    CHECK(p70.ss_one == Rational(1, 168));
    CHECK_THROWS_AS(case_formula_indices(divisor_system(24)), UnsupportedCase);  // k = 12
    CHECK_THROWS_AS(case_formula_indices(divisor_system(9)), UnsupportedCase);   // deficient
  }

  TEST_CASE("formula checks match the oracle for perfect numbers") {
    for (std::uint64_t n : {6, 28, 496}) {
      const auto report = check_index_disagreement(n);
      CHECK(report.formula_match() == "Y");
      const auto g = oracle::game(divisor_system(n).system);
      if (n <= 28) {
        CHECK(report.banzhaf.values == oracle::banzhaf(g));
        CHECK(report.ss.values == oracle::shapley_shubik(g));
      }
    }
  }

  TEST_CASE("index disagreement witnesses") {
    const auto six = check_index_disagreement(6);
    REQUIRE(six.disagrees());
    CHECK(six.witness_divisors.front() == 6);
    CHECK(check_index_disagreement(28).disagrees());
    CHECK(check_index_disagreement(12).disagrees());
    CHECK(check_index_disagreement(24).formula_match() == "NA");
  }

  TEST_CASE("abundant scan") {
    const auto six = scan_abundant(100, 6);
    std::vector<std::uint64_t> ns;
    for (const auto& e : six) ns.push_back(e.n);
    for (std::uint64_t n : {12, 18, 20}) CHECK(std::count(ns.begin(), ns.end(), n) == 1);
    CHECK(scan_abundant(11).empty());
    std::vector<std::uint64_t> upto30;
    for (const auto& e : scan_abundant(30)) upto30.push_back(e.n);
    CHECK(upto30 == std::vector<std::uint64_t>{12, 18, 20, 24, 30});
    for (const auto& e : scan_abundant(2000)) {
      REQUIRE(oracle::sigma(e.n) > 2 * e.n);
      REQUIRE(e.d == oracle::divisors_desc(e.n).size());
      REQUIRE(e.k == static_cast<std::int64_t>(oracle::sigma(e.n)) - static_cast<std::int64_t>(2 * e.n));
    }
    CHECK_THROWS_AS(scan_abundant(1), InvalidInput);
    CHECK(find_quasiperfect(100000).empty());
  }

  TEST_CASE("primes") {
    std::vector<std::uint64_t> primes;
    for (std::uint64_t n = 0; n < 50; ++n) {
      if (is_prime(n)) primes.push_back(n);
    }
    CHECK(primes == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47});
  }

  TEST_CASE("pn and mn comparison") {
    const auto r12 = compare_pn_mn(12, 31, 37);
    CHECK(r12.counts_equal);
    CHECK(r12.count_pn == oracle::count_winning(oracle::game(divisor_system(12 * 31).system)));
    CHECK(r12.indices_equal());
    CHECK(r12.proof_counts_equal);
    CHECK(compare_pn_mn(6, 31, 37).counts_equal);
    CHECK_THROWS_WITH_AS(compare_pn_mn(12, 29, 37), doctest::Contains("sigma(n) + 1"), PreconditionFailed);
    CHECK_THROWS_WITH_AS(compare_pn_mn(12, 33, 37), doctest::Contains("not prime"), PreconditionFailed);
    CHECK_THROWS_AS(compare_pn_mn(62, 31, 97), PreconditionFailed);  // 31 divides 62
  }

  TEST_CASE("scan CSV row") {
    CHECK(scan_csv_header() == "n,d,sigma,k,banzhaf_vector,ss_vector,witness_positions,formula_match");
    const auto ds = divisor_system(6);
    const auto row = scan_csv_row(check_index_disagreement(6), ds);
    CHECK(row.rfind("6,4,12,0,", 0) == 0);
    CHECK(row.find("7/10 1/10 1/10 1/10") != std::string::npos);
    CHECK(row.substr(row.size() - 2) == ",Y");
  }
}
