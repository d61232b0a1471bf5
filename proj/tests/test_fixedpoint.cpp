#include <doctest.h>

#include <algorithm>

#include "oracle.hpp"
#include "powerindex/fixedpoint.hpp"

using namespace powerindex;

namespace {

std::vector<Rational> R(std::initializer_list<std::pair<long, long>> values) {
  std::vector<Rational> out;
  for (auto [p, q] : values) out.emplace_back(p, q);
  return out;
}

std::vector<Rational> ab(const Rational& b, std::size_t m) {
  std::vector<Rational> w{Rational(1) - Rational(static_cast<std::int64_t>(m)) * b};
  w.insert(w.end(), m, b);
  return w;
}

std::vector<Rational> aab(const Rational& b, std::size_t m) {
  const Rational a = (Rational(1) - Rational(static_cast<std::int64_t>(m)) * b) / Rational(2);
  std::vector<Rational> w{a, a};
  w.insert(w.end(), m, b);
  return w;
}

// Shapley-Shubik power of player 0 by walking every ordering.
Rational ss_oracle_first(const std::vector<Rational>& w) {
  return oracle::shapley_shubik({w, Rational(1, 2), QuotaMode::StrictlyExceeds})[0];
}

}  // namespace

TEST_SUITE("fixedpoint") {
  TEST_CASE("index map") {
    CHECK(apply_index_map(R({{1, 2}, {1, 4}, {1, 4}}), IndexKind::ShapleyShubik) ==
          R({{2, 3}, {1, 6}, {1, 6}}));
    CHECK(apply_index_map(R({{2, 3}, {1, 6}, {1, 6}}), IndexKind::ShapleyShubik) ==
          R({{1, 1}, {0, 1}, {0, 1}}));
    const auto thirds = R({{1, 3}, {1, 3}, {1, 3}});
    CHECK(apply_index_map(thirds, IndexKind::Banzhaf) == thirds);
    CHECK(apply_index_map(thirds, IndexKind::ShapleyShubik) == thirds);
    CHECK_THROWS_AS(apply_index_map(R({{1, 2}, {1, 4}}), IndexKind::Banzhaf), InvalidInput);
  }

  TEST_CASE("iteration outcomes") {
    const auto t = iterate(R({{1, 2}, {1, 4}, {1, 4}}), IndexKind::ShapleyShubik, 100);
    REQUIRE(t.states.size() == 3);
    CHECK(t.states[1] == R({{2, 3}, {1, 6}, {1, 6}}));
    CHECK(t.states[2] == R({{1, 1}, {0, 1}, {0, 1}}));
    CHECK(t.outcome.type == IterationOutcome::Type::FixedPoint);
    CHECK(t.outcome.entry == 2);

    std::vector<Rational> family{Rational(1, 3)};
    family.insert(family.end(), 5, Rational(2, 15));
    const auto f = iterate(family, IndexKind::ShapleyShubik, 10);
    CHECK(f.states.size() == 1);
    CHECK(f.outcome.type == IterationOutcome::Type::FixedPoint);
    CHECK(f.outcome.entry == 0);

    for (std::size_t n = 1; n <= 7; ++n) {
      const std::vector<Rational> uniform(n, Rational(1, static_cast<long>(n)));
      for (IndexKind kind : {IndexKind::Banzhaf, IndexKind::ShapleyShubik}) {
        const auto u = iterate(uniform, kind, 5);
        CHECK(u.states.size() == 1);
        CHECK(u.outcome.type == IterationOutcome::Type::FixedPoint);
      }
    }

    const auto capped = iterate(R({{1, 2}, {1, 4}, {1, 4}}), IndexKind::ShapleyShubik, 1);
    CHECK(capped.outcome.type == IterationOutcome::Type::MaxIterationsReached);
    CHECK(capped.states.size() == 2);
    CHECK_THROWS_AS(iterate(R({{1, 2}, {1, 2}}), IndexKind::Banzhaf, 0), InvalidInput);
  }

  TEST_CASE("iteration never leaves the simplex") {
    const auto t = iterate(R({{2, 5}, {3, 10}, {1, 5}, {1, 10}}), IndexKind::Banzhaf, 50);
    for (const auto& s : t.states) CHECK(sum(s) == Rational(1));
    CHECK(t.outcome.type != IterationOutcome::Type::MaxIterationsReached);
  }

  TEST_CASE("(a, b, ..., b) closed form against the oracle") {
    CHECK(ab_ss_power_of_A(5, Rational(2, 15)) == Rational(1, 3));
    CHECK(ab_ss_power_of_A(5, Rational(1, 6)) == Rational(1, 6));
    CHECK(ab_ss_power_of_A(10, Rational(4, 55)) == Rational(3, 11));
    CHECK_THROWS_AS(ab_ss_power_of_A(5, Rational(1, 5)), InvalidFamily);
    CHECK_THROWS_AS(ab_ss_power_of_A(5, Rational(0)), InvalidFamily);
    for (std::size_t m = 1; m <= 6; ++m) {
      for (long q = static_cast<long>(m) + 1; q <= 30; ++q) {
        const Rational b(1, q);
        if (half_reciprocal(b).integral) continue;
        CAPTURE(m);
        CAPTURE(q);
        const bool dictator = half_reciprocal(b).floor > static_cast<unsigned long>(m);
        CHECK((ab_ss_power_of_A(m, b) == ss_oracle_first(ab(b, m))) == !dictator);
      }
    }
  }

  TEST_CASE("family points") {
    const auto p = ab_odd_family_point(3, 1);
    CHECK(p.valid);
    CHECK(p.b == Rational(2, 15));
    CHECK(p.a == Rational(1, 3));
    const auto trivial = ab_odd_family_point(2, 1);
    CHECK_FALSE(trivial.valid);
    CHECK(trivial.b == Rational(1, 6));
    CHECK(trivial.reason == "1/(2b) integer");
    const auto gated = ab_odd_family_point(10, 3);
    CHECK(gated.b == Rational(7, 190));
    CHECK_FALSE(gated.valid);

    const auto even = ab_even_family_point(5, 1);
    CHECK(even.valid);
    CHECK(even.b == Rational(4, 55));
    CHECK(even.a == Rational(3, 11));
    CHECK(apply_index_map(even.weights(), IndexKind::ShapleyShubik) == even.weights());
    CHECK_FALSE(ab_even_family_point(3, 1).valid);
    CHECK(ab_even_family_point(3, 1).b == Rational(2, 21));
    CHECK_FALSE(ab_even_family_point(4, 3).valid);
    CHECK(ab_even_family_point(4, 3).b == Rational(1, 36));

    CHECK_THROWS_AS(ab_odd_family_point(1, 1), InvalidFamily);
    CHECK_THROWS_AS(ab_odd_family_point(3, 3), InvalidFamily);
    CHECK_THROWS_AS(ab_even_family_point(3, 0), InvalidFamily);
  }

  TEST_CASE("every valid family point is a fixed point and vice versa for the solver") {
    for (long k = 2; k <= 7; ++k) {
      for (long c = 1; c < k; ++c) {
        for (const auto& spec : {ab_odd_family_point(k, c), ab_even_family_point(k, c)}) {
          if (!spec.valid) continue;
          CHECK(ab_ss_power_of_A(spec.m, spec.b) == spec.a);
          CHECK(apply_index_map(spec.weights(), IndexKind::ShapleyShubik) == spec.weights());
          const auto sols = ab_fixed_solutions(spec.m);
          CHECK(std::any_of(sols.begin(), sols.end(), [&](const AbSolution& s) { return s.b == spec.b; }));
        }
      }
    }
  }

  TEST_CASE("(a, b, ..., b) solver finds exactly the fixed points") {
    for (std::size_t m = 1; m <= 9; ++m) {
      for (const auto& s : ab_fixed_solutions(m)) {
        const auto w = ab(s.b, m);
        CHECK(apply_index_map(w, IndexKind::ShapleyShubik) == w);
        CHECK(s.trivial == (s.b == Rational(1, static_cast<long>(m) + 1)));
      }
    }
  }

  TEST_CASE("(a, a, b, ..., b) closed form") {
    CHECK(aab_ss_power_of_A(4, Rational(2, 15)) == Rational(7, 30));
    CHECK(aab_ss_power_of_A(3, Rational(2, 15)) == Rational(3, 10));
    CHECK(aab_ss_power_of_A(5, Rational(3, 35)) == Rational(2, 7));
    CHECK(aab_ss_power_of_A(3, Rational(2, 15), AabDenominator::OffByOne) != Rational(3, 10));
    CHECK_THROWS_AS(aab_ss_power_of_A(4, Rational(1, 6)), IntegerBoundary);
    CHECK_THROWS_AS(aab_ss_power_of_A(4, Rational(1, 3)), InvalidFamily);
    for (std::size_t m = 2; m <= 5; ++m) {
      for (long q = static_cast<long>(m) + 1; q <= 24; ++q) {
        for (long p = 1; p < q; ++p) {
          const Rational b(p, q);
          if (Rational(static_cast<std::int64_t>(m)) * b >= Rational(1)) break;
          if (half_reciprocal(b).integral) continue;
          if (p > 3) break;
          CAPTURE(m);
          CAPTURE(b);
          if ((Rational(2) * b).reciprocal() < Rational(static_cast<std::int64_t>(m))) {
            CHECK(aab_ss_power_of_A(m, b) == ss_oracle_first(aab(b, m)));
          }
        }
      }
    }
  }

  TEST_CASE("(a, a, b, ..., b) tables") {
    CHECK(std::vector<Rational>{Rational(2, 15), Rational(1, 5)} ==
          [] {
            std::vector<Rational> out;
            for (const auto& s : aab_fixed_solutions(4)) out.push_back(s.b);
            return out;
          }());
    const auto nine = aab_fixed_solutions(9);
    REQUIRE(nine.size() == 3);
    CHECK(nine[0].b == Rational(5, 99));
    CHECK(nine[1].b == Rational(31, 495));
    CHECK(nine[2].b == Rational(37, 495));
    for (const auto& s : nine) CHECK(s.engine_certified == true);
    const auto twelve = aab_fixed_solutions(12);
    for (const auto& s : twelve) CHECK_FALSE(s.engine_certified.has_value());
    CHECK_THROWS_AS(aab_fixed_solutions(1), InvalidFamily);

    CHECK(aab_verified_classes(2, Parity::Even) == R({{2, 15}, {1, 5}}));
    CHECK(aab_verified_classes(1, Parity::Odd) == R({{2, 15}}));
    CHECK(aab_verified_classes(5, Parity::Even) == R({{5, 66}, {1, 11}}));
    for (long k = 1; k <= 4; ++k) {
      for (Parity parity : {Parity::Even, Parity::Odd}) {
        const std::size_t m = static_cast<std::size_t>(2 * k + (parity == Parity::Odd ? 1 : 0));
        std::vector<Rational> solved;
        for (const auto& s : aab_fixed_solutions(m)) solved.push_back(s.b);
        for (const auto& b : aab_verified_classes(k, parity)) {
          CAPTURE(b);
          if (half_reciprocal(b).integral) {
            // Outside the solver's range; k = 1 puts 1/6 here.
            const auto w = aab(b, m);
            CHECK(apply_index_map(w, IndexKind::ShapleyShubik) == w);
          } else {
            CHECK(std::find(solved.begin(), solved.end(), b) != solved.end());
          }
        }
      }
    }
  }

  TEST_CASE("(a, b, ..., b) Banzhaf closed form") {
    const auto p = ab_banzhaf_index(5, Rational(2, 15));
    CHECK(p.b_index == Rational(2, 15));
    CHECK(p.a_index == Rational(1, 3));
    CHECK(ab_banzhaf_index(3, Rational(1, 4)).a_index == Rational(1, 4));
    CHECK(ab_banzhaf_index(3, Rational(1, 4)).b_index == Rational(1, 4));
    for (std::size_t m = 1; m <= 8; ++m) {
      for (long q = static_cast<long>(m) + 1; q <= 30; ++q) {
        for (long num : {1L, 2L, 3L}) {
          const Rational b(num, q);
          if (Rational(static_cast<std::int64_t>(m)) * b >= Rational(1)) continue;
          const auto w = ab(b, m);
          const auto engine = oracle::banzhaf({w, Rational(1, 2), QuotaMode::StrictlyExceeds});
          const auto closed = ab_banzhaf_index(m, b);
          CAPTURE(m);
          CAPTURE(b);
          CHECK(closed.a_index == engine[0]);
          CHECK(closed.b_index == engine[1]);
        }
      }
    }
  }

  TEST_CASE("joint Banzhaf check") {
    const auto base = family_banzhaf_check(3, 1, FamilyKind::OddM);
    CHECK(base.holds);
    CHECK(base.closed_form_b_index == Rational(2, 15));
    CHECK(base.engine_b_index == Rational(2, 15));
    CHECK(base.engine_holds == true);
    CHECK_FALSE(family_banzhaf_check(3, 2, FamilyKind::OddM).holds);
    CHECK_FALSE(family_banzhaf_check(5, 1, FamilyKind::EvenM).holds);
    for (long k = 3; k <= 8; ++k) {
      const auto c1 = family_banzhaf_check(k, 1, FamilyKind::OddM);
      CHECK(c1.holds);
      CHECK(c1.engine_holds == true);
    }
  }
}
