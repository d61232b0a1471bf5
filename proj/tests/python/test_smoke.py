from fractions import Fraction as F

import pytest

import powerindex as pi


def test_small_system_indices():
    assert pi.banzhaf([2, 1, 1], 3) == [F(3, 5), F(1, 5), F(1, 5)]
    assert pi.shapley_shubik([2, 1, 1], 3) == [F(2, 3), F(1, 6), F(1, 6)]


def test_rational_inputs_and_engines_agree():
    weights = ["1/3", F(2, 15), "2/15", 0, F(1, 5)]
    for engine in ("enum", "dp"):
        ss = pi.shapley_shubik(weights, F(1, 2), mode="gt", engine=engine)
        assert sum(ss) == 1


def test_degenerate_system_raises():
    with pytest.raises(pi.DegenerateSystemError):
        pi.banzhaf([1], 2)
    with pytest.raises(pi.PowerIndexError):
        pi.banzhaf([1, -1], 1)


def test_count_winning_is_python_int():
    assert pi.count_winning([1, 1, 1], 2) == 4


def test_divisor_system_of_six():
    ds = pi.divisor_system(6)
    assert ds["divisors"] == [6, 3, 2, 1]
    assert ds["sigma"] == 12 and ds["k"] == 0
    report = pi.check_index_disagreement(6)
    assert report["banzhaf"] == [F(7, 10)] + [F(1, 10)] * 3
    assert report["witness_divisors"]


def test_iteration_reaches_dictator():
    trace = pi.iterate([F(1, 2), F(1, 4), F(1, 4)], "ss")
    assert trace["outcome"]["type"] == "fixed"
    assert trace["states"][-1] == [1, 0, 0]


def test_family_solutions():
    assert pi.aab_fixed_solutions(8) == [F(13, 180), F(4, 45), F(1, 9)]
    b = F(2, 15)
    assert pi.ab_ss_power_of_A(5, b) == 1 - 5 * b


def test_suite_runs():
    results = pi.run_suite("prop24")
    assert results and all(r["passed"] for r in results)
