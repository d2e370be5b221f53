from fractions import Fraction

import pytest

from oracles import signed_path_counts
from memwalk.closed_form import (
    AmplitudeQuery,
    closed_form_amplitude,
    closed_form_distribution,
    closed_form_probability,
)
from memwalk.combinatorics import Ending, combn
from memwalk.core import ScaledAmplitude
from memwalk.engine import memory_walk, run_distribution


def amp(n, k, e):
    return closed_form_amplitude(AmplitudeQuery(n, k, e))


def test_base_case_amplitudes():
    assert amp(2, 0, "LR") == ScaledAmplitude(1, 2)
    assert amp(2, 0, "RL") == ScaledAmplitude(1, 2)
    assert amp(2, 2, "RR") == ScaledAmplitude(-1, 2)
    assert amp(2, 0, "LL") == amp(2, 0, "RR") == ScaledAmplitude(0, 2)


def test_query_derived_counts():
    q = AmplitudeQuery(6, -2, "LL")
    assert (q.n_left, q.n_right) == (5, 3)
    assert q.reachable
    assert not AmplitudeQuery(6, -1, "LL").reachable
    assert not AmplitudeQuery(6, 8, "LL").reachable
    with pytest.raises(ValueError):
        AmplitudeQuery(0, 0, "LR")


def test_unreachable_is_zero():
    assert amp(5, 0, "LR") == ScaledAmplitude(0, 5)
    assert amp(3, 7, "RR") == ScaledAmplitude(0, 3)


def test_probability_examples():
    assert closed_form_probability(2, 0) == Fraction(1, 2)
    assert closed_form_probability(2, 4) == 0
    assert closed_form_probability(4, 0) == Fraction(5, 8)


@pytest.mark.parametrize("n", range(1, 17))
def test_probabilities_sum_to_one(n):
    d = closed_form_distribution(n)
    assert d.total == 1
    assert all(p.denominator <= 2**n and 2**n % p.denominator == 0 for p in d.probs.values())


@pytest.mark.parametrize("n", range(1, 7))
def test_exhaustive_small_n_against_enumeration(n):
    # covers the degenerate N_L = 1, 2 families where whole sums are empty
    oracle = signed_path_counts(n)
    for k in range(-n - 2, n + 3):
        for e in Ending:
            assert amp(n, k, e).numerator == oracle.get((k, e.value), 0), (n, k, e)


def test_ten_step_distribution_matches_engine():
    assert closed_form_distribution(10) == run_distribution(memory_walk(10))


def _rr_as_printed(n, nl, nr):
    # RR sum with combn(C - 1, N_R1, N_R) in the triple sum
    t = Fraction(0)
    for c in range(1, nl):
        for l1 in range(max(1, 2 * c - nl), c):
            for r1 in range(max(0, 2 * c - nr), c):
                t += ((-1) ** (n + l1 + r1) * Fraction(l1 * (c - r1), c * c)
                      * combn(c, l1, nl) * combn(c - 1, r1, nr))
    for r1 in range(max(0, 2 * nl - nr), nl):
        t += (-1) ** (nr + r1) * Fraction(nl - r1, nl) * combn(nl, r1, nr)
    return t


def test_rr_triple_sum_uses_c_right_clusters():
    # With C - 1 right clusters the RR amplitude already fails at n = 4, k = 0,
    # where the enumerated value is +1 (path LR LLRR).
    n, k = 4, 0
    nl, nr = (n + 2 - k) // 2, (n + 2 + k) // 2
    assert signed_path_counts(n)[(k, "RR")] == 1
    assert _rr_as_printed(n, nl, nr) == 0
    assert amp(n, k, "RR").numerator == 1
