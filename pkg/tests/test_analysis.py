from fractions import Fraction

import pytest

from memwalk.analysis import (
    compare_walks,
    localization_series,
    peak_locations,
    symmetry_check,
    triangle_equivalence,
)
from memwalk.core import Distribution, ScaledAmplitude
from memwalk.engine import SYMMETRIC, memory_walk, run_distribution


def test_localization_base_case():
    r = localization_series(2).at(2)
    assert r.lr == r.rl == ScaledAmplitude(1, 2)
    assert r.ll.numerator == r.rr.numerator == 0
    assert r.p0 == Fraction(1, 2)


def test_localization_claim_up_to_24():
    report = localization_series(24)
    assert [r.n for r in report] == list(range(2, 25, 2))
    for r in report:
        assert r.claim_holds()
        assert r.p0 >= r.lr.squared() + r.rl.squared() >= Fraction(1, 2)
    assert report.sum_preserved()


def test_localization_forty_steps():
    r = localization_series(40).at(40)
    assert r.p0 > Fraction(1, 2)
    assert abs(float(r.p0) - 0.5948066525) < 1e-9


def test_symmetric_start_is_reported_not_asserted():
    report = localization_series(40, SYMMETRIC)
    assert len(report.rows) == 20
    # measured: about 0.584 at n = 40
    assert 0 < report.at(40).p0 < 1


def test_localization_rejects_odd():
    with pytest.raises(ValueError):
        localization_series(5)
    with pytest.raises(KeyError):
        localization_series(4).at(6)


def test_symmetry_even_n():
    assert symmetry_check(run_distribution(memory_walk(40))).symmetric


@pytest.mark.parametrize("n", [5, 7, 9, 11, 21])
def test_symmetry_odd_n(n):
    assert symmetry_check(run_distribution(memory_walk(n))).violations == (-1, 1)


def test_symmetry_point_mass():
    assert symmetry_check(Distribution({0: Fraction(1)})).symmetric


def test_peaks_ten_steps():
    assert peak_locations(run_distribution(memory_walk(10))) == [-6, 0, 6]


def test_peaks_forty_steps():
    d = run_distribution(memory_walk(40))
    peaks = peak_locations(d)
    assert peaks[0] == -28 and peaks[-1] == 28
    side = [k for k in peaks if k]
    assert max(side, key=lambda k: (d[k], k)) == 28


def test_peaks_simple():
    assert peak_locations(Distribution({-2: Fraction(1, 4), 0: Fraction(1, 2), 2: Fraction(1, 4)})) == [0]
    assert peak_locations(Distribution({})) == []


def test_compare_ten_steps():
    cmp = compare_walks(10)
    p0 = dict((k, (c, q, m)) for k, c, q, m in cmp.rows())[0]
    assert p0[2] > p0[0] and p0[2] > p0[1]
    assert len(list(cmp.rows())) == 21


def test_compare_classical_column():
    cmp = compare_walks(3)
    col = {k: c for k, c, _, _ in cmp.rows() if c}
    assert col == {-3: Fraction(1, 8), -1: Fraction(3, 8), 1: Fraction(3, 8), 3: Fraction(1, 8)}


def test_compare_symmetric_forty():
    cmp = compare_walks(40, SYMMETRIC)
    for col in (cmp.classical, cmp.quantum, cmp.memory):
        assert col.total == 1
    # the memory walk's four-ket start is mirror symmetric; the real-coefficient
    # memoryless start is not (a complex relative phase would be needed)
    assert symmetry_check(cmp.memory).symmetric
    assert not symmetry_check(cmp.quantum).symmetric


@pytest.mark.parametrize("n", [3, 10, 11, 25])
def test_symmetric_memory_start_gives_symmetric_distribution(n):
    assert symmetry_check(run_distribution(memory_walk(n, "c", SYMMETRIC))).symmetric


def test_triangle_report():
    report = triangle_equivalence(6)
    assert report.compared == sum(4 * (n + 1) for n in range(1, 7))
    assert report.mismatches == []


def test_triangle_to_sixteen():
    report = triangle_equivalence(16)
    assert report.compared == sum(4 * (n + 1) for n in range(1, 17))
    assert not report.mismatches
