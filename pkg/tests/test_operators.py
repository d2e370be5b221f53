import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from memwalk.core import Classical, Order1, Order2, WalkState, measure_positions
from memwalk.engine import DEFAULT, SYMMETRIC, init_state, iter_states, memory_walk
from memwalk.operators import (
    HADAMARD,
    SHIFT_CASES,
    CoinError,
    CoinSpec,
    ShiftCase,
    apply_coin,
    apply_shift,
    degenerate_shift_table,
    shift_table,
    step,
    unitarity_audit,
)

# Action of the shift as printed, row by row: initial ket offsets
# (n2 - n, n1 - n, p) -> final offsets for cases a, b, c, d.
SHIFT_TABLE = {
    (-1, 0, 0): {"a": (0, 1, 0), "b": (0, 1, 0), "c": (0, -1, 0), "d": (0, -1, 0)},
    (-1, 0, 1): {"a": (0, 1, 1), "b": (0, -1, 1), "c": (0, 1, 1), "d": (0, -1, 1)},
    (1, 0, 0): {"a": (0, -1, 0), "b": (0, -1, 0), "c": (0, 1, 0), "d": (0, 1, 0)},
    (1, 0, 1): {"a": (0, -1, 1), "b": (0, 1, 1), "c": (0, -1, 1), "d": (0, 1, 1)},
}


@pytest.mark.parametrize("n", [-7, 0, 1, 12])
@pytest.mark.parametrize("case", "abcd")
def test_shift_reproduces_printed_table(n, case):
    shift = ShiftCase.from_id(case)
    for (a, b, p), row in SHIFT_TABLE.items():
        c, d, q = row[case]
        assert shift(Order2(n + a, n + b, p)) == Order2(n + c, n + d, q)


def test_transmit_reflect_pairs():
    rules = {c: (s.rule(0), s.rule(1)) for c, s in SHIFT_CASES.items()}
    assert rules == {
        "a": ("transmit", "transmit"),
        "b": ("transmit", "reflect"),
        "c": ("reflect", "transmit"),
        "d": ("reflect", "reflect"),
    }


def test_unknown_case():
    with pytest.raises(ValueError):
        ShiftCase.from_id("e")


def test_hadamard_on_bit0():
    out = apply_coin(WalkState.basis(Order2(3, 4, 0)))
    assert out.scale == 1
    assert out.numerators == {Order2(3, 4, 0): 1, Order2(3, 4, 1): 1}


def test_hadamard_on_bit1():
    out = apply_coin(WalkState.basis(Order2(3, 4, 1)))
    assert out.numerators == {Order2(3, 4, 0): 1, Order2(3, 4, 1): -1}


def test_identity_general_coin():
    s = init_state(SYMMETRIC, "memory")
    out = apply_coin(s, CoinSpec.general(1, 0, 0, 1))
    assert out.scale == s.scale
    assert set(out.numerators) == set(s.numerators)
    assert all(out.numerators[k] == s.numerators[k] for k in s)


def test_general_coin_must_be_unitary():
    with pytest.raises(CoinError):
        CoinSpec.general(1, 1, 0, 1)
    CoinSpec.general(0, 1j, 1j, 0)


def test_hadamard_matrix_entries():
    h = HADAMARD.as_matrix()
    assert np.allclose(h, np.array([[1, 1], [1, -1]]) / np.sqrt(2))
    assert h[0, 0] == h[0, 1] == h[1, 0] == -h[1, 1]


def test_coin_on_classical_state_rejected():
    with pytest.raises(CoinError):
        apply_coin(WalkState.basis(Classical(0)))
    with pytest.raises(CoinError):
        apply_coin(WalkState.basis(Order1(0, 0)), CoinSpec.classical_fair())


def test_shift_examples():
    c, a = SHIFT_CASES["c"], SHIFT_CASES["a"]
    n = 5
    assert apply_shift(WalkState.basis(Order2(n - 1, n, 0)), c).numerators == {Order2(n, n - 1, 0): 1}
    assert apply_shift(WalkState.basis(Order2(n - 1, n, 1)), c).numerators == {Order2(n, n + 1, 1): 1}
    assert apply_shift(WalkState.basis(Order2(n + 1, n, 1)), a).numerators == {Order2(n, n - 1, 1): 1}


def test_shift_argument_checks():
    with pytest.raises(ValueError):
        apply_shift(WalkState.basis(Order2(-1, 0, 0)))
    with pytest.raises(ValueError):
        apply_shift(WalkState.basis(Order1(0, 0)), SHIFT_CASES["c"])


def test_first_step_case_c():
    out = step(init_state(DEFAULT, "memory"), HADAMARD, SHIFT_CASES["c"])
    assert out.steps_taken == 1 and out.scale == 1
    assert out.numerators == {Order2(0, -1, 0): 1, Order2(0, 1, 1): 1}


def test_second_step_case_c():
    s = init_state(DEFAULT, "memory")
    for _ in range(2):
        s = step(s, HADAMARD, SHIFT_CASES["c"])
    assert s.numerators == {
        Order2(-1, 0, 0): 1, Order2(-1, -2, 1): 1, Order2(1, 0, 0): 1, Order2(1, 2, 1): -1,
    }


@pytest.mark.parametrize("case", "ad")
def test_case_a_and_d_distribution_ignores_coin(case):
    coins = [HADAMARD, CoinSpec.general(0, 1, 1, 0), CoinSpec.general(np.cos(0.3), np.sin(0.3), -np.sin(0.3), np.cos(0.3))]
    dists = []
    for coin in coins:
        states = list(iter_states(memory_walk(9, case, SYMMETRIC, coin)))
        dists.append([measure_positions(s).as_floats() for s in states])
    for other in dists[1:]:
        for d0, d1 in zip(dists[0], other):
            assert d0.keys() == d1.keys()
            assert all(abs(d0[k] - d1[k]) < 1e-12 for k in d0)


def test_case_a_rigid_translation_per_step():
    for state in iter_states(memory_walk(6, "a")):
        assert measure_positions(state).probs == {state.steps_taken: 1}


@given(st.lists(st.tuples(st.integers(-5, 5), st.sampled_from([-1, 1]), st.integers(0, 1),
                          st.integers(-9, 9)), min_size=1, max_size=8))
def test_hadamard_twice_is_identity(terms):
    nums = {}
    for n, d, p, v in terms:
        nums[Order2(n + d, n, p)] = v
    s = WalkState(nums, scale=3)
    twice = apply_coin(apply_coin(s))
    assert twice.scale == s.scale + 2
    assert twice.same_as(s)
    assert {k: v // 2 for k, v in twice.numerators.items()} == s.numerators


@given(st.sampled_from("abcd"), st.integers(1, 8))
def test_step_preserves_numerator_square_sum(case, n):
    for state in iter_states(memory_walk(n, case, SYMMETRIC)):
        assert sum(v * v for v in state.numerators.values()) == 2**state.scale


def test_general_coin_matches_hadamard_numerically():
    h = 1 / np.sqrt(2)
    general = CoinSpec.general(h, h, h, -h)
    exact = list(iter_states(memory_walk(12, "c")))[-1]
    approx = list(iter_states(memory_walk(12, "c", coin=general)))[-1]
    assert not approx.exact
    for ket, amp in exact.items():
        assert abs(amp.value() - approx.numerators.get(ket, 0)) < 1e-12
    d = measure_positions(approx)
    assert abs(d.total - 1) < 1e-12


@pytest.mark.parametrize("case", "abcd")
def test_shift_cases_are_unitary(case):
    assert unitarity_audit(shift_table(SHIFT_CASES[case], (-10, 10)), (-10, 10)).unitary


def test_degenerate_shift_is_not_injective():
    verdict = unitarity_audit(degenerate_shift_table((-10, 10)), (-10, 10))
    assert verdict.status == "not-injective"
    first, second, image = verdict.witness
    assert first != second
    assert {first, second} == {Order2(image.n1 - 2, image.n1 - 1, 0), Order2(image.n1, image.n1 - 1, 0)}
    assert image.p == 0 and image.right_mover


def test_audit_reports_missing_image():
    table = shift_table(SHIFT_CASES["c"], (-3, 3))
    # send one ket somewhere far away: still injective, but a ket loses its preimage
    src = Order2(-1, 0, 0)
    lost = table[src]
    table[src] = Order2(99, 100, 0)
    verdict = unitarity_audit(table, (-3, 3))
    assert verdict.status == "not-surjective"
    assert verdict.witness == (lost,)


def test_audit_needs_full_table():
    with pytest.raises(ValueError):
        unitarity_audit({}, (0, 1))
