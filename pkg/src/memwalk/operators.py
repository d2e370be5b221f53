"""Coin and shift operators for memoryless and two-step memory walks."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .core import Classical, Order1, Order2, WalkState

UNITARY_TOL = 1e-12


class CoinError(ValueError):
    pass


@dataclass(frozen=True)
class CoinSpec:
    """Coin acting on the chirality bit.

    ``matrix`` holds ``(a, b, c, d)`` with ``|0> -> a|0> + b|1>`` and
    ``|1> -> c|0> + d|1>``.  Only the ``general`` kind reads it.
    """

    kind: str
    matrix: tuple = (0, 0, 0, 0)

    def __post_init__(self):
        if self.kind not in ("hadamard", "classical", "general"):
            raise CoinError(f"unknown coin kind {self.kind!r}")
        if self.kind == "general":
            m = np.asarray(self.matrix, dtype=complex).reshape(2, 2)
            if not np.allclose(m @ m.conj().T, np.eye(2), rtol=0, atol=UNITARY_TOL):
                raise CoinError(f"coin matrix is not unitary: {self.matrix}")
            object.__setattr__(self, "matrix", tuple(complex(x) for x in m.ravel()))

    @classmethod
    def hadamard(cls) -> "CoinSpec":
        return cls("hadamard")

    @classmethod
    def classical_fair(cls) -> "CoinSpec":
        return cls("classical")

    @classmethod
    def general(cls, a, b, c, d) -> "CoinSpec":
        return cls("general", (a, b, c, d))

    @property
    def quantum(self) -> bool:
        return self.kind != "classical"

    def as_matrix(self) -> np.ndarray:
        if self.kind == "hadamard":
            return np.array([[1, 1], [1, -1]]) / np.sqrt(2)
        if self.kind == "classical":
            return np.full((2, 2), 0.5)
        return np.asarray(self.matrix).reshape(2, 2)


HADAMARD = CoinSpec.hadamard()


@dataclass(frozen=True)
class ShiftCase:
    """Shift rule: per coin bit, transmit (keep direction) or reflect."""

    case_id: str
    transmit: tuple[bool, bool]

    @classmethod
    def from_id(cls, case_id: str) -> "ShiftCase":
        try:
            return SHIFT_CASES[case_id]
        except KeyError:
            raise ValueError(f"unknown shift case {case_id!r}; expected one of a, b, c, d") from None

    def rule(self, p: int) -> str:
        return "transmit" if self.transmit[p] else "reflect"

    def __call__(self, ket: Order2) -> Order2:
        step = ket.n1 - ket.n2
        if not self.transmit[ket.p]:
            step = -step
        return Order2(ket.n1, ket.n1 + step, ket.p)


SHIFT_CASES = {
    "a": ShiftCase("a", (True, True)),
    "b": ShiftCase("b", (True, False)),
    "c": ShiftCase("c", (False, True)),
    "d": ShiftCase("d", (False, False)),
}


def apply_coin(state: WalkState, coin: CoinSpec = HADAMARD) -> WalkState:
    """Act with the coin on the chirality bit, leaving positions alone.

    The Hadamard coin stays in integer arithmetic and raises the state scale
    by one; a general coin multiplies numerators by complex floats.
    """
    if state.kind is Classical:
        raise CoinError("a quantum coin cannot act on a classical state")
    if not coin.quantum:
        raise CoinError("the classical coin has no amplitude action")
    out: dict = {}
    if coin.kind == "hadamard":
        for ket, v in state.numerators.items():
            k0, k1 = _with_bit(ket, 0), _with_bit(ket, 1)
            out[k0] = out.get(k0, 0) + v
            out[k1] = out.get(k1, 0) + (v if ket.p == 0 else -v)
        return WalkState(out, state.scale + 1, state.steps_taken)
    m = coin.as_matrix()
    for ket, v in state.numerators.items():
        for q in (0, 1):
            kq = _with_bit(ket, q)
            out[kq] = out.get(kq, 0) + v * m[ket.p, q]
    return WalkState(out, state.scale, state.steps_taken)


def _with_bit(ket, p):
    if isinstance(ket, Order2):
        return Order2(ket.n2, ket.n1, p)
    return Order1(ket.n, p)


def apply_shift(state: WalkState, shift: ShiftCase | None = None) -> WalkState:
    """Move every ket; amplitudes are carried over unchanged.

    Memory kets follow ``shift``.  Memoryless kets use the standard
    ``|n,0> -> |n-1,0>``, ``|n,1> -> |n+1,1>`` move and take no shift.
    """
    if state.kind is Order2:
        if shift is None:
            raise ValueError("a memory walk needs a shift case")
        move = shift
    elif state.kind is Order1:
        if shift is not None:
            raise ValueError("memoryless walks have a fixed shift")
        move = _order1_shift
    elif state.kind is Classical:
        raise TypeError("classical states are not shifted by amplitude")
    else:
        return state
    return WalkState({move(k): v for k, v in state.numerators.items()}, state.scale, state.steps_taken)


def _order1_shift(ket: Order1) -> Order1:
    return Order1(ket.n + (1 if ket.p else -1), ket.p)


def step(state: WalkState, coin: CoinSpec = HADAMARD, shift: ShiftCase | None = None) -> WalkState:
    """One coin flip followed by one shift."""
    out = apply_shift(apply_coin(state, coin), shift)
    return WalkState(out.numerators, out.scale, state.steps_taken + 1)


def order2_kets(lo: int, hi: int):
    """All memory kets with current position in ``[lo, hi]``."""
    for n in range(lo, hi + 1):
        for prev in (n - 1, n + 1):
            for p in (0, 1):
                yield Order2(prev, n, p)


def shift_table(shift: ShiftCase, window: tuple[int, int]) -> dict[Order2, Order2]:
    return {k: shift(k) for k in order2_kets(*window)}


def degenerate_shift_table(window: tuple[int, int]) -> dict[Order2, Order2]:
    """Shift sending both movers with ``p = 0`` to the same right-mover.

    ``p = 1`` kets are transmitted.  Looks only at the current position for
    ``p = 0``, so two kets collide.
    """
    table = {}
    for k in order2_kets(*window):
        if k.p == 0:
            table[k] = Order2(k.n1, k.n1 + 1, 0)
        else:
            table[k] = SHIFT_CASES["a"](k)
    return table


@dataclass(frozen=True)
class AuditVerdict:
    status: str
    witness: tuple = ()

    @property
    def unitary(self) -> bool:
        return self.status == "unitary"


def unitarity_audit(table: Mapping[Order2, Order2], window: tuple[int, int]) -> AuditVerdict:
    """Check that a basis map is a permutation away from the window edges.

    A shift acting on basis kets is unitary iff it permutes them.  The
    domain is every memory ket with current position in ``window``;
    injectivity is checked on the whole domain and surjectivity on kets one
    site inside the window, whose preimages cannot fall outside it.
    """
    lo, hi = window
    missing = [k for k in order2_kets(lo, hi) if k not in table]
    if missing:
        raise ValueError(f"table undefined on {missing[0]}")
    seen: dict = {}
    for src in order2_kets(lo, hi):
        dst = table[src]
        if dst in seen:
            return AuditVerdict("not-injective", (seen[dst], src, dst))
        seen[dst] = src
    for k in order2_kets(lo + 1, hi - 1):
        if k not in seen:
            return AuditVerdict("not-surjective", (k,))
    return AuditVerdict("unitary")
