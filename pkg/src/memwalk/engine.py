"""End-to-end runs of the classical, memoryless and memory walks."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import comb
from typing import Iterator

import numpy as np

from .core import (
    Classical,
    Distribution,
    NormalizationError,
    Order1,
    Order2,
    ScaledAmplitude,
    WalkState,
    measure_positions,
    norm_squared,
)
from .operators import HADAMARD, CoinSpec, ShiftCase, step


class WalkKind(str, Enum):
    CLASSICAL = "classical"  # fair walk, memory irrelevant to its distribution
    QUANTUM = "quantum"  # memoryless coined walk
    MEMORY = "memory"  # coined walk with two-step memory


@dataclass(frozen=True)
class InitialCondition:
    """``default``, ``symmetric``, or ``custom`` with explicit ``terms``.

    Custom terms are ``(ket, amplitude)`` pairs.  If every amplitude is a
    :class:`ScaledAmplitude` with an integer numerator and a common scale
    the run stays exact; anything else goes through floats.
    """

    preset: str = "default"
    terms: tuple = ()

    def __post_init__(self):
        if self.preset not in ("default", "symmetric", "custom"):
            raise ValueError(f"unknown initial preset {self.preset!r}")
        if self.preset == "custom" and not self.terms:
            raise ValueError("custom initial condition needs terms")

    @classmethod
    def custom(cls, terms) -> "InitialCondition":
        return cls("custom", tuple(terms))


DEFAULT = InitialCondition()
SYMMETRIC = InitialCondition("symmetric")


def init_state(cond: InitialCondition, kind: WalkKind | str) -> WalkState:
    kind = WalkKind(kind)
    if cond.preset == "custom":
        return _custom_state(cond.terms, kind)
    if kind is WalkKind.CLASSICAL:
        return WalkState.basis(Classical(0))
    if kind is WalkKind.QUANTUM:
        if cond.preset == "default":
            return WalkState.basis(Order1(0, 0))
        return WalkState({Order1(0, 0): 1, Order1(0, 1): 1}, scale=1)
    if cond.preset == "default":
        return WalkState.basis(Order2(-1, 0, 0))
    kets = [Order2(-1, 0, 0), Order2(-1, 0, 1), Order2(1, 0, 0), Order2(1, 0, 1)]
    return WalkState({k: 1 for k in kets}, scale=2)


_KIND_KET = {WalkKind.CLASSICAL: Classical, WalkKind.QUANTUM: Order1, WalkKind.MEMORY: Order2}


def _custom_state(terms, kind: WalkKind) -> WalkState:
    for ket, _ in terms:
        if not isinstance(ket, _KIND_KET[kind]):
            raise TypeError(f"{ket!r} is not a {kind.value} basis state")
    amps = [a for _, a in terms]
    scales = {a.scale_steps for a in amps if isinstance(a, ScaledAmplitude)}
    if len(scales) == 1 and all(isinstance(a, ScaledAmplitude) and a.exact for a in amps):
        nums: dict = {}
        for ket, a in terms:
            nums[ket] = nums.get(ket, 0) + a.numerator
        state = WalkState(nums, scales.pop())
    else:
        nums = {}
        for ket, a in terms:
            v = a.value() if isinstance(a, ScaledAmplitude) else complex(a)
            nums[ket] = nums.get(ket, 0) + v
        state = WalkState(nums)
    total = norm_squared(state)
    if (state.exact and total != 1) or abs(total - 1) > 1e-12:
        raise NormalizationError(f"initial state has norm {total}, expected 1")
    return state


@dataclass(frozen=True)
class WalkSpec:
    kind: WalkKind
    steps: int
    coin: CoinSpec = HADAMARD
    shift: ShiftCase | None = None
    initial: InitialCondition = field(default=DEFAULT)

    def __post_init__(self):
        object.__setattr__(self, "kind", WalkKind(self.kind))
        if isinstance(self.shift, str):
            object.__setattr__(self, "shift", ShiftCase.from_id(self.shift))
        if self.steps < 0:
            raise ValueError("steps must be non-negative")
        if (self.shift is not None) != (self.kind is WalkKind.MEMORY):
            raise ValueError("a shift case is required for, and only for, memory walks")
        if self.kind is not WalkKind.CLASSICAL and not self.coin.quantum:
            raise ValueError("quantum walks need a quantum coin")


def memory_walk(steps: int, case: str = "c", initial: InitialCondition = DEFAULT,
                coin: CoinSpec = HADAMARD) -> WalkSpec:
    return WalkSpec(WalkKind.MEMORY, steps, coin, ShiftCase.from_id(case), initial)


def iter_states(spec: WalkSpec) -> Iterator[WalkState]:
    """Yield the quantum state after 0, 1, ..., ``spec.steps`` steps."""
    if spec.kind is WalkKind.CLASSICAL:
        raise ValueError("classical walks have no amplitude states")
    state = init_state(spec.initial, spec.kind)
    yield state
    for _ in range(spec.steps):
        state = step(state, spec.coin, spec.shift)
        yield state


def run(spec: WalkSpec) -> WalkState | Distribution:
    """Final state of a quantum walk, or the exact distribution of a classical one."""
    if spec.kind is WalkKind.CLASSICAL:
        return classical_distribution(spec.steps)
    for state in iter_states(spec):
        pass
    return state


def run_distribution(spec: WalkSpec) -> Distribution:
    out = run(spec)
    return out if isinstance(out, Distribution) else measure_positions(out)


def classical_distribution(steps: int) -> Distribution:
    """Exact fair-walk distribution from the origin, ``C(n, j) / 2**n``."""
    den = 1 << steps
    return Distribution(
        {2 * j - steps: Fraction(comb(steps, j), den) for j in range(steps + 1)}, steps
    )


def classical_order2_chain(steps: int) -> Distribution:
    """Evolve the classical memory chain: keep or reverse direction, 1/2 each.

    Starts from the right-mover at the origin.  Independent of
    :func:`classical_distribution`, which it must reproduce.
    """
    probs = {(-1, 0): Fraction(1)}
    for _ in range(steps):
        nxt: dict = {}
        for (prev, cur), w in probs.items():
            d = cur - prev
            for nd in (d, -d):
                key = (cur, cur + nd)
                nxt[key] = nxt.get(key, 0) + w / 2
        probs = nxt
    out: dict = {}
    for (_, cur), w in probs.items():
        out[cur] = out.get(cur, 0) + w
    return Distribution(out, steps)


def sample_classical(steps: int, trials: int, seed: int | None = None) -> Distribution:
    """Monte Carlo estimate of the classical distribution (demonstration only)."""
    rng = np.random.default_rng(seed)
    # Direction before the first step is +1 (arrived at 0 from -1).
    flips = rng.integers(0, 2, size=(trials, steps), dtype=np.int8)
    directions = np.where(np.cumsum(flips, axis=1) % 2, -1, 1)
    ends = directions.sum(axis=1)
    pos, counts = np.unique(ends, return_counts=True)
    return Distribution({int(k): c / trials for k, c in zip(pos, counts)}, steps)
