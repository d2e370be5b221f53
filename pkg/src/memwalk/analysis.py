"""Localization, symmetry and peak structure; three-walk comparisons."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .closed_form import AmplitudeQuery, closed_form_amplitude
from .combinatorics import Ending, path_sum_table
from .core import Distribution, ScaledAmplitude, amplitude_of
from .engine import (
    DEFAULT,
    InitialCondition,
    WalkKind,
    WalkSpec,
    iter_states,
    memory_walk,
    run_distribution,
)


@dataclass(frozen=True)
class OriginAmplitudes:
    n: int
    p0: Fraction
    lr: ScaledAmplitude  # |-1,0,0>
    rl: ScaledAmplitude  # |1,0,0>
    ll: ScaledAmplitude  # |1,0,1>
    rr: ScaledAmplitude  # |-1,0,1>

    @property
    def lr_plus_rl(self) -> Fraction:
        """``a_0LR + a_0RL``; rational because ``n`` is even."""
        den = 1 << (self.lr.scale_steps // 2)
        return Fraction(self.lr.numerator + self.rl.numerator, den)

    def claim_holds(self) -> bool:
        return self.lr.numerator > 0 and self.rl.numerator > 0 and self.lr_plus_rl == 1


@dataclass(frozen=True)
class LocalizationReport:
    initial: InitialCondition
    rows: tuple[OriginAmplitudes, ...] = field(default=())

    def __iter__(self):
        return iter(self.rows)

    def at(self, n: int) -> OriginAmplitudes:
        for r in self.rows:
            if r.n == n:
                return r
        raise KeyError(n)

    def sum_preserved(self) -> bool:
        """``a_0LR + a_0RL`` is the same at every even ``n``."""
        return len({r.lr_plus_rl for r in self.rows}) <= 1


def localization_series(max_n: int, initial: InitialCondition = DEFAULT) -> LocalizationReport:
    """Origin amplitudes of the Hadamard case-c walk at each even ``n <= max_n``."""
    if max_n < 2 or max_n % 2:
        raise ValueError("max_n must be an even integer >= 2")
    rows = []
    for state in iter_states(memory_walk(max_n, "c", initial)):
        n = state.steps_taken
        if n == 0 or n % 2:
            continue
        amp = {e: amplitude_of(state, e.ket(0)) for e in Ending}
        p0 = sum((a.squared() for a in amp.values()), Fraction(0))
        rows.append(OriginAmplitudes(n, p0, amp[Ending.LR], amp[Ending.RL],
                                     amp[Ending.LL], amp[Ending.RR]))
    return LocalizationReport(initial, tuple(rows))


@dataclass(frozen=True)
class SymmetryReport:
    violations: tuple[int, ...]

    @property
    def symmetric(self) -> bool:
        return not self.violations


def symmetry_check(dist: Distribution) -> SymmetryReport:
    """Positions ``k`` where ``P(k) != P(-k)``, compared exactly."""
    ks = set(dist.support) | {-k for k in dist.support}
    return SymmetryReport(tuple(sorted(k for k in ks if dist[k] != dist[-k])))


def peak_locations(dist: Distribution) -> list[int]:
    """Strict local maxima within the parity class of the support."""
    if not dist.support:
        return []
    lo, hi = dist.support[0], dist.support[-1]
    return [k for k in range(lo, hi + 1, 2) if dist[k] > dist[k - 2] and dist[k] > dist[k + 2]]


@dataclass(frozen=True)
class WalkComparison:
    steps: int
    classical: Distribution
    quantum: Distribution
    memory: Distribution

    @property
    def positions(self) -> list[int]:
        return list(range(-self.steps, self.steps + 1))

    def rows(self):
        """``(k, p_classical, p_quantum, p_memory)`` for every ``|k| <= steps``."""
        for k in self.positions:
            yield k, self.classical[k], self.quantum[k], self.memory[k]


def compare_walks(steps: int, initial: InitialCondition = DEFAULT, case: str = "c") -> WalkComparison:
    """Classical, memoryless and memory walks side by side.

    ``initial`` applies to both quantum walks; the classical walk always
    starts as a point mass at the origin.
    """
    return WalkComparison(
        steps,
        run_distribution(WalkSpec(WalkKind.CLASSICAL, steps)),
        run_distribution(WalkSpec(WalkKind.QUANTUM, steps, initial=initial)),
        run_distribution(memory_walk(steps, case, initial)),
    )


@dataclass(frozen=True)
class TriangleRow:
    n: int
    k: int
    ending: Ending
    engine: int
    oracle: int
    closed: int

    @property
    def agree(self) -> bool:
        return self.engine == self.oracle == self.closed


@dataclass(frozen=True)
class TriangleReport:
    rows: tuple[TriangleRow, ...]

    @property
    def compared(self) -> int:
        return len(self.rows)

    @property
    def mismatches(self) -> list[TriangleRow]:
        return [r for r in self.rows if not r.agree]


def triangle_equivalence(n_max: int, workers: int | None = None) -> TriangleReport:
    """Engine vs path enumeration vs closed form for every ``n <= n_max``.

    All three are compared as integer numerators at scale ``n``.
    """
    rows = []
    states = iter_states(memory_walk(n_max, "c"))
    next(states)
    for state in states:
        n = state.steps_taken
        oracle = path_sum_table(n, workers)
        for k in range(-n, n + 1, 2):
            for e in Ending:
                rows.append(TriangleRow(
                    n, k, e,
                    amplitude_of(state, e.ket(k)).numerator,
                    oracle.get((k, e), 0),
                    closed_form_amplitude(AmplitudeQuery(n, k, e)).numerator,
                ))
    return TriangleReport(tuple(rows))

