"""States, amplitudes and measurement for walks on the integer line.

Amplitudes are stored as numerators over a single per-state scale
``2**(scale/2)``.  Every Hadamard branch contributes ``+-2**(-n/2)``, so with
a shared scale the whole superposition is integer arithmetic and
probabilities come out as exact dyadic rationals.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Mapping, Union

# Float-path states prune entries below this magnitude and accept
# normalisation within the same tolerance.
FLOAT_TOL = 1e-12


class NormalizationError(ValueError):
    """A state or distribution does not carry unit total probability."""


@dataclass(frozen=True, order=True)
class Classical:
    """Classical walker at position ``n``."""

    n: int

    @property
    def position(self) -> int:
        return self.n


@dataclass(frozen=True, order=True)
class Order1:
    """Memoryless quantum ket ``|n, p>``."""

    n: int
    p: int

    def __post_init__(self):
        if self.p not in (0, 1):
            raise ValueError(f"coin bit must be 0 or 1, got {self.p!r}")

    @property
    def position(self) -> int:
        return self.n


@dataclass(frozen=True, order=True)
class Order2:
    """Two-step memory ket ``|n2, n1, p>``; ``n1`` is the current position."""

    n2: int
    n1: int
    p: int

    def __post_init__(self):
        if abs(self.n2 - self.n1) != 1:
            raise ValueError(
                f"previous and current positions must be adjacent, got {self.n2}, {self.n1}"
            )
        if self.p not in (0, 1):
            raise ValueError(f"coin bit must be 0 or 1, got {self.p!r}")

    @property
    def position(self) -> int:
        return self.n1

    @property
    def right_mover(self) -> bool:
        return self.n2 == self.n1 - 1


BasisState = Union[Classical, Order1, Order2]
Number = Union[int, float, complex]


def _is_exact(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


@dataclass(frozen=True)
class ScaledAmplitude:
    """Amplitude ``numerator * 2**(-scale_steps/2)``.

    Equality compares the ``(numerator, scale_steps)`` pair; use
    :meth:`same_value` to compare across scales.
    """

    numerator: Number
    scale_steps: int

    def __post_init__(self):
        if self.scale_steps < 0:
            raise ValueError("scale_steps must be non-negative")

    @property
    def exact(self) -> bool:
        return _is_exact(self.numerator)

    def value(self) -> float | complex:
        """Float view, for reporting only."""
        if self.exact:
            # ldexp keeps the power of two exact for even scales.
            half, odd = divmod(self.scale_steps, 2)
            v = math.ldexp(self.numerator, -half)
            return v / math.sqrt(2) if odd else v
        return self.numerator * 2.0 ** (-self.scale_steps / 2)

    def squared(self) -> Fraction | float:
        """``|amplitude|**2``; an exact rational for integer numerators."""
        if self.exact:
            return Fraction(self.numerator * self.numerator, 1 << self.scale_steps)
        return abs(self.numerator) ** 2 / 2.0**self.scale_steps

    def rescaled(self, scale_steps: int) -> "ScaledAmplitude":
        """Same value at a larger scale of matching parity."""
        diff = scale_steps - self.scale_steps
        if diff < 0 or diff % 2:
            raise ValueError(f"cannot rescale {self.scale_steps} -> {scale_steps}")
        return ScaledAmplitude(self.numerator * (1 << (diff // 2)), scale_steps)

    def same_value(self, other: "ScaledAmplitude") -> bool:
        if (self.scale_steps - other.scale_steps) % 2:
            # sqrt(2) is irrational, so only zero can match across odd offsets.
            return self.numerator == 0 and other.numerator == 0
        top = max(self.scale_steps, other.scale_steps)
        return self.rescaled(top).numerator == other.rescaled(top).numerator

    def __neg__(self):
        return ScaledAmplitude(-self.numerator, self.scale_steps)

    def __add__(self, other):
        if not isinstance(other, ScaledAmplitude):
            return NotImplemented
        if other.scale_steps != self.scale_steps:
            raise ValueError("amplitudes at different scales")
        return ScaledAmplitude(self.numerator + other.numerator, self.scale_steps)

    def __str__(self):
        if not self.exact:
            return f"{self.value():.12g}"
        if self.scale_steps % 2 == 0:
            return str(Fraction(self.numerator, 1 << (self.scale_steps // 2)))
        return f"{Fraction(self.numerator, 1 << (self.scale_steps // 2))}/sqrt(2)"


def _kind(ket) -> type:
    t = type(ket)
    if t not in (Classical, Order1, Order2):
        raise TypeError(f"not a basis state: {ket!r}")
    return t


@dataclass(frozen=True)
class WalkState:
    """Sparse superposition with one shared amplitude scale.

    ``numerators`` maps basis kets to numerators; zero entries are pruned
    at construction so equal states compare equal.
    """

    numerators: Mapping[BasisState, Number]
    scale: int = 0
    steps_taken: int = 0
    kind: type = field(init=False, compare=False)

    def __post_init__(self):
        pruned = {}
        for ket, num in self.numerators.items():
            if _is_exact(num):
                if num:
                    pruned[ket] = num
            elif abs(num) * 2.0 ** (-self.scale / 2) > FLOAT_TOL / 1e3:
                pruned[ket] = num
        kinds = {_kind(k) for k in pruned}
        if len(kinds) > 1:
            raise TypeError(f"mixed basis kinds in one state: {sorted(k.__name__ for k in kinds)}")
        object.__setattr__(self, "numerators", dict(sorted(pruned.items())))
        object.__setattr__(self, "kind", kinds.pop() if kinds else type(None))

    @classmethod
    def basis(cls, ket: BasisState) -> "WalkState":
        return cls({ket: 1})

    @property
    def exact(self) -> bool:
        return all(_is_exact(v) for v in self.numerators.values())

    def __len__(self):
        return len(self.numerators)

    def __iter__(self) -> Iterator[BasisState]:
        return iter(self.numerators)

    def items(self) -> Iterator[tuple[BasisState, ScaledAmplitude]]:
        for ket, num in self.numerators.items():
            yield ket, ScaledAmplitude(num, self.scale)

    def reduced(self) -> "WalkState":
        """Lower the scale by factors of two while numerators stay integral."""
        if not self.exact:
            return self
        nums, scale = dict(self.numerators), self.scale
        if not nums:
            return WalkState({}, 0, self.steps_taken)
        while scale >= 2 and all(v % 2 == 0 for v in nums.values()):
            nums = {k: v // 2 for k, v in nums.items()}
            scale -= 2
        return WalkState(nums, scale, self.steps_taken)

    def same_as(self, other: "WalkState") -> bool:
        """Value equality regardless of the chosen scale."""
        a, b = self.reduced(), other.reduced()
        return a.scale == b.scale and a.numerators == b.numerators


def norm_squared(state: WalkState) -> Fraction | float:
    """Sum of ``|amplitude|**2``; exact for integer states."""
    if state.exact:
        return Fraction(sum(v * v for v in state.numerators.values()), 1 << state.scale)
    return sum(abs(v) ** 2 for v in state.numerators.values()) / 2.0**state.scale


def amplitude_of(state: WalkState, ket: BasisState) -> ScaledAmplitude:
    return ScaledAmplitude(state.numerators.get(ket, 0), state.scale)


@dataclass(frozen=True)
class Distribution:
    """Position probabilities after ``steps`` steps.

    Values are :class:`~fractions.Fraction` for exact runs and ``float``
    otherwise.  Zero-probability positions are omitted; ``self[k]`` returns
    zero for them.
    """

    probs: Mapping[int, Fraction | float]
    steps: int = 0

    def __post_init__(self):
        object.__setattr__(self, "probs", {k: v for k, v in sorted(self.probs.items()) if v})

    @property
    def exact(self) -> bool:
        return all(isinstance(v, Fraction) for v in self.probs.values())

    @property
    def total(self) -> Fraction | float:
        if self.exact:
            return sum(self.probs.values(), Fraction(0))
        return math.fsum(float(v) for v in self.probs.values())

    @property
    def support(self) -> list[int]:
        return list(self.probs)

    def __getitem__(self, k: int) -> Fraction | float:
        return self.probs.get(k, Fraction(0) if self.exact else 0.0)

    def as_floats(self) -> dict[int, float]:
        return {k: float(v) for k, v in self.probs.items()}

    def reflected(self, offset: int = 0) -> "Distribution":
        """Distribution of ``offset - X``."""
        return Distribution({offset - k: v for k, v in self.probs.items()}, self.steps)


def measure_positions(state: WalkState) -> Distribution:
    """Probability of each current position (``n1`` for memory kets)."""
    total = norm_squared(state)
    if state.exact:
        if total != 1:
            raise NormalizationError(f"state norm is {total}, expected 1")
    elif abs(total - 1) > FLOAT_TOL:
        raise NormalizationError(f"state norm is {total!r}, expected 1")
    probs: dict[int, Fraction | float] = {}
    for ket, amp in state.items():
        probs[ket.position] = probs.get(ket.position, 0) + amp.squared()
    return Distribution(probs, state.steps_taken)
