"""Closed-form amplitudes of the Hadamard memory walk (shift case c).

Each amplitude is a sum over cluster counts ``C`` and numbers of isolated
moves, weighted by composition counts :func:`combn` and by the fraction of
compositions whose first/last part has the size forced by the ``LR``
prefix and the ending.  The right-hand sides are integers: the amplitude
numerator at scale ``n``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .combinatorics import Ending, combn
from .core import Distribution, ScaledAmplitude


def _span(lo: int, hi: int) -> range:
    # Empty when lo > hi.
    return range(lo, hi + 1)


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


@dataclass(frozen=True)
class AmplitudeQuery:
    n: int
    k: int
    ending: Ending

    def __post_init__(self):
        object.__setattr__(self, "ending", Ending(self.ending))
        if self.n < 1:
            raise ValueError("need at least one step")

    @property
    def n_right(self) -> Fraction:
        return Fraction(self.n + 2 + self.k, 2)

    @property
    def n_left(self) -> Fraction:
        return Fraction(self.n + 2 - self.k, 2)

    @property
    def reachable(self) -> bool:
        return (self.n - self.k) % 2 == 0 and self.n_left >= 1 and self.n_right >= 1


def _a_ll(n, nl, nr):
    t = Fraction(0)
    for c in _span(2, nl - 1):
        for l1 in _span(max(1, 2 * c - nl), c - 1):
            for r1 in _span(max(0, 2 * c - nr - 2), c - 2):
                t += (_sign(n + l1 + r1) * Fraction(l1 * (c - l1), c * (c - 1))
                      * combn(c, l1, nl) * combn(c - 1, r1, nr))
    for l1 in _span(max(1, 2 * nr - nl + 2), nr):
        t += _sign(nl + l1) * Fraction(l1 * (nr - l1 + 1), nr * (nr + 1)) * combn(nr + 1, l1, nl)
    return t


def _a_lr(n, nl, nr):
    t = Fraction(int(nl == nr))
    for c in _span(2, nl - 1):
        for l1 in _span(max(1, 2 * c - nl), c - 1):
            for r1 in _span(max(1, 2 * c - nr), c - 1):
                t += (_sign(n + l1 + r1) * Fraction(l1 * r1, c * c)
                      * combn(c, l1, nl) * combn(c, r1, nr))
    for l1 in _span(max(1, 2 * nr - nl), nr - 1):
        t += _sign(nl + l1) * Fraction(l1, nr) * combn(nr, l1, nl)
    for r1 in _span(max(1, 2 * nl - nr), nl - 1):
        t += _sign(nr + r1) * Fraction(r1, nl) * combn(nl, r1, nr)
    return t


def _a_rl(n, nl, nr):
    t = Fraction(int(nl - 1 == nr))
    for c in _span(2, nl - 1):
        for l1 in _span(max(2, 2 * c - nl), c - 1):
            for r1 in _span(max(0, 2 * c - nr - 2), c - 2):
                t += (_sign(n + l1 + r1) * Fraction(l1 * (l1 - 1), c * (c - 1))
                      * combn(c, l1, nl) * combn(c - 1, r1, nr))
    for l1 in _span(max(2, 2 * nr - nl + 2), nr):
        t += (_sign(nl + l1) * Fraction(l1 * (l1 - 1), nr * (nr + 1))
              * combn(nr + 1, l1, nl))
    for r1 in _span(max(0, 2 * nl - nr - 2), nl - 2):
        t += _sign(nr + r1) * combn(nl - 1, r1, nr)
    return t


def _a_rr(n, nl, nr):
    t = Fraction(0)
    for c in _span(1, nl - 1):
        for l1 in _span(max(1, 2 * c - nl), c - 1):
            for r1 in _span(max(0, 2 * c - nr), c - 1):
                # The R composition has c parts (walk starts with L, ends with R),
                # so the count is combn(c, r1, nr), not combn(c - 1, r1, nr).
                t += (_sign(n + l1 + r1) * Fraction(l1 * (c - r1), c * c)
                      * combn(c, l1, nl) * combn(c, r1, nr))
    for r1 in _span(max(0, 2 * nl - nr), nl - 1):
        t += _sign(nr + r1) * Fraction(nl - r1, nl) * combn(nl, r1, nr)
    return t


_FORMULAS = {Ending.LL: _a_ll, Ending.LR: _a_lr, Ending.RL: _a_rl, Ending.RR: _a_rr}


def closed_form_amplitude(q: AmplitudeQuery) -> ScaledAmplitude:
    """Amplitude of ``q.ending.ket(q.k)`` after ``q.n`` steps from ``|-1,0,0>``."""
    if not q.reachable:
        return ScaledAmplitude(0, q.n)
    nl, nr = int(q.n_left), int(q.n_right)
    value = _FORMULAS[q.ending](q.n, nl, nr)
    if value.denominator != 1:
        raise ArithmeticError(f"non-integer amplitude numerator {value} for {q}")
    return ScaledAmplitude(int(value), q.n)


def closed_form_probability(n: int, k: int) -> Fraction:
    total = Fraction(0)
    for e in Ending:
        total += closed_form_amplitude(AmplitudeQuery(n, k, e)).squared()
    return total


def closed_form_distribution(n: int) -> Distribution:
    return Distribution({k: closed_form_probability(n, k) for k in range(-n, n + 1, 2)}, n)
