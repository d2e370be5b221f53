"""Path statistics, the isolated-move phase rule, and composition counts.

A walk is a string over ``{L, R}``.  Walks of the memory walk from
``|-1,0,0>`` are written with a fixed ``"LR"`` prefix: the arrival at the
origin from the left, plus the virtual move before it that makes the
coin bit 0.  ``n`` physical steps therefore give ``n + 2`` letters.
"""
from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import comb
from typing import NamedTuple

from .core import Order2, ScaledAmplitude, WalkState
from .operators import HADAMARD, SHIFT_CASES, apply_coin, apply_shift

PREFIX = "LR"


class Ending(str, Enum):
    """Last two moves of a walk; selects the final ket at position ``k``."""

    LL = "LL"
    LR = "LR"
    RL = "RL"
    RR = "RR"

    def ket(self, k: int) -> Order2:
        prev = k - 1 if self.value[1] == "R" else k + 1
        p = int(self.value[0] == self.value[1])
        return Order2(prev, k, p)

    @classmethod
    def of_ket(cls, ket: Order2) -> "Ending":
        last = "R" if ket.right_mover else "L"
        before = last if ket.p else ("L" if last == "R" else "R")
        return cls(before + last)


def _check_moves(seq: str) -> str:
    seq = "".join(seq)
    if not seq:
        raise ValueError("empty step sequence")
    if set(seq) - {"L", "R"}:
        raise ValueError(f"moves must be L or R, got {seq!r}")
    return seq


@dataclass(frozen=True)
class PathStats:
    n_left: int
    n_right: int
    isolated_left: int
    isolated_right: int
    clusters_left: int
    clusters_right: int


def path_stats(seq: str) -> PathStats:
    seq = _check_moves(seq)
    counts = {"L": [0, 0, 0], "R": [0, 0, 0]}  # moves, isolated, clusters
    for letter, run in itertools.groupby(seq):
        size = sum(1 for _ in run)
        c = counts[letter]
        c[0] += size
        c[1] += size == 1
        c[2] += 1
    (nl, il, cl), (nr, ir, cr) = counts["L"], counts["R"]
    return PathStats(nl, nr, il, ir, cl, cr)


def path_phase(seq: str) -> int:
    """Sign ``(-1)**(N_L + N_R + N_L1 + N_R1)`` of a Hadamard case-c path."""
    s = path_stats(seq)
    return -1 if (s.n_left + s.n_right + s.isolated_left + s.isolated_right) % 2 else 1


def binom(a: int, b: int) -> int:
    """Binomial coefficient, zero outside ``0 <= b <= a``."""
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


def combn(a: int, b: int, c: int) -> int:
    """``binom(a, b) * binom(c - a - 1, a - b - 1)``.

    Counts compositions of ``c`` into ``a`` parts with exactly ``b`` ones,
    except in the all-ones case ``a == b == c`` where it gives 0.
    """
    return binom(a, b) * binom(c - a - 1, a - b - 1)


def compositions_with_ones(n: int, parts: int, ones: int) -> int:
    """Number of compositions of ``n`` into ``parts`` parts with ``ones`` ones."""
    if n == parts == ones and n >= 1:
        return 1
    return combn(parts, ones, n)


class OnesBounds(NamedTuple):
    lo: int
    hi: int
    all_ones: bool = False


def ones_bounds(n: int, parts: int) -> OnesBounds:
    """Range of the number of ones over compositions of ``n`` into ``parts`` parts.

    When ``n == parts`` the only composition is all ones, flagged by
    ``all_ones``.
    """
    if not 1 <= parts <= n:
        raise ValueError(f"need 1 <= parts <= n, got n={n}, parts={parts}")
    if n == parts:
        return OnesBounds(n, n, True)
    return OnesBounds(max(0, 2 * parts - n), parts - 1)


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("MEMWALK_THREADS", "1")))
    except ValueError:
        return 1


def _tally_chunk(n: int, start: int, stop: int) -> dict:
    out: dict = {}
    table = str.maketrans("01", "LR")
    for i in range(start, stop):
        seq = PREFIX + format(i, f"0{n}b").translate(table)
        key = (seq.count("R") - seq.count("L"), seq[-2:])
        out[key] = out.get(key, 0) + path_phase(seq)
    return out


@lru_cache(maxsize=32)
def _path_sum_table(n: int, workers: int) -> dict:
    total = 1 << n
    chunk = max(1, total // (4 * workers))
    bounds = [(n, lo, min(lo + chunk, total)) for lo in range(0, total, chunk)]
    if workers > 1 and len(bounds) > 1:
        with ProcessPoolExecutor(workers) as pool:
            parts = list(pool.map(_tally_chunk, *zip(*bounds)))
    else:
        parts = [_tally_chunk(*b) for b in bounds]
    merged: dict = {}
    for part in parts:
        for key, v in part.items():
            merged[key] = merged.get(key, 0) + v
    return {(k, Ending(e)): v for (k, e), v in merged.items()}


def path_sum_table(n: int, workers: int | None = None) -> dict[tuple[int, Ending], int]:
    """Signed path counts for every ``(k, ending)`` after ``n`` steps.

    Enumerates all ``2**n`` suffixes of the ``LR`` prefix once.  Values are
    amplitude numerators at scale ``n``; missing keys are zero.
    """
    if n < 1:
        raise ValueError("need at least one step")
    return dict(_path_sum_table(n, workers or _threads()))


def path_sum_amplitude(n: int, k: int, ending: Ending | str, workers: int | None = None) -> ScaledAmplitude:
    """Brute-force amplitude of ``ending.ket(k)`` after ``n`` steps."""
    ending = Ending(ending)
    if (n - k) % 2 or abs(k) > n:
        return ScaledAmplitude(0, n)
    return ScaledAmplitude(path_sum_table(n, workers).get((k, ending), 0), n)


def traced_path_amplitude(moves: str) -> ScaledAmplitude:
    """Amplitude of one path, obtained by running the operators along it.

    Starts from ``|-1,0,0>`` and after each Hadamard coin + case-c shift keeps
    only the ket the path moves to.  ``moves`` excludes the ``LR`` prefix.
    """
    moves = _check_moves(moves)
    state = WalkState.basis(Order2(-1, 0, 0))
    shift = SHIFT_CASES["c"]
    pos = 0
    for m in moves:
        nxt = pos + (1 if m == "R" else -1)
        state = apply_shift(apply_coin(state, HADAMARD), shift)
        kept = {k: v for k, v in state.numerators.items() if (k.n2, k.n1) == (pos, nxt)}
        if len(kept) != 1:
            raise AssertionError(f"path branch not unique at {moves!r}: {kept}")
        state = WalkState(kept, state.scale)
        pos = nxt
    (num,) = state.numerators.values()
    return ScaledAmplitude(num, state.scale)
