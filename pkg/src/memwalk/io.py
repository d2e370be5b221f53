"""CSV/JSON serialization of distributions and reports.

CSV files carry a header row.  Single distributions use floats to 12
significant digits; comparison tables keep full float precision so each
column still sums to 1 within 1e-12.  JSON documents are versioned by a
top-level ``"schema": 1`` and store exact probabilities as ``"num/den"``
strings.
"""
from __future__ import annotations

import csv
import io
import json
import sys
from contextlib import contextmanager
from fractions import Fraction

from .analysis import LocalizationReport, WalkComparison
from .core import Distribution

SCHEMA = 1


def fmt_float(x) -> str:
    return format(float(x), ".12g")


def fmt_full(x) -> str:
    """Shortest string that round-trips the float."""
    return repr(float(x))


def fmt_exact(x) -> str | float:
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return float(x)


def parse_exact(s) -> Fraction | float:
    return Fraction(s) if isinstance(s, str) else float(s)


@contextmanager
def _opened(path):
    if path is None or str(path) == "-":
        yield sys.stdout
    else:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            yield fh


def _write_csv(path, header, rows):
    with _opened(path) as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)


def _write_json(path, doc):
    with _opened(path) as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")


def write_distribution(dist: Distribution, path=None, fmt="csv", **meta) -> None:
    if fmt == "csv":
        _write_csv(path, ["position", "probability"],
                   [(k, fmt_float(v)) for k, v in dist.probs.items()])
    else:
        _write_json(path, {
            "schema": SCHEMA,
            **meta,
            "steps": dist.steps,
            "exact": dist.exact,
            "distribution": [{"position": k, "probability": fmt_exact(v)}
                             for k, v in dist.probs.items()],
        })


def read_distribution(text: str, fmt="csv") -> Distribution:
    """Parse the output of :func:`write_distribution`."""
    if fmt == "csv":
        rows = list(csv.DictReader(io.StringIO(text)))
        return Distribution({int(r["position"]): float(r["probability"]) for r in rows})
    doc = json.loads(text)
    if doc.get("schema") != SCHEMA:
        raise ValueError(f"unsupported schema {doc.get('schema')!r}")
    return Distribution({int(e["position"]): parse_exact(e["probability"])
                         for e in doc["distribution"]}, doc["steps"])


COMPARISON_HEADER = ["position", "p_classical", "p_quantum", "p_memory"]


def write_comparison(cmp: WalkComparison, path=None, fmt="csv", **meta) -> None:
    if fmt == "csv":
        _write_csv(path, COMPARISON_HEADER,
                   [(k, *map(fmt_full, ps)) for k, *ps in cmp.rows()])
    else:
        _write_json(path, {
            "schema": SCHEMA,
            **meta,
            "steps": cmp.steps,
            "rows": [dict(zip(COMPARISON_HEADER, (k, *map(fmt_exact, ps))))
                     for k, *ps in cmp.rows()],
        })


def write_localization(report: LocalizationReport, path=None, fmt="csv") -> None:
    header = ["n", "p0", "a0_LR", "a0_RL", "a0_LL", "a0_RR"]
    if fmt == "csv":
        _write_csv(path, header, [
            (r.n, fmt_float(r.p0), *(fmt_float(a.value()) for a in (r.lr, r.rl, r.ll, r.rr)))
            for r in report
        ])
    else:
        _write_json(path, {
            "schema": SCHEMA,
            "initial": report.initial.preset,
            "rows": [{
                "n": r.n,
                "p0": fmt_exact(r.p0),
                "scale_steps": r.lr.scale_steps,
                # amplitudes as integer numerators at 2**(-scale_steps/2)
                **{f"a0_{e}": a.numerator for e, a in
                   (("LR", r.lr), ("RL", r.rl), ("LL", r.ll), ("RR", r.rr))},
            } for r in report],
        })


def write_amplitudes(n: int, rows, path=None, fmt="csv") -> None:
    """Rows of ``(k, probability, {ending: numerator})`` at scale ``n``."""
    endings = ["LL", "LR", "RL", "RR"]
    if fmt == "csv":
        _write_csv(path, ["position", "probability", *(f"num_{e}" for e in endings)],
                   [(k, fmt_float(p), *(nums[e] for e in endings)) for k, p, nums in rows])
    else:
        _write_json(path, {
            "schema": SCHEMA,
            "steps": n,
            "scale_steps": n,
            "rows": [{"position": k, "probability": fmt_exact(p),
                      "numerators": {e: nums[e] for e in endings}} for k, p, nums in rows],
        })
