"""Command-line entry point: ``memwalk <subcommand> [options]``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io as mio
from .analysis import compare_walks, localization_series, triangle_equivalence
from .closed_form import AmplitudeQuery, closed_form_amplitude
from .combinatorics import Ending
from .engine import InitialCondition, WalkKind, WalkSpec, run_distribution
from .operators import CoinSpec, CoinError, ShiftCase

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3
VERIFY_LIMIT = 20


def read_config(path) -> list[str]:
    """``key = value`` lines to ``--key value`` arguments; ``#`` starts a comment."""
    args = []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ValueError(f"{path}:{lineno}: expected key=value")
        args += ["--" + key.strip().replace("_", "-"), value.strip()]
    return args


def _coin(text: str | None) -> CoinSpec:
    if text is None or text == "hadamard":
        return CoinSpec.hadamard()
    try:
        return CoinSpec.general(*(complex(x.replace(" ", "")) for x in text.split(",")))
    except (TypeError, ValueError) as exc:
        raise argparse.ArgumentTypeError(f"bad coin {text!r}: {exc}") from None


def _non_negative(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="memwalk", description=__doc__.splitlines()[0])
    parser.add_argument("--config", help="key=value file of default options")
    sub = parser.add_subparsers(dest="command", required=True)

    def output_opts(p):
        p.add_argument("--format", choices=["csv", "json"], default="csv")
        p.add_argument("--output", "-o", default="-", help="file path, or - for stdout")

    p = sub.add_parser("simulate", help="distribution of one walk")
    p.add_argument("--kind", choices=[k.value for k in WalkKind], default="memory")
    p.add_argument("--case", choices=list("abcd"), default="c")
    p.add_argument("--coin", type=_coin, default=None,
                   help="'hadamard' or a,b,c,d (complex entries allowed)")
    p.add_argument("--initial", choices=["default", "symmetric"], default="default")
    p.add_argument("--steps", type=_non_negative, required=True)
    output_opts(p)

    p = sub.add_parser("closed-form", help="closed-form amplitudes and probabilities")
    p.add_argument("--steps", type=_non_negative, required=True)
    output_opts(p)

    p = sub.add_parser("verify", help="engine / path sum / closed form agreement")
    p.add_argument("--n-max", type=_non_negative, required=True)
    p.add_argument("--show", action="store_true", help="print every compared tuple")

    p = sub.add_parser("figures", help="data behind the three comparison figures")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--output", "-o", default=".", help="directory for fig1..fig3")

    p = sub.add_parser("localization", help="origin amplitudes at even step counts")
    p.add_argument("--max-n", type=_non_negative, required=True)
    p.add_argument("--initial", choices=["default", "symmetric"], default="default")
    output_opts(p)
    return parser


def parse_args(argv=None) -> argparse.Namespace:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, rest = pre.parse_known_args(argv)
    if known.config:
        try:
            extra = read_config(known.config)
        except (OSError, ValueError) as exc:
            parser.error(str(exc))
        if not rest:
            parser.error("a subcommand is required")
        # Config goes first so explicit flags win.
        argv = [rest[0], *extra, *rest[1:]]
    args = parser.parse_args(argv)
    _validate(parser, args)
    return args


def _validate(parser, args):
    if args.command == "simulate":
        if args.kind != "memory" and args.case != "c":
            parser.error("--case applies to memory walks only")
        if args.kind == "classical" and args.coin is not None:
            parser.error("--coin does not apply to the classical walk")
    elif args.command == "verify" and args.n_max > VERIFY_LIMIT:
        parser.error(f"--n-max must be at most {VERIFY_LIMIT}")
    elif args.command == "closed-form" and args.steps < 1:
        parser.error("--steps must be at least 1")
    elif args.command == "localization" and (args.max_n < 2 or args.max_n % 2):
        parser.error("--max-n must be even and at least 2")


def cmd_simulate(args) -> int:
    kind = WalkKind(args.kind)
    spec = WalkSpec(
        kind,
        args.steps,
        coin=args.coin or CoinSpec.hadamard(),
        shift=ShiftCase.from_id(args.case) if kind is WalkKind.MEMORY else None,
        initial=InitialCondition(args.initial),
    )
    dist = run_distribution(spec)
    meta = {"kind": kind.value, "initial": args.initial}
    if kind is WalkKind.MEMORY:
        meta["case"] = args.case
    mio.write_distribution(dist, args.output, args.format, **meta)
    return EXIT_OK


def cmd_closed_form(args) -> int:
    n = args.steps
    rows = []
    for k in range(-n, n + 1, 2):
        amps = {e.value: closed_form_amplitude(AmplitudeQuery(n, k, e)) for e in Ending}
        prob = sum(a.squared() for a in amps.values())
        rows.append((k, prob, {e: a.numerator for e, a in amps.items()}))
    mio.write_amplitudes(n, rows, args.output, args.format)
    return EXIT_OK


def cmd_verify(args) -> int:
    report = triangle_equivalence(args.n_max) if args.n_max >= 1 else None
    rows = report.rows if report else ()
    if args.show:
        for r in rows:
            print(f"({r.n}, {r.k}, {r.ending.value}): engine {r.engine}, "
                  f"oracle {r.oracle}, closed-form {r.closed}  [scale 2^-{r.n}/2]")
    bad = [r for r in rows if not r.agree]
    print(f"{len(rows)} tuples compared, {len(bad)} mismatches")
    for r in bad:
        print(f"MISMATCH n={r.n} k={r.k} ending={r.ending.value}: "
              f"engine={r.engine} oracle={r.oracle} closed_form={r.closed}", file=sys.stderr)
    return EXIT_MISMATCH if bad else EXIT_OK


FIGURES = {
    "fig1": (10, "default"),
    "fig2": (40, "default"),
    "fig3": (40, "symmetric"),
}


def cmd_figures(args) -> int:
    out = Path(args.output)
    out.mkdir(parents=True, exist_ok=True)
    for name, (steps, preset) in FIGURES.items():
        cmp = compare_walks(steps, InitialCondition(preset))
        path = out / f"{name}.{args.format}"
        mio.write_comparison(cmp, path, args.format, figure=name, initial=preset)
        print(path)
    return EXIT_OK


def cmd_localization(args) -> int:
    report = localization_series(args.max_n, InitialCondition(args.initial))
    mio.write_localization(report, args.output, args.format)
    return EXIT_OK


COMMANDS = {
    "simulate": cmd_simulate,
    "closed-form": cmd_closed_form,
    "verify": cmd_verify,
    "figures": cmd_figures,
    "localization": cmd_localization,
}


def main(argv=None) -> int:
    try:
        args = parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except CoinError as exc:
        print(f"memwalk: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"memwalk: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
