"""Command-line surface: every library operation as a subcommand emitting
one CSV or JSON table, with deterministic parallel parameter sweeps.

Exit codes: 0 success, 2 usage error, 1 internal error. Identical configs
produce identical output bytes for any worker count.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import counting, stats
from .arith import is_prime, primes_in
from .counting import Family
from .dynamics import (
    DEFAULT_SIZE_CUTOFF_BITS,
    MapSpec,
    OrbitRecord,
    fixed_points_mod,
    integer_fixed_points,
    orbit_mod,
    orbit_rational,
)
from .stats import CoeffFilter, CountMode, DensityKind
from .sweep import JOBS_ENV_VAR, parallel_map, resolve_jobs
from .tables import Table, list_token, write_text

MAX_ABS = 2**63

_FAMILY_TOKENS = {f.value: f for f in Family}
_FILTER_TOKENS = {f.value: f for f in CoeffFilter}
_MODE_TOKENS = {m.value: m for m in CountMode}
_KIND_TOKENS = {k.value: k for k in DensityKind}


class UsageError(Exception):
    """Bad flag combination or value; reported with exit status 2."""


def _span(text: str) -> tuple[int, int]:
    """Inclusive LO:HI range; a bare integer means LO == HI."""
    lo_text, sep, hi_text = text.partition(":")
    try:
        lo = int(lo_text)
        hi = int(hi_text) if sep else lo
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected INT or LO:HI, got {text!r}")
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}: lo > hi")
    if max(abs(lo), abs(hi)) > MAX_ABS:
        raise argparse.ArgumentTypeError(f"range {text!r} exceeds 63-bit bounds")
    return lo, hi


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected INT or NUM/DEN, got {text!r}")


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _family_primes(span: tuple[int, int], family: Family, flag: str) -> list[int]:
    """Primes in the span valid for the family; single values are strict."""
    lo, hi = span
    min_p = counting.FAMILY_MIN_PRIME[family]
    if lo == hi:
        if not is_prime(lo):
            raise UsageError(f"{flag}: {lo} is not prime")
        if lo < min_p:
            raise UsageError(
                f"{flag}: family {family.value} needs a prime >= {min_p}, got {lo}"
            )
        return [lo]
    primes = primes_in(max(lo, min_p), hi) if max(lo, min_p) <= hi else []
    if not primes:
        raise UsageError(
            f"{flag}: no primes >= {min_p} (family {family.value}) in {lo}:{hi}"
        )
    return primes


def _plain_primes(span: tuple[int, int], flag: str) -> list[int]:
    lo, hi = span
    if lo == hi:
        if not is_prime(lo):
            raise UsageError(f"{flag}: {lo} is not prime")
        return [lo]
    primes = primes_in(max(lo, 2), hi) if max(lo, 2) <= hi else []
    if not primes:
        raise UsageError(f"{flag}: no primes in {lo}:{hi}")
    return primes


def _emit(args: argparse.Namespace, table: Table) -> int:
    write_text(table.render(args.format), args.output)
    return 0


# --- grid cell workers; module-level so process pools can pickle them ----

def _comparison_cells(rec: counting.ComparisonRecord) -> tuple:
    pred = rec.prediction
    predicted = pred.predicted if pred.covered else "-"
    return (
        rec.family.value,
        int(rec.p),
        rec.c,
        rec.literal,
        predicted,
        pred.rule,
        rec.verdict.value,
    )


def _verify_cell(item: tuple) -> tuple:
    family, c, p, extended = item
    return _comparison_cells(counting.verify_prediction(family, c, p, extended))


def _count_cell(item: tuple) -> tuple:
    family, c, p, mode, extended = item
    if mode == "both":
        return _verify_cell((family, c, p, extended))
    if mode == "literal":
        literal = counting.count_fixed_points(family, c, p)
        return (family.value, p, c, literal, "-", "-", "-")
    pred = counting.predict(family, c, p, extended=extended)
    predicted = pred.predicted if pred.covered else "-"
    return (family.value, p, c, "-", predicted, pred.rule, "-")


def _fixed_cell(item: tuple) -> tuple:
    d, c, p = item
    report = fixed_points_mod(MapSpec(d, c), p)
    return (d, c, int(report.p), report.literal_count, list_token(report.residues))


def _integer_roots_cell(item: tuple) -> tuple:
    d, c = item
    roots = integer_fixed_points(MapSpec(d, c))
    return (d, c, "-", len(roots), list_token(roots))


def _fields_cell(item: tuple) -> tuple:
    degree, x_cap = item
    rep = stats.family_count(degree, x_cap)
    return (
        rep.degree,
        rep.X,
        rep.coefficient_bound,
        rep.total,
        rep.with_integer_root,
        rep.without_integer_root,
    )


# --- subcommand handlers --------------------------------------------------

def _orbit_row(table: Table, d, c, z0, modulus, rec: OrbitRecord) -> None:
    table.append(
        d,
        str(c),
        str(z0),
        modulus,
        rec.status.value,
        rec.preperiod,
        rec.period,
        list_token(rec.tail),
        list_token(rec.cycle),
    )


def _run_orbit(args: argparse.Namespace) -> int:
    table = Table(
        ("d", "c", "z0", "modulus", "status", "preperiod", "period", "tail", "cycle")
    )
    if args.rational:
        if args.p is not None:
            raise UsageError("--p: not allowed together with --rational")
        rec = orbit_rational(MapSpec(args.d, args.c), args.z0, args.max_bits)
        _orbit_row(table, args.d, args.c, args.z0, "-", rec)
        return _emit(args, table)
    if args.p is None:
        raise UsageError("--p: required unless --rational is given")
    if not is_prime(args.p):
        raise UsageError(f"--p: {args.p} is not prime")
    if args.c.denominator != 1 or args.z0.denominator != 1:
        raise UsageError("--c/--z0: modular orbits need integers (or pass --rational)")
    c = int(args.c)
    z0 = int(args.z0)
    if not 0 <= z0 < args.p:
        raise UsageError(f"--z0: must lie in [0, {args.p - 1}], got {z0}")
    rec = orbit_mod(MapSpec(args.d, c), z0, args.p)
    _orbit_row(table, args.d, c, z0, args.p, rec)
    return _emit(args, table)


def _run_fixedpoints(args: argparse.Namespace) -> int:
    table = Table(("d", "c", "modulus", "count", "points"))
    c_lo, c_hi = args.c_span
    cs = range(c_lo, c_hi + 1, args.c_stride)
    jobs = _jobs(args)
    if args.integers:
        if args.p_span is not None:
            raise UsageError("--p: not allowed together with --integers")
        items = [(args.d, c) for c in cs]
        rows = parallel_map(_integer_roots_cell, items, jobs)
    else:
        if args.p_span is None:
            raise UsageError("--p: required unless --integers is given")
        primes = _plain_primes(args.p_span, "--p")
        items = [(args.d, c, p) for p in primes for c in cs]
        rows = parallel_map(_fixed_cell, items, jobs)
    table.rows.extend(rows)
    return _emit(args, table)


_COMPARISON_COLUMNS = ("family", "p", "c", "literal", "predicted", "rule", "verdict")


def _run_count(args: argparse.Namespace) -> int:
    family = _FAMILY_TOKENS[args.family]
    primes = _family_primes(args.p_span, family, "--p")
    c_lo, c_hi = args.c_span
    cs = range(c_lo, c_hi + 1, args.c_stride)
    items = [(family, c, p, args.mode, args.extended) for p in primes for c in cs]
    rows = parallel_map(_count_cell, items, _jobs(args))
    table = Table(_COMPARISON_COLUMNS)
    table.rows.extend(rows)
    return _emit(args, table)


def _run_verify(args: argparse.Namespace) -> int:
    family = _FAMILY_TOKENS[args.family]
    primes = _family_primes(args.p_span, family, "--p-range")
    if args.c_multiples:
        if args.c_span is not None:
            raise UsageError("--c-range: not allowed together with --c-multiples")
        items = [
            (family, p * t, p, args.extended)
            for p in primes
            for t in range(1, args.t_range + 1)
        ]
    else:
        if args.c_span is None:
            raise UsageError("--c-range: required unless --c-multiples is given")
        c_lo, c_hi = args.c_span
        cs = range(c_lo, c_hi + 1, args.c_stride)
        items = [(family, c, p, args.extended) for p in primes for c in cs]
    rows = parallel_map(_verify_cell, items, _jobs(args))
    table = Table(_COMPARISON_COLUMNS)
    table.rows.extend(rows)
    return _emit(args, table)


def _run_avg(args: argparse.Namespace) -> int:
    family = _FAMILY_TOKENS[args.family]
    coeff_filter = _FILTER_TOKENS[args.filter]
    mode = _MODE_TOKENS[args.mode]
    lo, hi = args.p_span
    try:
        rep = stats.average_fixed_count(family, coeff_filter, mode, lo, hi, args.t_range)
    except ValueError as exc:
        raise UsageError(f"--p-range/--filter: {exc}")
    table = Table(
        (
            "family",
            "filter",
            "mode",
            "prime_lo",
            "prime_hi",
            "t_range",
            "sample_count",
            "total",
            "mean",
            "mean_float",
        )
    )
    table.append(
        rep.family.value,
        rep.coeff_filter.value,
        rep.mode.value,
        rep.prime_lo,
        rep.prime_hi,
        rep.t_range,
        rep.sample_count,
        rep.total,
        rep.mean,
        float(rep.mean),
    )
    return _emit(args, table)


def _run_density(args: argparse.Namespace) -> int:
    kind = _KIND_TOKENS[args.kind]
    if args.mode is None:
        mode = CountMode.PREDICTED if kind is DensityKind.OMEGA_RATIO else CountMode.LITERAL
    else:
        mode = _MODE_TOKENS[args.mode]
    c_lo, c_hi = args.c_span
    try:
        if kind is DensityKind.OMEGA_RATIO:
            series = stats.density_omega_series(c_lo, c_hi, args.stride, mode)
        else:
            series = stats.density_fixed_count(kind, c_lo, c_hi, args.stride, mode)
    except ValueError as exc:
        raise UsageError(f"--c-range/--kind: {exc}")
    # Both denominator conventions: the kind's own prime interval, and the
    # unrestricted prime count up to c (which re-admits p = 2).
    pi_offset = 1 if kind in (DensityKind.OMEGA_RATIO, DensityKind.P_ZERO) else 2
    table = Table(
        (
            "kind",
            "mode",
            "c",
            "numerator",
            "denominator",
            "ratio",
            "ratio_float",
            "denominator_pi",
            "ratio_pi",
            "ratio_pi_float",
        )
    )
    for row in series.rows:
        den_pi = row.denominator + pi_offset
        ratio_pi = Fraction(row.numerator, den_pi)
        table.append(
            series.kind.value,
            series.mode.value,
            row.c,
            row.numerator,
            row.denominator,
            row.ratio,
            float(row.ratio),
            den_pi,
            ratio_pi,
            float(ratio_pi),
        )
    return _emit(args, table)


def _run_fields(args: argparse.Namespace) -> int:
    d_lo, d_hi = args.degree_span
    if d_lo < 2:
        raise UsageError(f"--degree: must be >= 2, got {d_lo}")
    x_lo, x_hi = args.x_span
    if x_lo < 1:
        raise UsageError(f"--X: must be >= 1, got {x_lo}")
    items = [
        (d, x)
        for d in range(d_lo, d_hi + 1)
        for x in range(x_lo, x_hi + 1, args.x_stride)
    ]
    rows = parallel_map(_fields_cell, items, _jobs(args))
    table = Table(
        ("degree", "X", "coefficient_bound", "total", "with_integer_root", "without_integer_root")
    )
    table.rows.extend(rows)
    return _emit(args, table)


def _run_report(args: argparse.Namespace) -> int:
    from .report import render_report

    paths = render_report(args.outdir, quick=args.quick)
    for path in paths:
        print(path)
    return 0


def _jobs(args: argparse.Namespace) -> int:
    try:
        return resolve_jobs(args.jobs)
    except ValueError as exc:
        raise UsageError(f"--jobs/{JOBS_ENV_VAR}: {exc}")


# --- parser ---------------------------------------------------------------

def _add_output_flags(sp: argparse.ArgumentParser, jobs: bool = True) -> None:
    sp.add_argument("--format", choices=("csv", "json"), default="csv",
                    help="output format (default: csv)")
    sp.add_argument("--output", default="-", metavar="PATH",
                    help="output file, '-' for stdout (default)")
    if jobs:
        sp.add_argument("--jobs", type=_positive, default=None, metavar="N",
                        help=f"worker processes (default: ${JOBS_ENV_VAR} or cpu count)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="padfix",
        description="Exact fixed-point counts, sweeps, densities, and averages "
        "for the integer maps z -> z**d + c over Z/pZ.",
        epilog="Ranges are inclusive LO:HI tokens; a bare integer is a single "
        "value. Put negative ranges after '=', e.g. --c-range=-10:10.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    sp = sub.add_parser(
        "orbit",
        help="trace one orbit (mod p, or exact rational with --rational)",
        description="Trace one orbit to its first repeat.",
        epilog="Columns: d, c, z0, modulus, status, preperiod, period, tail, cycle. "
        "tail/cycle are comma-joined point lists (kept in the final columns).",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sp.add_argument("--d", type=_positive, required=True, help="map degree, >= 2")
    sp.add_argument("--c", type=_rational, required=True,
                    help="coefficient; NUM/DEN allowed with --rational")
    sp.add_argument("--z0", type=_rational, required=True, help="starting point")
    sp.add_argument("--p", type=int, default=None, help="prime modulus (modular orbit)")
    sp.add_argument("--rational", action="store_true",
                    help="iterate exactly over the rationals instead of mod p")
    sp.add_argument("--max-bits", type=_positive, default=DEFAULT_SIZE_CUTOFF_BITS,
                    help="divergence cutoff on numerator/denominator bits (default 512)")
    _add_output_flags(sp, jobs=False)
    sp.set_defaults(run=_run_orbit)

    sp = sub.add_parser(
        "fixedpoints",
        help="enumerate fixed points mod p over a (p, c) grid, or over Z",
        description="Enumerate fixed residues of z**d + c, or integer roots with --integers.",
        epilog="Columns: d, c, modulus, count, points. modulus is '-' in "
        "--integers mode; points is a comma-joined list (final column).",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sp.add_argument("--d", type=_positive, required=True, help="map degree, >= 2")
    sp.add_argument("--c", "--c-range", dest="c_span", type=_span, required=True,
                    metavar="C", help="coefficient or LO:HI range")
    sp.add_argument("--c-stride", type=_positive, default=1, help="step through the c range")
    sp.add_argument("--p", "--p-range", dest="p_span", type=_span, default=None,
                    metavar="P", help="prime or LO:HI range (primes within)")
    sp.add_argument("--integers", action="store_true",
                    help="integer fixed points over Z instead of residues mod p")
    _add_output_flags(sp)
    sp.set_defaults(run=_run_fixedpoints)

    for name, blurb, runner in (
        ("count", "literal and predicted fixed-point counts over a grid", _run_count),
        ("verify", "reconcile literal counts against the closed-form rules", _run_verify),
    ):
        sp = sub.add_parser(
            name,
            help=blurb,
            description=blurb.capitalize() + ".",
            epilog="Columns: family, p, c, literal, predicted, rule, verdict. "
            "Cells not requested by --mode render as '-'.",
            formatter_class=argparse.RawDescriptionHelpFormatter,
        )
        sp.add_argument("--family", choices=sorted(_FAMILY_TOKENS), required=True,
                        help="map family: degree p or degree p-1")
        sp.add_argument("--p", "--p-range", dest="p_span", type=_span, required=True,
                        metavar="P", help="prime or LO:HI range (primes within)")
        if name == "count":
            sp.add_argument("--c", "--c-range", dest="c_span", type=_span, required=True,
                            metavar="C", help="coefficient or LO:HI range")
            sp.add_argument("--mode", choices=("literal", "predicted", "both"),
                            default="both", help="which counts to emit (default both)")
        else:
            sp.add_argument("--c", "--c-range", dest="c_span", type=_span, default=None,
                            metavar="C", help="coefficient or LO:HI range")
            sp.add_argument("--c-multiples", action="store_true",
                            help="sweep c = p*t for t in [1, --t-range]")
            sp.add_argument("--t-range", type=_positive, default=10, metavar="T",
                            help="multiplier range for --c-multiples (default 10)")
        sp.add_argument("--c-stride", type=_positive, default=1, help="step through the c range")
        sp.add_argument("--extended", action="store_true",
                        help="enable the derived-extension rule for family p-1")
        _add_output_flags(sp)
        sp.set_defaults(run=runner)

    sp = sub.add_parser(
        "avg",
        help="exact average count over a constructed (p, t) sample grid",
        description="Average the family's fixed-point count over c = p*t + offset.",
        epilog="Columns: family, filter, mode, prime_lo, prime_hi, t_range, "
        "sample_count, total, mean, mean_float. mean is an exact num/den token.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sp.add_argument("--family", choices=sorted(_FAMILY_TOKENS), required=True)
    sp.add_argument("--filter", choices=sorted(_FILTER_TOKENS), required=True,
                    help="how c is tied to p")
    sp.add_argument("--mode", choices=sorted(_MODE_TOKENS), default="literal")
    sp.add_argument("--p-range", dest="p_span", type=_span, required=True, metavar="P")
    sp.add_argument("--t-range", type=_positive, default=10, metavar="T",
                    help="t runs over [1, T] (default 10)")
    _add_output_flags(sp, jobs=False)
    sp.set_defaults(run=_run_avg)

    sp = sub.add_parser(
        "density",
        help="exact density series over a coefficient range",
        description="Per-coefficient density rows with exact rational ratios.",
        epilog="Columns: kind, mode, c, numerator, denominator, ratio, ratio_float, "
        "denominator_pi, ratio_pi, ratio_pi_float. denominator counts primes in "
        "the kind's interval ([3,c] or [5,c]); denominator_pi counts all primes <= c.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sp.add_argument("--kind", choices=sorted(_KIND_TOKENS), required=True)
    sp.add_argument("--c-range", dest="c_span", type=_span, required=True, metavar="C")
    sp.add_argument("--stride", type=_positive, default=1)
    sp.add_argument("--mode", choices=sorted(_MODE_TOKENS), default=None,
                    help="numerator mode (default: predicted for omega-ratio, "
                    "literal otherwise)")
    _add_output_flags(sp, jobs=False)
    sp.set_defaults(run=_run_density)

    sp = sub.add_parser(
        "fields",
        help="integer-root census of x**d - x + c under a height-translated bound",
        description="Count coefficients in [1, floor(X**(d/(2d-2)))] whose "
        "trinomial has (or lacks) an integer root.",
        epilog="Columns: degree, X, coefficient_bound, total, with_integer_root, "
        "without_integer_root.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sp.add_argument("--degree", dest="degree_span", type=_span, required=True, metavar="D")
    sp.add_argument("--X", dest="x_span", type=_span, required=True, metavar="X")
    sp.add_argument("--x-stride", type=_positive, default=1)
    _add_output_flags(sp)
    sp.set_defaults(run=_run_fields)

    sp = sub.add_parser(
        "report",
        help="run the standard sweep battery; write CSVs plus rendered figures",
        description="Write the canonical sweep CSVs and matplotlib figures "
        "into a directory, then print the written paths.",
    )
    sp.add_argument("--outdir", default="padfix-report", metavar="DIR")
    sp.add_argument("--quick", action="store_true", help="smaller ranges, faster run")
    sp.set_defaults(run=_run_report)

    return parser


def _merge_negative_values(argv: list[str]) -> list[str]:
    """Join '--flag -3/4' into '--flag=-3/4' so argparse does not mistake
    negative values (ranges, rationals) for option names."""
    out: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else None
        if (
            tok.startswith("--")
            and "=" not in tok
            and nxt is not None
            and len(nxt) >= 2
            and nxt[0] == "-"
            and nxt[1].isdigit()
        ):
            out.append(f"{tok}={nxt}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_merge_negative_values(list(argv)))
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.run(args)
    except UsageError as exc:
        print(f"padfix: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"padfix: error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - defensive
        print(f"padfix: internal error: {exc!r}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
