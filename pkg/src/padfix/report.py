"""The standard sweep battery: canonical CSV tables plus rendered figures.

Each battery entry writes one CSV and one PNG side by side under the output
directory. Figures are illustrative; the CSVs carry the exact values.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from . import stats
from .counting import Family, verify_prediction
from .stats import CoeffFilter, CountMode, DensityKind
from .tables import Table, write_text

_EXPECTED_MEANS = {
    (Family.DEGREE_P, CoeffFilter.DIVIDES_C, CountMode.PREDICTED): 3,
    (Family.DEGREE_PM1, CoeffFilter.DIVIDES_C, CountMode.LITERAL): 2,
    (Family.DEGREE_PM1, CoeffFilter.DIVIDES_C_MINUS_1, CountMode.LITERAL): 1,
    (Family.DEGREE_PM1, CoeffFilter.DIVIDES_C_PLUS_1, CountMode.LITERAL): 0,
}


def _save(fig, path: Path) -> None:
    fig.savefig(path, dpi=130)
    plt.close(fig)


def _omega_ratio(outdir: Path, c_hi: int) -> list[Path]:
    series = stats.density_omega_series(3, c_hi, stride=3)
    table = Table(("c", "numerator", "denominator", "ratio", "ratio_float"))
    for row in series.rows:
        table.append(row.c, row.numerator, row.denominator, row.ratio, float(row.ratio))
    csv_path = outdir / "omega_ratio.csv"
    write_text(table.to_csv(), str(csv_path))

    cs = [row.c for row in series.rows]
    ratios = [float(row.ratio) for row in series.rows]
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.plot(cs, ratios, ".", markersize=2, color="tab:blue")
    ax.set_xlabel("coefficient c")
    ax.set_ylabel("odd prime divisors of c / primes in [3, c]")
    ax.set_title("Divisibility ratio behind the three-fixed-point condition")
    fig.tight_layout()
    png_path = outdir / "omega_ratio.png"
    _save(fig, png_path)
    return [csv_path, png_path]


def _pm1_density(outdir: Path, c_hi: int) -> list[Path]:
    kinds = (DensityKind.PM1_TWO, DensityKind.PM1_ONE, DensityKind.PM1_ZERO)
    table = Table(("kind", "mode", "c", "numerator", "denominator", "ratio", "ratio_float"))
    curves: dict[str, tuple[list[int], list[float]]] = {}
    for kind in kinds:
        series = stats.density_fixed_count(kind, 5, c_hi, stride=5)
        xs, ys = [], []
        for row in series.rows:
            table.append(kind.value, series.mode.value, row.c, row.numerator,
                         row.denominator, row.ratio, float(row.ratio))
            xs.append(row.c)
            ys.append(float(row.ratio))
        curves[f"{kind.value} (literal)"] = (xs, ys)
    predicted_one = stats.density_fixed_count(
        DensityKind.PM1_ONE, 5, c_hi, stride=5, mode=CountMode.PREDICTED
    )
    xs, ys = [], []
    for row in predicted_one.rows:
        table.append(DensityKind.PM1_ONE.value, CountMode.PREDICTED.value, row.c,
                     row.numerator, row.denominator, row.ratio, float(row.ratio))
        xs.append(row.c)
        ys.append(float(row.ratio))
    curves["pm1-one (predicted)"] = (xs, ys)

    csv_path = outdir / "pm1_density.csv"
    write_text(table.to_csv(), str(csv_path))

    fig, ax = plt.subplots(figsize=(7, 4))
    for label, (xs, ys) in curves.items():
        style = "--" if "predicted" in label else "-"
        ax.plot(xs, ys, style, linewidth=1, label=label)
    ax.set_xlabel("coefficient c")
    ax.set_ylabel("density among primes in [5, c]")
    ax.set_title("Fixed-point count densities, degree p-1 family")
    ax.legend(fontsize=8)
    fig.tight_layout()
    png_path = outdir / "pm1_density.png"
    _save(fig, png_path)
    return [csv_path, png_path]


def _averages(outdir: Path, prime_hi: int) -> list[Path]:
    table = Table(("family", "filter", "mode", "prime_hi", "t_range",
                   "sample_count", "mean", "mean_float", "expected"))
    labels, means, expected = [], [], []
    for (family, coeff_filter, mode), want in _EXPECTED_MEANS.items():
        rep = stats.average_fixed_count(family, coeff_filter, mode, 3, prime_hi, 10)
        table.append(family.value, coeff_filter.value, mode.value, prime_hi, 10,
                     rep.sample_count, rep.mean, float(rep.mean), want)
        labels.append(f"{family.value}\n{coeff_filter.value}")
        means.append(float(rep.mean))
        expected.append(want)
    csv_path = outdir / "averages.csv"
    write_text(table.to_csv(), str(csv_path))

    fig, ax = plt.subplots(figsize=(7, 4))
    xs = range(len(labels))
    ax.bar(xs, means, width=0.55, color="tab:blue", label="measured mean")
    ax.plot(xs, expected, "k_", markersize=24, label="limit value")
    ax.set_xticks(list(xs), labels, fontsize=8)
    ax.set_ylabel("average fixed-point count")
    ax.set_title(f"Averages over primes up to {prime_hi}, t in [1, 10]")
    ax.legend(fontsize=8)
    fig.tight_layout()
    png_path = outdir / "averages.png"
    _save(fig, png_path)
    return [csv_path, png_path]


def _degree_p_gap(outdir: Path) -> list[Path]:
    from .arith import primes_in

    table = Table(("p", "c", "literal", "predicted", "verdict"))
    xs, ys = [], []
    for p in primes_in(5, 97):
        for t in range(1, 11):
            rec = verify_prediction(Family.DEGREE_P, p * t, p)
            table.append(int(rec.p), rec.c, rec.literal,
                         rec.prediction.predicted, rec.verdict.value)
        xs.append(p)
        ys.append(p)
    csv_path = outdir / "degree_p_gap.csv"
    write_text(table.to_csv(), str(csv_path))

    fig, ax = plt.subplots(figsize=(7, 4))
    ax.plot(xs, ys, "o", markersize=4, label="literal count (= p when p | c)")
    ax.axhline(3, color="tab:red", linewidth=1.2, label="closed-form value 3")
    ax.set_xlabel("prime p")
    ax.set_ylabel("fixed points of the degree-p map, p | c")
    ax.set_title("Literal scan vs closed form, degree p family")
    ax.legend(fontsize=8)
    fig.tight_layout()
    png_path = outdir / "degree_p_gap.png"
    _save(fig, png_path)
    return [csv_path, png_path]


def _family_growth(outdir: Path, x_max_exp: int) -> list[Path]:
    table = Table(("degree", "X", "coefficient_bound", "with_integer_root",
                   "without_integer_root"))
    fig, ax = plt.subplots(figsize=(7, 4))
    xs_grid = [10**k for k in range(1, x_max_exp + 1)]
    for degree, marker in ((3, "o"), (5, "s"), (7, "^")):
        withs = []
        for x_cap in xs_grid:
            rep = stats.family_count(degree, x_cap)
            table.append(rep.degree, rep.X, rep.coefficient_bound,
                         rep.with_integer_root, rep.without_integer_root)
            withs.append(rep.with_integer_root)
        ax.plot(xs_grid, withs, marker + "-", markersize=4,
                label=f"degree {degree}")
    csv_path = outdir / "family_counts.csv"
    write_text(table.to_csv(), str(csv_path))

    ax.set_xscale("log")
    ax.set_yscale("symlog")
    ax.set_xlabel("discriminant-style cap X")
    ax.set_ylabel("coefficients with an integer root")
    ax.set_title("Height-bounded trinomials with integer fixed points")
    ax.legend(fontsize=8)
    fig.tight_layout()
    png_path = outdir / "family_counts.png"
    _save(fig, png_path)
    return [csv_path, png_path]


def render_report(outdir: str, quick: bool = False) -> list[str]:
    """Run the battery; returns the written paths in a stable order."""
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    written += _omega_ratio(out, 3_000 if quick else 30_000)
    written += _pm1_density(out, 2_000 if quick else 20_000)
    written += _averages(out, 97 if quick else 499)
    written += _degree_p_gap(out)
    written += _family_growth(out, 4 if quick else 6)
    return [str(p) for p in written]
