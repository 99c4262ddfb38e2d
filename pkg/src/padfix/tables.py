"""In-memory result tables with CSV and JSON rendering.

CSV: comma separator, LF endings, header row, no quoting; list-valued cells
are comma-joined tokens and sit in the final columns so the files stay
diff-able. Exact rationals render as num/den tokens; float companion columns
carry 17 significant digits. JSON is {"columns": [...], "rows": [...]} with
the same tokens, and round-trips through json.loads unchanged.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable


def fraction_token(q: Fraction) -> str:
    """num/den token; integers render without the denominator."""
    return str(q)


def list_token(items: Iterable[Any]) -> str:
    """Comma-joined token for list-valued cells (residues, orbit points)."""
    return ",".join(str(x) for x in items)


def float_repr(x: float) -> str:
    return f"{x:.17g}"


def _normalize(cell: Any) -> Any:
    if isinstance(cell, Fraction):
        return fraction_token(cell)
    if isinstance(cell, bool):
        return int(cell)
    if isinstance(cell, (int, float, str)):
        return cell
    if isinstance(cell, (list, tuple)):
        return list_token(cell)
    return str(cell)


@dataclass
class Table:
    columns: tuple[str, ...]
    rows: list[tuple] = field(default_factory=list)

    def append(self, *cells: Any) -> None:
        if len(cells) != len(self.columns):
            raise ValueError(
                f"row width {len(cells)} != column count {len(self.columns)}"
            )
        self.rows.append(tuple(_normalize(c) for c in cells))

    def payload(self) -> dict:
        """The canonical JSON structure; identical to what to_json emits."""
        return {"columns": list(self.columns), "rows": [list(r) for r in self.rows]}

    def to_csv(self) -> str:
        lines = [",".join(self.columns)]
        for row in self.rows:
            lines.append(
                ",".join(
                    float_repr(c) if isinstance(c, float) else str(c) for c in row
                )
            )
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps(self.payload(), indent=2) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "csv":
            return self.to_csv()
        if fmt == "json":
            return self.to_json()
        raise ValueError(f"unknown format: {fmt}")


def write_text(text: str, path: str | None) -> None:
    """Write to path, or stdout when path is None or '-'; always LF endings."""
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
