"""Tables of b(n, k): cell layout, computation and text/CSV/JSON emission.

Under the standard-range policy column ``k`` has computed cells for
``2k <= n <= floor(k(k+1)/2)``; rows with ``n < 2k`` are blank and rows
beyond the range belong to the closed form and print as ``-`` unless
``fill_closed_form`` is set.  An explicit ``n`` range computes every cell
with ``2k <= n`` from the partition formula.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from pathlib import Path

from .basesize import METHOD_CLOSED_FORM, METHOD_FORMULA, base_sizes, halasi_formula
from .errors import InvalidArgument

BLANK = ""
DASH = "-"


@dataclass(frozen=True)
class Cell:
    n: int
    k: int
    b: int
    method: str = METHOD_FORMULA


@dataclass(frozen=True)
class TableSpec:
    k_min: int = 3
    k_max: int = 14
    n_min: int | None = None   # explicit range when both set
    n_max: int | None = None   # under the standard range, only truncates rows
    fill_closed_form: bool = False

    def __post_init__(self):
        if not 1 <= self.k_min <= self.k_max:
            raise InvalidArgument(f"need 1 <= kmin <= kmax, got {self.k_min}, {self.k_max}")
        if self.n_min is not None and (self.n_max is None or self.n_min > self.n_max):
            raise InvalidArgument("an explicit n range needs nmin <= nmax")

    @property
    def explicit(self) -> bool:
        return self.n_min is not None

    def ks(self) -> range:
        return range(self.k_min, self.k_max + 1)

    def rows(self) -> range:
        if self.explicit:
            return range(max(self.n_min, 2 * self.k_min), self.n_max + 1)
        top = max(k * (k + 1) // 2 for k in self.ks())
        if self.n_max is not None:
            top = min(top, self.n_max)
        return range(2 * self.k_min, top + 1)

    def classify(self, n: int, k: int) -> str:
        """``'blank'``, ``'formula'`` or ``'closed'`` for the cell ``(n, k)``."""
        if n < 2 * k:
            return "blank"
        if self.explicit or n <= k * (k + 1) // 2:
            return "formula"
        return "closed"


def compute_cells(spec: TableSpec, *, cache=None, progress=None, checkpoint_dir=None,
                  **kwargs) -> list[Cell]:
    """Every non-blank, non-dash cell of ``spec`` sorted by ``(n, k)``.

    One shared weight pass per row; ``cache`` is a ``ResultCache`` or None.
    With ``checkpoint_dir`` each row's partition pass writes
    ``row-<n>.json`` there and resumes from it if present.
    """
    cells = []
    for n in spec.rows():
        todo = []
        for k in spec.ks():
            kind = spec.classify(n, k)
            if kind == "closed" and spec.fill_closed_form:
                cells.append(Cell(n, k, halasi_formula(n, k).value, METHOD_CLOSED_FORM))
            elif kind == "formula":
                hit = cache.get(n, k) if cache is not None else None
                if hit is not None:
                    cells.append(Cell(n, k, hit))
                else:
                    todo.append(k)
        if todo:
            extra = {}
            if checkpoint_dir is not None:
                path = Path(checkpoint_dir) / f"row-{n}.json"
                extra = {"checkpoint": path, "resume": path if path.exists() else None}
            for k, res in base_sizes(n, todo, **kwargs, **extra).items():
                cells.append(Cell(n, k, res.b))
                if cache is not None:
                    cache.put(n, k, res.b)
        if progress is not None:
            progress(n)
    cells.sort(key=lambda c: (c.n, c.k))
    return cells


def render_csv(cells: list[Cell]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "k", "b"])
    for c in cells:
        w.writerow([c.n, c.k, c.b])
    return buf.getvalue()


def parse_csv(text: str) -> list[Cell]:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or rows[0] != ["n", "k", "b"]:
        raise InvalidArgument("table CSV must start with the header n,k,b")
    return [Cell(int(n), int(k), int(b)) for n, k, b in rows[1:]]


def render_json(cells: list[Cell], spec: TableSpec) -> str:
    doc = {
        "kmin": spec.k_min,
        "kmax": spec.k_max,
        "cells": [{"n": c.n, "k": c.k, "b": c.b, "method": c.method} for c in cells],
    }
    return json.dumps(doc, sort_keys=True, indent=1) + "\n"


def parse_json(text: str) -> tuple[list[Cell], TableSpec]:
    doc = json.loads(text)
    cells = [Cell(c["n"], c["k"], c["b"], c["method"]) for c in doc["cells"]]
    return cells, TableSpec(doc["kmin"], doc["kmax"])


def render_text(cells: list[Cell], spec: TableSpec) -> str:
    """Aligned grid laid out like the published table."""
    values = {(c.n, c.k): str(c.b) for c in cells}
    ks = list(spec.ks())
    rows = list(spec.rows())
    width = max([len("n\\k"), *(len(str(n)) for n in rows)])
    colw = max([2, *(len(str(k)) for k in ks), *(len(v) for v in values.values())])
    out = ["n\\k".rjust(width) + " | " + " ".join(str(k).rjust(colw) for k in ks)]
    out.append("-" * len(out[0]))
    for n in rows:
        line = []
        for k in ks:
            kind = spec.classify(n, k)
            if kind == "blank":
                text = BLANK
            else:
                text = values.get((n, k), DASH)
            line.append(text.rjust(colw))
        out.append(str(n).rjust(width) + " | " + " ".join(line).rstrip())
    return "\n".join(out) + "\n"
