"""Semistandard, shifted and primed shifted tableaux.

Four kinds are supported:

* ``sst``      -- semistandard: rows weakly increase, columns strictly increase.
* ``shifted``  -- shifted diagram, weak rows and columns, strict diagonals.
* ``primedQ``  -- primed shifted over 1' < 1 < 2' < 2 < ...: weak rows/columns,
                  at most one k' per row, at most one k per column.
* ``primedP``  -- primedQ with no primed entries on the main diagonal.

Cells are keyed by 1-based matrix coordinates matching the (shifted) diagram.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from . import poly
from .shapes import Partition, StrictPartition, shifted_cells, young_cells

KINDS = ("sst", "shifted", "primedP", "primedQ")


class InvalidShapeForKind(ValueError):
    pass


class ShapeMismatch(ValueError):
    pass


class InvalidTableau(ValueError):
    pass


@dataclass(frozen=True, order=True)
class CellEntry:
    """An entry k or k' of the primed alphabet; k' sorts just below k."""

    sort_key: tuple[int, int]
    value: int
    primed: bool

    def __init__(self, value: int, primed: bool = False):
        if value < 1:
            raise ValueError("entries start at 1")
        object.__setattr__(self, "value", value)
        object.__setattr__(self, "primed", primed)
        object.__setattr__(self, "sort_key", (value, 0 if primed else 1))

    def __str__(self):
        return f"{self.value}'" if self.primed else str(self.value)

    @staticmethod
    def from_str(text: str) -> "CellEntry":
        text = text.strip()
        if text.endswith("'"):
            return CellEntry(int(text[:-1]), True)
        return CellEntry(int(text))


@dataclass(frozen=True)
class Violation:
    rule: str
    cell: tuple[int, int]


@dataclass(frozen=True)
class Tableau:
    kind: str
    shape: Partition | StrictPartition
    n: int
    cells: tuple  # sorted tuple of ((i, j), CellEntry)

    def __init__(self, kind, shape, n, cells):
        if kind not in KINDS:
            raise InvalidShapeForKind(f"unknown tableau kind {kind!r}")
        if isinstance(cells, dict):
            cells = tuple(sorted(cells.items()))
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "cells", tuple(cells))

    def entry(self, i: int, j: int) -> CellEntry | None:
        return dict(self.cells).get((i, j))

    def cell_map(self) -> dict:
        return dict(self.cells)

    def rows(self) -> list[list[CellEntry]]:
        out: dict[int, list] = {}
        for (i, _), e in self.cells:
            out.setdefault(i, []).append(e)
        return [out[i] for i in sorted(out)]

    def to_json(self) -> dict:
        rows: dict[int, list[str]] = {}
        for (i, _), e in self.cells:
            rows.setdefault(i, []).append(str(e))
        nrows = len(self.shape.parts)
        return {
            "kind": self.kind,
            "shape": list(self.shape.parts),
            "n": self.n,
            "rows": [rows.get(i + 1, []) for i in range(nrows)],
        }

    @staticmethod
    def from_json(data: dict) -> "Tableau":
        kind = data["kind"]
        shape = _shape_for_kind(kind, data["shape"])
        cells = {}
        for i, row in enumerate(data["rows"], start=1):
            offset = i if kind != "sst" else 1
            for k, text in enumerate(row):
                cells[(i, offset + k)] = CellEntry.from_str(text)
        return Tableau(kind, shape, int(data["n"]), cells)


def _shape_for_kind(kind, parts):
    if kind == "sst":
        return Partition(parts)
    return StrictPartition(parts)


def diagram_cells(kind: str, shape) -> list[tuple[int, int]]:
    if kind == "sst":
        if not isinstance(shape, Partition):
            raise InvalidShapeForKind("sst needs a Partition shape")
        return young_cells(shape)
    if not isinstance(shape, StrictPartition):
        raise InvalidShapeForKind(f"{kind} needs a StrictPartition shape")
    return shifted_cells(shape)


def _check_cells_cover(t: Tableau) -> None:
    want = set(diagram_cells(t.kind, t.shape))
    got = {c for c, _ in t.cells}
    if want != got:
        raise ShapeMismatch(
            f"cells {sorted(got)} do not match the diagram {sorted(want)}"
        )


def validate(t: Tableau) -> Violation | None:
    """None when valid; otherwise the first violated rule in cell order."""
    _check_cells_cover(t)
    cells = dict(t.cells)
    for (i, j), e in sorted(cells.items()):
        if e.value > t.n:
            return Violation("alphabet", (i, j))
        if t.kind in ("sst", "shifted") and e.primed:
            return Violation("alphabet", (i, j))
        left = cells.get((i, j - 1))
        up = cells.get((i - 1, j))
        if t.kind == "sst":
            if left is not None and e.sort_key < left.sort_key:
                return Violation("T1", (i, j))
            if up is not None and e.value <= up.value:
                return Violation("T2", (i, j))
        elif t.kind == "shifted":
            if left is not None and e.sort_key < left.sort_key:
                return Violation("S1", (i, j))
            if up is not None and e.sort_key < up.sort_key:
                return Violation("S2", (i, j))
            diag = cells.get((i - 1, j - 1))
            if diag is not None and e.value <= diag.value:
                return Violation("S3", (i, j))
        else:
            if left is not None and e.sort_key < left.sort_key:
                return Violation("P1", (i, j))
            if up is not None and e.sort_key < up.sort_key:
                return Violation("P2", (i, j))
            if e.primed and any(
                cells[(i, jj)] == e for jj in range(i, j) if (i, jj) in cells
            ):
                return Violation("P3", (i, j))
            if not e.primed and any(
                cells.get((ii, j)) == e for ii in range(1, i)
            ):
                return Violation("P4", (i, j))
            if t.kind == "primedP" and e.primed and i == j:
                return Violation("P5", (i, j))
    return None


def _alphabet(kind: str, n: int) -> list[CellEntry]:
    if kind in ("sst", "shifted"):
        return [CellEntry(k) for k in range(1, n + 1)]
    out = []
    for k in range(1, n + 1):
        out.append(CellEntry(k, True))
        out.append(CellEntry(k))
    return out


def _admissible(kind, cells, i, j, e) -> bool:
    left = cells.get((i, j - 1))
    up = cells.get((i - 1, j))
    if kind == "sst":
        if left is not None and e.sort_key < left.sort_key:
            return False
        if up is not None and e.value <= up.value:
            return False
        return True
    if left is not None and e.sort_key < left.sort_key:
        return False
    if up is not None and e.sort_key < up.sort_key:
        return False
    if kind == "shifted":
        diag = cells.get((i - 1, j - 1))
        return diag is None or e.value > diag.value
    # primed kinds
    if kind == "primedP" and e.primed and i == j:
        return False
    if e.primed:
        jj = j - 1
        while (i, jj) in cells:
            if cells[(i, jj)] == e:
                return False
            jj -= 1
    else:
        ii = i - 1
        while (ii, j) in cells:
            if cells[(ii, j)] == e:
                return False
            ii -= 1
    return True


def enumerate_tableaux(kind: str, shape, n: int) -> Iterator[Tableau]:
    """All valid fillings, each exactly once, in row-major / entry-ascending order."""
    order = diagram_cells(kind, shape)
    alphabet = _alphabet(kind, n)
    cells: dict = {}

    def fill(pos: int) -> Iterator[Tableau]:
        if pos == len(order):
            yield Tableau(kind, shape, n, dict(cells))
            return
        i, j = order[pos]
        for e in alphabet:
            if _admissible(kind, cells, i, j, e):
                cells[(i, j)] = e
                yield from fill(pos + 1)
                del cells[(i, j)]

    return fill(0)


def weight(t: Tableau) -> poly.Polynomial:
    """Product of cell weights; raises InvalidTableau on an invalid filling.

    sst cell (i,j)=k weighs x_k + a_{k+j-i}.  Primed tableaux weigh x_k (k on
    the diagonal), y_k (k' on the diagonal, Q class only), x_k + a_{j-i} and
    y_k - a_{j-i} off the diagonal.  Shifted tableaux carry the collapsed
    weights: x_k on the diagonal, x_k + a_{j-i} under a repeat to the left,
    y_k - a_{j-i} above a repeat below, else x_k + y_k.
    """
    v = validate(t)
    if v is not None:
        raise InvalidTableau(f"rule {v.rule} violated at {v.cell}")
    cells = dict(t.cells)
    factors = []
    for (i, j), e in sorted(cells.items()):
        k = e.value
        if t.kind == "sst":
            factors.append(poly.x(k) + poly.a(k + j - i))
        elif t.kind in ("primedP", "primedQ"):
            if i == j:
                factors.append(poly.y(k) if e.primed else poly.x(k))
            elif e.primed:
                factors.append(poly.y(k) - poly.a(j - i))
            else:
                factors.append(poly.x(k) + poly.a(j - i))
        else:  # shifted
            if i == j:
                factors.append(poly.x(k))
            elif cells.get((i, j - 1)) == e:
                factors.append(poly.x(k) + poly.a(j - i))
            elif cells.get((i + 1, j)) == e:
                factors.append(poly.y(k) - poly.a(j - i))
            else:
                factors.append(poly.x(k) + poly.y(k))
    return poly.product(factors)


def sst_count(shape: Partition, n: int) -> int:
    """Hook-content product formula for |T^shape[n]| (independent count oracle)."""
    parts = [p for p in shape.parts if p > 0]
    from .shapes import conjugate

    cols = conjugate(shape).parts
    total = Fraction(1)
    for i, p in enumerate(parts, start=1):
        for j in range(1, p + 1):
            hook = (p - j) + (cols[j - 1] - i) + 1
            total *= Fraction(n + j - i, hook)
    assert total.denominator == 1
    return int(total)
