"""Strict Gelfand-Tsetlin patterns, alternating sign matrices, compass point
matrices, and the weight functions tying them to shifted tableaux.

GT pattern rows are stored bottom-up: ``rows[0]`` is the single bottom entry
and ``rows[n-1]`` is the top row (the shape).  ASM rows run top-down, so ASM
row i pairs with pattern rows i and i-1.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import poly, tableaux
from .shapes import StrictPartition
from .tableaux import CellEntry, InvalidTableau, Tableau

CPM_LETTERS = ("WE", "NS", "NE", "SE", "NW", "SW")


class InvalidPattern(ValueError):
    pass


class InvalidASM(ValueError):
    pass


class InvalidCPM(ValueError):
    pass


class InvalidShape(ValueError):
    pass


@dataclass(frozen=True)
class GTPattern:
    rows: tuple[tuple[int, ...], ...]  # rows[i-1] has i entries, bottom-up

    def __init__(self, rows):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in rows))

    def n(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> int:
        """m_{ij}, 1-based; m_{j-1, j} is 0 by convention."""
        if i == j - 1:
            return 0
        return self.rows[i - 1][j - 1]

    def top(self) -> StrictPartition:
        return StrictPartition(self.rows[-1])

    def to_json(self) -> dict:
        return {"rows": [list(r) for r in self.rows]}

    @staticmethod
    def from_json(data: dict) -> "GTPattern":
        return GTPattern(data["rows"])


def validate_gtp(g: GTPattern) -> None:
    rows = g.rows
    n = len(rows)
    if n == 0:
        raise InvalidPattern("empty pattern")
    for i, row in enumerate(rows, start=1):
        if len(row) != i:
            raise InvalidPattern(f"row {i} has {len(row)} entries, want {i}")
        if any(v < 0 for v in row):
            raise InvalidPattern(f"negative entry in row {i}")
        if any(row[j] <= row[j + 1] for j in range(i - 1)):
            raise InvalidPattern(f"row {i} not strictly decreasing: {row}")
    for i in range(2, n + 1):
        upper, lower = rows[i - 1], rows[i - 2]
        for j in range(1, i):
            nxt = upper[j] if j < i else 0
            if not upper[j - 1] >= lower[j - 1] >= nxt:
                raise InvalidPattern(f"betweenness fails at ({i},{j})")


@dataclass(frozen=True)
class ASM:
    entries: tuple[tuple[int, ...], ...]  # rows top-down
    shape: StrictPartition

    def __init__(self, entries, shape):
        object.__setattr__(self, "entries", tuple(tuple(r) for r in entries))
        object.__setattr__(self, "shape", shape)

    def dims(self) -> tuple[int, int]:
        return len(self.entries), self.shape.breadth()

    def to_json(self) -> dict:
        return {
            "entries": [list(r) for r in self.entries],
            "shape": list(self.shape.parts),
        }

    @staticmethod
    def from_json(data: dict) -> "ASM":
        return ASM(data["entries"], StrictPartition(data["shape"]))


def validate_asm(a: ASM) -> None:
    n, m = a.dims()
    lam = set(p for p in a.shape.parts if p > 0)
    if len(a.shape.parts) != n or a.shape.length() != n:
        raise InvalidASM("shape length must match the row count")
    if any(len(r) != m for r in a.entries):
        raise InvalidASM(f"rows must have {m} columns")
    if any(v not in (-1, 0, 1) for r in a.entries for v in r):
        raise InvalidASM("entries must lie in {-1, 0, 1}")
    for i, row in enumerate(a.entries, start=1):
        nz = [v for v in row if v]
        if not nz or nz[0] != 1 or nz[-1] != 1:
            raise InvalidASM(f"row {i} must start and end its nonzeros with 1")
        if any(nz[k] == nz[k + 1] for k in range(len(nz) - 1)):
            raise InvalidASM(f"row {i} nonzeros do not alternate")
    for j in range(m):
        col = [a.entries[i][j] for i in range(n)]
        nz = [v for v in col if v]
        if any(nz[k] == nz[k + 1] for k in range(len(nz) - 1)):
            raise InvalidASM(f"column {j + 1} nonzeros do not alternate")
        if nz and nz[0] != 1:
            raise InvalidASM(f"column {j + 1} must start its nonzeros with 1")
        want = 1 if (j + 1) in lam else 0
        if sum(col) != want:
            raise InvalidASM(f"column {j + 1} sums to {sum(col)}, want {want}")


@dataclass(frozen=True)
class CPM:
    entries: tuple[tuple[str, ...], ...]
    shape: StrictPartition

    def __init__(self, entries, shape):
        object.__setattr__(self, "entries", tuple(tuple(r) for r in entries))
        object.__setattr__(self, "shape", shape)

    def dims(self) -> tuple[int, int]:
        return len(self.entries), len(self.entries[0]) if self.entries else 0

    def count(self, letter: str) -> int:
        return sum(r.count(letter) for r in self.entries)

    def to_json(self) -> dict:
        return {
            "entries": [list(r) for r in self.entries],
            "shape": list(self.shape.parts),
        }

    @staticmethod
    def from_json(data: dict) -> "CPM":
        return CPM(data["entries"], StrictPartition(data["shape"]))


# -- shifted tableau <-> GT pattern -------------------------------------

def gtp_from_shifted(s: Tableau) -> GTPattern:
    if s.kind != "shifted":
        raise InvalidTableau("expected a shifted tableau")
    v = tableaux.validate(s)
    if v is not None:
        raise InvalidTableau(f"rule {v.rule} violated at {v.cell}")
    n = s.n
    cells = s.cell_map()
    rows = []
    for i in range(1, n + 1):
        rows.append(
            tuple(
                sum(1 for (r, _), e in cells.items() if r == j and e.value <= i)
                for j in range(1, i + 1)
            )
        )
    g = GTPattern(rows)
    validate_gtp(g)
    return g


def shifted_from_gtp(g: GTPattern) -> Tableau:
    validate_gtp(g)
    n = g.n()
    cells = {}
    for j in range(1, n + 1):
        for k in range(j, n + 1):
            for pos in range(g.entry(k - 1, j) + 1, g.entry(k, j) + 1):
                cells[(j, j - 1 + pos)] = CellEntry(k)
    return Tableau("shifted", g.top(), n, cells)


# -- GT pattern <-> ASM -------------------------------------------------

def asm_from_gtp(g: GTPattern) -> ASM:
    validate_gtp(g)
    n = g.n()
    m = g.rows[-1][0]
    entries = []
    for i in range(1, n + 1):
        cur = set(g.rows[i - 1])
        prev = set(g.rows[i - 2]) if i > 1 else set()
        cur.discard(0)
        prev.discard(0)
        row = [0] * m
        for j in cur - prev:
            row[j - 1] = 1
        for j in prev - cur:
            row[j - 1] = -1
        entries.append(row)
    a = ASM(entries, g.top())
    validate_asm(a)
    return a


def gtp_from_asm(a: ASM) -> GTPattern:
    validate_asm(a)
    n, m = a.dims()
    rows = []
    acc = [0] * m
    for i in range(n):
        for j in range(m):
            acc[j] += a.entries[i][j]
        present = sorted((j + 1 for j in range(m) if acc[j] == 1), reverse=True)
        rows.append(tuple(present))
    g = GTPattern(rows)
    validate_gtp(g)
    return g


# -- ASM -> CPM ---------------------------------------------------------

def cpm_from_asm(a: ASM) -> CPM:
    validate_asm(a)
    n, m = a.dims()

    def north(i, j):
        for i2 in range(i - 1, 0, -1):
            if a.entries[i2 - 1][j - 1]:
                return a.entries[i2 - 1][j - 1]
        return -1

    def east(i, j):
        for j2 in range(j + 1, m + 1):
            if a.entries[i - 1][j2 - 1]:
                return a.entries[i - 1][j2 - 1]
        return -1

    entries = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, m + 1):
            v = a.entries[i - 1][j - 1]
            if v == 1:
                row.append("WE")
            elif v == -1:
                row.append("NS")
            else:
                first = "N" if north(i, j) == 1 else "S"
                second = "W" if east(i, j) == 1 else "E"
                row.append(first + second)
        entries.append(row)
    return CPM(entries, a.shape)


def asm_from_cpm(c: CPM) -> ASM:
    table = {"WE": 1, "NS": -1}
    entries = [[table.get(v, 0) for v in row] for row in c.entries]
    a = ASM(entries, c.shape)
    validate_asm(a)
    return a


# -- weights ------------------------------------------------------------

@dataclass(frozen=True)
class BoltzmannTable:
    variant: str  # general, bmn, lascoux

    def weight_of(self, letter: str, i: int, j: int) -> poly.Polynomial:
        if letter not in CPM_LETTERS:
            raise InvalidCPM(f"unknown entry {letter!r}")
        if self.variant == "general":
            if letter == "NS":
                return poly.x(i) + poly.y(i)
            if letter == "NW":
                return poly.y(i) - poly.a(j)
            if letter == "SW":
                return poly.x(i) + poly.a(j)
            return poly.ONE
        if self.variant == "bmn":
            if letter == "NS":
                return (poly.ONE + poly.t()) * poly.z(i)
            if letter == "NE":
                return poly.t()
            if letter == "NW":
                return poly.z(i) - poly.t() * poly.alpha(j)
            if letter == "SW":
                return poly.z(i) + poly.alpha(j)
            return poly.ONE
        if self.variant == "lascoux":
            ainv = poly.Polynomial({((poly.variable("a", j), -1),): 1})
            if letter == "NS":
                return -(poly.x(i) * ainv)
            if letter == "SW":
                return -(poly.x(i) * ainv + poly.ONE)
            return poly.ONE
        raise ValueError(f"unknown variant {self.variant!r}")


def weight_cpm(
    c: CPM, table: BoltzmannTable, include_diagonal_prefactor: bool = False
) -> poly.Polynomial:
    n, m = c.dims()
    factors = []
    if include_diagonal_prefactor:
        factors.extend(poly.x(i) for i in range(1, n + 1))
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            factors.append(table.weight_of(c.entries[i - 1][j - 1], i, j))
    return poly.product(factors)


def classify_triples(g: GTPattern) -> dict[tuple[int, int], str]:
    """Label (i, j) -> L/R/B for the triple m_{ij}, m_{i-1,j}, m_{i,j+1}."""
    validate_gtp(g)
    labels = {}
    for i in range(2, g.n() + 1):
        for j in range(1, i):
            top = g.entry(i, j)
            mid = g.entry(i - 1, j)
            nxt = g.entry(i, j + 1)
            if top == mid:
                labels[(i, j)] = "L"
            elif mid == nxt:
                labels[(i, j)] = "R"
            else:
                labels[(i, j)] = "B"
    return labels


def triple_counts(g: GTPattern) -> dict[str, int]:
    labels = classify_triples(g)
    return {
        "L": sum(1 for v in labels.values() if v == "L"),
        "R": sum(1 for v in labels.values() if v == "R"),
        "B": sum(1 for v in labels.values() if v == "B"),
    }


def _x_plus_a(i: int, k: int) -> poly.Polynomial:
    # a_0 is taken as 0 here
    return poly.x(i) if k == 0 else poly.x(i) + poly.a(k)


def weight_gtp(g: GTPattern) -> poly.Polynomial:
    validate_gtp(g)
    labels = classify_triples(g)
    factors = []
    for i in range(1, g.n() + 1):
        for k in range(g.entry(i, i)):
            factors.append(_x_plus_a(i, k))
    for (i, j), label in labels.items():
        mid = g.entry(i - 1, j)
        if label == "B":
            factors.append(poly.x(i) + poly.y(i))
        elif label == "R":
            factors.append(poly.y(i) if mid == 0 else poly.y(i) - poly.a(mid))
        for k in range(mid + 1, g.entry(i, j)):
            factors.append(_x_plus_a(i, k))
    return poly.product(factors)


# -- enumeration --------------------------------------------------------

def enumerate_gtp(top: StrictPartition):
    """All strict patterns with the given top row, in deterministic order."""
    n = len(top.parts)
    if n == 0 or top.length() < n - 1:
        raise InvalidShape(f"top row {top.parts} is not a valid shape")

    def fill(rows_topdown):
        upper = rows_topdown[-1]
        i = len(upper)
        if i == 1:
            yield GTPattern(list(reversed(rows_topdown)))
            return

        def choose(j, partial):
            if j == i - 1:
                yield from fill(rows_topdown + [tuple(partial)])
                return
            hi = upper[j]
            lo = max(upper[j + 1], 0)
            if partial:
                hi = min(hi, partial[-1] - 1)
            for v in range(hi, lo - 1, -1):
                yield from choose(j + 1, partial + [v])

        yield from choose(0, [])

    yield from fill([tuple(top.parts)])


def enumerate_asm(shape: StrictPartition):
    for g in enumerate_gtp(shape):
        yield asm_from_gtp(g)
