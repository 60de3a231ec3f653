"""Partitions, strict partitions, their diagrams and the delta/rho offsets.

Trailing zeros are significant: ``(2, 1)`` and ``(2, 1, 0)`` are different
objects (Gelfand-Tsetlin top rows and the rho offset are zero-sensitive);
``normalized()`` strips them for shape-level comparison.
"""

from __future__ import annotations

from dataclasses import dataclass


class MuTooLong(ValueError):
    """Raised when a partition has more parts than the requested n."""


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts not weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    def length(self) -> int:
        """Number of nonzero parts."""
        return sum(1 for p in self.parts if p > 0)

    def weight(self) -> int:
        return sum(self.parts)

    def normalized(self) -> "Partition":
        return Partition(p for p in self.parts if p > 0)

    def padded(self, n: int) -> tuple[int, ...]:
        if len(self.parts) > n and any(p > 0 for p in self.parts[n:]):
            raise MuTooLong(f"{self.parts} has more than {n} nonzero parts")
        return tuple(self.parts[:n]) + (0,) * (n - len(self.parts[:n]))

    def serialize(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)


@dataclass(frozen=True)
class StrictPartition:
    """Strictly decreasing positive parts, optionally one terminal zero."""

    parts: tuple[int, ...]

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        nonzero = parts[:-1] if parts and parts[-1] == 0 else parts
        if any(p == 0 for p in nonzero):
            raise ValueError(f"interior zero part in {parts}")
        if any(nonzero[i] <= nonzero[i + 1] for i in range(len(nonzero) - 1)):
            raise ValueError(f"parts not strictly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    def length(self) -> int:
        return sum(1 for p in self.parts if p > 0)

    def weight(self) -> int:
        return sum(self.parts)

    def breadth(self) -> int:
        return self.parts[0] if self.parts else 0

    def as_partition(self) -> Partition:
        return Partition(self.parts)

    def serialize(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not text:
        return Partition()
    return Partition(int(p) for p in text.split(","))


def parse_strict_partition(text: str) -> StrictPartition:
    text = text.strip()
    if not text:
        return StrictPartition()
    return StrictPartition(int(p) for p in text.split(","))


def conjugate(p: Partition) -> Partition:
    """Column lengths of the Young diagram; an involution."""
    parts = [q for q in p.parts if q > 0]
    if not parts:
        return Partition()
    cols = [0] * parts[0]
    for q in parts:
        for j in range(q):
            cols[j] += 1
    return Partition(cols)


def shape_for(mu: Partition, n: int, offset: str) -> StrictPartition:
    """mu + delta (delta = (n,...,1)) or mu + rho (rho = (n-1,...,0))."""
    if offset not in ("delta", "rho"):
        raise ValueError(f"offset must be 'delta' or 'rho', got {offset!r}")
    padded = mu.padded(n)
    shift = 1 if offset == "delta" else 0
    return StrictPartition(padded[i] + (n - i - 1 + shift) for i in range(n))


def young_cells(shape: Partition) -> list[tuple[int, int]]:
    """Cells (i, j) of the Young diagram, 1-based, row-major."""
    return [
        (i + 1, j + 1)
        for i, p in enumerate(shape.parts)
        for j in range(p)
    ]


def shifted_cells(shape: StrictPartition) -> list[tuple[int, int]]:
    """Cells (i, j) of the shifted diagram: row i occupies j = i..i+lambda_i-1."""
    return [
        (i + 1, j)
        for i, p in enumerate(shape.parts)
        for j in range(i + 1, i + 1 + p)
    ]
