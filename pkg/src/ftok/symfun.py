"""Symmetric function constructors: tableau sums, one-row blocks, determinants.

The one-row building blocks are ``h_poly`` (direct sum over weakly increasing
index tuples) and ``q_poly`` (sum over slot multisets of a
:class:`ShiftedAlphabet`).  The two Jacobi-Trudi style determinants and the
identity right-hand sides sit on top of them.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from . import poly, tableaux
from .shapes import MuTooLong, Partition, StrictPartition

TABLEAU_KINDS = (
    "schur",
    "factorialSchur",
    "bigP",
    "bigQ",
    "factorialBigP",
    "factorialBigQ",
)


class InvalidShapeForKind(ValueError):
    pass


@dataclass(frozen=True)
class Slot:
    """One argument of q_m.

    The ell-th chosen slot with variable v contributes (v + sign * a_{ell +
    offset}).  x-slots (sign +1) may be chosen repeatedly, y-slots (sign -1)
    at most once.  ``offset`` counts the shift operators inserted to the
    slot's left.
    """

    var: tuple[int, int]
    sign: int
    offset: int
    repeatable: bool


def x_slot(i: int, offset: int = 0) -> Slot:
    return Slot(poly.variable("x", i), 1, offset, True)


def y_slot(i: int, offset: int = 0) -> Slot:
    return Slot(poly.variable("y", i), -1, offset, False)


@dataclass(frozen=True)
class ShiftedAlphabet:
    slots: tuple[Slot, ...]

    def __init__(self, slots):
        object.__setattr__(self, "slots", tuple(slots))


def interleaved_alphabet(k: int, n: int) -> ShiftedAlphabet:
    """x_k < y_{k+1} < x_{k+1} < ... < y_n < x_n, all offsets 0."""
    slots = [x_slot(k)]
    for j in range(k + 1, n + 1):
        slots.append(y_slot(j))
        slots.append(x_slot(j))
    return ShiftedAlphabet(slots)


def staircase_alphabet(k: int, n: int) -> ShiftedAlphabet:
    """x_k, sh x_{k+1}, sh x_{k+2}, ...: offset j - k on slot x_j."""
    return ShiftedAlphabet(x_slot(j, j - k) for j in range(k, n + 1))


def q_poly(alphabet: ShiftedAlphabet, m: int) -> poly.Polynomial:
    """Sum over weakly increasing m-multisets of slots (x-slots repeatable)."""
    if m < 0:
        return poly.ZERO
    slots = alphabet.slots
    memo: dict[tuple[int, int], poly.Polynomial] = {}

    def tail(s: int, ell: int) -> poly.Polynomial:
        # choices for positions ell..m drawn from slots[s:]
        if ell > m:
            return poly.ONE
        key = (s, ell)
        got = memo.get(key)
        if got is not None:
            return got
        total = poly.ZERO
        for s2 in range(s, len(slots)):
            slot = slots[s2]
            factor = poly.var_poly(slot.var) + poly.const(slot.sign) * poly.a(
                ell + slot.offset
            )
            nxt = s2 if slot.repeatable else s2 + 1
            total = total + factor * tail(nxt, ell + 1)
        memo[key] = total
        return total

    return tail(0, 1)


def h_poly(m: int, k: int, n: int) -> poly.Polynomial:
    """Sum over k <= i_1 <= ... <= i_m <= n of prod (x_{i_l} + a_{i_l - k + l})."""
    if m < 0:
        return poly.ZERO
    memo: dict[tuple[int, int], poly.Polynomial] = {}

    def tail(i: int, ell: int) -> poly.Polynomial:
        if ell > m:
            return poly.ONE
        key = (i, ell)
        got = memo.get(key)
        if got is not None:
            return got
        total = poly.ZERO
        for i2 in range(i, n + 1):
            factor = poly.x(i2) + poly.a(i2 - k + ell)
            total = total + factor * tail(i2, ell + 1)
        memo[key] = total
        return total

    return tail(k, 1)


_KIND_TO_TABLEAU = {
    "schur": "sst",
    "factorialSchur": "sst",
    "bigP": "primedP",
    "bigQ": "primedQ",
    "factorialBigP": "primedP",
    "factorialBigQ": "primedQ",
}


@functools.cache
def tableau_sum(kind: str, shape, n: int) -> poly.Polynomial:
    """Weighted tableau sum; the plain kinds are the a -> 0 specializations."""
    if kind not in TABLEAU_KINDS:
        raise InvalidShapeForKind(f"unknown symmetric function kind {kind!r}")
    tkind = _KIND_TO_TABLEAU[kind]
    if tkind == "sst" and not isinstance(shape, Partition):
        raise InvalidShapeForKind(f"{kind} needs a Partition shape")
    if tkind != "sst" and not isinstance(shape, StrictPartition):
        raise InvalidShapeForKind(f"{kind} needs a StrictPartition shape")
    total = poly.poly_sum(
        tableaux.weight(t) for t in tableaux.enumerate_tableaux(tkind, shape, n)
    )
    if kind in ("schur", "bigP", "bigQ"):
        total = poly.substitute(total, {"a": poly.ZERO})
    elif kind == "factorialBigP":
        total = poly.substitute(total, {poly.variable("a", 0): poly.ZERO})
    return total


@functools.cache
def det_formula(kind: str, shape, n: int) -> poly.Polynomial:
    """The two determinant expressions for the factorial functions.

    lemma1: entry (k, l) is h_{mu_l - l + k} over x_k..x_n.
    lemma2: entry (k, l) is x_k * q_{lambda_l - 1} over the interleaved
    alphabet starting at x_k; needs a strict shape of length exactly n.
    """
    if kind == "lemma1":
        if not isinstance(shape, Partition):
            raise InvalidShapeForKind("lemma1 needs a Partition shape")
        mu = shape.padded(n)
        matrix = [
            [h_poly(mu[ell] - (ell + 1) + (k + 1), k + 1, n) for ell in range(n)]
            for k in range(n)
        ]
        return poly.det(matrix)
    if kind == "lemma2":
        if not isinstance(shape, StrictPartition):
            raise InvalidShapeForKind("lemma2 needs a StrictPartition shape")
        lam = tuple(shape.parts)
        if len(lam) != n:
            raise InvalidShapeForKind(f"lemma2 needs length {n}, got {lam}")
        matrix = [
            [
                poly.x(k + 1) * q_poly(interleaved_alphabet(k + 1, n), lam[ell] - 1)
                for ell in range(n)
            ]
            for k in range(n)
        ]
        return poly.det(matrix)
    raise InvalidShapeForKind(f"unknown determinant kind {kind!r}")


def theorem_rhs(mu: Partition, n: int, klass: str) -> poly.Polynomial:
    """Product prefactor times the factorial Schur function.

    P class: prod_i x_i * prod_{i<j} (x_i + y_j) * s_mu(x|a).
    Q class: prod_{i<=j} (x_i + y_j) * s_mu(x|a).
    """
    if klass not in ("P", "Q"):
        raise ValueError(f"class must be 'P' or 'Q', got {klass!r}")
    mu.padded(n)  # raises MuTooLong when mu does not fit
    s = tableau_sum("factorialSchur", mu.normalized(), n)
    factors = []
    for i in range(1, n + 1):
        lo = i if klass == "Q" else i + 1
        for j in range(lo, n + 1):
            factors.append(poly.x(i) + poly.y(j))
    if klass == "P":
        factors.extend(poly.x(i) for i in range(1, n + 1))
    return poly.product(factors) * s
