"""Exact sparse Laurent polynomials over the integers.

Variables come in six families (x, y, a, t, z, alpha), ordered
x < y < a < t < z < alpha and then by index.  Monomials map variables to
nonzero (possibly negative) integer exponents; polynomials map monomials to
nonzero arbitrary-precision integer coefficients.  Everything is immutable
and there is no floating point anywhere.

A polynomial has a canonical text form (see :func:`canonical`) with a parser
(:func:`parse`) such that ``parse(canonical(p)) == p``.
"""

from __future__ import annotations

import re
from typing import Callable, Iterable, Mapping, Union

FAMILIES = ("x", "y", "a", "t", "z", "alpha")
_FAMILY_RANK = {f: r for r, f in enumerate(FAMILIES)}
_PRINT_NAME = {"alpha": "al"}
_PARSE_NAME = {"al": "alpha"}


class NonSquareMatrix(ValueError):
    """Raised when a determinant is requested of a non-square matrix."""


class NonInvertibleSubstitution(ValueError):
    """Raised when a Laurent-negative variable maps to a non-unit image."""


class ParseError(ValueError):
    """Raised on malformed canonical polynomial text."""


def variable(family: str, index: int | None = None) -> tuple[int, int]:
    """Internal key for a variable: (family rank, index).

    Family ``t`` carries no index; for ``a`` the index may be 0, all other
    families start at 1.
    """
    if family not in _FAMILY_RANK:
        raise ValueError(f"unknown variable family {family!r}")
    if family == "t":
        if index is not None:
            raise ValueError("variable t carries no index")
        return (_FAMILY_RANK["t"], 0)
    if index is None:
        raise ValueError(f"family {family!r} needs an index")
    low = 0 if family == "a" else 1
    if index < low:
        raise ValueError(f"index {index} out of range for family {family!r}")
    return (_FAMILY_RANK[family], index)


def var_name(var: tuple[int, int]) -> str:
    family = FAMILIES[var[0]]
    if family == "t":
        return "t"
    return _PRINT_NAME.get(family, family) + str(var[1])


Monomial = tuple  # tuple of ((rank, index), exponent), sorted by variable

_UNIT: Monomial = ()


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    exps = dict(m1)
    for v, e in m2:
        ne = exps.get(v, 0) + e
        if ne:
            exps[v] = ne
        else:
            del exps[v]
    return tuple(sorted(exps.items()))


def _mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def _mono_sort_key(m: Monomial):
    # Total degree descending, then variable word ascending (higher power of
    # an earlier variable first).
    return (-_mono_degree(m), tuple((v, -e) for v, e in m))


class Polynomial:
    """Immutable sparse Laurent polynomial with integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                if c:
                    clean[m] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- ring structure -------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        res = dict(self.terms)
        for m, c in other.terms.items():
            nc = res.get(m, 0) + c
            if nc:
                res[m] = nc
            else:
                del res[m]
        return _wrap(res)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return _wrap({m: -c for m, c in self.terms.items()})

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if len(self.terms) > len(other.terms):
            self, other = other, self
        res: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                nc = res.get(m, 0) + c1 * c2
                if nc:
                    res[m] = nc
                else:
                    del res[m]
        return _wrap(res)

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative powers only via substitute()")
        res = ONE
        base = self
        while e:
            if e & 1:
                res = res * base
            base = base * base
            e >>= 1
        return res

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"Polynomial({canonical(self)!r})"

    def is_zero(self) -> bool:
        return not self.terms

    def degree_in(self, var: tuple[int, int]) -> int:
        """Largest absolute exponent of ``var``; 0 when the variable is absent."""
        best = 0
        for m in self.terms:
            for v, e in m:
                if v == var:
                    best = max(best, abs(e))
        return best


def _wrap(terms: dict) -> Polynomial:
    p = Polynomial.__new__(Polynomial)
    object.__setattr__(p, "terms", terms)
    return p


ZERO = Polynomial()
ONE = Polynomial({_UNIT: 1})


def const(c: int) -> Polynomial:
    return Polynomial({_UNIT: c})


def var_poly(var: tuple[int, int], exponent: int = 1) -> Polynomial:
    if exponent == 0:
        return ONE
    return Polynomial({((var, exponent),): 1})


def x(i: int) -> Polynomial:
    return var_poly(variable("x", i))


def y(i: int) -> Polynomial:
    return var_poly(variable("y", i))


def a(j: int) -> Polynomial:
    return var_poly(variable("a", j))


def t() -> Polynomial:
    return var_poly(variable("t"))


def z(i: int) -> Polynomial:
    return var_poly(variable("z", i))


def alpha(j: int) -> Polynomial:
    return var_poly(variable("alpha", j))


def product(factors: Iterable[Polynomial]) -> Polynomial:
    res = ONE
    for f in factors:
        res = res * f
    return res


def poly_sum(terms: Iterable[Polynomial]) -> Polynomial:
    res: dict[Monomial, int] = {}
    for p in terms:
        for m, c in p.terms.items():
            nc = res.get(m, 0) + c
            if nc:
                res[m] = nc
            else:
                del res[m]
    return _wrap(res)


# -- substitution -------------------------------------------------------

SubstRules = Mapping[Union[tuple, str], Union[Polynomial, Callable[[int], Polynomial]]]


def _image_of(var: tuple[int, int], rules: SubstRules) -> Polynomial | None:
    if var in rules:
        img = rules[var]
        return img(var[1]) if callable(img) else img
    family = FAMILIES[var[0]]
    if family in rules:
        img = rules[family]
        return img(var[1]) if callable(img) else img
    return None


def _mono_invert(p: Polynomial, var) -> Polynomial:
    """Inverse of a unit (+-1 times a monomial); error otherwise."""
    if len(p.terms) != 1:
        raise NonInvertibleSubstitution(
            f"{var_name(var)} has a negative exponent but maps to a non-monomial"
        )
    (m, c), = p.terms.items()
    if c not in (1, -1):
        raise NonInvertibleSubstitution(
            f"{var_name(var)} has a negative exponent but maps to a non-unit coefficient"
        )
    return _wrap({tuple((v, -e) for v, e in m): c})


def substitute(p: Polynomial, rules: SubstRules) -> Polynomial:
    """Apply a substitution map; a ring homomorphism on its domain.

    ``rules`` maps either a concrete variable key (``variable("y", 2)``) or a
    whole family (``"y"``) to a replacement polynomial, or to a callable taking
    the index.  Variables not covered are left alone.  A variable occurring
    with a negative exponent must map to an invertible monomial.
    """
    out = ZERO
    cache: dict = {}
    for m, c in p.terms.items():
        term = const(c)
        for var, e in m:
            key = (var, e)
            factor = cache.get(key)
            if factor is None:
                img = _image_of(var, rules)
                if img is None:
                    factor = var_poly(var, e)
                elif e >= 0:
                    factor = img ** e
                else:
                    factor = _mono_invert(img, var) ** (-e)
                cache[key] = factor
            term = term * factor
        out = out + term
    return out


# -- determinant --------------------------------------------------------

def det(matrix) -> Polynomial:
    """Exact determinant via dynamic programming over column subsets.

    Avoids polynomial division entirely; intended for the small matrices
    (n <= ~6) arising from the determinant formulas.
    """
    n = len(matrix)
    if n == 0 or any(len(row) != n for row in matrix):
        raise NonSquareMatrix(f"expected a nonempty square matrix, got {n} rows")
    # d maps a column bitmask S (|S| = processed rows) to the minor determinant.
    d = {0: ONE}
    for r in range(n):
        nd: dict[int, Polynomial] = {}
        for mask, val in d.items():
            if val.is_zero():
                continue
            below = 0  # columns in mask smaller than c
            for c in range(n):
                bit = 1 << c
                if mask & bit:
                    below += 1
                    continue
                entry = matrix[r][c]
                if entry.is_zero():
                    continue
                contrib = val * entry
                if (r + below) & 1:
                    contrib = -contrib
                key = mask | bit
                nd[key] = nd.get(key, ZERO) + contrib
        d = nd
    return d.get((1 << n) - 1, ZERO)


# -- canonical text form ------------------------------------------------

def canonical(p: Polynomial) -> str:
    """Deterministic text encoding; ``parse`` inverts it exactly."""
    if not p.terms:
        return "0"
    items = sorted(p.terms.items(), key=lambda kv: _mono_sort_key(kv[0]))
    pieces = []
    for m, c in items:
        body = "*".join(
            var_name(v) + (f"^{e}" if e != 1 else "")
            for v, e in sorted(m, key=lambda ve: var_name(ve[0]))
        )
        mag = abs(c)
        if not m:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}*{body}"
        pieces.append((c < 0, text))
    out = ("-" if pieces[0][0] else "") + pieces[0][1]
    for neg, text in pieces[1:]:
        out += (" - " if neg else " + ") + text
    return out


_FACTOR_RE = re.compile(r"^([a-z]+?)(\d+)?(?:\^(-?\d+))?$")


def _parse_factor(tok: str) -> tuple[tuple[int, int], int]:
    m = _FACTOR_RE.match(tok)
    if not m:
        raise ParseError(f"bad factor {tok!r}")
    name, idx, exp = m.groups()
    family = _PARSE_NAME.get(name, name)
    try:
        if family == "t":
            if idx is not None:
                raise ParseError("variable t carries no index")
            var = variable("t")
        else:
            if idx is None:
                raise ParseError(f"missing index in {tok!r}")
            var = variable(family, int(idx))
    except ValueError as e:
        raise ParseError(str(e)) from e
    return var, int(exp) if exp is not None else 1


def parse(text: str) -> Polynomial:
    """Parse the canonical grammar produced by :func:`canonical`."""
    text = text.strip()
    if not text:
        raise ParseError("empty input")
    if text == "0":
        return ZERO
    sign = 1
    if text.startswith("-"):
        sign = -1
        text = text[1:]
    chunks = re.split(r" ([+-]) ", text)
    terms = [(sign, chunks[0])]
    for op, chunk in zip(chunks[1::2], chunks[2::2]):
        terms.append((1 if op == "+" else -1, chunk))
    result = ZERO
    for sgn, chunk in terms:
        factors = chunk.split("*")
        coeff = sgn
        mono: dict = {}
        start = 0
        if re.fullmatch(r"\d+", factors[0]):
            coeff *= int(factors[0])
            start = 1
        for tok in factors[start:]:
            var, e = _parse_factor(tok)
            ne = mono.get(var, 0) + e
            if ne:
                mono[var] = ne
            else:
                del mono[var]
        key = tuple(sorted(mono.items()))
        result = result + Polynomial({key: coeff})
    return result
