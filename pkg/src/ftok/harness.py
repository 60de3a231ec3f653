"""Identity verification: specs, reports, the suite runner, and the cache.

Every check computes both sides through the owning modules and compares the
canonical form of lhs - rhs against zero, so term order can never produce a
false failure.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import combin, paths, poly, sixvertex, symfun, tableaux
from .shapes import (
    MuTooLong,
    Partition,
    StrictPartition,
    conjugate,
    shape_for,
)
from .symfun import ShiftedAlphabet, q_poly, x_slot, y_slot

IDENTITY_IDS = (
    "theorem1P",
    "theorem1Q",
    "lemma1",
    "lemma2",
    "lemma3a",
    "lemma3b",
    "lemma4",
    "cor1_ikeda",
    "cor2_asm",
    "cor3_gtp",
    "cor4_tokuyama",
    "cor5_bmn",
    "cor6_lascoux",
    "pathsLemma1",
    "pathsLemma2",
)

CACHE_VERSION = "1"


class BadParams(ValueError):
    pass


class BadConfig(ValueError):
    pass


@dataclass(frozen=True)
class IdentitySpec:
    id: str
    params: dict = field(default_factory=dict)

    def describe(self) -> str:
        bits = []
        for key in ("mu", "lambda", "n", "m", "p", "q"):
            if key in self.params:
                val = self.params[key]
                if isinstance(val, (Partition, StrictPartition)):
                    val = "(" + val.serialize() + ")"
                bits.append(f"{key}={val}")
        return f"{self.id}[{', '.join(bits)}]"


@dataclass(frozen=True)
class IdentityReport:
    spec: IdentitySpec
    lhs: str
    rhs: str
    passed: bool
    diff: str
    elapsed: float

    def to_json(self) -> dict:
        params = {}
        for k, v in self.spec.params.items():
            params[k] = v.serialize() if isinstance(v, (Partition, StrictPartition)) else v
        return {
            "id": self.spec.id,
            "params": params,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "pass": self.passed,
            "diff": self.diff,
            "elapsed": self.elapsed,
        }


# -- parameter handling -------------------------------------------------

def _get_int(params: dict, key: str) -> int:
    if key not in params:
        raise BadParams(f"missing parameter {key!r}")
    v = params[key]
    if not isinstance(v, int):
        raise BadParams(f"parameter {key!r} must be an integer, got {v!r}")
    return v


def _get_mu(params: dict) -> Partition:
    if "mu" not in params:
        raise BadParams("missing parameter 'mu'")
    v = params["mu"]
    if isinstance(v, Partition):
        return v
    if isinstance(v, str):
        from .shapes import parse_partition

        try:
            return parse_partition(v)
        except ValueError as e:
            raise BadParams(str(e)) from e
    raise BadParams(f"parameter 'mu' must be a partition, got {v!r}")


def _mu_delta(params: dict, n: int) -> StrictPartition:
    if "lambda" in params:
        v = params["lambda"]
        if isinstance(v, str):
            from .shapes import parse_strict_partition

            try:
                v = parse_strict_partition(v)
            except ValueError as e:
                raise BadParams(str(e)) from e
        if not isinstance(v, StrictPartition):
            raise BadParams(f"parameter 'lambda' must be strict, got {v!r}")
        if len(v.parts) != n:
            raise BadParams(f"lambda must have length {n}")
        return v
    mu = _get_mu(params)
    try:
        return shape_for(mu, n, "delta")
    except MuTooLong as e:
        raise BadParams(str(e)) from e


# -- the individual identities ------------------------------------------

def _check_theorem1(params: dict, klass: str):
    mu = _get_mu(params)
    n = _get_int(params, "n")
    lam = _mu_delta({"mu": mu}, n)
    kind = "factorialBigP" if klass == "P" else "factorialBigQ"
    lhs = symfun.tableau_sum(kind, lam, n)
    rhs = symfun.theorem_rhs(mu, n, klass)
    return lhs, rhs


def _check_lemma1(params: dict):
    mu = _get_mu(params)
    n = _get_int(params, "n")
    try:
        lhs = symfun.det_formula("lemma1", mu, n)
        rhs = symfun.tableau_sum("factorialSchur", mu.normalized(), n)
    except (MuTooLong, symfun.InvalidShapeForKind) as e:
        raise BadParams(str(e)) from e
    return lhs, rhs


def _check_lemma2(params: dict):
    n = _get_int(params, "n")
    lam = _mu_delta(params, n)
    try:
        lhs = symfun.det_formula("lemma2", lam, n)
    except symfun.InvalidShapeForKind as e:
        raise BadParams(str(e)) from e
    rhs = symfun.tableau_sum("factorialBigP", lam, n)
    return lhs, rhs


def _check_lemma3a(params: dict):
    m = _get_int(params, "m")
    p = _get_int(params, "p")
    n = _get_int(params, "n")
    if not (m >= 0 and 1 <= p < n):
        raise BadParams(f"need m >= 0 and 1 <= p < n, got m={m}, p={p}, n={n}")
    left1 = symfun.interleaved_alphabet(p, n)
    left2 = symfun.interleaved_alphabet(p + 1, n)
    slots = [x_slot(p, 0), x_slot(p + 1, 1)]
    for j in range(p + 2, n + 1):
        slots.append(y_slot(j, 1))
        slots.append(x_slot(j, 1))
    right = ShiftedAlphabet(slots)
    lhs = q_poly(left1, m) - q_poly(left2, m)
    rhs = (poly.x(p) + poly.y(p + 1)) * q_poly(right, m - 1)
    return lhs, rhs


def _check_lemma3b(params: dict):
    m = _get_int(params, "m")
    p = _get_int(params, "p")
    q = _get_int(params, "q")
    n = _get_int(params, "n")
    if not (m >= 0 and 1 <= p < q <= n):
        raise BadParams(f"need 1 <= p < q <= n, got p={p}, q={q}, n={n}")
    l1 = [x_slot(r, r - p) for r in range(p, q)]
    l1 += [y_slot(q, q - 1 - p), x_slot(q, q - 1 - p)]
    l2 = [x_slot(r, r - p - 1) for r in range(p + 1, q + 1)]
    rr = [x_slot(r, r - p) for r in range(p, q + 1)]
    for j in range(q + 1, n + 1):
        l1 += [y_slot(j, q - 1 - p), x_slot(j, q - 1 - p)]
        l2 += [y_slot(j, q - p - 1), x_slot(j, q - p - 1)]
        rr += [y_slot(j, q - p), x_slot(j, q - p)]
    lhs = q_poly(ShiftedAlphabet(l1), m) - q_poly(ShiftedAlphabet(l2), m)
    rhs = (poly.x(p) + poly.y(q)) * q_poly(ShiftedAlphabet(rr), m - 1)
    return lhs, rhs


def _check_lemma4(params: dict):
    # encoded as polynomials: sum of t^(#SW - #NE) against count * t^|mu|
    mu = _get_mu(params)
    n = _get_int(params, "n")
    lam = _mu_delta({"mu": mu}, n)
    tvar = poly.variable("t")
    lhs = poly.ZERO
    count = 0
    for a in combin.enumerate_asm(lam):
        c = combin.cpm_from_asm(a)
        e = c.count("SW") - c.count("NE")
        lhs = lhs + poly.var_poly(tvar, e)
        count += 1
    rhs = poly.const(count) * poly.var_poly(tvar, mu.weight())
    return lhs, rhs


def _check_cor1(params: dict):
    mu = _get_mu(params)
    n = _get_int(params, "n")
    lam = _mu_delta({"mu": mu}, n)
    big_q = symfun.tableau_sum("factorialBigQ", lam, n)
    lhs = poly.substitute(big_q, {"y": lambda i: poly.x(i)})
    factors = [poly.const(2) * poly.x(i) for i in range(1, n + 1)]
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            factors.append(poly.x(i) + poly.x(j))
    rhs = poly.product(factors) * symfun.tableau_sum(
        "factorialSchur", mu.normalized(), n
    )
    return lhs, rhs


def _check_cor2(params: dict):
    mu = _get_mu(params)
    n = _get_int(params, "n")
    lhs = sixvertex.partition_function(mu, n, "general")
    rhs = symfun.theorem_rhs(mu, n, "P")
    return lhs, rhs


def _check_cor3(params: dict):
    mu = _get_mu(params)
    n = _get_int(params, "n")
    lam = _mu_delta({"mu": mu}, n)
    lhs = poly.poly_sum(combin.weight_gtp(g) for g in combin.enumerate_gtp(lam))
    rhs = symfun.theorem_rhs(mu, n, "P")
    return lhs, rhs


def _check_cor4(params: dict):
    mu = _get_mu(params)
    n = _get_int(params, "n")
    try:
        top = shape_for(mu, n, "rho")
    except MuTooLong as e:
        raise BadParams(str(e)) from e
    tvar = poly.variable("t")
    lhs = poly.ZERO
    for g in combin.enumerate_gtp(top):
        counts = combin.triple_counts(g)
        term = poly.var_poly(tvar, counts["R"]) * (poly.ONE + poly.t()) ** counts["B"]
        prev = 0
        for i in range(1, n + 1):
            cur = sum(g.rows[i - 1])
            term = term * poly.var_poly(poly.variable("x", i), cur - prev)
            prev = cur
        lhs = lhs + term
    factors = [
        poly.x(i) + poly.t() * poly.x(j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
    ]
    rhs = poly.product(factors) * symfun.tableau_sum("schur", mu.normalized(), n)
    return lhs, rhs


def _check_cor5(params: dict):
    mu = _get_mu(params)
    n = _get_int(params, "n")
    mu.padded(n)
    lhs = sixvertex.partition_function(mu, n, "bmn")
    s = symfun.tableau_sum("factorialSchur", mu.normalized(), n)
    s_zalpha = poly.substitute(
        s, {"x": lambda i: poly.z(i), "a": lambda j: poly.alpha(j)}
    )
    factors = [
        poly.t() * poly.z(i) + poly.z(j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
    ]
    rhs = poly.product(factors) * s_zalpha
    return lhs, rhs


def _check_cor6(params: dict):
    mu = _get_mu(params)
    n = _get_int(params, "n")
    mu.padded(n)
    lhs = sixvertex.partition_function(mu, n, "lascoux")
    kappa = Partition(mu.padded(n)[i] + (n - 1 - i) for i in range(n))
    kappa_conj = conjugate(kappa)
    factors = [poly.var_poly(poly.variable("x", i), n - i) for i in range(1, n)]
    for j, part in enumerate(kappa_conj.parts, start=1):
        factors.append(poly.var_poly(poly.variable("a", j), -part))
    sign = poly.const(-1 if kappa.weight() % 2 else 1)
    rhs = (
        sign
        * poly.product(factors)
        * symfun.tableau_sum("factorialSchur", mu.normalized(), n)
    )
    return lhs, rhs


def _check_paths_lemma1(params: dict):
    mu = _get_mu(params)
    n = _get_int(params, "n")
    mu.padded(n)
    lhs = paths.nonintersecting_sum("sst", mu, n)
    rhs = symfun.det_formula("lemma1", mu, n)
    return lhs, rhs


def _check_paths_lemma2(params: dict):
    n = _get_int(params, "n")
    lam = _mu_delta(params, n)
    lhs = paths.nonintersecting_sum("pst", lam, n)
    rhs = symfun.det_formula("lemma2", lam, n)
    return lhs, rhs


_CHECKS = {
    "theorem1P": lambda p: _check_theorem1(p, "P"),
    "theorem1Q": lambda p: _check_theorem1(p, "Q"),
    "lemma1": _check_lemma1,
    "lemma2": _check_lemma2,
    "lemma3a": _check_lemma3a,
    "lemma3b": _check_lemma3b,
    "lemma4": _check_lemma4,
    "cor1_ikeda": _check_cor1,
    "cor2_asm": _check_cor2,
    "cor3_gtp": _check_cor3,
    "cor4_tokuyama": _check_cor4,
    "cor5_bmn": _check_cor5,
    "cor6_lascoux": _check_cor6,
    "pathsLemma1": _check_paths_lemma1,
    "pathsLemma2": _check_paths_lemma2,
}


def verify_identity(spec: IdentitySpec) -> IdentityReport:
    if spec.id not in _CHECKS:
        raise BadParams(f"unknown identity id {spec.id!r}")
    start = time.perf_counter()
    try:
        lhs, rhs = _CHECKS[spec.id](spec.params)
    except MuTooLong as e:
        raise BadParams(str(e)) from e
    diff = lhs - rhs
    diff_text = poly.canonical(diff)
    return IdentityReport(
        spec=spec,
        lhs=poly.canonical(lhs),
        rhs=poly.canonical(rhs),
        passed=diff_text == "0",
        diff=diff_text,
        elapsed=time.perf_counter() - start,
    )


# -- suite --------------------------------------------------------------

def partitions_up_to(max_weight: int, max_parts: int):
    """All partitions with weight <= max_weight and at most max_parts parts."""
    out = [Partition()]

    def grow(prefix, remaining, cap):
        for part in range(min(remaining, cap), 0, -1):
            if len(prefix) < max_parts:
                cand = prefix + [part]
                out.append(Partition(cand))
                grow(cand, remaining - part, part)

    grow([], max_weight, max_weight)
    out.sort(key=lambda p: (p.weight(), p.parts))
    return out


def default_suite() -> list[IdentitySpec]:
    specs = []
    for ident in ("theorem1P", "theorem1Q", "lemma1", "lemma2"):
        for n in (1, 2, 3):
            for mu in partitions_up_to(4, n):
                specs.append(IdentitySpec(ident, {"mu": mu, "n": n}))
        for mu in (Partition(), Partition((1,))):
            specs.append(IdentitySpec(ident, {"mu": mu, "n": 4}))
    for n in range(2, 5):
        for p in range(1, n):
            for m in range(1, 4):
                specs.append(IdentitySpec("lemma3a", {"m": m, "p": p, "n": n}))
            for q in range(p + 1, n + 1):
                for m in range(1, 4):
                    specs.append(
                        IdentitySpec("lemma3b", {"m": m, "p": p, "q": q, "n": n})
                    )
    for ident in (
        "lemma4",
        "cor1_ikeda",
        "cor2_asm",
        "cor3_gtp",
        "cor4_tokuyama",
        "cor5_bmn",
        "cor6_lascoux",
        "pathsLemma1",
    ):
        for n in (1, 2, 3):
            for mu in partitions_up_to(3, n):
                specs.append(IdentitySpec(ident, {"mu": mu, "n": n}))
    for n in (1, 2, 3):
        for mu in partitions_up_to(2, n):
            specs.append(IdentitySpec("pathsLemma2", {"mu": mu, "n": n}))
    return specs


def run_suite(specs=None, jobs: int = 1) -> list[IdentityReport]:
    if specs is None:
        specs = default_suite()
    specs = list(specs)
    for spec in specs:
        if not isinstance(spec, IdentitySpec):
            raise BadConfig(f"suite entries must be IdentitySpec, got {spec!r}")
    if jobs <= 1:
        return [verify_identity(s) for s in specs]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(verify_identity, specs))


def load_suite_config(path: str) -> list[IdentitySpec]:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise BadConfig(str(e)) from e
    if not isinstance(data, list):
        raise BadConfig("suite config must be a JSON list")
    specs = []
    for entry in data:
        if not isinstance(entry, dict) or "id" not in entry:
            raise BadConfig(f"bad suite entry: {entry!r}")
        params = {k: v for k, v in entry.items() if k != "id"}
        specs.append(IdentitySpec(entry["id"], params))
    return specs


# -- cache --------------------------------------------------------------

def cache_dir() -> str:
    return os.environ.get("FTOK_CACHE_DIR", ".ftok-cache")


def _cache_path(request: dict) -> str:
    blob = json.dumps(request, sort_keys=True, separators=(",", ":"))
    digest = hashlib.sha256(blob.encode("utf-8")).hexdigest()
    return os.path.join(cache_dir(), digest + ".json")


def cache_get(request: dict):
    path = _cache_path(request)
    try:
        with open(path, encoding="utf-8") as fh:
            entry = json.load(fh)
    except (OSError, json.JSONDecodeError):
        return None
    if entry.get("version") != CACHE_VERSION or entry.get("request") != request:
        return None
    return entry


def cache_put(request: dict, count: int, canonical_polynomial):
    entry = {
        "request": request,
        "count": count,
        "canonical_polynomial": canonical_polynomial,
        "version": CACHE_VERSION,
    }
    path = _cache_path(request)
    os.makedirs(cache_dir(), exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=cache_dir(), suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump(entry, fh, sort_keys=True)
        os.replace(tmp, path)  # atomic on POSIX
    finally:
        if os.path.exists(tmp):
            os.unlink(tmp)
    return entry


def cached_tableau_sum(kind: str, shape, n: int) -> tuple[int, poly.Polynomial]:
    request = {
        "op": "tableau_sum",
        "kind": kind,
        "shape": list(shape.parts),
        "n": n,
    }
    hit = cache_get(request)
    if hit is not None:
        return hit["count"], poly.parse(hit["canonical_polynomial"])
    tkind = symfun._KIND_TO_TABLEAU[kind]
    count = sum(1 for _ in tableaux.enumerate_tableaux(tkind, shape, n))
    total = symfun.tableau_sum(kind, shape, n)
    cache_put(request, count, poly.canonical(total))
    return count, total


def cached_enumeration_count(kind: str, shape, n: int) -> int:
    request = {
        "op": "enumerate",
        "kind": kind,
        "shape": list(shape.parts),
        "n": n,
    }
    hit = cache_get(request)
    if hit is not None:
        return hit["count"]
    if kind in ("gtp", "asm"):
        count = sum(1 for _ in combin.enumerate_gtp(shape))
    else:
        count = sum(1 for _ in tableaux.enumerate_tableaux(kind, shape, n))
    cache_put(request, count, None)
    return count
