"""Command line interface.

Subcommands: enumerate, sf, bijection, zfunc, verify, suite.  Polynomial
output uses the canonical text form; object output uses the JSON forms of the
owning modules.  The enumeration cache location is controlled by the
FTOK_CACHE_DIR environment variable (default .ftok-cache/).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import combin, harness, poly, sixvertex, symfun, tableaux
from .shapes import parse_partition, parse_strict_partition
from .tableaux import Tableau

_SF_KINDS = {
    "schur": "schur",
    "factorial-schur": "factorialSchur",
    "p": "bigP",
    "q": "bigQ",
    "factorial-p": "factorialBigP",
    "factorial-q": "factorialBigQ",
}

_STRICT_SHAPE_KINDS = {"shifted", "primed-p", "primed-q", "gtp", "asm"}

_TABLEAU_KIND = {"sst": "sst", "shifted": "shifted", "primed-p": "primedP", "primed-q": "primedQ"}


def _parse_shape(kind: str, text: str):
    if kind in _STRICT_SHAPE_KINDS:
        return parse_strict_partition(text)
    return parse_partition(text)


def _cmd_enumerate(args) -> int:
    shape = _parse_shape(args.kind, args.shape)
    if args.kind in ("gtp", "asm"):
        n = len(shape.parts)
    else:
        if args.n is None:
            raise SystemExit("--n is required for tableau kinds")
        n = args.n
    if args.count_only:
        kind = _TABLEAU_KIND.get(args.kind, args.kind)
        print(harness.cached_enumeration_count(kind, shape, n))
        return 0
    if args.kind == "gtp":
        objects = (g.to_json() for g in combin.enumerate_gtp(shape))
    elif args.kind == "asm":
        objects = (a.to_json() for a in combin.enumerate_asm(shape))
    else:
        objects = (
            t.to_json()
            for t in tableaux.enumerate_tableaux(_TABLEAU_KIND[args.kind], shape, n)
        )
    if args.json:
        print(json.dumps(list(objects)))
    else:
        for obj in objects:
            print(json.dumps(obj))
    return 0


def _cmd_sf(args) -> int:
    if args.kind in _SF_KINDS:
        kind = _SF_KINDS[args.kind]
        strict = kind not in ("schur", "factorialSchur")
        shape = parse_strict_partition(args.shape) if strict else parse_partition(args.shape)
        _, total = harness.cached_tableau_sum(kind, shape, args.n)
    elif args.kind == "lemma1-det":
        total = symfun.det_formula("lemma1", parse_partition(args.shape), args.n)
    elif args.kind == "lemma2-det":
        total = symfun.det_formula("lemma2", parse_strict_partition(args.shape), args.n)
    else:
        raise SystemExit(f"unknown sf kind {args.kind!r}")
    text = poly.canonical(total)
    print(json.dumps({"polynomial": text}) if args.json else text)
    return 0


def _cmd_bijection(args) -> int:
    with open(args.input, encoding="utf-8") as fh:
        data = json.load(fh)
    src, dst = args.source, args.target
    if src == "shifted":
        g = combin.gtp_from_shifted(Tableau.from_json(data))
    elif src == "gtp":
        g = combin.GTPattern.from_json(data)
    elif src == "asm":
        g = combin.gtp_from_asm(combin.ASM.from_json(data))
    else:
        raise SystemExit(f"unknown source {src!r}")
    if dst == "gtp":
        out = g.to_json()
    elif dst == "asm":
        out = combin.asm_from_gtp(g).to_json()
    elif dst == "cpm":
        out = combin.cpm_from_asm(combin.asm_from_gtp(g)).to_json()
    elif dst == "sic":
        text = sixvertex.render_sic(combin.cpm_from_asm(combin.asm_from_gtp(g)))
        print(json.dumps({"sic": text}) if args.json else text)
        return 0
    else:
        raise SystemExit(f"unknown target {dst!r}")
    print(json.dumps(out))
    return 0


def _cmd_zfunc(args) -> int:
    mu = parse_partition(args.mu)
    total = sixvertex.partition_function(mu, args.n, args.variant)
    text = poly.canonical(total)
    print(json.dumps({"polynomial": text}) if args.json else text)
    return 0


def _spec_from_args(args) -> harness.IdentitySpec:
    params = {}
    if args.mu is not None:
        params["mu"] = args.mu
    if args.lam is not None:
        params["lambda"] = args.lam
    for key in ("n", "m", "p", "q"):
        val = getattr(args, key)
        if val is not None:
            params[key] = val
    return harness.IdentitySpec(args.id, params)


def _print_report(report: harness.IdentityReport, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report.to_json()))
    else:
        status = "PASS" if report.passed else "FAIL"
        line = f"{status} {report.spec.describe()} ({report.elapsed:.3f}s)"
        if not report.passed:
            line += f" diff={report.diff}"
        print(line)


def _cmd_verify(args) -> int:
    try:
        report = harness.verify_identity(_spec_from_args(args))
    except harness.BadParams as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    _print_report(report, args.json)
    return 0 if report.passed else 1


def _cmd_suite(args) -> int:
    try:
        specs = harness.load_suite_config(args.config) if args.config else None
        reports = harness.run_suite(specs, jobs=args.jobs)
    except (harness.BadConfig, harness.BadParams) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    for report in reports:
        _print_report(report, args.json)
    failed = sum(1 for r in reports if not r.passed)
    if not args.json:
        print(f"{len(reports) - failed}/{len(reports)} identities verified")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ftok",
        description="Exact verification of factorial Tokuyama-type identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list combinatorial objects")
    p.add_argument("--kind", required=True, choices=["sst", "shifted", "primed-p", "primed-q", "gtp", "asm"])
    p.add_argument("--shape", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("sf", help="print a symmetric function")
    p.add_argument("--kind", required=True, choices=sorted(_SF_KINDS) + ["lemma1-det", "lemma2-det"])
    p.add_argument("--shape", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_sf)

    p = sub.add_parser("bijection", help="convert between object encodings")
    p.add_argument("--from", dest="source", required=True, choices=["shifted", "gtp", "asm"])
    p.add_argument("--to", dest="target", required=True, choices=["gtp", "asm", "cpm", "sic"])
    p.add_argument("--input", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_bijection)

    p = sub.add_parser("zfunc", help="six-vertex partition function")
    p.add_argument("--variant", required=True, choices=list(sixvertex.VARIANTS))
    p.add_argument("--mu", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_zfunc)

    p = sub.add_parser("verify", help="verify one identity")
    p.add_argument("--id", required=True, choices=list(harness.IDENTITY_IDS))
    p.add_argument("--mu")
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("suite", help="run a batch of identity checks")
    p.add_argument("--config")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_suite)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
