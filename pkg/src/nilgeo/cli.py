"""``nilgeo`` command line.

Exit codes: 0 success / established, 1 negative / not established, 2 input
error.  Set ``NILGEO_COLOR=0`` to disable ANSI colour.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import catalog
from .algebra import AlgebraError
from .exact import fmt_q, parse_rational
from .classify import naturally_reductive_structure
from .fuzz import run_fuzz
from .io import SchemaError, algebra_from_dict, lattice_scales_from_dict, load_document
from .isospectral import ESTABLISHED, NilmanifoldData, gordon_wilson
from .paper import FAIL, all_passed, verify_claims
from .report import Style, build_report, render_nr, render_report, render_verdict

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


class _Source(argparse.Action):
    """Collect file paths and ``--catalog`` names in command-line order."""

    def __call__(self, parser, namespace, values, option_string=None):
        items = list(getattr(namespace, "sources", None) or [])
        kind = "catalog" if option_string == "--catalog" else "path"
        if values is None:
            values = []
        for v in values if isinstance(values, list) else [values]:
            items.append((kind, v))
        namespace.sources = items


def _load(source: tuple[str, str]):
    """Return ``(algebra, label, M_scale, L_scale)``."""
    kind, value = source
    if kind == "catalog":
        try:
            return catalog.get(value), f"catalog:{value}", None, None
        except (KeyError, ValueError) as exc:
            raise InputError(str(exc).strip('"')) from None
    try:
        doc = load_document(value)
        A = algebra_from_dict(doc, Path(value).stem)
        M, L = lattice_scales_from_dict(doc, A.n, A.m)
    except SchemaError as exc:
        raise InputError(f"{value}: {exc}") from None
    except AlgebraError as exc:
        raise InputError(f"{value}: {exc}") from None
    return A, value, M, L


def _parse_scales(text: str | None, flag: str):
    if text is None:
        return None
    try:
        vals = [parse_rational(t) for t in text.split(",")]
    except ValueError as exc:
        raise InputError(f"{flag}: {exc}") from None
    if any(v == 0 for v in vals):
        raise InputError(f"{flag}: scales must be nonzero")
    return vals


def _emit(args, payload: dict, text: str):
    if args.json:
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        print(text)


def _one_source(args):
    sources = getattr(args, "sources", None) or []
    if len(sources) != 1:
        raise InputError("give exactly one algebra (a JSON file or --catalog NAME)")
    return _load(sources[0])


def cmd_inspect(args) -> int:
    A, label, _, _ = _one_source(args)
    report = build_report(A, label, with_checks=not args.no_checks)
    if args.json:
        print(report.to_json())
    else:
        print(render_report(report, Style()))
    return EXIT_OK


def cmd_nr_check(args) -> int:
    A, label, _, _ = _one_source(args)
    outcome = naturally_reductive_structure(A)
    doc = outcome.to_dict()
    _emit(args, {"source": label, "naturally_reductive": doc},
          "\n".join([label] + render_nr(doc, Style())))
    return EXIT_OK if doc["kind"] == "structure" else EXIT_NEGATIVE


def cmd_isospec(args) -> int:
    sources = getattr(args, "sources", None) or [("catalog", "paper-nj"), ("catalog", "paper-njprime")]
    if len(sources) != 2:
        raise InputError("isospec needs exactly two algebras (files or --catalog names)")
    (A, la, Ma, La), (B, lb, Mb, Lb) = _load(sources[0]), _load(sources[1])
    if (A.n, A.m) != (B.n, B.m):
        raise InputError(f"dimension mismatch: {la} is ({A.n},{A.m}), {lb} is ({B.n},{B.m})")
    M_flag = _parse_scales(args.lattice_M, "--lattice-M")
    L_flag = _parse_scales(args.lattice_L, "--lattice-L")
    try:
        DA = NilmanifoldData.with_defaults(A, M_flag or Ma, L_flag or La)
        DB = NilmanifoldData.with_defaults(B, M_flag or Mb, L_flag or Lb)
    except AlgebraError as exc:
        raise InputError(str(exc)) from None
    if args.bound < 0:
        raise InputError("--bound must be non-negative")
    verdict = gordon_wilson(DA, DB, args.mode, args.bound)
    doc = verdict.to_dict()
    doc["sources"] = [la, lb]
    doc["lattice_M"] = [[fmt_q(x) for x in b] for b in DA.lattice_M.basis]
    doc["lattice_L"] = [[fmt_q(x) for x in b] for b in DA.lattice_L.basis]
    _emit(args, doc, f"{la}  vs  {lb}\n" + render_verdict(doc, Style()))
    return EXIT_OK if verdict.overall == ESTABLISHED else EXIT_NEGATIVE


def cmd_paper_verify(args) -> int:
    rows = verify_claims()
    ok = all_passed(rows)
    if args.json:
        print(json.dumps({"rows": [r.to_dict() for r in rows], "all_passed": ok}, indent=2, ensure_ascii=False))
    else:
        s = Style()
        width = max(len(r.id) for r in rows)
        for r in rows:
            st = {"PASS": s.good, "FAIL": s.bad}.get(r.status, s.warn)(f"{r.status:<7}")
            print(f"{st} {r.id:<{width}}  {r.claim}")
            if r.status != "PASS":
                print(f"{'':8} {'':<{width}}  expected: {r.expected}")
                print(f"{'':8} {'':<{width}}  observed: {r.observed}")
                if r.note:
                    print(f"{'':8} {'':<{width}}  note: {r.note}")
        fails = sum(r.status == FAIL for r in rows)
        print(f"{len(rows)} claims, {fails} failed")
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_fuzz(args) -> int:
    if args.count < 1:
        raise InputError("--count must be at least 1")
    if args.n < 0 or args.m < 0:
        raise InputError("--n and --m must be non-negative")
    summary = run_fuzz(args.seed, args.count, args.n, args.m, args.workers, args.dump)
    doc = summary.to_dict()
    text = (f"fuzz seed={args.seed} count={args.count} n={args.n} m={args.m}: "
            f"{summary.identities_checked} identities checked, {len(summary.discrepancies)} discrepancies")
    if summary.discrepancies and not args.json:
        text += "\n" + "\n".join(f"  case {d['case']} ({d['catalog']}): {d['check']}" for d in summary.discrepancies)
    _emit(args, doc, text)
    return EXIT_OK if not summary.discrepancies else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nilgeo", description="Exact geometry of metric 2-step nilpotent Lie algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_sources(p, nargs):
        p.add_argument("paths", nargs=nargs, action=_Source, metavar="FILE", help="algebra JSON file")
        p.add_argument("--catalog", action=_Source, metavar="NAME",
                       help="catalog algebra, e.g. paper-nj, h3, random-7-4-2")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("inspect", help="full diagnostic report for one algebra")
    with_sources(p, "?")
    p.add_argument("--no-checks", action="store_true", help="skip the oracle/identity sweep")
    p.set_defaults(func=cmd_inspect)

    p = sub.add_parser("nr-check", help="naturally reductive structure or obstruction")
    with_sources(p, "?")
    p.set_defaults(func=cmd_nr_check)

    p = sub.add_parser("isospec", help="isospectrality criteria for a pair")
    with_sources(p, "*")
    p.add_argument("--lattice-M", dest="lattice_M", help="diagonal scales for M, e.g. 1,1,1,1,1,1")
    p.add_argument("--lattice-L", dest="lattice_L", help="diagonal scales for L, e.g. 1/2,1/2,1/2")
    p.add_argument("--mode", choices=("symbolic", "sampled"), default="symbolic")
    p.add_argument("--bound", type=int, default=64, help="squared-length bound for sampled spectra")
    p.set_defaults(func=cmd_isospec)

    p = sub.add_parser("paper-verify", help="replication table for the isospectral pair")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_paper_verify)

    p = sub.add_parser("fuzz", help="closed forms vs oracles on random algebras")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--dump", metavar="DIR", help="write each discrepancy as a JSON case file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_fuzz)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"nilgeo: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
