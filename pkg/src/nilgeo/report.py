"""Diagnostic reports and their text/JSON renderings.

A report holds only JSON-native values (rationals already formatted as
``"p/q"`` strings), so ``DiagnosticReport.from_json(r.to_json()) == r``.
Text and JSON output are both rendered from the same report object.
"""

from __future__ import annotations

import json
import os
import sys
from dataclasses import asdict, dataclass, field

from .abelian import coordinate_abelian_census
from .algebra import MetricTwoStepAlgebra
from .checks import check_algebra, summarize
from .classify import naturally_reductive_structure, property_report, scalar_invariants


@dataclass
class DiagnosticReport:
    identity: dict
    properties: dict
    scalars: dict
    naturally_reductive: dict
    oracle_checks: dict | None = None
    isospectral: dict | None = None
    abelian: dict | None = None
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, ensure_ascii=False)

    @classmethod
    def from_dict(cls, doc: dict) -> "DiagnosticReport":
        return cls(**doc)

    @classmethod
    def from_json(cls, text: str) -> "DiagnosticReport":
        return cls.from_dict(json.loads(text))


def build_report(A: MetricTwoStepAlgebra, source: str, with_checks: bool = True,
                 census: bool = True) -> DiagnosticReport:
    identity = {"name": A.name, "source": source, "dim_v": A.n, "dim_z": A.m,
                "v_labels": list(A.v_labels), "z_labels": list(A.z_labels)}
    props = property_report(A)
    nr = naturally_reductive_structure(A)
    nr_doc = nr.to_dict()
    if nr_doc["kind"] == "structure":
        # per-equation tallies are kept; the full table is reproducible from the bracket
        nr_doc["equations"] = {k: {"passed": v["passed"], "checked": v["checked"]}
                               for k, v in nr_doc["equations"].items()}
    oracle = summarize(check_algebra(A)) if with_checks else None
    abel = None
    if census:
        abel = {str(d): coordinate_abelian_census(A, d).to_dict() for d in range(A.n + 1)}
    return DiagnosticReport(
        identity=identity,
        properties=props.to_dict(),
        scalars=scalar_invariants(A).to_dict(),
        naturally_reductive=nr_doc,
        oracle_checks=oracle,
        abelian=abel,
    )


# -- text rendering ------------------------------------------------------------

class Style:
    def __init__(self, enabled: bool | None = None, stream=None):
        if enabled is None:
            stream = stream or sys.stdout
            enabled = os.environ.get("NILGEO_COLOR", "1") != "0" and getattr(stream, "isatty", lambda: False)()
        self.enabled = enabled

    def _wrap(self, code: str, text: str) -> str:
        return f"\033[{code}m{text}\033[0m" if self.enabled else text

    def good(self, text: str) -> str:
        return self._wrap("32", text)

    def bad(self, text: str) -> str:
        return self._wrap("31", text)

    def warn(self, text: str) -> str:
        return self._wrap("33", text)

    def bold(self, text: str) -> str:
        return self._wrap("1", text)

    def flag(self, value: bool) -> str:
        return self.good("yes") if value else self.bad("no")


def render_report(r: DiagnosticReport, style: Style | None = None) -> str:
    s = style or Style(False)
    ident = r.identity
    out = [s.bold(f"{ident['name'] or ident['source']}  (dim v = {ident['dim_v']}, dim z = {ident['dim_z']})"),
           f"  source: {ident['source']}"]
    p = r.properties
    out.append(f"  Type A:               {s.flag(p['type_A'])}")
    out.append(f"  Heisenberg type:      {s.flag(p['heisenberg_type'])}")
    mod = p["modified_heisenberg"]
    out.append(f"  modified Heisenberg:  {s.flag(mod is not None)}" + (f"  lambda table {mod}" if mod else ""))
    out.append(f"  J = C Id:             C = {r.scalars['C'] or 'not scalar'}")
    out.append(f"  B = D Id:             D = {r.scalars['D'] or 'not scalar'}")
    out.append(f"  parallel Ricci:       {s.flag(p['parallel_ricci'])}")
    for key, w in p.get("witnesses", {}).items():
        out.append(f"    witness ({key}): {w}")
    out.extend(render_nr(r.naturally_reductive, s))
    if r.oracle_checks is not None:
        oc = r.oracle_checks
        status = s.good("0 failures") if oc["failures"] == 0 else s.bad(f"{oc['failures']} failures")
        out.append(f"  oracle/identity checks: {oc['identities_checked']} verified, {status}")
    if r.abelian:
        counts = ", ".join(f"{d}:{c['count']}" for d, c in r.abelian.items())
        out.append(f"  coordinate abelian census (w_dim:count): {counts}")
    return "\n".join(out)


def render_nr(nr: dict, s: Style) -> list[str]:
    kind = nr["kind"]
    if kind == "structure":
        out = [f"  naturally reductive:  {s.good('structure')} (unique={nr['unique']})"]
        for a, row in enumerate(nr["central_bracket"]):
            for b, vec in enumerate(row):
                if a < b:
                    out.append(f"    T~(z{a + 1}, z{b + 1}) = ({', '.join(vec)})")
        failing = [k for k, v in nr["flags"].items() if not v]
        out.append("    checks: " + ("all pass" if not failing else s.bad(f"failing {failing}")))
        return out
    if kind == "obstruction":
        out = [f"  naturally reductive:  {s.bad('obstruction')} {nr['obstruction']}"]
        if "pair" in nr:
            out.append(f"    central pair: {tuple(nr['pair'])}")
        if "residual" in nr:
            out.append("    residual [j_a, j_b] - j_W*:")
            out.extend("      [" + ", ".join(f"{x:>4}" for x in row) + "]" for row in nr["residual"])
        if nr.get("instance"):
            out.append(f"    instance: {nr['instance']}")
        return out
    return [f"  naturally reductive:  {s.warn('inapplicable')} ({nr['reason']})"]


def render_verdict(v: dict, s: Style | None = None) -> str:
    s = s or Style(False)
    out = []
    for key, label in (("criterion_i", "(i)   eigenvalues of j_Z"),
                       ("criterion_ii", "(ii)  [M, M] in 2L"),
                       ("criterion_iii", "(iii) kernel lattices")):
        c = v[key]
        st = c["status"]
        colored = s.good(st) if st == "pass" else (s.bad(st) if st == "fail" else s.warn(st))
        line = f"  {label}: {colored}"
        if c.get("reason"):
            line += f"  ({c['reason']})"
        out.append(line)
        if c.get("witness"):
            out.append(f"      witness: {json.dumps(c['witness'])}")
    d1 = v["criterion_i"]["details"]
    if d1:
        out.append(f"  charpoly a: {d1.get('charpoly_a')}")
        out.append(f"  charpoly b: {d1.get('charpoly_b')}")
    overall = v["overall"]
    out.append(s.bold("verdict: ") + (s.good(overall) if overall == "isospectral-by-criterion" else s.warn(overall)))
    return "\n".join(out)
