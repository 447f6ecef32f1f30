"""Randomized closed-form vs oracle comparison over seeded random algebras."""

from __future__ import annotations

import json
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .catalog import random_algebra
from .checks import check_algebra
from .io import algebra_to_dict


@dataclass
class FuzzSummary:
    seed: int
    count: int
    n: int
    m: int
    identities_checked: int = 0
    discrepancies: list[dict] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"seed": self.seed, "count": self.count, "n": self.n, "m": self.m,
                "identities_checked": self.identities_checked,
                "discrepancy_count": len(self.discrepancies), "discrepancies": self.discrepancies}


def case_seeds(seed: int, count: int) -> list[int]:
    rng = random.Random(seed)
    return [rng.randrange(10 ** 9) for _ in range(count)]


def _run_case(index: int, case_seed: int, n: int, m: int) -> tuple[int, list[dict]]:
    A = random_algebra(case_seed, n, m)
    checks = check_algebra(A)
    found = []
    for name, c in checks.items():
        if c.failed:
            found.append({
                "case": index,
                "catalog": f"random-{case_seed}-{n}-{m}",
                "check": name,
                "failed": c.failed,
                "first_failure": c.first_failure,
                "algebra": algebra_to_dict(A),
            })
    return sum(c.checked for c in checks.values()), found


def run_fuzz(seed: int, count: int, n: int, m: int, workers: int = 1,
             dump_dir: str | Path | None = None) -> FuzzSummary:
    """Results are merged by case index, so the summary does not depend on ``workers``."""
    if count < 1:
        raise ValueError("count must be at least 1")
    seeds = case_seeds(seed, count)
    args = [(i, s, n, m) for i, s in enumerate(seeds)]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda a: _run_case(*a), args))
    else:
        results = [_run_case(*a) for a in args]
    summary = FuzzSummary(seed, count, n, m)
    for checked, found in results:
        summary.identities_checked += checked
        summary.discrepancies.extend(found)
    if dump_dir is not None and summary.discrepancies:
        out = Path(dump_dir)
        out.mkdir(parents=True, exist_ok=True)
        for d in summary.discrepancies:
            path = out / f"case-{d['case']:04d}-{d['check']}.json"
            path.write_text(json.dumps(d, indent=2) + "\n", encoding="utf-8")
    return summary
