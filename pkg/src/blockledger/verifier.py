"""Exhaustive sweeps over all blocks of S_n (and A_n) for ranges of n and p."""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .alternating import verify_alt
from .blocks import BlockLabel, block_labels, block_report
from .constructions import verify_family
from .errors import CorruptionError
from .partition import check_prime, format_partition, partition_count

CROSS_CHECK_MAX_N = 25


@dataclass
class SweepConfig:
    max_n: int
    primes: list[int]
    include_alternating: bool = False
    cross_check_heights: bool | None = None  # None: on for n <= 25
    jobs: int = 1

    def __post_init__(self):
        if self.max_n < 1:
            raise ValueError("max_n must be at least 1")
        if not self.primes:
            raise ValueError("at least one prime is needed")
        for p in self.primes:
            check_prime(p)
        self.primes = sorted(set(self.primes))

    def cross_check(self, n: int) -> bool:
        if self.cross_check_heights is None:
            return n <= CROSS_CHECK_MAX_N
        return self.cross_check_heights


@dataclass
class SweepReport:
    rows: list[dict]
    violations: list[dict]
    paper_gaps: list[dict]
    seconds: float = field(default=0.0, compare=False)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "blocks": len([r for r in self.rows if r["group"] == "sym"]),
            "rows": self.rows,
            "violations": self.violations,
            "paper_gaps": self.paper_gaps,
            "ok": self.ok,
        }


def _key(label: BlockLabel):
    return (label.p, label.n, label.core)


def check_block(label: BlockLabel, cross_check: bool, alternating: bool) -> list[dict]:
    """All checks for one block; returns the sym row and, if requested, the alt row."""
    where = {"p": label.p, "n": label.n, "core": format_partition(label.core), "weight": label.weight}
    problems = []
    try:
        report = block_report(label, cross_check=cross_check)
    except CorruptionError as exc:
        return [{"group": "sym", **where, "problems": [f"height cross-check: {exc}"]}]
    nht, ncd = len(report.ht_set), len(report.cd_set)
    if not report.passes_thmC:
        problems.append(f"dl {report.dl} > |ht| {nht}")
    if not report.passes_questionA:
        problems.append(f"dl {report.dl} > |cd| {ncd}")
    if nht > ncd:
        problems.append(f"|ht| {nht} > |cd| {ncd}")
    if max(report.heights) > report.defect:
        problems.append("height exceeds defect")
    family = None
    if label.weight >= 1:
        family = verify_family(label)
        if not family.ok:
            problems.append(f"family: {family.diagnostics}")
    rows = [
        {
            "group": "sym",
            **where,
            "members": len(report.members),
            "dl": report.dl,
            "ht": sorted(report.ht_set),
            "cd_count": ncd,
            "defect": report.defect,
            "family_ok": None if family is None else family.ok,
            "problems": problems,
        }
    ]
    if alternating and label.n >= 5:
        alt = verify_alt(label)
        v = alt.view
        rows.append(
            {
                "group": "alt",
                **where,
                "dl_q": v.dl_q,
                "dlq_mode": v.dlq_mode,
                "k": v.k,
                "ht": sorted(v.ht_set),
                "paper_gap": v.paper_gap,
                "problems": [] if alt.ok else [f"dl(Q) {v.dl_q} > |ht(b)| {len(v.ht_set)}"],
            }
        )
    return rows


def _work(args):
    label, cross_check, alternating = args
    return check_block(label, cross_check, alternating)


def sweep(config: SweepConfig) -> SweepReport:
    start = time.perf_counter()
    labels = sorted((lab for p in config.primes for n in range(1, config.max_n + 1) for lab in block_labels(n, p)), key=_key)
    tasks = [(lab, config.cross_check(lab.n), config.include_alternating) for lab in labels]
    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            results = list(pool.map(_work, tasks, chunksize=16))
    else:
        results = [_work(t) for t in tasks]

    rows = [row for block_rows in results for row in block_rows]
    violations = [
        {k: row[k] for k in ("group", "p", "n", "core", "weight")} | {"problem": prob}
        for row in rows
        for prob in row["problems"]
    ]
    # every partition of n lies in exactly one block
    for p in config.primes:
        for n in range(1, config.max_n + 1):
            total = sum(r["members"] for r in rows if r["group"] == "sym" and r["p"] == p and r["n"] == n)
            if total != partition_count(n):
                violations.append({"group": "sym", "p": p, "n": n, "problem": f"blocks hold {total} of {partition_count(n)} partitions"})
    gaps = [{k: r[k] for k in ("p", "n", "core", "weight", "k", "ht")} for r in rows if r.get("paper_gap")]
    return SweepReport(rows, violations, gaps, time.perf_counter() - start)
