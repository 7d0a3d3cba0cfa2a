"""Range-scan engine: enumerate applicable (p, q) pairs, verify, aggregate.

Reports are deterministic functions of the mathematical domain: verdicts are
sorted by (p, q, theorem_id) after the parallel phase, so the worker count
changes wall time only.  JSON output therefore compares byte-identical
across worker counts once the runtime_ms field is ignored.
"""

from __future__ import annotations

import csv
import io
import json
import math
import multiprocessing
import time
from dataclasses import asdict, dataclass

from .arith import is_prime, primes_matching
from .theorems import THEOREM_IDS, _VERIFIERS, regime_q_reason, scan_domain
from .verdict import Verdict

__all__ = [
    "DEFAULT_Q_MAX",
    "DEFAULT_REPRESENTATION_Q",
    "ScanConfig",
    "ScanReport",
    "render_csv",
    "render_human",
    "render_json",
    "run_scan",
]

DEFAULT_Q_MAX = 97

# the representation search costs about p**(h(-q)/2) steps per prime, so the
# default q list for eq_a/t2 sticks to class numbers h(-q) <= 3
DEFAULT_REPRESENTATION_Q = (7, 11, 19, 23, 31)


@dataclass(frozen=True)
class ScanConfig:
    """Domain of one sweep.  q_values None means per-theorem defaults:
    odd primes up to DEFAULT_Q_MAX, except eq_a/t2 which use
    DEFAULT_REPRESENTATION_Q."""

    p_max: int
    theorems: tuple[str, ...]
    q_values: tuple[int, ...] | None = None
    workers: int = 1

    def __post_init__(self) -> None:
        if self.p_max < 7:
            raise ValueError(f"p_max must be >= 7, got {self.p_max}")
        if not self.theorems:
            raise ValueError("at least one theorem id is required")
        for tid in self.theorems:
            if tid not in THEOREM_IDS:
                raise ValueError(f"unknown theorem id {tid!r}; "
                                 f"valid: {', '.join(THEOREM_IDS)}")
        if len(set(self.theorems)) != len(self.theorems):
            raise ValueError("duplicate theorem ids")
        if self.q_values is not None:
            for q in self.q_values:
                if q < 3 or q % 2 == 0 or not is_prime(q):
                    raise ValueError(f"q values must be odd primes, got {q}")
            if len(set(self.q_values)) != len(self.q_values):
                raise ValueError("duplicate q values")
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")


@dataclass
class ScanReport:
    config: dict
    totals: dict[str, dict[str, int]]
    verdicts: list[Verdict]
    failures: list[Verdict]
    runtime_ms: int


def _default_q_list(theorem_id: str) -> tuple[int, ...]:
    if theorem_id in ("eq_a", "t2"):
        return DEFAULT_REPRESENTATION_Q
    return tuple(n for n in range(3, DEFAULT_Q_MAX + 1, 2) if is_prime(n))


def _resolved_q(config: ScanConfig, theorem_id: str) -> tuple[int | None, ...]:
    if theorem_id == "mordell":
        return (None,)
    if config.q_values is not None:
        return config.q_values
    return _default_q_list(theorem_id)


def _run_unit(unit: tuple[tuple[str, ...], int | None, tuple[int, ...]]) -> list[Verdict]:
    tids, q, primes = unit
    out = []
    for p in primes:
        for tid in tids:
            fn = _VERIFIERS[tid]
            out.append(fn(p) if tid == "mordell" else fn(p, q))
    return out


def _build_units(config: ScanConfig) -> tuple[list, dict[str, int]]:
    """Work units grouped so theorems sharing a (q, prime-domain) run on the
    same p list back to back, which keeps the per-p caches warm."""
    skipped: dict[str, int] = {tid: 0 for tid in config.theorems}
    groups: dict[tuple, list[str]] = {}
    for tid in config.theorems:
        for q in _resolved_q(config, tid):
            reason = regime_q_reason(tid, q)
            if reason is not None:
                skipped[tid] += 1
                continue
            constraints, min_p = scan_domain(tid, q)
            key = (q, tuple((c.modulus, c.residue) for c in constraints), min_p)
            groups.setdefault(key, []).append(tid)
    units = []
    for (q, cons_key, min_p), tids in sorted(groups.items(),
                                             key=lambda kv: (kv[0][0] or 0, kv[0][1])):
        constraints, _ = scan_domain(tids[0], q)
        primes = [p for p in primes_matching(config.p_max, constraints) if p > min_p]
        if not primes:
            continue
        per_chunk = max(32, math.ceil(len(primes) / (config.workers * 4)))
        for lo in range(0, len(primes), per_chunk):
            units.append((tuple(tids), q, tuple(primes[lo: lo + per_chunk])))
    return units, skipped


def run_scan(config: ScanConfig) -> ScanReport:
    start = time.monotonic()
    units, skipped = _build_units(config)
    if config.workers > 1 and len(units) > 1:
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(config.workers) as pool:
            chunks = pool.map(_run_unit, units)
    else:
        chunks = [_run_unit(u) for u in units]
    verdicts = [v for chunk in chunks for v in chunk]
    verdicts.sort(key=lambda v: (v.p, v.q if v.q is not None else -1, v.theorem_id))
    totals = {tid: {"applicable": 0, "passed": 0, "failed": 0,
                    "skipped_q": skipped[tid]} for tid in config.theorems}
    for v in verdicts:
        t = totals[v.theorem_id]
        t["applicable"] += 1
        t["passed" if v.passed else "failed"] += 1
    failures = [v for v in verdicts if not v.passed]
    echo = {
        "p_max": config.p_max,
        "theorems": sorted(config.theorems),
        "q": {tid: ([q for q in _resolved_q(config, tid) if q is not None] or None)
              for tid in config.theorems},
    }
    runtime_ms = int((time.monotonic() - start) * 1000)
    return ScanReport(config=echo, totals=totals, verdicts=verdicts,
                      failures=failures, runtime_ms=runtime_ms)


def _flat(v: Verdict) -> dict:
    d = asdict(v)
    d.pop("passed")
    return d


def render_json(report: ScanReport) -> str:
    payload = {
        "config": report.config,
        "totals": report.totals,
        "failures": [_flat(v) for v in report.failures],
        "runtime_ms": report.runtime_ms,
    }
    return json.dumps(payload, sort_keys=True, indent=2, default=list) + "\n"


def render_csv(report: ScanReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["theorem_id", "p", "q", "predicted", "computed", "detail"])
    for v in report.verdicts:
        writer.writerow([v.theorem_id, v.p, "" if v.q is None else v.q,
                         _cell(v.predicted), _cell(v.computed), v.detail])
    return buf.getvalue()


def _cell(value: object) -> str:
    if isinstance(value, tuple):
        return ";".join(str(x) for x in value)
    return str(value)


_HEADLINES = {
    3: "q=3: the first third-block product is always a quadratic residue",
    5: "q=5: the second fifth-block product is always a quadratic residue",
    7: "q=7: blocks 1 and 3 share a symbol, so their product is a residue",
    11: "q=11: the product of blocks 1, 3, 5 is always a quadratic residue",
}


def render_human(report: ScanReport) -> str:
    lines = [f"scan p < {report.config['p_max']}"]
    width = max(len(t) for t in report.totals)
    lines.append(f"{'theorem':<{width}}  applicable  passed  failed  skipped_q")
    for tid in sorted(report.totals):
        t = report.totals[tid]
        lines.append(f"{tid:<{width}}  {t['applicable']:>10}  {t['passed']:>6}  "
                     f"{t['failed']:>6}  {t['skipped_q']:>9}")
    for v in report.failures[:50]:
        lines.append(f"FAIL {v.theorem_id} p={v.p} q={v.q} "
                     f"predicted={v.predicted} computed={v.computed} [{v.detail}]")
    if len(report.failures) > 50:
        lines.append(f"... and {len(report.failures) - 50} more failures")
    if "t1" in report.totals and not report.failures:
        qs = report.config["q"].get("t1") or []
        for q in qs:
            if q in _HEADLINES:
                lines.append(_HEADLINES[q])
    total_fail = len(report.failures)
    verdict = "all passed" if total_fail == 0 else f"{total_fail} FAILED"
    lines.append(f"result: {verdict} ({report.runtime_ms} ms)")
    return "\n".join(lines) + "\n"
