"""Exhaustive verification over all objects of a given size.

For every Dyck path of semilength ``n`` the census derives the permutation
``bjs(path)`` and the algebra ``dyck_to_kupisch(path)`` and evaluates a set
of named checks comparing the algebraic and the combinatorial side.
"""

from __future__ import annotations

import csv
import io
import os
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Iterator

from . import nakayama as nk
from .bridge import dyck_to_kupisch, kupisch_to_dyck
from .dyck import DyckPath, catalan, dyck_prefixes, enumerate_dyck, path_sort_key
from .errors import BadShape
from .perm import (
    bjs,
    bjs_inverse,
    connectivity_formula,
    connectivity_set,
    fixed_points,
    fixed_points_formula,
    support_size,
)

CHECKS = (
    "theorem1",
    "theorem2",
    "dual_oracle",
    "propP",
    "corollaryP",
    "propPP",
    "corollaryPP",
    "theoremP",
    "theoremPP",
    "omega_bijection",
    "lemma_ext1jj",
    "bijection_roundtrips",
    "distribution_vs_syt",
)

CSV_HEADER = ("path", "kupisch", "perm", "fixed_points", "support", "proj_id1", "dim_ext1_jj")

THREADS_ENV = "NAKAYAMA_CENSUS_THREADS"


def syt_two_row(n: int, k: int) -> int:
    """Number of standard Young tableaux of shape ``(n, k)``."""
    if n < 0 or k < 0 or k > n:
        raise BadShape(f"({n}, {k}) is not a two-row partition")
    return comb(n + k, k) * (n - k + 1) // (n + 1)


def enumerate_kupisch(simples: int) -> Iterator[nk.KupischSeries]:
    """All Kupisch series with the given number of simples, built from the constraints.

    ``c_n = 1`` and, going leftwards, ``2 <= c_i <= min(c_{i+1} + 1, n + 1 - i)``.
    """
    if simples < 1:
        raise ValueError("need at least one simple module")
    n = simples - 1
    tail = [0] * simples
    tail[n] = 1

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        if i < 0:
            yield tuple(tail)
            return
        for ci in range(2, min(tail[i + 1] + 1, n + 1 - i) + 1):
            tail[i] = ci
            yield from rec(i - 1)

    for c in rec(n - 1):
        yield nk.KupischSeries(c)


def _per_target_ext_ok(c: nk.KupischSeries) -> bool:
    rads = [nk.radical(c, s) for s in range(c.simples)]
    return all(sum(nk.ext1_dim(c, x, y) for x in rads) <= 1 for y in rads)


def evaluate_path(path: DyckPath, checks: Iterable[str]) -> tuple[dict, dict[str, tuple]]:
    """Return the CSV row for ``path`` and ``{check: (lhs, rhs)}`` for failing checks."""
    pi = bjs(path)
    c = dyck_to_kupisch(path)
    proj_id1 = nk.count_proj_inj_dim_one(c)
    inj_pd1 = nk.count_inj_proj_dim_one(c)
    rad = nk.radical_id_le_one_count(c)
    ext = c.simples - rad
    fp = fixed_points(pi)
    supp = support_size(pi)
    failures: dict[str, tuple] = {}

    def check(name, lhs, rhs):
        if lhs != rhs:
            failures[name] = (lhs, rhs)

    for name in checks:
        if name == "theorem1":
            check(name, proj_id1, fp)
        elif name == "theorem2":
            check(name, ext, supp)
        elif name == "dual_oracle":
            check(name, (ext, True), (nk.ext1_JJ_dim_hom(c), _per_target_ext_ok(c)))
        elif name == "propP":
            check(name, nk.formula_P(path), inj_pd1)
        elif name == "corollaryP":
            check(name, nk.formula_corollaryP(pi), inj_pd1)
        elif name == "propPP":
            check(name, nk.formula_PP(path), rad)
        elif name == "corollaryPP":
            check(name, nk.formula_corollaryPP(pi), rad)
        elif name == "theoremP":
            check(name, fixed_points_formula(pi), fp)
        elif name == "theoremPP":
            if not pi.is_identity():
                check(name, connectivity_formula(pi), len(connectivity_set(pi)))
        elif name == "omega_bijection":
            check(name, proj_id1, inj_pd1)
        elif name == "lemma_ext1jj":
            check(name, len(nk.injectives_with_radical_syzygy(c)) + 1, rad)
        elif name == "bijection_roundtrips":
            check(
                name,
                (str(kupisch_to_dyck(c)), str(bjs_inverse(pi)), dyck_to_kupisch(kupisch_to_dyck(c)).c),
                (str(path), str(path), c.c),
            )
        elif name == "distribution_vs_syt":
            pass  # evaluated on the merged distribution
        else:
            raise ValueError(f"unknown check {name!r}")

    row = {
        "path": str(path),
        "kupisch": str(c),
        "perm": str(pi),
        "fixed_points": fp,
        "support": supp,
        "proj_id1": proj_id1,
        "dim_ext1_jj": ext,
    }
    return row, failures


@dataclass
class _Partial:
    total: int = 0
    failures: dict = field(default_factory=dict)
    distribution: Counter = field(default_factory=Counter)
    rows: list = field(default_factory=list)

    def merge(self, other: "_Partial") -> "_Partial":
        out = _Partial(
            self.total + other.total,
            dict(self.failures),
            self.distribution + other.distribution,
            self.rows + other.rows,
        )
        for name, item in other.failures.items():
            if name not in out.failures or item[0] < out.failures[name][0]:
                out.failures[name] = item
        return out


def _run_shard(n: int, prefix: str, checks: tuple[str, ...], keep_rows: bool) -> _Partial:
    part = _Partial()
    for path in enumerate_dyck(n, prefix):
        row, failures = evaluate_path(path, checks)
        part.total += 1
        part.distribution[row["dim_ext1_jj"]] += 1
        if keep_rows:
            part.rows.append(row)
        key = path_sort_key(path)
        for name, (lhs, rhs) in failures.items():
            if name not in part.failures or key < part.failures[name][0]:
                cex = dict(row, lhs=_jsonable(lhs), rhs=_jsonable(rhs))
                part.failures[name] = (key, cex)
    return part


def _jsonable(value):
    if isinstance(value, tuple):
        return [_jsonable(v) for v in value]
    return value


@dataclass
class CensusReport:
    size: int
    total: int
    checks: dict[str, dict]
    distribution: dict[int, int]
    elapsed: float
    rows: list[dict] = field(default_factory=list, repr=False)

    @property
    def passed(self) -> bool:
        return all(v["status"] == "pass" for v in self.checks.values())

    def failed_checks(self) -> list[str]:
        return [k for k, v in self.checks.items() if v["status"] != "pass"]

    def to_json(self) -> dict:
        return {
            "size": self.size,
            "total": self.total,
            "catalan": catalan(self.size),
            "passed": self.passed,
            "checks": self.checks,
            "distribution": {str(k): v for k, v in sorted(self.distribution.items())},
            "elapsed": round(self.elapsed, 6),
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=CSV_HEADER, lineterminator="\n")
        writer.writeheader()
        writer.writerows(self.rows)
        return buf.getvalue()


def _default_workers() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def run_census(
    n: int,
    checks: Iterable[str] | None = None,
    workers: int | None = None,
    keep_rows: bool = False,
) -> CensusReport:
    """Verify every selected check on all Dyck paths of semilength ``n``.

    Work is split by path prefix; with ``workers > 1`` shards run in a
    process pool.  The merged report does not depend on scheduling.
    """
    if n < 0:
        raise ValueError("semilength must be non-negative")
    selected = tuple(CHECKS if checks is None else checks)
    unknown = set(selected) - set(CHECKS)
    if unknown:
        raise ValueError(f"unknown checks: {sorted(unknown)}")
    workers = _default_workers() if workers is None else max(1, workers)
    start = time.perf_counter()

    prefixes = dyck_prefixes(n, 6)
    if workers > 1 and len(prefixes) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_run_shard, n, p, selected, keep_rows) for p in prefixes]
            parts = [f.result() for f in futures]
    else:
        parts = [_run_shard(n, p, selected, keep_rows) for p in prefixes]
    merged = _Partial()
    for part in parts:
        merged = merged.merge(part)

    results = {}
    for name in selected:
        if name == "distribution_vs_syt":
            results[name] = _syt_check(n, merged.distribution)
        elif name in merged.failures:
            results[name] = {"status": "fail", "counterexample": merged.failures[name][1]}
        else:
            results[name] = {"status": "pass"}
    rows = sorted(merged.rows, key=lambda r: path_sort_key(r["path"]))
    return CensusReport(
        size=n,
        total=merged.total,
        checks=results,
        distribution=dict(sorted(merged.distribution.items())),
        elapsed=time.perf_counter() - start,
        rows=rows,
    )


def _syt_check(n: int, distribution: Counter) -> dict:
    # semilength n <-> n + 1 simples <-> shapes (n - 1, k)
    if n == 0:
        return {"status": "pass"}
    expected = {k: syt_two_row(n - 1, k) for k in range(n)}
    observed = {k: distribution.get(k, 0) for k in set(expected) | set(distribution)}
    for k in sorted(observed):
        if observed[k] != expected.get(k, 0):
            return {
                "status": "fail",
                "counterexample": {"k": k, "observed": observed[k], "expected": expected.get(k, 0)},
            }
    return {"status": "pass"}
