"""Recompute the length tables and the class summary from full code builds."""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Any

from qmds.quantum import QuantumCodeParams, classify_q, enumerate_family, family_for

ROW_FIELDS = ("code", "form", "m", "q", "r", "n", "d_min", "d_max")


@lru_cache(maxsize=1)
def load_golden() -> dict[str, Any]:
    text = resources.files("qmds").joinpath("data/tables.json").read_text(encoding="utf-8")
    return json.loads(text)


def code_label(n: int, q: int) -> str:
    return f"[[{n},{n + 2}-2d,d]]_{q}"


def d_range_text(d_min: int, d_max: str | int) -> str:
    return f"{d_min}≤d≤{d_max} even"


@dataclass
class RowResult:
    table: int
    expected: dict[str, Any]
    computed: dict[str, Any]
    mismatches: list[str] = field(default_factory=list)
    codes: list[QuantumCodeParams] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def compute_row(q: int, a: int) -> tuple[dict[str, Any], list[QuantumCodeParams], list[str]]:
    """Table row fields for (q, a) plus the backing codes and any internal faults."""
    fs = family_for(q, a)
    codes = enumerate_family(fs)
    spec = fs.spec()
    faults = []
    ds = [c.d for c in codes]
    if ds != list(range(2, 2 * len(codes) + 1, 2)):
        faults.append(f"distances not 2,4,...: {ds}")
    for c in codes:
        if c.k != c.n - 2 * c.d + 2 or not c.mds:
            faults.append(f"{c} is not [[n,n-2d+2,d]] MDS")
    computed = {
        "code": code_label(spec.n, q),
        "form": fs.form,
        "m": fs.m,
        "q": q,
        "r": spec.r,
        "n": spec.n,
        "d_min": min(ds),
        "d_max": max(ds),
    }
    return computed, codes, faults


def check_row(table: int, a: int, expected: dict[str, Any]) -> RowResult:
    computed, codes, faults = compute_row(expected["q"], a)
    result = RowResult(table, expected, computed, list(faults), codes)
    for key in ROW_FIELDS:
        if computed[key] != expected[key]:
            result.mismatches.append(
                f"table {table} row q={expected['q']}: {key} expected {expected[key]!r}, "
                f"got {computed[key]!r}"
            )
    return result


def _check_row_task(args: tuple[int, int, dict[str, Any]]) -> RowResult:
    return check_row(*args)


def reproduce_tables(jobs: int = 1) -> list[RowResult]:
    """Check every row of the six length tables, in table order."""
    golden = load_golden()
    tasks = [(t["table"], t["a"], row) for t in golden["tables"] for row in t["rows"]]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_check_row_task, tasks))
    return [_check_row_task(task) for task in tasks]


def check_summary(results: list[RowResult]) -> list[RowResult]:
    """Class summary rows, each backed by the table rows of its (a, t) pair."""
    out = []
    for row in load_golden()["table7"]:
        a, t = row["a"], row["t"]
        witnesses = [
            r for r in results if any(f.a == a and f.t == t for f in classify_q(r.expected["q"]))
            and r.computed["n"] == (r.expected["q"] ** 2 + 1) // a
        ]
        computed = {
            "class": row["class"],
            "a": a,
            "t": t,
            "form": f"{2 * a}m+{t}",
            "length": f"(q^2+1)/{a}",
            "d_slope": row["d_slope"],
            "d_intercept": row["d_intercept"],
            "witnesses": [r.expected["q"] for r in witnesses],
        }
        res = RowResult(7, row, computed)
        if not witnesses:
            res.mismatches.append(f"table 7 class {row['class']} ({a},{t}): no backing row")
        for key in ("form", "length"):
            if computed[key] != row[key]:
                res.mismatches.append(f"table 7 ({a},{t}): {key} expected {row[key]!r}")
        for w in witnesses:
            fs = family_for(w.expected["q"], a)
            formula = row["d_slope"] * fs.m + row["d_intercept"]
            if w.computed["d_max"] != formula or fs.d_max != formula:
                res.mismatches.append(
                    f"table 7 ({a},{t}) at q={fs.q}: d_max {w.computed['d_max']} "
                    f"!= {row['d_slope']}m+{row['d_intercept']} = {formula}"
                )
            if not w.ok:
                res.mismatches.append(f"table 7 ({a},{t}): backing row q={fs.q} failed")
        out.append(res)
    return out


def row_text(r: RowResult) -> str:
    c = r.computed
    if r.table == 7:
        bound = f"{c['d_slope']}m+{c['d_intercept']}"
        return f"class {c['class']}, {c['form']}, n={c['length']}, {d_range_text(2, bound)}"
    return f"{c['code']}, {c['form']}, m={c['m']}, r={c['r']}, {d_range_text(c['d_min'], c['d_max'])}"


def row_csv(r: RowResult) -> list[Any]:
    c = r.computed
    if r.table == 7:
        return [
            7,
            c["class"],
            c["form"],
            c["length"],
            d_range_text(2, f"{c['d_slope']}m+{c['d_intercept']}"),
        ]
    return [r.table, c["code"], c["form"], c["m"], c["q"], c["r"], d_range_text(c["d_min"], c["d_max"])]


def row_json(r: RowResult) -> dict[str, Any]:
    return {
        "table": r.table,
        "ok": r.ok,
        "computed": r.computed,
        "mismatches": r.mismatches,
    }
