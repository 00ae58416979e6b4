"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 invalid arguments.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from math import comb
from typing import Any, Sequence

from qmds.constacyclic import (
    build_code,
    code_checks,
    code_to_json,
    defining_set_centered,
    max_centered_delta,
)
from qmds.cosets import (
    CosetSpec,
    coset_criterion,
    dual_containing,
    is_skew_symmetric,
    skew_image,
    verify_coset_structure,
)
from qmds.oracle import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    brute_force_min_distance,
    dual_containment_matrix_check,
    min_distance_by_supports,
    shift_closed,
)
from qmds.quantum import (
    FamilySpec,
    classify_q,
    enumerate_family,
    family_for,
    lemma_delta_bound,
    max_delta_search,
    quantum_from_code,
)
from qmds.tables import check_summary, reproduce_tables, row_csv, row_json, row_text

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class Output:
    """One command's result in all three formats."""

    def __init__(self, payload: dict[str, Any], header: Sequence[str], rows: list[list[Any]],
                 lines: list[str], status: int = EXIT_OK) -> None:
        self.payload = payload
        self.header = header
        self.rows = rows
        self.lines = lines
        self.status = status

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.payload, indent=2, ensure_ascii=False) + "\n"
        if fmt == "csv":
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(self.header)
            writer.writerows(self.rows)
            return buf.getvalue()
        return "\n".join(self.lines) + "\n"


def _need(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.command} requires {', '.join(missing)}")


def _spec(args: argparse.Namespace) -> CosetSpec:
    _need(args, "q")
    try:
        if args.n is not None:
            return CosetSpec(args.q, args.q + 1 if args.r is None else args.r, args.n)
        if args.a is None:
            raise UsageError(f"{args.command} requires --a or --n")
        return CosetSpec.from_divisor(args.q, args.a, args.r)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _delta(args: argparse.Namespace) -> int:
    if args.delta is not None:
        if args.delta < 0:
            raise UsageError("--delta must be >= 0")
        return args.delta
    if args.d is not None:
        if args.d < 2 or args.d % 2:
            raise UsageError(f"d must be even and >= 2, got {args.d}")
        return (args.d - 2) // 2
    raise UsageError(f"{args.command} requires --delta or --d")


def _centered(spec: CosetSpec, delta: int):
    try:
        return defining_set_centered(spec, delta)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_coset(args: argparse.Namespace) -> Output:
    spec = _spec(args)
    cosets = []
    lines = [f"q={spec.q} r={spec.r} n={spec.n} rn={spec.rn} s={spec.s}"]
    rows = []
    for c in spec.cosets:
        sym = is_skew_symmetric(spec, c)
        partner = spec.coset_containing(skew_image(spec, c.rep)).rep
        cosets.append({"rep": c.rep, "members": list(c.members), "skew_symmetric": sym,
                       "skew_partner": partner})
        kind = "skew symmetric" if sym else f"paired with C_{partner}"
        members = ", ".join(map(str, c.members))
        lines.append(f"C_{c.rep} = {{{members}}}  {kind}")
        rows.append([c.rep, " ".join(map(str, c.members)), sym, partner])
    try:
        report = verify_coset_structure(spec)
        structure: dict[str, Any] | None = {
            "lemma": report.lemma,
            "passed": report.passed,
            "singletons": list(report.singletons),
            "pairs": report.pairs,
            "counterexample": report.counterexample,
        }
        lines.append(
            f"structure ({report.lemma}): {'pass' if report.passed else 'FAIL'}; "
            f"singletons {list(report.singletons)}, {report.pairs} pairs"
        )
    except ValueError:
        structure, report = None, None
    payload = {"command": "coset", "q": spec.q, "r": spec.r, "n": spec.n, "rn": spec.rn,
               "s": spec.s, "cosets": cosets, "structure": structure}
    status = EXIT_MISMATCH if report is not None and not report.passed else EXIT_OK
    return Output(payload, ["rep", "members", "skew_symmetric", "skew_partner"], rows, lines, status)


def cmd_check(args: argparse.Namespace) -> Output:
    spec = _spec(args)
    delta = _delta(args)
    T = _centered(spec, delta)
    verdict = dual_containing(T)
    classified = coset_criterion(T)
    payload = {"command": "check", "q": spec.q, "r": spec.r, "n": spec.n, "delta": delta,
               "defining_set": list(T.elements), "dual_containing": verdict.contains,
               "witness": verdict.witness, "coset_criterion": classified}
    line = f"q={spec.q} n={spec.n} delta={delta} |T|={len(T)}: " + (
        "dual-containing" if verdict else f"not dual-containing (witness {verdict.witness})"
    )
    return Output(payload, ["q", "r", "n", "delta", "dual_containing", "witness"],
                  [[spec.q, spec.r, spec.n, delta, verdict.contains, verdict.witness]], [line])


def cmd_construct(args: argparse.Namespace) -> Output:
    _need(args, "q", "a", "d")
    if args.d % 2 or args.d < 2:
        raise UsageError(f"d must be even and >= 2, got {args.d}")
    try:
        fs = family_for(args.q, args.a)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    spec = fs.spec()
    delta = (args.d - 2) // 2
    warning = None
    if args.d > fs.d_max:
        found = max_delta_search(spec)
        if found is None or delta > found:
            raise UsageError(
                f"d={args.d} exceeds the family bound {fs.d_max} and the centered set is "
                "not dual-containing"
            )
        warning = f"d={args.d} exceeds the family bound {fs.d_max}; dual containment verified by search"
        print(f"warning: {warning}", file=sys.stderr)
    if delta > max_centered_delta(spec):
        raise UsageError(f"d={args.d} too large for n={spec.n}")
    code = build_code(spec, delta)
    verdict = dual_containing(code.T)
    matrix = dual_containment_matrix_check(code) if spec.n <= args.max_matrix_n else None
    checks = code_checks(code)
    params = quantum_from_code(code, a=fs.a, t=fs.t, m=fs.m)
    ok = all(checks.values()) and (matrix is None or matrix == verdict.contains)
    payload = {
        "command": "construct",
        "quantum": params.to_json(),
        "code": code_to_json(code),
        "coset_dual_containing": verdict.contains,
        "matrix_dual_containing": matrix,
        "checks": checks,
        "warning": warning,
    }
    lines = [
        f"{params} {'MDS' if params.mds else 'non-MDS'} from [{code.n},{code.k},>={code.d_bch}] "
        f"over GF({spec.q}^2), family {fs.form} m={fs.m}",
        f"defining set: {list(code.T.elements)}",
        f"generator coefficients: {[list(c.coeffs) for c in code.gen.coeffs]}",
        f"dual containment: cosets={verdict.contains} matrix="
        + ("skipped" if matrix is None else str(matrix)),
        "checks: " + ", ".join(f"{k}={v}" for k, v in checks.items()),
    ]
    row = [params.q, fs.a, fs.t, fs.m, params.n, params.k, params.d, delta, params.mds,
           verdict.contains, matrix]
    return Output(payload, ["q", "a", "t", "m", "n", "k", "d", "delta", "mds",
                            "coset_dual_containing", "matrix_dual_containing"],
                  [row], lines, EXIT_OK if ok else EXIT_MISMATCH)


def _family_task(fs: FamilySpec) -> dict[str, Any]:
    codes = enumerate_family(fs)
    return {"a": fs.a, "t": fs.t, "m": fs.m, "form": fs.form, "n": fs.n,
            "delta_max": fs.delta_max, "d_max": fs.d_max, "codes": [c.to_json() for c in codes]}


def _pool_map(fn, items: list, jobs: int) -> list:
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def cmd_family(args: argparse.Namespace) -> Output:
    _need(args, "q")
    try:
        families = classify_q(args.q)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.a is not None:
        families = [f for f in families if f.a == args.a]
    results = _pool_map(_family_task, families, args.jobs)
    rows, lines = [], []
    if not results:
        lines.append(f"q={args.q} is in none of the twelve families")
    for fam in results:
        lines.append(f"a={fam['a']} q={fam['form']} m={fam['m']} n={fam['n']} d<={fam['d_max']}")
        for c in fam["codes"]:
            lines.append(f"  [[{c['n']},{c['k']},{c['d']}]]_{args.q}"
                         f"{' MDS' if c['mds'] else ''} delta={c['delta']}")
            rows.append([args.q, c["a"], c["t"], c["m"], c["n"], c["k"], c["d"], c["delta"], c["mds"]])
    payload = {"command": "family", "q": args.q, "families": results}
    return Output(payload, ["q", "a", "t", "m", "n", "k", "d", "delta", "mds"], rows, lines)


def cmd_tables(args: argparse.Namespace) -> Output:
    results = reproduce_tables(args.jobs)
    summary = check_summary(results)
    lines, rows = [], []
    current = None
    for r in results + summary:
        if r.table != current:
            current = r.table
            lines.append(f"Table {r.table}")
        lines.append(("  " if r.ok else "! ") + row_text(r))
        rows.append(row_csv(r))
        for msg in r.mismatches:
            print(f"mismatch: {msg}", file=sys.stderr)
    ok = all(r.ok for r in results + summary)
    payload = {"command": "tables", "ok": ok, "rows": [row_json(r) for r in results],
               "summary": [row_json(r) for r in summary]}
    return Output(payload, ["table", "code", "form", "m", "q", "r", "d_range"], rows, lines,
                  EXIT_OK if ok else EXIT_MISMATCH)


def cmd_search(args: argparse.Namespace) -> Output:
    _need(args, "q", "a")
    if (args.q * args.q + 1) % args.a:
        raise UsageError(f"a={args.a} does not divide q^2+1={args.q * args.q + 1}")
    spec = _spec(args)
    if spec.s is None:
        raise UsageError("search needs r = q+1 and q odd")
    found = max_delta_search(spec)
    bound = lemma_delta_bound(args.q, args.a)
    if bound is None:
        comparison = "unclassified"
    elif found is None or found < bound:
        comparison = "short"
    elif found == bound:
        comparison = "equal"
    else:
        comparison = "exceeds"
    payload = {"command": "search", "q": spec.q, "a": args.a, "r": spec.r, "n": spec.n,
               "delta_star": found, "d_star": None if found is None else 2 * found + 2,
               "lemma_bound": bound, "comparison": comparison}
    line = (f"q={spec.q} a={args.a} n={spec.n}: delta*={found}, lemma bound={bound} "
            f"({comparison})")
    return Output(payload, ["q", "a", "n", "delta_star", "lemma_bound", "comparison"],
                  [[spec.q, args.a, spec.n, found, bound, comparison]], [line],
                  EXIT_MISMATCH if comparison == "short" else EXIT_OK)


def _support_cost(n: int, k: int) -> int:
    return sum(comb(n, w) for w in range(1, n - k + 2))


def cmd_verify(args: argparse.Namespace) -> Output:
    spec = _spec(args)
    delta = _delta(args)
    _centered(spec, delta)
    code = build_code(spec, delta)
    verdict = dual_containing(code.T)
    matrix = dual_containment_matrix_check(code)
    checks = code_checks(code)
    closed = shift_closed(code)
    d_exact, method = None, None
    if code.k:
        try:
            d_exact, method = brute_force_min_distance(code, args.budget), "messages"
        except BudgetExceeded:
            if _support_cost(code.n, code.k) <= args.budget:
                d_exact, method = min_distance_by_supports(code), "supports"
    sound = None if d_exact is None else d_exact >= code.d_bch
    ok = matrix == verdict.contains and all(checks.values()) and closed and sound is not False
    payload = {"command": "verify", "q": spec.q, "r": spec.r, "n": spec.n, "delta": delta,
               "k": code.k, "d_bch": code.d_bch, "coset_dual_containing": verdict.contains,
               "matrix_dual_containing": matrix, "agree": matrix == verdict.contains,
               "checks": checks, "shift_closed": closed, "min_distance": d_exact,
               "min_distance_method": method, "bch_sound": sound}
    lines = [
        f"[{code.n},{code.k},>={code.d_bch}] over GF({spec.q}^2), delta={delta}",
        f"dual containment: cosets={verdict.contains} matrix={matrix}",
        "checks: " + ", ".join(f"{k}={v}" for k, v in checks.items()) + f", shift_closed={closed}",
        "min distance: " + ("skipped (budget)" if d_exact is None else f"{d_exact} via {method}"),
    ]
    row = [spec.q, spec.r, spec.n, delta, code.k, code.d_bch, verdict.contains, matrix, d_exact]
    return Output(payload, ["q", "r", "n", "delta", "k", "d_bch", "coset_dual_containing",
                            "matrix_dual_containing", "min_distance"], [row], lines,
                  EXIT_OK if ok else EXIT_MISMATCH)


COMMANDS = {
    "coset": (cmd_coset, "list q^2-cyclotomic cosets of Omega and their skew classes"),
    "check": (cmd_check, "dual containment of a centered defining set"),
    "construct": (cmd_construct, "build one family code and emit its certificate"),
    "family": (cmd_family, "enumerate every family code for q"),
    "tables": (cmd_tables, "recompute all tables; exit 1 on any mismatch"),
    "search": (cmd_search, "largest dual-containing centered delta vs the family bound"),
    "verify": (cmd_verify, "matrix-level and brute-force checks of one code"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=int, help="odd prime power q")
    common.add_argument("--a", type=int, help="divisor a of q^2+1; n = (q^2+1)/a")
    common.add_argument("--r", type=int, help="order of eta (default q+1)")
    common.add_argument("--n", type=int, help="code length (overrides --a)")
    common.add_argument("--delta", type=int, help="half width of the centered defining set")
    common.add_argument("--d", type=int, help="target distance (even); delta = (d-2)/2")
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="cap on enumerated codewords or supports")
    common.add_argument("--out", help="write output to this path instead of stdout")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for tables/family")
    common.add_argument("--max-matrix-n", type=int, default=200,
                        help="largest n for the matrix check in construct")
    parser = argparse.ArgumentParser(
        prog="qmds", description="Quantum MDS codes from Hermitian dual-containing constacyclic codes."
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        sub.add_parser(name, parents=[common], help=help_text)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.jobs < 1 or args.budget < 1:
        print("error: --jobs and --budget must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        result = COMMANDS[args.command][0](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = result.render(args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return result.status


if __name__ == "__main__":
    sys.exit(main())
