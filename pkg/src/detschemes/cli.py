"""Command line interface: ``detschemes <command> FILE [options]``.

Exit codes: 0 success, 1 internal error or failed check, 2 input or
validation error, 3 precondition error (MTooSmall, NotAdmissible, ...).
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path

from . import chains, degmatrix, gorenstein, hilbert
from .errors import (
    DegenerateMatrix,
    InconsistentFormulas,
    InputError,
    NonIntegerResult,
    NotDivisible,
    PreconditionError,
)
from .exactpoly import IntPoly, difference

EXIT_OK, EXIT_INTERNAL, EXIT_INPUT, EXIT_PRECONDITION = 0, 1, 2, 3
JSON_SAFE_INT = 2**53
_INT_STRING = re.compile(r"-?\d+\Z")


def to_json_safe(obj):
    """Replace ints beyond 2^53 in magnitude by their decimal strings."""
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) > JSON_SAFE_INT else obj
    if isinstance(obj, dict):
        return {k: to_json_safe(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_json_safe(v) for v in obj]
    return obj


def from_json_safe(obj):
    if isinstance(obj, str) and _INT_STRING.match(obj):
        return int(obj)
    if isinstance(obj, dict):
        return {k: from_json_safe(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [from_json_safe(v) for v in obj]
    return obj


def dumps(obj) -> str:
    return json.dumps(to_json_safe(obj), indent=2, ensure_ascii=True) + "\n"


@dataclass
class AnalysisReport:
    matrix_input: list
    n: int
    canonicalized: bool
    matrix: list
    l: int
    c: int
    dimension: int
    col_shifts: list
    row_shifts: list
    h_vector: list
    degree: int
    regularity: int
    regularity_closed: int | None
    reg_index: int
    k_polynomial: list
    betti: list
    reduced_admissible: bool | None
    irreducible_admissible: bool | None
    smooth_admissible: bool | None
    warnings: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> AnalysisReport:
        return cls(**from_json_safe(json.loads(text)))


def load_matrix(path: str) -> degmatrix.DegreeMatrix:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return degmatrix.validate(degmatrix.parse_matrix(text))


def prepare(args) -> tuple[degmatrix.DegreeMatrix, degmatrix.DegreeMatrix, bool]:
    """(original, working matrix, whether reordering happened)."""
    original = load_matrix(args.file)
    if args.no_canonicalize:
        return original, original, False
    canon = degmatrix.canonicalize(original)
    return original, canon, canon != original


def _betti_rows(table: hilbert.BettiTable) -> list:
    return [[[s, k] for s, k in sorted(col.items())] for col in table.columns]


def build_report(args) -> AnalysisReport:
    original, U, moved = prepare(args)
    n = args.n
    if n < U.c:
        raise PreconditionError(f"need n >= c, got n={n}, c={U.c}")
    warnings = []
    counts = chains.trace_weight_counts(U, threads=args.threads)
    h = hilbert.h_vector(U)
    degree = hilbert.degree_trace_formula(U)
    reg_max, reg_all = hilbert.regularity_bounds(U, counts)
    canonical = degmatrix.is_canonical(U)
    reg_closed = reduced = irreducible = smooth = None
    if canonical:
        reg_closed = hilbert.regularity_closed(U)
        reduced = degmatrix.is_reduced_admissible(U)
        irreducible = degmatrix.is_irreducible_admissible(U, n)
        smooth = degmatrix.is_smooth_admissible(U, n)
        if not reduced:
            warnings.append(
                "matrix is not reduced-admissible (some u_{i,i+c-1} <= 0); "
                "results are formal and may not belong to a scheme"
            )
        elif not (reg_closed == reg_max == reg_all == h.length + 1 and degree == h.degree):
            raise InconsistentFormulas("summary cross-checks failed")
    else:
        warnings.append(
            "matrix is not in canonical order: closed-form regularity and "
            "admissibility predicates are not reported"
        )
    if reg_max != reg_all:
        warnings.append(f"overall max of trace - weight is {reg_all}, last module gives {reg_max}")
    sp = degmatrix.shifts(U)
    return AnalysisReport(
        matrix_input=original.tolist(),
        n=n,
        canonicalized=moved,
        matrix=U.tolist(),
        l=U.l,
        c=U.c,
        dimension=n - U.c,
        col_shifts=list(sp.col_shifts),
        row_shifts=list(sp.row_shifts),
        h_vector=list(h.entries),
        degree=degree,
        regularity=reg_max,
        regularity_closed=reg_closed,
        reg_index=reg_max - (n - U.c) - 1,
        k_polynomial=list(chains.k_polynomial(U).poly.coeffs),
        betti=_betti_rows(hilbert.betti_table(U)),
        reduced_admissible=reduced,
        irreducible_admissible=irreducible,
        smooth_admissible=smooth,
        warnings=warnings,
    )


def _fmt_vec(v) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def _fmt_betti(rows) -> list[str]:
    out = []
    for i, col in enumerate(rows):
        terms = " + ".join(f"R(-{s})^{k}" if k != 1 else f"R(-{s})" for s, k in col)
        out.append(f"  M_{i + 1}: {terms}")
    return out


def cmd_analyze(args) -> int:
    rep = build_report(args)
    if args.json:
        sys.stdout.write(rep.to_json())
        return EXIT_OK
    lines = ["degree matrix" + (" (canonicalized)" if rep.canonicalized else "") + ":"]
    lines += ["  " + " ".join(str(x) for x in row) for row in rep.matrix]
    lines += [
        f"l = {rep.l}, c = {rep.c}, n = {rep.n}, dim = {rep.dimension}",
        f"column shifts a = {_fmt_vec(rep.col_shifts)}, row shifts b = {_fmt_vec(rep.row_shifts)}",
        f"h-vector: {_fmt_vec(rep.h_vector)}",
        f"degree: {rep.degree}",
        f"regularity: {rep.regularity}",
        f"regularity index: {rep.reg_index}",
        f"K(z) = {IntPoly(rep.k_polynomial)}",
        "Betti table:",
        *_fmt_betti(rep.betti),
        f"reduced-admissible: {rep.reduced_admissible}",
        f"irreducible-admissible: {rep.irreducible_admissible}",
        f"smooth-admissible: {rep.smooth_admissible}",
    ]
    lines += [f"warning: {w}" for w in rep.warnings]
    print("\n".join(lines))
    return EXIT_OK


def cmd_hilbert(args) -> int:
    _, U, _ = prepare(args)
    n = args.n
    if n < U.c:
        raise PreconditionError(f"need n >= c, got n={n}, c={U.c}")
    d = n - U.c
    reg = hilbert.regularity_bounds(U, chains.trace_weight_counts(U, threads=args.threads))[0]
    r = reg - 1
    t_max = args.t_max if args.t_max is not None else reg + 3
    values = hilbert.hilbert_function_values(U, n, t_max)
    diffs = [difference(values, k) for k in range(1, d + 2)]
    rows = [
        {"t": t, "H": values[t], "delta": [col[t] for col in diffs], "stable": t == r}
        for t in range(t_max + 1)
    ]
    if args.json:
        sys.stdout.write(dumps({"n": n, "d": d, "r": r, "rows": rows}))
        return EXIT_OK
    header = ["t", "H"] + [f"D^{k}" for k in range(1, d + 2)]
    table = [header] + [[str(row["t"]), str(row["H"])] + [str(x) for x in row["delta"]] for row in rows]
    widths = [max(len(r_[i]) for r_ in table) for i in range(len(header))]
    for k, row in enumerate(table):
        mark = "  <- r" if k > 0 and rows[k - 1]["stable"] else ""
        print("  ".join(x.rjust(w) for x, w in zip(row, widths)) + mark)
    return EXIT_OK


def cmd_betti(args) -> int:
    _, U, _ = prepare(args)
    chains.trace_weight_counts(U, threads=args.threads)
    rows = _betti_rows(hilbert.betti_table(U))
    if args.json:
        sys.stdout.write(dumps({"c": U.c, "betti": rows}))
        return EXIT_OK
    print("  M_0: R")
    print("\n".join(_fmt_betti(rows)))
    return EXIT_OK


def cmd_ag(args) -> int:
    _, U, _ = prepare(args)
    build = gorenstein.ag_smooth_from_degree_matrix if args.smooth else gorenstein.ag_from_degree_matrix
    chains.trace_weight_counts(U, threads=args.threads)
    ag = build(U, args.n, args.m)
    out = {
        "h_vector": list(ag.entries.entries),
        "length": ag.length,
        "m": ag.m,
        "d": ag.d,
        "base_degree": ag.base_degree,
        "degree": ag.degree,
        "symmetric": ag.is_symmetric,
        "decreasing_type": ag.is_decreasing_type,
        "m_min_numeric": ag.m_min_numeric,
        "warnings": list(ag.warnings),
    }
    if args.json:
        sys.stdout.write(dumps(out))
        return EXIT_OK
    print(f"h-vector of Y: {_fmt_vec(out['h_vector'])}")
    print(f"length: {ag.length} (m + d = {ag.m + ag.d})")
    print(f"degree of Y: {ag.degree}")
    print(f"symmetric: {ag.is_symmetric}")
    print(f"decreasing type: {ag.is_decreasing_type}")
    print(f"m_min_numeric: {ag.m_min_numeric}")
    for w in ag.warnings:
        print(f"warning: {w}")
    return EXIT_OK


def cmd_chains(args) -> int:
    _, U, _ = prepare(args)
    kp = chains.k_polynomial(U, threads=args.threads)
    by_weight = {}
    for (t, w), k in sorted(kp.trace_counts.items(), key=lambda x: (x[0][1], x[0][0])):
        by_weight.setdefault(w, []).append([t, k])
    if args.json:
        out = {
            "total": kp.term_count,
            "counts_by_weight": [kp.counts_by_weight[w] for w in range(U.c)],
            "traces_by_weight": [by_weight.get(w, []) for w in range(U.c)],
            "k_polynomial": list(kp.poly.coeffs),
        }
        if not args.group_by_weight:
            out["chains"] = [
                {"col_blocks": ch.col_blocks, "row_sets": ch.row_sets, "trace": ch.trace, "weight": ch.weight}
                for ch in chains.enumerate_chains(U)
            ]
        sys.stdout.write(dumps(out))
        return EXIT_OK
    if not args.group_by_weight:
        for ch in chains.enumerate_chains(U):
            print(ch)
    print(f"total chains: {kp.term_count}")
    for w in range(U.c):
        traces = ", ".join(f"{t}x{k}" if k != 1 else str(t) for t, k in by_weight.get(w, []))
        print(f"  weight {w}: {kp.counts_by_weight[w]} chains; traces {{{traces}}}")
    print(f"K(z) = {kp.poly}")
    return EXIT_OK


def run_checks(U: degmatrix.DegreeMatrix, n: int, threads=None) -> list[dict]:
    """Cross-checks between independent routes. Each entry has name,
    passed and detail (a witness on failure)."""
    results = []

    def record(name, passed, detail=""):
        results.append({"name": name, "passed": bool(passed), "detail": detail})

    chain_counts = chains.trace_weight_counts(U, threads=threads)
    raw_counts = chains.raw_trace_weight_counts(U)
    if chain_counts == raw_counts:
        record("chains_vs_raw", True, f"{sum(raw_counts.values())} summands agree")
    else:
        diff = (chain_counts - raw_counts) + (raw_counts - chain_counts)
        (t, w) = sorted(diff)[0]
        record("chains_vs_raw", False,
               f"(trace {t}, weight {w}): chains {chain_counts[t, w]}, raw {raw_counts[t, w]}")

    expected = chains.chain_counts_closed_form(U.l, U.c)
    got = [sum(k for (_, w), k in chain_counts.items() if w == i) for i in range(U.c)]
    record("counts_by_weight", got == expected, f"got {got}, closed form {expected}")

    try:
        h = hilbert.h_vector(U)
        record("divisibility", True, f"K(z) = (1-z)^{U.c} * ({h.as_poly()})")
    except (NotDivisible, DegenerateMatrix) as exc:
        record("divisibility", False, str(exc))
        h = None

    try:
        deg = hilbert.degree_trace_formula(U)
        ok = h is not None and deg == h.degree
        record("degree_equals_h1", ok, f"trace formula {deg}, h(1) = {h.degree if h else None}")
    except NonIntegerResult as exc:
        record("degree_equals_h1", False, str(exc))

    restricted, overall = hilbert.regularity_bounds(U, chain_counts)
    closed = hilbert.regularity_closed(U) if degmatrix.is_canonical(U) else restricted
    lengths_ok = h is not None and closed == h.length + 1
    record("regularity", closed == restricted == overall and lengths_ok,
           f"closed {closed}, last module {restricted}, overall {overall}, "
           f"h-vector length + 1 = {h.length + 1 if h else None}")

    van = hilbert.vanishing_identities(U, n)
    bad = [i for i, v in van.items() if v != 0]
    record("symmetric_function_vanishing", not bad,
           f"checked i = {n - U.c + 1}..{n}" if not bad else f"i = {bad[0]} gives {van[bad[0]]}")

    if h is not None:
        d = n - U.c
        values = hilbert.hilbert_function_values(U, n, closed + 3)
        stab = hilbert.stabilization_point(values, d, h.degree)
        record("difference_stabilization", stab == closed - 1,
               f"Delta^{d} H_S reaches {h.degree} at t = {stab}, expected {closed - 1}")
    return results


def cmd_check(args) -> int:
    _, U, _ = prepare(args)
    if args.n < U.c:
        raise PreconditionError(f"need n >= c, got n={args.n}, c={U.c}")
    results = run_checks(U, args.n, args.threads)
    ok = all(r["passed"] for r in results)
    if args.json:
        sys.stdout.write(dumps({"passed": ok, "checks": results}))
    else:
        for r in results:
            print(f"{'PASS' if r['passed'] else 'FAIL'} {r['name']}: {r['detail']}")
        if not ok:
            first = next(r for r in results if not r["passed"])
            print(f"first failure: {first['name']}", file=sys.stderr)
    return EXIT_OK if ok else EXIT_INTERNAL


def cmd_random(args) -> int:
    from .corpus import random_matrices

    mats = random_matrices(args.l, args.c, args.max_entry, args.count, args.seed)
    if args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        for k, U in enumerate(mats):
            path = out / f"random_l{args.l}_c{args.c}_{k:03d}.json"
            path.write_text(json.dumps({"entries": U.tolist()}) + "\n")
            print(path)
    else:
        for U in mats:
            print(json.dumps({"entries": U.tolist()}))
    return EXIT_OK


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _threads_default():
    env = os.environ.get("DETSCHEMES_THREADS")
    try:
        return max(1, int(env)) if env else 1
    except ValueError:
        return 1


def _common_flags() -> argparse.ArgumentParser:
    # A fresh parent per parser: argparse shares action objects with children,
    # and the top-level set_defaults would otherwise clobber SUPPRESS here.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    common.add_argument("--no-canonicalize", action="store_true", default=argparse.SUPPRESS,
                        help="keep the given row/column order")
    common.add_argument("--threads", type=_positive, default=argparse.SUPPRESS,
                        help="worker processes for chain folding (env DETSCHEMES_THREADS)")
    common.add_argument("--n", type=_positive, default=argparse.SUPPRESS,
                        help="ambient projective dimension")
    return common


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="detschemes",
        description="Hilbert functions and Gorenstein divisors of standard determinantal schemes.",
        parents=[_common_flags()],
    )
    p.set_defaults(json=False, no_canonicalize=False, threads=None, n=None)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_, needs_file=True):
        sp = sub.add_parser(name, parents=[_common_flags()], help=help_)
        if needs_file:
            sp.add_argument("file", help="degree matrix: JSON {\"entries\": [[...]]} or text rows; - for stdin")
        sp.set_defaults(func=func, needs_n=False)
        return sp

    add("analyze", cmd_analyze, "full numerical report").set_defaults(needs_n=True)
    sp = add("hilbert", cmd_hilbert, "tabulate H_S(t) and its differences")
    sp.add_argument("--t-max", type=int, default=None)
    sp.set_defaults(needs_n=True)
    add("betti", cmd_betti, "graded Betti table of the Eagon-Northcott resolution")
    sp = add("ag", cmd_ag, "h-vector of a general Y in |mH-K|")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--smooth", action="store_true", help="also require the smoothness hypotheses")
    sp.set_defaults(needs_n=True)
    sp = add("chains", cmd_chains, "list chains, trace multiset and K-polynomial")
    sp.add_argument("--group-by-weight", action="store_true")
    add("check", cmd_check, "run the oracle cross-checks").set_defaults(needs_n=True)
    sp = add("random", cmd_random, "emit random canonical degree matrices", needs_file=False)
    sp.add_argument("--l", type=_positive, required=True)
    sp.add_argument("--c", type=_positive, required=True)
    sp.add_argument("--max-entry", type=_positive, default=3)
    sp.add_argument("--count", type=_positive, default=1)
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--out-dir", default=None)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if args.threads is None:
        args.threads = _threads_default()
    if args.needs_n and args.n is None:
        print(f"error: {args.command} needs --n", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except (InputError, NotDivisible, DegenerateMatrix, NonIntegerResult) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except InconsistentFormulas as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
