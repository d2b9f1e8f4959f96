"""``pairmds`` command line.

Exit status: 0 success, 1 a verification mismatch, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .census import LEMMAS, check_lemma, lemma_spec, zero_block_check
from .construct import EXAMPLES, THEOREMS, build, check_code, mp_spec, permutation, theorem
from .errors import PairMdsError, VerificationFailed, ZeroCode
from .gf import root_of_unity
from .io import load_code, save_code, write_json
from .sympair import analyze

OK, MISMATCH, INVALID = 0, 1, 2

# (n, k, d_H, d_sp, class, omega index, interleaver listing) of each worked example
EXPECTED = {
    "3.1": (12, 6, 4, 8, "MDS", 2, (1, 6, 9, 2, 7, 10, 3, 8, 11, 4, 5, 12)),
    "3.2": (12, 7, 4, 7, "MDS", 2, (1, 6, 9, 2, 7, 10, 3, 8, 11, 4, 5, 12)),
    "3.3": (15, 7, 5, 10, "MDS", 2, (1, 7, 11, 2, 8, 12, 3, 9, 13, 4, 10, 14, 5, 6, 15)),
    "3.4": (20, 16, 3, 6, "MDS", 2,
            (3, 6, 12, 16, 4, 7, 13, 17, 5, 8, 14, 18, 1, 9, 15, 19, 2, 10, 11, 20)),
    "3.5": (24, 18, 4, 7, "AMDS", 6,
            (1, 18, 8, 19, 2, 13, 9, 20, 3, 14, 10, 21, 4, 15, 11, 22, 5, 16, 12, 23, 6, 17, 7, 24)),
}


def _int_range(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            return int(a), int(b)
        return int(text), int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}") from None


def _modulus(text: str) -> list[int]:
    try:
        return [int(c) for c in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated coefficients, got {text!r}") from None


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return v


def _add_engine_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--strategy", choices=("auto", "message", "support"), default="auto")
    p.add_argument("--cap", type=_positive, default=None,
                   help="largest message space enumerated directly (default 2^22 or $PAIRMDS_CAP)")
    p.add_argument("--workers", type=_positive, default=1)
    p.add_argument("--backend", choices=("numba", "numpy"), default=None,
                   help="kernel backend (default from $PAIRMDS_NUMBA)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pairmds", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a code and write it to a file")
    p.add_argument("--theorem", required=True, help=f"one of {', '.join(sorted(THEOREMS))}")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--modulus", type=_modulus, default=None)
    p.add_argument("--out", required=True)

    p = sub.add_parser("analyze", help="exact d_H / d_sp of a code file")
    p.add_argument("file")
    _add_engine_flags(p)
    p.add_argument("--json-out", default=None)

    p = sub.add_parser("example", help="rebuild a worked example and check it")
    p.add_argument("--id", required=True, choices=sorted(EXAMPLES))
    _add_engine_flags(p)
    p.add_argument("--json-out", default=None)

    p = sub.add_parser("sweep", help="verify a family over a range of n")
    p.add_argument("--theorem", required=True, help=f"one of {', '.join(sorted(THEOREMS))}")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=_int_range, default=None, help="N or A..B (default: full range)")
    _add_engine_flags(p)
    p.add_argument("--json-out", default=None)

    p = sub.add_parser("lemma", help="low-weight support census of an unpermuted MP code")
    p.add_argument("--id", required=True, choices=sorted(["2.3", *LEMMAS]))
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--theorem", choices=sorted(THEOREMS), default=None,
                   help="family whose MP code is examined by --id 2.3 (default 3.1)")
    p.add_argument("--backend", choices=("numba", "numpy"), default=None)
    p.add_argument("--json-out", default=None)
    return parser


def _engine(args) -> dict:
    return dict(strategy=args.strategy, cap=args.cap, workers=args.workers, backend=args.backend)


def cmd_construct(args) -> int:
    C = build(args.theorem, args.q, args.n, args.modulus)
    save_code(C, args.out)
    prov = {k: C.provenance[k] for k in ("theorem", "q", "n", "omega", "points")}
    print(f"n={C.n} k={C.k}")
    print(f"provenance {json.dumps(prov)}")
    return OK


def _print_report(r) -> None:
    print(r.to_line())
    print(f"witness_H={r.witness_H}")
    print(f"witness_sp={r.witness_sp}")
    print(f"strategy={r.strategy} work={json.dumps(r.work)}")


def cmd_analyze(args) -> int:
    C = load_code(args.file)
    if C.k == 0:
        raise ZeroCode("the code has dimension 0")
    r = analyze(C, **_engine(args))
    _print_report(r)
    if args.json_out:
        write_json(r.to_dict(), args.json_out)
    return OK


def cmd_example(args) -> int:
    tid, q, n = EXAMPLES[args.id]
    C = build(tid, q, n)
    r = analyze(C, **_engine(args))
    en, ek, edh, edsp, ecls, eomega, elisting = EXPECTED[args.id]
    checks = {
        "n": (en, C.n),
        "k": (ek, C.k),
        "d_H": (edh, r.d_H),
        "d_sp": (edsp, r.d_sp),
        "class": (ecls, r.classification),
        "omega": (eomega, root_of_unity(C.field, theorem(tid).M).index),
        "permutation": (elisting, permutation(tid, n).listing()),
    }
    failed = 0
    for name, (exp, got) in checks.items():
        ok = exp == got
        failed += not ok
        line = f"{'PASS' if ok else 'FAIL'} {name}"
        if not ok:
            line += f": expected {exp} computed {got}"
        print(line)
    print(r.to_line())
    if args.json_out:
        write_json({"example": args.id, "report": r.to_dict(),
                    "checks": {k: {"expected": v[0], "computed": v[1]} for k, v in checks.items()}},
                   args.json_out)
    return MISMATCH if failed else OK


def _sweep_row(job):
    tid, q, n, engine = job
    try:
        C = build(tid, q, n)
        r = analyze(C, **engine)
        v = check_code(tid, q, n, C, r)
        return {"n": n, "length": C.n, "k": C.k, "d_H": r.d_H, "d_sp": r.d_sp,
                "class": r.classification, "verdict": "PASS" if v.passed else "FAIL",
                "failures": {k: list(x) for k, x in v.failures().items()}}
    except PairMdsError as exc:
        return {"n": n, "verdict": "ERROR", "error": f"{type(exc).__name__}: {exc}"}


def sweep_rows(tid: str, q: int, ns, engine: dict, workers: int = 1) -> list[dict]:
    jobs = [(tid, q, n, dict(engine, workers=1)) for n in ns]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_sweep_row, jobs))
    else:
        rows = [_sweep_row(j) for j in jobs]
    return sorted(rows, key=lambda r: r["n"])


def cmd_sweep(args) -> int:
    th = theorem(args.theorem)
    lo, hi = args.n if args.n else (th.n_min, args.q)
    for n in (lo, hi):
        th.check(args.q, n)
    rows = sweep_rows(th.id, args.q, range(lo, hi + 1), _engine(args), args.workers)
    print(f"T{th.id} q={args.q}: expected d_H={th.d_H} d_sp={th.d_sp} class={th.classification}")
    print(f"{'n':>3} {'length':>6} {'k':>4} {'d_H':>4} {'d_sp':>5} {'class':>5}  verdict")
    first_bad = None
    for row in rows:
        if row["verdict"] == "ERROR":
            print(f"{row['n']:>3}  {row['error']}  ERROR")
        else:
            print(f"{row['n']:>3} {row['length']:>6} {row['k']:>4} {row['d_H']:>4} "
                  f"{row['d_sp']:>5} {row['class']:>5}  {row['verdict']}")
        if row["verdict"] != "PASS" and first_bad is None:
            first_bad = row
    if first_bad is not None:
        print(f"first failing row: n={first_bad['n']} "
              f"{first_bad.get('failures') or first_bad.get('error')}")
    if args.json_out:
        write_json({"theorem": th.id, "q": args.q, "rows": rows}, args.json_out)
    return OK if first_bad is None else MISMATCH


def cmd_lemma(args) -> int:
    if args.id == "2.3":
        tid = args.theorem or "3.1"
        ok, count = zero_block_check(mp_spec(tid, args.q, args.n))
        print(f"zero-block property T{tid} q={args.q} n={args.n}: codewords={count} "
              f"{'PASS' if ok else 'FAIL'}")
        if args.json_out:
            write_json({"lemma": "2.3", "theorem": tid, "q": args.q, "n": args.n,
                        "codewords": count, "passed": ok}, args.json_out)
        return OK if ok else MISMATCH
    lemma_spec(args.id)
    res = check_lemma(args.id, args.q, args.n, backend=args.backend)
    print(f"lemma {args.id} q={args.q} n={args.n}")
    for line in res.lines():
        print(f"  {line}")
    print("PASS" if res.passed else "FAIL")
    if args.json_out:
        write_json({
            "lemma": args.id, "q": args.q, "n": args.n, "passed": res.passed,
            "rows": [{"weight": r.weight, "supports": r.total,
                      "patterns": {"+".join(map(str, p)): c for p, c in r.patterns.items()},
                      "unlisted": {"+".join(map(str, p)): c for p, c in r.unlisted.items()},
                      "condition_failures": {"+".join(map(str, p)): len(v)
                                             for p, v in r.condition_failures.items()},
                      "observed": r.observed, "passed": r.passed} for r in res.rows],
        }, args.json_out)
    return OK if res.passed else MISMATCH


COMMANDS = {
    "construct": cmd_construct,
    "analyze": cmd_analyze,
    "example": cmd_example,
    "sweep": cmd_sweep,
    "lemma": cmd_lemma,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except VerificationFailed as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return MISMATCH
    except PairMdsError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return INVALID


if __name__ == "__main__":
    sys.exit(main())
