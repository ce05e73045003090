"""
Command-line front end.

Usage:
    qtree compute "(()()())" [--algorithm auto|recursive|state|brute]
    qtree verify "(()(()))"
    qtree expand 2 4
    qtree factor "(()())"
    qtree graph k3.txt
    qtree scan --max-edges 8 [--predicate strictly-unimodal|all]

Global flags (before or after the subcommand): ``--format text|json`` and
``--threads N``. Trees can also come from ``--file`` (one per line, ``#``
comments), which prints one result per line.

Exit codes: 0 success, 1 domain or resource error, 2 usage error,
3 a verification failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .analysis import analyze, is_strictly_unimodal
from .errors import DomainError, ResourceLimitError
from .graphinv import SPANNING_TREE_CAP, graph_invariant, matrix_tree_count, read_graph
from .plucking import BRUTE_FORCE_CAP, evaluate, q_poly_bruteforce, q_poly_factored, q_poly_state_product
from .quantumplane import WORD_CAP, expand_power
from .qcalc import q_multinomial
from .tree import RootedPlaneTree, all_plane_trees, canonical_form, parse_tree, read_trees
from .verify import theorem_checks

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2, 3
SCAN_MAX_EDGES = 10


class UsageError(Exception):
    pass


def _emit(args, command: str, inputs, result, text: str) -> None:
    if args.format == "json":
        print(json.dumps({"command": command, "input": inputs, "result": result}))
    else:
        print(text)


def _map(args, fn: Callable, items: Sequence):
    if args.threads > 1 and len(items) > 1:
        with ThreadPoolExecutor(args.threads) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def _trees(args) -> list[RootedPlaneTree]:
    if (args.tree is None) == (args.file is None):
        raise UsageError("give exactly one of a tree argument or --file")
    if args.file is not None:
        try:
            lines = Path(args.file).read_text(encoding="utf-8").splitlines()
        except OSError as exc:
            raise DomainError(f"cannot read {args.file}: {exc.strerror}") from None
        return read_trees(lines)
    return [parse_tree(args.tree)]


def _check_cap(args, value: int, default: int, flag: str) -> int:
    if value > default and not args.force:
        raise ResourceLimitError(f"{flag} {value} exceeds the default {default}; add --force to accept the runtime")
    return value


# -- commands -------------------------------------------------------------------


def cmd_compute(args) -> int:
    cap = _check_cap(args, args.brute_cap, BRUTE_FORCE_CAP, "--brute-cap")
    trees = _trees(args)

    def run(t):
        if args.algorithm == "brute":
            return q_poly_bruteforce(t, cap=cap)
        return evaluate(t, args.algorithm)

    for t, p in zip(trees, _map(args, run, trees)):
        _emit(args, "compute", {"tree": t.text, "algorithm": args.algorithm}, p.to_json(),
              str(p) if args.tree is not None else f"{t.text}\t{p}")
    return EXIT_OK


def cmd_verify(args) -> int:
    trees = _trees(args)
    status = EXIT_OK
    for t, checks in zip(trees, _map(args, theorem_checks, trees)):
        ok = all(c.passed for c in checks)
        if not ok:
            status = EXIT_VERIFY
        if args.file is None:
            lines = [f"{'PASS' if c.passed else 'FAIL'}  {c.name}" + (f"  ({c.detail})" if c.detail else "")
                     for c in checks]
            lines.append(f"{'all checks passed' if ok else 'VERIFICATION FAILED'} for {t.text}")
            text = "\n".join(lines)
        else:
            failed = [c.name for c in checks if not c.passed]
            text = f"{t.text}\t{'PASS' if ok else 'FAIL ' + ','.join(failed)}"
        _emit(args, "verify", {"tree": t.text},
              {"passed": ok, "checks": [c.to_json() for c in checks]}, text)
    return status


def cmd_expand(args) -> int:
    cap = _check_cap(args, args.word_cap, WORD_CAP, "--word-cap")
    e = expand_power(args.k, args.n, cap=cap)
    mismatched = [m for m, c in e.terms.items() if c != q_multinomial(m)]
    ok = not mismatched
    text = str(e) + "\n" + ("q-multinomial theorem: PASS" if ok else
                            f"q-multinomial theorem: FAIL at {sorted(mismatched)}")
    _emit(args, "expand", {"k": args.k, "n": args.n},
          {"expansion": e.to_json(), "theorem_holds": ok}, text)
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_factor(args) -> int:
    trees = _trees(args)
    status = EXIT_OK

    def run(t):
        fac = q_poly_factored(t)
        return fac, fac.expand() == q_poly_state_product(t)

    for t, (fac, ok) in zip(trees, _map(args, run, trees)):
        if not ok:
            status = EXIT_VERIFY
        check = "re-expansion: PASS" if ok else "re-expansion: FAIL"
        text = f"{fac}\n{check}" if args.tree is not None else f"{t.text}\t{fac}\t{check}"
        _emit(args, "factor", {"tree": t.text}, {"factors": fac.to_json(), "reexpands": ok}, text)
    return status


def cmd_graph(args) -> int:
    cap = _check_cap(args, args.tree_cap, SPANNING_TREE_CAP, "--tree-cap")
    try:
        g = read_graph(args.path)
    except OSError as exc:
        raise DomainError(f"cannot read {args.path}: {exc.strerror}") from None
    ms = graph_invariant(g, cap=cap, threads=args.threads)
    expected = matrix_tree_count(g)
    ok = ms.total == expected
    text = f"{ms}\nspanning trees: {ms.total} (matrix-tree: {expected}) {'PASS' if ok else 'FAIL'}"
    _emit(args, "graph", {"path": args.path, "vertices": g.vertex_count, "base": g.base},
          {"multiset": ms.to_json(), "spanning_trees": ms.total, "matrix_tree": expected}, text)
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_scan(args) -> int:
    if args.max_edges < 0:
        raise UsageError("--max-edges must be nonnegative")
    _check_cap(args, args.max_edges, SCAN_MAX_EDGES, "--max-edges")
    seen = set()
    shapes = []
    for e in range(args.max_edges + 1):
        for t in all_plane_trees(e):
            c = canonical_form(t)
            if c not in seen:
                seen.add(c)
                shapes.append(c)

    def run(t):
        q = q_poly_state_product(t)
        return q, analyze(t, q)

    hits = []
    lines = []
    for t, (q, rep) in zip(shapes, _map(args, run, shapes)):
        if args.predicate == "strictly-unimodal" and not is_strictly_unimodal(q):
            continue
        hits.append({"tree": t.text, "polynomial": q.to_json(), "report": rep.to_json()})
        flags = [name for name, on in (("palindromic", rep.palindromic), ("unimodal", rep.unimodal),
                                       ("strict", rep.strictly_unimodal)) if on]
        lines.append(f"{t.text}\t{q}\t[{' '.join(flags)}]")
    lines.append(f"{len(hits)} of {len(shapes)} rooted trees with <= {args.max_edges} edges")
    _emit(args, "scan", {"max_edges": args.max_edges, "predicate": args.predicate},
          {"trees": hits, "scanned": len(shapes)}, "\n".join(lines))
    return EXIT_OK


# -- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default=argparse.SUPPRESS)
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="qtree", description=__doc__.split("\n\n")[0].strip(),
                                     parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    def tree_input(p):
        p.add_argument("tree", nargs="?", help="tree in parenthesis notation, e.g. '(()())'")
        p.add_argument("--file", help="read trees from a file, one per line")

    p = sub.add_parser("compute", parents=[common], help="evaluate Q(T)")
    tree_input(p)
    p.add_argument("--algorithm", choices=["auto", "recursive", "state", "brute"], default="auto")
    p.add_argument("--brute-cap", type=int, default=BRUTE_FORCE_CAP)
    p.add_argument("--force", action="store_true", help="allow caps above their defaults")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", parents=[common], help="check every identity of Q(T) on a tree")
    tree_input(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("expand", parents=[common], help="expand (x_1+...+x_k)^n in the quantum plane")
    p.add_argument("k", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--word-cap", type=int, default=WORD_CAP)
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("factor", parents=[common], help="cyclotomic factorization of Q(T)")
    tree_input(p)
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("graph", parents=[common], help="multiset of Q over spanning trees of a based graph")
    p.add_argument("path")
    p.add_argument("--tree-cap", type=int, default=SPANNING_TREE_CAP)
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("scan", parents=[common], help="list rooted trees up to a size with their Q")
    p.add_argument("--max-edges", type=int, required=True)
    p.add_argument("--predicate", choices=["strictly-unimodal", "all"], default="strictly-unimodal")
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if not hasattr(args, "format"):
        args.format = "text"
    if not hasattr(args, "threads"):
        args.threads = 1
    if not hasattr(args, "force"):
        args.force = False
    try:
        if args.threads < 1:
            raise UsageError("--threads must be at least 1")
        return args.func(args)
    except UsageError as exc:
        print(f"qtree {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, ResourceLimitError) as exc:
        if args.format == "json":
            print(json.dumps({"command": args.command, "input": None, "result": None, "error": str(exc)}))
        print(f"qtree {args.command}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
