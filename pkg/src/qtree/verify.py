"""Run every structural identity of Q(T) against a single tree."""

from __future__ import annotations

from dataclasses import dataclass

from .analysis import analyze
from .plucking import (
    BRUTE_FORCE_CAP,
    multi_wedge_value,
    q_poly_bruteforce,
    q_poly_factored,
    q_poly_recursive,
    q_poly_state_product,
    reroot_identity_check,
    wedge_product_value,
)
from .tree import RootedPlaneTree, permute_children

__all__ = ["Check", "RECURSIVE_LIMIT", "theorem_checks"]

# Above this many edges the memoised recursion can visit too many sub-shapes.
RECURSIVE_LIMIT = 14


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


def theorem_checks(t: RootedPlaneTree, seeds: range = range(5), brute_cap: int = BRUTE_FORCE_CAP) -> list[Check]:
    e = t.edge_count
    q = q_poly_state_product(t)
    ref = q_poly_recursive if e <= RECURSIVE_LIMIT else q_poly_state_product
    checks = []

    used = ["state"]
    agree = True
    if e <= RECURSIVE_LIMIT:
        used.append("recursive")
        agree &= q_poly_recursive(t) == q
    if e <= brute_cap:
        used.append("brute")
        agree &= q_poly_bruteforce(t, cap=brute_cap) == q
    checks.append(Check("evaluator_agreement", agree, "+".join(used)))

    if len(t.children) >= 2:
        left = RootedPlaneTree(t.children[:1])
        right = RootedPlaneTree(t.children[1:])
        checks.append(Check("wedge_product", wedge_product_value(left, right, ref) == q,
                            f"{left} v {right}"))
        branches = [RootedPlaneTree((c,)) for c in t.children]
        checks.append(Check("multi_wedge_product", multi_wedge_value(branches, ref) == q,
                            f"{len(branches)} branches"))

    bad = [s for s in seeds if ref(permute_children(t, s)) != q]
    checks.append(Check("embedding_independence", not bad,
                        f"seeds {list(seeds)}" + (f", failed {bad}" if bad else "")))

    bad = [i for i in range(len(t.children)) if not reroot_identity_check(t, i, ref)]
    checks.append(Check("change_of_root", not bad,
                        f"{len(t.children)} root edges" + (f", failed {bad}" if bad else "")))

    rep = analyze(t, q)
    checks.append(Check("endpoints_and_positivity", rep.c0 == 1 and rep.cN == 1 and rep.positive,
                        f"c0={rep.c0} cN={rep.cN}"))
    checks.append(Check("palindromic", rep.palindromic))
    checks.append(Check("unimodal", rep.unimodal))
    checks.append(Check("degree_formula", rep.degree == rep.predicted_degree,
                        f"measured {rep.degree}, predicted {rep.predicted_degree}"))
    if rep.predicted_c1 is not None:
        checks.append(Check("c1_formula", rep.c1 == rep.predicted_c1,
                            f"measured {rep.c1}, predicted {rep.predicted_c1}"))
    fac = q_poly_factored(t)
    checks.append(Check("cyclotomic_factorization", fac.expand() == q, str(fac)))
    return checks
