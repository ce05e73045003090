"""
Three evaluators of the plucking polynomial Q(T) and the identities tying them together.

``q_poly_bruteforce``
    Enumerates every complete plucking order. Exponential; the oracle.
``q_poly_recursive``
    The leaf-removal recursion, memoised on the plane serialization.
``q_poly_state_product``
    Product over vertices of q-multinomial weights. Polynomial time.

>>> from qtree.tree import parse_tree
>>> q_poly_recursive(parse_tree("(()())"))
IntPolynomial('1 + q')
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Callable

from .errors import DomainError, ResourceLimitError
from .qcalc import (
    CyclotomicFactorization,
    IntPolynomial,
    expand_power_product,
    factor_q_binomial,
    factor_q_factorial,
    q_binomial,
    q_int,
    q_multinomial,
)
from .tree import RootedPlaneTree, leaves, r_exponent, remove_leaf, reroot_to_child, subtree_sizes

__all__ = [
    "BRUTE_FORCE_CAP",
    "q_poly_bruteforce",
    "q_poly_recursive",
    "q_poly_state_product",
    "vertex_weights",
    "wedge_product_value",
    "multi_wedge_value",
    "reroot_identity_check",
    "q_poly_factored",
    "q_prime_factored",
    "EVALUATORS",
    "evaluate",
]

BRUTE_FORCE_CAP = 8

Evaluator = Callable[[RootedPlaneTree], IntPolynomial]


def q_poly_bruteforce(t: RootedPlaneTree, cap: int = BRUTE_FORCE_CAP) -> IntPolynomial:
    """
    Sum ``q ** (r_1 + ... + r_E)`` over every order of plucking all leaves.

    No memoisation: the number of orders can reach ``E!``, so trees with more
    than ``cap`` edges are refused.
    """
    if t.edge_count > cap:
        raise ResourceLimitError(f"brute force refused: {t.edge_count} edges exceeds cap {cap}")
    hist: Counter[int] = Counter()

    def pluck_all(tree: RootedPlaneTree, weight: int) -> None:
        if tree.is_trivial():
            hist[weight] += 1
            return
        for v in leaves(tree):
            pluck_all(remove_leaf(tree, v), weight + r_exponent(tree, v))

    pluck_all(t, 0)
    top = max(hist)
    return IntPolynomial(tuple(hist[k] for k in range(top + 1)))


def _pluck_moves(s: str) -> list[tuple[int, str]]:
    # In the text form a leaf is a "()" pair; the edges right of its root path
    # belong to exactly the vertices that open after it.
    opens_after = [0] * (len(s) + 1)
    for i in range(len(s) - 1, -1, -1):
        opens_after[i] = opens_after[i + 1] + (s[i] == "(")
    return [
        (opens_after[p + 2], s[:p] + s[p + 2:])
        for p in range(len(s) - 1)
        if s[p] == "(" and s[p + 1] == ")"
    ]


def q_poly_recursive(t: RootedPlaneTree) -> IntPolynomial:
    """``Q(T) = sum over leaves v of q^r(T,v) Q(T - v)``, memoised per sub-shape."""
    memo: dict[str, tuple[int, ...]] = {"()": (1,)}
    stack = [t.text]
    while stack:
        s = stack[-1]
        if s in memo:
            stack.pop()
            continue
        moves = _pluck_moves(s)
        missing = [child for _, child in moves if child not in memo]
        if missing:
            stack.extend(missing)
            continue
        acc: list[int] = []
        for r, child in moves:
            sub = memo[child]
            if len(acc) < r + len(sub):
                acc.extend([0] * (r + len(sub) - len(acc)))
            for i, c in enumerate(sub, r):
                acc[i] += c
        memo[s] = tuple(acc)
        stack.pop()
    return IntPolynomial(memo[t.text])


def vertex_weights(t: RootedPlaneTree) -> list[IntPolynomial]:
    """
    The weight of each vertex, in postorder: the q-multinomial of the edge
    counts of its wedge components (child subtree plus attaching edge).
    """
    return [q_multinomial(kids) for kids in subtree_sizes(t)]


def _state_exponents(t: RootedPlaneTree) -> dict[int, int]:
    # W(v) = [e]! / prod [h_c]!, and [m]! = prod_{k<=m} (1-q^k) / (1-q)^m with
    # the (1-q) powers cancelling since e = sum h_c. Each vertex therefore adds
    # +1 on k = 1..e and -1 on k = 1..h_c; a difference array collects them.
    diff = [0] * (t.edge_count + 2)
    for kids in subtree_sizes(t):
        if len(kids) < 2:
            continue
        diff[1] += 1 - len(kids)
        diff[sum(kids) + 1] -= 1
        for h in kids:
            diff[h + 1] += 1
    out = {}
    a = 0
    for k in range(1, len(diff)):
        a += diff[k]
        if a:
            out[k] = a
    return out


def q_poly_state_product(t: RootedPlaneTree) -> IntPolynomial:
    """
    ``Q(T)`` as the product of the vertex weights.

    Every weight is a ratio of products of ``(1 - q^k)``; the exponents are
    accumulated over all vertices first and the product is then expanded in
    one pass per surviving factor, so long thin trees stay cheap.
    """
    exps = _state_exponents(t)
    degree = sum(k * a for k, a in exps.items())
    return expand_power_product(exps, degree)


def wedge_product_value(t1: RootedPlaneTree, t2: RootedPlaneTree,
                        evaluator: Evaluator = q_poly_recursive) -> IntPolynomial:
    """``binom(E1 + E2, E1)_q * Q(t1) * Q(t2)``, which equals ``Q(wedge([t1, t2]))``."""
    e1, e2 = t1.edge_count, t2.edge_count
    return q_binomial(e1 + e2, e1) * evaluator(t1) * evaluator(t2)


def multi_wedge_value(ts: list[RootedPlaneTree], evaluator: Evaluator = q_poly_recursive) -> IntPolynomial:
    """``q_multinomial(E_1, ..., E_k) * prod Q(t_i)``, which equals ``Q(wedge(ts))``."""
    result = q_multinomial([t.edge_count for t in ts])
    for t in ts:
        result = result * evaluator(t)
    return result


def reroot_identity_check(t: RootedPlaneTree, child_index: int,
                          evaluator: Evaluator = q_poly_recursive) -> bool:
    """
    Check ``Q(T, v1) [E2 + 1]_q == Q(T, v2) [E1 + 1]_q`` where ``v2`` is the
    root's child ``child_index``, ``E2`` counts the edges above ``v2`` and
    ``E1`` those on the old root's side of the connecting edge.
    """
    if not 0 <= child_index < len(t.children):
        raise DomainError(f"invalid child index {child_index} at the root")
    e2 = t.children[child_index].edge_count
    e1 = t.edge_count - e2 - 1
    q1 = evaluator(t)
    q2 = evaluator(reroot_to_child(t, child_index))
    return q1 * q_int(e2 + 1) == q2 * q_int(e1 + 1)


def q_poly_factored(t: RootedPlaneTree) -> CyclotomicFactorization:
    """
    Cyclotomic factorization of ``Q(T)``, built from the telescoped q-binomials
    of every vertex weight.
    """
    fac = CyclotomicFactorization()
    for kids in subtree_sizes(t):
        total = 0
        for h in kids:
            fac = fac * factor_q_binomial(total + h, h)
            total += h
    return fac


def q_prime_factored(t: RootedPlaneTree) -> CyclotomicFactorization:
    """
    ``Q(T) / [E]_q!`` in factored form. It is multiplicative under wedge
    products but generally not a polynomial, so it is never expanded here.
    """
    return q_poly_factored(t) / factor_q_factorial(t.edge_count)


EVALUATORS: dict[str, Evaluator] = {
    "brute": q_poly_bruteforce,
    "recursive": q_poly_recursive,
    "state": q_poly_state_product,
}


def evaluate(t: RootedPlaneTree, algorithm: str = "auto") -> IntPolynomial:
    if algorithm == "auto":
        algorithm = "state"
    try:
        fn = EVALUATORS[algorithm]
    except KeyError:
        raise DomainError(f"unknown algorithm {algorithm!r}") from None
    return fn(t)
