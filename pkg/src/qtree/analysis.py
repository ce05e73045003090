"""Coefficient-shape predicates and closed-form predictions for Q(T)."""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .errors import DomainError
from .plucking import q_poly_state_product
from .qcalc import IntPolynomial
from .tree import RootedPlaneTree, subtree_sizes

__all__ = [
    "PropertyReport",
    "is_palindromic",
    "is_unimodal",
    "is_strictly_unimodal",
    "predicted_c1",
    "predicted_degree",
    "analyze",
]


def is_palindromic(p: IntPolynomial) -> bool:
    c = p.coeffs
    return c == c[::-1]


def _steps(p: IntPolynomial) -> list[int]:
    c = p.coeffs
    return [(b > a) - (b < a) for a, b in zip(c, c[1:])]


def is_unimodal(p: IntPolynomial) -> bool:
    """Nondecreasing up to some index, nonincreasing after it."""
    steps = _steps(p)
    seen_down = False
    for s in steps:
        if s < 0:
            seen_down = True
        elif s > 0 and seen_down:
            return False
    return True


def is_strictly_unimodal(p: IntPolynomial) -> bool:
    """
    Strictly increasing, then strictly decreasing, with at most one equal
    adjacent pair at the top (an even number of coefficients forces one).

    >>> is_strictly_unimodal(IntPolynomial((1, 1)))
    True
    >>> is_strictly_unimodal(IntPolynomial((1, 1, 1, 1)))
    False
    """
    steps = _steps(p)
    phase = 0  # 0 rising, 1 after the plateau step, 2 falling
    for s in steps:
        if s > 0:
            if phase:
                return False
        elif s == 0:
            if phase:
                return False
            phase = 1
        else:
            phase = 2
    return True


def predicted_c1(t: RootedPlaneTree) -> int:
    """``sum over vertices of (children - 1)``, skipping leaves."""
    if t.is_trivial():
        raise DomainError("c1 formula needs a tree with at least one edge")
    return sum(len(kids) - 1 for kids in subtree_sizes(t) if kids)


def predicted_degree(t: RootedPlaneTree) -> int:
    """Sum over vertices of ``E_i * E_j`` for unordered pairs of wedge components."""
    total = 0
    for kids in subtree_sizes(t):
        s = sum(kids)
        total += (s * s - sum(h * h for h in kids)) // 2
    return total


@dataclass(frozen=True)
class PropertyReport:
    """
    Measured shape of ``Q(T)`` next to the closed-form predictions.

    ``predicted_c1`` is ``None`` for the one-vertex tree, where the formula
    does not apply. ``c2`` and ``positive`` are measured only.
    """

    degree: int
    predicted_degree: int
    c0: int
    cN: int
    c1: int
    predicted_c1: int | None
    palindromic: bool
    unimodal: bool
    strictly_unimodal: bool
    c2: int
    positive: bool

    @property
    def consistent(self) -> bool:
        """True when every predicted value and shape property holds."""
        return (
            self.degree == self.predicted_degree
            and self.c0 == 1
            and self.cN == 1
            and (self.predicted_c1 is None or self.c1 == self.predicted_c1)
            and self.palindromic
            and self.unimodal
            and self.positive
        )

    def to_json(self) -> dict:
        out = {}
        for k, v in asdict(self).items():
            out[k] = str(v) if isinstance(v, int) and not isinstance(v, bool) else v
        return out


def analyze(t: RootedPlaneTree, q: IntPolynomial | None = None) -> PropertyReport:
    """Evaluate ``Q(T)`` (by the state product unless given) and report its shape."""
    if q is None:
        q = q_poly_state_product(t)
    return PropertyReport(
        degree=int(q.degree),
        predicted_degree=predicted_degree(t),
        c0=q.coeff(0),
        cN=q.coeffs[-1],
        c1=q.coeff(1),
        predicted_c1=None if t.is_trivial() else predicted_c1(t),
        palindromic=is_palindromic(q),
        unimodal=is_unimodal(q),
        strictly_unimodal=is_strictly_unimodal(q),
        c2=q.coeff(2),
        positive=all(c > 0 for c in q.coeffs),
    )
