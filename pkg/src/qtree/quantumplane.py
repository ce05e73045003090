"""
Brute-force powers in the q-commutative algebra ``x_j x_i = q x_i x_j`` (i < j).

Every word in ``(x_1 + ... + x_k)^n`` is sorted into ``x_1^a1 ... x_k^ak``
by adjacent swaps, each swap of an out-of-order pair emitting one ``q``. So a
word contributes ``q ** inversions(word)`` to its sorted monomial. Nothing from
the q-binomial machinery is used, which makes this an independent oracle.

>>> e = expand_power(2, 2)
>>> e.terms[(1, 1)]
IntPolynomial('1 + q')
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from itertools import product

from .errors import DomainError, ResourceLimitError
from .qcalc import IntPolynomial, q_multinomial

__all__ = ["WORD_CAP", "Monomial", "Expansion", "expand_power", "verify_multinomial_theorem", "inversions"]

WORD_CAP = 10**7

Monomial = tuple[int, ...]


def inversions(word: tuple[int, ...]) -> int:
    """Number of position pairs ``p < p'`` with ``word[p] > word[p']``."""
    seen_greater = 0
    counts: dict[int, int] = defaultdict(int)
    for letter in word:
        seen_greater += sum(c for v, c in counts.items() if v > letter)
        counts[letter] += 1
    return seen_greater


@dataclass(frozen=True)
class Expansion:
    """``(x_1 + ... + x_k) ** n`` as a map from exponent vectors to coefficients."""

    k: int
    n: int
    terms: dict[Monomial, IntPolynomial]

    def variable_names(self) -> list[str]:
        if self.k <= 3:
            return ["x", "y", "z"][: self.k]
        return [f"x{i + 1}" for i in range(self.k)]

    def monomial_str(self, mono: Monomial) -> str:
        parts = []
        for name, a in zip(self.variable_names(), mono):
            if a == 1:
                parts.append(name)
            elif a > 1:
                parts.append(f"{name}^{a}")
        return "*".join(parts) or "1"

    def __str__(self) -> str:
        lines = []
        for mono in sorted(self.terms):
            lines.append(f"{self.monomial_str(mono)}: {self.terms[mono]}")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "terms": [
                {"exponents": list(mono), "coefficient": self.terms[mono].to_json()}
                for mono in sorted(self.terms)
            ],
        }


def expand_power(k: int, n: int, cap: int = WORD_CAP) -> Expansion:
    if k < 1:
        raise DomainError(f"need at least one variable, got k={k}")
    if n < 0:
        raise DomainError(f"power must be nonnegative, got n={n}")
    if k**n > cap:
        raise ResourceLimitError(f"{k}^{n} words exceeds the enumeration cap {cap}")
    hist: dict[Monomial, dict[int, int]] = defaultdict(lambda: defaultdict(int))
    for word in product(range(k), repeat=n):
        mono = [0] * k
        for letter in word:
            mono[letter] += 1
        hist[tuple(mono)][inversions(word)] += 1
    terms = {}
    for mono, h in hist.items():
        top = max(h)
        terms[mono] = IntPolynomial(tuple(h.get(i, 0) for i in range(top + 1)))
    return Expansion(k, n, terms)


def verify_multinomial_theorem(k: int, n: int, cap: int = WORD_CAP) -> bool:
    """Does every coefficient of ``expand_power(k, n)`` equal the q-multinomial of its exponents?"""
    e = expand_power(k, n, cap)
    if len(e.terms) != math.comb(n + k - 1, k - 1):
        return False
    return all(coeff == q_multinomial(mono) for mono, coeff in e.terms.items())
