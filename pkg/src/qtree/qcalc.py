"""
Exact integer polynomials in one variable ``q`` and their q-analogues.

Polynomials are dense tuples of Python integers, constant term first, so
coefficients never overflow. The q-binomials are built from the Pascal
recurrence and memoised, which keeps every intermediate value inside Z[q].

>>> q_binomial(4, 2)
IntPolynomial('1 + q + 2*q^2 + q^3 + q^4')
>>> print(factor_q_binomial(4, 2))
Ψ3 * Ψ4
"""

from __future__ import annotations

import math
import re
import threading
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate
from operator import sub

from .errors import DomainError, InvariantViolationError, NotDivisibleError

__all__ = [
    "NEG_INF",
    "IntPolynomial",
    "CyclotomicFactorization",
    "q_int",
    "q_factorial",
    "q_binomial",
    "q_multinomial",
    "poly_add",
    "poly_mul",
    "poly_shift",
    "poly_divide_exact",
    "cyclotomic",
    "factor_q_binomial",
    "factor_q_factorial",
    "expand_power_product",
]

#: Degree of the zero polynomial.
NEG_INF = float("-inf")

_TERM_RE = re.compile(r"([+-]?)\s*(\d+)?\s*(\*?\s*q\s*(?:\^\s*(\d+))?)?")


@dataclass(frozen=True)
class IntPolynomial:
    """
    A polynomial with integer coefficients; ``coeffs[i]`` multiplies ``q**i``.

    Trailing zeros are stripped on construction, so equal polynomials have
    equal coefficient tuples and the zero polynomial is ``()``.

    >>> IntPolynomial((1, 1)) * IntPolynomial((1, 1))
    IntPolynomial('1 + 2*q + q^2')
    >>> IntPolynomial(()).degree
    -inf
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c))

    # -- constructors ---------------------------------------------------------

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPolynomial:
        """``c * q**k``."""
        if k < 0:
            raise DomainError(f"negative exponent {k}")
        return cls((0,) * k + (c,))

    @classmethod
    def from_json(cls, data: Iterable[str | int]) -> IntPolynomial:
        return cls(tuple(int(x) for x in data))

    @classmethod
    def parse(cls, text: str) -> IntPolynomial:
        """
        Inverse of ``str``: accepts ``"1 + 2*q - q^3"`` and the like.

        >>> IntPolynomial.parse("1 - q + q^2") == cyclotomic(6)
        True
        """
        s = text.strip()
        if s == "":
            raise DomainError("empty polynomial text")
        coeffs: dict[int, int] = {}
        pos = 0
        while pos < len(s):
            m = _TERM_RE.match(s, pos)
            if m is None or m.end() == pos or not (m.group(2) or m.group(3)):
                raise DomainError(f"cannot parse polynomial term at {pos}: {text!r}")
            if pos > 0 and not m.group(1):
                raise DomainError(f"missing sign before term at {pos}: {text!r}")
            sign = -1 if m.group(1) == "-" else 1
            c = int(m.group(2)) if m.group(2) else 1
            if m.group(3):
                k = int(m.group(4)) if m.group(4) else 1
            else:
                k = 0
            coeffs[k] = coeffs.get(k, 0) + sign * c
            pos = m.end()
            while pos < len(s) and s[pos].isspace():
                pos += 1
        top = max(coeffs)
        return cls(tuple(coeffs.get(i, 0) for i in range(top + 1)))

    # -- queries --------------------------------------------------------------

    @property
    def degree(self) -> int | float:
        """Degree, or ``NEG_INF`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other: IntPolynomial | int) -> IntPolynomial:
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(tuple(out))

    __radd__ = __add__

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: IntPolynomial | int) -> IntPolynomial:
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> IntPolynomial:
        return IntPolynomial.constant(other) - self

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        if isinstance(other, int):
            return IntPolynomial(tuple(c * other for c in self.coeffs))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        if len(a) < len(b):
            a, b = b, a
        out = [0] * (len(a) + len(b) - 1)
        for j, d in enumerate(b):
            if d == 0:
                continue
            for i, c in enumerate(a):
                out[i + j] += c * d
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> IntPolynomial:
        if n < 0:
            raise DomainError("negative power of a polynomial")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> IntPolynomial:
        """Multiply by ``q**k``."""
        if k < 0:
            raise DomainError(f"negative shift {k}")
        if not self.coeffs or k == 0:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    # -- text -----------------------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "q" if i == 1 else f"q^{i}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"IntPolynomial('{self}')"


ZERO = IntPolynomial(())
ONE = IntPolynomial((1,))
Q = IntPolynomial((0, 1))


def poly_add(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    return a + b


def poly_mul(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    return a * b


def poly_shift(a: IntPolynomial, k: int) -> IntPolynomial:
    return a.shift(k)


def poly_divide_exact(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """
    Return ``a / b``, raising :class:`NotDivisibleError` unless ``b`` divides ``a`` in Z[q].

    >>> poly_divide_exact(q_int(4), q_int(2))
    IntPolynomial('1 + q^2')
    """
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return ZERO
    rem = list(a.coeffs)
    db = len(b.coeffs) - 1
    lead = b.coeffs[-1]
    if len(rem) - 1 < db:
        raise NotDivisibleError(f"{b} does not divide {a}")
    quot = [0] * (len(rem) - db)
    for k in range(len(quot) - 1, -1, -1):
        c = rem[k + db]
        if c == 0:
            continue
        qk, r = divmod(c, lead)
        if r:
            raise NotDivisibleError(f"{b} does not divide {a}")
        quot[k] = qk
        for j, d in enumerate(b.coeffs):
            rem[k + j] -= qk * d
    if any(rem):
        raise NotDivisibleError(f"{b} does not divide {a}")
    return IntPolynomial(tuple(quot))


# -- q-analogues --------------------------------------------------------------


def _check_nonneg(name: str, n: int) -> None:
    if n < 0:
        raise DomainError(f"{name} must be nonnegative, got {n}")


def q_int(n: int) -> IntPolynomial:
    """``[n]_q = 1 + q + ... + q^(n-1)``; ``[0]_q`` is zero."""
    _check_nonneg("n", n)
    return IntPolynomial((1,) * n)


def q_factorial(n: int) -> IntPolynomial:
    _check_nonneg("n", n)
    result = ONE
    for k in range(2, n + 1):
        result = result * q_int(k)
    return result


_binom_cache: dict[tuple[int, int], IntPolynomial] = {}
_binom_lock = threading.Lock()


def _fill_binomials(n: int, i: int) -> IntPolynomial:
    # Only the band of Pascal's triangle that (n, i) depends on is filled.
    cache = _binom_cache
    for m in range(n + 1):
        lo, hi = max(0, i - (n - m)), min(i, m)
        for j in range(lo, hi + 1):
            if (m, j) in cache:
                continue
            if j == 0 or j == m:
                cache[m, j] = ONE
            else:
                cache[m, j] = cache[m - 1, j - 1] + cache[m - 1, j].shift(j)
    return cache[n, i]


def q_binomial(n: int, i: int) -> IntPolynomial:
    """
    Gaussian binomial coefficient, via
    ``binom(n, i) = binom(n-1, i-1) + q^i binom(n-1, i)``.
    """
    _check_nonneg("n", n)
    _check_nonneg("i", i)
    if i > n:
        raise DomainError(f"q_binomial needs 0 <= i <= n, got n={n}, i={i}")
    with _binom_lock:
        hit = _binom_cache.get((n, i))
        if hit is None:
            hit = _fill_binomials(n, i)
    return hit


def q_multinomial(parts: Iterable[int]) -> IntPolynomial:
    """
    ``[a1 + ... + ak]_q! / ([a1]_q! ... [ak]_q!)`` as a telescoping product of
    q-binomials: ``binom(a1+a2, a2) * binom(a1+a2+a3, a3) * ...``.

    >>> q_multinomial([1, 1, 1]) == q_factorial(3)
    True
    """
    result = ONE
    total = 0
    for a in parts:
        _check_nonneg("part", a)
        if a:
            result = result * q_binomial(total + a, a)
            total += a
    return result


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> IntPolynomial:
    """
    The d-th cyclotomic polynomial, by dividing ``q^d - 1`` by the lower ones.

    >>> cyclotomic(6)
    IntPolynomial('1 - q + q^2')
    """
    if d < 1:
        raise DomainError(f"cyclotomic index must be positive, got {d}")
    p = IntPolynomial.monomial(d) - 1
    for e in range(1, d):
        if d % e == 0:
            p = poly_divide_exact(p, cyclotomic(e))
    return p


class CyclotomicFactorization:
    """
    A formal product ``prod Psi_d ** m_d`` held as a map ``d -> m_d``.

    Multiplicities may be negative, in which case the product is only a
    rational function and :meth:`expand` refuses. Entries with zero
    multiplicity are dropped.
    """

    __slots__ = ("_factors",)

    def __init__(self, factors: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = factors.items() if isinstance(factors, Mapping) else factors
        acc: dict[int, int] = {}
        for d, m in items:
            if d < 1:
                raise DomainError(f"cyclotomic index must be positive, got {d}")
            acc[d] = acc.get(d, 0) + m
        self._factors = tuple(sorted((d, m) for d, m in acc.items() if m != 0))

    @property
    def factors(self) -> dict[int, int]:
        return dict(self._factors)

    def multiplicity(self, d: int) -> int:
        return dict(self._factors).get(d, 0)

    def is_polynomial(self) -> bool:
        return all(m > 0 for _, m in self._factors)

    def __mul__(self, other: CyclotomicFactorization) -> CyclotomicFactorization:
        return CyclotomicFactorization(self._factors + other._factors)

    def __truediv__(self, other: CyclotomicFactorization) -> CyclotomicFactorization:
        return CyclotomicFactorization(self._factors + tuple((d, -m) for d, m in other._factors))

    def __eq__(self, other):
        if not isinstance(other, CyclotomicFactorization):
            return NotImplemented
        return self._factors == other._factors

    def __hash__(self):
        return hash(self._factors)

    def expand(self) -> IntPolynomial:
        if not self.is_polynomial():
            raise DomainError("factorization has negative multiplicities; not a polynomial")
        result = ONE
        for d, m in self._factors:
            result = result * cyclotomic(d) ** m
        return result

    def to_json(self) -> dict[str, int]:
        return {str(d): m for d, m in self._factors}

    def __str__(self) -> str:
        if not self._factors:
            return "1"
        return " * ".join(f"Ψ{d}" if m == 1 else f"Ψ{d}^{m}" for d, m in self._factors)

    def __repr__(self) -> str:
        return f"CyclotomicFactorization({self.factors!r})"


def factor_q_binomial(n: int, i: int) -> CyclotomicFactorization:
    """
    Cyclotomic factors of ``binom(n, i)_q``; ``Psi_d`` appears
    ``n//d - i//d - (n-i)//d`` times (0 or 1). Checked by re-expansion.
    """
    target = q_binomial(n, i)
    fac = CyclotomicFactorization({d: n // d - i // d - (n - i) // d for d in range(2, n + 1)})
    if fac.expand() != target:
        raise InvariantViolationError(f"cyclotomic factors of binom({n},{i})_q do not re-expand")
    return fac


def factor_q_factorial(n: int) -> CyclotomicFactorization:
    """``[n]_q! = prod_{d>=2} Psi_d ** (n // d)``."""
    _check_nonneg("n", n)
    return CyclotomicFactorization({d: n // d for d in range(2, n + 1)})


def expand_power_product(exponents: Mapping[int, int], degree: int) -> IntPolynomial:
    """
    Expand ``prod_k (1 - q^k) ** a_k`` when it is known to be a polynomial of
    degree at most ``degree``.

    Negative ``a_k`` are allowed: the product is computed as a power series
    truncated after ``q**degree``, which is exact for a polynomial result.
    Each factor costs one linear pass over the coefficient list.
    """
    if degree < 0:
        raise DomainError("degree must be nonnegative")
    n = degree + 1
    c = [1] + [0] * degree
    # Multiplications first keeps intermediate coefficients small.
    for k, a in sorted(exponents.items(), key=lambda kv: -kv[1]):
        if k < 1:
            raise DomainError(f"factor index must be positive, got {k}")
        if k >= n:
            continue
        for _ in range(a):
            c[k:] = list(map(sub, c[k:], c[: n - k]))
        for _ in range(-a):
            for r in range(k):
                c[r::k] = list(accumulate(c[r::k]))
    return IntPolynomial(tuple(c))
