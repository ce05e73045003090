import math
from itertools import combinations, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qtree.errors import DomainError, ResourceLimitError
from qtree.qcalc import IntPolynomial
from qtree.quantumplane import expand_power, inversions, verify_multinomial_theorem

P = lambda *c: IntPolynomial(c)  # noqa: E731


@given(st.lists(st.integers(0, 3), max_size=9))
def test_inversions_match_pair_count(word):
    word = tuple(word)
    assert inversions(word) == sum(1 for i, j in combinations(range(len(word)), 2) if word[i] > word[j])


def test_square():
    e = expand_power(2, 2)
    assert e.terms == {(2, 0): P(1), (1, 1): P(1, 1), (0, 2): P(1)}


def test_cube():
    e = expand_power(2, 3)
    assert e.terms[(1, 2)] == P(1, 1, 1)
    assert e.terms[(2, 1)] == P(1, 1, 1)


def test_fourth_power():
    e = expand_power(2, 4)
    assert e.terms[(2, 2)] == P(1, 1, 2, 1, 1)
    assert e.terms[(1, 3)] == e.terms[(3, 1)] == P(1, 1, 1, 1)
    assert e.terms[(4, 0)] == e.terms[(0, 4)] == P(1)


@pytest.mark.parametrize("k", [1, 2, 5])
def test_zeroth_power(k):
    assert expand_power(k, 0).terms == {(0,) * k: P(1)}


@pytest.mark.parametrize("k, n", [(1, 4), (2, 6), (3, 4), (4, 3)])
def test_conservation_and_specialisation(k, n):
    e = expand_power(k, n)
    assert sum(c(1) for c in e.terms.values()) == k**n
    for mono, c in e.terms.items():
        assert sum(mono) == n
        assert c(1) == math.factorial(n) // math.prod(math.factorial(a) for a in mono)
        assert c.coeffs == c.coeffs[::-1]


def test_theorem():
    assert all(verify_multinomial_theorem(2, n) for n in range(9))
    assert all(verify_multinomial_theorem(3, n) for n in range(6))
    assert verify_multinomial_theorem(1, 5)
    assert expand_power(1, 5).terms == {(5,): P(1)}


def test_limits():
    with pytest.raises(ResourceLimitError):
        expand_power(10, 8)
    with pytest.raises(DomainError):
        expand_power(0, 3)
    with pytest.raises(DomainError):
        expand_power(2, -1)


def test_rendering():
    e = expand_power(2, 2)
    assert str(e).splitlines() == ["y^2: 1", "x*y: 1 + q", "x^2: 1"]
    js = e.to_json()
    assert js["k"] == 2 and {"exponents": [1, 1], "coefficient": ["1", "1"]} in js["terms"]
    assert expand_power(4, 1).monomial_str((0, 0, 0, 1)) == "x4"


def test_every_word_is_counted_once():
    # an inversion-free word exists for each monomial: the sorted one
    e = expand_power(3, 3)
    assert {m for m in product(range(4), repeat=3) if sum(m) == 3} == set(e.terms)
    assert all(c.coeff(0) == 1 for c in e.terms.values())
