import random
from functools import reduce
from operator import mul

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qtree.errors import DomainError, ResourceLimitError
from qtree.plucking import (
    evaluate,
    multi_wedge_value,
    q_poly_bruteforce,
    q_poly_factored,
    q_poly_recursive,
    q_poly_state_product,
    q_prime_factored,
    reroot_identity_check,
    vertex_weights,
    wedge_product_value,
)
from qtree.qcalc import CyclotomicFactorization, IntPolynomial, q_binomial, q_factorial, q_int, q_multinomial
from qtree.tree import (
    RootedPlaneTree,
    all_plane_trees,
    long_branch_tree,
    parse_tree,
    path,
    permute_children,
    random_tree,
    star,
    wedge,
)

EVALS = [q_poly_bruteforce, q_poly_recursive, q_poly_state_product]

# Leaves of weight [2], a vertex of weight [4] and a root of weight binom(8; 3, 5):
# Q must be [2]^2 [4] binom(8,3), the 21-coefficient example.
GOLDEN_TREE = "((()())((()())()))"
GOLDEN = (1, 4, 9, 17, 28, 41, 56, 71, 83, 91, 94, 91, 83, 71, 56, 41, 28, 17, 9, 4, 1)


@pytest.mark.parametrize("ev", EVALS, ids=lambda f: f.__name__)
class TestEvaluators:
    def test_one_vertex(self, ev):
        assert ev(RootedPlaneTree()) == IntPolynomial((1,))

    def test_cherry(self, ev):
        assert ev(star(2)) == IntPolynomial((1, 1))

    def test_two_branches(self, ev):
        assert ev(long_branch_tree([2, 2])) == IntPolynomial((1, 1, 2, 1, 1))

    def test_golden_tree(self, ev):
        assert ev(parse_tree(GOLDEN_TREE)).coeffs == GOLDEN


def test_bruteforce_cap():
    with pytest.raises(ResourceLimitError):
        q_poly_bruteforce(star(9))
    assert q_poly_bruteforce(long_branch_tree([8, 1]), cap=9) == q_binomial(9, 1)


def test_closed_forms():
    for n in range(7):
        assert q_poly_recursive(star(n)) == q_factorial(n)
    for a in range(1, 7):
        for b in range(1, 7):
            assert q_poly_recursive(long_branch_tree([b, a])) == q_binomial(a + b, a)
    assert q_poly_recursive(long_branch_tree([3, 1, 2])) == q_multinomial([2, 1, 3])


@pytest.mark.parametrize("edges", range(7))
def test_triple_agreement(edges):
    for t in all_plane_trees(edges):
        b = q_poly_bruteforce(t)
        assert q_poly_recursive(t) == b
        assert q_poly_state_product(t) == b


def test_state_product_is_product_of_vertex_weights():
    rng = random.Random(11)
    for _ in range(50):
        t = random_tree(rng.randrange(0, 18), rng)
        naive = reduce(mul, vertex_weights(t), IntPolynomial((1,)))
        assert q_poly_state_product(t) == naive


def test_vertex_weights_of_cherry():
    # root weight binom(2; 1, 1); the two leaves weigh 1
    assert vertex_weights(star(2)) == [IntPolynomial((1,))] * 2 + [IntPolynomial((1, 1))]


def test_state_product_on_deep_and_wide_trees():
    assert q_poly_state_product(path(3000)) == IntPolynomial((1,))
    assert q_poly_state_product(star(30)) == q_factorial(30)


class TestWedge:
    def test_examples(self):
        t = parse_tree("((())(()()))")
        assert wedge_product_value(t, RootedPlaneTree()) == q_poly_recursive(t)
        edge = path(1)
        assert wedge_product_value(edge, edge) == IntPolynomial((1, 1))

    def test_random_five_edge_pairs(self):
        rng = random.Random(5)
        for _ in range(30):
            t1, t2 = random_tree(5, rng), random_tree(5, rng)
            assert wedge_product_value(t1, t2) == q_poly_recursive(wedge([t1, t2]))

    def test_multi_wedge(self):
        rng = random.Random(6)
        for _ in range(30):
            ts = [random_tree(rng.randrange(0, 5), rng) for _ in range(3)]
            assert multi_wedge_value(ts) == q_poly_recursive(wedge(ts))


class TestChangeOfRoot:
    def test_single_edge(self):
        assert reroot_identity_check(path(1), 0)

    def test_path_end_to_middle(self):
        # Q at the end of a 2-path is 1, at the middle 1+q; E1 = 0, E2 = 1
        t = path(2)
        assert q_poly_recursive(t) * q_int(2) == q_poly_recursive(star(2)) * q_int(1)
        assert reroot_identity_check(t, 0)

    def test_invalid_index(self):
        with pytest.raises(DomainError):
            reroot_identity_check(path(2), 1)

    @pytest.mark.parametrize("edges", range(1, 7))
    def test_exhaustive(self, edges):
        for t in all_plane_trees(edges):
            for i in range(len(t.children)):
                assert reroot_identity_check(t, i)

    def test_detects_a_wrong_evaluator(self):
        assert not reroot_identity_check(star(3), 0, evaluator=lambda t: q_int(t.edge_count + 1))


def test_embedding_independence():
    rng = random.Random(8)
    for _ in range(40):
        t = random_tree(rng.randrange(1, 11), rng)
        assert q_poly_recursive(permute_children(t, rng.randrange(2**32))) == q_poly_recursive(t)


class TestFactored:
    def test_star_three(self):
        # root weight binom(2,1) binom(3,1) = [2][3] = Psi2 * Psi3
        fac = q_poly_factored(star(3))
        assert fac == CyclotomicFactorization({2: 1, 3: 1})
        assert fac.expand() == IntPolynomial((1, 2, 2, 1))

    def test_single_edge_is_empty(self):
        assert q_poly_factored(path(1)) == CyclotomicFactorization()

    def test_six_edge_trees(self):
        for t in all_plane_trees(6):
            assert q_poly_factored(t).expand() == q_poly_recursive(t)

    def test_q_prime_is_multiplicative(self):
        rng = random.Random(2)
        for _ in range(20):
            a, b = random_tree(rng.randrange(0, 8), rng), random_tree(rng.randrange(0, 8), rng)
            assert q_prime_factored(wedge([a, b])) == q_prime_factored(a) * q_prime_factored(b)

    def test_q_prime_is_not_always_polynomial(self):
        assert not q_prime_factored(path(2)).is_polynomial()


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32), st.integers(0, 9))
def test_evaluators_agree_on_random_trees(seed, edges):
    t = random_tree(edges, seed)
    assert q_poly_recursive(t) == q_poly_state_product(t)


def test_evaluate_dispatch():
    t = star(3)
    assert evaluate(t) == evaluate(t, "brute") == evaluate(t, "recursive") == q_factorial(3)
    with pytest.raises(DomainError):
        evaluate(t, "magic")
