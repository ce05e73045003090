"""
Plucking polynomials of rooted trees.

The plucking polynomial ``Q(T)`` of a plane rooted tree sums ``q^r`` over
every order of removing its leaves one at a time, where ``r`` counts the edges
to the right of the removed leaf. This package evaluates it three ways,
checks its product formulas and coefficient properties, expands powers in the
quantum plane as an independent check on q-binomials, and extends ``Q`` to
based graphs through their spanning trees.

>>> from qtree import parse_tree, q_poly_state_product
>>> q_poly_state_product(parse_tree("(()()())"))
IntPolynomial('1 + 2*q + 2*q^2 + q^3')
"""

from .analysis import PropertyReport, analyze, is_palindromic, is_strictly_unimodal, is_unimodal, predicted_c1, predicted_degree
from .errors import DomainError, InvariantViolationError, NotDivisibleError, ResourceLimitError, TreeParseError
from .graphinv import PolynomialMultiset, SimpleGraph, graph_invariant, matrix_tree_count, spanning_trees
from .plucking import (
    q_poly_bruteforce,
    q_poly_factored,
    q_poly_recursive,
    q_poly_state_product,
    q_prime_factored,
    reroot_identity_check,
    wedge_product_value,
)
from .qcalc import (
    CyclotomicFactorization,
    IntPolynomial,
    cyclotomic,
    factor_q_binomial,
    q_binomial,
    q_factorial,
    q_int,
    q_multinomial,
)
from .quantumplane import expand_power, verify_multinomial_theorem
from .tree import (
    RootedPlaneTree,
    canonical_form,
    leaves,
    long_branch_tree,
    parse_tree,
    permute_children,
    r_exponent,
    remove_leaf,
    reroot_to_child,
    star,
    wedge,
)

__version__ = "0.1.0"
