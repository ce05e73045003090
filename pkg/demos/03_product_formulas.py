"""Gluing trees at the root multiplies their values by a q-multinomial."""

import random

from qtree import q_multinomial, q_poly_recursive, wedge
from qtree.plucking import reroot_identity_check
from qtree.qcalc import q_binomial, q_factorial, q_int
from qtree.tree import long_branch_tree, permute_children, random_tree, reroot_to_child, star

rng = random.Random(3)
a, b = random_tree(4, rng), random_tree(3, rng)
w = wedge([a, b])
print(a, "v", b, "=", w)
print(q_poly_recursive(w) == q_binomial(7, 4) * q_poly_recursive(a) * q_poly_recursive(b))

ts = [random_tree(2, rng) for _ in range(3)]
rhs = q_multinomial([2, 2, 2])
for t in ts:
    rhs = rhs * q_poly_recursive(t)
print("three-fold wedge:", q_poly_recursive(wedge(ts)) == rhs)

# stars and two-branch trees
print(q_poly_recursive(star(4)) == q_factorial(4))
print(q_poly_recursive(long_branch_tree([3, 2])) == q_binomial(5, 2))

# the planar embedding does not matter
t = random_tree(9, 1)
print(t, "->", permute_children(t, 42), q_poly_recursive(t) == q_poly_recursive(permute_children(t, 42)))

# moving the root one edge down: Q1 [E2 + 1] = Q2 [E1 + 1]
u = reroot_to_child(t, 0)
e2 = t.children[0].edge_count  # edges below the new root
e1 = t.edge_count - e2 - 1
print(q_poly_recursive(t) * q_int(e2 + 1) == q_poly_recursive(u) * q_int(e1 + 1), reroot_identity_check(t, 0))
