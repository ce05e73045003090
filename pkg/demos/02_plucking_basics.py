"""Pluck leaves one at a time and keep track of what lies to the right."""

from qtree import parse_tree, q_poly_bruteforce, q_poly_recursive, q_poly_state_product
from qtree.tree import leaves, r_exponent, remove_leaf

t = parse_tree("(()(()()))")
print(t, "edges:", t.edge_count)

# each leaf contributes q^r times the value of the smaller tree
for leaf in leaves(t):
    print("leaf", leaf, "r =", r_exponent(t, leaf), "leaves behind", remove_leaf(t, leaf))

# brute force walks every plucking order, the recursion memoizes subtrees,
# the state product multiplies one q-multinomial per vertex
for f in (q_poly_bruteforce, q_poly_recursive, q_poly_state_product):
    print(f.__name__, f(t))

# the 21-coefficient example
big = parse_tree("((()())((()())()))")
print(q_poly_state_product(big).coeffs)
