"""Coefficients of Q(T) are positive, palindromic and unimodal."""

from qtree import analyze, parse_tree, q_poly_factored, q_poly_state_product
from qtree.analysis import is_strictly_unimodal
from qtree.tree import all_plane_trees, canonical_form, random_caterpillar

t = parse_tree("((()())(()()))")
q = q_poly_state_product(t)
print(q)
rep = analyze(t)
print("degree", rep.degree, "predicted", rep.predicted_degree)
print("c1", rep.c1, "predicted", rep.predicted_c1)
print("palindromic", rep.palindromic, "unimodal", rep.unimodal, "strict", rep.strictly_unimodal)
print("factored:", q_poly_factored(t))

# which small shapes have strictly unimodal Q?
shapes = {canonical_form(s) for e in range(6) for s in all_plane_trees(e)}
hits = sorted((s.text for s in shapes if is_strictly_unimodal(q_poly_state_product(s))), key=len)
print(len(hits), "of", len(shapes), "shapes:", hits[:8], "...")

# big trees are cheap with the state product
big = random_caterpillar(1000, 9)
Q = q_poly_state_product(big)
print("1000 edges: degree", Q.degree, "middle coefficient has", len(str(Q.coeff(Q.degree // 2))), "digits")
