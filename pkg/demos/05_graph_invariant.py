"""A graph invariant: Q of every spanning tree, rooted at a base vertex."""

from qtree import SimpleGraph, graph_invariant
from qtree.graphinv import matrix_tree_count, random_connected_graph, rooted_spanning_tree, spanning_trees

k3 = SimpleGraph(3, [(0, 1), (1, 2), (0, 2)], base=0)
for es in spanning_trees(k3):
    print(sorted(es), "->", rooted_spanning_tree(k3, es))
print(graph_invariant(k3))

c4 = SimpleGraph(4, [(0, 1), (1, 2), (2, 3), (0, 3)], base=0)
print(graph_invariant(c4))

g = random_connected_graph(7, 5)
ms = graph_invariant(g)
print(len(g.edges), "edges,", ms.total, "spanning trees, matrix-tree says", matrix_tree_count(g))
for p, m in ms.items()[:5]:
    print(f"  {m} x {p}")
