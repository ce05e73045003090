"""
The based-graph invariant: the multiset of plucking polynomials of all
spanning trees of a graph, each rooted at the base vertex.
"""

from __future__ import annotations

import random
from collections import Counter, deque
from collections.abc import Iterable
from dataclasses import dataclass, field
from pathlib import Path

from .errors import DomainError, ResourceLimitError
from .plucking import q_poly_state_product
from .qcalc import IntPolynomial
from .tree import RootedPlaneTree, from_children_lists

__all__ = [
    "SPANNING_TREE_CAP",
    "MAX_VERTICES",
    "SimpleGraph",
    "PolynomialMultiset",
    "spanning_trees",
    "matrix_tree_count",
    "rooted_spanning_tree",
    "graph_invariant",
    "parse_graph",
    "read_graph",
    "random_connected_graph",
]

SPANNING_TREE_CAP = 10**5
MAX_VERTICES = 16

Edge = tuple[int, int]


@dataclass(frozen=True)
class SimpleGraph:
    """
    Undirected simple connected graph on ``0..vertex_count-1`` with a base vertex.

    >>> SimpleGraph(3, [(0, 1), (1, 2), (0, 2)], base=0).edges == {(0, 1), (0, 2), (1, 2)}
    True
    """

    vertex_count: int
    edges: frozenset[Edge] = field(default_factory=frozenset)
    base: int = 0

    def __post_init__(self):
        n = self.vertex_count
        if n < 1:
            raise DomainError("a graph needs at least one vertex")
        raw = list(self.edges)
        norm = []
        for u, v in raw:
            if u == v:
                raise DomainError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge ({u}, {v}) out of range for {n} vertices")
            norm.append((min(u, v), max(u, v)))
        edges = frozenset(norm)
        if len(edges) != len(norm):
            raise DomainError("parallel edges are not allowed")
        if not 0 <= self.base < n:
            raise DomainError(f"base {self.base} out of range")
        object.__setattr__(self, "edges", edges)
        if not self._connected():
            raise DomainError("graph is disconnected")

    def neighbors(self, v: int) -> list[int]:
        return sorted([b for a, b in self.edges if a == v] + [a for a, b in self.edges if b == v])

    def _connected(self) -> bool:
        seen = {0}
        todo = [0]
        adj: dict[int, list[int]] = {v: [] for v in range(self.vertex_count)}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        while todo:
            for w in adj[todo.pop()]:
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        return len(seen) == self.vertex_count


@dataclass(frozen=True)
class PolynomialMultiset:
    """Polynomials with multiplicities, printed smallest degree first."""

    entries: Counter = field(default_factory=Counter)

    @property
    def total(self) -> int:
        return sum(self.entries.values())

    def items(self) -> list[tuple[IntPolynomial, int]]:
        return sorted(self.entries.items(), key=lambda kv: (len(kv[0].coeffs), kv[0].coeffs))

    def __eq__(self, other):
        if isinstance(other, PolynomialMultiset):
            return dict(self.entries) == dict(other.entries)
        if isinstance(other, dict):
            return dict(self.entries) == other
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.entries.items()))

    def __str__(self) -> str:
        return "{" + ", ".join(f"{p}: {m}" for p, m in self.items()) + "}"

    def to_json(self) -> list[dict]:
        return [{"polynomial": p.to_json(), "multiplicity": m} for p, m in self.items()]


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _connected_with(parent: list[int], edges: Iterable[Edge], components: int) -> bool:
    p = parent[:]
    for u, v in edges:
        ru, rv = _find(p, u), _find(p, v)
        if ru != rv:
            p[ru] = rv
            components -= 1
            if components == 1:
                return True
    return components == 1


def spanning_trees(g: SimpleGraph, cap: int = SPANNING_TREE_CAP) -> list[frozenset[Edge]]:
    """
    Every spanning tree of ``g`` once, as an edge set, in a deterministic order.

    Edges are taken in sorted order and each is contracted (kept) or deleted.
    An edge whose two ends are already merged is deleted outright; a bridge of
    the remaining graph is always contracted. So every branch ends in a tree.
    """
    if g.vertex_count > MAX_VERTICES:
        raise ResourceLimitError(f"{g.vertex_count} vertices exceeds the limit of {MAX_VERTICES}")
    edges = sorted(g.edges)
    out: list[frozenset[Edge]] = []

    def grow(i: int, chosen: list[Edge], parent: list[int], components: int) -> None:
        while components > 1:
            u, v = edges[i]
            ru, rv = _find(parent, u), _find(parent, v)
            if ru == rv:
                i += 1
                continue
            if _connected_with(parent, edges[i + 1:], components):
                # Both branches are viable: first the trees without this edge.
                grow(i + 1, chosen, parent[:], components)
            parent = parent[:]
            parent[ru] = rv
            chosen = chosen + [edges[i]]
            components -= 1
            i += 1
        if len(out) >= cap:
            raise ResourceLimitError(f"more than {cap} spanning trees")
        out.append(frozenset(chosen))

    grow(0, [], list(range(g.vertex_count)), g.vertex_count)
    return out


def matrix_tree_count(g: SimpleGraph) -> int:
    """Spanning-tree count as the determinant of the reduced Laplacian."""
    import sympy

    n = g.vertex_count
    if n == 1:
        return 1
    lap = sympy.zeros(n, n)
    for u, v in g.edges:
        lap[u, v] -= 1
        lap[v, u] -= 1
        lap[u, u] += 1
        lap[v, v] += 1
    keep = [i for i in range(n) if i != g.base]
    return int(lap.extract(keep, keep).det(method="bareiss"))


def rooted_spanning_tree(g: SimpleGraph, tree_edges: Iterable[Edge]) -> RootedPlaneTree:
    """Root a spanning tree at the base; children found breadth-first in ascending vertex order."""
    adj: dict[int, list[int]] = {v: [] for v in range(g.vertex_count)}
    for u, v in tree_edges:
        adj[u].append(v)
        adj[v].append(u)
    children: list[list[int]] = [[] for _ in range(g.vertex_count)]
    seen = {g.base}
    queue = deque([g.base])
    while queue:
        u = queue.popleft()
        for w in sorted(adj[u]):
            if w not in seen:
                seen.add(w)
                children[u].append(w)
                queue.append(w)
    if len(seen) != g.vertex_count:
        raise DomainError("edge set does not span the graph")
    return from_children_lists(children, root=g.base)


def graph_invariant(g: SimpleGraph, cap: int = SPANNING_TREE_CAP, threads: int = 1) -> PolynomialMultiset:
    """One plucking polynomial per spanning tree, rooted at the base."""
    trees = [rooted_spanning_tree(g, es) for es in spanning_trees(g, cap)]
    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(threads) as pool:
            polys = list(pool.map(q_poly_state_product, trees))
    else:
        polys = [q_poly_state_product(t) for t in trees]
    return PolynomialMultiset(Counter(polys))


def parse_graph(text: str) -> SimpleGraph:
    """
    Parse ``V E B`` followed by ``E`` lines ``u v`` (0-based). ``#`` lines are comments.

    >>> parse_graph("3 3 0\\n0 1\\n1 2\\n0 2").vertex_count
    3
    """
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        s = line.split("#", 1)[0].strip()
        if s:
            try:
                rows.append((lineno, [int(x) for x in s.split()]))
            except ValueError:
                raise DomainError(f"line {lineno}: expected integers, got {line.strip()!r}") from None
    if not rows:
        raise DomainError("empty graph file")
    lineno, header = rows[0]
    if len(header) != 3:
        raise DomainError(f"line {lineno}: header must be 'V E B'")
    n, m, base = header
    if len(rows) - 1 != m:
        raise DomainError(f"header announces {m} edges, found {len(rows) - 1}")
    edges = []
    for lineno, row in rows[1:]:
        if len(row) != 2:
            raise DomainError(f"line {lineno}: edge must be 'u v'")
        edges.append((row[0], row[1]))
    return SimpleGraph(n, edges, base)


def read_graph(path: str | Path) -> SimpleGraph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def random_connected_graph(vertices: int, seed: int | random.Random, extra_edge_prob: float = 0.3,
                           base: int | None = None) -> SimpleGraph:
    """A random spanning tree plus each remaining pair independently with ``extra_edge_prob``."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    order = list(range(vertices))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, vertices)}
    for u in range(vertices):
        for v in range(u + 1, vertices):
            if (u, v) not in edges and rng.random() < extra_edge_prob:
                edges.add((u, v))
    if base is None:
        base = rng.randrange(vertices)
    return SimpleGraph(vertices, sorted(edges), base)
