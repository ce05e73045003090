"""
Plane rooted trees, their text format, leaf addressing and surgeries.

A tree is written ``tree := "(" tree* ")"``: each pair of parentheses is a
vertex and the pairs nested directly inside it are its children, left to
right. ``"()"`` is the one-vertex tree and ``"(()())"`` is the two-leaf
cherry. Whitespace between tokens is ignored.

All traversals here are iterative, so very deep trees (long paths) are fine.
"""

from __future__ import annotations

import random
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import TypeVar

from .errors import DomainError, TreeParseError

__all__ = [
    "RootedPlaneTree",
    "LeafPath",
    "parse_tree",
    "serialize_tree",
    "read_trees",
    "edge_count",
    "leaves",
    "r_exponent",
    "remove_leaf",
    "wedge",
    "path",
    "long_branch_tree",
    "star",
    "permute_children",
    "reroot_to_child",
    "canonical_form",
    "subtree_sizes",
    "from_children_lists",
    "all_plane_trees",
    "random_tree",
    "random_caterpillar",
]

LeafPath = tuple[int, ...]
_T = TypeVar("_T")


@dataclass(frozen=True, eq=False)
class RootedPlaneTree:
    """
    An ordered rooted tree: the root together with its child subtrees.

    Equality and hashing go through the canonical text, so two trees are equal
    exactly when they are the same *plane* tree.

    >>> t = RootedPlaneTree((RootedPlaneTree(), RootedPlaneTree()))
    >>> t
    RootedPlaneTree('(()())')
    >>> t.edge_count
    2
    """

    children: tuple[RootedPlaneTree, ...] = field(default=())

    def __post_init__(self):
        if not isinstance(self.children, tuple):
            object.__setattr__(self, "children", tuple(self.children))

    @cached_property
    def text(self) -> str:
        out: list[str] = []
        stack: list[tuple[RootedPlaneTree, int]] = [(self, 0)]
        out.append("(")
        while stack:
            node, i = stack[-1]
            if i < len(node.children):
                stack[-1] = (node, i + 1)
                child = node.children[i]
                cached = child.__dict__.get("text")
                if cached is not None:
                    out.append(cached)
                else:
                    out.append("(")
                    stack.append((child, 0))
            else:
                out.append(")")
                stack.pop()
        return "".join(out)

    @property
    def edge_count(self) -> int:
        return len(self.text) // 2 - 1

    @property
    def vertex_count(self) -> int:
        return len(self.text) // 2

    def is_trivial(self) -> bool:
        return not self.children

    def __eq__(self, other):
        if not isinstance(other, RootedPlaneTree):
            return NotImplemented
        return self is other or self.text == other.text

    def __hash__(self):
        return hash(self.text)

    def __str__(self) -> str:
        return self.text

    def __repr__(self) -> str:
        return f"RootedPlaneTree('{self.text}')"


_LEAF = RootedPlaneTree()


def _fold(t: RootedPlaneTree, leave: Callable[[RootedPlaneTree, list[_T]], _T],
          enter: Callable[[RootedPlaneTree], None] | None = None) -> _T:
    """Bottom-up fold over ``t``; ``enter`` is called in preorder, children in plane order."""
    if enter is not None:
        enter(t)
    stack: list[tuple[RootedPlaneTree, list[_T]]] = [(t, [])]
    while True:
        node, done = stack[-1]
        if len(done) < len(node.children):
            child = node.children[len(done)]
            if enter is not None:
                enter(child)
            stack.append((child, []))
            continue
        value = leave(node, done)
        stack.pop()
        if not stack:
            return value
        stack[-1][1].append(value)


# -- text format ----------------------------------------------------------------


def parse_tree(text: str) -> RootedPlaneTree:
    """
    Parse the parenthesis format.

    >>> parse_tree("( ()  () )")
    RootedPlaneTree('(()())')
    >>> parse_tree("(()")
    Traceback (most recent call last):
    ...
    qtree.errors.TreeParseError: unexpected end of input, 1 unclosed at byte offset 3
    """
    data = text.encode("utf-8")
    stack: list[list[RootedPlaneTree]] = []
    root: RootedPlaneTree | None = None
    for pos, ch in enumerate(data):
        if ch in b" \t\r\n":
            continue
        if root is not None:
            raise TreeParseError("trailing characters after the root closed", pos)
        if ch == 0x28:  # (
            stack.append([])
        elif ch == 0x29:  # )
            if not stack:
                raise TreeParseError("unbalanced ')'", pos)
            kids = stack.pop()
            node = RootedPlaneTree(tuple(kids)) if kids else _LEAF
            if stack:
                stack[-1].append(node)
            else:
                root = node
        else:
            raise TreeParseError(f"unexpected character {chr(ch)!r}" if ch < 128 else "unexpected byte", pos)
    if stack:
        raise TreeParseError(f"unexpected end of input, {len(stack)} unclosed", len(data))
    if root is None:
        raise TreeParseError("empty input", len(data))
    return root


def serialize_tree(t: RootedPlaneTree) -> str:
    return t.text


def read_trees(lines: Iterable[str]) -> list[RootedPlaneTree]:
    """Parse one tree per line, skipping blank lines and ``#`` comments."""
    out = []
    for line in lines:
        s = line.strip()
        if s and not s.startswith("#"):
            out.append(parse_tree(s))
    return out


# -- basic queries ----------------------------------------------------------------


def edge_count(t: RootedPlaneTree) -> int:
    return t.edge_count


def leaves(t: RootedPlaneTree) -> list[LeafPath]:
    """Leaf addresses in left-to-right order. The root never counts as a leaf."""
    out: list[LeafPath] = []
    stack: list[tuple[RootedPlaneTree, LeafPath]] = [(t, ())]
    while stack:
        node, p = stack.pop()
        if not node.children:
            if p:
                out.append(p)
            continue
        for i in range(len(node.children) - 1, -1, -1):
            stack.append((node.children[i], p + (i,)))
    return out


def _walk(t: RootedPlaneTree, v: Sequence[int]) -> list[RootedPlaneTree]:
    """Nodes along the path ``v`` (root first), validating that it ends at a leaf."""
    if not v:
        raise DomainError("the empty path addresses the root, which is not a leaf")
    nodes = [t]
    for depth, i in enumerate(v):
        kids = nodes[-1].children
        if not 0 <= i < len(kids):
            raise DomainError(f"invalid child index {i} at depth {depth} of path {tuple(v)}")
        nodes.append(kids[i])
    if nodes[-1].children:
        raise DomainError(f"path {tuple(v)} does not end at a leaf")
    return nodes


def r_exponent(t: RootedPlaneTree, v: Sequence[int]) -> int:
    """
    Number of edges lying to the right of the root-to-``v`` path.

    At each vertex on the path, every child to the right of the path child
    contributes its whole subtree plus the edge that attaches it.

    >>> r_exponent(parse_tree("(()()())"), (0,))
    2
    """
    nodes = _walk(t, v)
    r = 0
    for node, i in zip(nodes, v):
        for right in node.children[i + 1:]:
            r += right.edge_count + 1
    return r


def remove_leaf(t: RootedPlaneTree, v: Sequence[int]) -> RootedPlaneTree:
    nodes = _walk(t, v)
    parent = nodes[-2]
    i = v[-1]
    new = RootedPlaneTree(parent.children[:i] + parent.children[i + 1:])
    for node, j in zip(reversed(nodes[:-2]), reversed(v[:-1])):
        new = RootedPlaneTree(node.children[:j] + (new,) + node.children[j + 1:])
    return new


# -- constructors -----------------------------------------------------------------


def wedge(ts: Sequence[RootedPlaneTree]) -> RootedPlaneTree:
    """
    Glue trees at their roots, first tree leftmost.

    Written as ``T_k v ... v T_1`` with ``T_1`` rightmost, the argument order is
    ``[T_k, ..., T_1]``.
    """
    if not ts:
        raise DomainError("wedge of an empty sequence")
    kids: list[RootedPlaneTree] = []
    for t in ts:
        kids.extend(t.children)
    return RootedPlaneTree(tuple(kids))


def path(n: int) -> RootedPlaneTree:
    """Unary chain with ``n`` edges, rooted at one end."""
    if n < 0:
        raise DomainError(f"path length must be nonnegative, got {n}")
    t = _LEAF
    for _ in range(n):
        t = RootedPlaneTree((t,))
    return t


def long_branch_tree(lengths: Sequence[int]) -> RootedPlaneTree:
    """
    Root with one unary branch per entry of ``lengths``, listed left to right.

    The tree ``T_{a_k,...,a_1}`` is ``long_branch_tree([a_k, ..., a_1])``.
    Zero-length branches contribute nothing.
    """
    if not lengths:
        raise DomainError("long_branch_tree needs at least one branch")
    return wedge([path(a) for a in lengths])


def star(n: int) -> RootedPlaneTree:
    if n < 0:
        raise DomainError(f"star size must be nonnegative, got {n}")
    return RootedPlaneTree((_LEAF,) * n)


def from_children_lists(children: Sequence[Sequence[int]], root: int = 0) -> RootedPlaneTree:
    """
    Build a tree from adjacency lists ``children[v]`` (plane order) over
    vertices ``0..n-1``. Vertices unreachable from ``root`` are ignored.
    """
    order = [root]
    seen = {root}
    for v in order:
        for c in children[v]:
            if c in seen:
                raise DomainError("children lists do not describe a tree")
            seen.add(c)
            order.append(c)
    built: dict[int, RootedPlaneTree] = {}
    for v in reversed(order):
        kids = children[v]
        built[v] = RootedPlaneTree(tuple(built.pop(c) for c in kids)) if kids else _LEAF
    return built[root]


# -- embeddings and roots -----------------------------------------------------------

_LCG_A = 1664525
_LCG_C = 1013904223
_LCG_M = 2**32


def permute_children(t: RootedPlaneTree, seed: int) -> RootedPlaneTree:
    """
    Reshuffle the children of every vertex, deterministically from ``seed``.

    The generator is the 32-bit LCG ``s <- (1664525*s + 1013904223) mod 2^32``
    started at ``seed mod 2^32``. Vertices are visited in preorder of ``t``;
    at a vertex with ``k >= 2`` children a Fisher-Yates pass runs
    ``for i = k-1 .. 1: advance s; j = s mod (i+1); swap positions i and j``.

    >>> permute_children(parse_tree("((())())"), 0)
    RootedPlaneTree('((())())')
    >>> permute_children(parse_tree("((())())"), 1)
    RootedPlaneTree('(()(()))')
    """
    state = seed % _LCG_M
    perms: list[list[int]] = []

    def enter(node: RootedPlaneTree) -> None:
        nonlocal state
        k = len(node.children)
        order = list(range(k))
        for i in range(k - 1, 0, -1):
            state = (_LCG_A * state + _LCG_C) % _LCG_M
            j = state % (i + 1)
            order[i], order[j] = order[j], order[i]
        perms.append(order)

    # Permutations are drawn in preorder; postorder consumption needs the
    # preorder index of each node, tracked with a counter stack.
    _fold(t, lambda node, kids: None, enter)
    it = iter(perms)
    index_stack: list[list[int]] = []

    def enter2(node: RootedPlaneTree) -> None:
        index_stack.append(next(it))

    def leave(node: RootedPlaneTree, kids: list[RootedPlaneTree]) -> RootedPlaneTree:
        order = index_stack.pop()
        if not kids:
            return _LEAF
        return RootedPlaneTree(tuple(kids[p] for p in order))

    return _fold(t, leave, enter2)


def reroot_to_child(t: RootedPlaneTree, child_index: int) -> RootedPlaneTree:
    """
    Move the root across the edge to child ``child_index``.

    The new root keeps its children in order and gains, appended last, the
    old root carrying its remaining children.

    >>> reroot_to_child(parse_tree("((())())"), 0)
    RootedPlaneTree('(()(()))')
    """
    kids = t.children
    if not 0 <= child_index < len(kids):
        raise DomainError(f"invalid child index {child_index} at the root")
    old_root = RootedPlaneTree(kids[:child_index] + kids[child_index + 1:])
    return RootedPlaneTree(kids[child_index].children + (old_root,))


def canonical_form(t: RootedPlaneTree) -> RootedPlaneTree:
    """Sort children recursively by text; equal results mean isomorphic rooted trees."""

    def leave(node, kids):
        if not kids:
            return _LEAF
        return RootedPlaneTree(tuple(sorted(kids, key=lambda c: c.text)))

    return _fold(t, leave)


def subtree_sizes(t: RootedPlaneTree) -> list[list[int]]:
    """
    For every vertex (postorder), the vertex counts of its child subtrees.

    The vertex count of a child subtree equals the edge count of the wedge
    component it spans (the subtree plus its attaching edge).
    """
    out: list[list[int]] = []

    def leave(node, kids):
        out.append(kids)
        return 1 + sum(kids)

    _fold(t, leave)
    return out


# -- enumeration and sampling -------------------------------------------------------


@lru_cache(maxsize=None)
def _plane_trees(edges: int) -> tuple[RootedPlaneTree, ...]:
    if edges == 0:
        return (_LEAF,)
    out = []
    # First child carries k edges, the rest of the root carries edges-1-k.
    for k in range(edges):
        for first in _plane_trees(k):
            for rest in _plane_trees(edges - 1 - k):
                out.append(RootedPlaneTree((first,) + rest.children))
    return tuple(out)


def all_plane_trees(edges: int) -> tuple[RootedPlaneTree, ...]:
    """All Catalan(edges) plane rooted trees with the given number of edges."""
    if edges < 0:
        raise DomainError("edge count must be nonnegative")
    return _plane_trees(edges)


def _rng(seed: int | random.Random) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_tree(edges: int, seed: int | random.Random) -> RootedPlaneTree:
    """
    Random recursive tree: vertex ``i`` attaches to a uniform earlier vertex,
    at a uniform position among that vertex's children.
    """
    rng = _rng(seed)
    children: list[list[int]] = [[] for _ in range(edges + 1)]
    for v in range(1, edges + 1):
        p = rng.randrange(v)
        children[p].insert(rng.randrange(len(children[p]) + 1), v)
    return from_children_lists(children)


def random_caterpillar(edges: int, seed: int | random.Random, hair_prob: float = 0.02) -> RootedPlaneTree:
    """
    A long spine with sparse leaves hanging off it.

    Each new vertex extends the spine, or with probability ``hair_prob``
    becomes a leaf on a uniformly chosen spine vertex, on a random side.
    Such trees stay close to a path, which keeps ``Q(T)`` of modest size even
    at thousands of edges.
    """
    rng = _rng(seed)
    children: list[list[int]] = [[] for _ in range(edges + 1)]
    spine = [0]
    for v in range(1, edges + 1):
        if rng.random() < hair_prob:
            p = spine[rng.randrange(len(spine))]
            children[p].insert(rng.randrange(len(children[p]) + 1), v)
        else:
            p = spine[-1]
            children[p].append(v)
            spine.append(v)
    return from_children_lists(children)
