import pytest
from hypothesis import given
from hypothesis import strategies as st

from qtree.errors import DomainError, TreeParseError
from qtree.plucking import _pluck_moves
from qtree.tree import (
    RootedPlaneTree,
    all_plane_trees,
    canonical_form,
    from_children_lists,
    leaves,
    long_branch_tree,
    parse_tree,
    path,
    permute_children,
    r_exponent,
    random_caterpillar,
    random_tree,
    read_trees,
    remove_leaf,
    reroot_to_child,
    serialize_tree,
    star,
    wedge,
)

trees = st.recursive(
    st.just(RootedPlaneTree()),
    lambda kids: st.lists(kids, min_size=1, max_size=4).map(lambda c: RootedPlaneTree(tuple(c))),
    max_leaves=12,
)
nontrivial = trees.filter(lambda t: t.edge_count > 0)

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429]
ROOTED_TREES = [1, 1, 2, 4, 9, 20, 48, 115]  # unlabeled rooted trees by edge count


class TestTextFormat:
    def test_parse_examples(self):
        assert parse_tree("()") == RootedPlaneTree()
        assert parse_tree("(()())") == RootedPlaneTree((RootedPlaneTree(), RootedPlaneTree()))
        assert parse_tree("((()))") == path(2)

    def test_whitespace_ignored(self):
        assert parse_tree(" ( ( )\n( ) ) ") == star(2)

    @pytest.mark.parametrize(
        "text, offset",
        [("", 0), ("(", 1), (")", 0), ("())", 2), ("(()", 3), ("(a)", 1), ("()()", 2), ("(()) x", 5)],
    )
    def test_parse_errors_report_offset(self, text, offset):
        with pytest.raises(TreeParseError) as info:
            parse_tree(text)
        assert info.value.offset == offset

    def test_offset_is_in_bytes(self):
        with pytest.raises(TreeParseError) as info:
            parse_tree("(é)")
        assert info.value.offset == 1

    def test_serialize_examples(self):
        assert serialize_tree(RootedPlaneTree()) == "()"
        assert serialize_tree(star(3)) == "(()()())"
        # root -> a -> b and root -> c, written out by hand
        assert serialize_tree(long_branch_tree([2, 1])) == "((())())"

    @given(trees)
    def test_round_trip(self, t):
        assert parse_tree(serialize_tree(t)) == t
        assert serialize_tree(parse_tree(t.text)) == t.text

    def test_read_trees_skips_comments(self):
        got = read_trees(["# header", "", "(()())", "  ()  ", "# (())"])
        assert [t.text for t in got] == ["(()())", "()"]

    def test_deep_trees_do_not_recurse(self):
        t = path(5000)
        assert t.edge_count == 5000
        assert parse_tree(t.text) == t
        assert canonical_form(t) == t


class TestQueries:
    def test_edge_count(self):
        assert RootedPlaneTree().edge_count == 0
        assert star(4).edge_count == 4

    @given(trees)
    def test_edge_count_recursion(self, t):
        assert t.edge_count == sum(1 + c.edge_count for c in t.children)

    def test_leaves_examples(self):
        assert leaves(parse_tree("()")) == []
        assert leaves(parse_tree("(()())")) == [(0,), (1,)]
        assert leaves(parse_tree("((())())")) == [(0, 0), (1,)]

    @given(nontrivial)
    def test_leaves_nonempty(self, t):
        assert leaves(t)

    def test_r_exponent_examples(self):
        assert r_exponent(parse_tree("(()()())"), (0,)) == 2
        assert r_exponent(parse_tree("(()()())"), (2,)) == 0
        for b in range(1, 5):
            for a in range(1, 5):
                t = long_branch_tree([b, a])
                assert r_exponent(t, leaves(t)[0]) == a
                assert r_exponent(t, leaves(t)[-1]) == 0

    @given(nontrivial)
    def test_rightmost_leaf_has_zero_exponent(self, t):
        assert r_exponent(t, leaves(t)[-1]) == 0

    def test_r_exponent_invalid_paths(self):
        t = parse_tree("((())())")
        for bad in [(), (2,), (0,), (0, 1), (1, 0)]:
            with pytest.raises(DomainError):
                r_exponent(t, bad)

    @pytest.mark.parametrize("edges", range(7))
    def test_text_position_rule_agrees_with_path_rule(self, edges):
        # the recursive evaluator reads r off the serialization; the path
        # decomposition must give the same numbers leaf by leaf
        for t in all_plane_trees(edges):
            moves = _pluck_moves(t.text) if edges else []
            by_path = [(r_exponent(t, v), remove_leaf(t, v).text) for v in leaves(t)]
            assert moves == by_path


class TestSurgery:
    def test_remove_leaf_examples(self):
        assert remove_leaf(parse_tree("(()())"), (0,)) == parse_tree("(())")
        assert remove_leaf(parse_tree("(()())"), (1,)) == parse_tree("(())")
        assert remove_leaf(parse_tree("((()))"), (0, 0)) == parse_tree("(())")
        assert remove_leaf(parse_tree("((())())"), (1,)) == parse_tree("((()))")

    @given(nontrivial, st.data())
    def test_remove_leaf_drops_one_edge(self, t, data):
        v = data.draw(st.sampled_from(leaves(t)))
        assert remove_leaf(t, v).edge_count == t.edge_count - 1

    def test_remove_leaf_rejects_internal_vertex(self):
        with pytest.raises(DomainError):
            remove_leaf(parse_tree("((()))"), (0,))

    def test_wedge(self):
        t = parse_tree("((())())")
        assert wedge([t]) == t
        assert wedge([parse_tree("(())"), parse_tree("(())")]) == parse_tree("(()())")
        assert wedge([path(2), path(1)]) == parse_tree("((())())")
        with pytest.raises(DomainError):
            wedge([])

    @given(trees, trees)
    def test_wedge_adds_edges(self, a, b):
        assert wedge([a, b]).edge_count == a.edge_count + b.edge_count

    def test_constructors(self):
        assert star(0) == parse_tree("()")
        assert star(2) == parse_tree("(()())")
        assert star(4) == parse_tree("(()()()())")
        assert long_branch_tree([1, 1]) == parse_tree("(()())")
        assert long_branch_tree([3]) == path(3)
        with pytest.raises(DomainError):
            long_branch_tree([])

    def test_from_children_lists(self):
        assert from_children_lists([[1, 3], [2], [], []]) == parse_tree("((())())")
        with pytest.raises(DomainError):
            from_children_lists([[1], [0]])


class TestEmbeddings:
    def test_permute_examples(self):
        t = parse_tree("((())())")
        # seed 0: s = 1013904223 (odd), j = 1 -> no swap
        assert permute_children(t, 0) == t
        # seed 1: s = 1664525 + 1013904223 = 1015568748 (even), j = 0 -> swap
        assert permute_children(t, 1) == parse_tree("(()(()))")

    @given(trees, st.integers(0, 2**40))
    def test_permute_preserves_abstract_tree(self, t, seed):
        p = permute_children(t, seed)
        assert p.edge_count == t.edge_count
        assert canonical_form(p) == canonical_form(t)

    def test_permute_is_deterministic(self):
        t = random_tree(20, 3)
        assert permute_children(t, 99) == permute_children(t, 99)

    def test_reroot_examples(self):
        assert reroot_to_child(parse_tree("(())"), 0) == parse_tree("(())")
        r = reroot_to_child(parse_tree("((())())"), 0)
        assert r == parse_tree("(()(()))") and r.edge_count == 3
        with pytest.raises(DomainError):
            reroot_to_child(parse_tree("(())"), 1)

    @given(nontrivial, st.data())
    def test_double_reroot_is_identity(self, t, data):
        i = data.draw(st.integers(0, len(t.children) - 1))
        r = reroot_to_child(t, i)
        assert r.edge_count == t.edge_count
        back = reroot_to_child(r, len(r.children) - 1)
        assert canonical_form(back) == canonical_form(t)

    def test_canonical_form(self):
        assert canonical_form(parse_tree("(()(()))")) == canonical_form(parse_tree("((())())"))
        assert canonical_form(parse_tree("((()))")) != canonical_form(parse_tree("(()())"))

    @given(trees)
    def test_canonical_form_idempotent(self, t):
        assert canonical_form(canonical_form(t)) == canonical_form(t)


class TestEnumeration:
    @pytest.mark.parametrize("edges", range(8))
    def test_catalan_counts(self, edges):
        ts = all_plane_trees(edges)
        assert len(ts) == CATALAN[edges]
        assert len(set(ts)) == len(ts)
        assert all(t.edge_count == edges for t in ts)
        assert len({canonical_form(t) for t in ts}) == ROOTED_TREES[edges]

    def test_random_generators(self):
        for seed in range(20):
            assert random_tree(25, seed).edge_count == 25
            assert random_caterpillar(300, seed).edge_count == 300
        assert random_tree(10, 5) == random_tree(10, 5)
