import pytest

from treextremal.errors import InvalidTree, ParseError, VertexOutOfRange
from treextremal.trees import (
    Tree,
    diameter,
    is_caterpillar,
    path_between,
    path_tree,
    star_tree,
    tree_from_edge_list,
    tree_to_edge_list,
)


def test_tree_validation_accepts_paths_and_stars():
    assert path_tree(5).degrees() == (2, 2, 2, 1, 1)
    assert star_tree(5).degrees() == (4, 1, 1, 1, 1)
    assert Tree(1, []).n == 1
    assert Tree(2, [(1, 0)]).edges == ((0, 1),)


def test_tree_validation_rejects_bad_inputs():
    with pytest.raises(InvalidTree):
        Tree(3, [(0, 1)])  # too few edges
    with pytest.raises(InvalidTree):
        Tree(3, [(0, 1), (0, 1)])  # duplicate
    with pytest.raises(InvalidTree):
        Tree(3, [(0, 0), (1, 2)])  # self loop
    with pytest.raises(InvalidTree):
        Tree(3, [(0, 3), (1, 2)])  # label out of range
    with pytest.raises(InvalidTree):
        Tree(4, [(0, 1), (2, 3), (0, 1)])  # disconnected once deduped fails count
    with pytest.raises(InvalidTree):
        Tree(0, [])


def test_degree_queries():
    t = star_tree(4)
    assert t.degree(0) == 3
    assert t.leaves() == (1, 2, 3)
    with pytest.raises(VertexOutOfRange):
        t.degree(7)


def test_diameter():
    assert diameter(Tree(1, [])) == 0
    assert diameter(path_tree(2)) == 1
    for n in range(2, 9):
        assert diameter(path_tree(n)) == n - 1
    assert diameter(star_tree(5)) == 2
    # path on 4 plus a pendant at the second vertex
    fork = Tree(5, [(0, 1), (1, 2), (2, 3), (1, 4)])
    assert diameter(fork) == 3


def test_is_caterpillar():
    for n in range(1, 8):
        assert is_caterpillar(path_tree(n))
    assert is_caterpillar(star_tree(6))
    spider = Tree(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
    assert not is_caterpillar(spider)


def test_edge_list_round_trip():
    t = Tree(5, [(0, 1), (1, 2), (2, 3), (1, 4)])
    assert tree_from_edge_list(tree_to_edge_list(t)) == t


def test_edge_list_parse_errors():
    with pytest.raises(ParseError):
        tree_from_edge_list("")
    with pytest.raises(ParseError):
        tree_from_edge_list("x\n0 1\n")
    with pytest.raises(ParseError):
        tree_from_edge_list("3\n0 1 2\n")
    with pytest.raises(ParseError):
        tree_from_edge_list("3\n0 a\n1 2\n")


def test_path_between():
    t = path_tree(6)
    assert path_between(t, 1, 4) == [1, 2, 3, 4]
    assert path_between(t, 4, 1) == [4, 3, 2, 1]
    assert path_between(t, 2, 2) == [2]
