import pytest

from hypothesis import given, settings

from arbor.rank.exceptions import BudgetExceededError
from arbor.rank.presentation import unfold

from tests.fixtures.strategies import presentations


def test_unfold_binary(presentation_factory):
    unfolded = unfold(presentation_factory('binary'), 2)
    assert len(unfolded.tree) == 7
    assert unfolded.tree.is_tree()
    assert unfolded.root == ()
    assert unfolded.state(()) == 'r'
    assert unfolded.state(((0, 1), (0, 0))) == 'q'
    assert unfolded.parent(((0, 1), (0, 0))) == ((0, 1),)
    assert unfolded.parent(()) is None
    assert unfolded.depth(((0, 1), (0, 0))) == 2


def test_unfold_labels(presentation_factory):
    unfolded = unfold(presentation_factory('binary'), 2)
    root = unfolded.label(())
    assert (root.state, root.depth, root.frontier, root.truncated) == ('r', 0, False, False)
    frontier = unfolded.label(((0, 0), (0, 1)))
    assert frontier.frontier
    assert frontier.depth == 2


def test_unfold_omega_width(presentation_factory):
    unfolded = unfold(presentation_factory('star'), 2, width=4)
    assert len(unfolded.tree) == 9
    assert unfolded.label(()).truncated
    assert not unfolded.label(((0, 3),)).truncated
    leaf = unfolded.label(((0, 3), (0, 0)))
    assert not leaf.frontier
    assert not leaf.truncated


def test_unfold_ordered_vertices(presentation_factory):
    unfolded = unfold(presentation_factory('double_ray_pendant'), 1)
    assert unfolded.ordered_vertices() == [(), ((0, 0),), ((1, 0),), ((2, 0),)]


def test_unfold_depth_zero(presentation_factory):
    unfolded = unfold(presentation_factory('ray'), 0)
    assert list(unfolded.labels) == [()]
    assert unfolded.label(()).frontier


def test_unfold_prefix_ids(presentation_factory):
    p = presentation_factory('binary_pruned')
    shallow = unfold(p, 3)
    deep = unfold(p, 5)
    assert set(shallow.labels) <= set(deep.labels)


def test_unfold_budget(presentation_factory):
    with pytest.raises(BudgetExceededError) as cv:
        unfold(presentation_factory('binary'), 3, max_vertices=5)
    assert cv.value.exit_code == 3


@pytest.mark.parametrize(('depth', 'width'), ((-1, 3), (2, 0)))
def test_unfold_bad_arguments(presentation_factory, depth, width):
    with pytest.raises(ValueError):
        unfold(presentation_factory('binary'), depth, width=width)


@settings(max_examples=50, deadline=None)
@given(presentations())
def test_unfold_ids_address_states(p):
    try:
        unfolded = unfold(p, 4, width=2, max_vertices=5000)
    except BudgetExceededError:
        return
    assert unfolded.tree.is_tree()
    for vertex, label in unfolded.labels.items():
        assert p.state_of(vertex) == label.state
        assert label.depth == len(vertex)
