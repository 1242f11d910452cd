import pytest

from arbor.rank.exceptions import UndefinedStateError
from arbor.rank.finite_tree import ahu_canonical, RootedFiniteTree
from arbor.rank.presentation import (
    class_name,
    ClassGraph,
    contains_ray_state,
    degree_count,
    degree_profile,
    occurrence_count,
    OccurrenceClass,
    OMEGA,
    shape_code,
    shape_height,
    unfold,
)


def test_class_graph_binary(presentation_factory):
    graph = ClassGraph(presentation_factory('binary'))
    assert graph.root == OccurrenceClass('r', False)
    assert graph.classes == (OccurrenceClass('r', False), OccurrenceClass('q', True))
    assert graph.core_classes() == graph.classes
    assert graph.ray_directions(OccurrenceClass('q', True)) == 3


def test_class_graph_comb(presentation_factory):
    graph = ClassGraph(presentation_factory('comb'))
    assert graph.child_class(graph.root, 0) == OccurrenceClass('c', False)
    assert graph.child_class(graph.root, 1) == OccurrenceClass('t', True)
    assert graph.core_classes() == ()


def test_classify(presentation_factory):
    graph = ClassGraph(presentation_factory('double_ray_pendant'))
    assert graph.classify(()) == OccurrenceClass('m', False)
    assert graph.classify(((0, 0), (0, 0))) == OccurrenceClass('a', True)
    assert graph.classify(((2, 0),)) == OccurrenceClass('t', True)
    with pytest.raises(ValueError):
        graph.classify(((2, 0), (0, 0)))


def test_representatives(presentation_factory):
    graph = ClassGraph(presentation_factory('double_ray_pendant'))
    assert graph.representatives() == {
        OccurrenceClass('m', False): (),
        OccurrenceClass('a', True): ((0, 0),),
        OccurrenceClass('b', True): ((1, 0),),
        OccurrenceClass('t', True): ((2, 0),),
    }


def test_class_name():
    assert class_name(OccurrenceClass('q', True)) == 'q.up'
    assert class_name(OccurrenceClass('r', False)) == 'r'


def test_contains_ray_state(presentation_factory):
    p = presentation_factory('comb')
    assert contains_ray_state(p, 'c')
    assert not contains_ray_state(p, 't')
    with pytest.raises(UndefinedStateError):
        contains_ray_state(p, 'x')


def test_occurrence_count(presentation_factory):
    p = presentation_factory('binary_pruned')
    assert occurrence_count(p, OccurrenceClass('r', False)) == 1
    assert occurrence_count(p, OccurrenceClass('p', True)) == 1
    assert occurrence_count(p, OccurrenceClass('q', True)) is OMEGA
    assert occurrence_count(p, OccurrenceClass('q', False)) == 0


def test_occurrence_count_finite_tree(path_factory):
    p = path_factory(3)
    graph = ClassGraph(p)
    assert [graph.occurrence_count(cls) for cls in graph.classes] == [1, 1, 1]


@pytest.mark.parametrize(
    ('name', 'degree', 'count'),
    (
        ('binary', 2, 1),
        ('binary', 3, OMEGA),
        ('binary_pruned', 2, 2),
        ('binary_pruned', 3, OMEGA),
        ('double_ray', 2, OMEGA),
        ('double_ray_pendant', 3, 1),
        ('double_ray_pendant', 1, 1),
        ('star', 1, OMEGA),
        ('star', 2, OMEGA),
        ('star', OMEGA, 1),
    ),
)
def test_degree_count(presentation_factory, name, degree, count):
    assert degree_count(presentation_factory(name), degree) == count


def test_degree_profile_path(path_factory):
    assert degree_profile(path_factory(4)) == {1: 2, 2: 2}


def test_shape_code_matches_ahu(presentation_factory):
    p = presentation_factory('star').capped(3)
    unfolded = unfold(p, 3)
    assert shape_code(p) == ahu_canonical(RootedFiniteTree(unfolded.tree, ()))


def test_shape_code_omega(presentation_factory):
    assert shape_code(presentation_factory('star')) == '((())*)'
    assert shape_code(presentation_factory('wide_star')) == '((()*)*)'


def test_shape_code_rejects_rays(presentation_factory):
    with pytest.raises(ValueError):
        shape_code(presentation_factory('comb'))


def test_shape_height(presentation_factory, path_factory):
    assert shape_height(presentation_factory('star')) == 2
    assert shape_height(presentation_factory('star'), 'l') == 0
    assert shape_height(path_factory(6)) == 5
