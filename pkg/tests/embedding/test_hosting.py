import pytest

from arbor.rank.embedding import (
    DownwardMorphism,
    HostingRelation,
    locate,
    rooted_equimorphic,
    Segment,
)
from arbor.rank.presentation import OMEGA, parse_dsl, unfold


def test_hosting_ray_into_binary(presentation_factory):
    relation = HostingRelation(presentation_factory('ray'), presentation_factory('binary'))
    assert relation.holds()
    assert relation.holds('a', 'q')


def test_hosting_binary_into_ray(presentation_factory):
    relation = HostingRelation(presentation_factory('binary'), presentation_factory('ray'))
    assert not relation.holds()
    assert not relation.pairs


def test_hosting_binary_pruned(presentation_factory):
    binary = presentation_factory('binary')
    pruned = presentation_factory('binary_pruned')
    assert HostingRelation(pruned, binary).holds()
    relation = HostingRelation(binary, pruned)
    assert not relation.holds()
    assert relation.holds('r', 'q')
    assert not rooted_equimorphic(binary, pruned)


def test_hosting_omega_needs_omega(presentation_factory):
    star = presentation_factory('star')
    finite = parse_dsl('state r { m:9 } state m { l:1 } state l { } root r')
    assert HostingRelation(finite, star).holds()
    assert not HostingRelation(star, finite).holds()


def test_rooted_equimorphic_extra_leaves():
    shape = parse_dsl('state r { s:w } state s { l:1 } state l { } root r')
    extended = parse_dsl(
        'state r { s:w, leaf:2 } state s { l:1 } state l { } state leaf { } root r',
    )
    assert rooted_equimorphic(shape, extended)


def test_assignment_segments():
    source = parse_dsl(
        'state r { s:w, leaf:2 } state s { l:1 } state l { } state leaf { } root r',
    )
    target = parse_dsl('state r { s:w } state s { l:1 } state l { } root r')
    relation = HostingRelation(source, target)
    assignment = relation.assignment('r', 'r')
    assert assignment == [[Segment(OMEGA, 0, 0, 2)], [Segment(2, 0, 1, 2)]]
    with pytest.raises(ValueError):
        relation.assignment('r', 'l')


def test_locate():
    segments = [Segment(2, 0, 0, 1), Segment(OMEGA, 1, 3, 2)]
    assert locate(segments, 1) == (0, 1)
    assert locate(segments, 2) == (1, 3)
    assert locate(segments, 4) == (1, 7)
    with pytest.raises(ValueError):
        locate([Segment(1, 0, 0, 1)], 1)


def test_downward_morphism(presentation_factory):
    binary = presentation_factory('binary')
    morphism = HostingRelation(binary, binary).morphism(((0, 1),))
    assert isinstance(morphism, DownwardMorphism)
    assert morphism.anchor == ((0, 1),)
    assert morphism(()) == ((0, 1),)
    domain = unfold(binary, 5).labels
    images = {morphism(v) for v in domain}
    assert len(images) == len(domain)
    assert all(image[:1] == ((0, 1),) for image in images)
    assert all(binary.is_vertex(image) for image in images)


def test_downward_morphism_rejects_anchor(presentation_factory):
    relation = HostingRelation(
        presentation_factory('binary'),
        presentation_factory('binary_pruned'),
    )
    with pytest.raises(ValueError):
        relation.morphism(())
    assert relation.morphism(((0, 0),)).anchor == ((0, 0),)
