import pytest

from arbor.rank.embedding import (
    core_respecting,
    EmbeddingWitness,
    EXACT,
    HostingRelation,
    TRUNCATED,
    verify_witness,
)
from arbor.rank.exceptions import DepthExceedsWitnessError
from arbor.rank.finite_tree import from_edges


@pytest.fixture
def self_witness(presentation_factory):
    def _self_witness(name, anchor, depth=5):
        p = presentation_factory(name)
        morphism = HostingRelation(p, p).morphism(anchor)
        return p, EmbeddingWitness.truncated(morphism, p, p, depth, note='shift')
    return _self_witness


def test_exact_witness():
    source = from_edges([(0, 1)])
    target = from_edges([('a', 'b'), ('b', 'c')])
    witness = EmbeddingWitness.exact({0: 'a', 1: 'b'})
    assert witness.kind == EXACT
    assert witness.to_json() == {'kind': 'Exact', 'vertices': 2}
    assert verify_witness(witness, source, target)
    assert core_respecting(witness, source, target)
    assert not verify_witness(EmbeddingWitness.exact({0: 'a', 1: 'c'}), source, target)
    assert not verify_witness(EmbeddingWitness.exact({0: 'a', 1: 'a'}), source, target)
    assert not verify_witness(EmbeddingWitness.exact({0: 'a'}), source, target)


def test_truncated_witness(self_witness):
    p, witness = self_witness('binary', ((0, 1),))
    assert witness.kind == TRUNCATED
    assert witness.depth == 5
    assert witness.width == 3
    assert witness(()) == ((0, 1),)
    assert witness.to_json() == {
        'kind': 'Truncated',
        'vertices': 63,
        'depth': 5,
        'width': 3,
        'note': 'shift',
    }
    assert verify_witness(witness, p, p)
    assert verify_witness(witness, p, p, depth=3)
    assert core_respecting(witness, p, p)


def test_truncated_witness_extension(self_witness):
    _, witness = self_witness('double_ray_pendant', ())
    assert set(witness.extension) == {('a', True), ('b', True)}


def test_verify_deeper_than_witness(self_witness):
    p, witness = self_witness('binary', (), depth=3)
    with pytest.raises(DepthExceedsWitnessError) as cv:
        verify_witness(witness, p, p, depth=4)
    assert cv.value.exit_code == 3


def test_verify_tampered_witness(self_witness):
    p, witness = self_witness('binary', (), depth=3)
    mapping = dict(witness.mapping)
    mapping[((0, 0),)] = ((0, 1),)
    tampered = EmbeddingWitness(
        TRUNCATED,
        mapping,
        depth=witness.depth,
        width=witness.width,
        extension=witness.extension,
    )
    assert not verify_witness(tampered, p, p)


def test_verify_missing_vertex(self_witness):
    p, witness = self_witness('ray', (), depth=3)
    mapping = dict(witness.mapping)
    del mapping[((0, 0), (0, 0))]
    partial = EmbeddingWitness(TRUNCATED, mapping, depth=3, width=3, extension=witness.extension)
    assert not verify_witness(partial, p, p)


def test_verify_wrong_extension(self_witness):
    p, witness = self_witness('ray', (), depth=3)
    wrong = EmbeddingWitness(TRUNCATED, witness.mapping, depth=3, width=3, extension={})
    assert not verify_witness(wrong, p, p)
    assert verify_witness(wrong, p, p, depth=2)


def test_core_respecting_rejects_core_to_branch(presentation_factory):
    p = presentation_factory('double_ray_pendant')
    mapping = {(): ((0, 0),), ((2, 0),): ((0, 0), (0, 0))}
    witness = EmbeddingWitness(TRUNCATED, mapping, depth=1, width=1)
    assert core_respecting(witness, p, p)
    mapping = {(): ((2, 0),)}
    witness = EmbeddingWitness(TRUNCATED, mapping, depth=0, width=1)
    assert not core_respecting(witness, p, p)
