#
# This file is part of the arbor-rank project.
#
# Copyright (c) 2026 The arbor-rank developers. All Rights Reserved.
#
from arbor.rank.constants import DEFAULT_MAX_VERTICES, DEFAULT_OMEGA_WIDTH
from arbor.rank.embedding.hosting import HostingRelation
from arbor.rank.exceptions import DepthExceedsWitnessError
from arbor.rank.presentation import ClassGraph, unfold


EXACT = 'Exact'
TRUNCATED = 'Truncated'


class EmbeddingWitness:
    """
    Evidence of an embedding: an explicit vertex map between finite trees, or a
    vertex map on a truncated unfolding together with the occurrence classes its
    frontier vertices are sent to.
    """

    def __init__(self, kind, mapping, depth=None, width=None, extension=None, note=None):
        self._kind = kind
        self._mapping = dict(mapping)
        self._depth = depth
        self._width = width
        self._extension = extension or {}
        self._note = note

    @classmethod
    def exact(cls, mapping, note=None):
        return cls(EXACT, mapping, note=note)

    @classmethod
    def truncated(
        cls,
        morphism,
        source,
        target,
        depth,
        width=DEFAULT_OMEGA_WIDTH,
        note=None,
        max_vertices=DEFAULT_MAX_VERTICES,
    ):
        """
        Materialise ``morphism`` on the truncation of ``source`` at ``depth``.

        :param morphism: a callable mapping vertex ids of ``source`` to vertex ids
                         of ``target``.
        :type morphism: callable
        :param source: the source presentation.
        :type source: TreePresentation
        :param target: the target presentation.
        :type target: TreePresentation
        :param depth: the depth of the truncation.
        :type depth: int
        :param width: the number of materialised copies of ``OMEGA`` entries.
        :type width: int
        :param note: a description of the construction, defaults to None.
        :type note: str, optional
        :return: the witness.
        :rtype: EmbeddingWitness
        """
        unfolded = unfold(source, depth, width=width, max_vertices=max_vertices)
        mapping = {v: tuple(morphism(v)) for v in unfolded.labels}
        source_classes = ClassGraph(source)
        target_classes = ClassGraph(target)
        extension = {}
        for vertex, label in unfolded.labels.items():
            if label.depth != depth:
                continue
            extension.setdefault(source_classes.classify(vertex), set()).add(
                target_classes.classify(mapping[vertex]),
            )
        return cls(
            TRUNCATED,
            mapping,
            depth=depth,
            width=width,
            extension={k: frozenset(v) for k, v in extension.items()},
            note=note,
        )

    @property
    def kind(self):
        return self._kind

    @property
    def mapping(self):
        return self._mapping

    @property
    def depth(self):
        return self._depth

    @property
    def width(self):
        return self._width

    @property
    def extension(self):
        return self._extension

    @property
    def note(self):
        return self._note

    def __call__(self, vertex):
        return self._mapping[vertex]

    def __len__(self):
        return len(self._mapping)

    def to_json(self):
        data = {'kind': self._kind, 'vertices': len(self._mapping)}
        if self._kind == TRUNCATED:
            data.update({'depth': self._depth, 'width': self._width})
        if self._note:
            data['note'] = self._note
        return data

    def __repr__(self):
        if self._kind == EXACT:
            return f'<EmbeddingWitness Exact |V|={len(self._mapping)}>'
        return f'<EmbeddingWitness Truncated depth={self._depth} |V|={len(self._mapping)}>'


def _adjacent(a, b):
    if len(a) > len(b):
        a, b = b, a
    return len(b) == len(a) + 1 and b[:-1] == a


def _verify_exact(witness, source, target):
    mapping = witness.mapping
    if set(mapping) != set(source.vertices):
        return False
    images = list(mapping.values())
    if len(set(images)) != len(images) or not set(images) <= set(target.vertices):
        return False
    return all(target.has_edge(mapping[a], mapping[b]) for a, b in map(tuple, source.edges))


def verify_witness(witness, source, target, depth=None):
    """
    Check that ``witness`` is an injective, adjacency-preserving map.

    Exact witnesses are checked on finite trees. Truncated witnesses are checked on
    the truncation of ``source`` at ``depth``; at the full witness depth every
    frontier vertex must also be sent to a class recorded by the extension rule
    whose state hosts the state of the frontier vertex.

    :raises DepthExceedsWitnessError: if ``depth`` exceeds the witness depth.
    :rtype: bool
    """
    if witness.kind == EXACT:
        return _verify_exact(witness, source, target)
    depth = witness.depth if depth is None else depth
    if depth > witness.depth:
        raise DepthExceedsWitnessError(depth, witness.depth)

    mapping = witness.mapping
    budget = max(DEFAULT_MAX_VERTICES, len(mapping) + 1)
    domain = unfold(source, depth, width=witness.width, max_vertices=budget).labels
    if any(vertex not in mapping for vertex in domain):
        return False
    images = [mapping[vertex] for vertex in domain]
    if len(set(images)) != len(images):
        return False
    if not all(target.is_vertex(image) for image in images):
        return False
    if not all(_adjacent(mapping[v[:-1]], mapping[v]) for v in domain if v):
        return False
    if depth < witness.depth:
        return True

    source_classes = ClassGraph(source)
    target_classes = ClassGraph(target)
    hosting = HostingRelation(source, target)
    for vertex, label in domain.items():
        if label.depth != depth:
            continue
        image = mapping[vertex]
        image_class = target_classes.classify(image)
        if image_class not in witness.extension.get(source_classes.classify(vertex), ()):
            return False
        if not hosting.holds(label.state, image_class.state):
            return False
    return True


def core_respecting(witness, source, target, depth=None):
    """
    True iff every core vertex of the verified domain is sent to a core vertex.
    """
    if witness.kind == EXACT:
        return True
    depth = witness.depth if depth is None else depth
    source_classes = ClassGraph(source)
    target_classes = ClassGraph(target)
    for vertex, image in witness.mapping.items():
        if len(vertex) > depth:
            continue
        if source_classes.is_core(source_classes.classify(vertex)) and not (
            target_classes.is_core(target_classes.classify(image))
        ):
            return False
    return True
