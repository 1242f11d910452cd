#
# This file is part of the arbor-rank project.
#
# Copyright (c) 2026 The arbor-rank developers. All Rights Reserved.
#
from collections import deque, namedtuple

from arbor.rank.constants import DEFAULT_MAX_VERTICES, DEFAULT_OMEGA_WIDTH
from arbor.rank.exceptions import BudgetExceededError
from arbor.rank.finite_tree import FiniteTree, RootedFiniteTree
from arbor.rank.presentation.base import OMEGA


VertexLabel = namedtuple('VertexLabel', ('state', 'depth', 'frontier', 'truncated'))
VertexLabel.__doc__ = """
Annotation of an unfolded vertex: its state, its depth, whether it sits on the
depth frontier with children left out, and whether an ``OMEGA`` entry of it was
cut down to the unfolding width.
"""


class UnfoldedTree(RootedFiniteTree):
    """
    A finite truncation of the unfolding of a presentation.

    Vertex ids are tuples of ``(entry index, copy index)`` steps from the root, so
    the ids of a shallower truncation are a subset of the ids of a deeper one.
    """

    def __init__(self, tree, labels, presentation, depth, width):
        super().__init__(tree, ())
        self._labels = labels
        self._presentation = presentation
        self._max_depth = depth
        self._width = width

    @property
    def labels(self):
        return self._labels

    @property
    def presentation(self):
        return self._presentation

    @property
    def max_depth(self):
        return self._max_depth

    @property
    def width(self):
        return self._width

    def label(self, vertex):
        return self._labels[vertex]

    def state(self, vertex):
        return self._labels[vertex].state

    def parent(self, vertex):
        return vertex[:-1] if vertex else None

    def depth(self, vertex):
        return len(vertex)

    def ordered_vertices(self):
        """
        Returns the vertices sorted by depth, then by id.
        """
        return sorted(self._labels, key=lambda v: (len(v), v))

    def __repr__(self):
        return (
            f'<UnfoldedTree depth={self._max_depth} width={self._width} '
            f'|V|={len(self.tree)}>'
        )


def unfold(
    presentation,
    depth,
    width=DEFAULT_OMEGA_WIDTH,
    max_vertices=DEFAULT_MAX_VERTICES,
):
    """
    Materialise the unfolding of ``presentation`` down to ``depth``.

    :param presentation: the presentation to unfold.
    :type presentation: TreePresentation
    :param depth: the depth of the truncation.
    :type depth: int
    :param width: the number of copies materialised for an ``OMEGA`` entry.
    :type width: int
    :param max_vertices: the vertex budget.
    :type max_vertices: int
    :raises BudgetExceededError: if the truncation has more than ``max_vertices`` vertices.
    :return: the truncated unfolding.
    :rtype: UnfoldedTree
    """
    if depth < 0:
        raise ValueError('`depth` must be a non-negative integer.')
    if width < 1:
        raise ValueError('`width` must be a positive integer.')

    labels = {}
    edges = []
    pending = 1
    queue = deque([((), presentation.root)])
    while queue:
        vertex, state = queue.popleft()
        entries = presentation.entries(state)
        level = len(vertex)
        if level == depth:
            labels[vertex] = VertexLabel(state, level, bool(entries), False)
            continue
        truncated = False
        for index, entry in enumerate(entries):
            if entry.multiplicity is OMEGA:
                copies = width
                truncated = True
            else:
                copies = entry.multiplicity
            pending += copies
            if pending > max_vertices:
                raise BudgetExceededError(
                    f'the unfolding to depth {depth} exceeds {max_vertices} vertices',
                    max_vertices=max_vertices,
                )
            for copy in range(copies):
                child = vertex + ((index, copy),)
                edges.append((vertex, child))
                queue.append((child, entry.state))
        labels[vertex] = VertexLabel(state, level, False, truncated)

    tree = FiniteTree(labels.keys(), edges)
    return UnfoldedTree(tree, labels, presentation, depth, width)
