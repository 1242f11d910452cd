#
# This file is part of the arbor-rank project.
#
# Copyright (c) 2026 The arbor-rank developers. All Rights Reserved.
#
from collections import namedtuple
from enum import Enum

from arbor.rank.constants import DEFAULT_MAX_VERTICES, PRUNING_CAP
from arbor.rank.exceptions import NoCoreError
from arbor.rank.finite_tree import degree_map
from arbor.rank.presentation import ClassGraph, shape_height, unfold


class RankValue:
    """
    The rank of a tree: a natural number or ``omega``.
    """

    def __init__(self, value=None):
        if value is not None and (not isinstance(value, int) or value < 0):
            raise ValueError('`value` must be a non-negative integer or None for omega.')
        self._value = value

    @classmethod
    def finite(cls, value):
        return cls(value)

    @classmethod
    def omega(cls):
        return cls(None)

    @property
    def value(self):
        return self._value

    @property
    def is_finite(self):
        return self._value is not None

    @property
    def tag(self):
        return 'Finite' if self.is_finite else 'Omega'

    def to_json(self):
        return {'finite': self._value} if self.is_finite else 'omega'

    def __eq__(self, other):
        if not isinstance(other, RankValue):
            return NotImplemented
        return self._value == other._value

    def __lt__(self, other):
        if not isinstance(other, RankValue):
            return NotImplemented
        if not self.is_finite:
            return False
        return not other.is_finite or self._value < other._value

    def __hash__(self):
        return hash(('RankValue', self._value))

    def __repr__(self):
        return f'Finite({self._value})' if self.is_finite else 'Omega'

    def __str__(self):
        return str(self._value) if self.is_finite else 'omega'


class EndCategory(str, Enum):
    ZERO_ENDS = 'ZeroEnds'
    ONE_END = 'OneEnd'
    MANY_ENDS = 'ManyEnds'

    def __str__(self):
        return self.value


CoreClassification = namedtuple('CoreClassification', ('core_classes', 'ray_states'))


class PruningTrace:
    """
    The rounds of simultaneous leaf removal on a finite tree, up to the fixpoint.
    """

    def __init__(self, tree, rounds, removal_round):
        self._tree = tree
        self._rounds = tuple(rounds)
        self._removal_round = removal_round

    @property
    def tree(self):
        return self._tree

    @property
    def rounds(self):
        return self._rounds

    @property
    def removal_round(self):
        return self._removal_round

    @property
    def rank(self):
        return RankValue.finite(len(self._rounds))

    @property
    def fixpoint(self):
        removed = set(self._removal_round)
        return self._tree.induced(v for v in self._tree if v not in removed)

    def trees(self):
        """
        Yields the trees of the trace, starting with the input and ending with
        the fixpoint.
        """
        alive = set(self._tree.vertices)
        yield self._tree
        for removed in self._rounds:
            alive -= removed
            yield self._tree.induced(alive)

    def __len__(self):
        return len(self._rounds)

    def __repr__(self):
        return f'<PruningTrace rounds={len(self._rounds)}>'


def prune_step(tree):
    """
    Remove, simultaneously, every vertex of degree at most one.
    """
    degrees = degree_map(tree)
    return tree.induced(v for v, d in degrees.items() if d > 1)


def pruning_trace(tree):
    """
    Iterate :func:`prune_step` up to the fixpoint.

    Removal rounds are computed by leaf stripping with degree counters, which
    reproduces the simultaneous rounds exactly.

    :param tree: the tree to prune.
    :type tree: FiniteTree
    :return: the trace and the rank.
    :rtype: tuple
    """
    degrees = degree_map(tree)
    alive = set(tree.vertices)
    current = [v for v, d in degrees.items() if d <= 1]
    rounds = []
    removal_round = {}
    while current:
        rounds.append(frozenset(current))
        for vertex in current:
            removal_round[vertex] = len(rounds)
            alive.discard(vertex)
        touched = set()
        for vertex in current:
            for neighbor in tree.neighbors(vertex):
                if neighbor in alive:
                    degrees[neighbor] -= 1
                    touched.add(neighbor)
        current = [v for v in touched if degrees[v] <= 1]
    trace = PruningTrace(tree, rounds, removal_round)
    return trace, trace.rank


def classify_core(presentation):
    graph = ClassGraph(presentation)
    return CoreClassification(frozenset(graph.core_classes()), presentation.ray_states)


def end_category(presentation):
    if presentation.root not in presentation.ray_states:
        return EndCategory.ZERO_ENDS
    if ClassGraph(presentation).core_classes():
        return EndCategory.MANY_ENDS
    return EndCategory.ONE_END


def core_path(graph):
    """
    Walk from the root down to the topmost core vertex.

    Above the topmost core vertex every vertex has exactly one ray child, with
    multiplicity one, so the walk is a single path.

    :param graph: the class graph.
    :type graph: ClassGraph
    :return: the ``(vertex id, class)`` pairs of the path, ending at the topmost core
             vertex, or ``None`` if there is no core.
    :rtype: list
    """
    rays = graph.presentation.ray_states
    vertex = ()
    cls = graph.root
    path = [(vertex, cls)]
    seen = {cls}
    while not graph.is_core(cls):
        step = next(
            (
                (index, child)
                for index, child, _ in graph.edges(cls)
                if child.state in rays
            ),
            None,
        )
        if step is None or step[1] in seen:
            return None
        vertex = vertex + ((step[0], 0),)
        cls = step[1]
        seen.add(cls)
        path.append((vertex, cls))
    return path


def _rayless_rank(presentation):
    heights = {}
    longest = 0
    for state in presentation.reachable_states():
        tops = sorted(
            (
                shape_height(presentation, e.state, heights) + 1
                for e in presentation.entries(state)
                for _ in range(min(e.multiplicity, 2))
            ),
            reverse=True,
        )[:2]
        longest = max(longest, 1 + sum(tops))
    return (longest + 1) // 2


def up_height(presentation, path):
    """
    The largest distance from the last vertex of ``path`` to a leaf hanging above it.
    """
    heights = {}
    rays = presentation.ray_states
    height = 0
    for _, cls in path[:-1]:
        below = [
            shape_height(presentation, e.state, heights) + 1
            for e in presentation.entries(cls.state)
            if e.state not in rays
        ]
        height = 1 + max([height] + below)
    return height


def core_leaf_distance(presentation, graph=None):
    """
    The largest distance of a leaf from the core of a tree with a non-empty core.
    """
    graph = graph or ClassGraph(presentation)
    path = core_path(graph)
    if path is None:
        raise NoCoreError()
    heights = {}
    distance = max(
        (
            shape_height(presentation, cls.state, heights) + 1
            for cls in graph.classes
            if cls.up_ray and not graph.is_core(cls)
        ),
        default=0,
    )
    return max(distance, up_height(presentation, path))


def rank_of_presentation(presentation):
    """
    Compute the rank of the tree presented by ``presentation``.

    Rayless trees are ranked through the longest path of their shape with
    multiplicities capped at two, trees with one end have rank ``omega`` and
    trees with a non-empty core have the largest distance of a leaf from the core
    as rank.

    :rtype: RankValue
    """
    category = end_category(presentation)
    if category == EndCategory.ZERO_ENDS:
        return RankValue.finite(_rayless_rank(presentation))
    if category == EndCategory.ONE_END:
        return RankValue.omega()
    return RankValue.finite(core_leaf_distance(presentation))


def simulate_rank(presentation, cap=PRUNING_CAP, max_vertices=DEFAULT_MAX_VERTICES):
    """
    Rank a rayless presentation by pruning the unfolding of its capped copy.

    :raises ValueError: if the tree contains a ray.
    """
    trace = simulate_trace(presentation, cap=cap, max_vertices=max_vertices)
    return trace.rank


def simulate_trace(presentation, cap=PRUNING_CAP, max_vertices=DEFAULT_MAX_VERTICES):
    if presentation.ray_states & presentation.reachable_states():
        raise ValueError('the tree contains a ray.')
    unfolded = unfold(
        presentation.capped(cap),
        len(presentation),
        width=cap,
        max_vertices=max_vertices,
    )
    trace, _ = pruning_trace(unfolded.tree)
    return trace


def pruning_centre(presentation, max_vertices=DEFAULT_MAX_VERTICES):
    """
    Locate the vertex, or the edge, removed in the last pruning round of a
    rayless tree.

    :return: one vertex id, or two ids of adjacent vertices sorted by depth.
    :rtype: tuple
    """
    trace = simulate_trace(presentation, max_vertices=max_vertices)
    return tuple(sorted(trace.rounds[-1], key=lambda v: (len(v), v)))
