#
# This file is part of the arbor-rank project.
#
# Copyright (c) 2026 The arbor-rank developers. All Rights Reserved.
#
from collections import OrderedDict, defaultdict, deque, namedtuple

import networkx as nx

from arbor.rank.exceptions import UndefinedStateError
from arbor.rank.presentation.base import OMEGA


OccurrenceClass = namedtuple('OccurrenceClass', ('state', 'up_ray'))


def class_name(cls):
    return f'{cls.state}.up' if cls.up_ray else cls.state


def contains_ray_state(presentation, state):
    """
    True iff the subtree below an occurrence of ``state`` contains a ray, that is
    iff a directed cycle of the state graph is reachable from ``state``.
    """
    if state not in presentation.states:
        raise UndefinedStateError(state)
    return state in presentation.ray_states


class ClassGraph:
    """
    The finite graph of occurrence classes reachable from the root class.

    A class ``(s, up)`` groups the occurrences of state ``s`` whose parent-side
    direction contains a ray iff ``up``. An occurrence lies on a double ray (and so
    in the core) iff at least two of its directions contain a ray.
    """

    def __init__(self, presentation):
        self._presentation = presentation
        self._rays = presentation.ray_states
        self._root = OccurrenceClass(presentation.root, False)
        self._edges = OrderedDict()
        self._build()
        self._graph = None

    @property
    def presentation(self):
        return self._presentation

    @property
    def root(self):
        return self._root

    @property
    def classes(self):
        return tuple(self._edges.keys())

    def edges(self, cls):
        """
        Returns the ``(entry index, child class, multiplicity)`` triples of a class.
        """
        return self._edges[cls]

    def ray_children(self, state):
        return sum(
            min(entry.multiplicity, 2)
            for entry in self._presentation.entries(state)
            if entry.state in self._rays
        )

    def ray_directions(self, cls):
        return self.ray_children(cls.state) + (1 if cls.up_ray else 0)

    def is_core(self, cls):
        return self.ray_directions(cls) >= 2

    def core_classes(self):
        return tuple(cls for cls in self._edges if self.is_core(cls))

    def child_class(self, cls, index):
        entry = self._presentation.entries(cls.state)[index]
        others = self.ray_children(cls.state) - (1 if entry.state in self._rays else 0)
        return OccurrenceClass(entry.state, cls.up_ray or others >= 1)

    def classify(self, vertex):
        """
        Returns the occurrence class of the unfolding vertex addressed by ``vertex``.
        """
        cls = self._root
        self._presentation.state_of(vertex)
        for index, _ in vertex:
            cls = self.child_class(cls, index)
        return cls

    def representatives(self):
        """
        Map every class to the id of one of its shallowest occurrences.
        """
        found = {self._root: ()}
        queue = deque([self._root])
        while queue:
            cls = queue.popleft()
            for index, child, _ in self._edges[cls]:
                if child not in found:
                    found[child] = found[cls] + ((index, 0),)
                    queue.append(child)
        return found

    def to_networkx(self):
        if self._graph is None:
            graph = nx.DiGraph()
            graph.add_nodes_from(self._edges)
            for cls, edges in self._edges.items():
                graph.add_edges_from((cls, child) for _, child, _ in edges)
            self._graph = nx.freeze(graph)
        return self._graph

    def cyclic_classes(self):
        graph = self.to_networkx()
        cyclic = set()
        for component in nx.strongly_connected_components(graph):
            if len(component) > 1:
                cyclic |= component
        cyclic |= {c for c in graph.nodes if graph.has_edge(c, c)}
        return cyclic

    def occurrence_count(self, cls):
        """
        Count the vertices of the unfolding falling in class ``cls``.

        :return: ``0``, a positive integer or ``OMEGA``.
        """
        if cls not in self._edges:
            return 0
        graph = self.to_networkx()
        ancestors = nx.ancestors(graph, cls) | {cls}
        if ancestors & self.cyclic_classes():
            return OMEGA
        counts = defaultdict(int)
        counts[self._root] = 1
        for current in nx.topological_sort(graph.subgraph(ancestors)):
            for _, child, multiplicity in self._edges[current]:
                if child in ancestors:
                    counts[child] = counts[child] + counts[current] * multiplicity
        return counts[cls]

    def _build(self):
        queue = deque([self._root])
        self._edges[self._root] = None
        while queue:
            cls = queue.popleft()
            edges = []
            for index, entry in enumerate(self._presentation.entries(cls.state)):
                child = self.child_class(cls, index)
                edges.append((index, child, entry.multiplicity))
                if child not in self._edges:
                    self._edges[child] = None
                    queue.append(child)
            self._edges[cls] = tuple(edges)


def occurrence_count(presentation, cls):
    return ClassGraph(presentation).occurrence_count(cls)


def degree_profile(presentation):
    """
    Count the vertices of the unfolding per degree.

    A non-root occurrence of ``s`` has degree ``1 + sum of multiplicities``, the
    root has no parent edge. Unbounded degrees are keyed by ``OMEGA``.

    :return: mapping from degree to a count (``OMEGA`` for infinitely many).
    :rtype: dict
    """
    graph = ClassGraph(presentation)
    profile = defaultdict(int)
    for cls in graph.classes:
        count = graph.occurrence_count(cls)
        degree = 1 + sum(e.multiplicity for e in presentation.entries(cls.state))
        if cls == graph.root:
            profile[degree - 1] = profile[degree - 1] + 1
            count = count - 1
        if count != 0:
            profile[degree] = profile[degree] + count
    return {degree: count for degree, count in profile.items() if count != 0}


def degree_count(presentation, degree):
    return degree_profile(presentation).get(degree, 0)


def entries_code(presentation, entries, memo=None):
    """
    The rooted canonical code of a vertex whose children are given by ``entries``.

    Children are grouped by their code with multiplicities summed. A finite
    multiplicity repeats the code, ``OMEGA`` appends ``*``.
    """
    memo = {} if memo is None else memo
    grouped = defaultdict(int)
    for entry in entries:
        code = _state_code(presentation, entry.state, memo)
        grouped[code] = grouped[code] + entry.multiplicity
    parts = []
    for code in sorted(grouped):
        count = grouped[code]
        parts.append(f'{code}*' if count is OMEGA else code * count)
    return '(' + ''.join(parts) + ')'


def _state_code(presentation, state, memo):
    if state not in memo:
        memo[state] = entries_code(presentation, presentation.entries(state), memo)
    return memo[state]


def shape_code(presentation, state=None):
    """
    The rooted canonical code of the subtree below a rayless state.

    On finite subtrees the code coincides with
    :func:`arbor.rank.finite_tree.ahu_canonical`.

    :raises ValueError: if the subtree contains a ray.
    """
    state = state or presentation.root
    if state in presentation.ray_states:
        raise ValueError(f'the subtree below `{state}` contains a ray.')
    return _state_code(presentation, state, {})


def shape_height(presentation, state=None, memo=None):
    """
    The height, in edges, of the subtree below a rayless state.
    """
    state = state or presentation.root
    if state in presentation.ray_states:
        raise ValueError(f'the subtree below `{state}` contains a ray.')
    memo = {} if memo is None else memo
    if state not in memo:
        entries = presentation.entries(state)
        memo[state] = 1 + max(
            (shape_height(presentation, e.state, memo) for e in entries),
        ) if entries else 0
    return memo[state]
