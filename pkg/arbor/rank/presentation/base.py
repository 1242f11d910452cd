#
# This file is part of the arbor-rank project.
#
# Copyright (c) 2026 The arbor-rank developers. All Rights Reserved.
#
from collections import OrderedDict, namedtuple

import networkx as nx

from arbor.rank.exceptions import BadMultiplicityError, NoRootError, UndefinedStateError


class _Omega:
    """
    The countably infinite multiplicity.

    ``OMEGA`` absorbs addition and multiplication by non-zero counts and compares
    greater than every integer, so plain ``sum``, ``min`` and ``max`` work on
    mixed counts.
    """
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return 'OMEGA'

    def __str__(self):
        return 'w'

    def __hash__(self):
        return hash('OMEGA')

    def __eq__(self, other):
        return other is self

    def __add__(self, other):
        if isinstance(other, int) or other is self:
            return self
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            return self
        return NotImplemented

    def __mul__(self, other):
        if other == 0:
            return 0
        if isinstance(other, int) or other is self:
            return self
        return NotImplemented

    __rmul__ = __mul__

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __reduce__(self):
        return (_Omega, ())


OMEGA = _Omega()

Entry = namedtuple('Entry', ('state', 'multiplicity'))


def is_multiplicity(value):
    if value is OMEGA:
        return True
    return isinstance(value, int) and not isinstance(value, bool) and value >= 1


def format_count(value):
    return str(value)


def parse_count(value):
    if value in ('w', 'omega', OMEGA):
        return OMEGA
    return int(value)


class TreePresentation:
    """
    A finite state graph with child multiplicities; its rooted unfolding is a
    (possibly infinite) tree.
    """

    def __init__(self, states, root):
        """
        Create a new TreePresentation.

        :param states: ordered mapping from state name to its child entries, given as
                       ``(child state, multiplicity)`` pairs.
        :type states: Mapping
        :param root: name of the root state.
        :type root: str
        :raises NoRootError: if there is no state or no root.
        :raises UndefinedStateError: if the root or a child state is not defined.
        :raises BadMultiplicityError: if a multiplicity is neither positive nor ``OMEGA``.
        """
        self._states = OrderedDict(
            (name, tuple(Entry(*entry) for entry in entries))
            for name, entries in states.items()
        )
        self._root = root
        self._ray_states = None
        self._validate()

    @property
    def root(self):
        return self._root

    @property
    def states(self):
        return tuple(self._states.keys())

    def entries(self, state):
        return self._states[state]

    def items(self):
        return self._states.items()

    @property
    def ray_states(self):
        """
        The states whose subtree contains a ray, that is the states from which a
        directed cycle of the state graph is reachable.

        :return: the set of ray-containing states.
        :rtype: frozenset
        """
        if self._ray_states is None:
            graph = self.state_graph()
            cyclic = set()
            for component in nx.strongly_connected_components(graph):
                if len(component) > 1:
                    cyclic |= component
            cyclic |= {s for s in graph.nodes if graph.has_edge(s, s)}
            result = set(cyclic)
            for state in cyclic:
                result |= nx.ancestors(graph, state)
            self._ray_states = frozenset(result)
        return self._ray_states

    def state_graph(self):
        graph = nx.DiGraph()
        graph.add_nodes_from(self._states)
        for name, entries in self._states.items():
            graph.add_edges_from((name, entry.state) for entry in entries)
        return graph

    def reachable_states(self, start=None):
        start = start or self._root
        graph = self.state_graph()
        return {start} | nx.descendants(graph, start)

    def is_finite(self):
        """
        True iff the unfolding is a finite tree: no cycle and no ``OMEGA`` entry
        is reachable from the root.
        """
        if self._root in self.ray_states:
            return False
        return not any(
            entry.multiplicity is OMEGA
            for state in self.reachable_states()
            for entry in self._states[state]
        )

    def state_of(self, vertex):
        """
        Returns the state of the unfolding vertex addressed by ``vertex``.

        :param vertex: a tuple of ``(entry index, copy index)`` steps from the root.
        :type vertex: tuple
        :raises ValueError: if ``vertex`` does not address a vertex of the unfolding.
        :return: the state name.
        :rtype: str
        """
        state = self._root
        for index, copy in vertex:
            entries = self._states[state]
            if not (0 <= index < len(entries)):
                raise ValueError(f'`{vertex}` is not a vertex of the unfolding.')
            entry = entries[index]
            if copy < 0 or (entry.multiplicity is not OMEGA and copy >= entry.multiplicity):
                raise ValueError(f'`{vertex}` is not a vertex of the unfolding.')
            state = entry.state
        return state

    def is_vertex(self, vertex):
        try:
            self.state_of(vertex)
        except (ValueError, TypeError):
            return False
        return True

    def fresh_name(self, base, taken=()):
        taken = set(taken) | set(self._states)
        if base not in taken:
            return base
        suffix = 1
        while f'{base}{suffix}' in taken:
            suffix += 1
        return f'{base}{suffix}'

    def replace(self, states=None, root=None):
        """
        Returns a new presentation with some states added or redefined.

        :param states: mapping of state name to entries overriding or extending this one.
        :type states: Mapping, optional
        :param root: the new root, defaults to the current one.
        :type root: str, optional
        :return: the new presentation, without unreachable states.
        :rtype: TreePresentation
        """
        merged = OrderedDict(self._states)
        merged.update(states or {})
        return TreePresentation(merged, root or self._root).trimmed()

    def trimmed(self):
        reachable = self.reachable_states()
        if len(reachable) == len(self._states):
            return self
        return TreePresentation(
            OrderedDict((n, e) for n, e in self._states.items() if n in reachable),
            self._root,
        )

    def restricted(self, root):
        """
        Returns the presentation of the subtree below ``root``.
        """
        return TreePresentation(self._states, root).trimmed()

    def capped(self, cap):
        """
        Returns a copy in which every multiplicity above ``cap`` (``OMEGA`` included)
        becomes ``cap``.
        """
        return TreePresentation(
            OrderedDict(
                (name, [(e.state, min(e.multiplicity, cap)) for e in entries])
                for name, entries in self._states.items()
            ),
            self._root,
        )

    def __len__(self):
        return len(self._states)

    def __eq__(self, other):
        if not isinstance(other, TreePresentation):
            return NotImplemented
        return self._root == other._root and list(self._states.items()) == list(
            other._states.items(),
        )

    def __hash__(self):
        return hash((self._root, tuple(self._states.items())))

    def __repr__(self):
        return f'<TreePresentation root={self._root} states={len(self._states)}>'

    def _validate(self):
        if not self._states or not self._root:
            raise NoRootError()
        if self._root not in self._states:
            raise UndefinedStateError(self._root)
        for entries in self._states.values():
            for entry in entries:
                if entry.state not in self._states:
                    raise UndefinedStateError(entry.state)
                if not is_multiplicity(entry.multiplicity):
                    raise BadMultiplicityError(entry.multiplicity)
