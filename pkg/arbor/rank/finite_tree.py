#
# This file is part of the arbor-rank project.
#
# Copyright (c) 2026 The arbor-rank developers. All Rights Reserved.
#
from collections import deque

import networkx as nx

from arbor.rank.exceptions import EmptyTreeError, NotATreeError


class FiniteTree:
    """
    An immutable finite tree over opaque, hashable vertex ids.

    Instances are normally obtained through :func:`from_edges`, which validates
    the input; the constructor itself trusts its arguments.
    """

    def __init__(self, vertices=(), edges=()):
        self._vertices = frozenset(vertices)
        self._edges = frozenset(frozenset(edge) for edge in edges)
        self._adjacency = None

    @property
    def vertices(self):
        return self._vertices

    @property
    def edges(self):
        return self._edges

    @property
    def adjacency(self):
        """
        Map every vertex to the frozenset of its neighbours.

        :return: the adjacency map.
        :rtype: dict
        """
        if self._adjacency is None:
            adjacency = {v: set() for v in self._vertices}
            for a, b in map(tuple, self._edges):
                adjacency[a].add(b)
                adjacency[b].add(a)
            self._adjacency = {v: frozenset(n) for v, n in adjacency.items()}
        return self._adjacency

    def neighbors(self, vertex):
        return self.adjacency[vertex]

    def has_edge(self, a, b):
        return frozenset((a, b)) in self._edges

    def to_networkx(self):
        graph = nx.Graph()
        graph.add_nodes_from(self._vertices)
        graph.add_edges_from(tuple(edge) for edge in self._edges)
        return nx.freeze(graph)

    def induced(self, vertices):
        """
        Returns the subgraph induced by ``vertices``.

        :param vertices: the vertices to keep.
        :type vertices: iterable
        :return: the induced subgraph (a tree when ``vertices`` is connected).
        :rtype: FiniteTree
        """
        keep = frozenset(vertices) & self._vertices
        return FiniteTree(
            keep,
            (edge for edge in self._edges if edge <= keep),
        )

    def relabel(self, mapping):
        return FiniteTree(
            (mapping[v] for v in self._vertices),
            ((mapping[a], mapping[b]) for a, b in map(tuple, self._edges)),
        )

    def is_tree(self):
        if not self._vertices:
            return True
        if len(self._edges) != len(self._vertices) - 1:
            return False
        return nx.is_connected(self.to_networkx())

    def __len__(self):
        return len(self._vertices)

    def __bool__(self):
        return bool(self._vertices)

    def __contains__(self, vertex):
        return vertex in self._vertices

    def __iter__(self):
        return iter(self._vertices)

    def __eq__(self, other):
        if not isinstance(other, FiniteTree):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self):
        return hash((self._vertices, self._edges))

    def __repr__(self):
        return f'<FiniteTree |V|={len(self._vertices)} |E|={len(self._edges)}>'


class RootedFiniteTree:

    def __init__(self, tree, root):
        if root not in tree:
            raise ValueError('`root` must be a vertex of the tree.')
        self._tree = tree
        self._root = root
        self._parents = None
        self._order = None

    @property
    def tree(self):
        return self._tree

    @property
    def root(self):
        return self._root

    @property
    def parents(self):
        if self._parents is None:
            self._walk()
        return self._parents

    def bfs_order(self):
        if self._order is None:
            self._walk()
        return self._order

    def parent(self, vertex):
        return self.parents[vertex]

    def children(self, vertex):
        parent = self.parents[vertex]
        return [n for n in self._tree.neighbors(vertex) if n != parent]

    def depth(self, vertex):
        depth = 0
        while vertex != self._root:
            vertex = self.parents[vertex]
            depth += 1
        return depth

    def _walk(self):
        parents = {self._root: None}
        order = [self._root]
        queue = deque(order)
        while queue:
            vertex = queue.popleft()
            for n in self._tree.neighbors(vertex):
                if n not in parents:
                    parents[n] = vertex
                    order.append(n)
                    queue.append(n)
        self._parents = parents
        self._order = order

    def __eq__(self, other):
        if not isinstance(other, RootedFiniteTree):
            return NotImplemented
        return self._tree == other._tree and self._root == other._root

    def __hash__(self):
        return hash((self._tree, self._root))

    def __repr__(self):
        return f'<RootedFiniteTree root={self._root!r} |V|={len(self._tree)}>'


def from_edges(pairs, vertices=None):
    """
    Build a validated :class:`FiniteTree`.

    :param pairs: the edges as pairs of vertex ids.
    :type pairs: iterable
    :param vertices: extra vertices, needed for edgeless trees, defaults to None.
    :type vertices: iterable, optional
    :raises NotATreeError: if the edges contain a self-loop, a duplicate, a cycle or
                           leave the graph disconnected.
    :return: the tree.
    :rtype: FiniteTree
    """
    graph = nx.Graph()
    graph.add_nodes_from(vertices or ())
    seen = set()
    for a, b in pairs:
        if a == b:
            raise NotATreeError('self-loop', vertex=a)
        edge = frozenset((a, b))
        if edge in seen:
            raise NotATreeError('duplicate-edge', edge=(a, b))
        seen.add(edge)
        graph.add_edge(a, b)

    if graph.number_of_nodes() and nx.cycle_basis(graph):
        raise NotATreeError('cycle')
    if graph.number_of_nodes() and not nx.is_connected(graph):
        raise NotATreeError('disconnected')
    return FiniteTree(graph.nodes, graph.edges)


def degree_map(tree):
    return {v: len(n) for v, n in tree.adjacency.items()}


def ahu_canonical(rooted):
    """
    Compute the AHU canonical code of a rooted tree.

    Child codes are sorted lexicographically, so two rooted trees get the same
    code iff they are rooted-isomorphic.

    :param rooted: the rooted tree.
    :type rooted: RootedFiniteTree
    :raises EmptyTreeError: on the empty tree.
    :return: a string of balanced parentheses.
    :rtype: str
    """
    if not rooted.tree:
        raise EmptyTreeError()
    codes = {}
    for vertex in reversed(rooted.bfs_order()):
        codes[vertex] = '(' + ''.join(sorted(codes[c] for c in rooted.children(vertex))) + ')'
    return codes[rooted.root]


def centroids(tree):
    """
    Returns the one or two centroids of a non-empty tree, sorted by their code.
    """
    if not tree:
        raise EmptyTreeError()
    rooted = RootedFiniteTree(tree, next(iter(tree.vertices)))
    order = rooted.bfs_order()
    sizes = {}
    for vertex in reversed(order):
        sizes[vertex] = 1 + sum(sizes[c] for c in rooted.children(vertex))

    total = len(tree)
    heaviest = {}
    for vertex in order:
        parts = [sizes[c] for c in rooted.children(vertex)]
        parts.append(total - sizes[vertex])
        heaviest[vertex] = max(parts)
    best = min(heaviest.values())
    return [v for v in order if heaviest[v] == best]


def canonical_form(tree):
    if not tree:
        return ''
    return min(ahu_canonical(RootedFiniteTree(tree, c)) for c in centroids(tree))


def isomorphic(tree, other):
    if len(tree) != len(other) or len(tree.edges) != len(other.edges):
        return False
    return canonical_form(tree) == canonical_form(other)
