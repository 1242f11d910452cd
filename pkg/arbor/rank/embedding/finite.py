#
# This file is part of the arbor-rank project.
#
# Copyright (c) 2026 The arbor-rank developers. All Rights Reserved.
#
import networkx as nx

from arbor.rank.embedding.witness import EmbeddingWitness


_NO_PARENT = object()


def _ordered(vertices):
    return sorted(vertices, key=repr)


class _Embedder:
    """
    Rooted embeddability of finite subtrees, memoized on directed edges.

    ``fits(u, pu, v, pv)`` tells whether the subtree of ``u`` seen from ``pu`` in
    the source embeds into the subtree of ``v`` seen from ``pv`` in the target with
    ``u`` sent to ``v``: the children of ``u`` must be matched injectively to
    children of ``v`` they fit into.
    """

    def __init__(self, source, target):
        self._source = source
        self._target = target
        self._memo = {}

    def _children(self, tree, vertex, parent):
        return _ordered(n for n in tree.neighbors(vertex) if n != parent)

    def fits(self, u, pu, v, pv):
        key = (u, pu, v, pv)
        if key not in self._memo:
            self._memo[key] = self._match(u, pu, v, pv)
        return self._memo[key] is not None

    def _match(self, u, pu, v, pv):
        sources = self._children(self._source, u, pu)
        targets = self._children(self._target, v, pv)
        if len(sources) > len(targets):
            return None
        if not sources:
            return {}
        graph = nx.Graph()
        top = [('s', c) for c in sources]
        graph.add_nodes_from(top)
        graph.add_nodes_from(('t', d) for d in targets)
        for c in sources:
            for d in targets:
                if self.fits(c, u, d, v):
                    graph.add_edge(('s', c), ('t', d))
        matching = nx.bipartite.hopcroft_karp_matching(graph, top_nodes=top)
        if any(node not in matching for node in top):
            return None
        return {c: matching[('s', c)][1] for c in sources}

    def mapping(self, u, pu, v, pv):
        result = {}
        stack = [(u, pu, v, pv)]
        while stack:
            u, pu, v, pv = stack.pop()
            result[u] = v
            for c, d in self._memo[(u, pu, v, pv)].items():
                stack.append((c, u, d, v))
        return result


def rooted_embeds(source, target):
    """
    Search an embedding of ``source`` into ``target`` sending root to root.

    :param source: the rooted tree to embed.
    :type source: RootedFiniteTree
    :param target: the rooted host tree.
    :type target: RootedFiniteTree
    :return: an exact witness, or None.
    :rtype: EmbeddingWitness
    """
    embedder = _Embedder(source.tree, target.tree)
    if embedder.fits(source.root, _NO_PARENT, target.root, _NO_PARENT):
        return EmbeddingWitness.exact(
            embedder.mapping(source.root, _NO_PARENT, target.root, _NO_PARENT),
        )


def embeds(source, target):
    """
    Search an embedding of the finite tree ``source`` into ``target``.

    One vertex of ``source`` is fixed and tried against every vertex of ``target``.

    :type source: FiniteTree
    :type target: FiniteTree
    :return: an exact witness, or None.
    :rtype: EmbeddingWitness
    """
    if not source:
        return EmbeddingWitness.exact({})
    if len(source) > len(target):
        return None
    embedder = _Embedder(source, target)
    root = _ordered(source.vertices)[0]
    for candidate in _ordered(target.vertices):
        if embedder.fits(root, _NO_PARENT, candidate, _NO_PARENT):
            return EmbeddingWitness.exact(
                embedder.mapping(root, _NO_PARENT, candidate, _NO_PARENT),
            )


def equimorphic_finite(tree, other):
    return embeds(tree, other) is not None and embeds(other, tree) is not None
