#
# This file is part of the arbor-rank project.
#
# Copyright (c) 2026 The arbor-rank developers. All Rights Reserved.
#
from collections import namedtuple

import networkx as nx

from arbor.rank.presentation import OMEGA


Segment = namedtuple('Segment', ('count', 'target_index', 'base', 'stride'))
Segment.__doc__ = """
``count`` consecutive copies of a source entry sent to the copies
``base, base + stride, ...`` of the target entry ``target_index``.
"""


class HostingRelation:
    """
    The pairs of states ``(s, t)`` such that the subtree below an occurrence of
    ``s`` in the source embeds into the subtree below an occurrence of ``t`` in the
    target, root onto root.

    A rooted embedding maps children onto children, so the relation is the
    greatest fixpoint of the pairs whose child multisets can be assigned
    injectively to related children. It decides rooted embeddability exactly,
    rays included.
    """

    def __init__(self, source, target):
        self._source = source
        self._target = target
        self._assignments = {}
        self._pairs = self._fixpoint()

    @property
    def source(self):
        return self._source

    @property
    def target(self):
        return self._target

    @property
    def pairs(self):
        return self._pairs

    def holds(self, source_state=None, target_state=None):
        source_state = source_state or self._source.root
        target_state = target_state or self._target.root
        return (source_state, target_state) in self._pairs

    def assignment(self, source_state, target_state):
        """
        The injective assignment of the child copies of ``source_state`` to those of
        ``target_state``: for each source entry, its list of :class:`Segment`.

        :raises ValueError: if the pair is not related.
        """
        key = (source_state, target_state)
        if key not in self._pairs:
            raise ValueError(f'`{source_state}` is not hosted by `{target_state}`.')
        if key not in self._assignments:
            self._assignments[key] = self._assign(source_state, target_state)
        return self._assignments[key]

    def morphism(self, anchor=()):
        """
        The embedding of the source unfolding below the target vertex ``anchor``.

        :rtype: DownwardMorphism
        """
        return DownwardMorphism(self, anchor)

    def _compatible(self, source_state, target_state, pairs):
        targets = self._target.entries(target_state)
        return [
            [j for j, t in enumerate(targets) if (s.state, t.state) in pairs]
            for s in self._source.entries(source_state)
        ]

    def _flow(self, source_state, target_state, pairs):
        sources = self._source.entries(source_state)
        targets = self._target.entries(target_state)
        compatible = self._compatible(source_state, target_state, pairs)
        for i, entry in enumerate(sources):
            if entry.multiplicity is OMEGA and not any(
                targets[j].multiplicity is OMEGA for j in compatible[i]
            ):
                return None

        demand = sum(e.multiplicity for e in sources if e.multiplicity is not OMEGA)
        graph = nx.DiGraph()
        graph.add_node('source')
        graph.add_node('sink')
        for i, entry in enumerate(sources):
            if entry.multiplicity is OMEGA:
                continue
            graph.add_edge('source', ('s', i), capacity=entry.multiplicity)
            for j in compatible[i]:
                graph.add_edge(('s', i), ('t', j))
        for j, entry in enumerate(targets):
            if entry.multiplicity is OMEGA:
                graph.add_edge(('t', j), 'sink')
            else:
                graph.add_edge(('t', j), 'sink', capacity=entry.multiplicity)
        if not demand:
            return {}
        value, flows = nx.maximum_flow(graph, 'source', 'sink')
        if value < demand:
            return None
        return flows

    def _fixpoint(self):
        pairs = {(s, t) for s in self._source.states for t in self._target.states}
        changed = True
        while changed:
            changed = False
            for pair in sorted(pairs):
                if self._flow(pair[0], pair[1], pairs) is None:
                    pairs.discard(pair)
                    changed = True
        return frozenset(pairs)

    def _assign(self, source_state, target_state):
        sources = self._source.entries(source_state)
        targets = self._target.entries(target_state)
        compatible = self._compatible(source_state, target_state, self._pairs)
        flows = self._flow(source_state, target_state, self._pairs)

        shares = {}
        for i, entry in enumerate(sources):
            if entry.multiplicity is OMEGA:
                j = next(j for j in compatible[i] if targets[j].multiplicity is OMEGA)
                shares.setdefault(j, []).append((i, OMEGA))
            else:
                for j in compatible[i]:
                    amount = flows[('s', i)].get(('t', j), 0)
                    if amount:
                        shares.setdefault(j, []).append((i, amount))

        segments = {i: [] for i in range(len(sources))}
        for j in sorted(shares):
            sharers = shares[j]
            if targets[j].multiplicity is OMEGA:
                for offset, (i, amount) in enumerate(sharers):
                    segments[i].append(Segment(amount, j, offset, len(sharers)))
            else:
                base = 0
                for i, amount in sharers:
                    segments[i].append(Segment(amount, j, base, 1))
                    base += amount
        return [segments[i] for i in range(len(sources))]


def locate(segments, copy):
    for segment in segments:
        if segment.count is OMEGA or copy < segment.count:
            return segment.target_index, segment.base + copy * segment.stride
        copy -= segment.count
    raise ValueError('copy index out of range.')


class DownwardMorphism:
    """
    A rooted embedding of the source unfolding into the subtree below the target
    vertex ``anchor``, defined on every vertex id.
    """

    def __init__(self, relation, anchor=()):
        anchor = tuple(tuple(step) for step in anchor)
        target_state = relation.target.state_of(anchor)
        if not relation.holds(relation.source.root, target_state):
            raise ValueError(f'the source does not embed below `{anchor}`.')
        self._relation = relation
        self._anchor = anchor
        self._target_state = target_state

    @property
    def relation(self):
        return self._relation

    @property
    def anchor(self):
        return self._anchor

    def __call__(self, vertex):
        source = self._relation.source
        target = self._relation.target
        s = source.root
        t = self._target_state
        image = list(self._anchor)
        for index, copy in vertex:
            segments = self._relation.assignment(s, t)[index]
            target_index, target_copy = locate(segments, copy)
            image.append((target_index, target_copy))
            s = source.entries(s)[index].state
            t = target.entries(t)[target_index].state
        return tuple(image)

    def __repr__(self):
        return f'<DownwardMorphism anchor={self._anchor}>'


def rooted_equimorphic(shape, other):
    """
    True iff the two presented rooted trees embed into each other root onto root.
    """
    return HostingRelation(shape, other).holds() and HostingRelation(other, shape).holds()
