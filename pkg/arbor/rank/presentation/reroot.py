#
# This file is part of the arbor-rank project.
#
# Copyright (c) 2026 The arbor-rank developers. All Rights Reserved.
#
from collections import OrderedDict

from arbor.rank.presentation.base import OMEGA, Entry, TreePresentation


class Reroot:
    """
    The same unrooted tree presented from another vertex.

    For the path ``a_0 ... a_k`` from the old root to ``vertex`` every state on the
    path gets a fresh copy: one copy of the path child is removed and an extra
    entry pointing to the copy of the parent is appended. Vertex ids of both
    unfoldings are related by :meth:`translate` and :meth:`untranslate`.
    """

    def __init__(self, presentation, vertex):
        """
        :param presentation: the presentation to re-root.
        :type presentation: TreePresentation
        :param vertex: the id of the new root in the unfolding of ``presentation``.
        :type vertex: tuple
        :raises ValueError: if ``vertex`` is not a vertex of the unfolding.
        """
        vertex = tuple(tuple(step) for step in vertex)
        path = [presentation.root]
        state = presentation.root
        presentation.state_of(vertex)
        for index, _ in vertex:
            state = presentation.entries(state)[index].state
            path.append(state)
        self._source = presentation
        self._vertex = vertex
        self._path = path
        self._dropped = {}
        self._up_index = {}
        self._presentation = self._build()

    @property
    def source(self):
        return self._source

    @property
    def vertex(self):
        return self._vertex

    @property
    def presentation(self):
        return self._presentation

    @property
    def depth(self):
        return len(self._vertex)

    def path_state(self, level):
        """
        The name of the re-rooted copy of the path state at ``level``.
        """
        return self._names[level]

    def translate(self, vertex):
        """
        Map a vertex id of the source unfolding to the re-rooted one.
        """
        vertex = tuple(vertex)
        pivot = self._vertex
        k = len(pivot)
        common = 0
        while common < min(k, len(vertex)) and vertex[common] == pivot[common]:
            common += 1
        result = [(self._up_index[level], 0) for level in range(k, common, -1)]
        if len(vertex) > common:
            index, copy = vertex[common]
            if common < k:
                path_index, path_copy = pivot[common]
                if index == path_index:
                    copy -= 1 if copy > path_copy else 0
                elif index > path_index and self._dropped[common]:
                    index -= 1
            result.append((index, copy))
            result.extend(vertex[common + 1:])
        return tuple(result)

    def untranslate(self, vertex):
        """
        Map a vertex id of the re-rooted unfolding back to the source one.
        """
        vertex = tuple(vertex)
        level = len(self._vertex)
        position = 0
        while (
            position < len(vertex)
            and level > 0
            and vertex[position][0] == self._up_index[level]
        ):
            level -= 1
            position += 1
        result = list(self._vertex[:level])
        if position < len(vertex):
            index, copy = vertex[position]
            if level < len(self._vertex):
                path_index, path_copy = self._vertex[level]
                if self._dropped[level] and index >= path_index:
                    index += 1
                if index == path_index and copy >= path_copy:
                    copy += 1
            result.append((index, copy))
            result.extend(vertex[position + 1:])
        return tuple(result)

    def _build(self):
        source = self._source
        k = len(self._vertex)
        taken = set()
        names = []
        for level, state in enumerate(self._path):
            name = source.fresh_name(f'{state}.r' if level == k else f'{state}.u', taken)
            taken.add(name)
            names.append(name)
        self._names = names

        states = OrderedDict()
        for level, state in enumerate(self._path):
            entries = list(source.entries(state))
            if level < k:
                path_index, _ = self._vertex[level]
                entry = entries[path_index]
                if entry.multiplicity == 1:
                    del entries[path_index]
                    self._dropped[level] = True
                else:
                    multiplicity = entry.multiplicity
                    if multiplicity is not OMEGA:
                        multiplicity -= 1
                    entries[path_index] = Entry(entry.state, multiplicity)
                    self._dropped[level] = False
            if level > 0:
                self._up_index[level] = len(entries)
                entries.append(Entry(names[level - 1], 1))
            states[names[level]] = entries

        if not k:
            return source
        ordered = OrderedDict([(names[k], states[names[k]])])
        for level in range(k - 1, -1, -1):
            ordered[names[level]] = states[names[level]]
        for name, entries in source.items():
            ordered[name] = entries
        return TreePresentation(ordered, names[k]).trimmed()


def reroot(presentation, vertex):
    return Reroot(presentation, vertex)
