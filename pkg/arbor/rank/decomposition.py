#
# This file is part of the arbor-rank project.
#
# Copyright (c) 2026 The arbor-rank developers. All Rights Reserved.
#
from collections import defaultdict, OrderedDict

from arbor.rank.exceptions import NoCoreError
from arbor.rank.presentation import (
    class_name,
    ClassGraph,
    entries_code,
    Entry,
    reroot,
    shape_code,
    shape_height,
    TreePresentation,
)
from arbor.rank.pruning import (
    core_path,
    end_category,
    EndCategory,
    pruning_centre,
    rank_of_presentation,
)


class LeafyBranchShape:
    """
    The shape of a leafy branch: a core vertex together with all the rayless
    subtrees hanging from it.
    """

    def __init__(self, shape, attachment_class):
        self._shape = shape
        self._attachment_class = attachment_class
        self._code = None
        self._height = None

    @property
    def shape(self):
        return self._shape

    @property
    def attachment_class(self):
        return self._attachment_class

    @property
    def code(self):
        if self._code is None:
            self._code = shape_code(self._shape)
        return self._code

    @property
    def height(self):
        if self._height is None:
            self._height = shape_height(self._shape)
        return self._height

    def __eq__(self, other):
        if not isinstance(other, LeafyBranchShape):
            return NotImplemented
        return self.code == other.code and self._attachment_class == other._attachment_class

    def __hash__(self):
        return hash((self.code, self._attachment_class))

    def __repr__(self):
        return f'<LeafyBranchShape {self.code} at {class_name(self._attachment_class)}>'


class LeafRepresentation:

    def __init__(self, source, rerooting, core, branches):
        self._source = source
        self._rerooting = rerooting
        self._core = core
        self._branches = tuple(branches)

    @property
    def source(self):
        return self._source

    @property
    def rerooted(self):
        """
        The source presented from its topmost core vertex.
        """
        return self._rerooting.presentation

    @property
    def rerooting(self):
        return self._rerooting

    @property
    def core(self):
        return self._core

    @property
    def branches(self):
        """
        The ``(LeafyBranchShape, occurrence count)`` pairs, one per attachment class
        and shape.
        """
        return self._branches

    @property
    def core_classes(self):
        return tuple(self._core.states)

    def __repr__(self):
        return (
            f'<LeafRepresentation core={len(self._core)} '
            f'branches={len(self._branches)}>'
        )


def _rayless_entries(presentation, state):
    rays = presentation.ray_states
    return [e for e in presentation.entries(state) if e.state not in rays]


def branch_shape(presentation, state, entries=None):
    """
    The presentation of the rooted shape with root children ``entries``, by
    default the rayless entries of ``state``.
    """
    entries = _rayless_entries(presentation, state) if entries is None else entries
    name = presentation.fresh_name(f'{state}.branch')
    return presentation.replace({name: entries}, root=name)


def leaf_representation(presentation):
    """
    Split a tree with a non-empty core into its core and its leafy branches.

    :param presentation: the tree.
    :type presentation: TreePresentation
    :raises NoCoreError: if the tree is rayless or has one end.
    :rtype: LeafRepresentation
    """
    if end_category(presentation) != EndCategory.MANY_ENDS:
        raise NoCoreError()
    path = core_path(ClassGraph(presentation))
    rerooting = reroot(presentation, path[-1][0])
    rerooted = rerooting.presentation
    graph = ClassGraph(rerooted)

    states = OrderedDict()
    for cls in graph.core_classes():
        states[class_name(cls)] = [
            (class_name(child), multiplicity)
            for _, child, multiplicity in graph.edges(cls)
            if graph.is_core(child)
        ]
    core = TreePresentation(states, class_name(graph.root))

    groups = OrderedDict()
    for cls in graph.core_classes():
        entries = _rayless_entries(rerooted, cls.state)
        if not entries:
            continue
        branch = LeafyBranchShape(branch_shape(rerooted, cls.state, entries), cls)
        key = (branch.code, cls)
        if key not in groups:
            groups[key] = [branch, 0]
        groups[key][1] = groups[key][1] + graph.occurrence_count(cls)
    branches = [tuple(group) for group in groups.values()]
    return LeafRepresentation(presentation, rerooting, core, branches)


def branch_rank(branch):
    return rank_of_presentation(branch.shape)


def branch_count(representation):
    return sum((count for _, count in representation.branches), 0)


def max_leaf_distance(representation):
    return max((branch.height for branch, _ in representation.branches), default=0)


def branch_profile(presentation):
    """
    Count the branches of a tree per rooted shape code.

    For a tree with a non-empty core these are its leafy branches. For a rayless
    tree they are the subtrees hanging from its pruning centre, keyed with an
    ``edge:`` prefix when the centre is an edge.

    :raises NoCoreError: if the tree has exactly one end.
    :return: mapping from shape code to count (``OMEGA`` for infinitely many).
    :rtype: dict
    """
    category = end_category(presentation)
    if category == EndCategory.MANY_ENDS:
        profile = defaultdict(int)
        for branch, count in leaf_representation(presentation).branches:
            profile[branch.code] = profile[branch.code] + count
        return dict(profile)
    if category == EndCategory.ONE_END:
        raise NoCoreError()
    return _centre_profile(presentation)


def _centre_profile(presentation):
    centre = pruning_centre(presentation)
    rerooting = reroot(presentation, centre[0])
    rerooted = rerooting.presentation
    entries = list(rerooted.entries(rerooted.root))
    memo = {}
    profile = defaultdict(int)
    if len(centre) == 1:
        for entry in entries:
            code = entries_code(rerooted, rerooted.entries(entry.state), memo)
            profile[code] = profile[code] + entry.multiplicity
        return dict(profile)

    (index, _), = rerooting.translate(centre[1])
    entry = entries[index]
    if entry.multiplicity == 1:
        del entries[index]
    else:
        entries[index] = Entry(entry.state, entry.multiplicity - 1)
    halves = (
        entries_code(rerooted, rerooted.entries(entry.state), memo),
        entries_code(rerooted, entries, memo),
    )
    for code in halves:
        profile[f'edge:{code}'] += 1
    return dict(profile)
