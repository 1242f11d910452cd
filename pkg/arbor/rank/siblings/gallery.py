#
# This file is part of the arbor-rank project.
#
# Copyright (c) 2026 The arbor-rank developers. All Rights Reserved.
#
from collections import namedtuple, OrderedDict

from arbor.rank.presentation import parse_dsl
from arbor.rank.pruning import EndCategory, RankValue


GalleryEntry = namedtuple(
    'GalleryEntry',
    ('name', 'presentation', 'rank', 'ends', 'core_size', 'description'),
)


_GALLERY = (
    (
        'star',
        'state r { m:w } state m { l:1 } state l { } root r',
        RankValue.finite(3),
        EndCategory.ZERO_ENDS,
        0,
        'a vertex with countably many paths of length 2 attached to it',
    ),
    (
        'binary',
        'state r { q:2 } state q { q:2 } root r',
        RankValue.finite(0),
        EndCategory.MANY_ENDS,
        2,
        'the complete binary tree, one vertex of degree 2 and all others of degree 3',
    ),
    (
        'binary_pruned',
        'state r { q:1, p:1 } state p { q:1 } state q { q:2 } root r',
        RankValue.finite(0),
        EndCategory.MANY_ENDS,
        3,
        'a sibling of the complete binary tree with two vertices of degree 2',
    ),
    (
        'ray',
        'state a { a:1 } root a',
        RankValue.omega(),
        EndCategory.ONE_END,
        0,
        'a one-way infinite path',
    ),
    (
        'double_ray',
        'state m { a:1, b:1 } state a { a:1 } state b { b:1 } root m',
        RankValue.finite(0),
        EndCategory.MANY_ENDS,
        3,
        'a two-way infinite path',
    ),
    (
        'comb',
        'state c { c:1, t:1 } state t { } root c',
        RankValue.omega(),
        EndCategory.ONE_END,
        0,
        'a ray with a pendant edge at every vertex',
    ),
)


def gallery():
    """
    Returns the worked example trees, by name, with their expected rank, end
    category and number of core classes.

    :rtype: OrderedDict
    """
    return OrderedDict(
        (name, GalleryEntry(name, parse_dsl(text), rank, ends, core_size, description))
        for name, text, rank, ends, core_size, description in _GALLERY
    )


def gallery_presentation(name):
    return gallery()[name].presentation
