#
# This file is part of the arbor-rank project.
#
# Copyright (c) 2026 The arbor-rank developers. All Rights Reserved.
#
from collections import namedtuple

from arbor.rank.decomposition import branch_profile, leaf_representation, max_leaf_distance
from arbor.rank.exceptions import ArborError
from arbor.rank.presentation import degree_profile, OMEGA
from arbor.rank.pruning import rank_of_presentation


RANK = 'rank'
MAX_LEAF_DISTANCE = 'max-leaf-distance'
DEGREE_PROFILE = 'degree-profile'
BRANCH_PROFILE = 'branch-profile'

KINDS = (RANK, MAX_LEAF_DISTANCE, DEGREE_PROFILE, BRANCH_PROFILE)


NonIsoCertificate = namedtuple('NonIsoCertificate', ('kind', 'key', 'first', 'second'))
NonIsoCertificate.__doc__ = """
An isomorphism invariant whose values differ on two trees. ``key`` selects the
degree or the branch shape code for profile kinds and is ``None`` otherwise.
"""


def rank_mismatch(first, second):
    return NonIsoCertificate(RANK, None, first, second)


def max_leaf_distance_mismatch(first, second):
    return NonIsoCertificate(MAX_LEAF_DISTANCE, None, first, second)


def degree_profile_mismatch(degree, first, second):
    return NonIsoCertificate(DEGREE_PROFILE, degree, first, second)


def branch_profile_mismatch(code, first, second):
    return NonIsoCertificate(BRANCH_PROFILE, code, first, second)


def invariant(kind, presentation, key=None):
    """
    Recompute the invariant cited by a certificate of kind ``kind``.

    :raises ArborError: if the invariant is not defined for the tree.
    """
    if kind == RANK:
        return rank_of_presentation(presentation)
    if kind == MAX_LEAF_DISTANCE:
        return max_leaf_distance(leaf_representation(presentation))
    if kind == DEGREE_PROFILE:
        return degree_profile(presentation).get(key, 0)
    if kind == BRANCH_PROFILE:
        return branch_profile(presentation).get(key, 0)
    raise ValueError(f'`kind` must be one of {", ".join(KINDS)}.')


def check_certificate(certificate, presentation, other):
    """
    Recompute the cited invariant on both trees and confirm the mismatch.

    :rtype: bool
    """
    try:
        first = invariant(certificate.kind, presentation, certificate.key)
        second = invariant(certificate.kind, other, certificate.key)
    except ArborError:
        return False
    return first == certificate.first and second == certificate.second and first != second


def _profile_keys(first, second):
    return sorted(set(first) | set(second), key=lambda k: (k is OMEGA, 0 if k is OMEGA else k))


def find_certificate(presentation, other):
    """
    Search a certificate of non-isomorphism, trying rank, maximum leaf distance,
    degree profile and branch profile in this order.

    :return: the first certificate found, or None.
    :rtype: NonIsoCertificate
    """
    first = rank_of_presentation(presentation)
    second = rank_of_presentation(other)
    if first != second:
        return rank_mismatch(first, second)

    try:
        first = invariant(MAX_LEAF_DISTANCE, presentation)
        second = invariant(MAX_LEAF_DISTANCE, other)
    except ArborError:
        pass
    else:
        if first != second:
            return max_leaf_distance_mismatch(first, second)

    first = degree_profile(presentation)
    second = degree_profile(other)
    for degree in _profile_keys(first, second):
        if first.get(degree, 0) != second.get(degree, 0):
            return degree_profile_mismatch(degree, first.get(degree, 0), second.get(degree, 0))

    try:
        first = branch_profile(presentation)
        second = branch_profile(other)
    except ArborError:
        return None
    for code in _profile_keys(first, second):
        if first.get(code, 0) != second.get(code, 0):
            return branch_profile_mismatch(code, first.get(code, 0), second.get(code, 0))
    return None
