import pytest

from arbor.rank.presentation import OMEGA
from arbor.rank.pruning import RankValue
from arbor.rank.siblings import check_certificate, find_certificate, NonIsoCertificate
from arbor.rank.siblings.certificates import (
    BRANCH_PROFILE,
    DEGREE_PROFILE,
    degree_profile_mismatch,
    invariant,
    MAX_LEAF_DISTANCE,
    max_leaf_distance_mismatch,
    RANK,
    rank_mismatch,
)


def test_find_certificate_degree_profile(presentation_factory):
    certificate = find_certificate(
        presentation_factory('binary'),
        presentation_factory('binary_pruned'),
    )
    assert certificate == NonIsoCertificate(DEGREE_PROFILE, 2, 1, 2)
    assert check_certificate(
        certificate,
        presentation_factory('binary'),
        presentation_factory('binary_pruned'),
    )


def test_find_certificate_rank(presentation_factory):
    certificate = find_certificate(presentation_factory('star'), presentation_factory('comb'))
    assert certificate == rank_mismatch(RankValue.finite(3), RankValue.omega())


def test_find_certificate_order(presentation_factory):
    certificate = find_certificate(
        presentation_factory('double_ray_pendant'),
        presentation_factory('star_on_double_ray'),
    )
    assert certificate.kind == RANK
    certificate = find_certificate(
        presentation_factory('double_ray_pendant'),
        presentation_factory('double_ray_comb'),
    )
    assert certificate.kind == DEGREE_PROFILE
    assert (certificate.key, certificate.first, certificate.second) == (1, 1, OMEGA)


def test_find_certificate_omega_profiles(presentation_factory):
    star = presentation_factory('star')
    wide = presentation_factory('wide_star')
    certificate = find_certificate(star, wide)
    assert certificate.kind == DEGREE_PROFILE
    assert certificate.key == 2


def test_find_certificate_isomorphic(presentation_factory):
    assert find_certificate(presentation_factory('binary'), presentation_factory('binary')) is None


def test_check_certificate_rejects_wrong_values(presentation_factory):
    binary = presentation_factory('binary')
    pruned = presentation_factory('binary_pruned')
    assert not check_certificate(degree_profile_mismatch(2, 1, 3), binary, pruned)
    assert not check_certificate(degree_profile_mismatch(3, OMEGA, OMEGA), binary, pruned)
    assert not check_certificate(max_leaf_distance_mismatch(0, 0), binary, binary)


def test_check_certificate_not_applicable(presentation_factory):
    certificate = max_leaf_distance_mismatch(0, 1)
    ray = presentation_factory('ray')
    assert not check_certificate(certificate, ray, presentation_factory('comb'))


def test_invariant(presentation_factory):
    p = presentation_factory('double_ray_pendant')
    assert invariant(RANK, p) == RankValue.finite(1)
    assert invariant(MAX_LEAF_DISTANCE, p) == 1
    assert invariant(DEGREE_PROFILE, p, 4) == 0
    assert invariant(BRANCH_PROFILE, p, '(())') == 1
    with pytest.raises(ValueError):
        invariant('girth', p)
