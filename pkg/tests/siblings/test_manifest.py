import json
import os

import pytest

from arbor.rank.analyzer import analyze
from arbor.rank.presentation import load
from arbor.rank.siblings import (
    family_to_json,
    find_certificate,
    leafless_family,
    path_attach_family,
    star_family,
    write_family,
)
from arbor.rank.siblings.manifest import certificate_to_json, MANIFEST_NAME, member_filename


def test_member_filename():
    assert member_filename(3) == 'member-03.tree'


def test_family_to_json(presentation_factory):
    family = leafless_family(presentation_factory('binary'), n_max=3, depth=4)
    data = family_to_json(family)
    assert data['size'] == 3
    assert data['witness_depth'] == 4
    assert data['construction'] == family.construction
    assert [m['file'] for m in data['members']] == [
        'member-00.tree',
        'member-01.tree',
        'member-02.tree',
    ]
    assert [m['label'] for m in data['members']] == [1, 2, 3]
    assert data['members'][0]['to_base']['kind'] == 'Truncated'
    assert data['members'][0]['from_base']['depth'] == 4
    assert data['certificates'][0] == {
        'pair': [0, 1],
        'kind': 'max-leaf-distance',
        'key': None,
        'first': 1,
        'second': 2,
    }
    assert data['uncertified_pairs'] == []
    json.dumps(data)


def test_family_to_json_uncertified(presentation_factory):
    family = path_attach_family(presentation_factory('leafy_binary'), n_max=3, depth=4)
    data = family_to_json(family)
    assert data['uncertified_pairs'] == [[0, 1], [0, 2]]
    assert len(data['certificates']) == 1


def test_certificate_to_json_rank(presentation_factory):
    certificate = find_certificate(presentation_factory('star'), presentation_factory('comb'))
    assert certificate_to_json(certificate) == {
        'kind': 'rank',
        'key': None,
        'first': {'finite': 3},
        'second': 'omega',
    }


def test_write_family(tmp_path):
    family = star_family(4)
    directory = str(tmp_path / 'out')
    manifest = write_family(family, directory)
    assert manifest == os.path.join(directory, MANIFEST_NAME)
    assert sorted(os.listdir(directory)) == [
        'manifest.json',
        'member-00.tree',
        'member-01.tree',
        'member-02.tree',
        'member-03.tree',
    ]
    for position, member in enumerate(family.members):
        assert load(os.path.join(directory, member_filename(position))) == member
    with open(manifest) as f:
        data = json.load(f)
    assert data['size'] == 4
    assert len(data['certificates']) == 6
    assert data['certificates'][0]['key'] == '()'


@pytest.mark.parametrize(
    'build',
    (
        lambda factory: leafless_family(factory('binary'), n_max=3, depth=4),
        lambda factory: path_attach_family(factory('leafy_binary'), n_max=3, depth=4),
        lambda factory: analyze(factory('star_on_double_ray'), depth=5).evidence,
        lambda factory: analyze(factory('star'), depth=4).evidence,
        lambda factory: star_family(4),
    ),
)
def test_manifest_follows_schema(presentation_factory, schema_validator, build):
    data = json.loads(json.dumps(family_to_json(build(presentation_factory))))
    schema_validator('manifest').validate(data)


def test_written_manifest_follows_schema(tmp_path, schema_validator):
    manifest = write_family(star_family(3), str(tmp_path / 'out'))
    with open(manifest) as f:
        schema_validator('manifest').validate(json.load(f))
