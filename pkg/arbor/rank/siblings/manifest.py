#
# This file is part of the arbor-rank project.
#
# Copyright (c) 2026 The arbor-rank developers. All Rights Reserved.
#
import json
import os

from arbor.rank.presentation import dump, format_count, OMEGA
from arbor.rank.pruning import RankValue


MANIFEST_NAME = 'manifest.json'


def member_filename(position):
    return f'member-{position:02d}.tree'


def _quantity(value):
    if isinstance(value, RankValue):
        return value.to_json()
    if value is OMEGA:
        return format_count(value)
    return value


def certificate_to_json(certificate):
    return {
        'kind': certificate.kind,
        'key': _quantity(certificate.key),
        'first': _quantity(certificate.first),
        'second': _quantity(certificate.second),
    }


def family_to_json(family):
    """
    The manifest of a sibling family as a JSON-serializable dict.
    """
    members = []
    for position, (label, evidence) in enumerate(zip(family.labels, family.evidence)):
        members.append(
            {
                'file': member_filename(position),
                'label': _quantity(label),
                'to_base': evidence.to_base.to_json(),
                'from_base': evidence.from_base.to_json(),
            },
        )
    certificates = []
    uncertified = []
    for (i, j), certificate in sorted(family.certificates.items()):
        if certificate is None:
            uncertified.append([i, j])
        else:
            certificates.append({'pair': [i, j], **certificate_to_json(certificate)})
    return {
        'size': family.size,
        'construction': family.construction,
        'witness_depth': family.depth,
        'members': members,
        'certificates': certificates,
        'uncertified_pairs': uncertified,
    }


def write_family(family, directory):
    """
    Write one DSL file per member and the JSON manifest into ``directory``.

    :return: the path of the manifest.
    :rtype: str
    """
    os.makedirs(directory, exist_ok=True)
    for position, member in enumerate(family.members):
        dump(member, os.path.join(directory, member_filename(position)))
    path = os.path.join(directory, MANIFEST_NAME)
    with open(path, 'w') as f:
        json.dump(family_to_json(family), f, indent=2, sort_keys=True)
        f.write('\n')
    return path
