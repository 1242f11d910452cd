#
# This file is part of the arbor-rank project.
#
# Copyright (c) 2026 The arbor-rank developers. All Rights Reserved.
#
from collections import OrderedDict

import inflect

from cmr import render

from arbor.rank.decomposition import branch_count, max_leaf_distance
from arbor.rank.presentation import class_name, format_count, OMEGA
from arbor.rank.pruning import classify_core, end_category, rank_of_presentation
from arbor.rank.siblings import family_to_json


def _json_count(count):
    return format_count(count) if count is OMEGA else count


def _sorted_class_names(classes):
    return sorted(class_name(cls) for cls in classes)


def rank_report(presentation):
    return OrderedDict(
        [
            ('rank', rank_of_presentation(presentation).to_json()),
            ('ends', str(end_category(presentation))),
            ('core_classes', _sorted_class_names(classify_core(presentation).core_classes)),
        ],
    )


def decomposition_report(representation):
    return OrderedDict(
        [
            ('core_classes', sorted(representation.core_classes)),
            ('branches', [
                OrderedDict(
                    [
                        ('code', branch.code),
                        ('attachment_class', class_name(branch.attachment_class)),
                        ('count', _json_count(occurrences)),
                        ('height', branch.height),
                    ],
                )
                for branch, occurrences in representation.branches
            ]),
            ('branch_count', _json_count(branch_count(representation))),
            ('max_leaf_distance', max_leaf_distance(representation)),
        ],
    )


class ReportFormatter:
    """
    Render the reports of the command line as terminal text.
    """

    def __init__(self):
        self._p = inflect.engine()

    def _count(self, count, noun):
        if count is OMEGA:
            return f'infinitely many {self._p.plural(noun)}'
        return f'{count} {self._p.plural(noun, count)}'

    def format_rank(self, name, presentation):
        report = rank_report(presentation)
        lines = [
            f'# {name}',
            f'**rank:** {rank_of_presentation(presentation)}',
            f'**ends:** {report["ends"]}',
        ]
        classes = report['core_classes']
        if classes:
            lines.append(f'## {self._count(len(classes), "core class").capitalize()}')
            for cls in classes:
                lines.append(f'* {cls}')
        else:
            lines.append('*The core is empty.*')
        return render('\n'.join(lines))

    def format_decomposition(self, name, representation):
        lines = [
            f'# Leaf representation of {name}',
            '## Core classes',
        ]
        for cls in sorted(representation.core_classes):
            lines.append(f'* {cls}')
        lines.append('')
        count = branch_count(representation)
        lines.append(f'## {self._count(count, "leafy branch").capitalize()}')
        for branch, occurrences in representation.branches:
            lines.append(
                f'* `{branch.code}` at {class_name(branch.attachment_class)}, '
                f'{self._count(occurrences, "occurrence")}, height {branch.height}',
            )
        lines.append('')
        lines.append(f'**max leaf distance:** {max_leaf_distance(representation)}')
        return render('\n'.join(lines))

    def format_family(self, family, directory=None):
        data = family_to_json(family)
        lines = [
            f'# Sibling family of {self._count(family.size, "member")}',
            f'*{family.construction}*',
            '## Members',
        ]
        for member in data['members']:
            lines.append(f'* {member["file"]} ({member["label"]})')
        lines.append('')
        lines.append('## Certificates')
        for certificate in data['certificates']:
            i, j = certificate['pair']
            lines.append(
                f'* {i} / {j}: {certificate["kind"]} '
                f'{certificate["first"]} vs {certificate["second"]}',
            )
        certified = len(data['certificates'])
        uncertified = len(data['uncertified_pairs'])
        lines.append('')
        lines.append(
            f'**{self._count(certified, "certified pair")}, '
            f'{self._count(uncertified, "uncertified pair")}**',
        )
        if directory:
            lines.append(f'Written to `{directory}`.')
        return render('\n'.join(lines))

    def format_verdict(self, name, verdict, directory=None):
        lines = [
            f'# {name}',
            f'**{verdict.outcome}** ({verdict.justification})',
            f'{self._count(verdict.budget_used, "embedding")} tried.',
        ]
        if verdict.note:
            lines.append(f'*{verdict.note}*')
        if verdict.evidence is not None:
            family = verdict.evidence
            where = f' written to `{directory}`' if directory else ''
            lines.append(
                f'Evidence: a certified family of {self._count(family.size, "sibling")}{where}.',
            )
        return render('\n'.join(lines))

    def format_gallery(self, entries, directory):
        lines = [f'# Gallery written to `{directory}`']
        for entry in entries:
            lines.append(
                f'* **{entry.name}**: {entry.description} '
                f'(rank {entry.rank}, {entry.ends})',
            )
        return render('\n'.join(lines))
