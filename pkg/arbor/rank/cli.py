#
# This file is part of the arbor-rank project.
#
# Copyright (c) 2026 The arbor-rank developers. All Rights Reserved.
#
import argparse
import json
import os
import sys

from arbor.rank.analyzer import analyze, check_condition1
from arbor.rank.config import build_config
from arbor.rank.constants import OUTPUT_FORMATS
from arbor.rank.decomposition import leaf_representation
from arbor.rank.exceptions import ArborError, EvidenceMissingError, EXIT_VALIDATION_ERROR
from arbor.rank.formatter import decomposition_report, rank_report, ReportFormatter
from arbor.rank.logger import AnalysisLogger
from arbor.rank.presentation import dump, load
from arbor.rank.render import render_dot
from arbor.rank.siblings import (
    branch_swap_family,
    family_to_json,
    gallery,
    leafless_family,
    path_attach_family,
    pendant_family,
    write_family,
)
from arbor.rank.version import version_banner


FAMILIES = ('leafless', 'path-attach', 'branch-swap', 'star')

EXIT_OK = 0
EXIT_USAGE = 1


def _common_options():
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument('--format', choices=OUTPUT_FORMATS, default=None)
    parser.add_argument('--depth', type=int, default=None, help='unfolding and witness depth')
    parser.add_argument(
        '--width',
        type=int,
        default=None,
        help='materialised copies of omega entries',
    )
    parser.add_argument('--budget-depth', type=int, default=None, dest='budget_depth')
    parser.add_argument('--max-vertices', type=int, default=None, dest='max_vertices')
    parser.add_argument('--verbose', action='store_true', default=None)
    return parser


def build_parser():
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog='arbor-rank',
        description='Rank, decompose and find siblings of regularly presented trees.',
    )
    parser.add_argument('--version', action='version', version=version_banner())
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    rank = commands.add_parser('rank', parents=[common], help='compute the rank')
    rank.add_argument('files', nargs='+')

    decompose = commands.add_parser(
        'decompose',
        parents=[common],
        help='split into core and leafy branches',
    )
    decompose.add_argument('files', nargs='+')

    siblings = commands.add_parser('siblings', parents=[common], help='generate siblings')
    siblings.add_argument('file')
    siblings.add_argument('--family', choices=FAMILIES, required=True)
    siblings.add_argument('--count', type=int, default=3)
    siblings.add_argument('--offset', type=int, default=0)
    siblings.add_argument('--out')
    siblings.add_argument('--branch', help='shape code of the branch to replace')
    siblings.add_argument('--shape', action='append', default=[], help='replacing shape file')
    siblings.add_argument('--state', help='state receiving the new leaves')

    render = commands.add_parser('render', parents=[common], help='DOT of the unfolding')
    render.add_argument('file')

    analyze_ = commands.add_parser('analyze', parents=[common], help='count siblings')
    analyze_.add_argument('files', nargs='+')
    analyze_.add_argument('--out', help='directory receiving the evidence family')

    gallery_ = commands.add_parser('gallery', parents=[common], help='write the example trees')
    gallery_.add_argument('directory')
    return parser


class Runner:

    def __init__(self, config, options, out):
        self._config = config
        self._options = options
        self._out = out
        self._formatter = ReportFormatter()
        self._logger = AnalysisLogger(file=sys.stderr) if config.verbose else None

    @property
    def json(self):
        return self._config.output_format == 'json'

    def emit(self, value):
        if isinstance(value, dict):
            value = json.dumps(value, indent=2)
        print(value, file=self._out)

    def run(self):
        handler = getattr(self, f'cmd_{self._config.command}')
        return handler()

    def cmd_rank(self):
        for path in self._config.paths:
            presentation = load(path)
            if self.json:
                self.emit(rank_report(presentation))
            else:
                self.emit(self._formatter.format_rank(path, presentation))

    def cmd_decompose(self):
        for path in self._config.paths:
            representation = leaf_representation(load(path))
            if self.json:
                self.emit(decomposition_report(representation))
            else:
                self.emit(self._formatter.format_decomposition(path, representation))

    def _branch_swap(self, presentation):
        options = self._options
        if options.shape:
            representation = leaf_representation(presentation)
            branch = options.branch or representation.branches[0][0].code
            shapes = [load(path) for path in options.shape]
        else:
            evidence = check_condition1(presentation, self._options.count)
            if evidence is None or evidence.branch is None:
                raise EvidenceMissingError('no leafy branch with rooted siblings was found')
            branch, shapes = evidence.branch, evidence.shapes
        return branch_swap_family(
            presentation,
            branch,
            shapes,
            n_max=options.count,
            depth=self._config.depth,
            width=self._config.width,
            logger=self._logger,
        )

    def _pendant(self, presentation):
        state = self._options.state
        if state is None:
            evidence = check_condition1(presentation)
            if evidence is None or evidence.branch is not None:
                raise EvidenceMissingError('no state with rooted siblings was found')
            state = evidence.state
        return pendant_family(
            presentation,
            state,
            self._options.count,
            depth=self._config.depth,
            width=self._config.width,
            logger=self._logger,
        )

    def cmd_siblings(self):
        options = self._options
        presentation = load(self._config.paths[0])
        kwargs = {
            'n_max': options.count,
            'depth': self._config.depth,
            'width': self._config.width,
            'offset': options.offset,
            'logger': self._logger,
        }
        if options.family == 'leafless':
            family = leafless_family(presentation, **kwargs)
        elif options.family == 'path-attach':
            family = path_attach_family(presentation, **kwargs)
        elif options.family == 'branch-swap':
            family = self._branch_swap(presentation)
        else:
            family = self._pendant(presentation)
        if options.out:
            write_family(family, options.out)
        if self.json:
            self.emit(family_to_json(family))
        else:
            self.emit(self._formatter.format_family(family, options.out))

    def cmd_render(self):
        self.emit(
            render_dot(
                load(self._config.paths[0]),
                self._config.depth,
                width=self._config.width,
                max_vertices=self._config.budget.max_vertices,
            ).rstrip('\n'),
        )

    def cmd_analyze(self):
        out = self._options.out
        for position, path in enumerate(self._config.paths):
            verdict = analyze(
                load(path),
                budget=self._config.budget,
                depth=self._config.depth,
                width=self._config.width,
                logger=self._logger,
            )
            directory = None
            if out and verdict.evidence is not None:
                directory = out if len(self._config.paths) == 1 else os.path.join(
                    out,
                    f'{position:02d}',
                )
                write_family(verdict.evidence, directory)
            if self.json:
                self.emit(verdict.to_json())
            else:
                self.emit(self._formatter.format_verdict(path, verdict, directory))

    def cmd_gallery(self):
        directory = self._options.directory
        os.makedirs(directory, exist_ok=True)
        entries = list(gallery().values())
        for entry in entries:
            dump(entry.presentation, os.path.join(directory, f'{entry.name}.tree'))
        if self.json:
            self.emit({entry.name: f'{entry.name}.tree' for entry in entries})
        else:
            self.emit(self._formatter.format_gallery(entries, directory))


def main(argv=None, out=None, err=None):
    """
    Run the command line and return its exit code.
    """
    out = out or sys.stdout
    err = err or sys.stderr
    options = build_parser().parse_args(argv)
    paths = getattr(options, 'files', None) or (
        [options.file] if getattr(options, 'file', None) else []
    )
    flags = {
        'depth': options.depth,
        'width': options.width,
        'budget_depth': options.budget_depth,
        'max_vertices': options.max_vertices,
        'format': options.format,
        'verbose': options.verbose,
    }
    if options.command == 'render':
        flags['format'] = 'dot'
    try:
        config = build_config(options.command, paths, **flags)
    except ValueError as e:
        print(f'error: {e}', file=err)
        return EXIT_VALIDATION_ERROR
    except OSError as e:
        print(f'error: {e}', file=err)
        return EXIT_USAGE
    if config.output_format == 'dot' and options.command != 'render':
        print('error: the dot format is only available for render', file=err)
        return EXIT_USAGE
    try:
        Runner(config, options, out=out).run()
    except ArborError as e:
        print(f'error: {e}', file=err)
        return e.exit_code
    except ValueError as e:
        print(f'error: {e}', file=err)
        return EXIT_VALIDATION_ERROR
    except OSError as e:
        print(f'error: {e}', file=err)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
