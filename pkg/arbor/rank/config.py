#
# This file is part of the arbor-rank project.
#
# Copyright (c) 2026 The arbor-rank developers. All Rights Reserved.
#
import os

import yaml

from arbor.rank.analyzer import Budget
from arbor.rank.constants import (
    CONFIG_ENV_VARIABLE,
    DEFAULT_BUDGET_DEPTH,
    DEFAULT_DEPTH,
    DEFAULT_MAX_VERTICES,
    DEFAULT_OMEGA_WIDTH,
    OUTPUT_FORMATS,
)


_DEFAULTS = {
    'depth': DEFAULT_DEPTH,
    'width': DEFAULT_OMEGA_WIDTH,
    'budget_depth': DEFAULT_BUDGET_DEPTH,
    'max_vertices': DEFAULT_MAX_VERTICES,
    'format': 'text',
    'verbose': False,
}


class RunConfig:
    """
    The settings of one command line run.
    """

    def __init__(
        self,
        command,
        paths=(),
        depth=DEFAULT_DEPTH,
        width=DEFAULT_OMEGA_WIDTH,
        budget=None,
        output_format='text',
        verbose=False,
    ):
        """
        :param command: the sub-command.
        :type command: str
        :param paths: the input files, processed in order.
        :type paths: list
        :param depth: the depth of unfoldings and witnesses.
        :type depth: int
        :param width: the number of materialised copies of ``OMEGA`` entries.
        :type width: int
        :param budget: the embedding search budget, defaults to ``Budget()``.
        :type budget: Budget, optional
        :param output_format: one of ``text``, ``json`` or ``dot``.
        :type output_format: str
        :raises ValueError: if ``depth`` is negative, ``width`` is not positive or the
                            format is unknown.
        """
        if not isinstance(depth, int) or depth < 0:
            raise ValueError('`depth` must be a non-negative integer.')
        if not isinstance(width, int) or width < 1:
            raise ValueError('`width` must be a positive integer.')
        if output_format not in OUTPUT_FORMATS:
            raise ValueError(f'`output_format` must be one of {", ".join(OUTPUT_FORMATS)}.')
        self._command = command
        self._paths = tuple(paths)
        self._depth = depth
        self._width = width
        self._budget = budget or Budget()
        self._output_format = output_format
        self._verbose = verbose

    @property
    def command(self):
        return self._command

    @property
    def paths(self):
        return self._paths

    @property
    def depth(self):
        return self._depth

    @property
    def width(self):
        return self._width

    @property
    def budget(self):
        return self._budget

    @property
    def output_format(self):
        return self._output_format

    @property
    def verbose(self):
        return self._verbose

    def __repr__(self):
        return f'<RunConfig {self._command} depth={self._depth} width={self._width}>'


def load_file_settings(path=None):
    """
    Read the YAML settings file named by ``path`` or by the ``ARBOR_RANK_CONFIG``
    environment variable.

    :return: the settings, empty when no file is configured.
    :rtype: dict
    """
    path = path or os.environ.get(CONFIG_ENV_VARIABLE)
    if not path:
        return {}
    with open(path, 'r') as f:
        settings = yaml.safe_load(f) or {}
    if not isinstance(settings, dict):
        raise ValueError(f'`{path}` must contain a mapping of settings.')
    unknown = set(settings) - set(_DEFAULTS)
    if unknown:
        raise ValueError(f'unknown settings in `{path}`: {", ".join(sorted(unknown))}.')
    return settings


def build_config(command, paths=(), **flags):
    """
    Merge command line flags, the settings file and the defaults, in this order
    of precedence. Flags set to None are ignored.

    :rtype: RunConfig
    """
    settings = dict(_DEFAULTS)
    settings.update(load_file_settings())
    settings.update({k: v for k, v in flags.items() if v is not None})
    return RunConfig(
        command,
        paths,
        depth=settings['depth'],
        width=settings['width'],
        budget=Budget(settings['budget_depth'], settings['max_vertices']),
        output_format=settings['format'],
        verbose=settings['verbose'],
    )
