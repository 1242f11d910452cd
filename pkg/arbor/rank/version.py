#
# This file is part of the arbor-rank project.
#
# Copyright (c) 2026 The arbor-rank developers. All Rights Reserved.
#
from pkg_resources import DistributionNotFound, get_distribution


DISTRIBUTION = 'arbor-rank'

# Ranks and sibling families are computed with these.
GRAPH_STACK = ('networkx', 'pyparsing', 'graphviz')

UNKNOWN_VERSION = '0.0.0'


def get_version(distribution=DISTRIBUTION):
    try:
        return get_distribution(distribution).version
    except DistributionNotFound:
        return UNKNOWN_VERSION


def version_banner():
    """
    The ``--version`` line: the version of arbor-rank followed by the versions
    of the graph libraries it runs on.
    """
    stack = ', '.join(f'{name} {get_version(name)}' for name in GRAPH_STACK)
    return f'{DISTRIBUTION} {get_version()} ({stack})'
