#
# This file is part of the arbor-rank project.
#
# Copyright (c) 2026 The arbor-rank developers. All Rights Reserved.
#
from graphviz import Digraph

from arbor.rank.constants import DEFAULT_MAX_VERTICES, DEFAULT_OMEGA_WIDTH
from arbor.rank.presentation import ClassGraph, unfold


CORE_STYLE = {'style': 'filled', 'fillcolor': 'lightblue', 'shape': 'doublecircle'}
TRUNCATED_STYLE = {'style': 'dashed'}


def node_names(unfolded):
    """
    Name every vertex ``state/depth/index`` with ``index`` its position among the
    vertices of the same depth, in breadth-first order.
    """
    names = {}
    positions = {}
    for vertex in unfolded.ordered_vertices():
        depth = len(vertex)
        position = positions.get(depth, 0)
        positions[depth] = position + 1
        names[vertex] = f'{unfolded.state(vertex)}/{depth}/{position}'
    return names


def to_digraph(presentation, depth, width=DEFAULT_OMEGA_WIDTH, max_vertices=DEFAULT_MAX_VERTICES):
    """
    Build the graphviz digraph of the unfolding of ``presentation`` down to
    ``depth``. Core vertices are filled, vertices with omitted children dashed.

    :rtype: graphviz.Digraph
    """
    unfolded = unfold(presentation, depth, width=width, max_vertices=max_vertices)
    classes = ClassGraph(presentation)
    names = node_names(unfolded)
    graph = Digraph('unfolding')
    for vertex in unfolded.ordered_vertices():
        label = unfolded.label(vertex)
        attrs = {}
        if classes.is_core(classes.classify(vertex)):
            attrs.update(CORE_STYLE)
        if label.frontier or label.truncated:
            attrs.update(TRUNCATED_STYLE if 'style' not in attrs else {'penwidth': '2'})
        graph.node(names[vertex], label=label.state, **attrs)
    for vertex in unfolded.ordered_vertices():
        if vertex:
            graph.edge(names[vertex[:-1]], names[vertex])
    return graph


def render_dot(presentation, depth, width=DEFAULT_OMEGA_WIDTH, max_vertices=DEFAULT_MAX_VERTICES):
    return to_digraph(presentation, depth, width=width, max_vertices=max_vertices).source
