#
# This file is part of the arbor-rank project.
#
# Copyright (c) 2026 The arbor-rank developers. All Rights Reserved.
#
from arbor.rank.presentation.base import Entry, format_count, OMEGA, TreePresentation  # noqa
from arbor.rank.presentation.classes import (  # noqa
    class_name,
    ClassGraph,
    contains_ray_state,
    degree_count,
    degree_profile,
    entries_code,
    occurrence_count,
    OccurrenceClass,
    shape_code,
    shape_height,
)
from arbor.rank.presentation.dsl import dump, load, parse_dsl, serialize  # noqa
from arbor.rank.presentation.reroot import reroot, Reroot  # noqa
from arbor.rank.presentation.unfold import unfold, UnfoldedTree, VertexLabel  # noqa
