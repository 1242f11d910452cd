#
# This file is part of the arbor-rank project.
#
# Copyright (c) 2026 The arbor-rank developers. All Rights Reserved.
#
from arbor.rank.analyzer import analyze, Budget, Outcome, Verdict  # noqa
from arbor.rank.exceptions import ArborError  # noqa
from arbor.rank.logger import AnalysisLogger  # noqa
from arbor.rank.presentation import load, OMEGA, parse_dsl, serialize, TreePresentation  # noqa
from arbor.rank.pruning import end_category, EndCategory, rank_of_presentation, RankValue  # noqa
