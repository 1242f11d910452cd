#
# This file is part of the arbor-rank project.
#
# Copyright (c) 2026 The arbor-rank developers. All Rights Reserved.
#
CONFIG_ENV_VARIABLE = 'ARBOR_RANK_CONFIG'

DEFAULT_DEPTH = 12
DEFAULT_OMEGA_WIDTH = 3
DEFAULT_BUDGET_DEPTH = 10
DEFAULT_MAX_VERTICES = 100000

PRUNING_CAP = 2

OUTPUT_FORMATS = ('text', 'json', 'dot')
