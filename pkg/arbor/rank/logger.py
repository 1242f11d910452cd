#
# This file is part of the arbor-rank project.
#
# Copyright (c) 2026 The arbor-rank developers. All Rights Reserved.
#
import json
import sys


class AnalysisLogger:
    def __init__(self, file=sys.stderr):
        self._file = file

    def log_step(self, title, **details):
        lines = [f'--- {title} ---']

        for k, v in details.items():
            lines.append(f'{k}: {v}')

        lines.append('')

        print(*lines, sep='\n', file=self._file)

    def log_result(self, title, value):
        lines = [f'--- {title} ---']

        if isinstance(value, (dict, list)):
            lines.append(json.dumps(value, indent=4, sort_keys=True, default=str))
        else:
            lines.append(str(value))

        lines.append('')

        print(*lines, sep='\n', file=self._file)
