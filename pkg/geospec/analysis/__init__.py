#
# SPDX-License-Identifier: MIT
#

from .config import (DEFAULT_BASELINE, DEFAULT_FOCAL, DEFAULT_MIN_BASELINE_DOCS,
                     DEFAULT_MIN_FOCAL_DOCS, AnalysisConfig)
from .ranking import (PublishedComparison, compare_with_published,
                      excluded_from_report, quadrant_report, rank_rsi)
from .report import correlations, summarize_quadrants
from .rows import compute_rows, row_sort_key
from .writers import FORMATS, row_to_record, write_rows
