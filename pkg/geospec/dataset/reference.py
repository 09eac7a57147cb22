#
# SPDX-License-Identifier: MIT
#

from ..errors import MissingLevel
from ..log import get_logger
from ..types import (ZERO_COUNTS, Provenance, ReferenceTotals, level_sort_key,
                     parse_level)

logger = get_logger(__name__)


def compute_reference(records, levels):
  """ Sums every record's counts per requested level.

  Regions lacking a level contribute nothing to that level's totals. A level
  carried by no record at all is an error.
  """
  levels = sorted({parse_level(l) for l in levels}, key=level_sort_key)
  if len(records) == 0:
    raise MissingLevel('cannot compute reference totals from an empty dataset')
  totals = {}
  for level in levels:
    present = [r.get(level) for r in records if r.has(level)]
    if len(present) == 0:
      raise MissingLevel('level {} occurs in no region record'.format(level))
    total = ZERO_COUNTS
    for counts in present:
      total = total.plus(counts)
    totals[level] = total
    logger.debug('Reference {}: {} docs, {} cites over {} regions'.format(
        level, total.docs, total.cites, len(present)))
  return ReferenceTotals(totals, Provenance.COMPUTED_FROM_DATASET)


def drop_region(records, nuts):
  return [r for r in records if r.nuts != nuts]
