#
# SPDX-License-Identifier: MIT
#

from collections import namedtuple

from ..errors import OutOfDomain
from ..log import get_logger
from ..types import QuadrantProfile
from .rows import row_sort_key

logger = get_logger(__name__)

PublishedComparison = namedtuple('PublishedComparison', [
    'matched',
    'missing',
    'extra',
    'max_abs_diff',
    'tolerance',
    'within_tolerance',
])


def meets_baseline_threshold(row, config):
  return row.baseline_docs >= config.min_baseline_docs


def meets_focal_threshold(row, config):
  return row.focal_docs >= config.min_focal_docs and row.rci.defined


def regions_meeting(records, level, min_docs):
  """ NUTS codes of the records with at least `min_docs` `level` documents. """
  return {
      r.nuts for r in records if r.has(level) and r.get(level).docs >= min_docs
  }


def rank_rsi(rows, config, top_n):
  if isinstance(top_n, bool) or not isinstance(top_n, int) or top_n <= 0:
    raise OutOfDomain('top_n must be a positive integer, got {!r}'.format(top_n))
  eligible = [r for r in rows if meets_baseline_threshold(r, config)]
  logger.info('{} of {} regions have at least {} {} documents'.format(
      len(eligible), len(rows), config.min_baseline_docs, config.baseline))
  return sorted(eligible, key=row_sort_key)[:top_n]


def quadrant_report(rows, config):
  """ Buckets rows with enough focal output and a defined RCI by quadrant.

  Every profile is present as a key, each bucket ordered like the rows.
  """
  report = {profile: [] for profile in QuadrantProfile}
  for row in sorted(rows, key=row_sort_key):
    if meets_focal_threshold(row, config):
      report[row.quadrant].append(row)
  return report


def excluded_from_report(rows, config):
  return [r for r in rows if not meets_focal_threshold(r, config)]


def compare_with_published(ranked_rows, published, tolerance=0.005):
  """ Compares a ranked table with a published ranking by NUTS code. """
  ranked = {r.nuts: r for r in ranked_rows}
  expected = {e.nuts: e for e in published}
  matched = sorted(set(ranked) & set(expected))
  diffs = [abs(float(ranked[c].rsi) - expected[c].rsi) for c in matched]
  max_abs_diff = max(diffs) if diffs else None
  missing = sorted(set(expected) - set(ranked))
  extra = sorted(set(ranked) - set(expected))
  return PublishedComparison(
      matched=matched,
      missing=missing,
      extra=extra,
      max_abs_diff=max_abs_diff,
      tolerance=tolerance,
      within_tolerance=(not missing and not extra and
                        all(d <= tolerance for d in diffs)),
  )
