#
# SPDX-License-Identifier: MIT
#

import functools

import dask.bag as db

from ..errors import DegenerateReference, InconsistentCounts
from ..indicators import classify_quadrant, indicators_for
from ..log import get_logger
from ..types import IndicatorRow

logger = get_logger(__name__)


def row_sort_key(row):
  return (-float(row.rsi), row.nuts)


def _check_reference(config):
  for level in (config.focal, config.baseline):
    if config.reference.get(level).docs <= 0:
      raise DegenerateReference(
          'reference totals hold no {} documents'.format(level))
  focal = config.reference.get(config.focal)
  baseline = config.reference.get(config.baseline)
  if focal.docs > baseline.docs:
    raise InconsistentCounts('reference {} documents ({}) exceed reference {} '
                             'documents ({})'.format(config.focal, focal.docs,
                                                    config.baseline,
                                                    baseline.docs))


def _row_for_record(record, focal, baseline, reference_focal,
                    reference_baseline):
  """ Returns (row, None) or (None, notice) when the region is skipped. """
  if not record.has(baseline):
    return None, '{} ({}) has no {} counts'.format(record.nuts, record.name,
                                                   baseline)
  if not record.has(focal):
    return None, '{} ({}) has no {} counts'.format(record.nuts, record.name,
                                                   focal)
  focal_counts = record.get(focal)
  baseline_counts = record.get(baseline)
  if baseline_counts.docs == 0:
    return None, '{} ({}) has no {} documents'.format(record.nuts, record.name,
                                                      baseline)
  if focal_counts.docs > baseline_counts.docs:
    return None, ('{} ({}) has more {} documents ({}) than {} documents '
                  '({})'.format(record.nuts, record.name, focal,
                               focal_counts.docs, baseline,
                               baseline_counts.docs))
  aindx, rsi, rci = indicators_for(focal_counts, baseline_counts,
                                   reference_focal, reference_baseline)
  quadrant = classify_quadrant(rsi, rci) if rci.defined else None
  return IndicatorRow(
      nuts=record.nuts,
      name=record.name,
      country=record.country,
      focal_docs=focal_counts.docs,
      focal_cites=focal_counts.cites,
      baseline_docs=baseline_counts.docs,
      aindx=aindx,
      rsi=rsi,
      rci=rci,
      quadrant=quadrant,
  ), None


def compute_rows(records, config):
  """ Evaluates AIndx, RSI, RCI and the quadrant for every eligible region.

  Regions are evaluated as a dask bag on `config.scheduler`; the merged rows
  are ordered by descending RSI, then NUTS code, whatever the scheduling.
  """
  _check_reference(config)
  if len(records) == 0:
    return []
  evaluate = functools.partial(
      _row_for_record,
      focal=config.focal,
      baseline=config.baseline,
      reference_focal=config.reference.get(config.focal),
      reference_baseline=config.reference.get(config.baseline),
  )
  results = db.from_sequence(
      records,
      npartitions=min(config.npartitions, len(records)),
  ).map(evaluate).compute(scheduler=config.scheduler)

  rows = []
  for row, notice in results:
    if row is None:
      logger.info('Skipping region: {}'.format(notice))
    else:
      rows.append(row)
  logger.info('Computed {} indicator rows ({} / {}) from {} regions'.format(
      len(rows), config.focal, config.baseline, len(records)))
  return sorted(rows, key=row_sort_key)
