#
# SPDX-License-Identifier: MIT
#

from ..errors import ConfigError
from ..types import COMPU, AI, ReferenceTotals, parse_level

DEFAULT_FOCAL = AI
DEFAULT_BASELINE = COMPU
DEFAULT_MIN_BASELINE_DOCS = 200
DEFAULT_MIN_FOCAL_DOCS = 100
SCHEDULERS = ('synchronous', 'threads', 'processes')


class AnalysisConfig:
  """ Focal/baseline field pair, benchmark totals and the two thresholds.

  `min_baseline_docs` drives the ranking (regions below it are left out of
  the top-N table) and `min_focal_docs` drives the quadrant report.
  `scheduler` and `npartitions` are handed to dask when evaluating regions.
  """

  def __init__(
      self,
      reference,
      focal=DEFAULT_FOCAL,
      baseline=DEFAULT_BASELINE,
      min_baseline_docs=DEFAULT_MIN_BASELINE_DOCS,
      min_focal_docs=DEFAULT_MIN_FOCAL_DOCS,
      scheduler='synchronous',
      npartitions=1,
  ):
    if not isinstance(reference, ReferenceTotals):
      raise ConfigError('reference must be ReferenceTotals, got {!r}'.format(
          reference))
    try:
      focal = parse_level(focal)
      baseline = parse_level(baseline)
    except ValueError as e:
      raise ConfigError(str(e)) from None
    if focal == baseline:
      raise ConfigError('focal and baseline levels must differ (both {})'.format(
          focal))
    for name, value in (('min_baseline_docs', min_baseline_docs),
                        ('min_focal_docs', min_focal_docs)):
      if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise ConfigError('{} must be an integer >= 0, got {!r}'.format(
            name, value))
    if scheduler not in SCHEDULERS:
      raise ConfigError('scheduler must be one of {}, got {!r}'.format(
          SCHEDULERS, scheduler))
    if isinstance(npartitions, bool) or not isinstance(npartitions,
                                                       int) or npartitions < 1:
      raise ConfigError('npartitions must be an integer >= 1, got {!r}'.format(
          npartitions))
    self.reference = reference
    self.focal = focal
    self.baseline = baseline
    self.min_baseline_docs = min_baseline_docs
    self.min_focal_docs = min_focal_docs
    self.scheduler = scheduler
    self.npartitions = npartitions

  def replace(self, **kwargs):
    params = self.to_dict()
    params.pop('reference_provenance')
    params['reference'] = self.reference
    params.update(kwargs)
    return AnalysisConfig(**params)

  def to_dict(self):
    return {
        'focal': self.focal,
        'baseline': self.baseline,
        'min_baseline_docs': self.min_baseline_docs,
        'min_focal_docs': self.min_focal_docs,
        'scheduler': self.scheduler,
        'npartitions': self.npartitions,
        'reference_provenance': str(self.reference.provenance),
    }

  def __repr__(self):
    return ('AnalysisConfig(focal={}, baseline={}, min_baseline_docs={}, '
            'min_focal_docs={}, scheduler={}, npartitions={}, '
            'reference={})'.format(
                self.focal,
                self.baseline,
                self.min_baseline_docs,
                self.min_focal_docs,
                self.scheduler,
                self.npartitions,
                self.reference,
            ))
