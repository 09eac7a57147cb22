#
# SPDX-License-Identifier: MIT
#
""" Activity Index, Relative Specialization Index, Relative Citation Impact
and the four-quadrant regional profile.

All ratios are formed from exact integer products and divided once, so
scaling every count by the same factor gives bit-identical results.
"""

import enum
import math
import numbers

import numpy as np

from .errors import (DegenerateReference, InconsistentCounts, OutOfDomain,
                     UndefinedImpact, ZeroRegionOutput)
from .types import (QuadrantProfile, RciValue, UNDEFINED_RCI, FieldCounts,
                    check_count)

_BELOW_ONE = float(np.nextafter(1.0, 0.0))


class RsiValue(float):
  """ RSI in [-1, 1) that also remembers its distance to +1.

  Close to the upper bound the float itself cannot tell large activity
  indices apart, so `upper_gap` (1 - rsi, computed as 2 / (aindx + 1)) is
  kept at full precision and used when inverting.
  """

  def __new__(cls, value, upper_gap=None):
    self = super().__new__(cls, value)
    self.upper_gap = (1.0 - float(value)) if upper_gap is None else upper_gap
    return self

  def __getnewargs__(self):
    return (float(self), self.upper_gap)

  def __repr__(self):
    return 'RsiValue({})'.format(float.__repr__(self))


class Interpretation(enum.Enum):
  SPECIALIZED = 'Specialized'
  NEUTRAL = 'Neutral'
  UNDER_SPECIALIZED = 'UnderSpecialized'


def _check_finite_activity(aindx):
  if not isinstance(aindx, numbers.Real):
    raise OutOfDomain('activity index must be a real number, got {!r}'.format(
        aindx))
  if not math.isfinite(aindx) or aindx < 0:
    raise OutOfDomain(
        'activity index must be finite and >= 0, got {}'.format(aindx))
  return float(aindx)


def field_shares(region_focal_docs, region_total_docs):
  region_focal_docs = check_count('region_focal_docs', region_focal_docs)
  region_total_docs = check_count('region_total_docs', region_total_docs)
  if region_total_docs == 0:
    raise ZeroRegionOutput('region has no output in the baseline field')
  if region_focal_docs > region_total_docs:
    raise InconsistentCounts('focal docs ({}) exceed total docs ({})'.format(
        region_focal_docs, region_total_docs))
  return region_focal_docs / region_total_docs


def activity_index(region_focal_docs, region_total_docs, reference_focal_docs,
                   reference_total_docs):
  region_focal_docs = check_count('region_focal_docs', region_focal_docs)
  region_total_docs = check_count('region_total_docs', region_total_docs)
  reference_focal_docs = check_count('reference_focal_docs',
                                      reference_focal_docs)
  reference_total_docs = check_count('reference_total_docs',
                                      reference_total_docs)
  if reference_total_docs == 0 or reference_focal_docs == 0:
    raise DegenerateReference(
        'reference share is undefined (focal docs {}, total docs {})'.format(
            reference_focal_docs, reference_total_docs))
  if region_total_docs == 0:
    raise ZeroRegionOutput('region has no output in the baseline field')
  if region_focal_docs > region_total_docs:
    raise InconsistentCounts(
        'region focal docs ({}) exceed region total docs ({})'.format(
            region_focal_docs, region_total_docs))
  if reference_focal_docs > reference_total_docs:
    raise InconsistentCounts(
        'reference focal docs ({}) exceed reference total docs ({})'.format(
            reference_focal_docs, reference_total_docs))
  return ((region_focal_docs * reference_total_docs) /
          (region_total_docs * reference_focal_docs))


def rsi_from_activity(aindx):
  aindx = _check_finite_activity(aindx)
  value = (aindx - 1.0) / (aindx + 1.0)
  upper_gap = 2.0 / (aindx + 1.0)
  # Huge activity indices round to 1.0; the index never reaches +1.
  if value >= 1.0:
    value = _BELOW_ONE
  return RsiValue(value, upper_gap)


def activity_from_rsi(rsi):
  if not isinstance(rsi, numbers.Real) or math.isnan(rsi):
    raise OutOfDomain('RSI must be a real number, got {!r}'.format(rsi))
  if rsi < -1.0 or rsi >= 1.0:
    raise OutOfDomain('RSI must lie in [-1, 1), got {}'.format(rsi))
  gap = getattr(rsi, 'upper_gap', None)
  if gap is None:
    gap = 1.0 - float(rsi)
  if gap <= 0.0:
    raise OutOfDomain('RSI must lie in [-1, 1), got {}'.format(rsi))
  return (2.0 - gap) / gap


def interpret_rsi(rsi, tol=0.0):
  if abs(rsi) <= tol:
    return Interpretation.NEUTRAL
  if rsi > 0:
    return Interpretation.SPECIALIZED
  return Interpretation.UNDER_SPECIALIZED


def relative_citation_impact(region_focal_cites, region_focal_docs,
                             reference_focal_cites, reference_focal_docs):
  region_focal_cites = check_count('region_focal_cites', region_focal_cites)
  region_focal_docs = check_count('region_focal_docs', region_focal_docs)
  reference_focal_cites = check_count('reference_focal_cites',
                                       reference_focal_cites)
  reference_focal_docs = check_count('reference_focal_docs',
                                      reference_focal_docs)
  if reference_focal_docs == 0 or reference_focal_cites == 0:
    raise DegenerateReference(
        'reference citation mean is zero or undefined (cites {}, docs {})'.
        format(reference_focal_cites, reference_focal_docs))
  if region_focal_docs == 0:
    if region_focal_cites > 0:
      raise InconsistentCounts(
          'region has {} focal cites but no focal docs'.format(
              region_focal_cites))
    return UNDEFINED_RCI
  return RciValue(
      (region_focal_cites * reference_focal_docs) /
      (region_focal_docs * reference_focal_cites),
      True,
  )


def _rci_number(rci):
  if isinstance(rci, RciValue):
    if not rci.defined:
      raise UndefinedImpact('RCI is undefined (no focal publications)')
    return rci.value
  if rci is None:
    raise UndefinedImpact('RCI is undefined (no focal publications)')
  if not isinstance(rci, numbers.Real) or math.isnan(rci):
    raise OutOfDomain('RCI must be a real number, got {!r}'.format(rci))
  return rci


def classify_quadrant(rsi, rci):
  rci = _rci_number(rci)
  if not isinstance(rsi, numbers.Real) or math.isnan(rsi):
    raise OutOfDomain('RSI must be a real number, got {!r}'.format(rsi))
  if rsi == 0 or rci == 1:
    return QuadrantProfile.BOUNDARY
  if rsi > 0:
    if rci > 1:
      return QuadrantProfile.SPECIALIZED_HIGH_IMPACT
    return QuadrantProfile.SPECIALIZED_LOW_IMPACT
  if rci > 1:
    return QuadrantProfile.UNSPECIALIZED_HIGH_IMPACT
  return QuadrantProfile.UNSPECIALIZED_LOW_IMPACT


def indicators_for(focal, baseline, reference_focal, reference_baseline):
  """ Returns (aindx, rsi, rci) for one region.

  `focal` and `baseline` are the region's FieldCounts, the reference pair
  holds the benchmark population's FieldCounts for the same levels.
  """
  aindx = activity_index(focal.docs, baseline.docs, reference_focal.docs,
                         reference_baseline.docs)
  rsi = rsi_from_activity(aindx)
  rci = relative_citation_impact(focal.cites, focal.docs,
                                 reference_focal.cites, reference_focal.docs)
  return aindx, rsi, rci


__all__ = [
    'FieldCounts',
    'Interpretation',
    'RsiValue',
    'activity_from_rsi',
    'activity_index',
    'classify_quadrant',
    'field_shares',
    'indicators_for',
    'interpret_rsi',
    'relative_citation_impact',
    'rsi_from_activity',
]
