#
# SPDX-License-Identifier: MIT
#

import enum
import numbers
import types
from collections import namedtuple

from .errors import InconsistentCounts, MissingLevel, OutOfDomain

# Built-in thematic levels. AI is nested inside COMPU, which is nested inside
# ALL. Any other non-empty token is accepted as a topic code.
ALL = 'ALL'
COMPU = 'COMPU'
AI = 'AI'

BUILTIN_LEVELS = (ALL, COMPU, AI)

LEVEL_DESCRIPTIONS = {
    ALL: 'All fields',
    COMPU: 'Macro Citation Topic 4 (Electrical Engineering, Electronics & '
           'Computer Science)',
    AI: 'Meso Citation Topic 4.61 (Artificial Intelligence & Machine '
        'Learning)',
}


def parse_level(token):
  level = token.strip() if isinstance(token, str) else None
  if not level:
    raise OutOfDomain('field level must be a non-empty token, got {!r}'.format(
        token))
  return level


def level_sort_key(level):
  if level in BUILTIN_LEVELS:
    return (0, BUILTIN_LEVELS.index(level), '')
  return (1, 0, level)


def check_count(name, n):
  if isinstance(n, bool) or not isinstance(n, numbers.Integral):
    raise OutOfDomain('{} must be an integer count, got {!r}'.format(name, n))
  if n < 0:
    raise OutOfDomain('{} must be non-negative, got {}'.format(name, n))
  return int(n)


class FieldCounts(namedtuple('FieldCounts', ['docs', 'cites'])):
  __slots__ = ()

  def __new__(cls, docs, cites):
    docs = check_count('docs', docs)
    cites = check_count('cites', cites)
    if cites > 0 and docs == 0:
      raise InconsistentCounts(
          'cites ({}) may be positive only when docs > 0'.format(cites))
    return super().__new__(cls, docs, cites)

  def plus(self, other):
    return FieldCounts(self.docs + other.docs, self.cites + other.cites)

  def minus(self, other):
    return FieldCounts(self.docs - other.docs, self.cites - other.cites)


ZERO_COUNTS = FieldCounts(0, 0)


class RciValue(namedtuple('RciValue', ['value', 'defined'])):
  __slots__ = ()

  def __repr__(self):
    if not self.defined:
      return 'RciValue(undefined)'
    return 'RciValue({!r})'.format(self.value)


UNDEFINED_RCI = RciValue(None, False)


class QuadrantProfile(enum.Enum):
  SPECIALIZED_HIGH_IMPACT = 'SpecializedHighImpact'
  SPECIALIZED_LOW_IMPACT = 'SpecializedLowImpact'
  UNSPECIALIZED_HIGH_IMPACT = 'UnspecializedHighImpact'
  UNSPECIALIZED_LOW_IMPACT = 'UnspecializedLowImpact'
  BOUNDARY = 'Boundary'

  def __str__(self):
    return self.value


class Provenance(enum.Enum):
  COMPUTED_FROM_DATASET = 'ComputedFromDataset'
  SUPPLIED_EXTERNALLY = 'SuppliedExternally'

  def __str__(self):
    return self.value


class RegionRecord:
  """ One NUTS-3 region with its document and citation counts per level.

  `counts` is frozen on construction; levels absent from the source data
  are simply missing from the mapping.
  """

  def __init__(self, nuts, name, country, counts):
    self.nuts = nuts
    self.name = name
    self.country = country
    self._counts = types.MappingProxyType(dict(counts))

  @property
  def counts(self):
    return self._counts

  @property
  def levels(self):
    return sorted(self._counts, key=level_sort_key)

  def has(self, level):
    return level in self._counts

  def get(self, level):
    return self._counts.get(level)

  def __eq__(self, other):
    if not isinstance(other, RegionRecord):
      return NotImplemented
    return (self.nuts == other.nuts and self.name == other.name and
            self.country == other.country and
            dict(self._counts) == dict(other._counts))

  def __hash__(self):
    return hash(self.nuts)

  def __reduce__(self):
    return (RegionRecord, (self.nuts, self.name, self.country, dict(
        self._counts)))

  def __repr__(self):
    return 'RegionRecord(nuts={}, name={}, country={}, counts={})'.format(
        self.nuts,
        self.name,
        self.country,
        {l: tuple(self._counts[l]) for l in self.levels},
    )


class ReferenceTotals:

  def __init__(self, counts, provenance):
    self._counts = types.MappingProxyType(dict(counts))
    self.provenance = provenance

  @property
  def counts(self):
    return self._counts

  @property
  def levels(self):
    return sorted(self._counts, key=level_sort_key)

  def get(self, level):
    try:
      return self._counts[level]
    except KeyError:
      raise MissingLevel(
          'reference totals ({}) carry no counts for level {}'.format(
              self.provenance, level)) from None

  def __eq__(self, other):
    if not isinstance(other, ReferenceTotals):
      return NotImplemented
    return (self.provenance == other.provenance and
            dict(self._counts) == dict(other._counts))

  def __reduce__(self):
    return (ReferenceTotals, (dict(self._counts), self.provenance))

  def __repr__(self):
    return 'ReferenceTotals(provenance={}, counts={})'.format(
        self.provenance,
        {l: tuple(self._counts[l]) for l in self.levels},
    )


IndicatorRow = namedtuple('IndicatorRow', [
    'nuts',
    'name',
    'country',
    'focal_docs',
    'focal_cites',
    'baseline_docs',
    'aindx',
    'rsi',
    'rci',
    'quadrant',
])
