#
# SPDX-License-Identifier: MIT
#

import csv
import io
import os
import re
from collections import namedtuple

from ..errors import (DuplicateKey, InputError, MalformedRow, NestingViolation)
from ..log import get_logger
from ..types import (AI, ALL, COMPU, FieldCounts, Provenance, ReferenceTotals,
                     RegionRecord, level_sort_key, parse_level)
from ..utils import read_text
from .nuts import country_of, parse_nuts

DATASET_HEADER = ('nuts_code', 'region_name', 'country', 'level', 'docs',
                  'cites')
REFERENCE_HEADER = ('level', 'docs', 'cites')

# (inner, outer) pairs checked whenever a region carries both levels. AI is
# checked against ALL directly so that a missing COMPU row does not hide it.
NESTED_PAIRS = ((AI, COMPU), (COMPU, ALL), (AI, ALL))

_COUNT = re.compile(r'^[0-9]+$')

_PUBLISHED_RANKING = os.path.join(os.path.dirname(os.path.dirname(__file__)),
                                  'data', 'published_ranking.csv')

PublishedEntry = namedtuple('PublishedEntry',
                            ['rank', 'name', 'country', 'nuts', 'rsi', 'note'])

logger = get_logger(__name__)


def _parse_count(field, value):
  value = value.strip()
  if not _COUNT.match(value):
    raise MalformedRow('{} must be a base-10 non-negative integer, got '
                       '{!r}'.format(field, value))
  return int(value)


def _parse_counts(docs, cites):
  docs = _parse_count('docs', docs)
  cites = _parse_count('cites', cites)
  try:
    return FieldCounts(docs, cites)
  except InputError as e:
    raise MalformedRow(e.message) from None


def _rows(text, header, name):
  """ Yields (line number, fields) for every non-blank data row after checking
  the header. Line numbers are physical, 1-based, and point at the last line
  of a row that spans several lines through quoting.
  """
  reader = csv.reader(io.StringIO(text, newline=''), strict=True)
  try:
    first = next(reader, None)
    if first is None:
      return
    if tuple(c.strip() for c in first) != header:
      raise MalformedRow(
          'expected header {!r}, got {!r}'.format(','.join(header),
                                                  ','.join(first)),
          path=name,
          line=reader.line_num,
      )
    for fields in reader:
      if len(fields) == 0 or (len(fields) == 1 and not fields[0].strip()):
        continue
      if len(fields) != len(header):
        raise MalformedRow(
            'expected {} columns, got {}'.format(len(header), len(fields)),
            path=name,
            line=reader.line_num,
        )
      yield reader.line_num, fields
  except csv.Error as e:
    raise MalformedRow('unreadable CSV: {}'.format(e),
                       path=name,
                       line=reader.line_num) from None


def _read(source):
  try:
    return read_text(source)
  except UnicodeDecodeError as e:
    raise MalformedRow('input is not valid UTF-8 ({})'.format(e),
                       path=getattr(source, 'name', None)) from None


def _check_nesting(nuts, counts, lines, name):
  for inner, outer in NESTED_PAIRS:
    if inner in counts and outer in counts:
      if counts[inner].docs > counts[outer].docs:
        raise NestingViolation(
            '{}: {} docs ({}) exceed {} docs ({})'.format(
                nuts, inner, counts[inner].docs, outer, counts[outer].docs),
            path=name,
            line=max(lines[inner], lines[outer]),
        )


def parse_dataset(source):
  """ Parses the long-format region x level CSV into RegionRecords sorted by
  NUTS code.
  """
  text, name = _read(source)
  regions = {}
  num_rows = 0
  for line, fields in _rows(text, DATASET_HEADER, name):
    try:
      nuts = parse_nuts(fields[0])
      region_name = fields[1].strip()
      country = fields[2].strip() or country_of(nuts)
      try:
        level = parse_level(fields[3])
      except InputError:
        raise MalformedRow('level must be a non-empty token') from None
      counts = _parse_counts(fields[4], fields[5])
    except InputError as e:
      raise e.located(path=name, line=line)
    num_rows += 1

    region = regions.get(nuts)
    if region is None:
      region = regions[nuts] = {
          'name': region_name,
          'country': country,
          'counts': {},
          'lines': {},
      }
    elif (region['name'], region['country']) != (region_name, country):
      raise MalformedRow(
          '{} is named {!r} ({}) on line {} but {!r} ({}) here'.format(
              nuts, region['name'], region['country'],
              min(region['lines'].values()), region_name, country),
          path=name,
          line=line,
      )
    if level in region['counts']:
      raise DuplicateKey(
          '{} level {} already given on line {}'.format(
              nuts, level, region['lines'][level]),
          path=name,
          line=line,
      )
    region['counts'][level] = counts
    region['lines'][level] = line

  records = []
  for nuts in sorted(regions):
    region = regions[nuts]
    _check_nesting(nuts, region['counts'], region['lines'], name)
    records.append(
        RegionRecord(nuts, region['name'], region['country'],
                     region['counts']))
  logger.info('Parsed {} rows into {} regions from {}'.format(
      num_rows, len(records), name))
  return records


def load_reference(source):
  """ Reads externally supplied reference totals (`level,docs,cites`).

  An empty file yields empty totals; asking them for a level then raises
  MissingLevel.
  """
  text, name = _read(source)
  counts, lines = {}, {}
  for line, fields in _rows(text, REFERENCE_HEADER, name):
    try:
      try:
        level = parse_level(fields[0])
      except InputError:
        raise MalformedRow('level must be a non-empty token') from None
      level_counts = _parse_counts(fields[1], fields[2])
    except InputError as e:
      raise e.located(path=name, line=line)
    if level in counts:
      raise DuplicateKey('level {} already given on line {}'.format(
          level, lines[level]),
                         path=name,
                         line=line)
    counts[level] = level_counts
    lines[level] = line
  logger.info('Loaded reference totals for levels {} from {}'.format(
      sorted(counts, key=level_sort_key), name))
  return ReferenceTotals(counts, Provenance.SUPPLIED_EXTERNALLY)


def _open_sink(sink):
  if isinstance(sink, (str, os.PathLike)):
    return open(sink, 'w', encoding='utf-8', newline=''), True
  return sink, False


def write_dataset(records, sink):
  f, should_close = _open_sink(sink)
  try:
    writer = csv.writer(f, lineterminator='\n')
    writer.writerow(DATASET_HEADER)
    for record in sorted(records, key=lambda r: r.nuts):
      for level in record.levels:
        counts = record.get(level)
        writer.writerow([
            record.nuts, record.name, record.country, level, counts.docs,
            counts.cites
        ])
  finally:
    if should_close:
      f.close()


def write_reference(totals, sink):
  f, should_close = _open_sink(sink)
  try:
    writer = csv.writer(f, lineterminator='\n')
    writer.writerow(REFERENCE_HEADER)
    for level in totals.levels:
      counts = totals.get(level)
      writer.writerow([level, counts.docs, counts.cites])
  finally:
    if should_close:
      f.close()


def load_published_ranking(path=_PUBLISHED_RANKING):
  """ Reads the published top-20 RSI table with its name -> NUTS mapping. """
  with open(path, 'r', encoding='utf-8', newline='') as f:
    reader = csv.DictReader(f)
    entries = [
        PublishedEntry(
            int(row['rank']),
            row['region_name'],
            row['country'],
            parse_nuts(row['nuts_code']),
            float(row['rsi']),
            row['note'],
        ) for row in reader
    ]
  return sorted(entries, key=lambda e: e.rank)
