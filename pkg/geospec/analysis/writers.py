#
# SPDX-License-Identifier: MIT
#

import json
import os

import pandas as pd
import pyarrow as pa
import pyarrow.parquet as pq

from ..errors import ConfigError
from ..log import get_logger

logger = get_logger(__name__)

COLUMNS = [
    'nuts_code',
    'region_name',
    'country',
    'focal_docs',
    'focal_cites',
    'aindx',
    'rsi',
    'rci',
    'quadrant',
]
DISPLAY_DECIMALS = {
    'aindx': 3,
    'rsi': 3,
    'rci': 2,
}
FORMATS = ('csv', 'json', 'parquet')


def display(value, decimals):
  if value is None:
    return None
  return '{:.{}f}'.format(value, decimals)


def row_to_record(row):
  """ Flattens an IndicatorRow into the exported field names. """
  rci = row.rci.value if row.rci.defined else None
  record = {
      'nuts_code': row.nuts,
      'region_name': row.name,
      'country': row.country,
      'focal_docs': row.focal_docs,
      'focal_cites': row.focal_cites,
      'aindx': float(row.aindx),
      'rsi': float(row.rsi),
      'rci': rci,
      'quadrant': None if row.quadrant is None else str(row.quadrant),
  }
  for field, decimals in DISPLAY_DECIMALS.items():
    record['{}_display'.format(field)] = display(record[field], decimals)
  return record


def _columns():
  return COLUMNS + ['{}_display'.format(f) for f in DISPLAY_DECIMALS]


def _save_csv(records, path):
  df = pd.DataFrame.from_records(records, columns=_columns())
  with open(path, 'w', encoding='utf-8', newline='') as f:
    df.to_csv(f, index=False, na_rep='', lineterminator='\n')


def _save_json(records, path):
  with open(path, 'w', encoding='utf-8', newline='\n') as f:
    json.dump(records, f, indent=2, ensure_ascii=False)
    f.write('\n')


def _save_parquet(records, path):
  schema = pa.schema([
      ('nuts_code', pa.string()),
      ('region_name', pa.string()),
      ('country', pa.string()),
      ('focal_docs', pa.int64()),
      ('focal_cites', pa.int64()),
      ('aindx', pa.float64()),
      ('rsi', pa.float64()),
      ('rci', pa.float64()),
      ('quadrant', pa.string()),
      ('aindx_display', pa.string()),
      ('rsi_display', pa.string()),
      ('rci_display', pa.string()),
  ])
  table = pa.Table.from_pydict(
      {name: [r[name] for r in records] for name in schema.names},
      schema=schema,
  )
  pq.write_table(table, path)


_SAVERS = {
    'csv': _save_csv,
    'json': _save_json,
    'parquet': _save_parquet,
}


def write_rows(rows, outdir, formats=('csv', 'json'), stem='indicators'):
  """ Writes rows as `<stem>.<format>` for every requested format and returns
  the written paths in format order.
  """
  unknown = [f for f in formats if f not in _SAVERS]
  if unknown:
    raise ConfigError('unsupported output format(s) {}; choose from {}'.format(
        unknown, FORMATS))
  records = [row_to_record(r) for r in rows]
  paths = []
  for fmt in formats:
    path = os.path.join(outdir, '{}.{}'.format(stem, fmt))
    _SAVERS[fmt](records, path)
    logger.info('Wrote {} rows to {}'.format(len(records), path))
    paths.append(path)
  return paths
