#
# SPDX-License-Identifier: MIT
#
""" Markdown summary of the quadrant partition.

The correlation figures are descriptive observations on the supplied data;
nothing here tests them.
"""

import math

import pandas as pd

from ..types import QuadrantProfile
from .ranking import excluded_from_report, rank_rsi

_LABELS = {
    QuadrantProfile.SPECIALIZED_HIGH_IMPACT:
        'Specialized, high impact (RSI > 0, RCI > 1)',
    QuadrantProfile.SPECIALIZED_LOW_IMPACT:
        'Specialized, low impact (RSI > 0, RCI < 1)',
    QuadrantProfile.UNSPECIALIZED_HIGH_IMPACT:
        'Unspecialized, high impact (RSI < 0, RCI > 1)',
    QuadrantProfile.UNSPECIALIZED_LOW_IMPACT:
        'Unspecialized, low impact (RSI < 0, RCI < 1)',
    QuadrantProfile.BOUNDARY: 'On a reference line (RSI = 0 or RCI = 1)',
}


def _fmt(x, decimals=3):
  if x is None or (isinstance(x, float) and math.isnan(x)):
    return 'n/a'
  return '{:.{}f}'.format(x, decimals)


def correlations(rows):
  """ Pearson and Spearman correlation of RSI and RCI over `rows`. """
  df = pd.DataFrame({
      'rsi': [float(r.rsi) for r in rows],
      'rci': [r.rci.value for r in rows],
  })
  if len(df) < 2:
    return None, None
  pearson = df['rsi'].corr(df['rci'])
  spearman = df['rsi'].rank().corr(df['rci'].rank())
  return pearson, spearman


def summarize_quadrants(report, rows, config, top=5):
  included = [r for bucket in report.values() for r in bucket]
  excluded = excluded_from_report(rows, config)
  pearson, spearman = correlations(included)

  lines = [
      '# Regional profiles: {} specialization vs. citation impact'.format(
          config.focal),
      '',
      '- focal level: {}; baseline level: {}'.format(config.focal,
                                                      config.baseline),
      '- reference totals: {}'.format(config.reference.provenance),
      '- regions with indicators: {}'.format(len(rows)),
      '- regions with at least {} {} documents and a defined RCI: {}'.format(
          config.min_focal_docs, config.focal, len(included)),
      '- regions left out of the partition: {}'.format(len(excluded)),
      '',
      '| profile | regions |',
      '| --- | ---: |',
  ]
  for profile in QuadrantProfile:
    lines.append('| {} | {} |'.format(_LABELS[profile], len(report[profile])))
  lines.append('')

  for profile in QuadrantProfile:
    bucket = report[profile]
    if not bucket:
      continue
    lines.append('## {}'.format(_LABELS[profile]))
    lines.append('')
    lines.append('| region | country | NUTS | RSI | RCI |')
    lines.append('| --- | --- | --- | ---: | ---: |')
    by_impact = sorted(bucket, key=lambda r: (-r.rci.value, r.nuts))
    for row in by_impact[:top]:
      lines.append('| {} | {} | {} | {} | {} |'.format(row.name, row.country,
                                                       row.nuts,
                                                       _fmt(row.rsi, 3),
                                                       _fmt(row.rci.value, 2)))
    lines.append('')

  lines.append('## Observations')
  lines.append('')
  lines.append('- Pearson correlation of RSI and RCI: {}'.format(
      _fmt(pearson)))
  lines.append('- Spearman rank correlation of RSI and RCI: {}'.format(
      _fmt(spearman)))
  ranked = rank_rsi(rows, config, 20)
  if ranked:
    countries = pd.Series([r.country for r in ranked]).value_counts()
    countries = sorted(countries.items(), key=lambda kv: (-kv[1], kv[0]))
    lines.append('- countries among the {} most specialized regions with at '
                 'least {} {} documents: {}'.format(
                     len(ranked), config.min_baseline_docs, config.baseline,
                     ', '.join('{} ({})'.format(c, n) for c, n in countries)))
  lines.append('')
  return '\n'.join(lines)
