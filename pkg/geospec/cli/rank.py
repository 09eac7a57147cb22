#
# SPDX-License-Identifier: MIT
#

from ..analysis import (compare_with_published, compute_rows, rank_rsi,
                        write_rows)
from ..analysis.ranking import regions_meeting
from ..dataset import load_published_ranking
from ..log import get_logger
from ..types import ALL, COMPU
from .common import Run, RunConfig

logger = get_logger(__name__)

HELP = 'Rank regions by RSI among those with enough baseline output.'

DESCRIPTION = """
Writes the --top regions by descending RSI (ties broken by NUTS code) among
the regions with at least --min-baseline-docs baseline documents to
ranking.<fmt> under --out-dir.

With the built-in levels, the ranking is computed against both the COMPU and
the ALL baseline and each is compared with the bundled published top-20
ranking. Both comparisons keep the regions with at least --min-baseline-docs
documents in the configured baseline, so only the RSI denominator differs.
run.json records every comparison with its threshold level and names the
baseline(s) whose ranking matches the published one within tolerance.

Examples:

$ geospec rank --input ai_nuts3.csv --out-dir out/
$ geospec rank --input ai_nuts3.csv --top 50 --min-baseline-docs 500
"""

_ALTERNATE_BASELINE = {COMPU: ALL, ALL: COMPU}


def attach_args(parser):
  defaults = {'--top': 20}
  parser.add_argument(
      '--top',
      type=int,
      default=defaults['--top'],
      help='Number of regions in the ranking. Default: {}'.format(
          defaults['--top']),
  )
  return parser


def _comparison_to_dict(comparison, threshold_level, min_docs):
  d = comparison._asdict()
  d['matched'] = len(comparison.matched)
  d['threshold_level'] = threshold_level
  d['min_threshold_docs'] = min_docs
  return d


def compare_baselines(run, published):
  """ Compares the ranking for the configured and the alternate baseline.

  Membership always follows --min-baseline-docs on the configured baseline,
  so the alternate comparison changes the RSI denominator only.
  """
  threshold_level = run.config.baseline
  eligible = regions_meeting(run.records, threshold_level,
                             run.config.min_baseline_docs)
  baselines = [run.config.baseline]
  alternate = _ALTERNATE_BASELINE.get(run.config.baseline)
  if alternate is not None and alternate != run.config.focal:
    baselines.append(alternate)
  comparisons = {}
  for baseline in baselines:
    reference = run.reference_for((run.config.focal, baseline))
    if reference is None:
      logger.info('No {} reference totals; skipping the {} baseline '
                  'comparison'.format(baseline, baseline))
      continue
    config = run.analysis_config(reference=reference,
                                 baseline=baseline,
                                 min_baseline_docs=0)
    rows = [r for r in compute_rows(run.records, config) if r.nuts in eligible]
    ranked = rank_rsi(rows, config, len(published))
    comparisons[baseline] = compare_with_published(ranked, published)
  return threshold_level, comparisons


def main(args):
  run = Run(RunConfig(args))
  config = run.analysis_config()
  ranked = rank_rsi(compute_rows(run.records, config), config, run.config.top)
  run.add_outputs(
      write_rows(ranked, run.outdir, run.config.table_formats,
                 stem='ranking'))
  print('Ranked {} regions'.format(len(ranked)))

  threshold_level, comparisons = compare_baselines(run,
                                                   load_published_ranking())
  matched = sorted(b for b, c in comparisons.items() if c.within_tolerance)
  for baseline, comparison in sorted(comparisons.items()):
    print('{} baseline: {} of {} published regions found, max |RSI diff| {}'
          ', {}'.format(
              baseline, len(comparison.matched),
              len(comparison.matched) + len(comparison.missing),
              comparison.max_abs_diff,
              'matches' if comparison.within_tolerance else 'does not match'))
  run.meta['ranking'] = {
      'rows': len(ranked),
      'published_comparison': {
          b: _comparison_to_dict(c, threshold_level,
                                 run.config.min_baseline_docs)
          for b, c in comparisons.items()
      },
      'matched_baselines': matched,
  }
  run.write_metadata()
  return 0
