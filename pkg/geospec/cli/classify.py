#
# SPDX-License-Identifier: MIT
#

from ..analysis import (compute_rows, excluded_from_report, quadrant_report,
                        summarize_quadrants, write_rows)
from ..types import QuadrantProfile
from .common import Run, RunConfig

HELP = 'Partition regions into specialization/impact quadrants.'

DESCRIPTION = """
Keeps the regions with at least --min-focal-docs focal documents and a
defined RCI, and assigns each to one of the profiles SpecializedHighImpact
(RSI > 0, RCI > 1), SpecializedLowImpact, UnspecializedHighImpact,
UnspecializedLowImpact, or Boundary when RSI = 0 or RCI = 1 exactly.

Writes quadrants.<fmt> (profile by profile, each by descending RSI) and a
Markdown summary quadrant_report.md under --out-dir.

Example:

$ geospec classify --input ai_nuts3.csv --min-focal-docs 100 --out-dir out/
"""


def attach_args(parser):
  defaults = {'--report-top': 5}
  parser.add_argument(
      '--report-top',
      type=int,
      default=defaults['--report-top'],
      help='Regions listed per profile in quadrant_report.md, by descending '
      'RCI. Default: {}'.format(defaults['--report-top']),
  )
  return parser


def main(args):
  run = Run(RunConfig(args))
  config = run.analysis_config()
  rows = compute_rows(run.records, config)
  report = quadrant_report(rows, config)
  ordered = [row for profile in QuadrantProfile for row in report[profile]]
  run.add_outputs(
      write_rows(ordered, run.outdir, run.config.table_formats,
                 stem='quadrants'))
  with open(run.path('quadrant_report.md'), 'w', encoding='utf-8',
            newline='\n') as f:
    f.write(summarize_quadrants(report, rows, config, top=args.report_top))
  for profile in QuadrantProfile:
    print('{}: {}'.format(profile, len(report[profile])))
  run.meta['quadrants'] = {
      'counts': {str(p): len(report[p]) for p in QuadrantProfile},
      'excluded': len(excluded_from_report(rows, config)),
  }
  run.write_metadata()
  return 0
