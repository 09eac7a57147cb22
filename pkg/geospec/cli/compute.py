#
# SPDX-License-Identifier: MIT
#

import time

from ..analysis import compute_rows, write_rows
from .common import Run, RunConfig

HELP = 'Compute AIndx, RSI, RCI and the quadrant of every region.'

DESCRIPTION = """
Reads the long-format dataset given by --input, takes the reference totals
from --reference (or sums them over all regions of --input), and writes one
row per region with baseline output to indicators.<fmt> under --out-dir,
ordered by descending RSI and then NUTS code. Regions without baseline output
are logged and skipped. run.json records the effective configuration, the
dataset row counts and where the reference totals came from.

Examples:

$ geospec compute --input ai_nuts3.csv --out-dir out/
$ geospec compute --input ai_nuts3.csv --reference eu27.csv \\
    --baseline ALL --format csv,parquet --out-dir out/
"""


def attach_args(parser):
  return parser


def run_compute(run):
  start = time.time()
  rows = compute_rows(run.records, run.analysis_config())
  print('Computed indicators for {} of {} regions in {:.2f} s'.format(
      len(rows), len(run.records),
      time.time() - start))
  run.add_outputs(
      write_rows(rows, run.outdir, run.config.table_formats,
                         stem='indicators'))
  run.meta['rows'] = {
      'indicator_rows': len(rows),
      'skipped_regions': len(run.records) - len(rows),
  }
  return rows


def main(args):
  run = Run(RunConfig(args))
  run_compute(run)
  run.write_metadata()
  return 0
