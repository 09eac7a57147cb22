#
# SPDX-License-Identifier: MIT
#

import argparse
import io
import json
import random
import time

from geospec.analysis import (AnalysisConfig, compute_rows, quadrant_report,
                              rank_rsi, write_rows)
from geospec.analysis.config import SCHEDULERS
from geospec.analysis.ranking import meets_focal_threshold
from geospec.dataset import compute_reference, parse_dataset, write_dataset
from geospec.render import (ChoroplethSpec, fig1_spec, fig3_spec, load_geometry,
                            render_choropleth, render_scatter)
from geospec.types import AI, ALL, COMPU, FieldCounts, RegionRecord
from geospec.utils import expand_outdir_and_mkdir


class AverageMeter:
  """
  Computes and stores the average and extreme values after a warmup.
  """

  def __init__(self, warmup=0):
    self.warmup = warmup
    self.reset()

  def reset(self):
    self.avg = 0
    self.max = float('-inf')
    self.min = float('inf')
    self.sum = 0
    self.count = 0
    self.iters = 0

  def update(self, val):
    self.iters += 1
    if self.iters > self.warmup:
      self.sum += val
      self.max = max(val, self.max)
      self.min = min(val, self.min)
      self.count += 1
      self.avg = self.sum / self.count


def synthetic_records(num_regions, seed):
  rng = random.Random(seed)
  records = []
  for i in range(num_regions):
    code = '{}{}{:03d}'.format(chr(ord('A') + i // 260 % 26),
                               chr(ord('A') + i // 10 % 26), i % 1000)
    compu = int(rng.lognormvariate(6.5, 1.2)) + 1
    ai = rng.randint(0, compu // 4)
    ai_cites = rng.randint(0, 20 * ai)
    counts = {
        ALL: FieldCounts(8 * compu, 96 * compu),
        COMPU: FieldCounts(compu, ai_cites + rng.randint(0, 12 * compu)),
        AI: FieldCounts(ai, ai_cites),
    }
    records.append(RegionRecord(code, 'Region {}'.format(i), code[:2], counts))
  return records


def synthetic_geometry(records):
  features = []
  for i, record in enumerate(records):
    x, y = (i % 30) * 10, (i // 30) * 10
    features.append({
        'type': 'Feature',
        'properties': {
            'NUTS_ID': record.nuts
        },
        'geometry': {
            'type':
                'Polygon',
            'coordinates': [[[x, y], [x + 9, y], [x + 9, y + 9], [x, y + 9],
                             [x, y]]],
        },
    })
  return json.dumps({'type': 'FeatureCollection', 'features': features})


def attach_args(parser=argparse.ArgumentParser(
    'Times parsing, indicator computation, ranking and rendering on a '
    'synthetic dataset.')):
  defaults = {
      '--num-regions': 781,
      '--iters': 5,
      '--warmup': 1,
      '--seed': 12345,
      '--scheduler': 'synchronous',
      '--npartitions': 1,
  }
  parser.add_argument(
      '--num-regions',
      type=int,
      default=defaults['--num-regions'],
      help='Default: {}'.format(defaults['--num-regions']),
  )
  parser.add_argument(
      '--iters',
      type=int,
      default=defaults['--iters'],
      help='Default: {}'.format(defaults['--iters']),
  )
  parser.add_argument(
      '--warmup',
      type=int,
      default=defaults['--warmup'],
      help='Iterations left out of the statistics. Default: {}'.format(
          defaults['--warmup']),
  )
  parser.add_argument(
      '--seed',
      type=int,
      default=defaults['--seed'],
      help='Default: {}'.format(defaults['--seed']),
  )
  parser.add_argument(
      '--scheduler',
      type=str,
      choices=SCHEDULERS,
      default=defaults['--scheduler'],
      help='Default: {}'.format(defaults['--scheduler']),
  )
  parser.add_argument(
      '--npartitions',
      type=int,
      default=defaults['--npartitions'],
      help='Default: {}'.format(defaults['--npartitions']),
  )
  parser.add_argument(
      '--outdir',
      type=str,
      default=None,
      help='If set, the tables of the last iteration are written here.',
  )
  return parser


def main(args):
  records = synthetic_records(args.num_regions, args.seed)
  sink = io.StringIO()
  write_dataset(records, sink)
  text = sink.getvalue()
  geometry_text = synthetic_geometry(records)

  stages = ('parse', 'compute', 'rank', 'classify', 'fig1', 'fig3', 'map')
  meters = {stage: AverageMeter(warmup=args.warmup) for stage in stages}
  total = AverageMeter(warmup=args.warmup)
  for _ in range(args.iters):
    iter_start = time.time()

    start = time.time()
    parsed = parse_dataset(io.StringIO(text))
    meters['parse'].update(time.time() - start)

    start = time.time()
    config = AnalysisConfig(compute_reference(parsed, {AI, COMPU}),
                            scheduler=args.scheduler,
                            npartitions=args.npartitions)
    rows = compute_rows(parsed, config)
    meters['compute'].update(time.time() - start)

    start = time.time()
    rank_rsi(rows, config, 20)
    meters['rank'].update(time.time() - start)

    start = time.time()
    quadrant_report(rows, config)
    meters['classify'].update(time.time() - start)

    start = time.time()
    render_scatter(rows, fig1_spec())
    meters['fig1'].update(time.time() - start)

    start = time.time()
    render_scatter([r for r in rows if meets_focal_threshold(r, config)],
                   fig3_spec())
    meters['fig3'].update(time.time() - start)

    start = time.time()
    render_choropleth(
        rows, ChoroplethSpec(load_geometry(io.StringIO(geometry_text))))
    meters['map'].update(time.time() - start)

    total.update(time.time() - iter_start)

  print('{} regions, {} iterations ({} warmup), scheduler {}'.format(
      args.num_regions, args.iters, args.warmup, args.scheduler))
  for stage in stages:
    m = meters[stage]
    print('{:>9}: avg {:.4f} s, min {:.4f} s, max {:.4f} s'.format(
        stage, m.avg, m.min, m.max))
  print('{:>9}: avg {:.4f} s'.format('total', total.avg))

  if args.outdir is not None:
    outdir = expand_outdir_and_mkdir(args.outdir)
    for path in write_rows(rows, outdir, ('csv', 'json')):
      print('Wrote {}'.format(path))


if __name__ == '__main__':
  main(attach_args().parse_args())
