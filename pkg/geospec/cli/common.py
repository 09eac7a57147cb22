#
# SPDX-License-Identifier: MIT
#

import datetime
import os

from .. import __version__
from ..analysis import (DEFAULT_BASELINE, DEFAULT_FOCAL,
                        DEFAULT_MIN_BASELINE_DOCS, DEFAULT_MIN_FOCAL_DOCS,
                        FORMATS, AnalysisConfig)
from ..analysis.config import SCHEDULERS
from ..dataset import compute_reference, load_reference, parse_dataset
from ..errors import ConfigError, InputError
from ..types import Provenance, parse_level
from ..utils import attach_bool_arg, dump_json, expand_outdir_and_mkdir

CONFIG_ENV = 'GEOSPEC_CONFIG'
SVG = 'svg'
_TRUE = {'1', 'true', 'yes', 'on'}
_FALSE = {'0', 'false', 'no', 'off'}


def _formats(s):
  formats = [f.strip().lower() for f in s.split(',') if f.strip()]
  unknown = [f for f in formats if f not in FORMATS + (SVG,)]
  if unknown or not formats:
    raise ValueError('unknown format(s) {!r}'.format(s))
  return tuple(formats)


def attach_common_args(parser):
  defaults = {
      '--focal': DEFAULT_FOCAL,
      '--baseline': DEFAULT_BASELINE,
      '--min-baseline-docs': DEFAULT_MIN_BASELINE_DOCS,
      '--min-focal-docs': DEFAULT_MIN_FOCAL_DOCS,
      '--out-dir': '.',
      '--format': 'csv,json',
      '--scheduler': 'synchronous',
      '--npartitions': 1,
      '--log-level': 'INFO',
  }
  parser.add_argument(
      '--input',
      type=str,
      default=None,
      help='Long-format dataset CSV with the header '
      'nuts_code,region_name,country,level,docs,cites. Required, either as '
      'a flag or in the config file.',
  )
  parser.add_argument(
      '--reference',
      type=str,
      default=None,
      help='Optional reference totals CSV (level,docs,cites). If unspecified, '
      'the reference totals are the sums over all regions of --input.',
  )
  parser.add_argument(
      '--focal',
      type=str,
      default=defaults['--focal'],
      help='Focal field level (ALL, COMPU, AI or a topic code). '
      'Default: {}'.format(defaults['--focal']),
  )
  parser.add_argument(
      '--baseline',
      type=str,
      default=defaults['--baseline'],
      help='Baseline field level whose output is the denominator of the '
      'Activity Index. Default: {}'.format(defaults['--baseline']),
  )
  parser.add_argument(
      '--min-baseline-docs',
      type=int,
      default=defaults['--min-baseline-docs'],
      help='Regions with fewer baseline documents are left out of the RSI '
      'ranking. Default: {}'.format(defaults['--min-baseline-docs']),
  )
  parser.add_argument(
      '--min-focal-docs',
      type=int,
      default=defaults['--min-focal-docs'],
      help='Regions with fewer focal documents are left out of the quadrant '
      'partition and the RSI vs. RCI plot. Default: {}'.format(
          defaults['--min-focal-docs']),
  )
  parser.add_argument(
      '--out-dir',
      type=str,
      default=defaults['--out-dir'],
      help='Directory for the output files; created if missing. '
      'Default: {}'.format(defaults['--out-dir']),
  )
  parser.add_argument(
      '--format',
      dest='formats',
      type=_formats,
      default=defaults['--format'],
      metavar='FMT[,FMT...]',
      help='Table formats to write, from {}. Default: {}'.format(
          ', '.join(FORMATS), defaults['--format']),
  )
  parser.add_argument(
      '--config',
      type=str,
      default=os.environ.get(CONFIG_ENV),
      help='Config file of `key = value` lines merged under the command line '
      'flags. Default: ${}'.format(CONFIG_ENV),
  )
  parser.add_argument(
      '--scheduler',
      type=str,
      choices=SCHEDULERS,
      default=defaults['--scheduler'],
      help='dask scheduler used to evaluate regions. Default: {}'.format(
          defaults['--scheduler']),
  )
  parser.add_argument(
      '--npartitions',
      type=int,
      default=defaults['--npartitions'],
      help='Number of dask partitions the regions are split into. '
      'Default: {}'.format(defaults['--npartitions']),
  )
  parser.add_argument(
      '--log-level',
      type=str,
      choices=('DEBUG', 'INFO', 'WARNING', 'ERROR'),
      default=defaults['--log-level'],
      help='Default: {}'.format(defaults['--log-level']),
  )
  parser.add_argument(
      '--log-dir',
      type=str,
      default=None,
      help='If set, the run log is also written to <log-dir>/run.txt.',
  )
  attach_bool_arg(
      parser,
      'include-timestamps',
      default=False,
      help_str='Record the wall-clock time in run.json. Off by default so '
      'that identical runs give identical files.',
  )
  return parser


def read_config_file(path):
  """ Parses `key = value` lines; `#` starts a comment. """
  if not os.path.isfile(path):
    raise ConfigError('config file does not exist', path=path)
  values = {}
  with open(path, 'r', encoding='utf-8') as f:
    for line_num, line in enumerate(f, start=1):
      line = line.split('#', 1)[0].strip()
      if not line:
        continue
      if '=' not in line:
        raise ConfigError('expected `key = value`, got {!r}'.format(line),
                          path=path,
                          line=line_num)
      key, value = (s.strip() for s in line.split('=', 1))
      key = key.lstrip('-').replace('-', '_')
      if not key:
        raise ConfigError('empty key', path=path, line=line_num)
      values[key] = (value, line_num)
  return values


def config_argv(path, known):
  """ Turns a config file into flags to put in front of the user's flags.

  `known` maps every accepted dest to its parsed default, which tells boolean
  switches apart from valued options.
  """
  argv = []
  for key, (value, line_num) in read_config_file(path).items():
    dest = 'formats' if key == 'format' else key
    if dest not in known or dest in ('config', 'command', 'func', 'figure'):
      raise ConfigError('unknown key {!r}'.format(key), path=path,
                        line=line_num)
    flag = '--' + ('format' if dest == 'formats' else dest).replace('_', '-')
    if isinstance(known[dest], bool):
      lowered = value.lower()
      if lowered in _TRUE:
        argv.append(flag)
      elif lowered in _FALSE:
        argv.append('--no-' + flag[2:])
      else:
        raise ConfigError('{} expects true or false, got {!r}'.format(
            key, value),
                          path=path,
                          line=line_num)
    else:
      argv.extend([flag, value])
  return argv


class RunConfig:
  """ Effective, validated settings of one CLI run. """

  def __init__(self, args):
    self.command = args.command
    self.input_path = args.input
    self.reference_path = args.reference
    self.config_path = args.config
    self.out_dir = args.out_dir
    self.formats = tuple(args.formats)
    self.scheduler = args.scheduler
    self.npartitions = args.npartitions
    self.include_timestamps = args.include_timestamps
    self.top = getattr(args, 'top', None)
    self.figure = getattr(args, 'figure', None)
    self.geojson = getattr(args, 'geojson', None)
    self.geojson_key = getattr(args, 'geojson_key', None)
    self.label_top_k = getattr(args, 'label_top_k', None)
    self.report_top = getattr(args, 'report_top', None)
    try:
      self.focal = parse_level(args.focal)
      self.baseline = parse_level(args.baseline)
    except InputError as e:
      raise ConfigError(e.message) from None
    self.min_baseline_docs = args.min_baseline_docs
    self.min_focal_docs = args.min_focal_docs
    self._validate()

  def _validate(self):
    if self.input_path is None:
      raise ConfigError('--input is required (flag or config file)')
    if not os.path.isfile(self.input_path):
      raise ConfigError('input file does not exist', path=self.input_path)
    if self.reference_path is not None and not os.path.isfile(
        self.reference_path):
      raise ConfigError('reference file does not exist',
                        path=self.reference_path)
    if self.geojson is not None and not os.path.isfile(self.geojson):
      raise ConfigError('geometry file does not exist', path=self.geojson)
    if self.focal == self.baseline:
      raise ConfigError('--focal and --baseline must differ (both {})'.format(
          self.focal))
    for flag, value in (('--min-baseline-docs', self.min_baseline_docs),
                        ('--min-focal-docs', self.min_focal_docs)):
      if value < 0:
        raise ConfigError('{} must be >= 0, got {}'.format(flag, value))
    if self.npartitions < 1:
      raise ConfigError('--npartitions must be >= 1, got {}'.format(
          self.npartitions))
    if self.top is not None and self.top <= 0:
      raise ConfigError('--top must be > 0, got {}'.format(self.top))
    if self.label_top_k is not None and self.label_top_k < 0:
      raise ConfigError('--label-top-k must be >= 0, got {}'.format(
          self.label_top_k))

  @property
  def table_formats(self):
    return tuple(f for f in self.formats if f != SVG)

  def to_dict(self):
    d = {
        'command': self.command,
        'input': self.input_path,
        'reference': self.reference_path,
        'config': self.config_path,
        'focal': self.focal,
        'baseline': self.baseline,
        'min_baseline_docs': self.min_baseline_docs,
        'min_focal_docs': self.min_focal_docs,
        'out_dir': self.out_dir,
        'formats': list(self.formats),
        'scheduler': self.scheduler,
        'npartitions': self.npartitions,
    }
    for key in ('top', 'figure', 'geojson', 'geojson_key', 'label_top_k',
                'report_top'):
      value = getattr(self, key)
      if value is not None:
        d[key] = value
    return d


class Run:
  """ Loads the inputs of a RunConfig and collects the run.json metadata. """

  def __init__(self, run_config):
    self.config = run_config
    self.outdir = expand_outdir_and_mkdir(run_config.out_dir)
    print('Reading {} ...'.format(run_config.input_path))
    self.records = parse_dataset(run_config.input_path)
    if run_config.reference_path is not None:
      print('Reading reference totals from {} ...'.format(
          run_config.reference_path))
      self.reference = load_reference(run_config.reference_path)
    else:
      self.reference = compute_reference(
          self.records, {run_config.focal, run_config.baseline})
    self.outputs = []
    self.meta = {}

  def analysis_config(self, **overrides):
    params = dict(
        reference=self.reference,
        focal=self.config.focal,
        baseline=self.config.baseline,
        min_baseline_docs=self.config.min_baseline_docs,
        min_focal_docs=self.config.min_focal_docs,
        scheduler=self.config.scheduler,
        npartitions=self.config.npartitions,
    )
    params.update(overrides)
    return AnalysisConfig(**params)

  def reference_for(self, levels):
    """ Reference totals covering `levels`, or None when unavailable. """
    if self.reference.provenance == Provenance.SUPPLIED_EXTERNALLY:
      if all(l in self.reference.counts for l in levels):
        return self.reference
      return None
    try:
      return compute_reference(self.records, set(levels))
    except InputError:
      return None

  def add_outputs(self, paths):
    self.outputs.extend(os.path.basename(p) for p in paths)

  def path(self, name):
    path = os.path.join(self.outdir, name)
    self.outputs.append(name)
    return path

  def _dataset_summary(self):
    levels = {}
    for record in self.records:
      for level in record.levels:
        levels[level] = levels.get(level, 0) + 1
    return {
        'path': self.config.input_path,
        'rows': sum(len(r.counts) for r in self.records),
        'regions': len(self.records),
        'regions_per_level': levels,
    }

  def _reference_summary(self):
    return {
        'provenance': str(self.reference.provenance),
        'path': self.config.reference_path,
        'totals': {
            level: {
                'docs': self.reference.get(level).docs,
                'cites': self.reference.get(level).cites,
            } for level in self.reference.levels
        },
    }

  def write_metadata(self):
    meta = {
        'version': __version__,
        'config': self.config.to_dict(),
        'dataset': self._dataset_summary(),
        'reference': self._reference_summary(),
        'outputs': sorted(self.outputs),
    }
    meta.update(self.meta)
    if self.config.include_timestamps:
      meta['timestamp'] = datetime.datetime.now(
          datetime.timezone.utc).isoformat()
    path = os.path.join(self.outdir, 'run.json')
    dump_json(meta, path)
    print('Run metadata written to {}'.format(path))
    return path
