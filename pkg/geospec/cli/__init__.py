#
# SPDX-License-Identifier: MIT
#
""" The `geospec` console script: compute, rank, classify and plot. """

import argparse
import logging
import sys

from .. import __version__
from ..errors import InputError
from ..log import RunLogger, get_logger
from . import classify, common, compute, plot, rank

logger = get_logger(__name__)

COMMANDS = {
    'compute': compute,
    'rank': rank,
    'classify': classify,
    'plot': plot,
}


def build_parser():
  parser = argparse.ArgumentParser(
      prog='geospec',
      description='Regional specialization and citation impact indicators '
      'for NUTS-3 regions.',
  )
  parser.add_argument('--version',
                      action='version',
                      version='%(prog)s {}'.format(__version__))
  subparsers = parser.add_subparsers(dest='command', metavar='COMMAND')
  subparsers.required = True
  for name, module in COMMANDS.items():
    sub = subparsers.add_parser(
        name,
        help=module.HELP,
        description=module.DESCRIPTION,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    common.attach_common_args(sub)
    module.attach_args(sub)
    sub.set_defaults(func=module.main)
  return parser


def parse_args(argv):
  """ Parses `argv`, merging the config file under the explicit flags. """
  parser = build_parser()
  args = parser.parse_args(argv)
  if args.config is None:
    return args
  at = argv.index(args.command) + 1
  extra = common.config_argv(args.config, vars(args))
  return parser.parse_args(argv[:at] + extra + argv[at:])


def main(argv=None):
  argv = list(sys.argv[1:] if argv is None else argv)
  run_logger = None
  try:
    args = parse_args(argv)
    run_logger = RunLogger(log_dir=args.log_dir,
                           log_level=getattr(logging, args.log_level))
    return args.func(args)
  except InputError as e:
    print('geospec: error: {}'.format(e.diagnostic()), file=sys.stderr)
    return 2
  except Exception:
    logger.exception('geospec failed')
    return 1
  finally:
    if run_logger is not None:
      run_logger.close()


def console_script():
  sys.exit(main())
