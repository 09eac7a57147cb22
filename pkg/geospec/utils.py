#
# SPDX-License-Identifier: MIT
#

import json
import os
import pathlib


def mkdir(d):
  pathlib.Path(d).mkdir(parents=True, exist_ok=True)


def expand_outdir_and_mkdir(outdir):
  outdir = os.path.abspath(os.path.expanduser(outdir))
  mkdir(outdir)
  return outdir


def attach_bool_arg(parser, flag_name, default=False, help_str=None):
  attr_name = flag_name.replace('-', '_')
  parser.add_argument(
      '--{}'.format(flag_name),
      dest=attr_name,
      action='store_true',
      help=flag_name.replace('-', ' ') if help_str is None else help_str,
  )
  parser.add_argument(
      '--no-{}'.format(flag_name),
      dest=attr_name,
      action='store_false',
      help=flag_name.replace('-', ' ') if help_str is None else help_str,
  )
  parser.set_defaults(**{attr_name: default})


def read_text(source):
  """ Reads a path, a text stream or a byte stream; returns (text, name). """
  if isinstance(source, (str, os.PathLike)):
    with open(source, 'r', encoding='utf-8-sig', newline='') as f:
      return f.read(), str(source)
  if isinstance(source, (bytes, bytearray)):
    return bytes(source).decode('utf-8-sig'), '<bytes>'
  data = source.read()
  if isinstance(data, (bytes, bytearray)):
    data = bytes(data).decode('utf-8-sig')
  return data, str(getattr(source, 'name', '<stream>'))


def dump_json(obj, path):
  # Sorted keys and a trailing newline keep identical runs byte-identical.
  with open(path, 'w', encoding='utf-8', newline='\n') as f:
    json.dump(obj, f, indent=2, sort_keys=True)
    f.write('\n')
