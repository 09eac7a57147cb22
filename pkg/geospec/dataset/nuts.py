#
# SPDX-License-Identifier: MIT
#

import re

from ..errors import BadNutsCode

_NUTS3 = re.compile(r'^[A-Z]{2}[A-Z0-9]{3}$')


def parse_nuts(code):
  """ Validates a NUTS-3 code: two uppercase ASCII letters (country) followed
  by three uppercase alphanumerics. Surrounding whitespace is ignored.
  """
  if not isinstance(code, str):
    raise BadNutsCode('NUTS code must be a string, got {!r}'.format(code))
  stripped = code.strip()
  if not _NUTS3.match(stripped):
    raise BadNutsCode('{!r} is not a NUTS-3 code (expected e.g. ES614)'.format(
        code))
  return stripped


def country_of(code):
  return parse_nuts(code)[:2]

