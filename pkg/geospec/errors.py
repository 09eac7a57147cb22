#
# SPDX-License-Identifier: MIT
#


class GeospecError(Exception):
  pass


class InputError(GeospecError, ValueError):
  """ Raised when user supplied data breaks a validation rule.

  `path` and `line` locate the offending input when known; `rule` names the
  violated rule so the CLI can print `path:line: rule: message`.
  """

  rule = 'invalid-input'

  def __init__(self, message, path=None, line=None):
    super().__init__(message)
    self.message = message
    self.path = path
    self.line = line

  def located(self, path=None, line=None):
    if self.path is None:
      self.path = path
    if self.line is None:
      self.line = line
    return self

  def diagnostic(self):
    where = []
    if self.path is not None:
      where.append(str(self.path))
    if self.line is not None:
      where.append(str(self.line))
    prefix = ':'.join(where)
    if prefix:
      return '{}: {}: {}'.format(prefix, self.rule, self.message)
    return '{}: {}'.format(self.rule, self.message)


# indicators


class OutOfDomain(InputError):
  rule = 'out-of-domain'


class ZeroRegionOutput(InputError):
  rule = 'zero-region-output'


class DegenerateReference(InputError):
  rule = 'degenerate-reference'


class InconsistentCounts(InputError):
  rule = 'inconsistent-counts'


class UndefinedImpact(InputError):
  rule = 'undefined-impact'


# dataset


class MalformedRow(InputError):
  rule = 'malformed-row'


class DuplicateKey(InputError):
  rule = 'duplicate-key'


class BadNutsCode(InputError):
  rule = 'bad-nuts-code'


class NestingViolation(InputError):
  rule = 'nesting-violation'


class MissingLevel(InputError):
  rule = 'missing-level'


# render


class EmptyInput(InputError):
  rule = 'empty-input'


class BadGeometry(InputError):
  rule = 'bad-geometry'


class KeyMissing(InputError):
  rule = 'key-missing'


# cli


class ConfigError(InputError):
  rule = 'config'
