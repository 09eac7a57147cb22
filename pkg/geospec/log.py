#
# SPDX-License-Identifier: MIT
#

import logging
import os
import pathlib

_ROOT = 'geospec'
_FORMAT = ('GEOSPEC - %(asctime)s - %(filename)s:%(lineno)d:%(funcName)s - '
           '%(name)s - %(levelname)s : %(message)s')


def get_logger(name=None):
  if name is None or name == _ROOT:
    return logging.getLogger(_ROOT)
  if not name.startswith(_ROOT + '.'):
    name = '{}.{}'.format(_ROOT, name)
  return logging.getLogger(name)


class RunLogger:
  """ Configures the package logger for one CLI run.

  Messages go to stderr and, when `log_dir` is given, to `<log_dir>/<name>.txt`
  as well. Handlers installed by a previous RunLogger are replaced so that
  repeated runs in one process do not duplicate lines.
  """

  def __init__(self, log_dir=None, log_level=logging.INFO, name='run'):
    self._log_dir = log_dir
    self._log_level = log_level
    self._name = name
    if log_dir is not None:
      pathlib.Path(log_dir).mkdir(parents=True, exist_ok=True)
    self._logger = self._create_logger()

  def _create_logger(self):
    logger = logging.getLogger(_ROOT)
    for handler in list(logger.handlers):
      if getattr(handler, '_geospec_run', False):
        logger.removeHandler(handler)
        handler.close()
    fmt = logging.Formatter(_FORMAT)
    stream_handler = logging.StreamHandler()
    stream_handler.setFormatter(fmt)
    stream_handler._geospec_run = True
    logger.addHandler(stream_handler)
    if self._log_dir is not None:
      path = os.path.join(self._log_dir, '{}.txt'.format(self._name))
      file_handler = logging.FileHandler(path)
      file_handler.setFormatter(fmt)
      file_handler._geospec_run = True
      logger.addHandler(file_handler)
    logger.setLevel(self._log_level)
    return logger

  @property
  def logger(self):
    return self._logger

  def close(self):
    for handler in list(self._logger.handlers):
      if getattr(handler, '_geospec_run', False):
        self._logger.removeHandler(handler)
        handler.close()