#
# SPDX-License-Identifier: MIT
#

import pathlib

import pytest

from geospec.analysis import AnalysisConfig, compute_rows
from geospec.dataset import compute_reference, parse_dataset
from geospec.types import AI, ALL, COMPU, FieldCounts, RegionRecord

DATA_DIR = pathlib.Path(__file__).parent / 'data'
ZENODO_ENV = 'GEOSPEC_ZENODO_DATASET'


def make_record(nuts, compu, ai, name=None, country=None, all_docs=None):
  """ Builds a RegionRecord from (docs, cites) pairs for COMPU and AI. """
  counts = {
      COMPU: FieldCounts(*compu),
      AI: FieldCounts(*ai),
  }
  if all_docs is not None:
    counts[ALL] = FieldCounts(*all_docs)
  return RegionRecord(nuts, name or nuts, country or nuts[:2], counts)


@pytest.fixture(autouse=True)
def _no_config_env(monkeypatch):
  monkeypatch.delenv('GEOSPEC_CONFIG', raising=False)


@pytest.fixture
def data_dir():
  return DATA_DIR


@pytest.fixture
def regions_csv():
  return DATA_DIR / 'regions.csv'


@pytest.fixture
def small_csv():
  return DATA_DIR / 'small.csv'


@pytest.fixture
def reference_csv():
  return DATA_DIR / 'reference.csv'


@pytest.fixture
def geojson_path():
  return DATA_DIR / 'regions.geojson'


@pytest.fixture(scope='session')
def regions_records():
  return parse_dataset(DATA_DIR / 'regions.csv')


@pytest.fixture(scope='session')
def regions_config(regions_records):
  return AnalysisConfig(compute_reference(regions_records, {AI, COMPU}))


@pytest.fixture(scope='session')
def regions_rows(regions_records, regions_config):
  return compute_rows(regions_records, regions_config)


@pytest.fixture
def small_records():
  return parse_dataset(DATA_DIR / 'small.csv')


@pytest.fixture
def small_config(small_records):
  return AnalysisConfig(compute_reference(small_records, {AI, COMPU}),
                        min_baseline_docs=0,
                        min_focal_docs=0)

