#
# SPDX-License-Identifier: MIT
#

import json
import math

import pandas as pd
import pyarrow.parquet as pq
import pytest

from conftest import make_record
from geospec.analysis import (AnalysisConfig, compare_with_published,
                              compute_rows, correlations, excluded_from_report,
                              quadrant_report, rank_rsi, summarize_quadrants,
                              write_rows)
from geospec.analysis.ranking import regions_meeting
from geospec.dataset import compute_reference, load_published_ranking
from geospec.errors import (ConfigError, DegenerateReference,
                            InconsistentCounts, MissingLevel, OutOfDomain)
from geospec.types import (AI, ALL, COMPU, FieldCounts, QuadrantProfile,
                           RegionRecord)


def _config(records, **kwargs):
  return AnalysisConfig(compute_reference(records, {AI, COMPU}), **kwargs)


def _by_code(rows):
  return {r.nuts: r for r in rows}


def test_double_share_region(small_records, small_config):
  rows = _by_code(compute_rows(small_records, small_config))
  granada = rows['ES614']
  assert granada.aindx == 2.0
  assert granada.rsi == pytest.approx(1.0 / 3.0, abs=1e-15)
  assert granada.rci.value == pytest.approx(1.6)
  assert granada.quadrant is QuadrantProfile.SPECIALIZED_HIGH_IMPACT
  assert rows['PT111'].aindx == 0.5
  assert rows['PT111'].quadrant is QuadrantProfile.UNSPECIALIZED_LOW_IMPACT
  assert rows['DK031'].rsi == 0.0
  assert rows['DK031'].quadrant is QuadrantProfile.BOUNDARY


def test_zero_focal_output():
  records = [
      make_record('ES614', (100, 100), (10, 20)),
      make_record('FR213', (300, 300), (0, 0)),
  ]
  rows = _by_code(compute_rows(records, _config(records)))
  assert rows['FR213'].rsi == -1.0
  assert not rows['FR213'].rci.defined
  assert rows['FR213'].quadrant is None


def test_regions_without_baseline_output_are_skipped():
  records = [
      make_record('ES614', (100, 100), (10, 20)),
      make_record('ES616', (0, 0), (0, 0)),
  ]
  rows = compute_rows(records, _config(records))
  assert [r.nuts for r in rows] == ['ES614']


def test_region_with_focal_above_baseline_is_skipped():
  topic = 'T4.61.238'
  records = [
      RegionRecord('ES614', 'Granada', 'ES', {
          AI: FieldCounts(10, 40),
          topic: FieldCounts(40, 90)
      }),
      RegionRecord('PT111', 'Alto Minho', 'PT', {
          AI: FieldCounts(30, 60),
          topic: FieldCounts(20, 40)
      }),
  ]
  config = AnalysisConfig(compute_reference(records, {AI, topic}),
                          focal=AI,
                          baseline=topic,
                          min_baseline_docs=0,
                          min_focal_docs=0)
  rows = compute_rows(records, config)
  assert [r.nuts for r in rows] == ['ES614']
  # (10 / 40) / (40 / 60)
  assert rows[0].aindx == pytest.approx(0.375)


def test_reference_focal_above_baseline():
  topic = 'T4.61.238'
  records = [
      RegionRecord('ES614', 'Granada', 'ES', {
          AI: FieldCounts(10, 40),
          topic: FieldCounts(40, 90)
      }),
      RegionRecord('PT111', 'Alto Minho', 'PT', {
          AI: FieldCounts(50, 60),
          topic: FieldCounts(5, 10)
      }),
  ]
  config = AnalysisConfig(compute_reference(records, {AI, topic}),
                          focal=AI,
                          baseline=topic)
  with pytest.raises(InconsistentCounts):
    compute_rows(records, config)


def test_degenerate_reference():
  records = [make_record('ES614', (100, 100), (0, 0))]
  with pytest.raises(DegenerateReference):
    compute_rows(records, _config(records))


def test_missing_reference_level(small_records):
  config = AnalysisConfig(compute_reference(small_records, {AI, COMPU}),
                          baseline=ALL)
  with pytest.raises(MissingLevel):
    compute_rows(small_records, config)


def test_config_validation(small_records):
  reference = compute_reference(small_records, {AI, COMPU})
  with pytest.raises(ConfigError):
    AnalysisConfig(reference, focal=AI, baseline=AI)
  with pytest.raises(ConfigError):
    AnalysisConfig(reference, min_baseline_docs=-1)
  with pytest.raises(ConfigError):
    AnalysisConfig(reference, scheduler='mpi')
  with pytest.raises(ConfigError):
    AnalysisConfig(reference, npartitions=0)
  with pytest.raises(ConfigError):
    AnalysisConfig({AI: (1, 1)})
  assert AnalysisConfig(reference).replace(baseline=ALL).baseline == ALL


def test_rows_are_ordered(regions_rows):
  keys = [(-float(r.rsi), r.nuts) for r in regions_rows]
  assert keys == sorted(keys)
  assert len(regions_rows) == 27


@pytest.mark.parametrize('scheduler, npartitions', [
    ('synchronous', 4),
    ('threads', 3),
    ('processes', 2),
])
def test_schedules_agree(regions_records, regions_config, regions_rows,
                         scheduler, npartitions):
  config = regions_config.replace(scheduler=scheduler, npartitions=npartitions)
  assert compute_rows(regions_records, config) == regions_rows


def test_granada_and_fyn(regions_rows):
  rows = _by_code(regions_rows)
  assert float(rows['ES614'].rsi) == pytest.approx(0.712, abs=5e-4)
  assert rows['ES614'].rci.value == pytest.approx(2.55, abs=5e-3)
  assert rows['DK031'].rsi < 0
  assert rows['DK031'].rci.value > 4.0


def test_rank_reproduces_published_table(regions_rows, regions_config):
  ranked = rank_rsi(regions_rows, regions_config, 20)
  published = load_published_ranking()
  assert [r.nuts for r in ranked] == [e.nuts for e in published]
  assert ranked[0].name == 'Burgas'
  assert float(ranked[0].rsi) == pytest.approx(0.820, abs=5e-4)
  assert ranked[3].nuts == 'ES614'
  assert float(ranked[19].rsi) == pytest.approx(0.566, abs=5e-4)
  comparison = compare_with_published(ranked, published)
  assert comparison.within_tolerance
  assert comparison.missing == [] and comparison.extra == []
  assert comparison.max_abs_diff < 0.005


def test_rank_threshold_excludes_small_regions(regions_rows, regions_config):
  ranked = rank_rsi(regions_rows, regions_config, 30)
  assert 'ES411' not in {r.nuts for r in ranked}
  unfiltered = rank_rsi(regions_rows,
                        regions_config.replace(min_baseline_docs=0), 1)
  assert unfiltered[0].nuts == 'ES411'


def test_rank_all_below_threshold(regions_rows, regions_config):
  config = regions_config.replace(min_baseline_docs=10**9)
  assert rank_rsi(regions_rows, config, 20) == []


def test_rank_rejects_bad_top(regions_rows, regions_config):
  for bad in (0, -1, 2.0, True):
    with pytest.raises(OutOfDomain):
      rank_rsi(regions_rows, regions_config, bad)


def test_rank_ties_break_by_code():
  records = [
      make_record('PL214', (200, 100), (20, 20)),
      make_record('ES614', (200, 100), (20, 20)),
      make_record('CZ071', (400, 100), (10, 10)),
  ]
  config = _config(records, min_baseline_docs=0)
  ranked = rank_rsi(compute_rows(records, config), config, 3)
  assert [r.nuts for r in ranked] == ['ES614', 'PL214', 'CZ071']


def test_rank_is_a_prefix_and_filtering_commutes(regions_rows, regions_config):
  full = rank_rsi(regions_rows, regions_config, len(regions_rows))
  for n in (1, 5, 20):
    assert rank_rsi(regions_rows, regions_config, n) == full[:n]
  ranked_first = sorted(regions_rows, key=lambda r: (-float(r.rsi), r.nuts))
  filtered_after = [
      r for r in ranked_first
      if r.baseline_docs >= regions_config.min_baseline_docs
  ]
  assert full == filtered_after


def test_quadrant_report(regions_rows, regions_config):
  report = quadrant_report(regions_rows, regions_config)
  assert set(report) == set(QuadrantProfile)
  high = {r.nuts for r in report[QuadrantProfile.SPECIALIZED_HIGH_IMPACT]}
  assert {'ES614', 'ES616'} <= high
  unspecialized_high = report[QuadrantProfile.UNSPECIALIZED_HIGH_IMPACT]
  fyn = _by_code(unspecialized_high)['DK031']
  assert fyn.rci.value > 4.0
  sizes = {p: len(b) for p, b in report.items()}
  assert sizes == {
      QuadrantProfile.SPECIALIZED_HIGH_IMPACT: 11,
      QuadrantProfile.SPECIALIZED_LOW_IMPACT: 9,
      QuadrantProfile.UNSPECIALIZED_HIGH_IMPACT: 2,
      QuadrantProfile.UNSPECIALIZED_LOW_IMPACT: 1,
      QuadrantProfile.BOUNDARY: 0,
  }
  excluded = {r.nuts for r in excluded_from_report(regions_rows, regions_config)}
  assert excluded == {'PL224', 'RO111', 'PL841', 'FR213'}


def test_quadrant_buckets_partition_eligible_rows(regions_rows,
                                                  regions_config):
  for min_docs in (0, 100, 250, 10**6):
    config = regions_config.replace(min_focal_docs=min_docs)
    report = quadrant_report(regions_rows, config)
    members = [r.nuts for bucket in report.values() for r in bucket]
    assert len(members) == len(set(members))
    eligible = {
        r.nuts
        for r in regions_rows
        if r.focal_docs >= min_docs and r.rci.defined
    }
    assert set(members) == eligible
    for profile, bucket in report.items():
      assert all(r.quadrant is profile for r in bucket)
      assert bucket == sorted(bucket, key=lambda r: (-float(r.rsi), r.nuts))


def test_quadrant_report_empty(regions_config):
  report = quadrant_report([], regions_config)
  assert all(bucket == [] for bucket in report.values())
  assert len(report) == len(QuadrantProfile)


def test_compare_with_published_reports_differences(regions_rows,
                                                    regions_config):
  ranked = rank_rsi(regions_rows, regions_config, 19)
  comparison = compare_with_published(ranked, load_published_ranking())
  assert not comparison.within_tolerance
  assert comparison.missing == ['BG421']
  assert comparison.extra == []


def test_alternate_baseline_does_not_match(regions_records):
  config = AnalysisConfig(compute_reference(regions_records, {AI, ALL}),
                          baseline=ALL)
  ranked = rank_rsi(compute_rows(regions_records, config), config, 20)
  comparison = compare_with_published(ranked, load_published_ranking())
  assert not comparison.within_tolerance


def test_write_rows(tmp_path, regions_rows):
  paths = write_rows(regions_rows, str(tmp_path), ('csv', 'json', 'parquet'))
  assert [p.rsplit('.', 1)[1] for p in paths] == ['csv', 'json', 'parquet']

  df = pd.read_csv(tmp_path / 'indicators.csv', dtype={'rsi_display': str})
  assert list(df.columns[:9]) == [
      'nuts_code', 'region_name', 'country', 'focal_docs', 'focal_cites',
      'aindx', 'rsi', 'rci', 'quadrant'
  ]
  granada = df[df['nuts_code'] == 'ES614'].iloc[0]
  assert granada['rsi_display'] == '0.712'
  assert granada['quadrant'] == 'SpecializedHighImpact'
  marne = df[df['nuts_code'] == 'FR213'].iloc[0]
  assert math.isnan(marne['rci'])

  with open(tmp_path / 'indicators.json', encoding='utf-8') as f:
    records = json.load(f)
  assert records[0]['nuts_code'] == 'ES411'
  assert records[0]['region_name'] == 'Ávila'
  by_code = {r['nuts_code']: r for r in records}
  assert by_code['FR213']['rci'] is None
  assert by_code['FR213']['quadrant'] is None
  assert by_code['ES614']['rsi'] == float(_by_code(regions_rows)['ES614'].rsi)

  table = pq.read_table(tmp_path / 'indicators.parquet')
  assert table.num_rows == len(regions_rows)
  assert table.column('nuts_code').to_pylist()[0] == 'ES411'


def test_write_rows_unknown_format(tmp_path, regions_rows):
  with pytest.raises(ConfigError):
    write_rows(regions_rows, str(tmp_path), ('xlsx',))


def test_write_rows_is_deterministic(tmp_path, regions_rows):
  for name in ('a', 'b'):
    (tmp_path / name).mkdir()
    write_rows(regions_rows, str(tmp_path / name))
  for ext in ('csv', 'json'):
    assert (tmp_path / 'a' / 'indicators.{}'.format(ext)).read_bytes() == \
        (tmp_path / 'b' / 'indicators.{}'.format(ext)).read_bytes()


def test_summarize_quadrants(regions_rows, regions_config):
  report = quadrant_report(regions_rows, regions_config)
  text = summarize_quadrants(report, regions_rows, regions_config)
  assert text.startswith('# Regional profiles: AI')
  assert '| Specialized, high impact (RSI > 0, RCI > 1) | 11 |' in text
  assert 'Fyn' in text
  assert 'Pearson correlation of RSI and RCI' in text
  pearson, spearman = correlations(
      [r for bucket in report.values() for r in bucket])
  assert -1.0 <= pearson <= 1.0
  assert -1.0 <= spearman <= 1.0


def test_correlations_need_two_rows(regions_rows):
  assert correlations(regions_rows[:1]) == (None, None)


def test_regions_meeting(regions_records):
  eligible = regions_meeting(regions_records, COMPU, 200)
  # Ávila has 150 COMPU documents.
  assert 'ES411' not in eligible
  assert 'BG421' in eligible
  assert regions_meeting(regions_records, COMPU, 0) == {
      r.nuts for r in regions_records
  }
  assert regions_meeting(regions_records, 'T4.61.238', 0) == set()
