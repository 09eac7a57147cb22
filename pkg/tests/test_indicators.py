#
# SPDX-License-Identifier: MIT
#

import pickle
import random

import numpy as np
import pytest

from geospec.errors import (DegenerateReference, InconsistentCounts,
                            OutOfDomain, UndefinedImpact, ZeroRegionOutput)
from geospec.indicators import (Interpretation, RsiValue, activity_from_rsi,
                                activity_index, classify_quadrant,
                                field_shares, indicators_for, interpret_rsi,
                                relative_citation_impact, rsi_from_activity)
from geospec.types import (UNDEFINED_RCI, FieldCounts, QuadrantProfile,
                           RciValue)


@pytest.mark.parametrize('args, expected', [
    ((10, 100, 50, 1000), 2.0),
    ((50, 1000, 50, 1000), 1.0),
    ((0, 100, 50, 1000), 0.0),
])
def test_activity_index_examples(args, expected):
  assert activity_index(*args) == expected


def test_activity_index_errors():
  with pytest.raises(ZeroRegionOutput):
    activity_index(0, 0, 50, 1000)
  with pytest.raises(DegenerateReference):
    activity_index(1, 10, 0, 1000)
  with pytest.raises(DegenerateReference):
    activity_index(1, 10, 0, 0)
  with pytest.raises(InconsistentCounts):
    activity_index(11, 10, 50, 1000)
  with pytest.raises(OutOfDomain):
    activity_index(-1, 10, 50, 1000)
  with pytest.raises(OutOfDomain):
    activity_index(1.5, 10, 50, 1000)


def test_activity_index_scale_invariance():
  rng = random.Random(7)
  for _ in range(200):
    total = rng.randint(1, 10**6)
    focal = rng.randint(0, total)
    ref_total = rng.randint(1, 10**9)
    ref_focal = rng.randint(1, ref_total)
    k = rng.randint(2, 10**4)
    assert activity_index(focal, total, ref_focal, ref_total) == \
        activity_index(k * focal, k * total, k * ref_focal, k * ref_total)


def test_self_reference_is_neutral():
  rng = random.Random(11)
  for _ in range(100):
    total = rng.randint(1, 10**7)
    focal = rng.randint(1, total)
    aindx = activity_index(focal, total, focal, total)
    assert aindx == 1.0
    assert rsi_from_activity(aindx) == 0.0


@pytest.mark.parametrize('aindx, expected', [
    (1.0, 0.0),
    (0.0, -1.0),
    (2.0, 1.0 / 3.0),
])
def test_rsi_from_activity_examples(aindx, expected):
  assert rsi_from_activity(aindx) == pytest.approx(expected, abs=1e-15)


@pytest.mark.parametrize('rsi, expected', [
    (0.0, 1.0),
    (-1.0, 0.0),
    (1.0 / 3.0, 2.0),
])
def test_activity_from_rsi_examples(rsi, expected):
  assert activity_from_rsi(rsi) == pytest.approx(expected, rel=1e-12)


def test_rsi_bounds_and_monotonicity():
  grid = np.concatenate([[0.0], np.logspace(-6, 12, 2000)])
  values = [float(rsi_from_activity(a)) for a in grid]
  assert all(-1.0 <= v < 1.0 for v in values)
  assert all(b >= a for a, b in zip(values, values[1:]))
  assert values[0] == -1.0


def test_rsi_never_reaches_one():
  assert rsi_from_activity(1e300) < 1.0
  assert rsi_from_activity(np.finfo(float).max) < 1.0


def test_round_trip_over_log_grid():
  for a in np.logspace(-6, 6, 1201):
    back = activity_from_rsi(rsi_from_activity(float(a)))
    assert abs(back - a) <= 1e-12 * max(1.0, a)


def test_round_trip_survives_pickling():
  rsi = rsi_from_activity(123456.0)
  copy = pickle.loads(pickle.dumps(rsi))
  assert isinstance(copy, RsiValue)
  assert activity_from_rsi(copy) == pytest.approx(123456.0, rel=1e-12)


def test_activity_from_rsi_domain():
  for bad in (1.0, 1.5, -1.0000001, float('nan')):
    with pytest.raises(OutOfDomain):
      activity_from_rsi(bad)
  with pytest.raises(OutOfDomain):
    rsi_from_activity(-0.5)
  with pytest.raises(OutOfDomain):
    rsi_from_activity(float('inf'))


def test_relative_citation_impact_examples():
  assert relative_citation_impact(200, 100, 1000, 1000) == RciValue(2.0, True)
  assert relative_citation_impact(10, 10, 1000, 1000) == RciValue(1.0, True)
  assert relative_citation_impact(0, 0, 1000, 1000) is UNDEFINED_RCI


def test_relative_citation_impact_errors():
  with pytest.raises(DegenerateReference):
    relative_citation_impact(10, 10, 0, 1000)
  with pytest.raises(DegenerateReference):
    relative_citation_impact(10, 10, 1000, 0)
  with pytest.raises(InconsistentCounts):
    relative_citation_impact(5, 0, 1000, 1000)


def test_relative_citation_impact_scale_invariance():
  rng = random.Random(3)
  for _ in range(200):
    docs = rng.randint(1, 10**5)
    cites = rng.randint(0, 50 * docs)
    ref_docs = rng.randint(1, 10**8)
    ref_cites = rng.randint(1, 50 * ref_docs)
    k = rng.randint(2, 1000)
    assert relative_citation_impact(cites, docs, ref_cites, ref_docs) == \
        relative_citation_impact(k * cites, k * docs, k * ref_cites,
                                 k * ref_docs)


@pytest.mark.parametrize('rsi, rci, expected', [
    (0.71, 2.55, QuadrantProfile.SPECIALIZED_HIGH_IMPACT),
    (0.5, 0.5, QuadrantProfile.SPECIALIZED_LOW_IMPACT),
    (-0.2, 4.1, QuadrantProfile.UNSPECIALIZED_HIGH_IMPACT),
    (-0.5, 0.2, QuadrantProfile.UNSPECIALIZED_LOW_IMPACT),
    (0.0, 1.0, QuadrantProfile.BOUNDARY),
    (0.0, 3.0, QuadrantProfile.BOUNDARY),
    (0.4, 1.0, QuadrantProfile.BOUNDARY),
])
def test_classify_quadrant(rsi, rci, expected):
  assert classify_quadrant(rsi, RciValue(rci, True)) is expected
  assert classify_quadrant(rsi, rci) is expected


def test_classify_quadrant_is_total():
  rng = random.Random(5)
  points = [(rng.uniform(-1, 1), rng.uniform(0, 5)) for _ in range(1000)]
  points += [(0.0, 1.0), (-1.0, 0.0), (0.0, 0.0), (-1.0, 1.0)]
  for rsi, rci in points:
    assert classify_quadrant(rsi, rci) in QuadrantProfile


def test_classify_quadrant_undefined_impact():
  with pytest.raises(UndefinedImpact):
    classify_quadrant(0.3, UNDEFINED_RCI)
  with pytest.raises(UndefinedImpact):
    classify_quadrant(0.3, None)


def test_field_shares():
  assert field_shares(5, 20) == 0.25
  with pytest.raises(ZeroRegionOutput):
    field_shares(0, 0)
  with pytest.raises(InconsistentCounts):
    field_shares(3, 2)


def test_interpret_rsi():
  assert interpret_rsi(0.0) is Interpretation.NEUTRAL
  assert interpret_rsi(0.2) is Interpretation.SPECIALIZED
  assert interpret_rsi(-0.2) is Interpretation.UNDER_SPECIALIZED
  assert interpret_rsi(0.01, tol=0.05) is Interpretation.NEUTRAL


def test_indicators_for_matches_the_separate_operations():
  focal, baseline = FieldCounts(20, 400), FieldCounts(100, 1000)
  ref_focal, ref_baseline = FieldCounts(40, 500), FieldCounts(400, 4000)
  aindx, rsi, rci = indicators_for(focal, baseline, ref_focal, ref_baseline)
  assert aindx == activity_index(20, 100, 40, 400) == 2.0
  assert rsi == rsi_from_activity(2.0)
  assert rci == relative_citation_impact(400, 20, 500, 40)
  assert rci.value == pytest.approx(1.6)
