#
# SPDX-License-Identifier: MIT
#

import json
import os
from collections import namedtuple

from matplotlib.cm import ScalarMappable
from matplotlib.patches import Patch, PathPatch
from matplotlib.path import Path

from ..errors import BadGeometry, ConfigError, KeyMissing
from ..log import get_logger
from ..utils import read_text
from .colors import RSI_CMAP, diverging_color, legend_stops, rsi_norm
from .svg import figure_to_svg, new_figure, plain_text

logger = get_logger(__name__)

DEFAULT_KEY_PROPERTY = 'NUTS_ID'
MISSING_FILL = '#e0e0e0'

Feature = namedtuple('Feature', ['nuts', 'polygons'])


def _rings_of(geometry, index):
  kind = geometry.get('type') if isinstance(geometry, dict) else None
  coords = geometry.get('coordinates') if isinstance(geometry, dict) else None
  if kind == 'Polygon':
    polygons = [coords]
  elif kind == 'MultiPolygon':
    polygons = coords
  else:
    raise BadGeometry('feature {} has {} geometry; only Polygon and '
                      'MultiPolygon are supported'.format(index, kind))
  try:
    rings = [[[(float(x), float(y)) for x, y, *_ in ring] for ring in polygon]
             for polygon in polygons]
  except (TypeError, ValueError):
    raise BadGeometry(
        'feature {} has malformed coordinates'.format(index)) from None
  if any(0 < len(ring) < 3 for polygon in rings for ring in polygon):
    raise BadGeometry('feature {} has a ring with fewer than 3 positions'.format(
        index))
  return rings


def load_geometry(source, key_property=DEFAULT_KEY_PROPERTY):
  """ Reads a GeoJSON FeatureCollection of pre-projected NUTS-3 polygons. """
  try:
    text, name = read_text(source)
  except UnicodeDecodeError as e:
    name = (str(source) if isinstance(source, (str, os.PathLike)) else getattr(
        source, 'name', None))
    raise BadGeometry('geometry is not valid UTF-8 ({})'.format(e),
                      path=name) from None
  try:
    collection = json.loads(text)
  except ValueError as e:
    raise BadGeometry('not valid JSON: {}'.format(e), path=name) from None
  if not isinstance(collection, dict) or collection.get(
      'type') != 'FeatureCollection':
    raise BadGeometry('expected a GeoJSON FeatureCollection', path=name)
  raw_features = collection.get('features') or []
  if not isinstance(raw_features, list):
    raise BadGeometry('"features" must be a list', path=name)
  features = []
  for i, feature in enumerate(raw_features):
    if not isinstance(feature, dict):
      raise BadGeometry('feature {} is not a JSON object'.format(i), path=name)
    properties = feature.get('properties')
    if not isinstance(properties, dict):
      properties = {}
    code = properties.get(key_property)
    if not isinstance(code, str) or not code.strip():
      raise KeyMissing('feature {} has no string {!r} property'.format(
          i, key_property),
                       path=name)
    try:
      polygons = _rings_of(feature.get('geometry'), i)
    except BadGeometry as e:
      raise e.located(path=name)
    features.append(Feature(code.strip(), polygons))
  return features


class ChoroplethSpec:

  def __init__(
      self,
      geometry,
      value='rsi',
      vmin=-1.0,
      vmax=1.0,
      missing_style=MISSING_FILL,
      title='Geospatial Relative Specialization Index (RSI) map',
      width=800,
      height=700,
  ):
    if value != 'rsi':
      raise ConfigError('only the rsi indicator can be mapped, got {!r}'.format(
          value))
    if not vmin < 0 < vmax:
      raise ConfigError('the diverging scale needs vmin < 0 < vmax')
    self.geometry = list(geometry)
    self.value = value
    self.vmin = vmin
    self.vmax = vmax
    self.missing_style = missing_style
    self.title = title
    self.width = width
    self.height = height


def _bounds(features):
  xs = [x for f in features for p in f.polygons for r in p for x, _ in r]
  ys = [y for f in features for p in f.polygons for r in p for _, y in r]
  if not xs:
    raise BadGeometry('geometry holds no coordinates')
  return min(xs), min(ys), max(xs), max(ys)


def _closed(ring):
  return ring if ring[0] == ring[-1] else ring + [ring[0]]


def feature_path(polygons):
  """ One compound path holding every ring of a feature. """
  return Path.make_compound_path(*[
      Path(_closed(ring), closed=True)
      for polygon in polygons
      for ring in polygon
      if ring
  ])


def draw_choropleth(rows, spec):
  """ Draws one patch per feature, gid `region-<nuts>`, filled by RSI. """
  values = {row.nuts: float(row.rsi) for row in rows}
  mapped = {f.nuts for f in spec.geometry}
  unmapped = sorted(set(values) - mapped)
  if unmapped:
    logger.info('{} regions have no geometry: {}'.format(
        len(unmapped), ', '.join(unmapped)))

  x0, y0, x1, y1 = _bounds(spec.geometry)
  fig, ax = new_figure(spec.width, spec.height)
  missing = 0
  for feature in spec.geometry:
    value = values.get(feature.nuts)
    if value is None:
      fill = spec.missing_style
      missing += 1
    else:
      fill = diverging_color(value, vmin=spec.vmin, vmax=spec.vmax)
    ax.add_patch(
        PathPatch(feature_path(feature.polygons),
                  facecolor=fill,
                  edgecolor='#ffffff',
                  linewidth=0.3,
                  gid='region-{}'.format(feature.nuts)))

  pad_x = 0.02 * ((x1 - x0) or 1.0)
  pad_y = 0.02 * ((y1 - y0) or 1.0)
  ax.set_xlim(x0 - pad_x, x1 + pad_x)
  ax.set_ylim(y0 - pad_y, y1 + pad_y)
  ax.set_aspect('equal')
  ax.set_axis_off()
  if spec.title:
    ax.set_title(plain_text(spec.title))

  mappable = ScalarMappable(norm=rsi_norm(vmin=spec.vmin, vmax=spec.vmax),
                            cmap=RSI_CMAP)
  mappable.set_array([])
  colorbar = fig.colorbar(mappable,
                          ax=ax,
                          orientation='horizontal',
                          fraction=0.05,
                          pad=0.02,
                          label='RSI')
  colorbar.set_ticks([v for v, _ in legend_stops(vmin=spec.vmin,
                                                 vmax=spec.vmax)])
  if missing:
    ax.legend(handles=[Patch(facecolor=spec.missing_style, label='no data')],
              loc='lower left',
              frameon=False)
  return fig


def render_choropleth(rows, spec):
  return figure_to_svg(draw_choropleth(rows, spec))
