#
# SPDX-License-Identifier: MIT
#

from collections import namedtuple

import numpy as np

from ..errors import ConfigError, EmptyInput
from ..log import get_logger
from .colors import RSI_CMAP, rsi_norm
from .svg import figure_to_svg, new_figure, plain_text

logger = get_logger(__name__)

X_AXES = ('docs', 'rsi')
Y_AXES = ('cites', 'rci')
ENCODINGS = (None, 'rsi')

AXIS_TITLES = {
    'docs': 'Documents',
    'cites': 'Citations',
    'rsi': 'Relative Specialization Index (RSI)',
    'rci': 'Relative Citation Impact (RCI)',
}

ReferenceLine = namedtuple('ReferenceLine', ['axis', 'value'])

_PADDING = 0.05
_LABEL_OFFSET = 4
_R_MIN, _R_MAX, _R_PLAIN = 3.0, 18.0, 4.0


class ScatterSpec:

  def __init__(
      self,
      x_axis='rsi',
      y_axis='rci',
      bubble_encoding=None,
      reference_lines=(),
      label_top_k=0,
      title=None,
      width=800,
      height=600,
  ):
    if x_axis not in X_AXES:
      raise ConfigError('x_axis must be one of {}, got {!r}'.format(
          X_AXES, x_axis))
    if y_axis not in Y_AXES:
      raise ConfigError('y_axis must be one of {}, got {!r}'.format(
          Y_AXES, y_axis))
    if bubble_encoding not in ENCODINGS:
      raise ConfigError('bubble_encoding must be one of {}, got {!r}'.format(
          ENCODINGS, bubble_encoding))
    if isinstance(label_top_k, bool) or not isinstance(
        label_top_k, int) or label_top_k < 0:
      raise ConfigError('label_top_k must be an integer >= 0, got {!r}'.format(
          label_top_k))
    lines = []
    for axis, value in reference_lines:
      if axis not in ('x', 'y'):
        raise ConfigError('reference line axis must be x or y, got {!r}'.format(
            axis))
      lines.append(ReferenceLine(axis, float(value)))
    self.x_axis = x_axis
    self.y_axis = y_axis
    self.bubble_encoding = bubble_encoding
    self.reference_lines = tuple(lines)
    self.label_top_k = label_top_k
    self.title = title
    self.width = width
    self.height = height


def fig1_spec(label_top_k=5):
  return ScatterSpec(
      x_axis='docs',
      y_axis='cites',
      bubble_encoding='rsi',
      label_top_k=label_top_k,
      title='Output vs. cites',
  )


def fig3_spec(label_top_k=8):
  return ScatterSpec(
      x_axis='rsi',
      y_axis='rci',
      reference_lines=(('x', 0.0), ('y', 1.0)),
      label_top_k=label_top_k,
      title='Relative Specialization Index (RSI) vs. '
      'Relative Citation Impact (RCI)',
  )


def axis_value(row, axis):
  if axis == 'docs':
    return row.focal_docs
  if axis == 'cites':
    return row.focal_cites
  if axis == 'rsi':
    return float(row.rsi)
  return row.rci.value if row.rci.defined else None


def _range(values, extra=()):
  lo = min(list(values) + list(extra))
  hi = max(list(values) + list(extra))
  span = hi - lo
  if span == 0:
    span = max(abs(lo), 1.0)
    return lo - span / 2, hi + span / 2
  return lo - _PADDING * span, hi + _PADDING * span


def _radii(rows, spec):
  if spec.bubble_encoding is None:
    return [_R_PLAIN] * len(rows)
  values = np.array([float(r.rsi) for r in rows])
  spread = values.max() - values.min()
  if spread == 0:
    return [_R_MIN] * len(rows)
  # Area, not radius, follows the encoded value.
  scaled = np.sqrt(np.abs(values - values.min()) / spread)
  return [float(_R_MIN + (_R_MAX - _R_MIN) * s) for s in scaled]


def _labelled(points, k):
  """ Indices of the k points furthest from the centroid, axes normalised. """
  if k == 0 or len(points) == 0:
    return []
  xy = np.array([(p[0], p[1]) for p in points], dtype=float)
  span = xy.max(axis=0) - xy.min(axis=0)
  span[span == 0] = 1.0
  distance = np.sqrt((((xy - xy.mean(axis=0)) / span)**2).sum(axis=1))
  order = sorted(range(len(points)), key=lambda i: (-distance[i], points[i][2]))
  return order[:k]


def point_urls(rows):
  return ['#{}'.format(row.nuts) for row in rows]


def draw_scatter(rows, spec):
  """ Draws one marker per row with both axis values defined.

  The markers form a single collection with gid `points` whose per-marker
  urls are `#<nuts>`; reference lines and labels carry the gids
  `reference-line-<axis>-<i>` and `label-<nuts>`.
  """
  kept = []
  for row in rows:
    x, y = axis_value(row, spec.x_axis), axis_value(row, spec.y_axis)
    if x is None or y is None:
      logger.info('Not plotting {} ({}): no {} value'.format(
          row.nuts, row.name, spec.y_axis if y is None else spec.x_axis))
      continue
    kept.append((row, x, y))
  if not kept:
    raise EmptyInput('no row has both {} and {} values to plot'.format(
        spec.x_axis, spec.y_axis))

  kept_rows = [row for row, _, _ in kept]
  xs = np.array([x for _, x, _ in kept], dtype=float)
  ys = np.array([y for _, _, y in kept], dtype=float)
  x_lo, x_hi = _range(xs,
                      [l.value for l in spec.reference_lines if l.axis == 'x'])
  y_lo, y_hi = _range(ys,
                      [l.value for l in spec.reference_lines if l.axis == 'y'])

  fig, ax = new_figure(spec.width, spec.height)
  ax.set_xlim(x_lo, x_hi)
  ax.set_ylim(y_lo, y_hi)
  ax.grid(True, color='#e5e5e5', linewidth=0.8)
  ax.set_axisbelow(True)
  ax.set_xlabel(AXIS_TITLES[spec.x_axis])
  ax.set_ylabel(AXIS_TITLES[spec.y_axis])
  if spec.title is not None:
    ax.set_title(plain_text(spec.title))

  for i, line in enumerate(spec.reference_lines):
    draw = ax.axvline if line.axis == 'x' else ax.axhline
    draw(line.value,
         color='#b22222',
         linestyle='--',
         linewidth=1.2,
         zorder=1,
         gid='reference-line-{}-{}'.format(line.axis, i))

  radii = _radii(kept_rows, spec)
  # Marker area is given in points^2.
  sizes = [(2 * r)**2 for r in radii]
  if spec.bubble_encoding == 'rsi':
    colour = dict(c=[float(row.rsi) for row in kept_rows],
                  cmap=RSI_CMAP,
                  norm=rsi_norm())
  else:
    colour = dict(color='#4c72b0')
  points = ax.scatter(xs,
                      ys,
                      s=sizes,
                      edgecolors='#333333',
                      linewidths=0.5,
                      alpha=0.8,
                      zorder=2,
                      gid='points',
                      urls=point_urls(kept_rows),
                      **colour)
  if spec.bubble_encoding == 'rsi':
    fig.colorbar(points, ax=ax, label='RSI')

  centre = np.array([xs.mean(), ys.mean()])
  span = np.array([x_hi - x_lo, y_hi - y_lo])
  for i in _labelled([(x, y, row.nuts) for row, x, y in kept],
                     spec.label_top_k):
    row, x, y = kept[i]
    direction = (np.array([x, y]) - centre) / span
    norm = float(np.hypot(*direction))
    if norm == 0:
      direction, norm = np.array([1.0, 0.0]), 1.0
    offset = radii[i] + _LABEL_OFFSET
    dx, dy = direction / norm * offset
    ax.annotate(plain_text(row.name),
                xy=(x, y),
                xytext=(float(dx), float(dy)),
                textcoords='offset points',
                ha='left' if dx >= 0 else 'right',
                va='center',
                fontsize=8,
                gid='label-{}'.format(row.nuts))
  return fig


def render_scatter(rows, spec):
  return figure_to_svg(draw_scatter(rows, spec))
