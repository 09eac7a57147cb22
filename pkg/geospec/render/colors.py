#
# SPDX-License-Identifier: MIT
#
""" Continuous diverging colour scale centred at 0.

Every RGB channel is non-increasing from the low end to the high end, so
higher values are never lighter: pale orange for under-specialization, a
neutral sand tone at 0, deep blue for strong specialization.
"""

import matplotlib.colors as mcolors

# (position on [0, 1], '#rrggbb'); position 0.5 is the value 0.
STOPS = (
    (0.0, '#fff7ec'),
    (0.25, '#fdd49e'),
    (0.5, '#c8be96'),
    (0.75, '#429296'),
    (1.0, '#08306b'),
)
MIDPOINT = '#c8be96'

# An odd lookup table size puts every stop on an exact table entry.
RSI_CMAP = mcolors.LinearSegmentedColormap.from_list('geospec_rsi',
                                                     list(STOPS),
                                                     N=257)


def rsi_norm(vmin=-1.0, vmax=1.0):
  if not vmin < 0.0 < vmax:
    raise ValueError('diverging scale needs vmin < 0 < vmax, got [{}, {}]'.format(
        vmin, vmax))
  return mcolors.TwoSlopeNorm(vcenter=0.0, vmin=vmin, vmax=vmax)


def luminance(color):
  r, g, b = (255 * c for c in mcolors.to_rgb(color))
  return 0.2126 * r + 0.7152 * g + 0.0722 * b


def diverging_color(value, vmin=-1.0, vmax=1.0):
  norm = rsi_norm(vmin=vmin, vmax=vmax)
  value = min(max(float(value), vmin), vmax)
  return mcolors.to_hex(RSI_CMAP(float(norm(value))))


def legend_stops(vmin=-1.0, vmax=1.0, n=5):
  """ `n` evenly spaced (value, colour) pairs on each side of 0, 0 included. """
  half = n // 2
  values = [vmin * (half - i) / half for i in range(half)] + [0.0] + [
      vmax * (i + 1) / half for i in range(half)
  ]
  return [(v, diverging_color(v, vmin=vmin, vmax=vmax)) for v in values]
