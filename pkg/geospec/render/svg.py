#
# SPDX-License-Identifier: MIT
#

import io

import matplotlib
from matplotlib.figure import Figure

SVG_NS = 'http://www.w3.org/2000/svg'
XLINK_NS = 'http://www.w3.org/1999/xlink'
DPI = 100

# A fixed salt makes the generated clip-path ids stable across runs, and
# `none` keeps labels as <text> elements instead of glyph outlines.
SVG_RC = {
    'svg.hashsalt': 'geospec',
    'svg.fonttype': 'none',
}


def new_figure(width, height):
  """ A pyplot-free figure of `width` x `height` pixels with one axes. """
  fig = Figure(figsize=(width / DPI, height / DPI), dpi=DPI)
  ax = fig.add_subplot(1, 1, 1)
  return fig, ax


def plain_text(s):
  # `$` would otherwise switch matplotlib into mathtext.
  return str(s).replace('$', r'\$')


def figure_to_svg(fig):
  """ Serializes `fig` as SVG bytes; identical figures give identical bytes. """
  buf = io.BytesIO()
  with matplotlib.rc_context(SVG_RC):
    fig.savefig(buf, format='svg', metadata={'Date': None})
  return buf.getvalue()
