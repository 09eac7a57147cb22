#
# SPDX-License-Identifier: MIT
#

from ..analysis import compute_rows
from ..analysis.ranking import meets_focal_threshold
from ..errors import ConfigError
from ..render import (DEFAULT_KEY_PROPERTY, ChoroplethSpec, fig1_spec,
                      fig3_spec, load_geometry, render_choropleth,
                      render_scatter)
from .common import Run, RunConfig

HELP = 'Render a figure as SVG.'

DESCRIPTION = """
Figures:

  fig1  focal output (x) vs. focal citations (y) of every region, bubbles
        sized and coloured by RSI.
  fig3  RSI (x) vs. RCI (y) of the regions with at least --min-focal-docs
        focal documents, with reference lines at RSI = 0 and RCI = 1.
  map   RSI choropleth on a diverging scale centred at 0. Needs --geojson, a
        FeatureCollection of projected NUTS-3 polygons keyed by --geojson-key.

The figure is written to <figure>.svg under --out-dir.

Examples:

$ geospec plot fig3 --input ai_nuts3.csv --out-dir out/
$ geospec plot map --input ai_nuts3.csv --geojson nuts3_3035.geojson
"""

FIGURES = ('fig1', 'fig3', 'map')


def attach_args(parser):
  defaults = {
      '--geojson-key': DEFAULT_KEY_PROPERTY,
      '--label-top-k': 8,
  }
  parser.add_argument('figure', choices=FIGURES, help='Figure to render.')
  parser.add_argument(
      '--geojson',
      type=str,
      default=None,
      help='GeoJSON FeatureCollection of NUTS-3 polygons, required by map.',
  )
  parser.add_argument(
      '--geojson-key',
      type=str,
      default=defaults['--geojson-key'],
      help='Feature property holding the NUTS-3 code. Default: {}'.format(
          defaults['--geojson-key']),
  )
  parser.add_argument(
      '--label-top-k',
      type=int,
      default=defaults['--label-top-k'],
      help='Scatter plots label the k regions furthest from the centroid. '
      'Default: {}'.format(defaults['--label-top-k']),
  )
  return parser


def render(run, rows, config):
  figure = run.config.figure
  if figure == 'fig1':
    return render_scatter(rows, fig1_spec(label_top_k=run.config.label_top_k))
  if figure == 'fig3':
    kept = [r for r in rows if meets_focal_threshold(r, config)]
    return render_scatter(kept, fig3_spec(label_top_k=run.config.label_top_k))
  geometry = load_geometry(run.config.geojson,
                           key_property=run.config.geojson_key)
  return render_choropleth(rows, ChoroplethSpec(geometry))


def main(args):
  if args.figure == 'map' and args.geojson is None:
    raise ConfigError('plot map requires --geojson')
  run = Run(RunConfig(args))
  config = run.analysis_config()
  rows = compute_rows(run.records, config)
  svg = render(run, rows, config)
  path = run.path('{}.svg'.format(run.config.figure))
  with open(path, 'wb') as f:
    f.write(svg)
  print('{} written to {}'.format(run.config.figure, path))
  run.write_metadata()
  return 0
