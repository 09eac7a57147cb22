#
# SPDX-License-Identifier: MIT
#

from .choropleth import (DEFAULT_KEY_PROPERTY, MISSING_FILL, ChoroplethSpec,
                         draw_choropleth, load_geometry, render_choropleth)
from .colors import (MIDPOINT, RSI_CMAP, diverging_color, legend_stops,
                     luminance, rsi_norm)
from .scatter import (ScatterSpec, draw_scatter, fig1_spec, fig3_spec,
                      render_scatter)
from .svg import figure_to_svg
