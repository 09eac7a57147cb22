#
# SPDX-License-Identifier: MIT
#

from .nuts import country_of, parse_nuts
from .readers import (DATASET_HEADER, REFERENCE_HEADER, PublishedEntry,
                      load_published_ranking, load_reference, parse_dataset,
                      write_dataset, write_reference)
from .reference import compute_reference, drop_region
