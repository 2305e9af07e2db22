#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.

from octovector.selection import canvas
from octovector.selection import impact_filter
from octovector.selection import uncovered_regions
from octovector.selection import clustering

from octovector.selection.canvas import (
    Canvas,
    mean_color,
    composite,
    canvas_error,
)
from octovector.selection.impact_filter import (
    ImpactDecision,
    KeptMask,
    ImpactFilterResult,
    sort_by_area,
    filter_by_impact,
)
from octovector.selection.uncovered_regions import (
    coverage_alpha,
    find_uncovered_points,
)
from octovector.selection.clustering import (
    mean_shift,
)

__all__ = [
    "Canvas",
    "mean_color",
    "composite",
    "canvas_error",
    "ImpactDecision",
    "KeptMask",
    "ImpactFilterResult",
    "sort_by_area",
    "filter_by_impact",
    "coverage_alpha",
    "find_uncovered_points",
    "mean_shift",
]
