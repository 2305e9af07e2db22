#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.

from octovector.tracing import contour
from octovector.tracing import corners
from octovector.tracing import bezier_fitting

from octovector.tracing.contour import (
    Contour,
    ComponentContour,
    trace_components,
    extract_contour,
)
from octovector.tracing.corners import (
    corner_k,
    corner_strength,
    cyclic_distance,
    select_corners,
)
from octovector.tracing.bezier_fitting import (
    bernstein_weights,
    CubicSegment,
    BezierPath,
    fit_cubic,
    fit_path,
    trace_mask,
)

__all__ = [
    "Contour",
    "ComponentContour",
    "trace_components",
    "extract_contour",
    "corner_k",
    "corner_strength",
    "cyclic_distance",
    "select_corners",
    "bernstein_weights",
    "CubicSegment",
    "BezierPath",
    "fit_cubic",
    "fit_path",
    "trace_mask",
]
