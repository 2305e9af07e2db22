#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.
import dataclasses

import numpy

import octobot_commons.logging as logging

import octovector.constants as constants
import octovector.errors as errors
import octovector.imagecore as imagecore
import octovector.segmentation as segmentation
import octovector.selection as selection
import octovector.tracing.contour as contour_import
import octovector.tracing.corners as corners_import

LOGGER_NAME = "BezierFitting"
CLOSURE_TOLERANCE = 1e-9


def bernstein_weights(parameters) -> numpy.ndarray:
    """
    :return: the (len(parameters), 4) cubic Bernstein basis evaluated at each parameter
    """
    t = numpy.asarray(parameters, dtype=numpy.float64)[:, None]
    return numpy.hstack([(1 - t) ** 3, 3 * t * (1 - t) ** 2, 3 * t ** 2 * (1 - t), t ** 3])


@dataclasses.dataclass(frozen=True)
class CubicSegment:
    p0: tuple
    p1: tuple
    p2: tuple
    p3: tuple

    @classmethod
    def from_array(cls, control_points) -> "CubicSegment":
        return cls(*(tuple(float(value) for value in point) for point in control_points))

    def control_points(self) -> numpy.ndarray:
        return numpy.array([self.p0, self.p1, self.p2, self.p3], dtype=numpy.float64)

    def evaluate(self, parameters) -> numpy.ndarray:
        return bernstein_weights(parameters) @ self.control_points()

    def translated(self, offset_x: float, offset_y: float) -> "CubicSegment":
        return CubicSegment.from_array(self.control_points() + (offset_x, offset_y))


class BezierPath:
    """
    Closed chain of cubic segments: each segment ends where the next one starts, the last one ends on the
    first start point
    """

    def __init__(self, segments, fill):
        self.segments: tuple = tuple(segments)
        if not self.segments:
            raise ValueError("A bezier path requires at least one segment")
        for index, segment in enumerate(self.segments):
            following = self.segments[(index + 1) % len(self.segments)]
            if not numpy.allclose(segment.p3, following.p0, rtol=0, atol=CLOSURE_TOLERANCE):
                raise ValueError(f"Segment {index} ends at {segment.p3} while the next one starts at {following.p0}")
        fill = tuple(float(channel) for channel in fill)
        if len(fill) != 3 or not all(0 <= channel <= 1 for channel in fill):
            raise ValueError(f"Invalid fill color {fill}")
        self.fill: tuple = fill

    @classmethod
    def from_points(cls, points, fill) -> "BezierPath":
        """
        :param points: the (3 * segment count, 2) array of the [p0, p1, p2] control points of each segment,
        a segment p3 being the next segment p0
        """
        points = numpy.asarray(points, dtype=numpy.float64)
        count = len(points) // 3
        return cls(
            [
                CubicSegment.from_array([points[3 * index], points[3 * index + 1], points[3 * index + 2],
                                         points[(3 * index + 3) % len(points)]])
                for index in range(count)
            ],
            fill
        )

    def to_points(self) -> numpy.ndarray:
        return numpy.array([point for segment in self.segments for point in (segment.p0, segment.p1, segment.p2)],
                           dtype=numpy.float64)

    def distinct_point_count(self) -> int:
        # closed chain: every p3 is shared with the next p0
        return 3 * len(self.segments)

    def translated(self, offset_x: float, offset_y: float) -> "BezierPath":
        return BezierPath([segment.translated(offset_x, offset_y) for segment in self.segments], self.fill)

    def __eq__(self, other):
        return isinstance(other, BezierPath) and self.segments == other.segments and self.fill == other.fill

    def __hash__(self):
        return hash((self.segments, self.fill))

    def __repr__(self):
        return f"{self.__class__.__name__}({len(self.segments)} segments, fill={self.fill})"


def _chord_thirds(start: numpy.ndarray, end: numpy.ndarray) -> CubicSegment:
    return CubicSegment.from_array([start, start + (end - start) / 3, start + 2 * (end - start) / 3, end])


def fit_cubic(points) -> CubicSegment:
    """
    Least squares cubic through ordered points: chord-length parameters, end points clamped on the first
    and last point, inner control points solved in closed form
    """
    points = numpy.asarray(points, dtype=numpy.float64)
    if len(points) < 2:
        raise ValueError(f"Fitting a cubic requires at least 2 points, got {len(points)}")
    start, end = points[0], points[-1]
    if len(points) - 2 < 2:
        return _chord_thirds(start, end)
    chords = numpy.cumsum(numpy.linalg.norm(numpy.diff(points, axis=0), axis=1))
    if chords[-1] == 0:
        return _chord_thirds(start, end)
    weights = bernstein_weights(numpy.concatenate([[0.0], chords / chords[-1]]))
    residuals = points - numpy.outer(weights[:, 0], start) - numpy.outer(weights[:, 3], end)
    inner, _, rank, _ = numpy.linalg.lstsq(weights[:, 1:3], residuals, rcond=None)
    if rank < 2:
        return _chord_thirds(start, end)
    return CubicSegment.from_array([start, inner[0], inner[1], end])


def fit_path(contour: contour_import.Contour, corners: list, image: imagecore.RasterImage,
             mask: segmentation.Mask) -> BezierPath:
    """
    Fit one cubic per corner to corner arc of the contour pixel centers
    :return: the closed path filled with the mean image color under the mask
    """
    length = len(contour)
    if len(corners) < 2 or list(corners) != sorted(set(corners)) or corners[-1] >= length or corners[0] < 0:
        raise ValueError(f"Corners must be at least 2 sorted distinct contour indexes, got {corners}")
    centers = contour.centers()
    segments = []
    for index, corner in enumerate(corners):
        following = corners[(index + 1) % len(corners)]
        if following <= corner:
            following += length
        segments.append(fit_cubic(centers[numpy.arange(corner, following + 1) % length]))
    return BezierPath(segments, selection.mean_color(image, mask))


def trace_mask(mask: segmentation.Mask, image: imagecore.RasterImage,
               segments: int = constants.DEFAULT_SEGMENTS_PER_PATH) -> list:
    """
    :return: a BezierPath per traceable component of mask, all filled with the mean color of the whole mask
    """
    logger = logging.get_logger(LOGGER_NAME)
    paths = []
    for component in contour_import.trace_components(mask):
        try:
            strengths = corners_import.corner_strength(component.contour)
            corners = corners_import.select_corners(strengths, component.contour, segments)
        except (errors.ContourError, ValueError) as err:
            logger.debug(f"Skipping component of area {component.mask.area}: {err}")
            continue
        paths.append(fit_path(component.contour, corners, image, mask))
    return paths
