#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.
import typing

import numpy

import octobot_commons.logging as logging

import octovector.constants as constants
import octovector.errors as errors
import octovector.imagecore as imagecore
import octovector.segmentation as segmentation

LOGGER_NAME = "Contour"

# clockwise on screen (y axis pointing down), starting west
MOORE_OFFSETS = ((-1, 0), (-1, -1), (0, -1), (1, -1), (1, 0), (1, 1), (0, 1), (-1, 1))
MOORE_DIRECTIONS = {offset: direction for direction, offset in enumerate(MOORE_OFFSETS)}
WEST = 0


class Contour:
    """
    Closed outer boundary of a pixel component: consecutive boundary pixels are 8-adjacent and the last one
    connects back to the first. Points are integer pixel coordinates, oriented with a positive shoelace area
    in (x, y) pixel coordinates.
    A one pixel wide spur is walked forth and back, its pixels then appear twice.
    """

    def __init__(self, points):
        points = numpy.array(points, dtype=numpy.int64).reshape(-1, 2)
        points.flags.writeable = False
        self.points: numpy.ndarray = points

    def __len__(self):
        return len(self.points)

    def centers(self) -> numpy.ndarray:
        return self.points + 0.5

    def signed_area(self) -> float:
        x, y = self.points[:, 0], self.points[:, 1]
        return float((x * numpy.roll(y, -1) - numpy.roll(x, -1) * y).sum() / 2)

    def __eq__(self, other):
        return isinstance(other, Contour) and numpy.array_equal(self.points, other.points)

    def __hash__(self):
        return hash(self.points.tobytes())

    def __repr__(self):
        return f"{self.__class__.__name__}({len(self)} points)"


class ComponentContour(typing.NamedTuple):
    mask: segmentation.Mask
    contour: Contour


def _moore_trace(bits: numpy.ndarray) -> list:
    """
    Moore neighbor tracing, stopped when a (pixel, backtrack) state repeats
    :param bits: a single component padded with a false border
    :return: the boundary pixels as (x, y) tuples in bits coordinates
    """
    rows, columns = numpy.nonzero(bits)
    # the first raster pixel always has a background west neighbor
    current, backtrack = (int(columns[0]), int(rows[0])), WEST
    boundary = []
    visited_states = {}
    # a tracing step is fully defined by its state: the walk is periodic once a state repeats
    while (current, backtrack) not in visited_states:
        visited_states[(current, backtrack)] = len(boundary)
        boundary.append(current)
        for turn in range(1, 9):
            direction = (backtrack + turn) % 8
            offset_x, offset_y = MOORE_OFFSETS[direction]
            candidate = (current[0] + offset_x, current[1] + offset_y)
            if bits[candidate[1], candidate[0]]:
                previous_x, previous_y = MOORE_OFFSETS[(direction - 1) % 8]
                backtrack = MOORE_DIRECTIONS[
                    (current[0] + previous_x - candidate[0], current[1] + previous_y - candidate[1])
                ]
                current = candidate
                break
        else:
            # isolated pixel
            return boundary
    return boundary[visited_states[(current, backtrack)]:]


def trace_components(mask: segmentation.Mask, min_area: int = constants.MIN_TRACEABLE_AREA) -> list:
    """
    :return: a ComponentContour for each 4-connected component of the mask having a contour of at least 3
    points, in label order
    """
    logger = logging.get_logger(LOGGER_NAME)
    if mask.area < min_area:
        raise errors.InvalidMaskError(f"Mask area {mask.area} is below the minimum traceable area {min_area}")
    labels, count = imagecore.label_components(mask.bits)
    traced = []
    for label in range(1, count + 1):
        component_bits = labels == label
        rows, columns = numpy.nonzero(component_bits)
        top, left = rows.min(), columns.min()
        padded = numpy.pad(component_bits[top:rows.max() + 1, left:columns.max() + 1], 1)
        boundary = numpy.array(_moore_trace(padded)) + (left - 1, top - 1)
        if len(boundary) < 3:
            logger.debug(f"Skipping component {label} with a {len(boundary)} points contour")
            continue
        contour = Contour(boundary)
        if contour.signed_area() < 0:
            contour = Contour(boundary[::-1])
        traced.append(ComponentContour(mask.with_bits(component_bits), contour))
    return traced


def extract_contour(mask: segmentation.Mask, min_area: int = constants.MIN_TRACEABLE_AREA) -> list:
    return [component.contour for component in trace_components(mask, min_area)]
