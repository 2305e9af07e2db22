#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.
import math

import numpy

import octovector.constants as constants
import octovector.errors as errors
import octovector.tracing.contour as contour_import


def corner_k(contour_length: int) -> int:
    return max(constants.MIN_CORNER_K, math.ceil(contour_length / constants.CORNER_K_CONTOUR_DIVIDER))


def corner_strength(contour: contour_import.Contour, k: int = None) -> numpy.ndarray:
    """
    k-cosine corner measure: 1 - cos of the turning angle between the incoming (i - k -> i) and outgoing
    (i -> i + k) vectors of each contour point, in [0, 2]
    """
    length = len(contour)
    k = corner_k(length) if k is None else k
    if k < 1 or length <= 2 * k:
        raise errors.ContourError(f"Contour of {length} points is too short for a k-cosine with k={k}")
    points = contour.points.astype(numpy.float64)
    incoming = points - numpy.roll(points, k, axis=0)
    outgoing = numpy.roll(points, -k, axis=0) - points
    norms = numpy.linalg.norm(incoming, axis=1) * numpy.linalg.norm(outgoing, axis=1)
    dots = (incoming * outgoing).sum(axis=1)
    cosines = numpy.divide(dots, norms, out=numpy.ones(length), where=norms > 0)
    return 1 - numpy.clip(cosines, -1, 1)


def cyclic_distance(indexes, index: int, length: int):
    distance = numpy.abs(numpy.asarray(indexes) - index) % length
    return numpy.minimum(distance, length - distance)


def select_corners(strengths, contour: contour_import.Contour, count: int, suppress: float = None) -> list:
    """
    Pick count corners by repeatedly selecting the strongest remaining point and removing its neighbors
    closer than suppress along the contour
    :return: the sorted corner indexes
    """
    length = len(contour)
    strengths = numpy.asarray(strengths, dtype=numpy.float64)
    if count < 2:
        raise ValueError(f"At least 2 corners are required, got {count}")
    if length < count or len(strengths) != length:
        raise ValueError(f"Can't select {count} corners from a {length} points contour "
                         f"with {len(strengths)} strengths")
    suppress = length / (2 * count) if suppress is None else suppress
    indexes = numpy.arange(length)
    candidates = numpy.ones(length, dtype=bool)
    corners = []
    while len(corners) < count and candidates.any():
        # argmax returns the first index on ties
        corner = int(numpy.argmax(numpy.where(candidates, strengths, -numpy.inf)))
        corners.append(corner)
        candidates &= cyclic_distance(indexes, corner, length) > suppress
    if len(corners) < count:
        _complete_evenly(corners, count, length)
    return sorted(corners)


def _complete_evenly(corners: list, count: int, length: int):
    origin = corners[0]
    spaced = [(origin + math.floor(step * length / count + 0.5)) % length for step in range(count)]
    for index in spaced + list(range(length)):
        if len(corners) == count:
            return
        if index not in corners:
            corners.append(index)
