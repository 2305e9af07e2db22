#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.
import math
import typing

import numpy
import scipy.ndimage

import octovector.imagecore.raster_image as raster_image

# edge-adjacent neighbors only
FOUR_CONNECTIVITY = scipy.ndimage.generate_binary_structure(2, 1)


class Component(typing.NamedTuple):
    pixels: numpy.ndarray  # (count, 2) array of (x, y) coordinates in row-major order
    centroid: tuple  # (x, y)


def difference_map(target: raster_image.RasterImage, render: raster_image.RasterImage) -> raster_image.ScalarMap:
    raster_image.ensure_same_size(target, render, "difference map")
    return raster_image.ScalarMap(numpy.abs(target.data - render.data).sum(axis=2))


def label_components(bits: numpy.ndarray) -> (numpy.ndarray, int):
    """
    :return: the 4-connected labels of the true pixels of bits (0 is background) and the label count
    """
    return scipy.ndimage.label(bits, structure=FOUR_CONNECTIVITY)


def _round_half_up(value: float) -> int:
    return math.floor(value + 0.5)


def connected_components(binary: raster_image.ScalarMap) -> list:
    if not binary.is_binary():
        raise ValueError("Connected components require a binary map (values in {0, 1})")
    labels, count = label_components(binary.data == 1)
    components = []
    for label in range(1, count + 1):
        rows, columns = numpy.nonzero(labels == label)
        components.append(Component(
            pixels=numpy.stack([columns, rows], axis=1),
            centroid=(_round_half_up(columns.mean()), _round_half_up(rows.mean()))
        ))
    return components
