#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.
import numpy

import octovector.errors as errors
import octovector.imagecore as imagecore
import octovector.segmentation as segmentation


def coverage_alpha(masks: list, width: int = None, height: int = None) -> imagecore.ScalarMap:
    """
    :return: 1.0 where any of the masks is set, 0.0 elsewhere
    width and height are only required when masks is empty
    """
    if not masks:
        if width is None or height is None:
            raise ValueError("Coverage alpha of an empty mask list requires width and height")
        return imagecore.ScalarMap.zeros(width, height)
    shape = masks[0].shape
    alpha = numpy.zeros(shape, dtype=bool)
    for mask in masks:
        if mask.shape != shape:
            raise errors.DimensionMismatchError(f"Coverage alpha: mask shapes {shape} and {mask.shape} differ")
        alpha |= mask.bits
    return imagecore.ScalarMap(alpha.astype(numpy.float64))


def find_uncovered_points(alpha: imagecore.ScalarMap, radius: float) -> list:
    """
    :return: in row-major order, the points whose whole radius disc is uncovered (out of image cells count as
    uncovered)
    """
    if not alpha.is_binary():
        raise ValueError("Uncovered points detection requires a binary coverage alpha")
    covered_neighbours = imagecore.convolve_binary(alpha, imagecore.make_circular_kernel(radius))
    rows, columns = numpy.nonzero(covered_neighbours.data == 0)
    return [segmentation.PromptPoint(int(x), int(y)) for y, x in zip(rows, columns)]
