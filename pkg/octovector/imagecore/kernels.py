#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.
import math

import numpy
import scipy.ndimage

import octovector.imagecore.raster_image as raster_image


class BinaryKernel:
    """
    Square boolean grid of side 2 * floor(radius) + 1 holding the disc of the given radius
    """

    def __init__(self, radius: float, cells):
        self.radius: float = radius
        cells = numpy.array(cells, dtype=bool)
        cells.flags.writeable = False
        self.cells: numpy.ndarray = cells

    @property
    def side(self) -> int:
        return self.cells.shape[0]

    @property
    def cell_count(self) -> int:
        return int(self.cells.sum())

    def __eq__(self, other):
        return isinstance(other, BinaryKernel) and self.radius == other.radius \
            and numpy.array_equal(self.cells, other.cells)

    def __hash__(self):
        return hash((self.radius, self.cells.tobytes()))

    def __repr__(self):
        return f"{self.__class__.__name__}(radius={self.radius}, cells={self.cell_count})"


def make_circular_kernel(radius: float) -> BinaryKernel:
    if radius < 1:
        raise ValueError(f"Circular kernel radius must be >= 1, got {radius}")
    half_side = math.floor(radius)
    offsets = numpy.arange(-half_side, half_side + 1, dtype=numpy.float64)
    rows, columns = numpy.meshgrid(offsets, offsets, indexing="ij")
    return BinaryKernel(radius, numpy.sqrt(rows ** 2 + columns ** 2) <= radius)


def kernel_radius_for(width: int, height: int, kernel_fraction: float, min_radius: int) -> int:
    # half-up rounding, round() would use banker's rounding
    return max(min_radius, math.floor(kernel_fraction * min(width, height) + 0.5))


def convolve_binary(scalar_map: raster_image.ScalarMap, kernel: BinaryKernel) -> raster_image.ScalarMap:
    if scalar_map.data.size == 0:
        raise ValueError("Can't convolve an empty scalar map")
    # the kernel is symmetric: correlation and convolution are identical
    return raster_image.ScalarMap(
        scipy.ndimage.correlate(
            scalar_map.data, kernel.cells.astype(numpy.float64), mode="constant", cval=0.0
        )
    )
