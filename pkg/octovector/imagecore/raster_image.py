#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.
import numpy

import octovector.errors as errors


def _read_only(array: numpy.ndarray) -> numpy.ndarray:
    array.flags.writeable = False
    return array


class RasterImage:
    """
    Dense RGB pixel grid, stored as a read-only (height, width, 3) float64 array in [0, 1]
    """

    def __init__(self, data):
        data = numpy.array(data, dtype=numpy.float64)
        if data.ndim != 3 or data.shape[2] != 3:
            raise errors.DimensionMismatchError(f"RGB image data must be shaped (height, width, 3), got {data.shape}")
        if data.shape[0] == 0 or data.shape[1] == 0:
            raise errors.ImageFormatError(f"Zero-dimension image: {data.shape[1]}x{data.shape[0]}")
        if not numpy.all(numpy.isfinite(data)) or data.min() < 0 or data.max() > 1:
            raise ValueError("Image channel values must be in [0, 1]")
        self.data: numpy.ndarray = _read_only(data)

    @classmethod
    def filled(cls, width: int, height: int, color) -> "RasterImage":
        return cls(numpy.broadcast_to(numpy.asarray(color, dtype=numpy.float64), (height, width, 3)))

    @property
    def width(self) -> int:
        return self.data.shape[1]

    @property
    def height(self) -> int:
        return self.data.shape[0]

    @property
    def shape(self) -> tuple:
        return self.height, self.width

    def pixel(self, x: int, y: int) -> tuple:
        return tuple(float(value) for value in self.data[y, x])

    def same_size(self, other) -> bool:
        return self.shape == other.shape

    def __eq__(self, other):
        return isinstance(other, RasterImage) and self.same_size(other) and numpy.array_equal(self.data, other.data)

    def __hash__(self):
        return hash((self.shape, self.data.tobytes()))

    def __repr__(self):
        return f"{self.__class__.__name__}({self.width}x{self.height})"


class ScalarMap:
    """
    Per-pixel real values, stored as a read-only (height, width) float64 array
    """

    def __init__(self, data):
        data = numpy.array(data, dtype=numpy.float64)
        if data.ndim != 2:
            raise errors.DimensionMismatchError(f"Scalar map data must be shaped (height, width), got {data.shape}")
        self.data: numpy.ndarray = _read_only(data)

    @classmethod
    def zeros(cls, width: int, height: int) -> "ScalarMap":
        return cls(numpy.zeros((height, width)))

    @property
    def width(self) -> int:
        return self.data.shape[1]

    @property
    def height(self) -> int:
        return self.data.shape[0]

    @property
    def shape(self) -> tuple:
        return self.height, self.width

    def is_binary(self) -> bool:
        return bool(numpy.all((self.data == 0) | (self.data == 1)))

    def __eq__(self, other):
        return isinstance(other, ScalarMap) and self.shape == other.shape and numpy.array_equal(self.data, other.data)

    def __hash__(self):
        return hash((self.shape, self.data.tobytes()))

    def __repr__(self):
        return f"{self.__class__.__name__}({self.width}x{self.height})"


def ensure_same_size(first, second, context: str):
    if first.shape != second.shape:
        raise errors.DimensionMismatchError(
            f"{context}: dimension mismatch {first.shape[1]}x{first.shape[0]} vs {second.shape[1]}x{second.shape[0]}"
        )
