#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.
import dataclasses

import numpy

import octovector.constants as constants
import octovector.errors as errors


class Mask:
    """
    Binary pixel set of one segmented component, bits are a read-only (height, width) bool array
    """

    def __init__(self, bits, confidence: float = constants.DEFAULT_CONFIDENCE):
        bits = numpy.array(bits, dtype=bool)
        if bits.ndim != 2:
            raise errors.DimensionMismatchError(f"Mask bits must be shaped (height, width), got {bits.shape}")
        if not 0 <= confidence <= 1:
            raise ValueError(f"Mask confidence must be in [0, 1], got {confidence}")
        bits.flags.writeable = False
        self.bits: numpy.ndarray = bits
        self.area: int = int(bits.sum())
        self.confidence: float = float(confidence)

    @property
    def width(self) -> int:
        return self.bits.shape[1]

    @property
    def height(self) -> int:
        return self.bits.shape[0]

    @property
    def shape(self) -> tuple:
        return self.bits.shape

    def first_pixel_index(self) -> int:
        """
        :return: the row-major index of the first true pixel, width * height for an empty mask
        """
        flat = self.bits.ravel()
        index = int(numpy.argmax(flat))
        return index if flat[index] else flat.size

    def iou(self, other) -> float:
        union = numpy.logical_or(self.bits, other.bits).sum()
        if union == 0:
            return 0.0
        return float(numpy.logical_and(self.bits, other.bits).sum() / union)

    def with_bits(self, bits) -> "Mask":
        return Mask(bits, self.confidence)

    def __eq__(self, other):
        return isinstance(other, Mask) and self.confidence == other.confidence \
            and numpy.array_equal(self.bits, other.bits)

    def __hash__(self):
        return hash((self.shape, self.bits.tobytes(), self.confidence))

    def __repr__(self):
        return f"{self.__class__.__name__}({self.width}x{self.height}, area={self.area}, " \
               f"confidence={self.confidence})"


@dataclasses.dataclass(frozen=True)
class PromptPoint:
    x: int
    y: int

    def is_inside(self, width: int, height: int) -> bool:
        return 0 <= self.x < width and 0 <= self.y < height
