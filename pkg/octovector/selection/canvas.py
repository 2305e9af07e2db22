#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.
import numpy

import octovector.constants as constants
import octovector.errors as errors
import octovector.imagecore as imagecore
import octovector.segmentation as segmentation

UNCOVERED_COLOR = (0.0, 0.0, 0.0)


class Canvas:
    """
    Partially painted reconstruction of an image: an RGB grid plus the set of painted (covered) pixels.
    Uncovered pixels always hold UNCOVERED_COLOR. Canvases are immutable, compositing returns a new one.
    """

    def __init__(self, color, covered):
        color = numpy.array(color, dtype=numpy.float64)
        covered = numpy.array(covered, dtype=bool)
        if color.ndim != 3 or color.shape[2] != 3 or covered.shape != color.shape[:2]:
            raise errors.DimensionMismatchError(
                f"Canvas color {color.shape} and covered {covered.shape} arrays don't match"
            )
        color[~covered] = UNCOVERED_COLOR
        color.flags.writeable = False
        covered.flags.writeable = False
        self.color: numpy.ndarray = color
        self.covered: numpy.ndarray = covered

    @classmethod
    def blank(cls, width: int, height: int) -> "Canvas":
        return cls(numpy.zeros((height, width, 3)), numpy.zeros((height, width), dtype=bool))

    @classmethod
    def from_image(cls, image: imagecore.RasterImage) -> "Canvas":
        """
        :return: a fully covered canvas painted with the image pixels
        """
        return cls(image.data, numpy.ones(image.shape, dtype=bool))

    @property
    def width(self) -> int:
        return self.covered.shape[1]

    @property
    def height(self) -> int:
        return self.covered.shape[0]

    @property
    def shape(self) -> tuple:
        return self.covered.shape

    def __eq__(self, other):
        return isinstance(other, Canvas) and numpy.array_equal(self.covered, other.covered) \
            and numpy.array_equal(self.color, other.color)

    def __hash__(self):
        return hash((self.shape, self.covered.tobytes(), self.color.tobytes()))

    def __repr__(self):
        return f"{self.__class__.__name__}({self.width}x{self.height}, covered={int(self.covered.sum())})"


def mean_color(image: imagecore.RasterImage, mask: segmentation.Mask) -> tuple:
    imagecore.ensure_same_size(image, mask, "mean color")
    if mask.area < 1:
        raise errors.InvalidMaskError("Can't compute the mean color of an empty mask")
    return tuple(float(channel) for channel in image.data[mask.bits].mean(axis=0))


def composite(canvas: Canvas, mask: segmentation.Mask, color) -> Canvas:
    imagecore.ensure_same_size(canvas, mask, "composite")
    painted = numpy.array(canvas.color)
    painted[mask.bits] = color
    return Canvas(painted, numpy.logical_or(canvas.covered, mask.bits))


def canvas_error(target: imagecore.RasterImage, canvas: Canvas) -> float:
    """
    Mean squared reconstruction error of a canvas, uncovered pixels counting for the maximum error
    :return: the error in [0, 1]
    """
    imagecore.ensure_same_size(target, canvas, "canvas error")
    squared = ((target.data - canvas.color) ** 2)[canvas.covered].sum()
    uncovered_count = canvas.covered.size - int(canvas.covered.sum())
    return float((squared + constants.UNCOVERED_PIXEL_ERROR * uncovered_count) / (3 * canvas.covered.size))
