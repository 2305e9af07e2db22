#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.
import numpy
import pytest

import octovector.errors as errors
import octovector.imagecore as imagecore
import octovector.segmentation as segmentation
import octovector.selection as selection
import tests.test_utils.images as images


def test_mean_color():
    full = images.rectangle_mask(4, 2, 0, 0, 4, 2)
    assert selection.mean_color(imagecore.RasterImage.filled(4, 2, images.RED), full) == (1, 0, 0)
    halves = images.painted_image(4, 2, images.WHITE, [(images.rectangle_bits(4, 2, 0, 0, 2, 2), (0, 0, 0))])
    assert selection.mean_color(halves, full) == (0.5, 0.5, 0.5)
    data = numpy.zeros((1, 3, 3))
    data[0, :, 0] = (0.1, 0.2, 0.6)
    assert selection.mean_color(imagecore.RasterImage(data), images.rectangle_mask(3, 1, 0, 0, 3, 1))[0] ==         pytest.approx(0.3)


def test_mean_color_empty_mask():
    with pytest.raises(errors.InvalidMaskError):
        selection.mean_color(imagecore.RasterImage.filled(2, 2, images.RED), segmentation.Mask(numpy.zeros((2, 2))))


def test_canvas_uncovered_pixels_hold_the_sentinel():
    canvas = selection.Canvas(numpy.ones((2, 2, 3)), [[True, False], [False, False]])
    assert canvas.color[0, 0].tolist() == [1, 1, 1]
    assert canvas.color[1, 1].tolist() == [0, 0, 0]
    with pytest.raises(errors.DimensionMismatchError):
        selection.Canvas(numpy.ones((2, 2, 3)), numpy.ones((3, 2)))


def test_composite():
    blank = selection.Canvas.blank(4, 4)
    assert selection.composite(blank, segmentation.Mask(numpy.zeros((4, 4))), images.RED) == blank
    full = selection.composite(blank, images.rectangle_mask(4, 4, 0, 0, 4, 4), images.GREEN)
    assert full.covered.all()
    assert numpy.all(full.color == images.GREEN)
    # the input canvas is untouched
    assert not blank.covered.any()
    overlapped = selection.composite(full, images.rectangle_mask(4, 4, 0, 0, 2, 2), images.BLUE)
    assert overlapped.color[0, 0].tolist() == list(images.BLUE)
    assert overlapped.color[3, 3].tolist() == list(images.GREEN)


def test_composite_dimension_mismatch():
    with pytest.raises(errors.DimensionMismatchError):
        selection.composite(selection.Canvas.blank(4, 4), images.rectangle_mask(5, 4, 0, 0, 2, 2), images.RED)


def test_canvas_error():
    image = imagecore.RasterImage(numpy.random.default_rng(0).uniform(0, 1, (3, 4, 3)))
    assert selection.canvas_error(image, selection.Canvas.from_image(image)) == 0
    assert selection.canvas_error(image, selection.Canvas.blank(4, 3)) == 1
    two_pixels = imagecore.RasterImage([[[0.2, 0.4, 0.6], [1, 1, 1]]])
    half_covered = selection.Canvas([[[0.2, 0.4, 0.6], [0, 0, 0]]], [[True, False]])
    assert selection.canvas_error(two_pixels, half_covered) == 0.5
