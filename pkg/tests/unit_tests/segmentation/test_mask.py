#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.
import numpy
import pytest

import octovector.errors as errors
import octovector.segmentation as segmentation
import tests.test_utils.images as images


def test_mask_area_and_confidence():
    mask = images.rectangle_mask(6, 4, 1, 1, 4, 3, confidence=0.5)
    assert mask.area == 6
    assert mask.confidence == 0.5
    assert mask.shape == (4, 6)
    assert segmentation.Mask(numpy.zeros((2, 2))).confidence == 1.0


def test_mask_invalid():
    with pytest.raises(errors.DimensionMismatchError):
        segmentation.Mask(numpy.zeros(4))
    with pytest.raises(ValueError):
        segmentation.Mask(numpy.zeros((2, 2)), 1.5)


def test_first_pixel_index():
    assert images.rectangle_mask(6, 4, 2, 1, 4, 3).first_pixel_index() == 8
    assert segmentation.Mask(numpy.zeros((4, 6))).first_pixel_index() == 24


def test_iou():
    first = images.rectangle_mask(4, 4, 0, 0, 2, 4)
    second = images.rectangle_mask(4, 4, 1, 0, 3, 4)
    assert first.iou(second) == pytest.approx(4 / 12)
    assert first.iou(first) == 1
    empty = segmentation.Mask(numpy.zeros((4, 4)))
    assert empty.iou(empty) == 0


def test_prompt_point_is_inside():
    assert segmentation.PromptPoint(0, 3).is_inside(4, 4)
    assert not segmentation.PromptPoint(4, 0).is_inside(4, 4)
    assert not segmentation.PromptPoint(-1, 0).is_inside(4, 4)
