#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.
import math

import numpy
import pytest

import octovector.errors as errors
import octovector.imagecore as imagecore
import octovector.segmentation as segmentation
import octovector.selection as selection
import tests.test_utils.images as images


def test_coverage_alpha():
    assert selection.coverage_alpha([], 3, 2) == imagecore.ScalarMap.zeros(3, 2)
    halves = [images.rectangle_mask(4, 4, 0, 0, 2, 4), images.rectangle_mask(4, 4, 2, 0, 4, 4)]
    assert numpy.all(selection.coverage_alpha(halves).data == 1)
    quadrant = selection.coverage_alpha([images.rectangle_mask(4, 4, 2, 2, 4, 4)])
    assert numpy.array_equal(quadrant.data, images.rectangle_bits(4, 4, 2, 2, 4, 4).astype(float))


def test_coverage_alpha_errors():
    with pytest.raises(ValueError):
        selection.coverage_alpha([])
    with pytest.raises(errors.DimensionMismatchError):
        selection.coverage_alpha([images.rectangle_mask(4, 4, 0, 0, 1, 1), images.rectangle_mask(5, 4, 0, 0, 1, 1)])


def test_find_uncovered_points_trivial():
    assert selection.find_uncovered_points(imagecore.ScalarMap(numpy.ones((5, 5))), 1) == []
    points = selection.find_uncovered_points(imagecore.ScalarMap.zeros(3, 2), 1)
    assert points == [segmentation.PromptPoint(x, y) for y in range(2) for x in range(3)]


def test_find_uncovered_points_in_hole():
    alpha = numpy.ones((21, 21))
    alpha[6:15, 6:15] = 0
    points = selection.find_uncovered_points(imagecore.ScalarMap(alpha), 3)
    expected = [
        segmentation.PromptPoint(x, y)
        for y in range(21) for x in range(21)
        if all(alpha[y + d_y, x + d_x] == 0
               for d_y in range(-3, 4) for d_x in range(-3, 4)
               if math.hypot(d_x, d_y) <= 3 and 0 <= y + d_y < 21 and 0 <= x + d_x < 21)
    ]
    assert points == expected
    assert len(points) == 9
    assert all(alpha[point.y, point.x] == 0 for point in points)


def test_find_uncovered_points_rejects_non_binary():
    with pytest.raises(ValueError):
        selection.find_uncovered_points(imagecore.ScalarMap([[0.5]]), 1)
