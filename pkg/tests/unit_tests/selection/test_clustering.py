#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.
import math

import numpy
import pytest

import octovector.segmentation as segmentation
import octovector.selection as selection


def test_mean_shift_trivial():
    assert selection.mean_shift([], 4) == []
    assert selection.mean_shift([segmentation.PromptPoint(3, 7)], 4) == [segmentation.PromptPoint(3, 7)]
    assert selection.mean_shift([segmentation.PromptPoint(2, 2)] * 6, 4) == [segmentation.PromptPoint(2, 2)]


def test_mean_shift_two_clusters():
    rng = numpy.random.default_rng(12)
    bandwidth = 4
    clusters = [numpy.array((10.0, 10.0)), numpy.array((30.0, 10.0))]
    points = []
    for center in clusters:
        for offset in rng.uniform(-1, 1, (10, 2)):
            x, y = numpy.round(center + offset).astype(int)
            points.append(segmentation.PromptPoint(int(x), int(y)))
    modes = selection.mean_shift(points, bandwidth)
    assert len(modes) == 2
    for mode, cluster_points in zip(modes, (points[:10], points[10:])):
        mean = numpy.mean([(point.x, point.y) for point in cluster_points], axis=0)
        assert math.hypot(mode.x - mean[0], mode.y - mean[1]) <= 1


def test_mean_shift_hole_yields_one_mode():
    points = [segmentation.PromptPoint(x, y) for y in range(9, 12) for x in range(9, 12)]
    assert selection.mean_shift(points, 6) == [segmentation.PromptPoint(10, 10)]


def test_mean_shift_modes_are_apart():
    rng = numpy.random.default_rng(8)
    points = [segmentation.PromptPoint(int(x), int(y)) for x, y in rng.integers(0, 60, (80, 2))]
    bandwidth = 5
    modes = selection.mean_shift(points, bandwidth)
    for index, mode in enumerate(modes):
        for other in modes[index + 1:]:
            assert math.hypot(mode.x - other.x, mode.y - other.y) >= bandwidth / 2
    assert modes == sorted(modes, key=lambda mode: (mode.y, mode.x))


def test_mean_shift_invalid_bandwidth():
    with pytest.raises(ValueError):
        selection.mean_shift([segmentation.PromptPoint(0, 0)], 0)
