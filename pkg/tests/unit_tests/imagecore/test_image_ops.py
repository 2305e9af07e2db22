#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.
import collections

import numpy
import pytest

import octovector.errors as errors
import octovector.imagecore as imagecore


def _flood_fill_count(bits):
    seen = numpy.zeros_like(bits)
    count = 0
    for row, column in zip(*numpy.nonzero(bits)):
        if seen[row, column]:
            continue
        count += 1
        seen[row, column] = True
        queue = collections.deque([(row, column)])
        while queue:
            y, x = queue.popleft()
            for n_y, n_x in ((y - 1, x), (y + 1, x), (y, x - 1), (y, x + 1)):
                if 0 <= n_y < bits.shape[0] and 0 <= n_x < bits.shape[1] and bits[n_y, n_x]                         and not seen[n_y, n_x]:
                    seen[n_y, n_x] = True
                    queue.append((n_y, n_x))
    return count


def test_difference_map():
    white = imagecore.RasterImage.filled(3, 2, (1, 1, 1))
    black = imagecore.RasterImage.filled(3, 2, (0, 0, 0))
    assert not imagecore.difference_map(white, white).data.any()
    assert numpy.all(imagecore.difference_map(white, black).data == 3)
    data = numpy.ones((2, 3, 3))
    data[1, 2, 0] = 0.5
    difference = imagecore.difference_map(white, imagecore.RasterImage(data))
    assert difference.data[1, 2] == 0.5
    assert difference.data.sum() == 0.5


def test_difference_map_is_symmetric():
    rng = numpy.random.default_rng(5)
    first = imagecore.RasterImage(rng.uniform(0, 1, (4, 5, 3)))
    second = imagecore.RasterImage(rng.uniform(0, 1, (4, 5, 3)))
    assert imagecore.difference_map(first, second) == imagecore.difference_map(second, first)


def test_difference_map_dimension_mismatch():
    with pytest.raises(errors.DimensionMismatchError):
        imagecore.difference_map(imagecore.RasterImage.filled(3, 2, (1, 1, 1)),
                                 imagecore.RasterImage.filled(2, 3, (1, 1, 1)))


def test_connected_components_two_blocks():
    data = numpy.zeros((6, 8))
    data[0:2, 0:2] = 1
    data[3:5, 5:7] = 1
    components = imagecore.connected_components(imagecore.ScalarMap(data))
    assert len(components) == 2
    # (0.5, 0.5) and (5.5, 3.5) rounded half up
    assert components[0].centroid == (1, 1)
    assert components[1].centroid == (6, 4)
    assert components[0].pixels.tolist() == [[0, 0], [1, 0], [0, 1], [1, 1]]


def test_connected_components_empty_and_full():
    assert imagecore.connected_components(imagecore.ScalarMap.zeros(4, 4)) == []
    components = imagecore.connected_components(imagecore.ScalarMap(numpy.ones((5, 5))))
    assert len(components) == 1
    assert components[0].centroid == (2, 2)


def test_connected_components_four_connectivity():
    # diagonal pixels are distinct components
    components = imagecore.connected_components(imagecore.ScalarMap(numpy.eye(4)))
    assert len(components) == 4


def test_connected_components_match_flood_fill():
    rng = numpy.random.default_rng(11)
    for _ in range(10):
        bits = rng.uniform(0, 1, (12, 15)) > 0.55
        assert len(imagecore.connected_components(imagecore.ScalarMap(bits.astype(float)))) ==             _flood_fill_count(bits)


def test_connected_components_rejects_non_binary():
    with pytest.raises(ValueError):
        imagecore.connected_components(imagecore.ScalarMap([[0, 0.5]]))
