#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.
import numpy
import pytest

import octovector.errors as errors
import octovector.segmentation as segmentation
import octovector.tracing as tracing
import tests.test_utils.images as images


def _assert_closed_8_adjacent(contour):
    steps = numpy.abs(numpy.roll(contour.points, -1, axis=0) - contour.points)
    assert numpy.all(steps.max(axis=1) == 1)


def test_extract_contour_square():
    contours = tracing.extract_contour(images.rectangle_mask(8, 8, 2, 2, 6, 6))
    assert len(contours) == 1
    contour = contours[0]
    assert len(contour) == 12
    expected = {(x, y) for x in range(2, 6) for y in range(2, 6) if x in (2, 5) or y in (2, 5)}
    assert {tuple(point) for point in contour.points.tolist()} == expected
    assert contour.signed_area() > 0
    _assert_closed_8_adjacent(contour)


def test_extract_contour_two_squares():
    bits = images.rectangle_bits(20, 10, 1, 1, 6, 6) | images.rectangle_bits(20, 10, 10, 2, 16, 8)
    contours = tracing.extract_contour(segmentation.Mask(bits))
    assert len(contours) == 2
    assert all(contour.signed_area() > 0 for contour in contours)


def test_extract_contour_disc():
    contour = tracing.extract_contour(segmentation.Mask(images.disc_bits(50, 50, 25, 25, 20)))[0]
    assert len(set(map(tuple, contour.points.tolist()))) == len(contour)
    _assert_closed_8_adjacent(contour)
    assert contour.signed_area() > 0


def test_extract_contour_thin_bar():
    # two pixels high: the tracing must stop once the walk repeats
    contour = tracing.extract_contour(images.rectangle_mask(12, 4, 1, 1, 11, 3))[0]
    assert len(contour) == 20
    _assert_closed_8_adjacent(contour)


def test_extract_contour_below_min_area():
    with pytest.raises(errors.InvalidMaskError):
        tracing.extract_contour(images.rectangle_mask(8, 8, 0, 0, 2, 2))


def test_trace_components_masks():
    bits = images.rectangle_bits(20, 10, 1, 1, 6, 6) | images.rectangle_bits(20, 10, 10, 2, 16, 8)
    components = tracing.trace_components(segmentation.Mask(bits, 0.8))
    assert [component.mask.area for component in components] == [25, 36]
    assert components[0].mask.confidence == 0.8
    assert not numpy.logical_and(components[0].mask.bits, components[1].mask.bits).any()


def test_contour_centers():
    contour = tracing.Contour([(0, 0), (1, 0), (1, 1)])
    assert contour.centers().tolist() == [[0.5, 0.5], [1.5, 0.5], [1.5, 1.5]]
