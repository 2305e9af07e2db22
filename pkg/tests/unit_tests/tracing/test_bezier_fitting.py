#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.
import numpy
import pytest

import octovector.imagecore as imagecore
import octovector.segmentation as segmentation
import octovector.selection as selection
import octovector.tracing as tracing
import tests.test_utils.images as images
import tests.test_utils.documents as documents


def _curve_samples(path: tracing.BezierPath, count: int = 200) -> numpy.ndarray:
    parameters = numpy.linspace(0, 1, count)
    return numpy.concatenate([segment.evaluate(parameters) for segment in path.segments])


def _max_deviation(samples: numpy.ndarray, targets: numpy.ndarray) -> float:
    distances = numpy.linalg.norm(targets[:, None, :] - samples[None, :, :], axis=2)
    return max(distances.min(axis=1).max(), distances.min(axis=0).max())


def test_bernstein_weights_partition_of_unity():
    weights = tracing.bernstein_weights(numpy.linspace(0, 1, 7))
    assert weights.shape == (7, 4)
    assert numpy.allclose(weights.sum(axis=1), 1)
    assert weights[0].tolist() == [1, 0, 0, 0]
    assert weights[-1].tolist() == [0, 0, 0, 1]


def test_bezier_path_closure():
    path = documents.square_path(0, 0, 9, images.RED)
    assert len(path.segments) == 4
    assert path.distinct_point_count() == 12
    assert tracing.BezierPath.from_points(path.to_points(), path.fill) == path
    broken = [path.segments[0], tracing.CubicSegment((9, 0), (9, 3), (9, 6), (8, 9))] + list(path.segments[2:])
    with pytest.raises(ValueError):
        tracing.BezierPath(broken, images.RED)
    with pytest.raises(ValueError):
        tracing.BezierPath(path.segments, (1.2, 0, 0))


def test_bezier_path_translated():
    path = documents.square_path(0, 0, 9, images.RED).translated(1, 2)
    assert path.segments[0].p0 == (1, 2)
    assert path.segments[-1].p3 == (1, 2)


def test_fit_cubic_degenerate_arc():
    segment = tracing.fit_cubic([(0, 0), (3, 0)])
    assert segment == tracing.CubicSegment((0, 0), (1, 0), (2, 0), (3, 0))
    assert tracing.fit_cubic([(1, 1), (1, 1), (1, 1), (1, 1)]).p1 == (1, 1)
    with pytest.raises(ValueError):
        tracing.fit_cubic([(0, 0)])


def test_fit_cubic_recovers_control_points():
    original = tracing.CubicSegment((0, 0), (10, 3), (20, 3), (30, 0))
    fitted = tracing.fit_cubic(original.evaluate(numpy.linspace(0, 1, 31)))
    assert numpy.abs(fitted.control_points() - original.control_points()).max() < 0.5
    assert fitted.p0 == original.p0
    assert fitted.p3 == original.p3


def test_fit_path_square():
    image = images.painted_image(20, 20, images.WHITE, [(images.rectangle_bits(20, 20, 5, 5, 15, 15), images.RED)])
    mask = images.rectangle_mask(20, 20, 5, 5, 15, 15)
    contour = tracing.extract_contour(mask)[0]
    corners = tracing.select_corners(tracing.corner_strength(contour), contour, 4)
    path = tracing.fit_path(contour, corners, image, mask)
    assert len(path.segments) == 4
    assert path.fill == (1, 0, 0)
    assert _max_deviation(_curve_samples(path), contour.centers()) < 1


def test_fit_path_invalid_corners():
    mask = images.rectangle_mask(20, 20, 5, 5, 15, 15)
    image = imagecore.RasterImage.filled(20, 20, images.RED)
    contour = tracing.extract_contour(mask)[0]
    with pytest.raises(ValueError):
        tracing.fit_path(contour, [3, 1], image, mask)
    with pytest.raises(ValueError):
        tracing.fit_path(contour, [1, len(contour)], image, mask)


def test_trace_mask_disc():
    bits = images.disc_bits(50, 50, 25, 25, 20)
    image = images.painted_image(50, 50, images.WHITE, [(bits, images.BLUE)])
    mask = segmentation.Mask(bits)
    paths = tracing.trace_mask(mask, image, 4)
    assert len(paths) == 1
    contour = tracing.extract_contour(mask)[0]
    assert _max_deviation(_curve_samples(paths[0]), contour.centers()) <= 2
    assert paths[0].fill == selection.mean_color(image, mask)


def test_trace_mask_segment_count():
    mask = images.rectangle_mask(30, 30, 3, 3, 27, 27)
    image = imagecore.RasterImage.filled(30, 30, images.GREEN)
    assert [len(path.segments) for path in tracing.trace_mask(mask, image, 6)] == [6]


def test_trace_mask_components_share_the_mask_color():
    left, right = images.rectangle_bits(40, 20, 2, 2, 16, 18), images.rectangle_bits(40, 20, 24, 2, 38, 18)
    image = images.painted_image(40, 20, images.WHITE, [(left, images.RED), (right, images.BLUE)])
    mask = segmentation.Mask(left | right)
    paths = tracing.trace_mask(mask, image, 4)
    assert len(paths) == 2
    assert all(path.fill == selection.mean_color(image, mask) for path in paths)
    assert paths[0].fill == pytest.approx((0.5, 0, 0.5))
