#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.
import numpy

import octovector.constants as constants
import octovector.errors as errors
import octovector.imagecore as imagecore
import octovector.render_optimizer.path_parameters as path_parameters
import octovector.render_optimizer.render_config as render_config
import octovector.render_optimizer.soft_rasterizer as soft_rasterizer
import octovector.vectordoc as vectordoc


def mse_loss(render: imagecore.RasterImage, target: imagecore.RasterImage) -> float:
    imagecore.ensure_same_size(render, target, "mse loss")
    return float(numpy.mean((render.data - target.data) ** 2))


def _segment_edges(points: numpy.ndarray) -> (numpy.ndarray, numpy.ndarray):
    """
    :return: the (p1 - p0) and (p3 - p2) control edges of each segment of a closed path
    """
    starts, first_controls, second_controls = points[0::3], points[1::3], points[2::3]
    ends = numpy.roll(starts, -1, axis=0)
    return first_controls - starts, ends - second_controls


def xing_value_and_gradients(points_list: list) -> (float, list):
    """
    Self-intersection penalty: per segment, relu(-cos) when the control edges turn left (positive cross
    product), relu(cos) otherwise, averaged over every segment of every path
    :return: the loss and its gradient for each (3 * segment count, 2) points array
    """
    segment_count = sum(len(points) // 3 for points in points_list)
    if not segment_count:
        return 0.0, [numpy.zeros_like(points) for points in points_list]
    total = 0.0
    gradients = []
    for points in points_list:
        first_edges, second_edges = _segment_edges(points)
        first_norms = numpy.linalg.norm(first_edges, axis=1)
        second_norms = numpy.linalg.norm(second_edges, axis=1)
        valid = (first_norms > 0) & (second_norms > 0)
        norm_products = numpy.where(valid, first_norms * second_norms, 1)
        cosines = numpy.where(valid, (first_edges * second_edges).sum(axis=1) / norm_products, 0)
        crosses = first_edges[:, 0] * second_edges[:, 1] - first_edges[:, 1] * second_edges[:, 0]
        turns_left = crosses > 0
        terms = numpy.where(turns_left, numpy.maximum(-cosines, 0), numpy.maximum(cosines, 0))
        total += float(numpy.where(valid, terms, 0).sum())

        cosine_slopes = numpy.where(turns_left, -1.0 * (cosines < 0), 1.0 * (cosines > 0))
        cosine_slopes = numpy.where(valid, cosine_slopes, 0) / segment_count
        safe_first = numpy.where(valid, first_norms, 1)[:, None]
        safe_second = numpy.where(valid, second_norms, 1)[:, None]
        first_gradients = cosine_slopes[:, None] * (
            second_edges / (safe_first * safe_second) - cosines[:, None] * first_edges / safe_first ** 2
        )
        second_gradients = cosine_slopes[:, None] * (
            first_edges / (safe_first * safe_second) - cosines[:, None] * second_edges / safe_second ** 2
        )
        path_gradients = numpy.zeros_like(points)
        path_gradients[0::3] -= first_gradients
        path_gradients[1::3] += first_gradients
        path_gradients[2::3] -= second_gradients
        # segment s ends on the start point of segment s + 1
        path_gradients[0::3] += numpy.roll(second_gradients, 1, axis=0)
        gradients.append(path_gradients)
    return total / segment_count, gradients


def xing_loss(document: vectordoc.VectorDocument) -> float:
    return xing_value_and_gradients(path_parameters.DocumentParameters.from_document(document).points)[0]


def evaluate(parameters: path_parameters.DocumentParameters, target: imagecore.RasterImage,
             config: render_config.RenderConfig, lambda_xing: float) -> (float, path_parameters.Gradients):
    """
    :return: the total loss mse + lambda_xing * xing and its analytic gradients
    """
    tape = soft_rasterizer.render_parameters(parameters, config)
    rendered = imagecore.RasterImage(tape.output)
    mse = mse_loss(rendered, target)
    output_gradient = 2 * (tape.output - target.data) / tape.output.size
    gradients = soft_rasterizer.backward(tape, parameters, output_gradient, config)
    if lambda_xing == 0:
        return mse, gradients
    xing, xing_gradients = xing_value_and_gradients(parameters.points)
    for index, path_gradients in enumerate(xing_gradients):
        gradients.points[index] = gradients.points[index] + lambda_xing * path_gradients
    return mse + lambda_xing * xing, gradients


def total_loss(document: vectordoc.VectorDocument, target: imagecore.RasterImage,
               config: render_config.RenderConfig = None,
               lambda_xing: float = constants.DEFAULT_LAMBDA_XING) -> (float, path_parameters.Gradients):
    parameters = path_parameters.DocumentParameters.from_document(document)
    if target.shape != (parameters.height, parameters.width):
        raise errors.DimensionMismatchError(
            f"total loss: {document.width}x{document.height} document for a {target.width}x{target.height} target"
        )
    return evaluate(parameters, target, config or render_config.RenderConfig(), lambda_xing)
