#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.
import numpy

import octovector.imagecore as imagecore
import octovector.render_optimizer as render_optimizer
import octovector.vectordoc as vectordoc

FINITE_DIFFERENCE_STEP = 1e-3


def finite_difference_gradients(document: vectordoc.VectorDocument, target: imagecore.RasterImage,
                                config: render_optimizer.RenderConfig, lambda_xing: float,
                                step: float = FINITE_DIFFERENCE_STEP) -> numpy.ndarray:
    """
    :return: the central differences of the total loss for each flattened document parameter
    """
    parameters = render_optimizer.DocumentParameters.from_document(document)
    vector = parameters.flatten()
    gradients = numpy.zeros_like(vector)
    for index in range(len(vector)):
        values = []
        for sign in (1, -1):
            shifted = vector.copy()
            shifted[index] += sign * step
            values.append(render_optimizer.evaluate(parameters.with_vector(shifted), target, config, lambda_xing)[0])
        gradients[index] = (values[0] - values[1]) / (2 * step)
    return gradients


def matching_ratio(analytic: numpy.ndarray, numeric: numpy.ndarray, relative_error: float = 1e-2,
                   minimum: float = 1e-6) -> float:
    """
    :return: the share of significant coordinates where analytic and numeric gradients agree
    """
    significant = numpy.abs(analytic) > minimum
    if not significant.any():
        return 1.0
    errors = numpy.abs(analytic - numeric)[significant] / numpy.abs(analytic)[significant]
    return float(numpy.mean(errors < relative_error))


def random_target(random_generator: numpy.random.Generator, width: int, height: int) -> imagecore.RasterImage:
    return imagecore.RasterImage(random_generator.uniform(0, 1, (height, width, 3)))
