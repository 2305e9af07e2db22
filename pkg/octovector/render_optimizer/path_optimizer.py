#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.
import octobot_commons.logging as logging

import octovector.constants as constants
import octovector.errors as errors
import octovector.imagecore as imagecore
import octovector.render_optimizer.losses as losses
import octovector.render_optimizer.optimizer_state as optimizer_state
import octovector.render_optimizer.path_parameters as path_parameters
import octovector.render_optimizer.render_config as render_config
import octovector.vectordoc as vectordoc

LOGGER_NAME = "PathOptimizer"


def _evaluate_pending(state: optimizer_state.OptimizerState, target: imagecore.RasterImage,
                      config: render_config.RenderConfig, lambda_xing: float) -> tuple:
    if state.pending_evaluation is None:
        state.pending_evaluation = losses.evaluate(state.parameters, target, config, lambda_xing)
        state.record(state.pending_evaluation[0])
    return state.pending_evaluation


def optimize(document: vectordoc.VectorDocument, target: imagecore.RasterImage, iterations: int,
             state: optimizer_state.OptimizerState = None, config: render_config.RenderConfig = None,
             lambda_xing: float = constants.DEFAULT_LAMBDA_XING) -> vectordoc.VectorDocument:
    """
    Adam descent of the total loss over every control point and fill
    :param document: the document to optimize
    :param target: the image to reproduce
    :param iterations: the number of Adam steps
    :param state: the optimizer state, resumed when document is the result of its previous optimization
    :param config: the render configuration
    :param lambda_xing: the weight of the self-intersection penalty
    :return: the best iterate
    """
    logger = logging.get_logger(LOGGER_NAME)
    if iterations < 0:
        raise ValueError(f"Iterations must be >= 0, got {iterations}")
    if target.shape != (document.height, document.width):
        raise errors.DimensionMismatchError(
            f"Can't optimize a {document.width}x{document.height} document toward a "
            f"{target.width}x{target.height} target"
        )
    state = state or optimizer_state.OptimizerState.create()
    config = config or render_config.RenderConfig()
    if not state.can_resume(document):
        state.reset(path_parameters.DocumentParameters.from_document(document))
    initial_loss, _ = _evaluate_pending(state, target, config, lambda_xing)
    for iteration in range(iterations):
        loss, gradients = _evaluate_pending(state, target, config, lambda_xing)
        if iteration % constants.LOG_EVERY_ITERATIONS == 0:
            logger.debug(f"Iteration {iteration}/{iterations} (step {state.step}): loss={loss:.8f}")
        state.apply_adam_step(gradients.flatten())
    _evaluate_pending(state, target, config, lambda_xing)
    best = state.best_parameters.to_document()
    state.returned_document = best
    state.last_run = {
        optimizer_state.ITERATIONS: iterations,
        optimizer_state.INITIAL_LOSS: initial_loss,
        optimizer_state.BEST_LOSS: state.best_loss,
    }
    logger.info(f"Optimized {len(document.paths)} paths over {iterations} iterations: "
                f"loss {initial_loss:.8f} -> {state.best_loss:.8f}")
    return best
