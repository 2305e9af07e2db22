#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.

from octovector.render_optimizer import render_config
from octovector.render_optimizer import path_parameters
from octovector.render_optimizer import soft_rasterizer
from octovector.render_optimizer import losses
from octovector.render_optimizer import optimizer_state
from octovector.render_optimizer import path_optimizer

from octovector.render_optimizer.render_config import (
    RenderConfig,
)
from octovector.render_optimizer.path_parameters import (
    flatten_weights,
    DocumentParameters,
    Gradients,
)
from octovector.render_optimizer.soft_rasterizer import (
    PathCoverage,
    RenderTape,
    path_coverage,
    path_vertices,
    render_parameters,
    backward,
    render,
)
from octovector.render_optimizer.losses import (
    mse_loss,
    xing_value_and_gradients,
    xing_loss,
    evaluate,
    total_loss,
)
from octovector.render_optimizer.optimizer_state import (
    OptimizerState,
)
from octovector.render_optimizer.path_optimizer import (
    optimize,
)

__all__ = [
    "RenderConfig",
    "flatten_weights",
    "DocumentParameters",
    "Gradients",
    "PathCoverage",
    "RenderTape",
    "path_coverage",
    "path_vertices",
    "render_parameters",
    "backward",
    "render",
    "mse_loss",
    "xing_value_and_gradients",
    "xing_loss",
    "evaluate",
    "total_loss",
    "OptimizerState",
    "optimize",
]
