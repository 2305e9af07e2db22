#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.
import math

import numpy

import octovector.constants as constants
import octovector.render_optimizer.path_parameters as path_parameters

ITERATIONS = "iterations"
INITIAL_LOSS = "initial_loss"
BEST_LOSS = "best_loss"
LR_POINTS = "lr_points"
LR_COLORS = "lr_colors"


class OptimizerState:
    """
    Adam state of a document optimization. Besides the moments, it holds the working iterate, the best one
    and the evaluation of the working iterate so that consecutive optimize calls continue the same descent.
    """

    def __init__(self, lr_points: float = constants.DEFAULT_LR_POINTS,
                 lr_colors: float = constants.DEFAULT_LR_COLORS,
                 beta1: float = constants.ADAM_BETA1,
                 beta2: float = constants.ADAM_BETA2,
                 epsilon: float = constants.ADAM_EPSILON):
        self.lr_points: float = lr_points
        self.lr_colors: float = lr_colors
        self.beta1: float = beta1
        self.beta2: float = beta2
        self.epsilon: float = epsilon

        self.step: int = 0
        self.first_moments: numpy.ndarray = None
        self.second_moments: numpy.ndarray = None
        self.parameters: path_parameters.DocumentParameters = None
        self.best_parameters: path_parameters.DocumentParameters = None
        self.best_loss: float = math.inf
        self.pending_evaluation: tuple = None  # (loss, Gradients) of self.parameters
        self.returned_document = None
        self.last_run: dict = {}

    @classmethod
    def create(cls, lr_points: float = constants.DEFAULT_LR_POINTS,
               lr_colors: float = constants.DEFAULT_LR_COLORS) -> "OptimizerState":
        return cls(lr_points=lr_points, lr_colors=lr_colors)

    def reset(self, parameters: path_parameters.DocumentParameters = None):
        self.step = 0
        self.parameters = parameters
        size = 0 if parameters is None else parameters.size
        self.first_moments = numpy.zeros(size)
        self.second_moments = numpy.zeros(size)
        self.best_parameters = None
        self.best_loss = math.inf
        self.pending_evaluation = None
        self.returned_document = None

    def can_resume(self, document) -> bool:
        """
        :return: True when document is the one returned by the previous optimization of this state
        """
        return self.parameters is not None and self.returned_document is not None \
            and self.returned_document == document

    def record(self, loss: float):
        if loss < self.best_loss:
            self.best_loss = loss
            self.best_parameters = self.parameters.copy()

    def apply_adam_step(self, gradient: numpy.ndarray):
        self.step += 1
        self.first_moments = self.beta1 * self.first_moments + (1 - self.beta1) * gradient
        self.second_moments = self.beta2 * self.second_moments + (1 - self.beta2) * gradient ** 2
        first_unbiased = self.first_moments / (1 - self.beta1 ** self.step)
        second_unbiased = self.second_moments / (1 - self.beta2 ** self.step)
        vector = self.parameters.flatten() - self.parameters.learning_rates(self.lr_points, self.lr_colors) \
            * first_unbiased / (numpy.sqrt(second_unbiased) + self.epsilon)
        updated = self.parameters.with_vector(vector)
        updated.fills = numpy.clip(updated.fills, 0, 1)
        self.parameters = updated
        self.pending_evaluation = None

    def to_dict(self) -> dict:
        return {
            LR_POINTS: self.lr_points,
            LR_COLORS: self.lr_colors,
        }

    def __repr__(self):
        return f"{self.__class__.__name__}(step={self.step}, lr_points={self.lr_points}, " \
               f"lr_colors={self.lr_colors}, best_loss={self.best_loss})"
