#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.
import numpy
import pytest

import octovector.errors as errors
import octovector.imagecore as imagecore
import octovector.render_optimizer as render_optimizer
import octovector.vectordoc as vectordoc
import tests.test_utils.images as images
import tests.test_utils.documents as documents


def _scene():
    target = render_optimizer.render(vectordoc.VectorDocument(16, 16, [documents.square_path(4, 4, 8, images.RED)]))
    start = vectordoc.VectorDocument(16, 16, [documents.square_path(5, 5, 7, (0.8, 0.1, 0.1))])
    return start, target


def test_optimizer_state_adam_step():
    document = vectordoc.VectorDocument(16, 16, [documents.square_path(4, 4, 8, (0.5, 0.5, 0.5))])
    parameters = render_optimizer.DocumentParameters.from_document(document)
    state = render_optimizer.OptimizerState.create(1.0, 0.01)
    assert not state.can_resume(document)
    state.reset(parameters)
    state.apply_adam_step(numpy.ones(parameters.size))
    assert state.step == 1
    assert state.parameters.flatten()[:24] == pytest.approx(parameters.flatten()[:24] - 1)
    assert state.parameters.fills.ravel() == pytest.approx([0.49] * 3)
    assert state.to_dict() == {"lr_points": 1.0, "lr_colors": 0.01}


def test_optimizer_state_clamps_fills():
    document = vectordoc.VectorDocument(16, 16, [documents.square_path(4, 4, 8, (1, 0, 0.005))])
    parameters = render_optimizer.DocumentParameters.from_document(document)
    state = render_optimizer.OptimizerState.create(1.0, 0.01)
    state.reset(parameters)
    gradient = numpy.zeros(parameters.size)
    gradient[-3:] = (-1, 1, 1)
    state.apply_adam_step(gradient)
    assert state.parameters.fills.ravel().tolist() == [1, 0, 0]


def test_optimize_without_iterations():
    start, target = _scene()
    state = render_optimizer.OptimizerState.create()
    assert render_optimizer.optimize(start, target, 0, state) == start
    assert state.last_run["iterations"] == 0
    assert state.last_run["initial_loss"] == state.last_run["best_loss"]


def test_optimize_reduces_loss():
    start, target = _scene()
    state = render_optimizer.OptimizerState.create()
    optimized = render_optimizer.optimize(start, target, 30, state, lambda_xing=0)
    initial_loss = render_optimizer.total_loss(start, target, lambda_xing=0)[0]
    optimized_loss = render_optimizer.total_loss(optimized, target, lambda_xing=0)[0]
    assert optimized_loss < initial_loss
    assert optimized_loss == pytest.approx(state.last_run["best_loss"])
    assert state.last_run["initial_loss"] == pytest.approx(initial_loss)
    assert len(optimized.paths) == 1
    assert len(optimized.paths[0].segments) == 4


def test_optimize_resumes_state():
    start, target = _scene()
    state = render_optimizer.OptimizerState.create()
    optimized = render_optimizer.optimize(start, target, 5, state)
    render_optimizer.optimize(optimized, target, 5, state)
    assert state.step == 10
    other = vectordoc.VectorDocument(16, 16, [documents.square_path(6, 6, 5, images.GREEN)])
    render_optimizer.optimize(other, target, 3, state)
    assert state.step == 3


def test_optimize_errors():
    start, target = _scene()
    with pytest.raises(ValueError):
        render_optimizer.optimize(start, target, -1)
    with pytest.raises(errors.DimensionMismatchError):
        render_optimizer.optimize(start, imagecore.RasterImage.filled(8, 8, images.WHITE), 2)


def test_optimize_empty_document():
    document = vectordoc.VectorDocument(8, 8)
    assert render_optimizer.optimize(document, imagecore.RasterImage.filled(8, 8, images.RED), 3) == document
