#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.
import numpy
import pytest

import octovector.render_optimizer as render_optimizer
import tests.test_utils.documents as documents
import tests.test_utils.gradients as gradients


@pytest.mark.timeout(300)
@pytest.mark.parametrize("seed", range(10))
def test_total_loss_gradients(seed):
    rng = numpy.random.default_rng(100 + seed)
    document = documents.random_document(rng, 32, 32, 3)
    target = gradients.random_target(rng, 32, 32)
    config = render_optimizer.RenderConfig()
    _, analytic = render_optimizer.total_loss(document, target, config, 0.01)
    numeric = gradients.finite_difference_gradients(document, target, config, 0.01)
    assert gradients.matching_ratio(analytic.flatten(), numeric) >= 0.95
