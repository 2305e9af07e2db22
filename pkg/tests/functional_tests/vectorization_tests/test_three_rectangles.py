#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.
import pytest

import octovector.pipeline as pipeline
import octovector.vectordoc as vectordoc
import tests.test_utils.images as images


@pytest.mark.timeout(300)
def test_vectorize_three_rectangles():
    document, report = pipeline.vectorize(images.three_rectangles_image())
    assert report.final_mse < 1e-3
    assert 3 <= len(document.paths) <= 5
    assert report.optimizer["total_iters"] == 1000
    assert [phase["iterations"] for phase in report.phases] == [500, 500]
    assert all(phase["best_loss"] <= phase["initial_loss"] for phase in report.phases)


@pytest.mark.timeout(600)
def test_vectorization_is_deterministic(tmp_path):
    outputs = []
    for index in range(2):
        document, _ = pipeline.vectorize(images.three_rectangles_image())
        path = tmp_path / f"run_{index}.svg"
        vectordoc.write_svg(document, str(path))
        outputs.append(path.read_bytes())
    assert outputs[0] == outputs[1]
