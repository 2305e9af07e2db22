#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.
import numpy
import pytest

import octovector.vectordoc as vectordoc
import tests.test_utils.images as images
import tests.test_utils.documents as documents


def test_vector_document():
    document = vectordoc.VectorDocument(32, 16)
    assert document.is_empty()
    square = documents.square_path(2, 2, 8, images.RED)
    appended = document.appended([square])
    assert appended.paths == (square,)
    assert document.is_empty()
    assert appended.with_paths([]) == document
    with pytest.raises(ValueError):
        vectordoc.VectorDocument(0, 16)
    with pytest.raises(ValueError):
        vectordoc.VectorDocument(16, 16, [square.to_points()])


def test_stats():
    square = documents.square_path(2, 2, 8, images.RED)
    empty = vectordoc.VectorDocument(32, 16)
    assert vectordoc.stats(empty) == vectordoc.DocumentStats(0, 0, 32, 16)
    one_path = vectordoc.stats(empty.appended([square]))
    assert one_path.path_count == 1
    assert one_path.parameter_count == 27
    assert vectordoc.stats(empty.appended([square, square.translated(10, 0)])).parameter_count == 54
    assert one_path.to_dict() == {"path_count": 1, "parameter_count": 27, "width": 32, "height": 16}


def test_stats_six_segments():
    path = documents.random_path(numpy.random.default_rng(3), 40, 40, segments=6)
    document = vectordoc.VectorDocument(40, 40, [path])
    assert vectordoc.stats(document).parameter_count == 2 * 18 + 3
