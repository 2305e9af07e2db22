#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.
import pytest

import octovector.api as api
import octovector.errors as errors
import octovector.imagecore as imagecore
import octovector.vectordoc as vectordoc
import tests.test_utils.images as images
import tests.test_utils.documents as documents


def test_save_and_load_document(tmp_path):
    document = vectordoc.VectorDocument(16, 16, [documents.square_path(4, 4, 8, images.RED)])
    path = str(tmp_path / "square.svg")
    api.save_document(document, path)
    assert api.load_document(path) == document


def test_get_document_metrics():
    document = vectordoc.VectorDocument(16, 16, [documents.square_path(4, 4, 8, images.RED)])
    document_metrics = api.get_document_metrics(document, api.render_document(document))
    assert document_metrics.mse == 0
    assert document_metrics.path_count == 1
    assert document_metrics.parameter_count == 27
    with pytest.raises(errors.DimensionMismatchError):
        api.get_document_metrics(document, imagecore.RasterImage.filled(8, 16, images.WHITE))
