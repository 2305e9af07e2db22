#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.

from octovector.api import vectorization
from octovector.api import documents

from octovector.api.vectorization import (
    create_vectorization_pipeline,
    vectorize_image_file,
    run_vectorization_pipeline,
    get_vectorization_report,
)
from octovector.api.documents import (
    DocumentMetrics,
    load_document,
    save_document,
    render_document,
    get_document_metrics,
)

__all__ = [
    "create_vectorization_pipeline",
    "vectorize_image_file",
    "run_vectorization_pipeline",
    "get_vectorization_report",
    "DocumentMetrics",
    "load_document",
    "save_document",
    "render_document",
    "get_document_metrics",
]
