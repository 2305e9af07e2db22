#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.
import typing

import octovector.errors as errors
import octovector.imagecore as imagecore
import octovector.render_optimizer as render_optimizer
import octovector.vectordoc as vectordoc


class DocumentMetrics(typing.NamedTuple):
    mse: float
    path_count: int
    parameter_count: int


def load_document(svg_path: str) -> vectordoc.VectorDocument:
    return vectordoc.read_svg(svg_path)


def save_document(document: vectordoc.VectorDocument, svg_path: str):
    vectordoc.write_svg(document, svg_path)


def render_document(document: vectordoc.VectorDocument,
                    config: render_optimizer.RenderConfig = None) -> imagecore.RasterImage:
    return render_optimizer.render(document, config=config)


def get_document_metrics(document: vectordoc.VectorDocument, target: imagecore.RasterImage,
                         config: render_optimizer.RenderConfig = None) -> DocumentMetrics:
    """
    :raise DimensionMismatchError: when the document and the target sizes differ
    """
    if (document.width, document.height) != (target.width, target.height):
        raise errors.DimensionMismatchError(
            f"The document is sized {document.width}x{document.height} while the image is "
            f"{target.width}x{target.height}"
        )
    document_stats = vectordoc.stats(document)
    return DocumentMetrics(
        render_optimizer.mse_loss(render_document(document, config), target),
        document_stats.path_count,
        document_stats.parameter_count,
    )
