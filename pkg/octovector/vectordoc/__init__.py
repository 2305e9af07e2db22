#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.

from octovector.vectordoc import vector_document
from octovector.vectordoc import svg_writer
from octovector.vectordoc import svg_reader

from octovector.vectordoc.vector_document import (
    VectorDocument,
    DocumentStats,
    stats,
)
from octovector.vectordoc.svg_writer import (
    format_coordinate,
    path_data,
    fill_attribute,
    to_drawing,
    write_svg,
)
from octovector.vectordoc.svg_reader import (
    parse_path_data,
    parse_fill,
    read_svg,
)

__all__ = [
    "VectorDocument",
    "DocumentStats",
    "stats",
    "format_coordinate",
    "path_data",
    "fill_attribute",
    "to_drawing",
    "write_svg",
    "parse_path_data",
    "parse_fill",
    "read_svg",
]
