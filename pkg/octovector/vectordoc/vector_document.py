#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.
import octovector.tracing as tracing

PATH_COUNT = "path_count"
PARAMETER_COUNT = "parameter_count"
WIDTH = "width"
HEIGHT = "height"
FILL_PARAMETER_COUNT = 3


class VectorDocument:
    """
    Fixed size canvas of z-ordered paths: paths[0] is drawn first (backmost)
    """

    def __init__(self, width: int, height: int, paths=()):
        if width < 1 or height < 1:
            raise ValueError(f"Invalid document size {width}x{height}")
        self.width: int = width
        self.height: int = height
        self.paths: tuple = tuple(paths)
        for index, path in enumerate(self.paths):
            if not isinstance(path, tracing.BezierPath):
                raise ValueError(f"Document path {index} is not a BezierPath: {path}")

    def with_paths(self, paths) -> "VectorDocument":
        return VectorDocument(self.width, self.height, paths)

    def appended(self, paths) -> "VectorDocument":
        return VectorDocument(self.width, self.height, self.paths + tuple(paths))

    def is_empty(self) -> bool:
        return not self.paths

    def __eq__(self, other):
        return isinstance(other, VectorDocument) and (self.width, self.height, self.paths) == \
            (other.width, other.height, other.paths)

    def __hash__(self):
        return hash((self.width, self.height, self.paths))

    def __repr__(self):
        return f"{self.__class__.__name__}({self.width}x{self.height}, {len(self.paths)} paths)"


class DocumentStats:
    def __init__(self, path_count: int, parameter_count: int, width: int, height: int):
        self.path_count: int = path_count
        self.parameter_count: int = parameter_count
        self.width: int = width
        self.height: int = height

    def to_dict(self) -> dict:
        return {
            PATH_COUNT: self.path_count,
            PARAMETER_COUNT: self.parameter_count,
            WIDTH: self.width,
            HEIGHT: self.height,
        }

    def __eq__(self, other):
        return isinstance(other, DocumentStats) and self.to_dict() == other.to_dict()

    def __repr__(self):
        return f"{self.__class__.__name__}({self.to_dict()})"


def stats(document: VectorDocument) -> DocumentStats:
    return DocumentStats(
        len(document.paths),
        sum(2 * path.distinct_point_count() + FILL_PARAMETER_COUNT for path in document.paths),
        document.width,
        document.height,
    )
