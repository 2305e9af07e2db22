#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.
import functools

import numpy

import octovector.tracing as tracing
import octovector.vectordoc as vectordoc


@functools.lru_cache(maxsize=64)
def flatten_weights(segment_count: int, steps: int) -> numpy.ndarray:
    """
    :return: the read-only (segment_count * steps, 3 * segment_count) matrix mapping the [p0, p1, p2] control
    points of a closed path to its polygon vertices, sampled at t = k / steps on each segment
    """
    point_count = 3 * segment_count
    bernstein = tracing.bernstein_weights(numpy.arange(steps) / steps)
    weights = numpy.zeros((segment_count * steps, point_count))
    for segment in range(segment_count):
        rows = slice(segment * steps, (segment + 1) * steps)
        weights[rows, 3 * segment:3 * segment + 3] += bernstein[:, :3]
        weights[rows, (3 * segment + 3) % point_count] += bernstein[:, 3]
    weights.flags.writeable = False
    return weights


class DocumentParameters:
    """
    Optimizable values of a document: per path the (3 * segment count, 2) control points array and the
    (path count, 3) fills array
    """

    def __init__(self, width: int, height: int, points: list, fills):
        self.width: int = width
        self.height: int = height
        self.points: list = [numpy.array(path_points, dtype=numpy.float64) for path_points in points]
        self.fills: numpy.ndarray = numpy.array(fills, dtype=numpy.float64).reshape(-1, 3)

    @classmethod
    def from_document(cls, document: vectordoc.VectorDocument) -> "DocumentParameters":
        return cls(
            document.width,
            document.height,
            [path.to_points() for path in document.paths],
            [path.fill for path in document.paths],
        )

    def to_document(self) -> vectordoc.VectorDocument:
        return vectordoc.VectorDocument(
            self.width,
            self.height,
            [tracing.BezierPath.from_points(points, fill) for points, fill in zip(self.points, self.fills)]
        )

    @property
    def structure(self) -> tuple:
        return (self.width, self.height) + tuple(len(points) // 3 for points in self.points)

    @property
    def size(self) -> int:
        return sum(points.size for points in self.points) + self.fills.size

    def flatten(self) -> numpy.ndarray:
        return numpy.concatenate([points.ravel() for points in self.points] + [self.fills.ravel()])

    def with_vector(self, vector: numpy.ndarray) -> "DocumentParameters":
        points, offset = [], 0
        for path_points in self.points:
            points.append(vector[offset:offset + path_points.size].reshape(path_points.shape))
            offset += path_points.size
        return DocumentParameters(self.width, self.height, points, vector[offset:])

    def learning_rates(self, lr_points: float, lr_colors: float) -> numpy.ndarray:
        points_size = self.size - self.fills.size
        return numpy.concatenate([numpy.full(points_size, lr_points), numpy.full(self.fills.size, lr_colors)])

    def copy(self) -> "DocumentParameters":
        return DocumentParameters(self.width, self.height, self.points, self.fills)


class Gradients:
    """
    Loss derivatives mirroring DocumentParameters: one (3 * segment count, 2) array per path and the
    (path count, 3) fills derivatives
    """

    def __init__(self, points: list, fills):
        self.points: list = points
        self.fills: numpy.ndarray = numpy.asarray(fills, dtype=numpy.float64).reshape(-1, 3)

    @classmethod
    def zeros_like(cls, parameters: DocumentParameters) -> "Gradients":
        return cls([numpy.zeros_like(points) for points in parameters.points], numpy.zeros_like(parameters.fills))

    def flatten(self) -> numpy.ndarray:
        return numpy.concatenate([points.ravel() for points in self.points] + [self.fills.ravel()])

    def __repr__(self):
        return f"{self.__class__.__name__}({len(self.points)} paths)"
