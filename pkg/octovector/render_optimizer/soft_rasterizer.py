#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.
import typing

import numpy

import octovector.constants as constants
import octovector.imagecore as imagecore
import octovector.render_optimizer.path_parameters as path_parameters
import octovector.render_optimizer.render_config as render_config
import octovector.vectordoc as vectordoc


class PathCoverage(typing.NamedTuple):
    """
    Soft coverage of one path on the pixels of its bounding box
    """
    pixels: numpy.ndarray  # flat row-major indexes of the covered pixels
    alpha: numpy.ndarray
    edges: numpy.ndarray  # index of the closest polygon edge
    edge_parameters: numpy.ndarray  # position of the closest point on that edge, in [0, 1]
    directions: numpy.ndarray  # (count, 2) unit vectors from the closest point to the pixel center
    signs: numpy.ndarray  # -1 inside, 1 outside
    below: numpy.ndarray  # (count, 3) colors under the path before it was composited


class RenderTape(typing.NamedTuple):
    output: numpy.ndarray  # (height, width, 3)
    coverages: list  # of PathCoverage, in drawing order


def _bounding_pixels(vertices: numpy.ndarray, margin: float, width: int, height: int) -> numpy.ndarray:
    low = numpy.floor(vertices.min(axis=0) - margin).astype(int)
    high = numpy.ceil(vertices.max(axis=0) + margin).astype(int)
    columns = numpy.arange(max(low[0], 0), min(high[0] + 1, width))
    rows = numpy.arange(max(low[1], 0), min(high[1] + 1, height))
    return (rows[:, None] * width + columns[None, :]).ravel()


def _closest_edges(centers: numpy.ndarray, starts: numpy.ndarray, edges: numpy.ndarray,
                   squared_lengths: numpy.ndarray):
    offsets = centers[:, None, :] - starts[None, :, :]
    projections = numpy.divide(
        (offsets * edges[None, :, :]).sum(axis=2), squared_lengths[None, :],
        out=numpy.zeros(offsets.shape[:2]), where=squared_lengths[None, :] > 0
    )
    projections = numpy.clip(projections, 0, 1)
    differences = offsets - projections[:, :, None] * edges[None, :, :]
    squared_distances = (differences ** 2).sum(axis=2)
    # argmin keeps the first edge on ties
    closest = numpy.argmin(squared_distances, axis=1)
    picked = numpy.arange(len(centers))
    return closest, projections[picked, closest], differences[picked, closest]


def _crossing_parity(centers: numpy.ndarray, starts: numpy.ndarray, ends: numpy.ndarray) -> numpy.ndarray:
    x, y = centers[:, 0:1], centers[:, 1:2]
    straddles = (starts[None, :, 1] > y) != (ends[None, :, 1] > y)
    delta_y = ends[:, 1] - starts[:, 1]
    safe_delta_y = numpy.where(delta_y == 0, 1, delta_y)
    crossing_x = starts[None, :, 0] + (y - starts[None, :, 1]) * (ends[:, 0] - starts[:, 0])[None, :] / safe_delta_y
    return (numpy.count_nonzero(straddles & (x < crossing_x), axis=1) % 2) == 1


def path_coverage(vertices: numpy.ndarray, width: int, height: int, smoothing: float,
                  chunk_size: int = constants.RENDER_PIXELS_CHUNK_SIZE) -> (numpy.ndarray, tuple):
    """
    Soft coverage of a closed polygon: alpha = clamp(0.5 - signed distance / (2 * smoothing), 0, 1) at pixel
    centers, the signed distance being negative inside (even-odd crossing parity)
    :return: the bounding box pixel indexes and the (alpha, edges, edge_parameters, directions, signs) arrays
    """
    pixels = _bounding_pixels(vertices, smoothing + 1, width, height)
    starts = vertices
    ends = numpy.roll(vertices, -1, axis=0)
    edges = ends - starts
    squared_lengths = (edges ** 2).sum(axis=1)
    closest, parameters, differences, inside = [], [], [], []
    for first in range(0, len(pixels), chunk_size):
        chunk_pixels = pixels[first:first + chunk_size]
        centers = numpy.stack([chunk_pixels % width + 0.5, chunk_pixels // width + 0.5], axis=1).astype(numpy.float64)
        chunk_closest, chunk_parameters, chunk_differences = _closest_edges(centers, starts, edges, squared_lengths)
        closest.append(chunk_closest)
        parameters.append(chunk_parameters)
        differences.append(chunk_differences)
        inside.append(_crossing_parity(centers, starts, ends))
    if not len(pixels):
        empty = numpy.zeros(0)
        return pixels, (empty, numpy.zeros(0, dtype=int), empty, numpy.zeros((0, 2)), empty)
    differences = numpy.concatenate(differences)
    distances = numpy.sqrt((differences ** 2).sum(axis=1))
    directions = numpy.divide(differences, distances[:, None], out=numpy.zeros_like(differences),
                              where=distances[:, None] > 0)
    signs = numpy.where(numpy.concatenate(inside), -1.0, 1.0)
    alpha = numpy.clip(0.5 - signs * distances / (2 * smoothing), 0, 1)
    return pixels, (alpha, numpy.concatenate(closest), numpy.concatenate(parameters), directions, signs)


def path_vertices(points: numpy.ndarray, flatten_steps: int) -> numpy.ndarray:
    return path_parameters.flatten_weights(len(points) // 3, flatten_steps) @ points


def render_parameters(parameters: path_parameters.DocumentParameters,
                      config: render_config.RenderConfig) -> RenderTape:
    """
    Composite every path back to front on a white background, keeping what the backward pass needs
    """
    width, height = parameters.width, parameters.height
    output = numpy.empty((height * width, 3))
    output[:] = constants.RENDER_BACKGROUND
    coverages = []
    for points, fill in zip(parameters.points, parameters.fills):
        vertices = path_vertices(points, config.flatten_steps)
        pixels, (alpha, edges, edge_parameters, directions, signs) = path_coverage(
            vertices, width, height, config.smoothing
        )
        below = output[pixels]
        output[pixels] = alpha[:, None] * fill[None, :] + (1 - alpha[:, None]) * below
        coverages.append(PathCoverage(pixels, alpha, edges, edge_parameters, directions, signs, below))
    return RenderTape(numpy.clip(output, 0, 1).reshape(height, width, 3), coverages)


def backward(tape: RenderTape, parameters: path_parameters.DocumentParameters, output_gradient: numpy.ndarray,
             config: render_config.RenderConfig) -> path_parameters.Gradients:
    """
    Propagate d loss / d output back to the control points and fills: output -> soft coverage ->
    signed distance -> polygon vertices -> control points
    """
    gradient = numpy.array(output_gradient, dtype=numpy.float64).reshape(-1, 3)
    point_gradients = [None] * len(parameters.points)
    fill_gradients = numpy.zeros_like(parameters.fills)
    alpha_slope = -1 / (2 * config.smoothing)
    for index in reversed(range(len(tape.coverages))):
        coverage = tape.coverages[index]
        points, fill = parameters.points[index], parameters.fills[index]
        local = gradient[coverage.pixels]
        fill_gradients[index] = (local * coverage.alpha[:, None]).sum(axis=0)
        alpha_gradient = (local * (fill[None, :] - coverage.below)).sum(axis=1)
        gradient[coverage.pixels] = local * (1 - coverage.alpha[:, None])
        # clamped alpha has no slope outside the smoothing band
        in_band = (coverage.alpha > 0) & (coverage.alpha < 1)
        distance_gradient = numpy.where(in_band, alpha_gradient * alpha_slope, 0) * coverage.signs
        # d distance / d closest point = -direction, spread on the edge end vertices
        weighted = -distance_gradient[:, None] * coverage.directions
        vertex_count = len(points) // 3 * config.flatten_steps
        vertex_gradients = numpy.zeros((vertex_count, 2))
        for start_weight, vertex in (
            (1 - coverage.edge_parameters, coverage.edges),
            (coverage.edge_parameters, (coverage.edges + 1) % vertex_count),
        ):
            for axis in range(2):
                vertex_gradients[:, axis] += numpy.bincount(
                    vertex, weights=start_weight * weighted[:, axis], minlength=vertex_count
                )
        point_gradients[index] = path_parameters.flatten_weights(len(points) // 3, config.flatten_steps).T \
            @ vertex_gradients
    return path_parameters.Gradients(point_gradients, fill_gradients)


def render(document: vectordoc.VectorDocument, width: int = None, height: int = None,
           config: render_config.RenderConfig = None) -> imagecore.RasterImage:
    """
    :return: the soft rasterization of document, at the document size unless width and height are given
    """
    config = config or render_config.RenderConfig()
    parameters = path_parameters.DocumentParameters.from_document(document)
    parameters.width = document.width if width is None else width
    parameters.height = document.height if height is None else height
    return imagecore.RasterImage(render_parameters(parameters, config).output)


