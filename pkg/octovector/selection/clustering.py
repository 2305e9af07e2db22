#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.
import math

import numpy
import scipy.spatial

import octobot_commons.logging as logging

import octovector.constants as constants
import octovector.segmentation as segmentation

LOGGER_NAME = "MeanShift"


def _shift_to_modes(points: numpy.ndarray, tree: scipy.spatial.cKDTree, bandwidth: float,
                    convergence_distance: float, max_iterations: int) -> numpy.ndarray:
    modes = numpy.array(points)
    moving = numpy.arange(len(points))
    for _ in range(max_iterations):
        if not len(moving):
            break
        neighbourhoods = tree.query_ball_point(modes[moving], bandwidth)
        shifted = numpy.array([
            points[neighbourhood].mean(axis=0) if neighbourhood else modes[index]
            for index, neighbourhood in zip(moving, neighbourhoods)
        ])
        shifts = numpy.linalg.norm(shifted - modes[moving], axis=1)
        modes[moving] = shifted
        moving = moving[shifts >= convergence_distance]
    return modes


def _round_half_up(value: float) -> int:
    return math.floor(value + 0.5)


def mean_shift(points: list, bandwidth: float,
               convergence_distance: float = constants.MEAN_SHIFT_CONVERGENCE_DISTANCE,
               max_iterations: int = constants.MEAN_SHIFT_MAX_ITERATIONS) -> list:
    """
    Flat kernel mean shift clustering
    :param points: the PromptPoint list to cluster
    :param bandwidth: the flat kernel radius
    :return: the cluster modes rounded to pixels, pairwise at least bandwidth / 2 apart, sorted row-major
    """
    if bandwidth <= 0:
        raise ValueError(f"Mean shift bandwidth must be > 0, got {bandwidth}")
    if not points:
        return []
    coordinates = numpy.array([(point.x, point.y) for point in points], dtype=numpy.float64)
    tree = scipy.spatial.cKDTree(coordinates)
    modes = _shift_to_modes(coordinates, tree, bandwidth, convergence_distance, max_iterations)
    supports = [len(neighbourhood) for neighbourhood in tree.query_ball_point(modes, bandwidth)]
    rounded_supports = {}
    for (x, y), support in zip(modes, supports):
        rounded = (_round_half_up(x), _round_half_up(y))
        rounded_supports[rounded] = max(support, rounded_supports.get(rounded, 0))
    candidates = sorted(rounded_supports.items(), key=lambda item: (-item[1], item[0][1], item[0][0]))
    merged = []
    for (x, y), _ in candidates:
        if all(math.hypot(x - kept_x, y - kept_y) >= bandwidth / 2 for kept_x, kept_y in merged):
            merged.append((x, y))
    logging.get_logger(LOGGER_NAME).debug(f"{len(points)} points clustered into {len(merged)} modes")
    return [segmentation.PromptPoint(x, y) for x, y in sorted(merged, key=lambda mode: (mode[1], mode[0]))]
