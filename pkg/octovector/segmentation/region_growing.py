#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.
import collections

import numpy

import octobot_commons.logging as logging

import octovector.constants as constants
import octovector.imagecore as imagecore
import octovector.segmentation.mask as mask_import

LOGGER_NAME = "RegionGrowing"


def _grow_region(pixels: list, width: int, height: int, seed: mask_import.PromptPoint,
                 tolerance: float) -> numpy.ndarray:
    squared_tolerance = tolerance * tolerance
    member = bytearray(width * height)
    member[seed.y * width + seed.x] = 1
    sum_r, sum_g, sum_b = pixels[seed.y][seed.x]
    count = 1
    queue = collections.deque([(seed.x, seed.y)])
    while queue:
        x, y = queue.popleft()
        # neighbors in row-major order
        for n_x, n_y in ((x, y - 1), (x - 1, y), (x + 1, y), (x, y + 1)):
            if n_x < 0 or n_y < 0 or n_x >= width or n_y >= height or member[n_y * width + n_x]:
                continue
            red, green, blue = pixels[n_y][n_x]
            d_r = red - sum_r / count
            d_g = green - sum_g / count
            d_b = blue - sum_b / count
            if d_r * d_r + d_g * d_g + d_b * d_b <= squared_tolerance:
                member[n_y * width + n_x] = 1
                sum_r += red
                sum_g += green
                sum_b += blue
                count += 1
                queue.append((n_x, n_y))
    return numpy.frombuffer(bytes(member), dtype=numpy.uint8).reshape(height, width).astype(bool)


def _check_prompt(image: imagecore.RasterImage, seed: mask_import.PromptPoint, tolerance: float):
    if not seed.is_inside(image.width, image.height):
        raise ValueError(f"Prompt point {seed} is outside of the {image.width}x{image.height} image")
    if tolerance <= 0:
        raise ValueError(f"Region growing tolerance must be > 0, got {tolerance}")


def prompt_segment(image: imagecore.RasterImage, seed: mask_import.PromptPoint,
                   tolerance: float = constants.DEFAULT_TOLERANCE) -> mask_import.Mask:
    """
    Grow a 4-connected region from seed, admitting pixels whose RGB distance to the running
    region mean is at most tolerance
    """
    _check_prompt(image, seed, tolerance)
    return mask_import.Mask(_grow_region(image.data.tolist(), image.width, image.height, seed, tolerance))


def grid_prompts(width: int, height: int, grid_side: int) -> list:
    if grid_side < 1:
        raise ValueError(f"Grid side must be >= 1, got {grid_side}")
    columns = sorted({int((index + 0.5) * width / grid_side) for index in range(grid_side)})
    rows = sorted({int((index + 0.5) * height / grid_side) for index in range(grid_side)})
    return [mask_import.PromptPoint(x, y) for y in rows for x in columns]


def deduplicate_masks(masks: list, iou_threshold: float = constants.AUTO_SEGMENT_IOU_THRESHOLD) -> list:
    """
    Drop masks overlapping a larger selected mask with an IoU above iou_threshold
    :return: the kept masks, largest first, equal areas in input order
    """
    selected = []
    for mask in sorted(masks, key=lambda candidate: candidate.area, reverse=True):
        if mask.area < 1:
            continue
        if all(mask.iou(other) <= iou_threshold for other in selected):
            selected.append(mask)
    return selected


def auto_segment(image: imagecore.RasterImage, grid_side: int = constants.DEFAULT_GRID_SIDE,
                 tolerance: float = constants.DEFAULT_TOLERANCE) -> list:
    """
    Prompt the region grower at every point of an evenly spaced grid_side x grid_side grid,
    then deduplicate the grown regions
    """
    logger = logging.get_logger(LOGGER_NAME)
    prompts = grid_prompts(image.width, image.height, grid_side)
    pixels = image.data.tolist()
    # a single color region regrows identically from any of its pixels
    uniform_masks = []
    masks = []
    for prompt in prompts:
        _check_prompt(image, prompt, tolerance)
        mask = next((uniform for uniform in uniform_masks if uniform.bits[prompt.y, prompt.x]), None)
        if mask is None:
            mask = mask_import.Mask(_grow_region(pixels, image.width, image.height, prompt, tolerance))
            if numpy.all(image.data[mask.bits] == image.data[prompt.y, prompt.x]):
                uniform_masks.append(mask)
        masks.append(mask)
    selected = deduplicate_masks(masks)
    logger.debug(f"Grid of {len(prompts)} prompts grew {len(masks)} regions, {len(selected)} after deduplication")
    return selected
