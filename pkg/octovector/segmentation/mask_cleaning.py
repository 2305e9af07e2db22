#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.
import math

import numpy

import octovector.constants as constants
import octovector.imagecore as imagecore
import octovector.segmentation.mask as mask_import


def default_min_area(width: int, height: int) -> int:
    return max(1, math.ceil(constants.DEFAULT_MIN_AREA_RATIO * width * height))


def _small_labels(labels: numpy.ndarray, min_area: int) -> numpy.ndarray:
    small = numpy.bincount(labels.ravel()) < min_area
    small[0] = False
    return small


def clean_mask(mask: mask_import.Mask, min_area: int) -> mask_import.Mask:
    """
    Remove true components smaller than min_area, then fill holes smaller than min_area
    (holes are false components that don't touch the image border)
    """
    if min_area < 1:
        raise ValueError(f"Minimum area must be >= 1, got {min_area}")
    bits = numpy.array(mask.bits)
    labels, _ = imagecore.label_components(bits)
    bits[_small_labels(labels, min_area)[labels]] = False

    hole_labels, _ = imagecore.label_components(~bits)
    fillable = _small_labels(hole_labels, min_area)
    border_labels = numpy.concatenate(
        [hole_labels[0, :], hole_labels[-1, :], hole_labels[:, 0], hole_labels[:, -1]]
    )
    fillable[border_labels] = False
    bits[fillable[hole_labels]] = True
    return mask.with_bits(bits)
