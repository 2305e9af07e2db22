#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.
import typing

import octobot_commons.logging as logging

import octovector.constants as constants
import octovector.enums as enums
import octovector.imagecore as imagecore
import octovector.segmentation as segmentation
import octovector.selection.canvas as canvas_import

LOGGER_NAME = "ImpactFilter"


class ImpactDecision:
    def __init__(self, index: int, area: int, impact: float, kept: bool):
        self.index: int = index
        self.area: int = area
        self.impact: float = impact
        self.kept: bool = kept

    def to_dict(self) -> dict:
        return {
            enums.ImpactDecisionKeys.INDEX.value: self.index,
            enums.ImpactDecisionKeys.AREA.value: self.area,
            enums.ImpactDecisionKeys.IMPACT.value: self.impact,
            enums.ImpactDecisionKeys.KEPT.value: self.kept,
        }

    def __repr__(self):
        return f"{self.__class__.__name__}(index={self.index}, area={self.area}, impact={self.impact}, " \
               f"kept={self.kept})"


class KeptMask(typing.NamedTuple):
    mask: segmentation.Mask
    color: tuple


class ImpactFilterResult(typing.NamedTuple):
    kept: list  # of KeptMask, in processing order
    canvas: canvas_import.Canvas
    decisions: list  # of ImpactDecision, in processing order
    errors: list  # canvas error after each kept mask, starting with the start canvas error


def sort_by_area(masks: list) -> list:
    """
    :return: the (original index, mask) pairs sorted by area descending, ties broken by first true pixel
    """
    return sorted(enumerate(masks), key=lambda item: (-item[1].area, item[1].first_pixel_index()))


def filter_by_impact(masks: list, image: imagecore.RasterImage,
                     threshold: float = constants.DEFAULT_IMPACT_THRESHOLD,
                     start: canvas_import.Canvas = None,
                     use_impact_filter: bool = constants.DEFAULT_USE_IMPACT_FILTER) -> ImpactFilterResult:
    """
    Greedily composite masks largest-first, keeping only those reducing the canvas error by at least threshold
    :param masks: the candidate masks
    :param image: the target image
    :param threshold: the minimal error reduction of a kept mask
    :param start: the starting canvas, a blank one when missing
    :param use_impact_filter: when False, every non-empty mask is kept (impacts are still measured)
    :return: the ImpactFilterResult
    """
    logger = logging.get_logger(LOGGER_NAME)
    for mask in masks:
        imagecore.ensure_same_size(image, mask, "filter by impact")
    current = canvas_import.Canvas.blank(image.width, image.height) if start is None else start
    imagecore.ensure_same_size(image, current, "filter by impact start canvas")
    current_error = canvas_import.canvas_error(image, current)
    kept, decisions, kept_errors = [], [], [current_error]
    for index, mask in sort_by_area(masks):
        if mask.area < 1:
            decisions.append(ImpactDecision(index, 0, 0.0, False))
            continue
        color = canvas_import.mean_color(image, mask)
        candidate = canvas_import.composite(current, mask, color)
        candidate_error = canvas_import.canvas_error(image, candidate)
        impact = current_error - candidate_error
        keep = impact >= threshold or not use_impact_filter
        decisions.append(ImpactDecision(index, mask.area, impact, keep))
        if keep:
            # a discarded candidate is simply dropped: current is left untouched
            current, current_error = candidate, candidate_error
            kept.append(KeptMask(mask, color))
            kept_errors.append(current_error)
    logger.debug(f"Kept {len(kept)} masks out of {len(masks)}, canvas error: {current_error:.6f}")
    return ImpactFilterResult(kept, current, decisions, kept_errors)
