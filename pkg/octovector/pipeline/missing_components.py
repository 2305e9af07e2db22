#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.
import typing

import numpy

import octobot_commons.logging as logging

import octovector.constants as constants
import octovector.enums as enums
import octovector.errors as errors
import octovector.imagecore as imagecore
import octovector.render_optimizer as render_optimizer
import octovector.segmentation as segmentation
import octovector.selection as selection
import octovector.tracing as tracing
import octovector.vectordoc as vectordoc
import octovector.pipeline.pipeline_config as pipeline_config
import octovector.pipeline.pipeline_report as pipeline_report

LOGGER_NAME = "MissingComponents"


class MissingComponentsRound(typing.NamedTuple):
    document: vectordoc.VectorDocument
    missing_map: imagecore.ScalarMap
    prompts: list
    filter_result: selection.ImpactFilterResult
    added_paths: int


def missing_component_map(target: imagecore.RasterImage, render: imagecore.RasterImage, radius: float,
                          omega: float = constants.DEFAULT_OMEGA) -> imagecore.ScalarMap:
    """
    :return: the binary map of pixels whose mean difference over the radius disc exceeds omega, differences
    being summed over the channels (in [0, 3])
    """
    kernel = imagecore.make_circular_kernel(radius)
    mean_difference = imagecore.convolve_binary(imagecore.difference_map(target, render), kernel).data \
        / kernel.cell_count
    return imagecore.ScalarMap((mean_difference > omega).astype(numpy.float64))


def centroid_prompts(missing_map: imagecore.ScalarMap) -> list:
    return [segmentation.PromptPoint(*component.centroid) for component in imagecore.connected_components(missing_map)]


def detect_missing(target: imagecore.RasterImage, render: imagecore.RasterImage, radius: float,
                   omega: float = constants.DEFAULT_OMEGA) -> list:
    """
    :return: a PromptPoint at the centroid of each connected region the render misses
    """
    return centroid_prompts(missing_component_map(target, render, radius, omega))


def prompt_masks(image: imagecore.RasterImage, prompts: list, tolerance: float, min_area: int) -> list:
    """
    :return: the cleaned non-empty masks grown from each prompt
    """
    masks = []
    for prompt in prompts:
        mask = segmentation.clean_mask(segmentation.prompt_segment(image, prompt, tolerance), min_area)
        if mask.area:
            masks.append(mask)
    return masks


def trace_kept_masks(kept: list, image: imagecore.RasterImage, segments: int) -> list:
    """
    :return: the paths of every traceable kept mask, in kept order
    """
    logger = logging.get_logger(LOGGER_NAME)
    paths = []
    for kept_mask in kept:
        try:
            paths.extend(tracing.trace_mask(kept_mask.mask, image, segments))
        except errors.InvalidMaskError as err:
            logger.debug(f"Skipping untraceable mask: {err}")
    return paths


def find_missing_components(document: vectordoc.VectorDocument, target: imagecore.RasterImage,
                            config: pipeline_config.PipelineConfig) -> MissingComponentsRound:
    """
    Prompt the regions the document render misses and append the paths of the masks improving the render
    """
    logger = logging.get_logger(LOGGER_NAME)
    rendered = render_optimizer.render(document, config=config.render_config())
    radius = imagecore.kernel_radius_for(target.width, target.height, config.kernel_fraction,
                                         constants.MIN_KERNEL_RADIUS)
    missing_map = missing_component_map(target, rendered, radius, config.omega)
    prompts = centroid_prompts(missing_map)
    min_area = config.min_area or segmentation.default_min_area(target.width, target.height)
    masks = prompt_masks(target, prompts, config.tolerance, min_area)
    # the current render is the starting canvas: only improvements over it are kept
    filter_result = selection.filter_by_impact(
        masks, target, config.impact_threshold, selection.Canvas.from_image(rendered), config.use_impact_filter
    )
    paths = trace_kept_masks(filter_result.kept, target, config.segments_per_path)
    logger.info(f"{len(prompts)} missing components detected, {len(filter_result.kept)} masks kept, "
                f"{len(paths)} paths added")
    return MissingComponentsRound(document.appended(paths), missing_map, prompts, filter_result, len(paths))


def refine_missing_components(document: vectordoc.VectorDocument, target: imagecore.RasterImage,
                              config: pipeline_config.PipelineConfig,
                              state: render_optimizer.OptimizerState = None,
                              report: pipeline_report.PipelineReport = None) -> (vectordoc.VectorDocument,
                                                                                 MissingComponentsRound):
    """
    Run a missing component round then optimize the completed document for config.phase2_iters iterations
    """
    report = report or pipeline_report.PipelineReport()
    state = state or render_optimizer.OptimizerState.create(config.lr_points, config.lr_colors)
    with report.timed(enums.PipelineStages.MISSING_COMPONENTS):
        missing_round = find_missing_components(document, target, config)
    report.missing_prompts = len(missing_round.prompts)
    report.missing_masks_kept = len(missing_round.filter_result.kept)
    report.add_decisions(missing_round.filter_result.decisions, pipeline_report.MISSING_ROUND)
    with report.timed(enums.PipelineStages.PHASE2_OPTIMIZATION):
        # appended paths change the parameters structure: the optimizer state restarts unless nothing was added
        refined = render_optimizer.optimize(
            missing_round.document, target, config.phase2_iters, state, config.render_config(), config.lambda_xing
        )
    report.add_phase(enums.PipelineStages.PHASE2_OPTIMIZATION, state.last_run)
    return refined, missing_round
