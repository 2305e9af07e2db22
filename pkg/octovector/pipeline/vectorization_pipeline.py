#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.
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
import octovector.pipeline.missing_components as missing_components
import octovector.pipeline.pipeline_config as pipeline_config
import octovector.pipeline.pipeline_report as pipeline_report


class VectorizationPipeline:
    """
    Segmentation, filtering by impact, tracing and optimization of an image into a vector document,
    followed by a missing components round. Intermediate maps of the last run are kept for diagnostics.
    """

    def __init__(self, config: pipeline_config.PipelineConfig):
        self.logger = logging.get_logger(self.__class__.__name__)
        self.config: pipeline_config.PipelineConfig = config.validate()
        self.report: pipeline_report.PipelineReport = None
        self.coverage_alpha: imagecore.ScalarMap = None
        self.missing_map: imagecore.ScalarMap = None
        self.optimizer_state: render_optimizer.OptimizerState = None

    def run(self, image: imagecore.RasterImage) -> (vectordoc.VectorDocument, pipeline_report.PipelineReport):
        self.report = pipeline_report.PipelineReport()
        self.report.optimizer = {
            pipeline_report.OPTIMIZER_LR_POINTS: self.config.lr_points,
            pipeline_report.OPTIMIZER_LR_COLORS: self.config.lr_colors,
            pipeline_report.OPTIMIZER_PHASE1_ITERS: self.config.phase1_iters,
            pipeline_report.OPTIMIZER_PHASE2_ITERS: self.config.phase2_iters,
            pipeline_report.OPTIMIZER_TOTAL_ITERS: self.config.phase1_iters + self.config.phase2_iters,
        }
        render_config = self.config.render_config()
        with self.report.timed(enums.PipelineStages.TOTAL):
            radius = imagecore.kernel_radius_for(image.width, image.height, self.config.kernel_fraction,
                                                 constants.MIN_KERNEL_RADIUS)
            masks = self._acquire_masks(image)
            kept = self._select_masks(image, masks, radius)
            with self.report.timed(enums.PipelineStages.TRACING):
                document = self._trace(image, kept)
            self.logger.info(f"Traced {len(document.paths)} paths from {len(kept)} kept masks")

            self.optimizer_state = render_optimizer.OptimizerState.create(self.config.lr_points,
                                                                          self.config.lr_colors)
            with self.report.timed(enums.PipelineStages.PHASE1_OPTIMIZATION):
                document = render_optimizer.optimize(document, image, self.config.phase1_iters,
                                                     self.optimizer_state, render_config, self.config.lambda_xing)
            self.report.add_phase(enums.PipelineStages.PHASE1_OPTIMIZATION, self.optimizer_state.last_run)

            document, missing_round = missing_components.refine_missing_components(
                document, image, self.config, self.optimizer_state, self.report
            )
            self.missing_map = missing_round.missing_map
        self._complete_report(document, image, render_config)
        return document, self.report

    def _acquire_masks(self, image: imagecore.RasterImage) -> list:
        with self.report.timed(enums.PipelineStages.SEGMENTATION):
            if self.config.provider is enums.SegmentationProviders.MANIFEST:
                masks = segmentation.ingest_masks(self.config.manifest_path, image)
            else:
                masks = segmentation.auto_segment(image, self.config.grid_side, self.config.tolerance)
            self.report.masks_acquired = len(masks)
            confident_masks = [mask for mask in masks if mask.confidence >= self.config.min_confidence]
            cleaned = self._clean(image, confident_masks)
        self.report.masks_after_cleaning = len(cleaned)
        self.logger.info(f"Acquired {len(masks)} masks, {len(confident_masks)} confident enough, "
                         f"{len(cleaned)} left after cleaning")
        return cleaned

    def _min_area(self, image: imagecore.RasterImage) -> int:
        return self.config.min_area or segmentation.default_min_area(image.width, image.height)

    def _clean(self, image: imagecore.RasterImage, masks: list) -> list:
        min_area = self._min_area(image)
        cleaned = (segmentation.clean_mask(mask, min_area) for mask in masks)
        return [mask for mask in cleaned if mask.area]

    def _select_masks(self, image: imagecore.RasterImage, masks: list, radius: int) -> list:
        """
        :return: the KeptMask of both prompting rounds, largest first
        """
        with self.report.timed(enums.PipelineStages.FILTERING):
            first_round = selection.filter_by_impact(masks, image, self.config.impact_threshold,
                                                     use_impact_filter=self.config.use_impact_filter)
            self.report.add_decisions(first_round.decisions, pipeline_report.INITIAL_ROUND)
            self.coverage_alpha = selection.coverage_alpha([kept.mask for kept in first_round.kept],
                                                           image.width, image.height)
            prompts = selection.mean_shift(
                selection.find_uncovered_points(self.coverage_alpha, radius),
                constants.MEAN_SHIFT_BANDWIDTH_FACTOR * radius
            )
        self.report.uncovered_prompts = len(prompts)
        with self.report.timed(enums.PipelineStages.SEGMENTATION):
            uncovered_masks = missing_components.prompt_masks(image, prompts, self.config.tolerance,
                                                              self._min_area(image))
        with self.report.timed(enums.PipelineStages.FILTERING):
            second_round = selection.filter_by_impact(uncovered_masks, image, self.config.impact_threshold,
                                                      first_round.canvas, self.config.use_impact_filter)
            self.report.add_decisions(second_round.decisions, pipeline_report.UNCOVERED_ROUND)
        self.report.uncovered_masks_kept = len(second_round.kept)
        self.report.masks_kept = len(first_round.kept) + len(second_round.kept)
        kept = first_round.kept + second_round.kept
        self.logger.info(f"Kept {len(first_round.kept)} masks, then {len(second_round.kept)} out of "
                         f"{len(uncovered_masks)} masks grown from {len(prompts)} uncovered regions")
        return [kept[index] for index, _ in selection.sort_by_area([kept_mask.mask for kept_mask in kept])]

    def _is_background(self, kept_mask: selection.KeptMask, traced_bits: numpy.ndarray) -> bool:
        # a white fill over nothing but the white render background draws nothing
        return max(abs(background - channel) for background, channel in
                   zip(constants.RENDER_BACKGROUND, kept_mask.color)) <= constants.BACKGROUND_FILL_TOLERANCE \
            and not numpy.logical_and(traced_bits, kept_mask.mask.bits).any()

    def _trace(self, image: imagecore.RasterImage, kept: list) -> vectordoc.VectorDocument:
        paths = []
        traced_bits = numpy.zeros(image.shape, dtype=bool)
        for kept_mask in kept:
            if self._is_background(kept_mask, traced_bits):
                self.logger.debug(f"Skipping background mask of area {kept_mask.mask.area}")
                continue
            try:
                paths.extend(tracing.trace_mask(kept_mask.mask, image, self.config.segments_per_path))
            except errors.InvalidMaskError as err:
                self.logger.debug(f"Skipping untraceable mask: {err}")
                continue
            traced_bits |= kept_mask.mask.bits
        return vectordoc.VectorDocument(image.width, image.height, paths)

    def _complete_report(self, document: vectordoc.VectorDocument, image: imagecore.RasterImage,
                         render_config: render_optimizer.RenderConfig):
        self.report.final_mse = render_optimizer.mse_loss(
            render_optimizer.render(document, config=render_config), image
        )
        self.report.stats = vectordoc.stats(document)
        self.report.empty_document = document.is_empty()
        if self.report.empty_document:
            self.logger.warning("No mask survived filtering: the document has no path")
        self.logger.info(f"Vectorized into {self.report.stats.path_count} paths "
                         f"({self.report.stats.parameter_count} parameters), final MSE: "
                         f"{self.report.final_mse:.6f}")


def vectorize(image: imagecore.RasterImage,
              config: pipeline_config.PipelineConfig = None) -> (vectordoc.VectorDocument,
                                                                  pipeline_report.PipelineReport):
    return VectorizationPipeline(config or pipeline_config.PipelineConfig()).run(image)
