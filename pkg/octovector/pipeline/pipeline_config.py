#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.
import octovector.constants as constants
import octovector.enums as enums
import octovector.errors as errors
import octovector.render_optimizer as render_optimizer


class PipelineConfig:
    def __init__(self, settings_dict=None):
        if settings_dict is None:
            settings_dict = {}
        # segmentation
        self.provider = self._parse_provider(
            settings_dict.get(enums.PipelineConfigKeys.PROVIDER.value, constants.DEFAULT_PROVIDER.value)
        )
        self.manifest_path = settings_dict.get(enums.PipelineConfigKeys.MANIFEST_PATH.value, None)
        self.grid_side = settings_dict.get(enums.PipelineConfigKeys.GRID_SIDE.value, constants.DEFAULT_GRID_SIDE)
        self.tolerance = settings_dict.get(enums.PipelineConfigKeys.TOLERANCE.value, constants.DEFAULT_TOLERANCE)
        # None: derived from the image size
        self.min_area = settings_dict.get(enums.PipelineConfigKeys.MIN_AREA.value, None)
        self.min_confidence = settings_dict.get(enums.PipelineConfigKeys.MIN_CONFIDENCE.value,
                                                constants.DEFAULT_MIN_CONFIDENCE)
        # selection
        self.impact_threshold = settings_dict.get(enums.PipelineConfigKeys.IMPACT_THRESHOLD.value,
                                                  constants.DEFAULT_IMPACT_THRESHOLD)
        self.use_impact_filter = settings_dict.get(enums.PipelineConfigKeys.USE_IMPACT_FILTER.value,
                                                   constants.DEFAULT_USE_IMPACT_FILTER)
        self.kernel_fraction = settings_dict.get(enums.PipelineConfigKeys.KERNEL_FRACTION.value,
                                                 constants.DEFAULT_KERNEL_FRACTION)
        # tracing
        self.segments_per_path = settings_dict.get(enums.PipelineConfigKeys.SEGMENTS_PER_PATH.value,
                                                   constants.DEFAULT_SEGMENTS_PER_PATH)
        # optimization
        self.phase1_iters = settings_dict.get(enums.PipelineConfigKeys.PHASE1_ITERS.value,
                                              constants.DEFAULT_PHASE1_ITERS)
        self.phase2_iters = settings_dict.get(enums.PipelineConfigKeys.PHASE2_ITERS.value,
                                              constants.DEFAULT_PHASE2_ITERS)
        self.lambda_xing = settings_dict.get(enums.PipelineConfigKeys.LAMBDA_XING.value,
                                             constants.DEFAULT_LAMBDA_XING)
        self.lr_points = settings_dict.get(enums.PipelineConfigKeys.LR_POINTS.value, constants.DEFAULT_LR_POINTS)
        self.lr_colors = settings_dict.get(enums.PipelineConfigKeys.LR_COLORS.value, constants.DEFAULT_LR_COLORS)
        self.flatten_steps = settings_dict.get(enums.PipelineConfigKeys.FLATTEN_STEPS.value,
                                               constants.DEFAULT_FLATTEN_STEPS)
        self.smoothing = settings_dict.get(enums.PipelineConfigKeys.SMOOTHING.value, constants.DEFAULT_SMOOTHING)
        # missing components
        self.omega = settings_dict.get(enums.PipelineConfigKeys.OMEGA.value, constants.DEFAULT_OMEGA)

    @staticmethod
    def _parse_provider(provider):
        # unknown values are kept as is for validate() to report
        try:
            return enums.SegmentationProviders(provider)
        except ValueError:
            return provider

    def validate(self) -> "PipelineConfig":
        """
        :raise ConfigError: on the first invalid value
        """
        if not isinstance(self.provider, enums.SegmentationProviders):
            raise errors.ConfigError(f"Unknown segmentation provider: {self.provider}")
        if self.provider is enums.SegmentationProviders.MANIFEST and not self.manifest_path:
            raise errors.ConfigError("The manifest provider requires a mask manifest path")
        self._check_int(enums.PipelineConfigKeys.GRID_SIDE, self.grid_side, 1)
        self._check_int(enums.PipelineConfigKeys.SEGMENTS_PER_PATH, self.segments_per_path, 2)
        self._check_int(enums.PipelineConfigKeys.PHASE1_ITERS, self.phase1_iters, 0)
        self._check_int(enums.PipelineConfigKeys.PHASE2_ITERS, self.phase2_iters, 0)
        self._check_int(enums.PipelineConfigKeys.FLATTEN_STEPS, self.flatten_steps, 2)
        if self.min_area is not None:
            self._check_int(enums.PipelineConfigKeys.MIN_AREA, self.min_area, 1)
        self._check_number(enums.PipelineConfigKeys.IMPACT_THRESHOLD, self.impact_threshold, minimum=0)
        self._check_number(enums.PipelineConfigKeys.LAMBDA_XING, self.lambda_xing, minimum=0)
        self._check_number(enums.PipelineConfigKeys.MIN_CONFIDENCE, self.min_confidence, minimum=0, maximum=1)
        self._check_number(enums.PipelineConfigKeys.OMEGA, self.omega, exclusive_minimum=0, exclusive_maximum=3)
        for key, value in (
            (enums.PipelineConfigKeys.KERNEL_FRACTION, self.kernel_fraction),
            (enums.PipelineConfigKeys.TOLERANCE, self.tolerance),
            (enums.PipelineConfigKeys.LR_POINTS, self.lr_points),
            (enums.PipelineConfigKeys.LR_COLORS, self.lr_colors),
            (enums.PipelineConfigKeys.SMOOTHING, self.smoothing),
        ):
            self._check_number(key, value, exclusive_minimum=0)
        if not isinstance(self.use_impact_filter, bool):
            raise errors.ConfigError(f"{enums.PipelineConfigKeys.USE_IMPACT_FILTER.value} must be a boolean, "
                                     f"got {self.use_impact_filter}")
        return self

    @staticmethod
    def _check_int(key: enums.PipelineConfigKeys, value, minimum: int):
        if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
            raise errors.ConfigError(f"{key.value} must be an integer >= {minimum}, got {value}")

    @staticmethod
    def _check_number(key: enums.PipelineConfigKeys, value, minimum=None, maximum=None,
                      exclusive_minimum=None, exclusive_maximum=None):
        if isinstance(value, bool) or not isinstance(value, (int, float)) \
                or (minimum is not None and value < minimum) \
                or (maximum is not None and value > maximum) \
                or (exclusive_minimum is not None and value <= exclusive_minimum) \
                or (exclusive_maximum is not None and value >= exclusive_maximum):
            bounds = ", ".join(
                f"{name} {bound}" for name, bound in (
                    (">=", minimum), ("<=", maximum), (">", exclusive_minimum), ("<", exclusive_maximum)
                ) if bound is not None
            )
            raise errors.ConfigError(f"{key.value} must be a number {bounds}, got {value}")

    def render_config(self) -> render_optimizer.RenderConfig:
        return render_optimizer.RenderConfig(self.flatten_steps, self.smoothing)

    def to_dict(self) -> dict:
        return {
            enums.PipelineConfigKeys.PROVIDER.value: self.provider.value
            if isinstance(self.provider, enums.SegmentationProviders) else self.provider,
            enums.PipelineConfigKeys.MANIFEST_PATH.value: self.manifest_path,
            enums.PipelineConfigKeys.GRID_SIDE.value: self.grid_side,
            enums.PipelineConfigKeys.TOLERANCE.value: self.tolerance,
            enums.PipelineConfigKeys.MIN_AREA.value: self.min_area,
            enums.PipelineConfigKeys.MIN_CONFIDENCE.value: self.min_confidence,
            enums.PipelineConfigKeys.IMPACT_THRESHOLD.value: self.impact_threshold,
            enums.PipelineConfigKeys.USE_IMPACT_FILTER.value: self.use_impact_filter,
            enums.PipelineConfigKeys.KERNEL_FRACTION.value: self.kernel_fraction,
            enums.PipelineConfigKeys.SEGMENTS_PER_PATH.value: self.segments_per_path,
            enums.PipelineConfigKeys.PHASE1_ITERS.value: self.phase1_iters,
            enums.PipelineConfigKeys.PHASE2_ITERS.value: self.phase2_iters,
            enums.PipelineConfigKeys.LAMBDA_XING.value: self.lambda_xing,
            enums.PipelineConfigKeys.LR_POINTS.value: self.lr_points,
            enums.PipelineConfigKeys.LR_COLORS.value: self.lr_colors,
            enums.PipelineConfigKeys.FLATTEN_STEPS.value: self.flatten_steps,
            enums.PipelineConfigKeys.SMOOTHING.value: self.smoothing,
            enums.PipelineConfigKeys.OMEGA.value: self.omega,
        }

    def __repr__(self):
        return f"{self.__class__.__name__}({self.to_dict()})"
