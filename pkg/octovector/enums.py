#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.
import enum


class SegmentationProviders(enum.Enum):
    BUILTIN = "builtin"
    MANIFEST = "manifest"


class PipelineConfigKeys(enum.Enum):
    GRID_SIDE = "grid_side"
    IMPACT_THRESHOLD = "impact_threshold"
    SEGMENTS_PER_PATH = "segments_per_path"
    PHASE1_ITERS = "phase1_iters"
    PHASE2_ITERS = "phase2_iters"
    OMEGA = "omega"
    KERNEL_FRACTION = "kernel_fraction"
    PROVIDER = "provider"
    MANIFEST_PATH = "manifest_path"
    LAMBDA_XING = "lambda_xing"
    LR_POINTS = "lr_points"
    LR_COLORS = "lr_colors"
    TOLERANCE = "tolerance"
    MIN_AREA = "min_area"
    MIN_CONFIDENCE = "min_confidence"
    USE_IMPACT_FILTER = "use_impact_filter"
    FLATTEN_STEPS = "flatten_steps"
    SMOOTHING = "smoothing"


class PipelineStages(enum.Enum):
    SEGMENTATION = "segmentation"
    FILTERING = "filtering"
    TRACING = "tracing"
    PHASE1_OPTIMIZATION = "phase1_optimization"
    MISSING_COMPONENTS = "missing_components"
    PHASE2_OPTIMIZATION = "phase2_optimization"
    TOTAL = "total"


class ReportKeys(enum.Enum):
    TIMINGS = "timings"
    MASKS_ACQUIRED = "masks_acquired"
    MASKS_AFTER_CLEANING = "masks_after_cleaning"
    MASKS_KEPT = "masks_kept"
    UNCOVERED_PROMPTS = "uncovered_prompts"
    UNCOVERED_MASKS_KEPT = "uncovered_masks_kept"
    MISSING_PROMPTS = "missing_prompts"
    MISSING_MASKS_KEPT = "missing_masks_kept"
    IMPACT_DECISIONS = "impact_decisions"
    PHASES = "phases"
    FINAL_MSE = "final_mse"
    STATS = "stats"
    EMPTY_DOCUMENT = "empty_document"
    OPTIMIZER = "optimizer"


class ImpactDecisionKeys(enum.Enum):
    INDEX = "index"
    AREA = "area"
    IMPACT = "impact"
    KEPT = "kept"
    ROUND = "round"


class CliCommands(enum.Enum):
    VECTORIZE = "vectorize"
    METRICS = "metrics"
    DIAGNOSE = "diagnose"


class ExitCodes(enum.Enum):
    SUCCESS = 0
    FAILURE = 1
    USAGE_ERROR = 2
    IO_ERROR = 3
    FORMAT_ERROR = 4
