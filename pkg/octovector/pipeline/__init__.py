#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.

from octovector.pipeline import pipeline_config
from octovector.pipeline import pipeline_report
from octovector.pipeline import missing_components
from octovector.pipeline import vectorization_pipeline

from octovector.pipeline.pipeline_config import (
    PipelineConfig,
)
from octovector.pipeline.pipeline_report import (
    PipelineReport,
)
from octovector.pipeline.missing_components import (
    MissingComponentsRound,
    missing_component_map,
    centroid_prompts,
    detect_missing,
    prompt_masks,
    trace_kept_masks,
    find_missing_components,
    refine_missing_components,
)
from octovector.pipeline.vectorization_pipeline import (
    VectorizationPipeline,
    vectorize,
)

__all__ = [
    "PipelineConfig",
    "PipelineReport",
    "MissingComponentsRound",
    "missing_component_map",
    "centroid_prompts",
    "detect_missing",
    "prompt_masks",
    "trace_kept_masks",
    "find_missing_components",
    "refine_missing_components",
    "VectorizationPipeline",
    "vectorize",
]
