#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.

from octovector.segmentation import mask
from octovector.segmentation import mask_ingestion
from octovector.segmentation import region_growing
from octovector.segmentation import mask_cleaning

from octovector.segmentation.mask import (
    Mask,
    PromptPoint,
)
from octovector.segmentation.mask_ingestion import (
    ingest_masks,
)
from octovector.segmentation.region_growing import (
    prompt_segment,
    grid_prompts,
    deduplicate_masks,
    auto_segment,
)
from octovector.segmentation.mask_cleaning import (
    default_min_area,
    clean_mask,
)

__all__ = [
    "Mask",
    "PromptPoint",
    "ingest_masks",
    "prompt_segment",
    "grid_prompts",
    "deduplicate_masks",
    "auto_segment",
    "default_min_area",
    "clean_mask",
]
