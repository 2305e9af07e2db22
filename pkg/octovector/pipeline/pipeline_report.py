#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.
import contextlib
import time

import octovector.enums as enums
import octovector.vectordoc as vectordoc

PHASE = "phase"
OPTIMIZER_LR_POINTS = "lr_points"
OPTIMIZER_LR_COLORS = "lr_colors"
OPTIMIZER_PHASE1_ITERS = "phase1_iters"
OPTIMIZER_PHASE2_ITERS = "phase2_iters"
OPTIMIZER_TOTAL_ITERS = "total_iters"

INITIAL_ROUND = "initial"
UNCOVERED_ROUND = "uncovered"
MISSING_ROUND = "missing"


class PipelineReport:
    def __init__(self):
        self.timings: dict = {}
        self.masks_acquired: int = 0
        self.masks_after_cleaning: int = 0
        self.masks_kept: int = 0
        self.uncovered_prompts: int = 0
        self.uncovered_masks_kept: int = 0
        self.missing_prompts: int = 0
        self.missing_masks_kept: int = 0
        self.impact_decisions: list = []
        self.phases: list = []
        self.final_mse: float = None
        self.stats: vectordoc.DocumentStats = None
        self.empty_document: bool = False
        self.optimizer: dict = {}

    @contextlib.contextmanager
    def timed(self, stage: enums.PipelineStages):
        started_at = time.perf_counter()
        try:
            yield
        finally:
            self.timings[stage.value] = self.timings.get(stage.value, 0.0) + time.perf_counter() - started_at

    def add_decisions(self, decisions: list, round_name: str):
        for decision in decisions:
            self.impact_decisions.append({
                **decision.to_dict(),
                enums.ImpactDecisionKeys.ROUND.value: round_name,
            })

    def add_phase(self, phase: enums.PipelineStages, last_run: dict):
        self.phases.append({PHASE: phase.value, **last_run})

    def to_dict(self) -> dict:
        return {
            enums.ReportKeys.TIMINGS.value: dict(self.timings),
            enums.ReportKeys.MASKS_ACQUIRED.value: self.masks_acquired,
            enums.ReportKeys.MASKS_AFTER_CLEANING.value: self.masks_after_cleaning,
            enums.ReportKeys.MASKS_KEPT.value: self.masks_kept,
            enums.ReportKeys.UNCOVERED_PROMPTS.value: self.uncovered_prompts,
            enums.ReportKeys.UNCOVERED_MASKS_KEPT.value: self.uncovered_masks_kept,
            enums.ReportKeys.MISSING_PROMPTS.value: self.missing_prompts,
            enums.ReportKeys.MISSING_MASKS_KEPT.value: self.missing_masks_kept,
            enums.ReportKeys.IMPACT_DECISIONS.value: list(self.impact_decisions),
            enums.ReportKeys.PHASES.value: list(self.phases),
            enums.ReportKeys.FINAL_MSE.value: self.final_mse,
            enums.ReportKeys.STATS.value: None if self.stats is None else self.stats.to_dict(),
            enums.ReportKeys.EMPTY_DOCUMENT.value: self.empty_document,
            enums.ReportKeys.OPTIMIZER.value: dict(self.optimizer),
        }

    def __repr__(self):
        return f"{self.__class__.__name__}(final_mse={self.final_mse}, stats={self.stats})"
