"""
Sweep pipeline.

This module turns a SweepSpec into ordered ResponseSamples:
1. Builds the 1-D grid of the swept variable (linear or geometric)
2. Evaluates every grid point for the requested models in a worker pool
3. Returns the results in grid order, whatever the completion order

It also holds the figure presets, each a list of named sweeps.
"""

import time
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional, Tuple

import numpy as np

from plasma_response.config import settings
from plasma_response.exceptions import DomainError, PlasmaResponseError
from plasma_response.logging_config import get_logger
from plasma_response.models import DimensionlessQuery, ResponseSample, SweepSpec
from plasma_response.response import eval_all
from plasma_response.schemas import ResponseModel, SweepVariable

logger = get_logger(__name__)

FIGURE_NUMBERS = (1, 2, 3, 4, 5)


class SweepResult:
    """Samples of one sweep, in grid order."""

    def __init__(self, spec: SweepSpec, rows: List[Tuple[float, List[ResponseSample]]], elapsed: float):
        self.spec = spec
        self.rows = rows
        self.elapsed = elapsed

    @property
    def failed_points(self) -> int:
        """Grid points where every model failed."""
        return sum(1 for _, samples in self.rows if not any(sample.ok for sample in samples))

    @property
    def all_failed(self) -> bool:
        return bool(self.rows) and self.failed_points == len(self.rows)


class SweepPipeline:
    """
    Evaluates a SweepSpec point by point.

    Points are independent, so they are mapped over a ThreadPoolExecutor;
    executor.map keeps the results in grid order.
    """

    def __init__(self, spec: SweepSpec, workers: Optional[int] = None):
        """
        Args:
            spec: the sweep to run
            workers: worker threads (default settings.get_workers())
        """
        self.spec = spec
        self.workers = workers or settings.get_workers()
        if self.workers < 1:
            raise DomainError("workers", "workers must be >= 1")

    def grid(self) -> np.ndarray:
        """Values of the swept variable."""
        if self.spec.log_scale:
            return np.geomspace(self.spec.start, self.spec.stop, self.spec.points)
        return np.linspace(self.spec.start, self.spec.stop, self.spec.points)

    def run(self) -> SweepResult:
        """Evaluate the whole grid."""
        start_time = time.time()
        values = [float(v) for v in self.grid()]
        logger.info(f"Sweeping {self.spec.variable.value} over {len(values)} points "
                    f"[{self.spec.start}, {self.spec.stop}] with {self.workers} worker(s)")

        try:
            with ThreadPoolExecutor(max_workers=self.workers) as executor:
                samples = list(executor.map(self._evaluate_point, values))
        except Exception as e:
            logger.error(f"Sweep failed: {str(e)}")
            raise

        result = SweepResult(self.spec, list(zip(values, samples)), time.time() - start_time)
        logger.info(f"Sweep completed in {result.elapsed:.2f}s, {result.failed_points} failed point(s)")
        return result

    def _evaluate_point(self, value: float) -> List[ResponseSample]:
        """All requested models at one grid value; failures become NaN samples."""
        coordinates: Dict[str, Optional[float]] = {
            "q": self.spec.fixed.get("q"),
            "x": self.spec.fixed.get("x"),
            "y": self.spec.fixed.get("y"),
            "x_p": self.spec.fixed.get("x_p"),
        }
        coordinates[self.spec.variable.value] = value
        query = DimensionlessQuery.build(**coordinates)

        try:
            samples = eval_all(query, self.spec.models)
        except PlasmaResponseError as e:
            logger.warning(f"Point {self.spec.variable.value}={value} failed: {e}")
            samples = [ResponseSample.failed(model, query, str(e)) for model in ResponseModel
                       if model in self.spec.models]

        for sample in samples:
            if not sample.ok:
                logger.warning(f"{sample.model.value} at {self.spec.variable.value}={value}: {sample.error}")
        return samples


# =============================================================================
# FIGURE PRESETS
# =============================================================================

def figure_specs(
    n: int,
    y: Optional[float] = None,
    points: Optional[int] = None,
    x_p: Optional[float] = None,
) -> List[Tuple[str, SweepSpec]]:
    """
    Preset sweeps of the five figures.

    - 1, 2: mermin sigma vs x for q in settings.FIGURE_12_Q_VALUES (Re and Im columns)
    - 3: |sigma| vs x for all models at y = 0.1, q = 1
    - 4, 5: sigma vs q for all models at y = 0.01, x = 0.1

    Args:
        n: figure number 1..5
        y: overrides the preset collision frequency
        points: overrides settings.FIGURE_POINTS
        x_p: adds eps columns

    Returns:
        (label, spec) pairs; the label names the curve
    """
    if n not in FIGURE_NUMBERS:
        raise DomainError("n", "n must be one of 1, 2, 3, 4, 5")

    points = points or settings.FIGURE_POINTS
    extra = {"x_p": x_p} if x_p is not None else {}
    x_from, x_to = settings.FIGURE_X_RANGE
    q_from, q_to = settings.FIGURE_Q_RANGE

    if n in (1, 2):
        y = y if y is not None else settings.FIGURE_12_DEFAULT_Y
        return [
            (f"q={q:g}", SweepSpec(
                variable=SweepVariable.X, start=x_from, stop=x_to, points=points,
                fixed={"q": q, "y": y, **extra}, models=[ResponseModel.MERMIN],
            ))
            for q in settings.FIGURE_12_Q_VALUES
        ]

    if n == 3:
        y = y if y is not None else settings.FIGURE_3_Y
        return [(f"q={settings.FIGURE_3_Q:g}", SweepSpec(
            variable=SweepVariable.X, start=x_from, stop=x_to, points=points,
            fixed={"q": settings.FIGURE_3_Q, "y": y, **extra}, models=list(ResponseModel),
        ))]

    y = y if y is not None else settings.FIGURE_45_Y
    return [(f"x={settings.FIGURE_45_X:g}", SweepSpec(
        variable=SweepVariable.Q, start=q_from, stop=q_to, points=points,
        fixed={"x": settings.FIGURE_45_X, "y": y, **extra}, models=list(ResponseModel),
    ))]


# Columns each figure plots
FIGURE_COLUMNS: Dict[int, List[str]] = {
    1: ["re_sigma"],
    2: ["im_sigma"],
    3: ["abs_sigma"],
    4: ["re_sigma"],
    5: ["im_sigma"],
}
