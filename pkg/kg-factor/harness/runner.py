from typing import Dict, List, Optional
import time

import numpy as np

from config import SimConfig
from core import (
    ComplexField,
    InsufficientSamplesError,
    UndefinedRatioError,
    ValidityThresholdError,
    make_packet,
)
from utils import log
from .dispersion import MINIMUM_DISPERSION_SAMPLES, dispersion_extract
from .results import SimResult
from .steppers import Stepper, create_stepper


class SimulationRunner:
    def __init__(self, config: SimConfig):
        self._config = config
        self._series: Dict[str, List[float]] = {}
        self._snapshots: Dict[str, List[ComplexField]] = {}
        self._warned = False

    def run(self) -> SimResult:
        config = self._config
        config.validate()
        self._series, self._snapshots, self._warned = {}, {}, False
        started = time.perf_counter()
        packet = make_packet(config.packet, config.grid, config.transverse)
        stepper = create_stepper(config, packet)
        samples = config.sample_steps()
        coordinates = []

        sample_set = set(samples)
        self._record(stepper, 0)
        coordinates.append(stepper.position)
        for step_index in range(1, config.n_steps + 1):
            stepper.advance(step_index)
            if step_index in sample_set:
                self._record(stepper, step_index)
                coordinates.append(stepper.position)

        result = SimResult(
            config=config,
            step_indices=samples,
            coordinates=np.array(coordinates),
            series={name: np.array(values) for name, values in self._series.items()},
            snapshots=self._snapshots,
        )
        if len(samples) >= MINIMUM_DISPERSION_SAMPLES and config.transverse is None:
            try:
                result.dispersion = dispersion_extract(result)
            except InsufficientSamplesError as e:
                log.debug(f"No dispersion extracted: {e}")
        result.wall_time = time.perf_counter() - started
        log.info(f"Finished {config.solver.value} run: {config.n_steps} steps, {len(samples)} samples "
                 f"in {result.wall_time:.2f}s")
        return result

    def _record(self, stepper: Stepper, step_index: int) -> None:
        values = stepper.diagnostics()
        validity = self._validity(stepper, step_index)
        if validity is not None:
            values["validity"] = validity
        for name, value in values.items():
            self._series.setdefault(name, []).append(value)
        for name, f in stepper.fields().items():
            self._snapshots.setdefault(name, []).append(f)
        log.debug(f"Recorded step {step_index} at {stepper.position:.6g}: {values}")

    def _validity(self, stepper: Stepper, step_index: int) -> Optional[float]:
        try:
            report = stepper.validity()
        except UndefinedRatioError:
            # nothing to decouple when every component vanishes
            return 0.0
        if report is None:
            return None
        if not report.ok:
            if self._config.enforce_validity:
                raise ValidityThresholdError(step_index, report.ratio, report.threshold)
            if not self._warned:
                log.warning(f"Validity ratio {report.ratio:.3e} reached threshold {report.threshold:.3e} "
                            f"at step {step_index}; decoupled equations may be unreliable")
                self._warned = True
        return report.ratio


def run(config: SimConfig) -> SimResult:
    return SimulationRunner(config).run()
