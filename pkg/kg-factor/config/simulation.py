from dataclasses import dataclass
from enum import Enum
from typing import List, Optional
import json
import math

import numpy as np
import smart_open

from core import (
    AxisKind,
    ConfigurationError,
    Constants,
    Grid,
    ModeSuperpositionSpec,
    PacketSpec,
    make_packet,
    packet_from_dict,
)
from factor_m import DEFAULT_VALIDITY_THRESHOLD
from factor_p import PropagationMode, SalpeterProfile, p_stability_dz
from kg_exact import kg_stability_dt
from potentials import DynamicKind, DynamicPotential, StaticKind, StaticPotential
from utils import log

STEP_COUNT_TOLERANCE = 1e-9
# static V is bounded over at most this many march positions when checking dz
MAX_BOUND_POSITIONS = 4097


class Solver(str, Enum):
    KG = "kg"
    PAIR_M = "pair_m"
    SCHRODINGER = "schrodinger"
    M_WITH_MASS = "m_with_mass"
    PAIR_P = "pair_p"
    FORWARD_P = "forward_p"

    @property
    def is_p(self) -> bool:
        return self in (Solver.PAIR_P, Solver.FORWARD_P)

    @property
    def axis_kind(self) -> AxisKind:
        return AxisKind.TIME if self.is_p else AxisKind.SPACE


class InitialState(str, Enum):
    FORWARD_PROJECTION = "forward_projection"
    PURE_PLUS = "pure_plus"


_KNOWN_KEYS = {
    "solver", "constants", "grid", "transverse", "packet", "potential", "xi", "duration", "step",
    "cadence", "validity_threshold", "p_mode", "initial_state", "seed", "enforce_validity",
}
_DYNAMIC_ONLY_KINDS = {DynamicKind.STANDING_WAVE.value, DynamicKind.TRAVELING_WAVE.value}


def grid_from_dict(d: dict, axis_kind: AxisKind) -> Grid:
    unknown = set(d) - {"n", "length", "axis", "origin"}
    if unknown:
        raise ConfigurationError(f"Unknown grid keys {sorted(unknown)}")
    if "axis" in d and AxisKind(d["axis"]) is not axis_kind:
        raise ConfigurationError(f"Grid axis {d['axis']!r} does not match the solver axis {axis_kind.value!r}")
    try:
        return Grid(d["n"], d["length"], axis_kind, d.get("origin"))
    except KeyError as e:
        raise ConfigurationError(f"Grid is missing {e}") from e


def grid_to_dict(grid: Grid) -> dict:
    return {"n": grid.n, "length": grid.length, "axis": grid.axis_kind.value, "origin": grid.origin}


def potential_from_dict(d: Optional[dict], allow_dynamic: bool) -> SalpeterProfile:
    """Static V unless the kind (or a 2-D table) only exists as a space-time profile."""
    d = d or {"kind": StaticKind.ZERO.value}
    kind = d.get("kind", StaticKind.ZERO.value)
    samples = d.get("samples")
    is_dynamic = kind in _DYNAMIC_ONLY_KINDS or (
        kind == StaticKind.TABULATED.value and samples is not None and np.ndim(samples) == 2)
    if is_dynamic:
        if not allow_dynamic:
            raise ConfigurationError(f"A {kind} potential V needs a z-marched solver; use xi for t-dependence")
        return DynamicPotential.create_from_dict(d)
    return StaticPotential.create_from_dict(d)


@dataclass
class SimConfig:
    """
    One run: solver, constants, grids, initial packet, potentials and march.
    `duration` and `step` are total time and dt for the t-solvers, total
    distance and dz for the z-marched ones.
    """
    solver: Solver
    constants: Constants
    grid: Grid
    packet: PacketSpec
    potential: SalpeterProfile
    xi: DynamicPotential
    duration: float
    step: float
    cadence: int = 1
    validity_threshold: float = DEFAULT_VALIDITY_THRESHOLD
    p_mode: PropagationMode = PropagationMode.LITERAL
    initial_state: InitialState = InitialState.FORWARD_PROJECTION
    seed: int = 0
    enforce_validity: bool = False
    transverse: Optional[Grid] = None

    @classmethod
    def create_from_dict(cls, d: dict) -> 'SimConfig':
        unknown = set(d) - _KNOWN_KEYS
        if unknown:
            raise ConfigurationError(f"Unknown config keys {sorted(unknown)}")
        try:
            solver = Solver(d["solver"])
            packet_dict = dict(d.get("packet", {}))
            if packet_dict.get("kind") == "modes":
                packet_dict.setdefault("seed", int(d.get("seed", 0)))
            config = cls(
                solver=solver,
                constants=Constants.create_from_dict(d.get("constants", {})),
                grid=grid_from_dict(d["grid"], solver.axis_kind),
                packet=packet_from_dict(packet_dict),
                potential=potential_from_dict(d.get("potential"), allow_dynamic=solver.is_p),
                xi=DynamicPotential.create_from_dict(d.get("xi") or {"kind": DynamicKind.ZERO.value}),
                duration=float(d["duration"]),
                step=float(d["step"]),
                cadence=int(d.get("cadence", 1)),
                validity_threshold=float(d.get("validity_threshold", DEFAULT_VALIDITY_THRESHOLD)),
                p_mode=PropagationMode.parse(d.get("p_mode", PropagationMode.LITERAL.value)),
                initial_state=InitialState(d.get("initial_state", InitialState.FORWARD_PROJECTION.value)),
                seed=int(d.get("seed", 0)),
                enforce_validity=bool(d.get("enforce_validity", False)),
                transverse=grid_from_dict(d["transverse"], AxisKind.SPACE) if d.get("transverse") else None,
            )
        except KeyError as e:
            raise ConfigurationError(f"Config is missing {e}") from e
        except (TypeError, ValueError) as e:
            raise ConfigurationError(f"Invalid config: {e}") from e
        config.validate()
        return config

    @classmethod
    def create_from_file(cls, path: str) -> 'SimConfig':
        return cls.create_from_dict(load_config_dict(path))

    def to_dict(self) -> dict:
        return {
            "solver": self.solver.value,
            "constants": self.constants.to_dict(),
            "grid": grid_to_dict(self.grid),
            "transverse": grid_to_dict(self.transverse) if self.transverse is not None else None,
            "packet": self.packet.to_dict(),
            "potential": self.potential.to_dict(),
            "xi": self.xi.to_dict(),
            "duration": self.duration,
            "step": self.step,
            "cadence": self.cadence,
            "validity_threshold": self.validity_threshold,
            "p_mode": self.p_mode.value,
            "initial_state": self.initial_state.value,
            "seed": self.seed,
            "enforce_validity": self.enforce_validity,
        }

    @property
    def n_steps(self) -> int:
        return int(round(self.duration / self.step))

    def sample_steps(self) -> List[int]:
        steps = list(range(0, self.n_steps + 1, self.cadence))
        if steps[-1] != self.n_steps:
            steps.append(self.n_steps)
        return steps

    def march_positions(self) -> np.ndarray:
        return np.linspace(0.0, self.duration, min(self.n_steps + 1, MAX_BOUND_POSITIONS))

    def validate(self) -> None:
        if self.grid.axis_kind is not self.solver.axis_kind:
            raise ConfigurationError(f"Solver {self.solver.value} runs on a {self.solver.axis_kind.value} grid")
        if self.transverse is not None and not self.solver.is_p:
            raise ConfigurationError("Only the z-marched solvers take a transverse axis")
        if self.solver in (Solver.PAIR_M, Solver.SCHRODINGER, Solver.M_WITH_MASS):
            self.constants.require_mass(f"Solver {self.solver.value}")
        if self.initial_state is InitialState.PURE_PLUS:
            self.constants.require_mass("Initial state pure_plus")
        if not (math.isfinite(self.step) and self.step > 0):
            raise ConfigurationError(f"Step must be positive, got {self.step}")
        if not (math.isfinite(self.duration) and self.duration >= 0):
            raise ConfigurationError(f"Duration must be non-negative, got {self.duration}")
        if abs(self.n_steps * self.step - self.duration) > STEP_COUNT_TOLERANCE * max(1.0, self.duration):
            raise ConfigurationError(f"Duration {self.duration} is not a whole number of steps of {self.step}")
        if self.cadence < 1:
            raise ConfigurationError(f"Cadence must be >= 1, got {self.cadence}")
        if not self.validity_threshold > 0:
            raise ConfigurationError(f"Validity threshold must be positive, got {self.validity_threshold}")
        if isinstance(self.packet, ModeSuperpositionSpec) and self.transverse is not None:
            raise ConfigurationError("Mode superpositions do not support a transverse axis")
        # builds the packet once so packet-fit violations surface before any stepping
        make_packet(self.packet, self.grid, self.transverse)
        self._validate_step()

    def _validate_step(self) -> None:
        if self.solver in (Solver.KG, Solver.PAIR_M):
            bound = kg_stability_dt(self.grid, self.potential, self.xi, self.constants)
        elif self.solver.is_p:
            bound = p_stability_dz(self.grid, self.potential, self.xi, self.constants, self.p_mode,
                                   self.transverse, self.march_positions())
        else:
            return
        if self.step > bound:
            raise ConfigurationError(
                f"Step {self.step} exceeds the stability bound {bound:.6g} for {self.solver.value}")
        log.debug(f"Step {self.step} within stability bound {bound:.6g}")


def load_config_dict(path: str) -> dict:
    with smart_open.open(path, "r") as f:
        try:
            return json.load(f)
        except json.JSONDecodeError as e:
            raise ConfigurationError(f"Config {path} is not valid JSON: {e}") from e
