from typing import Dict, Optional

from config import InitialState, SimConfig, Solver
from core import ComplexField, WavepacketSpec, l2_norm, support_radius
from factor_m import (
    PairStateM,
    ValidityReport,
    m_equation_with_mass_step,
    pair_from_kg,
    pair_step_m,
    schrodinger_step,
    validity_margin_m,
)
from factor_p import PairStateP, p_step, validity_margin_p
from kg_exact import KGState, kg_energy, kg_init_forward, kg_init_pure_plus, kg_step, light_cone_mass

# light-cone margin: radius holding all but this fraction of the initial |phi|^2
LIGHT_CONE_TAIL = 1e-10


def initial_kg_state(config: SimConfig, packet: ComplexField) -> KGState:
    if config.initial_state is InitialState.PURE_PLUS:
        return kg_init_pure_plus(packet, config.constants)
    return kg_init_forward(packet, config.constants)


class Stepper:
    """Uniform view over one solver's state for the runner."""

    def __init__(self, config: SimConfig, packet: ComplexField):
        self.config = config
        self.consts = config.constants
        self._light_cone = None
        if not config.solver.is_p and isinstance(config.packet, WavepacketSpec):
            center = config.packet.center
            self._light_cone = (center, support_radius(packet, center, 1 - LIGHT_CONE_TAIL))

    @property
    def position(self) -> float:
        raise NotImplementedError

    def advance(self, step_index: int) -> None:
        raise NotImplementedError

    def fields(self) -> Dict[str, ComplexField]:
        raise NotImplementedError

    def validity(self) -> Optional[ValidityReport]:
        return None

    def diagnostics(self) -> Dict[str, float]:
        fields = self.fields()
        values = {"norm_phi": l2_norm(fields["phi"])}
        if "phi_minus" in fields:
            values["norm_plus"] = l2_norm(fields["phi_plus"])
            values["norm_minus"] = l2_norm(fields["phi_minus"])
        if self._light_cone is not None:
            center, margin = self._light_cone
            values["light_cone_mass"] = light_cone_mass(fields["phi"], center, self.position, self.consts, margin)
        return values


class KGStepper(Stepper):
    def __init__(self, config: SimConfig, packet: ComplexField):
        super().__init__(config, packet)
        self.state = initial_kg_state(config, packet)

    @property
    def position(self) -> float:
        return self.state.t

    def advance(self, step_index: int) -> None:
        self.state = kg_step(self.state, self.config.step, self.config.potential, self.config.xi, self.consts,
                             step_index)

    def _pair(self) -> Optional[PairStateM]:
        return pair_from_kg(self.state, self.consts) if self.consts.m > 0 else None

    def fields(self) -> Dict[str, ComplexField]:
        fields = {"phi": self.state.phi}
        pair = self._pair()
        if pair is not None:
            fields["phi_plus"] = pair.phi_plus
            fields["phi_minus"] = pair.phi_minus
        return fields

    def validity(self) -> Optional[ValidityReport]:
        pair = self._pair()
        if pair is None:
            return None
        return validity_margin_m(pair, self.config.potential, self.config.xi, self.consts,
                                 self.config.validity_threshold)

    def diagnostics(self) -> Dict[str, float]:
        values = super().diagnostics()
        values["energy"] = kg_energy(self.state, self.consts)
        return values


class PairMStepper(Stepper):
    def __init__(self, config: SimConfig, packet: ComplexField):
        super().__init__(config, packet)
        self.state = pair_from_kg(initial_kg_state(config, packet), self.consts)

    @property
    def position(self) -> float:
        return self.state.t

    def advance(self, step_index: int) -> None:
        self.state = pair_step_m(self.state, self.config.step, self.config.potential, self.config.xi, self.consts,
                                 step_index)

    def fields(self) -> Dict[str, ComplexField]:
        return {"phi": self.state.phi, "phi_plus": self.state.phi_plus, "phi_minus": self.state.phi_minus}

    def validity(self) -> Optional[ValidityReport]:
        return validity_margin_m(self.state, self.config.potential, self.config.xi, self.consts,
                                 self.config.validity_threshold)


class MWithMassStepper(PairMStepper):
    def advance(self, step_index: int) -> None:
        self.state = m_equation_with_mass_step(self.state, self.config.step, self.config.potential, self.config.xi,
                                               self.consts, step_index)


class SchrodingerStepper(Stepper):
    """
    psi starts from the forward component of the matched KG data, so runs are
    comparable with KG-derived phi_plus once the rest-mass phase is removed.
    The validity ratio uses psi as its own stand-in for the dropped component.
    """
    def __init__(self, config: SimConfig, packet: ComplexField):
        super().__init__(config, packet)
        self.psi = pair_from_kg(initial_kg_state(config, packet), self.consts).phi_plus
        self.t = 0.0

    @property
    def position(self) -> float:
        return self.t

    def advance(self, step_index: int) -> None:
        self.psi = schrodinger_step(self.psi, self.config.step, self.config.potential, self.config.xi, self.consts,
                                    t=self.t, step_index=step_index)
        self.t += self.config.step

    def fields(self) -> Dict[str, ComplexField]:
        return {"phi": self.psi, "phi_plus": self.psi}

    def validity(self) -> Optional[ValidityReport]:
        return validity_margin_m(PairStateM(self.psi, self.psi, self.t), self.config.potential, self.config.xi,
                                 self.consts, self.config.validity_threshold)


class PStepper(Stepper):
    def __init__(self, config: SimConfig, packet: ComplexField):
        super().__init__(config, packet)
        self.forward_only = config.solver is Solver.FORWARD_P
        self.state = PairStateP(packet, ComplexField.zeros(packet.grid, packet.transverse))

    @property
    def position(self) -> float:
        return self.state.z

    def advance(self, step_index: int) -> None:
        self.state = p_step(self.state, self.config.step, self.config.potential, self.config.xi, self.consts,
                            self.config.p_mode, self.forward_only, step_index)

    def fields(self) -> Dict[str, ComplexField]:
        return {"phi": self.state.phi, "phi_plus": self.state.phi_plus, "phi_minus": self.state.phi_minus}

    def validity(self) -> Optional[ValidityReport]:
        state = self.state
        if self.forward_only:
            # the dropped component is estimated by the kept one
            state = PairStateP(state.phi_plus, state.phi_plus, state.z)
        return validity_margin_p(state, self.config.potential, self.config.xi, self.consts,
                                 self.config.validity_threshold)


_STEPPERS = {
    Solver.KG: KGStepper,
    Solver.PAIR_M: PairMStepper,
    Solver.SCHRODINGER: SchrodingerStepper,
    Solver.M_WITH_MASS: MWithMassStepper,
    Solver.PAIR_P: PStepper,
    Solver.FORWARD_P: PStepper,
}


def create_stepper(config: SimConfig, packet: ComplexField) -> Stepper:
    return _STEPPERS[config.solver](config, packet)
