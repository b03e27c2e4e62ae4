"""
Jump conditions across a shock and the two variational surface terms.

Rankine-Hugoniot set:      [rho u] = 0, [p + rho u^2] = 0, [v] = [u] n, [u^2/2 + h] = 0
Space-time surface term:   N*[T],  N* = (-D_n, n*)
                           = (-[D_n p + (e + p) u], [rho u v* + p n*])
Reference surface term:    -[f (v* F + m w*)]

N*[T] = 0 is the full Rankine-Hugoniot set. The reference term only
enforces [rho u] = 0, [v] = [u] n and [u^2/2 + h] = 0 and misses the normal
momentum condition.

Residuals are reported nondimensionalized by the upstream state: mass by
rho c, momentum by p (p + p_inf for a stiffened gas), velocity by c and
energy by c^2; N*[T] by rho c^3 (time) and p (space); the reference term
by rho c.
"""

from dataclasses import asdict, dataclass
from typing import Dict, Tuple

import numpy as np

from rhkit.eos import Eos
from rhkit.errors import ContactSurfaceError, SingularFError
from rhkit.kinematics import (
    CONTACT_THRESHOLD,
    ReferenceFrame,
    map_variation,
    shock_adapted_maps,
)
from rhkit.kinematics.tangent_map import _matrix, _vector
from rhkit.shock.pair import ShockPair
from rhkit.tensors import energy_momentum_T

# relative size below which the two sides count as the same state
ZERO_JUMP_TOL = 1e-14


@dataclass(frozen=True)
class Scales:
    rho_c: float
    p: float
    c: float

    @classmethod
    def upstream(cls, pair: ShockPair, eos: Eos) -> "Scales":
        thermo = pair.up.thermo(eos)
        c = float(np.sqrt(thermo.c2))
        return cls(rho_c=pair.up.rho * c, p=float(thermo.p) + eos.reference_pressure, c=c)


@dataclass(frozen=True)
class RHResiduals:
    r_mass: float
    r_momentum_n: float
    r_vel: np.ndarray
    r_energy: float

    def as_vector(self) -> np.ndarray:
        return np.concatenate(([self.r_mass, self.r_momentum_n], self.r_vel, [self.r_energy]))

    def norm(self) -> float:
        return float(np.linalg.norm(self.as_vector()))

    def to_dict(self) -> Dict[str, object]:
        return {
            "r_mass": self.r_mass,
            "r_momentum_n": self.r_momentum_n,
            "r_vel": self.r_vel.tolist(),
            "r_energy": self.r_energy,
        }


def _check_not_contact(pair: ShockPair):
    if abs(pair.u_up) < CONTACT_THRESHOLD:
        raise ContactSurfaceError(
            f"relative velocity u = {pair.u_up!r} is below the contact threshold; "
            "use contact_conditions instead"
        )


def rh_residuals(pair: ShockPair, eos: Eos) -> RHResiduals:
    """
    Nondimensional Rankine-Hugoniot residuals of a pair.

    Args:
        pair: Shock pair
        eos: Equation of state

    Returns:
        RHResiduals ([rho u], [p + rho u^2], [v] - [u] n, [u^2/2 + h])
    """
    _check_not_contact(pair)
    scales = Scales.upstream(pair, eos)
    up, down = pair.up, pair.down
    u1, u2 = pair.u_up, pair.u_down
    t1, t2 = up.thermo(eos), down.thermo(eos)
    r_mass = (down.rho * u2 - up.rho * u1) / scales.rho_c
    r_momentum = ((float(t2.p) + down.rho * u2**2) - (float(t1.p) + up.rho * u1**2)) / scales.p
    r_vel = (pair.velocity_jump - (u2 - u1) * pair.frame.n) / scales.c
    r_energy = ((0.5 * u2**2 + float(t2.h)) - (0.5 * u1**2 + float(t1.h))) / scales.c**2
    return RHResiduals(
        r_mass=float(r_mass), r_momentum_n=float(r_momentum), r_vel=r_vel, r_energy=float(r_energy)
    )


def spacetime_surface_term(pair: ShockPair, eos: Eos) -> np.ndarray:
    """
    Surface term N*[T] of the space-time variation, nondimensionalized.

    Returns:
        4-covector (time component / (rho c^3), space components / p)
    """
    scales = Scales.upstream(pair, eos)
    jump = energy_momentum_T(pair.down, eos).entries - energy_momentum_T(pair.up, eos).entries
    term = pair.frame.covector @ jump
    term[0] /= scales.rho_c * scales.c**2
    term[1:] /= scales.p
    return term


def reference_surface_term(pair: ShockPair, eos: Eos) -> np.ndarray:
    """
    Nontrivial block -[f (v* F + m w*)] of the reference-space surface term.

    Each side uses its own reference density f = rho det F, so the term
    reduces to -f [v* F + m w*] whenever [f] = 0.

    Returns:
        3-covector divided by rho c of the upstream state
    """
    _check_not_contact(pair)
    scales = Scales.upstream(pair, eos)

    def side(state, F):
        f = state.rho * np.linalg.det(F)
        return f * (state.v @ F + state.m(eos) * pair.w)

    return -(side(pair.down, pair.F_down) - side(pair.up, pair.F_up)) / scales.rho_c


# ====================================================
# ADMISSIBILITY
# ====================================================


@dataclass(frozen=True)
class LaxReport:
    admissible: bool
    is_shock: bool
    u_up: float
    c_up: float
    u_down: float
    c_down: float
    entropy_jump: float
    reason: str

    def to_dict(self) -> dict:
        return asdict(self)


def _is_zero_jump(pair: ShockPair, eos: Eos) -> bool:
    scales = Scales.upstream(pair, eos)
    up, down = pair.up, pair.down
    return (
        abs(down.rho - up.rho) <= ZERO_JUMP_TOL * up.rho
        and abs(down.s - up.s) <= ZERO_JUMP_TOL * max(1.0, abs(up.s))
        and np.max(np.abs(pair.velocity_jump)) <= ZERO_JUMP_TOL * scales.c
    )


def lax_admissible(pair: ShockPair, eos: Eos) -> LaxReport:
    """
    Lax admissibility of a compressive shock: u_up > c_up and 0 < u_down < c_down.

    The entropy jump s_down - s_up is reported alongside.
    """
    u1, u2 = pair.u_up, pair.u_down
    c1, c2 = pair.up.sound_speed(eos), pair.down.sound_speed(eos)
    entropy_jump = pair.down.s - pair.up.s
    values = dict(u_up=u1, c_up=c1, u_down=u2, c_down=c2, entropy_jump=entropy_jump)
    if _is_zero_jump(pair, eos):
        return LaxReport(admissible=False, is_shock=False, reason="not a shock", **values)
    if not u1 > c1:
        return LaxReport(
            admissible=False, is_shock=True, reason="upstream not supersonic", **values
        )
    if not 0.0 < u2 < c2:
        return LaxReport(
            admissible=False, is_shock=True, reason="downstream not subsonic", **values
        )
    return LaxReport(admissible=True, is_shock=True, reason="compressive shock", **values)


# ====================================================
# GEOMETRIC IDENTITIES
# ====================================================


def rank_one_det_residual(K, L) -> float:
    """|det(I + K L*) - (1 + L* K)|."""
    K = _vector(K, "K")
    L = _vector(L, "L")
    return float(abs(np.linalg.det(np.eye(3) + np.outer(K, L)) - (1.0 + L @ K)))


def det_jump_identity(F1, dv, n0p, u1: float, u2: float) -> Tuple[float, float]:
    """
    Geometric route to mass conservation across the shock.

    With K = [v] and L* = n0'* F1^{-1} (= n*/u1 for a consistent pair),
    F2 = (I + K L*) F1, hence det F2 / det F1 = 1 + L* K = u2 / u1.

    Args:
        F1: Upstream deformation gradient
        dv: Velocity jump [v]
        n0p: Reference covector n0'* = -w*
        u1: Upstream relative velocity
        u2: Downstream relative velocity

    Returns:
        (|det(I + K L*) - (1 + L* K)|, |det F2 / det F1 - u2 / u1|)
    """
    F1 = _matrix(F1, "F1")
    dv = _vector(dv, "dv")
    n0p = _vector(n0p, "n0p")
    det_F1 = np.linalg.det(F1)
    if det_F1 == 0.0 or 1.0 / np.linalg.cond(F1) < 1e-14:
        raise SingularFError("upstream deformation gradient is singular")
    L = n0p @ np.linalg.inv(F1)
    lemma = rank_one_det_residual(dv, L)
    F2 = F1 + np.outer(dv, n0p)
    ratio = abs(np.linalg.det(F2) / det_F1 - u2 / u1)
    return lemma, float(ratio)


def disFF_residual(pair: ShockPair) -> float:
    """Max entry of [F] - [u] n n0* / u0 (the jump of F is normal-normal and rank one)."""
    reference = ReferenceFrame.from_w(pair.w)
    du = pair.u_down - pair.u_up
    expected = du * np.outer(pair.frame.n, reference.n0) / reference.u0
    return float(np.max(np.abs(pair.F_down - pair.F_up - expected)))


def contact_conditions(pair: ShockPair, eos: Eos, tol: float = 1e-12) -> Dict[str, object]:
    """
    Classical contact-discontinuity report, for pairs with u = 0.

    Pressure and normal velocity must be continuous; density and tangential
    velocity are free.
    """
    scales = Scales.upstream(pair, eos)
    n = pair.frame.n
    pressure_jump = (pair.down.pressure(eos) - pair.up.pressure(eos)) / scales.p
    normal_velocity_jump = float(n @ pair.velocity_jump) / scales.c
    tangential_jump = pair.frame.tangential(pair.velocity_jump) / scales.c
    return {
        "relative_velocity": pair.u_up / scales.c,
        "pressure_jump": float(pressure_jump),
        "normal_velocity_jump": normal_velocity_jump,
        "density_jump": (pair.down.rho - pair.up.rho) / pair.up.rho,
        "tangential_velocity_jump": tangential_jump.tolist(),
        "is_contact": bool(
            abs(pair.u_up) < CONTACT_THRESHOLD
            and abs(pressure_jump) < tol
            and abs(normal_velocity_jump) < tol
        ),
    }


def variation_jump(pair: ShockPair, zeta_tilde, mu: float = 1.0) -> Tuple[np.ndarray, np.ndarray]:
    """
    Reference-space virtual displacement on both sides of the shock for a continuous zeta_tilde.

    Both sides use the shock-adapted tangent map (shared mu and w).

    Returns:
        (zeta_hat_up, zeta_hat_down)
    """
    B_up, B_down = shock_adapted_maps(
        pair.w, pair.up.v, pair.F_up, pair.down.v, pair.F_down, mu=mu
    )
    return map_variation(B_up, zeta_tilde), map_variation(B_down, zeta_tilde)
