"""Closed-form kinematics of the equatorially trapped Gerstner-type wave.

All functions are pure and broadcast over numpy arrays: the fields of
``LabelPoint`` and the time argument may be scalars or arrays of compatible
shapes.  Labels are Lagrangian coordinates (q, r, s) in meters; physical
positions are (x, y, z) in meters with x east, y north, z up.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import EARTH, PhysicalConstants

TWO_PI = 2.0 * math.pi


def dispersion_speed(k: float, constants: PhysicalConstants = EARTH) -> float:
    """Phase speed c from the rotation-modified deep-water dispersion relation.

    c = (sqrt(omega^2 + k*g) - omega) / k, the positive root of
    k*c^2 + 2*omega*c - g = 0.

    Raises ValueError for k <= 0.
    """
    if not k > 0.0:
        raise ValueError(f"wave number must be positive, got {k}")
    om, g = constants.omega, constants.g
    return (math.sqrt(om * om + k * g) - om) / k


@dataclass(frozen=True)
class WaveField:
    """One monochromatic wave: constants, wave number k, phase speed c,
    reference surface label r0 and wavelength L.

    Use :meth:`build` for validated construction (c and L derived from k).
    Direct construction skips the dispersion check, which is deliberate:
    negative-control experiments need a wave with a deliberately wrong c.
    """

    constants: PhysicalConstants
    k: float
    c: float
    r0: float
    L: float

    @classmethod
    def build(cls, k: float, r0: float,
              constants: PhysicalConstants = EARTH) -> "WaveField":
        if not k > 0.0:
            raise ValueError(f"wave number must be positive, got {k}")
        if r0 > 0.0:
            raise ValueError(f"reference surface label must be <= 0, got {r0}")
        c = dispersion_speed(k, constants)
        wave = cls(constants=constants, k=k, c=c, r0=r0, L=TWO_PI / k)
        assert abs(wave.dispersion_residual()) <= 1e-9 * constants.g
        return wave

    def dispersion_residual(self) -> float:
        """k*c^2 + 2*omega*c - g; zero when c satisfies the dispersion relation."""
        om, g = self.constants.omega, self.constants.g
        return self.k * self.c * self.c + 2.0 * om * self.c - g

    def period(self) -> float:
        """Temporal period 2*pi/(k*c)."""
        return TWO_PI / (self.k * self.c)


@dataclass(frozen=True)
class LabelPoint:
    """Lagrangian label (q zonal, r vertical, s meridional), meters.

    Fields may be numpy arrays of a common broadcastable shape.
    """

    q: float
    r: float
    s: float


@dataclass(frozen=True)
class PhysicalPoint:
    """Physical position (x east, y north, z up), meters."""

    x: float
    y: float
    z: float


def decay_offset(s, wave: WaveField):
    """Meridional decay offset f(s) = c*beta*s^2/(2g), meters.

    Even and non-negative; enters the particle amplitude as exp(k*(r - f(s))),
    producing the equatorial trapping.
    """
    cst = wave.constants
    return wave.c * cst.beta / (2.0 * cst.g) * np.square(s)


def decay_offset_slope(s, wave: WaveField):
    """df/ds = c*beta*s/g."""
    cst = wave.constants
    return wave.c * cst.beta / cst.g * np.asarray(s, dtype=float)


def orbit_radius(label: LabelPoint, wave: WaveField):
    """Radius exp(k*(r - f(s)))/k of the circular particle orbit at a label."""
    k = wave.k
    return np.exp(k * (label.r - decay_offset(label.s, wave))) / k


def flow_map(label: LabelPoint, t, wave: WaveField) -> PhysicalPoint:
    """Label-to-physical map at time t.

    x = q - (1/k) exp(k(r - f(s))) sin(k(q - ct))
    y = s
    z = r + (1/k) exp(k(r - f(s))) cos(k(q - ct))
    """
    k = wave.k
    amp = np.exp(k * (label.r - decay_offset(label.s, wave))) / k
    phase = k * (label.q - wave.c * np.asarray(t, dtype=float))
    x = label.q - amp * np.sin(phase)
    z = label.r + amp * np.cos(phase)
    y = np.broadcast_arrays(np.asarray(label.s, dtype=float), x)[0]
    return PhysicalPoint(x=x, y=y, z=z)


def velocity(label: LabelPoint, t, wave: WaveField):
    """Particle velocity (u, v, w) = d/dt of the flow map; v is identically 0."""
    k, c = wave.k, wave.c
    e = np.exp(k * (label.r - decay_offset(label.s, wave)))
    phase = k * (label.q - c * np.asarray(t, dtype=float))
    u = c * e * np.cos(phase)
    w = c * e * np.sin(phase)
    return u, np.zeros_like(u), w


def acceleration(label: LabelPoint, t, wave: WaveField):
    """Particle acceleration, second time derivative of the flow map."""
    k, c = wave.k, wave.c
    e = np.exp(k * (label.r - decay_offset(label.s, wave)))
    phase = k * (label.q - c * np.asarray(t, dtype=float))
    ax = c * c * k * e * np.sin(phase)
    az = -c * c * k * e * np.cos(phase)
    return ax, np.zeros_like(ax), az


def jacobian(label: LabelPoint, t, wave: WaveField) -> np.ndarray:
    """Differential of the flow map, shape (..., 3, 3).

    Rows are (x, y, z), columns are (q, r, s).  The middle row is (0, 0, 1)
    because y = s exactly.  The s-column carries the meridional coupling
    through f'(s); its z-entry is -f'(s) e^{k(r-f)} cos(.), the sign given by
    direct differentiation (verified against finite differences in the tests).
    """
    k = wave.k
    e = np.exp(k * (label.r - decay_offset(label.s, wave)))
    fp = decay_offset_slope(label.s, wave)
    phase = k * (label.q - wave.c * np.asarray(t, dtype=float))
    sin, cos = np.sin(phase), np.cos(phase)
    e, fp, sin, cos = np.broadcast_arrays(e, fp, sin, cos)
    J = np.empty(np.shape(e) + (3, 3), dtype=float)
    J[..., 0, 0] = 1.0 - e * cos          # dx/dq
    J[..., 0, 1] = -e * sin               # dx/dr
    J[..., 0, 2] = fp * e * sin           # dx/ds
    J[..., 1, 0] = 0.0
    J[..., 1, 1] = 0.0
    J[..., 1, 2] = 1.0                    # dy/ds
    J[..., 2, 0] = -e * sin               # dz/dq
    J[..., 2, 1] = 1.0 + e * cos          # dz/dr
    J[..., 2, 2] = -fp * e * cos          # dz/ds
    return J


def matrix_volume_det(J: np.ndarray):
    """Orientation-consistent determinant of a stored Jacobian.

    The stored column order (q, r, s) pairs r with y and s with z, which is a
    left-handed relabeling (the natural pairing is q-x, s-y, r-z since y = s
    identically); the raw determinant therefore carries a spurious factor -1.
    This takes the determinant with the columns in the orientation-consistent
    order (q, s, r), recovering the volume ratio 1 - exp(2k(r - f(s))).
    """
    return np.linalg.det(J[..., :, [0, 2, 1]])


def jacobian_det(label: LabelPoint, wave: WaveField):
    """Closed-form determinant 1 - exp(2k(r - f(s))); time independent."""
    return 1.0 - np.exp(2.0 * wave.k * (label.r - decay_offset(label.s, wave)))
