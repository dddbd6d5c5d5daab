"""Free-surface machinery: the latitude-dependent surface label r0(s), surface
sampling, surface elevation eta(x, s, t) and the underlying trochoid curve.

The surface label r0(s) is the root of

    G(rho) = exp(2k(rho - f(s)))/(2k) - rho  =  exp(2k r0)/(2k) - r0 = C

on the branch rho < f(s), where G is strictly decreasing.  At the Equator
(s = 0) the root is r0 itself; away from it r0(s) < r0, which is what pins
the wave amplitude down at higher latitudes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .model import LabelPoint, PhysicalPoint, WaveField, decay_offset, flow_map


class ConvergenceError(RuntimeError):
    """A root or fixed-point solve exhausted its iteration budget."""


@dataclass(frozen=True)
class SurfaceSolverConfig:
    tol: float = 1e-12            # absolute tolerance, meters
    max_iter: int = 200
    bracket_expansion: float = 2.0

    def __post_init__(self):
        if not self.tol > 0.0:
            raise ValueError("tol must be positive")
        if self.max_iter < 1:
            raise ValueError("max_iter must be >= 1")
        if not self.bracket_expansion > 1.0:
            raise ValueError("bracket_expansion must exceed 1")


DEFAULT_SOLVER = SurfaceSolverConfig()


@dataclass(frozen=True)
class SurfaceSample:
    """One point of the free surface: labels, physical position and r0(s)."""

    t: float
    s: float
    q: float
    x: float
    y: float
    z: float
    r0s: float


def solve_r0_of_s(s: float, wave: WaveField,
                  cfg: SurfaceSolverConfig = DEFAULT_SOLVER) -> float:
    """Surface label r0(s): bracketed Newton on the monotone branch of G.

    Returns r0 exactly at s = 0.  Guaranteed to terminate: G -> +inf as
    rho -> -inf, so downward bracket expansion always finds a sign change.
    """
    return _solve_r0_cached(float(s), wave, cfg)


@lru_cache(maxsize=65536)
def _solve_r0_cached(s: float, wave: WaveField, cfg: SurfaceSolverConfig) -> float:
    k, r0 = wave.k, wave.r0
    f = float(decay_offset(s, wave))
    if f == 0.0:
        return r0
    C = math.exp(2.0 * k * r0) / (2.0 * k) - r0

    def G(rho):
        return math.exp(2.0 * k * (rho - f)) / (2.0 * k) - rho

    def Gp(rho):
        return math.exp(2.0 * k * (rho - f)) - 1.0

    # G is decreasing below f(s); G(r0) <= C, so the root lies below r0.
    hi = r0
    offset = f + 0.5 / k + 1.0
    lo = r0 - offset
    while G(lo) <= C:
        offset *= cfg.bracket_expansion
        lo = r0 - offset

    rho = 0.5 * (lo + hi)
    prev = None
    for _ in range(cfg.max_iter):
        g = G(rho) - C
        if (abs(g) <= cfg.tol * (1.0 + abs(C))
                and prev is not None and abs(rho - prev) <= cfg.tol):
            return rho
        if g > 0.0:
            lo = rho
        else:
            hi = rho
        gp = Gp(rho)
        step_ok = gp < 0.0
        if step_ok:
            nxt = rho - g / gp
            step_ok = lo < nxt < hi
        prev = rho
        rho = nxt if step_ok else 0.5 * (lo + hi)
    raise ConvergenceError(
        f"surface-label solve did not converge; bracket [{lo}, {hi}]")


def surface_point(q: float, s: float, t: float, wave: WaveField,
                  cfg: SurfaceSolverConfig = DEFAULT_SOLVER) -> SurfaceSample:
    """Free-surface sample at labels (q, s): the flow map at r = r0(s)."""
    r0s = solve_r0_of_s(s, wave, cfg)
    p = flow_map(LabelPoint(q=q, r=r0s, s=s), t, wave)
    return SurfaceSample(t=float(t), s=float(s), q=float(q),
                         x=float(p.x), y=float(p.y), z=float(p.z), r0s=r0s)


def surface_height(x: float, s: float, t: float, wave: WaveField,
                   cfg: SurfaceSolverConfig = DEFAULT_SOLVER) -> float:
    """Surface elevation eta(x, s, t), by inverting the monotone map q -> x.

    x(q) = q - (a/k) sin(k(q - ct)) with a = exp(k(r0(s) - f(s))) <= 1 is
    strictly increasing for a < 1 (safeguarded Newton); in the cusp case
    a = 1 the derivative vanishes at crests and bisection takes over.
    """
    r0s = solve_r0_of_s(s, wave, cfg)
    k, c = wave.k, wave.c
    a = math.exp(k * (r0s - float(decay_offset(s, wave))))
    L = 2.0 * math.pi / k

    # Reduce relative to the co-moving frame so q stays O(L) for huge x.
    chi = x - c * t
    shift = math.floor(chi / L) * L
    chi -= shift

    def xq(q):
        return q - (a / k) * math.sin(k * q)

    def dxq(q):
        return 1.0 - a * math.cos(k * q)

    lo, hi = chi - a / k, chi + a / k
    q = chi
    for _ in range(cfg.max_iter):
        res = xq(q) - chi
        if abs(res) <= cfg.tol:
            break
        if res > 0.0:
            hi = q
        else:
            lo = q
        d = dxq(q)
        if d > 1e-12:
            nxt = q - res / d
            if not lo < nxt < hi:
                nxt = 0.5 * (lo + hi)
        else:
            nxt = 0.5 * (lo + hi)
        q = nxt
    else:
        raise ConvergenceError(
            f"surface elevation inversion stalled at residual {res:.3e} m")
    return r0s + (a / k) * math.cos(k * q)


def trochoid_sample(xi: float, s: float, wave: WaveField,
                    cfg: SurfaceSolverConfig = DEFAULT_SOLVER):
    """Point (X, Z) of the rolling-circle curve generating the surface profile.

    X = xi/k - (d/k) sin(xi), Z = 1/k - (d/k) cos(xi) with
    d = exp(k(r0(s) - f(s))): a trochoid for d < 1 and a cusped cycloid at
    d = 1.  The tracing point sits at distance d/k from the center of a
    circle of radius 1/k rolling along a line.
    """
    k = wave.k
    r0s = solve_r0_of_s(s, wave, cfg)
    d = math.exp(k * (r0s - float(decay_offset(s, wave))))
    X = xi / k - (d / k) * math.sin(xi)
    Z = 1.0 / k - (d / k) * math.cos(xi)
    return X, Z
