"""Exact Lagrangian kernel for equatorially trapped Gerstner-type waves and
numerical certification that the flow map is a global diffeomorphism."""

from .constants import EARTH, PhysicalConstants
from .model import (
    LabelPoint,
    PhysicalPoint,
    WaveField,
    acceleration,
    decay_offset,
    decay_offset_slope,
    dispersion_speed,
    flow_map,
    jacobian,
    jacobian_det,
    matrix_volume_det,
    orbit_radius,
    velocity,
)
from .surface import (
    ConvergenceError,
    SurfaceSample,
    SurfaceSolverConfig,
    solve_r0_of_s,
    surface_height,
    surface_point,
    trochoid_sample,
)
from .certify import (
    CertificateReport,
    InversionResult,
    LabelGrid,
    OutOfDomainError,
    certify_boundary,
    certify_euler_compatibility,
    certify_incompressibility,
    certify_injectivity,
    certify_inversion,
    certify_jacobian,
    certify_kinematic_bc,
    fd_jacobian,
    invert_map,
    run_certificates,
    surface_slope_bound,
    velocity_divergence,
)

__all__ = [
    "EARTH",
    "PhysicalConstants",
    "WaveField",
    "LabelPoint",
    "PhysicalPoint",
    "dispersion_speed",
    "decay_offset",
    "decay_offset_slope",
    "flow_map",
    "velocity",
    "acceleration",
    "jacobian",
    "jacobian_det",
    "matrix_volume_det",
    "orbit_radius",
    "SurfaceSample",
    "SurfaceSolverConfig",
    "ConvergenceError",
    "solve_r0_of_s",
    "surface_point",
    "surface_height",
    "trochoid_sample",
    "LabelGrid",
    "CertificateReport",
    "InversionResult",
    "OutOfDomainError",
    "certify_jacobian",
    "certify_injectivity",
    "certify_inversion",
    "certify_boundary",
    "certify_incompressibility",
    "certify_euler_compatibility",
    "certify_kinematic_bc",
    "fd_jacobian",
    "surface_slope_bound",
    "velocity_divergence",
    "invert_map",
    "run_certificates",
]

__version__ = "0.1.0"
