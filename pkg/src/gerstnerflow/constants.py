"""Physical constants fixing the geophysical regime (rotating Earth, equatorial band)."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class PhysicalConstants:
    """Rotation rate, gravity, beta-plane parameter and Earth radius, all SI.

    ``beta`` defaults to its defining value 2*omega/R.  Passing an explicit
    ``beta`` (e.g. 0 to switch off the meridional Coriolis variation and
    recover a plane Gerstner wave) is allowed; ``beta_consistent`` reports
    whether the stored value still matches the definition.
    """

    omega: float = 7.3e-5      # rad/s, Earth's rotational speed
    g: float = 9.8             # m/s^2
    R: float = 6.378e6         # m, Earth radius
    beta: float = field(default=None)  # 1/(m s); None -> 2*omega/R

    def __post_init__(self):
        if self.omega < 0 or self.g <= 0 or self.R <= 0:
            raise ValueError("require omega >= 0, g > 0, R > 0")
        if self.beta is None:
            object.__setattr__(self, "beta", 2.0 * self.omega / self.R)
        if self.beta < 0:
            raise ValueError("beta must be non-negative")

    @property
    def beta_consistent(self) -> bool:
        """True when beta equals 2*omega/R to 1e-12 relative."""
        ref = 2.0 * self.omega / self.R
        return abs(self.beta - ref) <= 1e-12 * max(self.beta, ref)


EARTH = PhysicalConstants()
