"""Scenario data model: dimensional and dimensionless well/aquifer parameter
sets, their conversion, and validation.

A pumping scenario is described either physically (`DimensionalScenario` plus
an `ObservationSpec`, SI units assumed) or directly through the dimensionless
groups the drawdown kernels consume (`DimensionlessScenario`).  The groups
are

====================  =====================================================
``r_D = r / b``        radial distance over aquifer thickness
``z_D = z / b``        observation depth (point) or ``(z_D1, z_D2)`` interval
``r_wD = r_w / r``     well radius over radial distance (1 at the well face)
``d_D = d / b``        screen top
``l_D = l / b``        screen bottom
``K_D = K_z / K_r``    vertical over horizontal conductivity
``beta = r_D sqrt(K_D)``
``C_wD = C_w / (pi S_s r_w^2 b)``  wellbore storage number
``t_s = (K_r/S_s) t / r^2``        dimensionless time
====================  =====================================================

The storage normalization carries the aquifer thickness ``b``; that is the
combination under which the Laplace kernel's storage term is dimensionless
and consistent with the governing flux boundary condition.
"""

import hashlib
import json
import math
from dataclasses import dataclass, asdict

__all__ = [
    "ValidationError",
    "DimensionalScenario",
    "ObservationSpec",
    "DimensionlessScenario",
    "TimeScaling",
    "nondimensionalize",
    "redimensionalize",
    "dimensionless_time",
    "dimensional_drawdown",
    "casing_storage",
    "load_scenario",
    "scenario_hash",
]


class ValidationError(ValueError):
    """A scenario invariant is violated; the message names the invariant."""


def _require(cond, message):
    if not cond:
        raise ValidationError(message)


@dataclass(frozen=True)
class DimensionalScenario:
    """Physical well and aquifer parameters (SI units).

    Attributes
    ----------
    Q : float
      Pumping rate [m^3/s], positive for extraction.
    K_r, K_z : float
      Horizontal and vertical hydraulic conductivity [m/s].
    S_s : float
      Specific storage [1/m].
    b : float
      Aquifer thickness [m].
    r_w : float
      Well radius [m].
    d, l : float
      Depth of screen top and bottom below the aquifer top [m], 0 <= d < l <= b.
    C_w : float
      Wellbore storage coefficient [m^2]: water volume released from well
      storage per unit drawdown in the well.
    """

    Q: float
    K_r: float
    K_z: float
    S_s: float
    b: float
    r_w: float
    d: float
    l: float
    C_w: float

    def __post_init__(self):
        for name in ("Q", "K_r", "K_z", "S_s", "b", "r_w"):
            _require(getattr(self, name) > 0.0, f"{name} must be positive")
        _require(self.d >= 0.0, "d must be >= 0")
        _require(self.C_w >= 0.0, "C_w must be >= 0")
        _require(self.d < self.l, "screen requires d < l")
        _require(self.l <= self.b, "screen bottom requires l <= b")
        for name in ("Q", "K_r", "K_z", "S_s", "b", "r_w", "d", "l", "C_w"):
            _require(math.isfinite(getattr(self, name)), f"{name} must be finite")


@dataclass(frozen=True)
class ObservationSpec:
    """Where drawdown is observed: radial distance plus a point depth z or a
    screened interval (z1, z2).

    ``r = r_w`` (observation at the well face) is allowed; ``r < r_w`` is not,
    since the solution domain starts at the well radius.
    """

    r: float
    z: float = None
    z1: float = None
    z2: float = None

    def __post_init__(self):
        _require(self.r > 0.0 and math.isfinite(self.r), "r must be positive")
        point = self.z is not None
        interval = self.z1 is not None or self.z2 is not None
        _require(point != interval, "observation needs exactly one of z or (z1, z2)")
        if interval:
            _require(self.z1 is not None and self.z2 is not None,
                     "interval observation needs both z1 and z2")
            _require(self.z1 < self.z2, "interval requires z1 < z2")
            _require(self.z1 >= 0.0, "z1 must be >= 0")

    @property
    def is_interval(self):
        return self.z is None

    def validate_against(self, dim):
        _require(self.r >= dim.r_w, "observation radius requires r >= r_w")
        if self.is_interval:
            _require(self.z2 <= dim.b, "z2 must be <= b")
        else:
            _require(0.0 <= self.z <= dim.b, "z must lie in [0, b]")


@dataclass(frozen=True)
class DimensionlessScenario:
    """The dimensionless parameter set consumed by the Laplace kernels."""

    r_D: float
    r_wD: float
    C_wD: float
    d_D: float
    l_D: float
    K_D: float
    z_D: float = None
    z_D1: float = None
    z_D2: float = None

    def __post_init__(self):
        _require(self.r_D > 0.0, "r_D must be positive")
        _require(0.0 < self.r_wD <= 1.0, "r_wD must lie in (0, 1]")
        _require(self.C_wD >= 0.0, "C_wD must be >= 0")
        _require(0.0 <= self.d_D < self.l_D <= 1.0, "screen requires 0 <= d_D < l_D <= 1")
        _require(self.K_D > 0.0, "K_D must be positive")
        if self.z_D is not None:
            _require(0.0 <= self.z_D <= 1.0, "z_D must lie in [0, 1]")
        if self.z_D1 is not None or self.z_D2 is not None:
            _require(self.z_D1 is not None and self.z_D2 is not None,
                     "interval observation needs both z_D1 and z_D2")
            _require(0.0 <= self.z_D1 < self.z_D2 <= 1.0,
                     "interval requires 0 <= z_D1 < z_D2 <= 1")
        for name in ("r_D", "r_wD", "C_wD", "d_D", "l_D", "K_D"):
            _require(math.isfinite(getattr(self, name)), f"{name} must be finite")

    @property
    def beta(self):
        """Anisotropy-scaled radial distance, ``r_D * sqrt(K_D)``."""
        return self.r_D * math.sqrt(self.K_D)

    @property
    def fully_penetrating(self):
        """True when the screen spans the whole thickness (series vanishes)."""
        return self.d_D == 0.0 and self.l_D == 1.0

    def with_observation(self, z_D=None, z_D1=None, z_D2=None):
        """Copy of this scenario with a different observation depth spec."""
        kw = asdict(self)
        kw.update({"z_D": z_D, "z_D1": z_D1, "z_D2": z_D2})
        return DimensionlessScenario(**kw)


@dataclass(frozen=True)
class TimeScaling:
    """Dimensionless time and the hydraulic diffusivity that produced it."""

    t_s: float
    alpha_s: float

    def __post_init__(self):
        _require(self.t_s > 0.0, "t_s must be positive")
        _require(self.alpha_s > 0.0, "alpha_s must be positive")


def nondimensionalize(dim, obs):
    """Form the dimensionless groups for a scenario and observation.

    Parameters
    ----------
    dim : DimensionalScenario
    obs : ObservationSpec

    Returns
    -------
    DimensionlessScenario
    """
    obs.validate_against(dim)
    b = dim.b
    kw = dict(
        r_D=obs.r / b,
        r_wD=dim.r_w / obs.r,
        C_wD=dim.C_w / (math.pi * dim.S_s * dim.r_w ** 2 * b),
        d_D=dim.d / b,
        l_D=dim.l / b,
        K_D=dim.K_z / dim.K_r,
    )
    if obs.is_interval:
        kw.update(z_D1=obs.z1 / b, z_D2=obs.z2 / b)
    else:
        kw.update(z_D=obs.z / b)
    return DimensionlessScenario(**kw)


def redimensionalize(sc, Q, K_r, S_s, b):
    """Rebuild physical parameters from dimensionless groups and four anchors.

    The dimensionless groups determine the geometry only up to the scales
    ``(Q, K_r, S_s, b)``; supplying those makes the map exactly inverse to
    `nondimensionalize`.

    Returns
    -------
    (DimensionalScenario, ObservationSpec)
    """
    r = sc.r_D * b
    r_w = sc.r_wD * r
    dim = DimensionalScenario(
        Q=Q,
        K_r=K_r,
        K_z=sc.K_D * K_r,
        S_s=S_s,
        b=b,
        r_w=r_w,
        d=sc.d_D * b,
        l=sc.l_D * b,
        C_w=sc.C_wD * math.pi * S_s * r_w ** 2 * b,
    )
    if sc.z_D is not None:
        obs = ObservationSpec(r=r, z=sc.z_D * b)
    elif sc.z_D1 is not None:
        obs = ObservationSpec(r=r, z1=sc.z_D1 * b, z2=sc.z_D2 * b)
    else:
        obs = ObservationSpec(r=r, z=0.0)
    return dim, obs


def dimensionless_time(dim, r, t):
    """Dimensionless time ``t_s = (K_r/S_s) t / r^2`` for a physical time.

    Parameters
    ----------
    dim : DimensionalScenario
    r : float
      Radial distance [m], > 0.
    t : float
      Elapsed time [s], > 0.

    Returns
    -------
    TimeScaling
    """
    _require(r > 0.0, "r must be positive")
    _require(t > 0.0, "t must be positive")
    alpha_s = dim.K_r / dim.S_s
    return TimeScaling(t_s=alpha_s * t / r ** 2, alpha_s=alpha_s)


def dimensional_drawdown(s_D, dim):
    """Physical drawdown [m] from a dimensionless value:
    ``s = s_D * Q / (4 pi K_r b)``."""
    return s_D * dim.Q / (4.0 * math.pi * dim.K_r * dim.b)


def casing_storage(r_c):
    """Wellbore storage coefficient of an open casing of radius ``r_c``:
    the free-water-surface value ``C_w = pi r_c^2``.

    Convenience helper for building `DimensionalScenario.C_w`.
    """
    _require(r_c > 0.0, "casing radius must be positive")
    return math.pi * r_c ** 2


# ----------------------------------------------------------------------
# scenario files
# ----------------------------------------------------------------------

_DIMLESS_KEYS = {"r_D", "r_wD", "C_wD", "d_D", "l_D", "K_D", "z_D", "z_D1", "z_D2"}
_DIM_KEYS = {"Q", "K_r", "K_z", "S_s", "b", "r_w", "d", "l", "C_w"}


def _dimensionless_from_mapping(m):
    unknown = set(m) - _DIMLESS_KEYS
    _require(not unknown, f"unknown dimensionless keys: {sorted(unknown)}")
    return DimensionlessScenario(**m)


def _dimensional_from_mapping(m):
    m = dict(m)
    obs_map = m.pop("observation", None)
    unknown = set(m) - _DIM_KEYS
    _require(not unknown, f"unknown dimensional keys: {sorted(unknown)}")
    dim = DimensionalScenario(**m)
    _require(obs_map is not None, "dimensional scenario needs an 'observation' block")
    obs = ObservationSpec(**obs_map)
    return dim, obs


def load_scenario(path):
    """Load one scenario from a JSON document.

    The document holds a ``dimensionless`` block, a ``dimensional`` block
    (with a nested ``observation``), or both.  When both appear they must
    agree to 1e-9 relative; the dimensionless values win.

    Returns
    -------
    DimensionlessScenario
    """
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    return scenario_from_mapping(doc)


def scenario_from_mapping(doc):
    """Build a `DimensionlessScenario` from a parsed scenario document."""
    _require(isinstance(doc, dict), "scenario document must be a JSON object")
    has_dimless = "dimensionless" in doc
    has_dim = "dimensional" in doc
    _require(has_dimless or has_dim,
             "scenario needs a 'dimensionless' or 'dimensional' block")
    sc = None
    if has_dimless:
        sc = _dimensionless_from_mapping(doc["dimensionless"])
    if has_dim:
        dim, obs = _dimensional_from_mapping(doc["dimensional"])
        sc_dim = nondimensionalize(dim, obs)
        if sc is None:
            sc = sc_dim
        else:
            for name in ("r_D", "r_wD", "C_wD", "d_D", "l_D", "K_D"):
                a, b = getattr(sc, name), getattr(sc_dim, name)
                scale = max(abs(a), abs(b), 1e-30)
                _require(abs(a - b) <= 1e-9 * scale,
                         f"dimensional and dimensionless blocks disagree on {name}")
    return sc


def scenario_hash(sc):
    """Short stable content hash of a scenario (used in CSV provenance)."""
    payload = json.dumps(asdict(sc), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(payload.encode()).hexdigest()[:12]
