"""Time-domain drawdown: single values, log-spaced type curves, pumping-well
drawdown, and the early-time wellbore-storage asymptote.

Drawdown values come from numerically inverting the Laplace kernels of
`wellflow.kernel` with the de Hoog machinery of `wellflow.laplace`.  Curve
generation reuses one inversion contour per decade of dimensionless time
(the half-period is tied to the decade maximum), which amortizes transform
evaluations across the points of the decade.

All evaluators are pure; points of a curve are independent and may safely be
computed concurrently, though the implementation here evaluates them in
order so output is deterministic.
"""

import enum
import math
import warnings
from dataclasses import dataclass

import numpy as np

from . import kernel
from .laplace import InversionConfig, invert_many, invert_unit_time
from .scenario import ValidationError, scenario_hash

__all__ = [
    "ModelVariant",
    "DrawdownCurve",
    "CurvePointDiagnostics",
    "NegativeClampWarning",
    "drawdown",
    "drawdown_via_unit_time",
    "pumping_well_drawdown",
    "curve",
    "early_asymptote",
    "write_curve_csv",
]

#: negative inversion noise below this magnitude is clamped to zero
CLAMP_FLOOR = 1.0e-10


class NegativeClampWarning(RuntimeWarning):
    """A slightly negative inverted drawdown was clamped to zero."""


class ModelVariant(enum.Enum):
    """Which analytical solution to evaluate."""

    UNIFIED = "unified"
    PAPADOPULOS_COOPER = "papadopulos_cooper"
    YANG = "yang"
    HANTUSH = "hantush"
    THEIS = "theis"


@dataclass(frozen=True)
class CurvePointDiagnostics:
    """Per-point bookkeeping of a curve evaluation."""

    series_terms: int
    inversion_terms: int
    clamped: bool = False


@dataclass(frozen=True)
class DrawdownCurve:
    """An ordered dimensionless time-drawdown curve.

    Attributes
    ----------
    points : list of (t_s, s_D)
    scenario : DimensionlessScenario or None
    variant : ModelVariant
    diagnostics : list of CurvePointDiagnostics, parallel to points
    """

    points: tuple
    scenario: object
    variant: ModelVariant
    diagnostics: tuple

    def __post_init__(self):
        ts = [p[0] for p in self.points]
        if any(b <= a for a, b in zip(ts, ts[1:])):
            raise ValidationError("curve times must be strictly increasing")
        if any(p[1] < 0.0 for p in self.points):
            raise ValidationError("curve drawdowns must be nonnegative")

    @property
    def t_s(self):
        return np.array([p[0] for p in self.points])

    @property
    def s_D(self):
        return np.array([p[1] for p in self.points])


class _SeriesStats:
    """Collects the worst-case series effort across contour evaluations."""

    def __init__(self):
        self.max_terms = 0

    def update(self, diag):
        if diag.terms_used > self.max_terms:
            self.max_terms = diag.terms_used


def _transform(sc, variant, series_tol, stats=None):
    """Build the Laplace evaluator ``p' -> complex`` for a variant.

    Point observation uses the point kernels; an interval observation uses
    the closed-form depth average.  Theis needs no geometry at all.
    """
    if variant is ModelVariant.THEIS:
        return lambda p: kernel.sbar_theis(p)
    if sc is None:
        raise ValidationError(f"{variant.value} requires a scenario")
    if variant is ModelVariant.PAPADOPULOS_COOPER:
        return lambda p: kernel.sbar_papadopulos_cooper(p, sc.r_wD, sc.C_wD)

    interval = sc.z_D1 is not None
    if not interval and sc.z_D is None:
        raise ValidationError(
            f"{variant.value} needs an observation depth z_D or interval")

    if variant is ModelVariant.UNIFIED:
        point_fn, which = kernel.sbar_unified, "unified"
    elif variant is ModelVariant.YANG:
        point_fn, which = kernel.sbar_yang, "yang"
    elif variant is ModelVariant.HANTUSH:
        point_fn, which = kernel.sbar_hantush, "hantush"
    else:  # pragma: no cover
        raise ValidationError(f"unknown variant {variant}")

    def F(p):
        if interval:
            value, diag = kernel._averaged_kernel(
                p, sc, sc.z_D1, sc.z_D2, which, tol=series_tol)
        else:
            value, diag = point_fn(p, sc, tol=series_tol)
        if stats is not None:
            stats.update(diag)
        return value

    return F


def _clamp(value, context):
    if value >= 0.0:
        return value, False
    if value >= -CLAMP_FLOOR:
        warnings.warn(
            f"clamped negative inversion noise {value:.3e} to 0 at {context}",
            NegativeClampWarning,
            stacklevel=3,
        )
        return 0.0, True
    raise kernel.SeriesConvergenceError(
        f"drawdown {value:.3e} below the negativity floor at {context}",
        kernel.SeriesDiagnostics(0, math.inf, False),
    )


def drawdown(t_s, sc, variant=ModelVariant.UNIFIED, cfg=InversionConfig(),
             series_tol=kernel.DEFAULT_SERIES_TOL):
    """Dimensionless drawdown ``s_D(t_s)`` for one variant.

    Parameters
    ----------
    t_s : float
      Dimensionless time, > 0.
    sc : DimensionlessScenario or None
      Scenario; may be None for the Theis variant only.
    variant : ModelVariant
    cfg : InversionConfig
    series_tol : float
      Relative truncation tolerance of the vertical-mode series.

    Returns
    -------
    float
      Nonnegative drawdown (tiny negative inversion noise is clamped to 0
      with a `NegativeClampWarning`).
    """
    t_s = float(t_s)
    if t_s <= 0.0:
        raise ValidationError("t_s must be positive")
    F = _transform(sc, variant, series_tol)
    value = float(invert_many(F, [t_s], cfg=cfg)[0])
    value, _ = _clamp(value, f"t_s={t_s:g}")
    return value


def drawdown_via_unit_time(t_s, sc, variant=ModelVariant.UNIFIED,
                           cfg=InversionConfig(),
                           series_tol=kernel.DEFAULT_SERIES_TOL):
    """Drawdown by the product-variable scheme: the transform is recast in
    ``p_D = p' * t_s`` and inverted over one unit of scaled time.

    Mathematically identical to `drawdown`; kept as an independently driven
    path for cross-checking the inversion plumbing.
    """
    t_s = float(t_s)
    if t_s <= 0.0:
        raise ValidationError("t_s must be positive")
    F = _transform(sc, variant, series_tol)
    G = lambda p_D: F(p_D / t_s) / t_s
    value = invert_unit_time(G, cfg=cfg)
    value, _ = _clamp(value, f"t_s={t_s:g} (unit-time scheme)")
    return value


def pumping_well_drawdown(t_s, sc, cfg=InversionConfig(),
                          variant=ModelVariant.UNIFIED,
                          series_tol=kernel.DEFAULT_SERIES_TOL):
    """Drawdown in the pumping well: the screen average at the well face.

    The uniform-flux face condition makes point drawdown vary along the
    screen, so the water-level surrogate is the depth average over
    ``[d_D, l_D]`` evaluated at ``r_wD = 1``.

    Parameters
    ----------
    t_s : float
    sc : DimensionlessScenario
      Must have ``r_wD == 1`` (observation at the well face).
    """
    if sc.r_wD != 1.0:
        raise ValidationError("pumping-well drawdown requires r_wD = 1")
    well_sc = sc.with_observation(z_D1=sc.d_D, z_D2=sc.l_D)
    return drawdown(t_s, well_sc, variant=variant, cfg=cfg,
                    series_tol=series_tol)


def early_asymptote(t_s, sc):
    """Early-time wellbore-storage drawdown ``4 t_s / (C_wD r_wD^2)``.

    While the pumped water still comes entirely from well storage, the well
    water balance ``C_w ds_w/dt = Q`` makes dimensionless drawdown exactly
    linear in dimensionless time with this coefficient.
    """
    if sc.C_wD <= 0.0:
        raise ValidationError("the storage asymptote needs C_wD > 0")
    if t_s <= 0.0:
        raise ValidationError("t_s must be positive")
    return 4.0 * t_s / (sc.C_wD * sc.r_wD ** 2)


def _log_grid(t_s_min, t_s_max, points_per_decade):
    if not (0.0 < t_s_min < t_s_max):
        raise ValidationError("grid requires 0 < t_s_min < t_s_max")
    if points_per_decade < 1:
        raise ValidationError("points_per_decade must be >= 1")
    decades = math.log10(t_s_max / t_s_min)
    npts = max(2, int(round(decades * points_per_decade)) + 1)
    return np.geomspace(t_s_min, t_s_max, npts)


def curve(sc, variant, t_s_min, t_s_max, points_per_decade=20,
          cfg=InversionConfig(), series_tol=kernel.DEFAULT_SERIES_TOL):
    """Log-spaced drawdown curve, endpoints included.

    Times are grouped by decade and each group shares one inversion contour
    tied to the group maximum.  Any point failure aborts the whole curve
    (partial results are discarded), so output is all-or-nothing.

    Returns
    -------
    DrawdownCurve
    """
    grid = _log_grid(t_s_min, t_s_max, points_per_decade)
    stats = _SeriesStats()
    F = _transform(sc, variant, series_tol, stats=stats)
    inv_terms = 2 * cfg.terms_M + 1

    values = np.empty(grid.size)
    decade = np.floor(np.log10(grid) + 1e-12).astype(int)
    for dec in np.unique(decade):
        mask = decade == dec
        ts = grid[mask]
        values[mask] = invert_many(F, ts, cfg=cfg, t_max=float(ts.max()))

    points = []
    diags = []
    for t, v in zip(grid, values):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", NegativeClampWarning)
            v, clamped = _clamp(float(v), f"t_s={t:g}")
        points.append((float(t), v))
        diags.append(CurvePointDiagnostics(
            series_terms=stats.max_terms,
            inversion_terms=inv_terms,
            clamped=clamped,
        ))
    return DrawdownCurve(points=tuple(points), scenario=sc, variant=variant,
                         diagnostics=tuple(diags))


def write_curve_csv(crv, fh, cfg=InversionConfig(),
                    series_tol=kernel.DEFAULT_SERIES_TOL):
    """Write a curve as CSV with a provenance comment header.

    Column order is ``t_s,s_D,variant,series_terms,inversion_terms``; floats
    carry 17 significant digits so values round-trip exactly.
    """
    from . import __version__

    sc_hash = scenario_hash(crv.scenario) if crv.scenario is not None else "none"
    fh.write(
        f"# wellflow {__version__} scenario={sc_hash} variant={crv.variant.value} "
        f"inv_terms_M={cfg.terms_M} inv_alpha={cfg.contour_shift_alpha:.17g} "
        f"inv_factor={cfg.scaled_period_factor:.17g} "
        f"inv_tol={cfg.tolerance:.17g} series_tol={series_tol:.17g}\n"
    )
    fh.write("t_s,s_D,variant,series_terms,inversion_terms\n")
    for (t, s), diag in zip(crv.points, crv.diagnostics):
        fh.write(f"{t:.17g},{s:.17g},{crv.variant.value},"
                 f"{diag.series_terms},{diag.inversion_terms}\n")
