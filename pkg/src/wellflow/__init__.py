"""wellflow: transient drawdown for a partially penetrating, finite-radius
well with wellbore storage in an anisotropic confined aquifer.

The library evaluates the unified Laplace-domain drawdown solution and its
classical limits (Theis 1935; Hantush 1964; Papadopulos & Cooper 1967; Yang
et al. 2006), inverts them numerically to the time domain, and generates
dimensionless type curves.
"""

__version__ = "0.1.0"

from .special import (
    bessel_k0,
    bessel_k1,
    bessel_k0_scaled,
    bessel_k1_scaled,
    exp_integral_e1,
    DomainError,
    UnderflowWarning,
)
from .laplace import InversionConfig, invert_at, invert_unit_time, InversionError
from .scenario import (
    DimensionalScenario,
    DimensionlessScenario,
    ObservationSpec,
    TimeScaling,
    ValidationError,
    nondimensionalize,
    redimensionalize,
    dimensionless_time,
    dimensional_drawdown,
    casing_storage,
    load_scenario,
)
from .kernel import (
    SeriesDiagnostics,
    SeriesConvergenceError,
    ModeTerm,
    phi_n,
    mode_term,
    sbar_unified,
    sbar_averaged,
    sbar_papadopulos_cooper,
    sbar_yang,
    sbar_hantush,
    sbar_theis,
)
from .timedomain import (
    ModelVariant,
    DrawdownCurve,
    drawdown,
    pumping_well_drawdown,
    curve,
    early_asymptote,
    write_curve_csv,
)
from .verify import CheckReport, theis_time_domain, quadrature_average_check, reduction_suite

__all__ = [
    "__version__",
    "bessel_k0", "bessel_k1", "bessel_k0_scaled", "bessel_k1_scaled",
    "exp_integral_e1", "DomainError", "UnderflowWarning",
    "InversionConfig", "invert_at", "invert_unit_time", "InversionError",
    "DimensionalScenario", "DimensionlessScenario", "ObservationSpec",
    "TimeScaling", "ValidationError", "nondimensionalize", "redimensionalize",
    "dimensionless_time", "dimensional_drawdown", "casing_storage",
    "load_scenario",
    "SeriesDiagnostics", "SeriesConvergenceError", "ModeTerm", "phi_n",
    "mode_term", "sbar_unified", "sbar_averaged", "sbar_papadopulos_cooper",
    "sbar_yang", "sbar_hantush", "sbar_theis",
    "ModelVariant", "DrawdownCurve", "drawdown", "pumping_well_drawdown",
    "curve", "early_asymptote", "write_curve_csv",
    "CheckReport", "theis_time_domain", "quadrature_average_check",
    "reduction_suite",
]
