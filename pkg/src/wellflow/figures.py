"""Reference type-curve families.

Six canonical curve sets explore, for a well of dimensionless radius
``r_w/b = 0.02``, the effects of wellbore storage, screen geometry,
anisotropy and radial distance:

2. pumping-well drawdown compared across the five model variants;
3. pumping-well drawdown for a family of storage coefficients;
4. piezometer drawdown (z_D = 0.5, r_D = 0.2) across storage coefficients;
5. piezometer drawdown across screen lengths;
6. piezometer drawdown across anisotropy ratios;
7. piezometer drawdown across radial distances.

Each builder returns a list of ``(label, scenario, variant, observation)``
entries that `wellflow.cli` turns into one CSV per curve.
"""

from .scenario import DimensionlessScenario
from .timedomain import ModelVariant

__all__ = ["FIGURE_NUMBERS", "figure_family", "DEFAULT_T_RANGE"]

#: dimensionless well radius r_w / b shared by every family
WELL_RADIUS_OVER_B = 0.02

#: storage-coefficient family spanning no-storage through strongly damped
STORAGE_FAMILY = (0.0, 10.0, 1.0e2, 1.0e3, 1.0e4)

#: screen-length family for the geometry comparison
SCREEN_FAMILY = (0.25, 0.5, 0.75, 1.0)

#: anisotropy family
ANISOTROPY_FAMILY = (0.01, 0.1, 1.0)

#: radial-distance family
RADIUS_FAMILY = (0.05, 0.1, 0.2, 0.5)

#: storage coefficient of the radial-distance family; an alternate value of
#: 1.0e2 is in circulation for this family, so it is exposed as a constant
RADIUS_FAMILY_CWD = 1.0e3
RADIUS_FAMILY_CWD_ALT = 1.0e2

DEFAULT_T_RANGE = (1.0e-6, 1.0e6)

FIGURE_NUMBERS = (2, 3, 4, 5, 6, 7)


def _well_scenario(C_wD, l_D=0.5, d_D=0.0, K_D=1.0):
    """Well-face scenario (r_wD = 1) with screen-interval observation."""
    return DimensionlessScenario(
        r_D=WELL_RADIUS_OVER_B, r_wD=1.0, C_wD=C_wD, d_D=d_D, l_D=l_D,
        K_D=K_D, z_D1=d_D, z_D2=l_D)


def _piezometer_scenario(C_wD, r_D=0.2, z_D=0.5, l_D=0.5, d_D=0.0, K_D=1.0):
    """Observation-point scenario at radial distance r_D."""
    return DimensionlessScenario(
        r_D=r_D, r_wD=WELL_RADIUS_OVER_B / r_D, C_wD=C_wD, d_D=d_D, l_D=l_D,
        K_D=K_D, z_D=z_D)


def figure_family(n):
    """Curve entries ``(label, scenario, variant)`` for family ``n`` in 2..7."""
    if n == 2:
        sc = _well_scenario(C_wD=1.0e2)
        return [
            ("unified", sc, ModelVariant.UNIFIED),
            ("papadopulos_cooper", sc, ModelVariant.PAPADOPULOS_COOPER),
            ("yang", sc, ModelVariant.YANG),
            ("hantush", sc, ModelVariant.HANTUSH),
            ("theis", sc, ModelVariant.THEIS),
        ]
    if n == 3:
        return [
            (f"CwD_{c:g}", _well_scenario(C_wD=c), ModelVariant.UNIFIED)
            for c in STORAGE_FAMILY
        ]
    if n == 4:
        entries = [
            (f"CwD_{c:g}", _piezometer_scenario(C_wD=c), ModelVariant.UNIFIED)
            for c in STORAGE_FAMILY
        ]
        entries.append(("yang", _piezometer_scenario(C_wD=0.0), ModelVariant.YANG))
        entries.append(("hantush", _piezometer_scenario(C_wD=0.0), ModelVariant.HANTUSH))
        return entries
    if n == 5:
        return [
            (f"lD_{l:g}", _piezometer_scenario(C_wD=1.0e2, l_D=l), ModelVariant.UNIFIED)
            for l in SCREEN_FAMILY
        ]
    if n == 6:
        return [
            (f"KD_{k:g}",
             _piezometer_scenario(C_wD=1.0e2, l_D=0.25, K_D=k),
             ModelVariant.UNIFIED)
            for k in ANISOTROPY_FAMILY
        ]
    if n == 7:
        entries = [
            (f"rD_{r:g}",
             _piezometer_scenario(C_wD=RADIUS_FAMILY_CWD, r_D=r, l_D=0.25),
             ModelVariant.UNIFIED)
            for r in RADIUS_FAMILY
        ]
        entries.append(("theis", None, ModelVariant.THEIS))
        return entries
    raise ValueError(f"figure family must be one of {FIGURE_NUMBERS}, got {n}")
