"""Independent verification machinery.

Nothing here is needed to *compute* drawdown; everything here exists to
check it.  The module provides

* the analytic Theis time-domain anchor ``s_D = E1(1/(4 t_s))`` that ties
  the whole Bessel-plus-inversion stack to a closed form;
* a Gauss-Legendre quadrature cross-check of the closed-form depth average;
* the four reduction identities (full penetration, zero storage, vanishing
  radius, and their composition) run over scenario families in Laplace space
  and in the time domain;
* named check suites consumed by the command line and the test suite.

Checks return `CheckReport` records rather than raising, so a full run can
be aggregated and rendered as a table.
"""

import json
import math
from dataclasses import dataclass
from importlib import resources

import numpy as np

from . import kernel
from .laplace import ANALYTIC_PAIRS, InversionConfig, invert_at
from .scenario import DimensionlessScenario
from .special import bessel_k01_scaled_array, exp_integral_e1
from .timedomain import ModelVariant, drawdown, drawdown_via_unit_time, early_asymptote, pumping_well_drawdown

__all__ = [
    "CheckReport",
    "theis_time_domain",
    "quadrature_average_check",
    "reduction_suite",
    "random_reduction_family",
    "averaging_suite",
    "asymptote_suite",
    "inversion_suite",
    "bessel_suite",
    "scheme_equivalence_suite",
    "golden_suite",
    "run_suite",
    "SUITE_NAMES",
]

_SEED = 20110211


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one verification check."""

    name: str
    scenario_id: str
    max_rel_error: float
    tolerance: float
    passed: bool
    worst_location: str

    @staticmethod
    def from_errors(name, scenario_id, errors, locations, tolerance):
        errors = np.asarray(errors, dtype=float)
        idx = int(np.argmax(errors)) if errors.size else 0
        worst = float(errors[idx]) if errors.size else 0.0
        where = str(locations[idx]) if errors.size else "-"
        return CheckReport(
            name=name,
            scenario_id=scenario_id,
            max_rel_error=worst,
            tolerance=tolerance,
            passed=bool(worst <= tolerance),
            worst_location=where,
        )


def _rel(a, b):
    scale = max(abs(a), abs(b), 1e-300)
    return abs(a - b) / scale


def theis_time_domain(t_s):
    """Analytic fully penetrating line-source drawdown ``E1(1/(4 t_s))``.

    This is the closed-form anchor for the entire inversion stack: the
    corresponding transform is ``(2/p') K0(sqrt p')``.
    """
    t_s = float(t_s)
    if t_s <= 0.0:
        from .special import DomainError

        raise DomainError(f"t_s must be positive, got {t_s}")
    return exp_integral_e1(1.0 / (4.0 * t_s))


# ----------------------------------------------------------------------
# depth-average quadrature check
# ----------------------------------------------------------------------

def quadrature_average_check(sc, z_D1, z_D2, p_prime, nodes=64, segments=None,
                             max_terms=None, series_tol=1.0e-12,
                             tolerance=1.0e-10):
    """Compare the closed-form depth average against composite quadrature of
    the point solution.

    Gauss-Legendre with `nodes` points per segment is applied on `segments`
    subintervals of ``[z_D1, z_D2]`` (enough segments are chosen to resolve
    the highest retained vertical mode when not given).  With `max_terms`
    set, both sides are summed to exactly that many modes, which isolates
    the depth-integration identity from tail handling.

    Returns
    -------
    CheckReport
    """
    if nodes < 8:
        raise ValueError("quadrature check needs nodes >= 8")
    kw = {}
    if max_terms is not None:
        kw["exact_truncation"] = int(max_terms)
    avg, diag = kernel.sbar_averaged(p_prime, sc, z_D1, z_D2,
                                     tol=series_tol, **kw)
    modes = max(diag.terms_used, 1)
    if segments is None:
        segments = max(1, math.ceil(4.0 * modes * (z_D2 - z_D1) / nodes))
    xs, ws = np.polynomial.legendre.leggauss(nodes)
    total = 0.0 + 0.0j
    edges = np.linspace(z_D1, z_D2, segments + 1)
    for a, b in zip(edges[:-1], edges[1:]):
        mid, half = 0.5 * (a + b), 0.5 * (b - a)
        for x, w in zip(xs, ws):
            z = mid + half * x
            v, _ = kernel.sbar_unified(p_prime, sc.with_observation(z_D=z),
                                       tol=series_tol, **kw)
            total += w * half * v
    quad = total / (z_D2 - z_D1)
    err = _rel(avg, quad)
    return CheckReport(
        name="averaging-quadrature",
        scenario_id=f"beta={sc.beta:.3g},r_wD={sc.r_wD:.3g},C_wD={sc.C_wD:.3g}",
        max_rel_error=err,
        tolerance=tolerance,
        passed=err <= tolerance,
        worst_location=f"p'={p_prime}",
    )


# ----------------------------------------------------------------------
# reduction identities
# ----------------------------------------------------------------------

def random_reduction_family(count=50, seed=_SEED):
    """Deterministic pseudo-random scenarios for the reduction identities.

    Geometry is drawn broadly; `beta` is kept off tiny values so the mode
    series of the zero-storage identity converges at desk scale.
    """
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        d_D = rng.uniform(0.0, 0.6)
        l_D = rng.uniform(d_D + 0.2, 1.0)
        K_D = 10.0 ** rng.uniform(-2, 0)
        r_D = 10.0 ** rng.uniform(-1, 0.3)
        beta = r_D * math.sqrt(K_D)
        if beta < 0.05:
            r_D = 0.05 / math.sqrt(K_D)
        out.append(DimensionlessScenario(
            r_D=r_D,
            r_wD=10.0 ** rng.uniform(-2, 0),
            C_wD=10.0 ** rng.uniform(0, 4),
            d_D=d_D,
            l_D=l_D,
            K_D=K_D,
            z_D=rng.uniform(0.0, 1.0),
        ))
    return out


def _contour_points(count=20, seed=_SEED + 1):
    rng = np.random.default_rng(seed)
    gam = 10.0 ** rng.uniform(-1.3, 1.7, count)
    y = gam * rng.uniform(0.0, 40.0, count)
    return gam + 1j * y


def reduction_suite(sc_family=None, tolerances=None, contour_count=20,
                    time_domain=True):
    """Run the four reduction identities; one report per identity.

    Identities (Laplace space, every scenario at `contour_count` contour
    points; time domain on a subset):

    1. full penetration: unified(l_D=1, d_D=0) == fully-penetrating
       finite-radius closed form;
    2. zero storage: unified(C_wD=0) == partial-penetration no-storage form;
    3. vanishing radius: unified(r_wD=1e-6) ~= line-source partial
       penetration form;
    4. composition: line-source form at full penetration == Theis.
    """
    if sc_family is None:
        sc_family = random_reduction_family()
    tol = {"full_pen": 1e-13, "no_storage": 1e-13, "small_radius": 1e-4,
           "hantush_theis": 1e-13, "time_domain": 1e-6}
    if tolerances:
        tol.update(tolerances)
    ps = _contour_points(contour_count)

    errs = {k: [] for k in ("full_pen", "no_storage", "small_radius",
                            "hantush_theis")}
    locs = {k: [] for k in errs}

    for sc in sc_family:
        full = DimensionlessScenario(
            r_D=sc.r_D, r_wD=sc.r_wD, C_wD=sc.C_wD, d_D=0.0, l_D=1.0,
            K_D=sc.K_D, z_D=sc.z_D)
        nostor = DimensionlessScenario(
            r_D=sc.r_D, r_wD=sc.r_wD, C_wD=0.0, d_D=sc.d_D, l_D=sc.l_D,
            K_D=sc.K_D, z_D=sc.z_D)
        tiny = DimensionlessScenario(
            r_D=sc.r_D, r_wD=1e-6, C_wD=sc.C_wD, d_D=sc.d_D, l_D=sc.l_D,
            K_D=sc.K_D, z_D=sc.z_D)
        for p in ps:
            a, _ = kernel.sbar_unified(p, full)
            b = kernel.sbar_papadopulos_cooper(p, sc.r_wD, sc.C_wD)
            errs["full_pen"].append(_rel(a, b))
            locs["full_pen"].append(f"p'={p:.3g}")

            a, _ = kernel.sbar_unified(p, nostor, tol=1e-9)
            b, _ = kernel.sbar_yang(p, nostor, tol=1e-9)
            errs["no_storage"].append(_rel(a, b))
            locs["no_storage"].append(f"p'={p:.3g}")

            a, _ = kernel.sbar_unified(p, tiny, tol=1e-9)
            b, _ = kernel.sbar_hantush(p, tiny, tol=1e-9)
            errs["small_radius"].append(_rel(a, b))
            locs["small_radius"].append(f"p'={p:.3g}")

            a, _ = kernel.sbar_hantush(p, full, tol=1e-9)
            b = kernel.sbar_theis(p)
            errs["hantush_theis"].append(_rel(a, b))
            locs["hantush_theis"].append(f"p'={p:.3g}")

    reports = [
        CheckReport.from_errors(f"reduction-{k}", f"family[{len(sc_family)}]",
                                errs[k], locs[k], tol[k])
        for k in errs
    ]

    if time_domain:
        terrs, tlocs = [], []
        for sc in sc_family[:4]:
            full = DimensionlessScenario(
                r_D=sc.r_D, r_wD=sc.r_wD, C_wD=sc.C_wD, d_D=0.0, l_D=1.0,
                K_D=sc.K_D, z_D=sc.z_D)
            for t_s in (0.5, 50.0):
                a = drawdown(t_s, full, ModelVariant.UNIFIED)
                b = drawdown(t_s, full, ModelVariant.PAPADOPULOS_COOPER)
                terrs.append(_rel(a, b))
                tlocs.append(f"t_s={t_s:g}")
        reports.append(CheckReport.from_errors(
            "reduction-time-domain", f"family[{min(len(sc_family), 4)}]",
            terrs, tlocs, tol["time_domain"]))
    return reports


# ----------------------------------------------------------------------
# named suites
# ----------------------------------------------------------------------

def averaging_suite(count=20, seed=_SEED + 2, nodes=64):
    """Random depth-average quadrature checks plus the full-depth collapse."""
    rng = np.random.default_rng(seed)
    reports = []
    for _ in range(count):
        d_D = rng.uniform(0.0, 0.5)
        l_D = rng.uniform(d_D + 0.2, 1.0)
        sc = DimensionlessScenario(
            r_D=float(rng.uniform(0.3, 1.5)),
            r_wD=float(rng.uniform(0.05, 0.3)),
            C_wD=float(rng.choice([0.0, 10.0, 100.0])),
            d_D=d_D, l_D=l_D,
            K_D=float(10.0 ** rng.uniform(-1, 0)),
            z_D=0.5,
        )
        z1 = rng.uniform(0.0, 0.8)
        z2 = rng.uniform(z1 + 0.1, 1.0)
        p = complex(10.0 ** rng.uniform(-1, 1.3), 10.0 ** rng.uniform(-1, 1.3))
        reports.append(quadrature_average_check(sc, float(z1), float(z2), p,
                                                nodes=nodes))
    # full-depth average must collapse to the n = 0 term exactly
    sc = DimensionlessScenario(r_D=0.2, r_wD=0.1, C_wD=100.0, d_D=0.0,
                               l_D=0.5, K_D=1.0, z_D=0.5)
    p = 2.0 + 3.0j
    avg, _ = kernel.sbar_averaged(p, sc, 0.0, 1.0)
    n0 = kernel.sbar_papadopulos_cooper(p, sc.r_wD, sc.C_wD / (sc.l_D - sc.d_D))
    err = _rel(avg, n0)
    reports.append(CheckReport(
        name="averaging-full-depth-collapse",
        scenario_id="fig4-like",
        max_rel_error=err,
        tolerance=1e-13,
        passed=err <= 1e-13,
        worst_location=f"p'={p}",
    ))
    return reports


def asymptote_suite():
    """Early-time storage line and late-time convergence to the line-source
    solutions on the reference pumping-well scenario."""
    sc = DimensionlessScenario(r_D=0.02, r_wD=1.0, C_wD=100.0, d_D=0.0,
                               l_D=0.5, K_D=1.0)
    reports = []
    errs, locs = [], []
    for t_s in (1e-5, 3e-5, 1e-4):
        s = pumping_well_drawdown(t_s, sc)
        errs.append(abs(s / early_asymptote(t_s, sc) - 1.0))
        locs.append(f"t_s={t_s:g}")
    reports.append(CheckReport.from_errors(
        "asymptote-early-storage", "well-face C_wD=100", errs, locs, 1e-2))

    t_late = 1e6
    s_uni = pumping_well_drawdown(t_late, sc)
    s_han = pumping_well_drawdown(t_late, sc, variant=ModelVariant.HANTUSH)
    err = abs(s_uni / s_han - 1.0)
    reports.append(CheckReport(
        name="asymptote-late-hantush",
        scenario_id="well-face C_wD=100",
        max_rel_error=err,
        tolerance=1e-2,
        passed=err <= 1e-2,
        worst_location=f"t_s={t_late:g}",
    ))

    s_pc = drawdown(t_late, sc, ModelVariant.PAPADOPULOS_COOPER)
    s_th = theis_time_domain(t_late)
    err = abs(s_pc / s_th - 1.0)
    reports.append(CheckReport(
        name="asymptote-late-theis",
        scenario_id="well-face C_wD=100",
        max_rel_error=err,
        tolerance=1e-2,
        passed=err <= 1e-2,
        worst_location=f"t_s={t_late:g}",
    ))
    return reports


def inversion_suite():
    """Analytic transform pairs at t in {0.1, 1, 10} with the default config."""
    reports = []
    for name, (F, f) in ANALYTIC_PAIRS.items():
        errs, locs = [], []
        for t in (0.1, 1.0, 10.0):
            got = invert_at(F, t)
            errs.append(_rel(got, f(t)))
            locs.append(f"t={t:g}")
        reports.append(CheckReport.from_errors(
            f"inversion-pair-{name}", "analytic", errs, locs, 1e-8))
    return reports


def bessel_suite():
    """Packaged reference values plus structural identities of K0/K1."""
    reports = []
    data = json.loads(
        resources.files("wellflow").joinpath("data/bessel_check.json").read_text()
    )
    errs, locs = [], []
    for rec in data["points"]:
        z = complex(rec["z_re"], rec["z_im"])
        k0e, k1e = bessel_k01_scaled_array(np.array([z]))
        ref0 = complex(rec["k0e_re"], rec["k0e_im"])
        ref1 = complex(rec["k1e_re"], rec["k1e_im"])
        errs.append(max(_rel(k0e[0], ref0), _rel(k1e[0], ref1)))
        locs.append(f"z={z:.4g}")
    reports.append(CheckReport.from_errors(
        "bessel-reference", f"packaged[{len(data['points'])}]", errs, locs,
        1e-12))

    # derivative identity dK1/dx = -(K0 + K1/x) via central differences
    errs, locs = [], []
    for x in np.linspace(0.1, 20.0, 25):
        h = 1e-5 * max(x, 1.0)
        k0e, k1e = bessel_k01_scaled_array(np.array([x, x - h, x + h]))
        k0 = (k0e * np.exp(-np.array([x, x - h, x + h]))).real
        k1 = (k1e * np.exp(-np.array([x, x - h, x + h]))).real
        dk1 = (k1[2] - k1[1]) / (2.0 * h)
        target = -(k0[0] + k1[0] / x)
        errs.append(_rel(dk1, target))
        locs.append(f"x={x:.3g}")
    reports.append(CheckReport.from_errors(
        "bessel-derivative-identity", "real axis", errs, locs, 1e-6))

    # conjugate symmetry
    errs, locs = [], []
    for z in (0.3 + 1.1j, 4.0 + 9.0j, 60.0 + 50.0j):
        k0e, k1e = bessel_k01_scaled_array(np.array([z, z.conjugate()]))
        errs.append(max(_rel(k0e[1], k0e[0].conjugate()),
                        _rel(k1e[1], k1e[0].conjugate())))
        locs.append(f"z={z}")
    reports.append(CheckReport.from_errors(
        "bessel-conjugate-symmetry", "complex", errs, locs, 1e-14))
    return reports


# ----------------------------------------------------------------------
# golden curve suite and scheme equivalence
# ----------------------------------------------------------------------

def golden_suite():
    """Canonical (scenario, variant, t_s grid) entries used for inversion
    scheme equivalence and refinement-stability checks.

    Grids avoid the degenerate ultra-early range where drawdown underflows
    and relative comparisons are meaningless.
    """
    fig2 = DimensionlessScenario(r_D=0.02, r_wD=1.0, C_wD=100.0, d_D=0.0,
                                 l_D=0.5, K_D=1.0)
    fig2_avg = fig2.with_observation(z_D1=0.0, z_D2=0.5)
    fig4 = DimensionlessScenario(r_D=0.2, r_wD=0.1, C_wD=100.0, d_D=0.0,
                                 l_D=0.5, K_D=1.0, z_D=0.5)
    fig6 = DimensionlessScenario(r_D=0.2, r_wD=0.1, C_wD=100.0, d_D=0.0,
                                 l_D=0.25, K_D=0.1, z_D=0.5)
    entries = [
        ("fig2-well-unified", fig2_avg, ModelVariant.UNIFIED,
         np.geomspace(1e-5, 1e5, 21)),
        ("fig2-well-pc", fig2_avg, ModelVariant.PAPADOPULOS_COOPER,
         np.geomspace(1e-5, 1e5, 21)),
        ("fig4-obs-unified", fig4, ModelVariant.UNIFIED,
         np.geomspace(1e-1, 1e4, 16)),
        ("fig4-obs-yang", fig4, ModelVariant.YANG,
         np.geomspace(1e-1, 1e4, 16)),
        ("fig6-obs-unified", fig6, ModelVariant.UNIFIED,
         np.geomspace(1e-1, 1e4, 16)),
        ("theis", None, ModelVariant.THEIS,
         np.geomspace(1e-1, 1e4, 16)),
    ]
    return entries


def scheme_equivalence_suite(cfg=None):
    """Product-variable unit-time scheme vs direct scheme on the golden suite."""
    if cfg is None:
        cfg = InversionConfig(terms_M=30, tolerance=1e-11)
    reports = []
    for name, sc, variant, ts in golden_suite():
        errs, locs = [], []
        for t_s in ts:
            a = drawdown(float(t_s), sc, variant, cfg=cfg)
            b = drawdown_via_unit_time(float(t_s), sc, variant, cfg=cfg)
            errs.append(_rel(a, b))
            locs.append(f"t_s={t_s:.3g}")
        reports.append(CheckReport.from_errors(
            f"scheme-equivalence-{name}", name, errs, locs, 1e-8))
    return reports


SUITE_NAMES = ("reductions", "averaging", "asymptotes", "inversion", "bessel",
               "all")


def run_suite(name):
    """Run a named check suite; returns a list of CheckReport."""
    if name == "reductions":
        return reduction_suite(random_reduction_family(12), contour_count=8)
    if name == "averaging":
        return averaging_suite(count=8)
    if name == "asymptotes":
        return asymptote_suite()
    if name == "inversion":
        return inversion_suite()
    if name == "bessel":
        return bessel_suite()
    if name == "all":
        out = []
        for n in SUITE_NAMES[:-1]:
            out.extend(run_suite(n))
        return out
    raise ValueError(f"unknown check suite {name!r}; "
                     f"choose from {', '.join(SUITE_NAMES)}")
