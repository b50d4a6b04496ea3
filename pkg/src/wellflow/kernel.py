"""Laplace-domain dimensionless drawdown kernels.

Everything here evaluates transforms of the dimensionless drawdown
``s_D = (4 pi K_r b / Q) s`` as functions of the Laplace variable ``p'``
conjugate to dimensionless time ``t_s``:

* `sbar_unified`   - partially penetrating, finite-radius well with storage
  (the general case; vertical no-flow boundaries enter through a cosine-mode
  series);
* `sbar_averaged`  - the same solution averaged over an observation interval
  ``[z_D1, z_D2]`` in closed form;
* `sbar_papadopulos_cooper` - fully penetrating, finite radius, storage;
* `sbar_yang`      - partially penetrating, finite radius, no storage;
* `sbar_hantush`   - partially penetrating, zero radius, no storage;
* `sbar_theis`     - fully penetrating line source.

The point form is

    sbar(p') = (2/p') K0(phi_0)/D_0
             + (4 / (p' pi (l_D - d_D)))
               * sum_{n>=1} K0(phi_n) [sin(n pi l_D) - sin(n pi d_D)]
                            cos(n pi z_D) / (n D_n)

with ``phi_n = sqrt(p' + beta^2 n^2 pi^2)`` and

    D_n = r_wD phi_n K1(r_wD phi_n)
        + C_wD / (2 (l_D - d_D)) * r_wD^2 phi_n^2 K0(r_wD phi_n).

Every mode is computed as a ratio of exponentially scaled Bessel values with
the exponent ``exp(-(1 - r_wD) phi_n)`` carried explicitly, so no raw
underflowed value is ever formed.

Series summation runs in blocks of 64 terms.  Fast-decaying series (most
observation points, where ``r_wD < 1``) terminate on an envelope bound.  At
the well face the modes decay only algebraically and, at large ``|p'|``, only
conditionally (through sign oscillation); those tails are evaluated by
iterated summation by parts on the trigonometric frequency components, with
a non-oscillatory (mean) component handled by Euler-Maclaurin.  The reported
`SeriesDiagnostics.tail_estimate` upper-bounds the neglected remainder.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .special import bessel_k01_scaled_array

__all__ = [
    "SeriesDiagnostics",
    "SeriesConvergenceError",
    "ModeTerm",
    "phi_n",
    "mode_term",
    "sbar_unified",
    "sbar_averaged",
    "sbar_papadopulos_cooper",
    "sbar_yang",
    "sbar_hantush",
    "sbar_theis",
]

DEFAULT_SERIES_TOL = 1.0e-10
DEFAULT_TERM_CAP = 100_000
_BLOCK = 64
_PARTS_FIRST_TRY = 256
_DIFF_POINTS = 12


@dataclass(frozen=True)
class SeriesDiagnostics:
    """Outcome of one mode-series summation.

    Attributes
    ----------
    terms_used : int
      Number of directly summed modes.
    tail_estimate : float
      Upper bound on the neglected remainder, relative to the returned value.
    converged : bool
      Whether the requested tolerance was met (always true on return; failed
      summations raise `SeriesConvergenceError` carrying converged=False).
    tail_estimate_abs : float
      The same bound in absolute terms.
    accelerated : bool
      True when the tail was evaluated by summation by parts rather than
      bounded by the decay envelope.
    """

    terms_used: int
    tail_estimate: float
    converged: bool
    tail_estimate_abs: float = 0.0
    accelerated: bool = False


class SeriesConvergenceError(RuntimeError):
    """Mode series failed to meet tolerance within the term cap."""

    def __init__(self, message, diagnostics):
        super().__init__(message)
        self.diagnostics = diagnostics


@dataclass(frozen=True)
class ModeTerm:
    """One vertical mode of the series, for inspection and testing.

    `numerator` and `denominator` are jointly rescaled by
    ``exp(r_wD * phi_n)``, so their ratio is exactly the mode's contribution
    while both stay representable at large n.
    """

    n: int
    phi_n: complex
    numerator: complex
    denominator: complex


def phi_n(n, p_prime, beta):
    """Vertical-mode argument ``sqrt(p' + beta^2 n^2 pi^2)`` (principal root).

    Parameters
    ----------
    n : int
      Mode index >= 0.
    p_prime : complex
      Laplace variable, Re > 0.
    beta : float
      Anisotropy-scaled radius ``r_D sqrt(K_D)``.
    """
    if n < 0:
        raise ValueError("mode index must be >= 0")
    return cmath.sqrt(p_prime + (beta * math.pi * n) ** 2)


def _phi_array(n, p_prime, beta):
    n = np.asarray(n, dtype=float)
    return np.sqrt(p_prime + (beta * math.pi) ** 2 * n * n)


# ----------------------------------------------------------------------
# exact-zero trigonometry of multiples of pi
# ----------------------------------------------------------------------

def _sinpi(x):
    """sin(pi*x) for arrays, exactly zero at integer x."""
    x = np.asarray(x, dtype=float)
    frac = np.mod(x, 2.0)
    out = np.sin(np.pi * frac)
    return np.where((frac == 0.0) | (frac == 1.0), 0.0, out)


def _cospi(x):
    """cos(pi*x) for arrays, exactly zero at half-integer x."""
    x = np.asarray(x, dtype=float)
    frac = np.mod(x, 2.0)
    out = np.cos(np.pi * frac)
    return np.where((frac == 0.5) | (frac == 1.5), 0.0, out)


# ----------------------------------------------------------------------
# trigonometric factors and their frequency decompositions
# ----------------------------------------------------------------------

def _trig_point(n, l_D, d_D, z_D):
    return (_sinpi(n * l_D) - _sinpi(n * d_D)) * _cospi(n * z_D)


def _trig_interval(n, l_D, d_D, z_D1, z_D2):
    return (_sinpi(n * l_D) - _sinpi(n * d_D)) * (_sinpi(n * z_D2) - _sinpi(n * z_D1))


def _norm_freq(kappa, coef, odd):
    """Normalize a frequency (in units of pi) onto [0, 2)."""
    if kappa < 0.0:
        kappa = -kappa
        if odd:
            coef = -coef
    return math.fmod(kappa, 2.0), coef


def _components_point(l_D, d_D, z_D):
    """Angular components of the point trig factor.

    Returns (sin_comps, cos_comps, dc) where each comps list holds
    ``(kappa, coef)`` with the factor ``coef * sin(n pi kappa)`` or
    ``coef * cos(n pi kappa)``; dc is the constant (frequency-free) part.
    """
    raw = [(0.5, l_D + z_D), (0.5, l_D - z_D), (-0.5, d_D + z_D), (-0.5, d_D - z_D)]
    comps = {}
    for coef, kappa in raw:
        km, cf = _norm_freq(kappa, coef, odd=True)
        if km in (0.0, 1.0):
            continue  # sin(n pi km) vanishes identically
        comps[km] = comps.get(km, 0.0) + cf
    return [(k, c) for k, c in comps.items() if c != 0.0], [], 0.0


def _components_interval(l_D, d_D, z_D1, z_D2):
    """Angular components of the interval trig factor (cos type plus DC)."""
    comps = {}
    dc = 0.0
    for sx, X in ((1.0, l_D), (-1.0, d_D)):
        for sy, Y in ((1.0, z_D2), (-1.0, z_D1)):
            s = sx * sy
            for coef, kappa in ((0.5 * s, X - Y), (-0.5 * s, X + Y)):
                km, cf = _norm_freq(kappa, coef, odd=False)
                if km == 0.0:
                    dc += cf
                    continue
                comps[km] = comps.get(km, 0.0) + cf
    return [], [(k, c) for k, c in comps.items() if c != 0.0], dc


# ----------------------------------------------------------------------
# tail machinery
# ----------------------------------------------------------------------

def _tail_oscillatory(km, cvals, N):
    """Evaluate ``sum_{n>N} c(n) exp(i pi km n)`` by iterated summation by
    parts, from samples ``cvals = c(N+1 .. N+J)``.

    Each pass trades one finite difference of the (smooth, slowly varying)
    coefficient for a factor ``x/(1-x)``; the pass count minimizing the
    remainder estimate is used.  Returns (value, error_bound).
    """
    J = len(cvals)
    diffs = np.empty(J, dtype=complex)
    cur = np.array(cvals, dtype=complex)
    diffs[0] = cur[0]
    for m in range(1, J):
        cur = cur[1:] - cur[:-1]
        diffs[m] = cur[0]

    x = cmath.exp(1j * math.pi * km)
    one_minus = 1.0 - x
    phase = math.pi * math.fmod((N + 1) * km, 2.0)
    xn1 = cmath.exp(1j * phase)

    best_m, best_err = 0, math.inf
    value_at = np.empty(J - 1, dtype=complex)
    val = 0.0 + 0.0j
    fac = xn1 / one_minus
    for m in range(J - 1):
        val += diffs[m] * fac
        value_at[m] = val
        fac *= x / one_minus
        err = 2.0 * abs(diffs[m + 1]) / abs(one_minus) ** (m + 2)
        if err < best_err:
            best_m, best_err = m, err
    return value_at[best_m], best_err


_GAUSS_CACHE = {}


def _gauss(order):
    if order not in _GAUSS_CACHE:
        _GAUSS_CACHE[order] = np.polynomial.legendre.leggauss(order)
    return _GAUSS_CACHE[order]


_MEAN_TAIL_OCTAVES = 60


def _tail_mean(cfun, N, boundary_samples, abs_floor):
    """Evaluate ``sum_{n>N} c(n)`` for a smooth decaying coefficient.

    Euler-Maclaurin around ``a = N+1`` with the integral done by
    Gauss-Legendre on octave segments ``[a, 2a], [2a, 4a], ...`` (the
    coefficient varies on multiplicative scales, so each octave is smooth);
    segments stop when the running octave contribution falls below
    `abs_floor`.  `boundary_samples` carries c at ``a-2 .. a+2``.

    Returns (value, error_bound).
    """
    a = N + 1.0
    xs16, ws16 = _gauss(16)
    xs8, ws8 = _gauss(8)

    integral = 0.0 + 0.0j
    quad_err = 0.0
    done = False
    seg = 0
    group = 4
    while seg < _MEAN_TAIL_OCTAVES and not done:
        segs = np.arange(seg, min(seg + group, _MEAN_TAIL_OCTAVES))
        lo = a * 2.0 ** segs
        mid, half = 1.5 * lo, 0.5 * lo
        nodes = np.concatenate([
            (mid[:, None] + half[:, None] * xs16[None, :]).ravel(),
            (mid[:, None] + half[:, None] * xs8[None, :]).ravel(),
        ])
        vals = cfun(nodes)
        n16 = segs.size * 16
        g16 = vals[:n16].reshape(segs.size, 16)
        g8 = vals[n16:].reshape(segs.size, 8)
        for j in range(segs.size):
            s16 = half[j] * np.sum(ws16 * g16[j])
            s8 = half[j] * np.sum(ws8 * g8[j])
            integral += s16
            quad_err += abs(s16 - s8)
            if abs(s16) < abs_floor and segs[j] >= 2:
                done = True
                break
        seg += group
    if not done:
        return integral, math.inf

    ca = boundary_samples[2]
    cp = (boundary_samples[3] - boundary_samples[1]) / 2.0
    cppp = (boundary_samples[4] - 2.0 * boundary_samples[3]
            + 2.0 * boundary_samples[1] - boundary_samples[0]) / 2.0
    value = integral + 0.5 * ca - cp / 12.0
    # leftover octaves are bounded by the last kept octave's size
    err = abs(cppp) / 720.0 + quad_err + 2.0 * abs_floor
    return value, err


def _series_sum(cfun, trig, sin_comps, cos_comps, dc, trig_bound, tol, scale,
                cap, accelerate, exact_truncation):
    """Sum ``sum_{n>=1} c(n) * trig(n)``.

    Parameters
    ----------
    cfun : callable
      Smooth coefficient, complex array for float array n (includes the 1/n
      powers and the Bessel ratio).
    trig : callable
      The oscillatory factor, real array for integer array n.
    sin_comps, cos_comps, dc :
      Frequency decomposition of `trig` for tail evaluation.
    trig_bound : float
      A uniform bound on |trig(n)| for envelope estimates.
    tol : float
      Relative tolerance.
    scale : float
      External magnitude (the n=0 term) entering the relative criterion.
    cap : int
      Hard cap on directly summed terms.
    accelerate : bool
      Permit summation-by-parts tail evaluation.
    exact_truncation : int or None
      When set, sum exactly this many terms and return (no tail logic).

    Returns
    -------
    (value, SeriesDiagnostics)
    """
    if exact_truncation is not None:
        S = 0.0 + 0.0j
        n0 = 1
        while n0 <= exact_truncation:
            n = np.arange(n0, min(n0 + 4096, exact_truncation + 1))
            S += np.sum(cfun(n.astype(float)) * trig(n))
            n0 += 4096
        return S, SeriesDiagnostics(exact_truncation, math.nan, True,
                                    math.nan, False)

    S = 0.0 + 0.0j
    prev_env = None
    next_try = _PARTS_FIRST_TRY
    n0 = 1
    last_abs_bound = math.inf
    while n0 <= cap:
        n = np.arange(n0, min(n0 + _BLOCK, cap + 1))
        cvals = cfun(n.astype(float))
        block_terms = cvals * trig(n)
        block_sum = np.sum(block_terms)
        S += block_sum
        N = int(n[-1])
        n0 = N + 1

        g_last = float(np.abs(cvals[-1])) * trig_bound
        g_prev = float(np.abs(cvals[-2])) * trig_bound
        crit = tol * max(abs(S), scale)

        # envelope exit: both the last block and a decay-envelope tail bound
        # must fall below tolerance
        if g_last == 0.0:
            return S, SeriesDiagnostics(N, 0.0, True, 0.0, False)
        if g_prev > 0.0 and prev_env is not None and N >= 2 * _BLOCK:
            rho = g_last / g_prev
            rho_blk = (g_last / prev_env) ** (1.0 / _BLOCK) if prev_env > 0 else 1.0
            rho = max(rho, rho_blk)
            if rho < 1.0:
                geo = g_last * rho / (1.0 - rho)
                k_loc = -N * math.log(rho)
                poly = g_last * N / (k_loc - 1.0) if k_loc > 1.05 else math.inf
                env = 2.0 * (max(geo, poly) if math.isfinite(poly) else geo)
                last_abs_bound = env
                if env <= crit and abs(block_sum) <= crit:
                    return S, SeriesDiagnostics(N, env, True, env, False)
        prev_env = g_last

        # accelerated tail: evaluate the remainder by parts, keep its bound
        if accelerate and N >= next_try:
            next_try = 2 * N
            nn = np.arange(N - 1.0, N + 1.0 + _DIFF_POINTS)
            samples = cfun(nn)
            cv = samples[2:]
            tail = 0.0 + 0.0j
            err = 0.0
            for km, coef in sin_comps:
                tp, ep = _tail_oscillatory(km, cv, N)
                tm, em = _tail_oscillatory(2.0 - km, cv, N)
                tail += coef * (tp - tm) / 2j
                err += abs(coef) * (ep + em) / 2.0
            for km, coef in cos_comps:
                tp, ep = _tail_oscillatory(km, cv, N)
                tm, em = _tail_oscillatory(2.0 - km, cv, N)
                tail += coef * (tp + tm) / 2.0
                err += abs(coef) * (ep + em) / 2.0
            crit_abs = tol * max(abs(S), scale)
            if dc != 0.0 and err <= crit_abs:
                tdc, edc = _tail_mean(cfun, N, samples[:5],
                                      abs_floor=0.25 * crit_abs / abs(dc))
                tail += dc * tdc
                err += abs(dc) * edc
            last_abs_bound = err
            if err <= tol * max(abs(S), abs(S + tail), scale):
                return S + tail, SeriesDiagnostics(N, err, True, err, True)

    diag = SeriesDiagnostics(cap, last_abs_bound, False, last_abs_bound, False)
    raise SeriesConvergenceError(
        f"mode series did not reach tolerance {tol:g} within {cap} terms",
        diag,
    )


# ----------------------------------------------------------------------
# mode ratio builders
# ----------------------------------------------------------------------

def _check_p(p_prime):
    p = complex(p_prime)
    if not (math.isfinite(p.real) and math.isfinite(p.imag)):
        raise ValueError("p' must be finite")
    if p.real <= 0.0:
        raise ValueError("p' must have positive real part")
    return p


def _ratio_unified(p_prime, beta, r_wD, c2, kpow):
    """c(n) = exp(-(1-r_wD) phi_n) K0hat(phi_n) / Dhat_n / n^kpow."""
    def cfun(n):
        phi = _phi_array(n, p_prime, beta)
        k0h_phi, _ = bessel_k01_scaled_array(phi)
        k0h_w, k1h_w = bessel_k01_scaled_array(r_wD * phi)
        dhat = r_wD * phi * k1h_w + c2 * (r_wD * r_wD) * phi * phi * k0h_w
        expo = -(1.0 - r_wD) * phi
        small = expo.real < -700.0
        scale = np.where(small, 0.0, np.exp(np.where(small, 0.0, expo)))
        return scale * k0h_phi / dhat / n ** kpow
    return cfun


def _ratio_hantush(p_prime, beta, kpow):
    """c(n) = K0(phi_n) / n^kpow, with the exponential carried explicitly."""
    def cfun(n):
        phi = _phi_array(n, p_prime, beta)
        k0h_phi, _ = bessel_k01_scaled_array(phi)
        small = phi.real > 700.0
        scale = np.where(small, 0.0, np.exp(-np.where(small, 0.0, phi)))
        return scale * k0h_phi / n ** kpow
    return cfun


def _term0_finite_radius(p_prime, r_wD, c2):
    """(2/p') K0(phi_0)/D_0 with joint exponential scaling."""
    phi0 = cmath.sqrt(p_prime)
    k0h_phi, _ = bessel_k01_scaled_array(np.array([phi0]))
    k0h_w, k1h_w = bessel_k01_scaled_array(np.array([r_wD * phi0]))
    dhat = (r_wD * phi0 * k1h_w[0]
            + c2 * (r_wD * r_wD) * phi0 * phi0 * k0h_w[0])
    expo = -(1.0 - r_wD) * phi0
    scale = 0.0 if expo.real < -700.0 else cmath.exp(expo)
    return (2.0 / p_prime) * scale * k0h_phi[0] / dhat


def _term0_line_source(p_prime):
    """(2/p') K0(sqrt(p'))."""
    phi0 = cmath.sqrt(p_prime)
    k0h, _ = bessel_k01_scaled_array(np.array([phi0]))
    scale = 0.0 if phi0.real > 700.0 else cmath.exp(-phi0)
    return (2.0 / p_prime) * scale * k0h[0]


# ----------------------------------------------------------------------
# public kernels
# ----------------------------------------------------------------------

def sbar_unified(p_prime, sc, tol=DEFAULT_SERIES_TOL, max_terms=DEFAULT_TERM_CAP,
                 accelerate=True, exact_truncation=None):
    """Laplace transform of point dimensionless drawdown, general case.

    Parameters
    ----------
    p_prime : complex
      Laplace variable conjugate to t_s, Re > 0.
    sc : DimensionlessScenario
      Must carry a point observation depth ``z_D``.
    tol : float
      Relative truncation tolerance of the mode series.
    max_terms : int
      Hard cap on directly summed modes.
    accelerate : bool
      Allow summation-by-parts tail evaluation (needed at the well face).
    exact_truncation : int, optional
      Testing hook: sum exactly this many modes with no tail treatment.

    Returns
    -------
    (value, SeriesDiagnostics)
    """
    p = _check_p(p_prime)
    if sc.z_D is None:
        raise ValueError("sbar_unified needs a point observation z_D")
    c2 = sc.C_wD / (2.0 * (sc.l_D - sc.d_D))
    term0 = _term0_finite_radius(p, sc.r_wD, c2)
    if sc.fully_penetrating and exact_truncation is None:
        return term0, SeriesDiagnostics(0, 0.0, True, 0.0, False)
    pref = 4.0 / (p * math.pi * (sc.l_D - sc.d_D))
    sin_c, cos_c, dc = _components_point(sc.l_D, sc.d_D, sc.z_D)
    value, diag = _series_sum(
        _ratio_unified(p, sc.beta, sc.r_wD, c2, 1),
        lambda n: _trig_point(n, sc.l_D, sc.d_D, sc.z_D),
        sin_c, cos_c, dc,
        trig_bound=2.0,
        tol=tol,
        scale=abs(term0) / max(abs(pref), 1e-300),
        cap=max_terms,
        accelerate=accelerate,
        exact_truncation=exact_truncation,
    )
    total = term0 + pref * value
    rel = _relative_tail(diag, pref, total)
    return total, rel


def sbar_averaged(p_prime, sc, z_D1, z_D2, tol=DEFAULT_SERIES_TOL,
                  max_terms=DEFAULT_TERM_CAP, accelerate=True,
                  exact_truncation=None):
    """Laplace transform of drawdown averaged over depths [z_D1, z_D2].

    The closed-form depth integration replaces ``cos(n pi z_D)`` with
    ``[sin(n pi z_D2) - sin(n pi z_D1)] / (n pi (z_D2 - z_D1))``; the n = 0
    term is unchanged.  Averaging over the full thickness [0, 1] leaves the
    n = 0 term alone (mode orthogonality), which is taken as a shortcut.
    """
    return _averaged_kernel(p_prime, sc, z_D1, z_D2, "unified", tol,
                            max_terms, accelerate, exact_truncation)


def _averaged_kernel(p_prime, sc, z_D1, z_D2, which, tol=DEFAULT_SERIES_TOL,
                     max_terms=DEFAULT_TERM_CAP, accelerate=True,
                     exact_truncation=None):
    """Interval-averaged transform for the unified/yang/hantush denominators."""
    p = _check_p(p_prime)
    if not (0.0 <= z_D1 < z_D2 <= 1.0):
        raise ValueError("averaging interval requires 0 <= z_D1 < z_D2 <= 1")
    c2 = sc.C_wD / (2.0 * (sc.l_D - sc.d_D))
    if which == "unified":
        term0 = _term0_finite_radius(p, sc.r_wD, c2)
        cfun = _ratio_unified(p, sc.beta, sc.r_wD, c2, 2)
    elif which == "yang":
        term0 = _term0_finite_radius(p, sc.r_wD, 0.0)
        cfun = _ratio_unified(p, sc.beta, sc.r_wD, 0.0, 2)
    elif which == "hantush":
        term0 = _term0_line_source(p)
        cfun = _ratio_hantush(p, sc.beta, 2)
    else:  # pragma: no cover
        raise ValueError(f"unknown kernel {which!r}")
    full_depth = z_D1 == 0.0 and z_D2 == 1.0
    if (sc.fully_penetrating or full_depth) and exact_truncation is None:
        return term0, SeriesDiagnostics(0, 0.0, True, 0.0, False)
    pref = 4.0 / (p * math.pi ** 2 * (sc.l_D - sc.d_D) * (z_D2 - z_D1))
    sin_c, cos_c, dc = _components_interval(sc.l_D, sc.d_D, z_D1, z_D2)
    value, diag = _series_sum(
        cfun,
        lambda n: _trig_interval(n, sc.l_D, sc.d_D, z_D1, z_D2),
        sin_c, cos_c, dc,
        trig_bound=4.0,
        tol=tol,
        scale=abs(term0) / max(abs(pref), 1e-300),
        cap=max_terms,
        accelerate=accelerate,
        exact_truncation=exact_truncation,
    )
    total = term0 + pref * value
    return total, _relative_tail(diag, pref, total)


def _relative_tail(diag, pref, total):
    if not math.isfinite(diag.tail_estimate_abs):
        return diag
    abs_tail = abs(pref) * diag.tail_estimate_abs
    rel = abs_tail / max(abs(total), 1e-300)
    return SeriesDiagnostics(diag.terms_used, rel, diag.converged, abs_tail,
                             diag.accelerated)


def sbar_papadopulos_cooper(p_prime, r_wD, C_wD):
    """Fully penetrating finite-radius well with storage (closed form).

    ``(2/p') K0(sqrt p') / [r_wD sqrt(p') K1(r_wD sqrt p')
    + (C_wD/2) r_wD^2 p' K0(r_wD sqrt p')]``
    """
    p = _check_p(p_prime)
    if not (0.0 < r_wD <= 1.0):
        raise ValueError("r_wD must lie in (0, 1]")
    if C_wD < 0.0:
        raise ValueError("C_wD must be >= 0")
    return _term0_finite_radius(p, r_wD, C_wD / 2.0)


def sbar_yang(p_prime, sc, tol=DEFAULT_SERIES_TOL, max_terms=DEFAULT_TERM_CAP,
              accelerate=True, exact_truncation=None):
    """Partially penetrating finite-radius well without storage.

    Same series as `sbar_unified` with the storage term absent from every
    mode denominator: ``D_n = r_wD phi_n K1(r_wD phi_n)``.
    """
    p = _check_p(p_prime)
    if sc.z_D is None:
        raise ValueError("sbar_yang needs a point observation z_D")
    term0 = _term0_finite_radius(p, sc.r_wD, 0.0)
    if sc.fully_penetrating and exact_truncation is None:
        return term0, SeriesDiagnostics(0, 0.0, True, 0.0, False)
    pref = 4.0 / (p * math.pi * (sc.l_D - sc.d_D))
    sin_c, cos_c, dc = _components_point(sc.l_D, sc.d_D, sc.z_D)
    value, diag = _series_sum(
        _ratio_unified(p, sc.beta, sc.r_wD, 0.0, 1),
        lambda n: _trig_point(n, sc.l_D, sc.d_D, sc.z_D),
        sin_c, cos_c, dc,
        trig_bound=2.0,
        tol=tol,
        scale=abs(term0) / max(abs(pref), 1e-300),
        cap=max_terms,
        accelerate=accelerate,
        exact_truncation=exact_truncation,
    )
    total = term0 + pref * value
    return total, _relative_tail(diag, pref, total)


def sbar_hantush(p_prime, sc, tol=DEFAULT_SERIES_TOL, max_terms=DEFAULT_TERM_CAP,
                 accelerate=True, exact_truncation=None):
    """Partially penetrating zero-radius well (no storage).

    The small-radius limit of the general case: ``x K1(x) -> 1`` and
    ``x^2 K0(x) -> 0`` turn every mode denominator into 1.
    """
    p = _check_p(p_prime)
    if sc.z_D is None:
        raise ValueError("sbar_hantush needs a point observation z_D")
    term0 = _term0_line_source(p)
    if sc.fully_penetrating and exact_truncation is None:
        return term0, SeriesDiagnostics(0, 0.0, True, 0.0, False)
    pref = 4.0 / (p * math.pi * (sc.l_D - sc.d_D))
    sin_c, cos_c, dc = _components_point(sc.l_D, sc.d_D, sc.z_D)
    value, diag = _series_sum(
        _ratio_hantush(p, sc.beta, 1),
        lambda n: _trig_point(n, sc.l_D, sc.d_D, sc.z_D),
        sin_c, cos_c, dc,
        trig_bound=2.0,
        tol=tol,
        scale=abs(term0) / max(abs(pref), 1e-300),
        cap=max_terms,
        accelerate=accelerate,
        exact_truncation=exact_truncation,
    )
    total = term0 + pref * value
    return total, _relative_tail(diag, pref, total)


def sbar_theis(p_prime):
    """Fully penetrating line source: ``(2/p') K0(sqrt p')``."""
    p = _check_p(p_prime)
    return _term0_line_source(p)


def mode_term(n, p_prime, sc):
    """The n-th series mode of the unified solution, for inspection.

    Returns a `ModeTerm` whose numerator/denominator ratio equals
    ``K0(phi_n) [sin(n pi l_D) - sin(n pi d_D)] cos(n pi z_D) / (n D_n)``.
    """
    if n < 1:
        raise ValueError("series modes start at n = 1")
    p = _check_p(p_prime)
    if sc.z_D is None:
        raise ValueError("mode_term needs a point observation z_D")
    phi = phi_n(n, p, sc.beta)
    c2 = sc.C_wD / (2.0 * (sc.l_D - sc.d_D))
    k0h_phi, _ = bessel_k01_scaled_array(np.array([phi]))
    k0h_w, k1h_w = bessel_k01_scaled_array(np.array([sc.r_wD * phi]))
    dhat = (sc.r_wD * phi * k1h_w[0]
            + c2 * sc.r_wD ** 2 * phi * phi * k0h_w[0])
    expo = -(1.0 - sc.r_wD) * phi
    scale = 0.0 if expo.real < -700.0 else cmath.exp(expo)
    trig = float(_trig_point(np.array([n]), sc.l_D, sc.d_D, sc.z_D)[0])
    numerator = scale * k0h_phi[0] * trig / n
    return ModeTerm(n=n, phi_n=phi, numerator=numerator, denominator=dhat)
