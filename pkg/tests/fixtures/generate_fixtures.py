#!/usr/bin/env python3
"""Regenerate the arbitrary-precision reference fixtures.

Every reference value in the JSON files next to this script (and the small
packaged check set under ``src/wellflow/data``) is produced here with mpmath
at the precision recorded in each file's metadata.  The evaluators below are
written straight from the closed-form expressions, independently of the
shipped library (which is never imported here), and sum series by brute
force; fixtures therefore test the library against a second implementation
path at a much higher working precision.

Run from the repository root:

    python3 tests/fixtures/generate_fixtures.py

Regeneration is deterministic: identical parameters reproduce identical
files at the printed precision.
"""

import json
import math
import sys
import time
from pathlib import Path

import mpmath as mp

HERE = Path(__file__).resolve().parent
PKG_DATA = HERE.parent.parent / "src" / "wellflow" / "data"

BESSEL_DPS = 40
SERIES_DPS = 30
GOLDEN_DPS = 30
GOLDEN_DEGREE = 30

#: brute-force mode count for the slow well-face series; the sign pattern of
#: the trigonometric factor makes the grouped tail fall off like N^-4, so
#: this count leaves a remainder far below the fixture print precision
WELL_FACE_TERMS = 131072


def _c(x):
    return {"re": mp.nstr(x.real, 22), "im": mp.nstr(x.imag, 22)}


def _num(x):
    return mp.nstr(mp.mpf(x), 22)


# ----------------------------------------------------------------------
# independent transform evaluators (brute force, arbitrary precision)
# ----------------------------------------------------------------------

def sbar_pc(p, r_wD, C_wD):
    s = mp.sqrt(p)
    den = (r_wD * s * mp.besselk(1, r_wD * s)
           + C_wD / 2 * r_wD ** 2 * p * mp.besselk(0, r_wD * s))
    return (2 / p) * mp.besselk(0, s) / den


def _phi(n, p, beta):
    return mp.sqrt(p + (beta * mp.pi * n) ** 2)


def _den(phi, r_wD, C_wD, l_D, d_D):
    return (r_wD * phi * mp.besselk(1, r_wD * phi)
            + C_wD / (2 * (l_D - d_D)) * r_wD ** 2 * phi ** 2
            * mp.besselk(0, r_wD * phi))


def sbar_series(p, r_D, r_wD, C_wD, d_D, l_D, K_D, obs, kind="unified",
                terms=None, adaptive_rel=None):
    """Brute-force mode sum.

    obs: ("point", z_D) or ("interval", z1, z2); kind: unified|yang|hantush.
    With `terms` set, sums exactly that many modes; otherwise sums until 200
    consecutive terms are below `adaptive_rel` of the running total.
    """
    beta = r_D * mp.sqrt(K_D)
    C_eff = mp.mpf(0) if kind in ("yang", "hantush") else mp.mpf(C_wD)
    phi0 = _phi(0, p, beta)
    if kind == "hantush":
        term0 = (2 / p) * mp.besselk(0, phi0)
    else:
        term0 = (2 / p) * mp.besselk(0, phi0) / _den(phi0, r_wD, C_eff, l_D, d_D)

    if obs[0] == "point":
        z_D = obs[1]
        pref = 4 / (p * mp.pi * (l_D - d_D))

        def trig(n):
            return ((mp.sinpi(n * l_D) - mp.sinpi(n * d_D))
                    * mp.cospi(n * z_D))

        npow = 1
    else:
        z1, z2 = obs[1], obs[2]
        pref = 4 / (p * mp.pi ** 2 * (l_D - d_D) * (z2 - z1))

        def trig(n):
            return ((mp.sinpi(n * l_D) - mp.sinpi(n * d_D))
                    * (mp.sinpi(n * z2) - mp.sinpi(n * z1)))

        npow = 2

    S = mp.mpf(0)
    S_half = None
    quiet = 0
    n = 0
    cap = terms if terms is not None else 2_000_000
    while n < cap:
        n += 1
        phi = _phi(n, p, beta)
        if kind == "hantush":
            ratio = mp.besselk(0, phi)
        else:
            ratio = mp.besselk(0, phi) / _den(phi, r_wD, C_eff, l_D, d_D)
        term = ratio * trig(n) / n ** npow
        S += term
        if terms is not None and n == terms // 2:
            S_half = S
        if terms is None:
            if abs(term) < adaptive_rel * max(abs(S), abs(term0 / pref)):
                quiet += 1
                if quiet >= 200 and n >= 400:
                    break
            else:
                quiet = 0
    total = term0 + pref * S
    half = term0 + pref * S_half if S_half is not None else None
    return total, n, half


# ----------------------------------------------------------------------
# fixture builders
# ----------------------------------------------------------------------

def gen_bessel(path, n_mag, args_list):
    mp.mp.dps = BESSEL_DPS
    points = []
    for i in range(n_mag):
        m = mp.mpf(10) ** (mp.mpf(-6) + mp.mpf(9) * i / (n_mag - 1))
        for a in args_list:
            z = m * mp.exp(1j * mp.mpf(a))
            k0e = mp.besselk(0, z) * mp.exp(z)
            k1e = mp.besselk(1, z) * mp.exp(z)
            points.append({
                "z_re": mp.nstr(z.real, 22), "z_im": mp.nstr(z.imag, 22),
                "k0e_re": mp.nstr(k0e.real, 22), "k0e_im": mp.nstr(k0e.imag, 22),
                "k1e_re": mp.nstr(k1e.real, 22), "k1e_im": mp.nstr(k1e.imag, 22),
            })
    doc = {
        "metadata": {
            "generator": "tests/fixtures/generate_fixtures.py",
            "oracle": f"mpmath {mp.__version__} besselk, scaled by exp(z)",
            "dps": BESSEL_DPS,
            "grid": f"{n_mag} log-spaced magnitudes in [1e-6, 1e3] x args {args_list}",
        },
        "points": points,
    }
    path.write_text(json.dumps(doc, indent=1) + "\n")
    print(f"wrote {path} ({len(points)} points)", flush=True)


def gen_e1(path):
    mp.mp.dps = BESSEL_DPS
    us = []
    for i in range(58):
        us.append(mp.mpf(10) ** (mp.mpf(-10) + (mp.log10(mp.mpf(50)) + 10) * i / 57))
    us += [mp.mpf(1), mp.mpf("0.025")]
    points = [{"u": mp.nstr(u, 22), "e1": mp.nstr(mp.e1(u), 22)} for u in us]
    doc = {
        "metadata": {
            "generator": "tests/fixtures/generate_fixtures.py",
            "oracle": f"mpmath {mp.__version__} e1",
            "dps": BESSEL_DPS,
        },
        "points": points,
    }
    path.write_text(json.dumps(doc, indent=1) + "\n")
    print(f"wrote {path} ({len(points)} points)", flush=True)


FIG2 = dict(r_D="0.02", r_wD="1", C_wD="100", d_D="0", l_D="0.5", K_D="1")
FIG4 = dict(r_D="0.2", r_wD="0.1", C_wD="100", d_D="0", l_D="0.5", K_D="1")
FIG6 = dict(r_D="0.2", r_wD="0.1", C_wD="100", d_D="0", l_D="0.25", K_D="0.1")


def _mpf_params(d):
    return {k: mp.mpf(v) for k, v in d.items()}


def gen_sbar(path):
    mp.mp.dps = SERIES_DPS
    records = []

    def record(rid, kind, params, obs, p, terms=None, adaptive_rel=None):
        t0 = time.time()
        pp = _mpf_params(params)
        if kind == "pc":
            val, used, half = sbar_pc(mp.mpc(p), pp["r_wD"], pp["C_wD"]), 0, None
        else:
            val, used, half = sbar_series(
                mp.mpc(p), pp["r_D"], pp["r_wD"], pp["C_wD"], pp["d_D"],
                pp["l_D"], pp["K_D"], obs, kind=kind, terms=terms,
                adaptive_rel=adaptive_rel)
        rec = {
            "id": rid,
            "kind": kind,
            "params": params,
            "observation": list(obs) if obs else None,
            "p_re": _num(mp.mpc(p).real), "p_im": _num(mp.mpc(p).imag),
            "value": _c(mp.mpc(val)),
            "terms": used,
            "dps": SERIES_DPS,
        }
        if half is not None:
            delta = abs(val - half) / abs(val)
            rec["half_terms_rel_delta"] = mp.nstr(delta, 8)
        records.append(rec)
        print(f"  sbar {rid}: {used} terms, {time.time()-t0:.1f} s", flush=True)

    record("pc_fig2_p1", "pc", {k: FIG2[k] for k in ("r_wD", "C_wD")},
           None, "1")
    record("hantush_spec_p1", "hantush",
           dict(r_D="0.2", r_wD="0.001", C_wD="0", d_D="0", l_D="0.5", K_D="1"),
           ("point", mp.mpf("0.25")), "1", adaptive_rel=mp.mpf("1e-34"))
    record("unified_fig2_point_p1", "unified", FIG2,
           ("point", mp.mpf("0.25")), "1", terms=WELL_FACE_TERMS)
    record("yang_fig2_point_p1", "yang", FIG2,
           ("point", mp.mpf("0.25")), "1", terms=WELL_FACE_TERMS)
    record("unified_fig2_avg_p1", "unified", FIG2,
           ("interval", mp.mpf("0"), mp.mpf("0.5")), "1",
           terms=WELL_FACE_TERMS)
    record("unified_fig4_point_complex", "unified", FIG4,
           ("point", mp.mpf("0.5")), "2+3j", adaptive_rel=mp.mpf("1e-34"))
    record("unified_fig4_avg_complex", "unified", FIG4,
           ("interval", mp.mpf("0.2"), mp.mpf("0.8")), "2+3j",
           adaptive_rel=mp.mpf("1e-34"))
    record("unified_fig6_point", "unified", FIG6,
           ("point", mp.mpf("0.5")), "0.5+1j", adaptive_rel=mp.mpf("1e-34"))

    doc = {
        "metadata": {
            "generator": "tests/fixtures/generate_fixtures.py",
            "oracle": f"mpmath {mp.__version__} brute-force series",
            "dps": SERIES_DPS,
            "well_face_terms": WELL_FACE_TERMS,
            "note": "half_terms_rel_delta is the observed change from "
                    "doubling the mode count, an empirical truncation bound",
        },
        "records": records,
    }
    path.write_text(json.dumps(doc, indent=1) + "\n")
    print(f"wrote {path} ({len(records)} records)", flush=True)


def gen_golden_times(path):
    mp.mp.dps = GOLDEN_DPS
    records = []

    def invert(rid, F, t_s, params, kind, obs):
        t0 = time.time()
        val = mp.invertlaplace(F, mp.mpf(t_s), method="dehoog",
                               degree=GOLDEN_DEGREE)
        records.append({
            "id": rid,
            "kind": kind,
            "params": params,
            "observation": list(obs) if obs else None,
            "t_s": _num(t_s),
            "s_D": _num(val),
            "dps": GOLDEN_DPS,
            "degree": GOLDEN_DEGREE,
        })
        print(f"  golden {rid} t_s={t_s}: {mp.nstr(val, 12)} "
              f"({time.time()-t0:.1f} s)", flush=True)

    pp = _mpf_params(FIG4)
    for t_s in ("1", "100"):
        invert(f"fig4_unified_t{t_s}",
               lambda p: sbar_series(p, pp["r_D"], pp["r_wD"], pp["C_wD"],
                                     pp["d_D"], pp["l_D"], pp["K_D"],
                                     ("point", mp.mpf("0.5")),
                                     adaptive_rel=mp.mpf("1e-30"))[0],
               t_s, FIG4, "unified", ("point", "0.5"))
    invert("fig4_hantush_t10",
           lambda p: sbar_series(p, pp["r_D"], pp["r_wD"], pp["C_wD"],
                                 pp["d_D"], pp["l_D"], pp["K_D"],
                                 ("point", mp.mpf("0.5")), kind="hantush",
                                 adaptive_rel=mp.mpf("1e-30"))[0],
           "10", FIG4, "hantush", ("point", "0.5"))
    pw = _mpf_params(FIG2)
    for t_s in ("0.0001", "1", "10000"):
        invert(f"fig2_pc_t{t_s}",
               lambda p: sbar_pc(p, pw["r_wD"], pw["C_wD"]),
               t_s, {k: FIG2[k] for k in ("r_wD", "C_wD")}, "pc", None)

    doc = {
        "metadata": {
            "generator": "tests/fixtures/generate_fixtures.py",
            "oracle": f"mpmath {mp.__version__} invertlaplace(method='dehoog') "
                      "over brute-force transforms",
            "dps": GOLDEN_DPS,
            "degree": GOLDEN_DEGREE,
        },
        "records": records,
    }
    path.write_text(json.dumps(doc, indent=1) + "\n")
    print(f"wrote {path} ({len(records)} records)", flush=True)


def main():
    t0 = time.time()
    HERE.mkdir(parents=True, exist_ok=True)
    PKG_DATA.mkdir(parents=True, exist_ok=True)
    gen_e1(HERE / "e1.json")
    gen_bessel(HERE / "bessel_k.json", 25,
               ["0", "0.3", "-0.3", "0.7", "-0.7", "1.1", "-1.1", "1.45"])
    gen_bessel(PKG_DATA / "bessel_check.json", 10,
               ["0", "0.5", "-0.5", "1.0", "-1.0", "1.4"])
    gen_sbar(HERE / "sbar_laplace.json")
    gen_golden_times(HERE / "golden_times.json")
    print(f"done in {time.time()-t0:.0f} s", flush=True)


if __name__ == "__main__":
    sys.exit(main())
