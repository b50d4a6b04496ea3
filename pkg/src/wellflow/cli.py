"""Command line: curve/table generation, reference figure families,
verification suites, and debug evaluation.

Subcommands
-----------
curve    generate one drawdown curve from a scenario file
figure   emit the CSVs of a reference curve family (2..7)
check    run a verification suite and print a report table
eval     evaluate a special function or invert a named analytic pair

Exit codes: 0 success, 1 validation error, 2 numerical failure,
3 check-suite failure.
"""

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .kernel import SeriesConvergenceError
from .laplace import ANALYTIC_PAIRS, InversionConfig, InversionError, invert_at
from .scenario import ValidationError, load_scenario
from .special import DomainError, bessel_k0, bessel_k1, exp_integral_e1
from .timedomain import ModelVariant, curve, write_curve_csv
from . import figures, verify

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_NUMERICAL = 2
EXIT_CHECK_FAILED = 3


@dataclass(frozen=True)
class RunManifest:
    """Everything that determines a curve run's output."""

    scenario_path: str
    subcommand: str
    variant: str
    t_s_min: float
    t_s_max: float
    points_per_decade: int
    inv_terms: int
    tolerance: float
    out_path: str


def _inversion_config(args):
    kw = {}
    if args.inv_terms is not None:
        kw["terms_M"] = args.inv_terms
    if args.tol is not None:
        kw["tolerance"] = args.tol
    return InversionConfig(**kw)


def _cmd_curve(args):
    manifest = RunManifest(
        scenario_path=args.scenario,
        subcommand="curve",
        variant=args.variant,
        t_s_min=args.ts_min,
        t_s_max=args.ts_max,
        points_per_decade=args.per_decade,
        inv_terms=args.inv_terms or InversionConfig().terms_M,
        tolerance=args.tol or InversionConfig().tolerance,
        out_path=args.out,
    )
    sc = load_scenario(manifest.scenario_path)
    variant = ModelVariant(manifest.variant)
    cfg = _inversion_config(args)
    crv = curve(sc, variant, manifest.t_s_min, manifest.t_s_max,
                manifest.points_per_decade, cfg=cfg)
    with open(manifest.out_path, "w", encoding="utf-8", newline="\n") as fh:
        write_curve_csv(crv, fh, cfg=cfg)
    print(f"wrote {manifest.out_path} ({len(crv.points)} points)")
    return EXIT_OK


def _cmd_figure(args):
    n = args.number
    if n not in figures.FIGURE_NUMBERS:
        raise ValidationError(
            f"figure number must be one of {figures.FIGURE_NUMBERS}, got {n}")
    cfg = _inversion_config(args)
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    ts_min, ts_max = figures.DEFAULT_T_RANGE
    if args.ts_min is not None:
        ts_min = args.ts_min
    if args.ts_max is not None:
        ts_max = args.ts_max
    written = []
    for label, sc, variant in figures.figure_family(n):
        crv = curve(sc, variant, ts_min, ts_max, args.per_decade, cfg=cfg)
        path = outdir / f"figure{n}_{label}.csv"
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            write_curve_csv(crv, fh, cfg=cfg)
        written.append(path)
    for path in written:
        print(f"wrote {path}")
    return EXIT_OK


def _cmd_check(args):
    if args.suite not in verify.SUITE_NAMES:
        print(f"error: unknown suite {args.suite!r}; "
              f"choose from {', '.join(verify.SUITE_NAMES)}", file=sys.stderr)
        return EXIT_VALIDATION
    reports = verify.run_suite(args.suite)
    width = max(len(r.name) for r in reports)
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status}  {r.name:<{width}}  max_rel_err={r.max_rel_error:.3e}  "
              f"tol={r.tolerance:.1e}  worst@{r.worst_location}  [{r.scenario_id}]")
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("name,scenario_id,max_rel_error,tolerance,passed,worst_location\n")
            for r in reports:
                fh.write(f"{r.name},{r.scenario_id},{r.max_rel_error:.17g},"
                         f"{r.tolerance:.17g},{int(r.passed)},{r.worst_location}\n")
        print(f"wrote {args.out}")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_CHECK_FAILED


def _cmd_eval(args):
    kind = args.kind
    if kind == "k0":
        v = bessel_k0(complex(args.args[0]) if "j" in args.args[0]
                      else float(args.args[0]))
        print(_fmt_complex(v))
    elif kind == "k1":
        v = bessel_k1(complex(args.args[0]) if "j" in args.args[0]
                      else float(args.args[0]))
        print(_fmt_complex(v))
    elif kind == "e1":
        print(f"{exp_integral_e1(float(args.args[0])):.15g}")
    elif kind == "invert-pair":
        if len(args.args) != 2:
            raise ValidationError("invert-pair needs: <pair-name> <t>")
        name, t = args.args[0], float(args.args[1])
        if name not in ANALYTIC_PAIRS:
            raise ValidationError(
                f"unknown pair {name!r}; choose from {', '.join(ANALYTIC_PAIRS)}")
        F, f = ANALYTIC_PAIRS[name]
        got = invert_at(F, t)
        print(f"{got:.15g}  (analytic {f(t):.15g})")
    else:
        raise ValidationError(
            f"unknown eval kind {kind!r}; choose from k0, k1, e1, invert-pair")
    return EXIT_OK


def _fmt_complex(v):
    if v.imag == 0.0:
        return f"{v.real:.15g}"
    return f"{v.real:.15g}{v.imag:+.15g}j"


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="wellflow",
        description="Type curves for a partially penetrating well with "
                    "wellbore storage in an anisotropic confined aquifer.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("curve", help="generate a drawdown curve CSV")
    p.add_argument("--scenario", required=True, help="scenario JSON file")
    p.add_argument("--variant", default="unified",
                   choices=[v.value for v in ModelVariant])
    p.add_argument("--ts-min", type=float, default=1e-6, dest="ts_min")
    p.add_argument("--ts-max", type=float, default=1e6, dest="ts_max")
    p.add_argument("--per-decade", type=int, default=20, dest="per_decade")
    p.add_argument("--out", required=True, help="output CSV path")
    p.add_argument("--inv-terms", type=int, default=None, dest="inv_terms")
    p.add_argument("--tol", type=float, default=None)
    p.set_defaults(func=_cmd_curve)

    p = sub.add_parser("figure", help="emit a reference curve family")
    p.add_argument("number", type=int, help="figure family number, 2..7")
    p.add_argument("--out", default=".", help="output directory")
    p.add_argument("--per-decade", type=int, default=20, dest="per_decade")
    p.add_argument("--ts-min", type=float, default=None, dest="ts_min")
    p.add_argument("--ts-max", type=float, default=None, dest="ts_max")
    p.add_argument("--inv-terms", type=int, default=None, dest="inv_terms")
    p.add_argument("--tol", type=float, default=None)
    p.set_defaults(func=_cmd_figure)

    p = sub.add_parser("check", help="run a verification suite")
    p.add_argument("suite", help=f"one of: {', '.join(verify.SUITE_NAMES)}")
    p.add_argument("--out", default=None, help="also write a CSV report")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("eval", help="evaluate a special function or pair")
    p.add_argument("kind", help="k0 | k1 | e1 | invert-pair")
    p.add_argument("args", nargs="+", help="arguments for the evaluation")
    p.set_defaults(func=_cmd_eval)
    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValidationError, DomainError, ValueError) as exc:
        print(f"error: validation: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (InversionError, SeriesConvergenceError, FloatingPointError) as exc:
        print(f"error: numerical: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
