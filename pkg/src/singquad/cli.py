"""Command-line interface.

    singquad example 1 --alpha 0.5 --nmin 10 --nmax 600 --out ex1.csv
    singquad sweep --spec "power(0.4, 0, 0.5)" --out sweep.csv
    singquad predict --spec "power(0.4, 0, 0.5)" --n 200
    singquad recommend --spec "power(0.4, 1, 1)" --nmin 100 --nmax 200

With --check, a sweep exits nonzero if any scaled coefficient violates
the closed-form envelope (power families with attained bounds only).
"""

from __future__ import annotations

import argparse
import math
import sys

from .error_predictor import (PredictorConfig, leading_term,
                              predicted_order, psi0_solve, recommend_n)
from .experiments import (SweepConfig, example_integrand, report,
                          run_sweep)
from .reference_oracle import exact_integral
from .singularity_model import Power, parse_integrand


def _load_config_file(path: str) -> dict:
    out = {}
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, _, val = line.partition("=")
            out[key.strip()] = val.strip()
    return out


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--nmin", type=int, default=10)
    p.add_argument("--nmax", type=int, default=600)
    p.add_argument("--out", default=None, help="CSV output path")
    p.add_argument("--check", action="store_true",
                   help="exit nonzero on envelope violations")
    p.add_argument("--M", type=float, default=10.0,
                   help="truncation constant of the prediction integral")
    p.add_argument("--config", default=None,
                   help="key=value file; command-line flags override it")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="singquad",
        description="Gauss-Legendre error prediction for singular integrands")
    sub = parser.add_subparsers(dest="command", required=True)

    p_ex = sub.add_parser("example", help="reproduce a stock experiment")
    p_ex.add_argument("id", type=int, choices=range(1, 6))
    p_ex.add_argument("--alpha", type=float, default=0.5)
    p_ex.add_argument("--k", type=int, default=0)
    p_ex.add_argument("--b", type=float, default=0.4)
    p_ex.add_argument("--variant", type=int, default=1, choices=(1, 2))
    _add_common(p_ex)

    p_sw = sub.add_parser("sweep", help="sweep n for a custom integrand")
    p_sw.add_argument("--spec", required=True)
    _add_common(p_sw)

    p_pr = sub.add_parser("predict", help="predict the error at one n")
    p_pr.add_argument("--spec", required=True)
    p_pr.add_argument("--n", type=int, required=True)
    p_pr.add_argument("--M", type=float, default=10.0)
    p_pr.add_argument("--config", default=None)

    p_rec = sub.add_parser("recommend", help="rank quadrature sizes")
    p_rec.add_argument("--spec", required=True)
    p_rec.add_argument("--nmin", type=int, required=True)
    p_rec.add_argument("--nmax", type=int, required=True)
    p_rec.add_argument("--top", type=int, default=10)
    p_rec.add_argument("--M", type=float, default=10.0)
    p_rec.add_argument("--config", default=None)
    return parser


def _apply_config_file(args: argparse.Namespace, argv: list[str]) -> None:
    if getattr(args, "config", None) is None:
        return
    overrides = {a.lstrip("-").split("=")[0] for a in argv if a.startswith("--")}
    for key, val in _load_config_file(args.config).items():
        if key in overrides or not hasattr(args, key):
            continue
        current = getattr(args, key)
        caster = type(current) if current is not None else str
        setattr(args, key, caster(val))


def _sweep_command(f, args) -> int:
    cfg = SweepConfig(integrand=f, n_min=args.nmin, n_max=args.nmax,
                      predictor=PredictorConfig(M=args.M), out=args.out)
    records = run_sweep(cfg)
    sys.stdout.write(report(records, cfg))
    if args.check:
        bad = [r for r in records
               if not math.isnan(r.bound_lo)
               and not r.bound_lo <= r.scaled_coeff <= r.bound_hi
               and r.n >= 100 and not r.floored]
        if bad:
            sys.stderr.write(f"check failed: {len(bad)} envelope "
                             f"violations at n >= 100\n")
            return 1
    return 0


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    _apply_config_file(args, argv)

    if args.command == "example":
        f = example_integrand(args.id, alpha=args.alpha, k=args.k,
                              b=args.b, variant=args.variant)
        return _sweep_command(f, args)

    if args.command == "sweep":
        return _sweep_command(parse_integrand(args.spec), args)

    if args.command == "predict":
        f = parse_integrand(args.spec)
        cfg = PredictorConfig(M=args.M)
        lead = leading_term(f, args.n, cfg)
        order = predicted_order(f)
        exact = exact_integral(f)
        print(f"integral (oracle, {exact.method}): {exact.value:.15g}")
        print(f"predicted leading error at n = {args.n}: {lead:.6e}")
        log_tag = " (with log n factor)" if order.order_log_factor else ""
        print(f"predicted order: n^-{order.order_exponent:g}{log_tag}; "
              f"higher-order regime: n^-{order.regime_exponent:g}"
              + (" log n" if order.regime_log_factor else ""))
        if order.coefficient_bounds is not None:
            cb = order.coefficient_bounds
            kind = "attained" if cb.attained else "strict"
            print(f"scaled-coefficient bounds ({kind}): "
                  f"[{cb.lower:.6g}, {cb.upper:.6g}]")
            if isinstance(f.family, Power) and f.family.k % 4 in (0, 2):
                print(f"phase root cos(Psi0) = "
                      f"{psi0_solve(f.family.k, f.family.alpha):.6f} "
                      "(crude rule: 0)")
        return 0

    if args.command == "recommend":
        f = parse_integrand(args.spec)
        best = recommend_n(f, args.nmin, args.nmax,
                           PredictorConfig(M=args.M))[:args.top]
        print(" ".join(str(n) for n in best))
        return 0

    return 2


if __name__ == "__main__":
    sys.exit(main())
