"""Command-line front end: ``gauss-bs figure | verify | cascade``.

Exit codes: 0 success, 1 property violation, 2 usage or config error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import csvio, figures
from .cascade import depletion_run, limit_totals, split_tree
from .config import ConfigError, load_config
from .exceptions import GaussBSError
from .measures import nonclassical_depth, nonclassicality
from .verify import format_results, run_all

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2

# which overrides each figure accepts, mapped to builder keyword names
_FIGURE_OPTIONS = {
    "fig2": {"lambda1_min", "purity"},
    "fig3": {"lambda1_min", "purity"},
    "fig4a": {"lambda1_min", "purity"},
    "fig4b": {"purity"},
    "fig5": {"lambda1_min", "purity", "n_thermal"},
    "fig6": {"lambda1_min", "lambda2_min", "purity"},
}


def _fail(msg: str, code: int = EXIT_USAGE) -> int:
    print(f"gauss-bs: error: {msg}", file=sys.stderr)
    return code


def _write(path: str, header, rows) -> Optional[int]:
    try:
        csvio.write_csv(path, header, rows)
    except OSError as exc:
        return _fail(f"cannot write {path}: {exc.strerror}")
    return None


def cmd_figure(args: argparse.Namespace) -> int:
    given = {
        "lambda1_min": args.lambda1_min,
        "lambda2_min": args.lambda2_min,
        "n_thermal": args.n_thermal,
        "purity": args.purity,
    }
    given = {k: v for k, v in given.items() if v is not None}
    allowed = _FIGURE_OPTIONS[args.id]
    extra = sorted(set(given) - allowed)
    if extra:
        flags = ", ".join("--" + k.replace("_", "-") for k in extra)
        return _fail(f"{args.id} does not take {flags}")

    kwargs = dict(given)
    purity = kwargs.pop("purity", None)
    if purity is not None:
        if args.id == "fig4a":
            kwargs["purities"] = purity
        elif len(purity) > 1:
            return _fail(f"{args.id} takes a single --purity")
        else:
            kwargs["purity"] = purity[0]
    if args.points is not None:
        kwargs["points"] = args.points
    try:
        header, rows = figures.FIGURES[args.id](**kwargs)
    except (GaussBSError, ValueError) as exc:
        return _fail(f"{args.id}: {exc}")
    err = _write(args.out, header, rows)
    return EXIT_OK if err is None else err


def cmd_verify(args: argparse.Namespace) -> int:
    if args.cases < 1:
        return _fail(f"--cases must be at least 1, got {args.cases}")
    if not args.tol > 0:
        return _fail(f"--tol must be positive, got {args.tol}")
    results = run_all(args.seed, args.cases, args.tol)
    print(format_results(results))
    return EXIT_OK if all(r.passed for r in results) else EXIT_VIOLATION


def cmd_cascade(args: argparse.Namespace) -> int:
    try:
        cfg = load_config(args.config)
    except ConfigError as exc:
        return _fail(str(exc))

    v = cfg.state
    n0 = nonclassicality(v)
    if cfg.protocol == "tree":
        tree = split_tree(v, cfg.levels, cfg.angles(cfg.levels))
        header = ["level", "sum_tau", "sum_n", "cum_s_n", "residual"]
        rows = [[lv.level, lv.sum_tau, lv.sum_n, lv.cum_s_n, lv.residual] for lv in tree.levels]
        err = _write(args.out, header, rows)
        if err is not None:
            return err
        n_lim, s_lim = limit_totals(v)
        n_fin, s_fin = tree.totals()
        print(f"limit   N_tot={n_lim:.12g}  S_N_tot={s_lim:.12g}")
        print(f"depth {cfg.levels}: N_tot={n_fin:.12g}  S_N_tot={s_fin:.12g}  "
              f"|diff|={abs(n_fin - n_lim):.3e}")
        return EXIT_OK

    run = depletion_run(v, cfg.angles(cfg.levels))
    header = ["level", "sum_tau", "sum_n", "cum_s_n", "residual", "e_n", "tau_two_mode"]
    rows = [[0, nonclassical_depth(v), n0, 0.0, 0.0, 0.0, run.tau_initial]]
    cum = 0.0
    for stage in run.stages:
        cum += stage.s_n
        rows.append([stage.index, stage.sum_tau, stage.sum_n, cum, abs(n0 - stage.sum_n - cum),
                     stage.e_n, stage.tau_two_mode])
    err = _write(args.out, header, rows)
    return EXIT_OK if err is None else err


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gauss-bs",
        description="Nonclassicality and entanglement of Gaussian states at beam splitters.")
    sub = parser.add_subparsers(dest="command", required=True)

    fig = sub.add_parser("figure", help="write figure sweep data as CSV")
    fig.add_argument("id", choices=sorted(figures.FIGURES))
    fig.add_argument("--lambda1-min", type=float)
    fig.add_argument("--lambda2-min", type=float)
    fig.add_argument("--n-thermal", type=float)
    fig.add_argument("--purity", type=float, action="append",
                     help="purity of the first input; repeat for fig4a")
    fig.add_argument("--points", type=int)
    fig.add_argument("--out", required=True)
    fig.set_defaults(func=cmd_figure)

    ver = sub.add_parser("verify", help="run the randomised property suites")
    ver.add_argument("--seed", type=int, default=42)
    ver.add_argument("--cases", type=int, default=1000)
    ver.add_argument("--tol", type=float, default=1e-10)
    ver.set_defaults(func=cmd_verify)

    cas = sub.add_parser("cascade", help="run a tree or depletion experiment from a config")
    cas.add_argument("--config", required=True)
    cas.add_argument("--out", required=True)
    cas.set_defaults(func=cmd_cascade)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
