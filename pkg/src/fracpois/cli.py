"""Command-line front end: evaluation, distributions, simulation, checks.

Grammar: ``fracpois <eval|dist|simulate|verify> [flags]``.  Every data
command emits machine-readable records — JSON (array of objects) or CSV
(header row ``x,y`` plus flattened metadata columns) — suitable for
piping into plotting tools.  Exit codes: 0 success, 1 verification
failure, 2 usage error, 3 numerical failure.

The environment variable ``FRACPOIS_MAX_TERMS`` overrides the default
series term budget for the whole invocation; library callers pass
policies explicitly instead.
"""

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass, field

import numpy as np

from . import special
from .errors import (
    FracpoisError,
    InvalidParam,
    NonConvergence,
    NumericalInstability,
    QuadratureFailure,
    RootFindingFailure,
    StepTooCoarse,
)
from .models import (
    ProcessSpec,
    factorial_moment,
    interarrival_pdf,
    pgf,
    pmf,
    renewal_mean,
    waiting_time_cdf,
    waiting_time_pdf,
)
from .simulate import (
    RNG_ALGORITHM,
    SimConfig,
    empirical_pmf,
    generate_paths,
    save_paths_jsonl,
)
from .special import MLSpec, SeriesPolicy, _gml_neg, gml_series, wright_series
from .verify import run_suite

__all__ = ["OutputRecord", "build_parser", "main"]


@dataclass
class OutputRecord:
    """One emitted data point.

    Attributes:
        x: abscissa — t, k, u, r, or s depending on the command.
        y: value at the abscissa.
        meta: mapping with at least ``command``, ``parameters`` (a flat
            mapping of the invocation parameters), and ``provenance``
            (one of series | integral | simulation | quadrature); extra
            keys carry per-record data such as standard errors.  A
            non-finite y is flagged with ``divergent: true``.
    """

    x: float
    y: float
    meta: dict = field(default_factory=dict)

    def as_dict(self):
        """Return the record as a plain serializable mapping."""
        return {"x": self.x, "y": self.y, "meta": self.meta}


def _make_record(x, y, command, parameters, provenance, **extras):
    meta = {"command": command, "parameters": dict(parameters),
            "provenance": provenance}
    y = float(y)
    if not math.isfinite(y):
        meta["divergent"] = True
    meta.update(extras)
    return OutputRecord(x=float(x), y=y, meta=meta)


def _route_provenance():
    """Name the evaluation route taken since the last counter reset."""
    if special.route_stats["integral"] > 0:
        return "integral"
    return "series"


def _records_json(records):
    return json.dumps([r.as_dict() for r in records], indent=2)


def _records_csv(records):
    columns = ["x", "y", "command", "provenance"]
    rows = []
    for rec in records:
        row = {"x": rec.x, "y": rec.y,
               "command": rec.meta.get("command", ""),
               "provenance": rec.meta.get("provenance", "")}
        for key, value in rec.meta.get("parameters", {}).items():
            row[key] = value
            if key not in columns:
                columns.append(key)
        for key, value in rec.meta.items():
            if key in ("command", "parameters", "provenance"):
                continue
            row[key] = value
            if key not in columns:
                columns.append(key)
        rows.append(row)
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=columns, restval="")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _emit(records, fmt, stream):
    if fmt == "csv":
        stream.write(_records_csv(records) + "\n")
    else:
        stream.write(_records_json(records) + "\n")


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser():
    """Construct the argument parser for the ``fracpois`` grammar."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json",
                        help="output format (default: json)")

    parser = argparse.ArgumentParser(
        prog="fracpois",
        description="Counting processes with Mittag-Leffler waiting times: "
                    "evaluation, distributions, simulation, verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    eval_p = sub.add_parser("eval", parents=[common],
                            help="evaluate a special function on a grid")
    eval_sub = eval_p.add_subparsers(dest="function", required=True)
    ml_p = eval_sub.add_parser("ml", parents=[common],
                               help="two-parameter Mittag-Leffler")
    ml_p.add_argument("--alpha", type=float, required=True)
    ml_p.add_argument("--beta", type=float, required=True)
    ml_p.add_argument("--x", type=float, nargs="+", required=True)
    gml_p = eval_sub.add_parser("gml", parents=[common],
                                help="three-parameter Mittag-Leffler")
    gml_p.add_argument("--alpha", type=float, required=True)
    gml_p.add_argument("--beta", type=float, required=True)
    gml_p.add_argument("--gamma", type=float, required=True)
    gml_p.add_argument("--x", type=float, nargs="+", required=True)
    wright_p = eval_sub.add_parser("wright", parents=[common],
                                   help="Wright function")
    wright_p.add_argument("--lam", type=float, required=True)
    wright_p.add_argument("--beta", type=float, required=True)
    wright_p.add_argument("--x", type=float, nargs="+", required=True)

    dist_p = sub.add_parser("dist", parents=[common],
                            help="distributions of the order-n model")
    dist_p.add_argument("--n", type=int, required=True,
                        help="model order (number of convolved waits)")
    dist_p.add_argument("--nu", type=float, required=True,
                        help="fractional order in (0, 1]")
    dist_p.add_argument("--lambda", dest="lam", type=float, required=True,
                        help="rate parameter (stored as 'lam')")
    dist_sub = dist_p.add_subparsers(dest="quantity", required=True)

    pmf_p = dist_sub.add_parser("pmf", parents=[common],
                                help="counting masses at one time")
    pmf_p.add_argument("--t", type=float, required=True)
    pmf_p.add_argument("--k", type=int)
    pmf_p.add_argument("--k-max", dest="k_max", type=int)

    for name, help_text in (("wtpdf", "waiting-time density of event k"),
                            ("wtcdf", "waiting-time distribution of event k")):
        q = dist_sub.add_parser(name, parents=[common], help=help_text)
        q.add_argument("--k", type=int, required=True)
        q.add_argument("--t", type=float, nargs="+", required=True)

    ia_p = dist_sub.add_parser("iapdf", parents=[common],
                               help="interarrival density")
    ia_p.add_argument("--t", type=float, nargs="+", required=True)

    pgf_p = dist_sub.add_parser("pgf", parents=[common],
                                help="probability generating function")
    pgf_p.add_argument("--t", type=float, required=True)
    pgf_p.add_argument("--u", type=float, nargs="+", required=True)

    ren_p = dist_sub.add_parser("renewal", parents=[common],
                                help="mean count (renewal function)")
    ren_p.add_argument("--t", type=float, nargs="+", required=True)

    mom_p = dist_sub.add_parser("moments", parents=[common],
                                help="falling-factorial moments (order 1)")
    mom_p.add_argument("--t", type=float, required=True)
    mom_p.add_argument("--r", type=int, nargs="+", default=[1, 2, 3])

    sim_p = sub.add_parser("simulate", parents=[common],
                           help="sample renewal paths and report statistics")
    sim_p.add_argument("--n", type=int, required=True)
    sim_p.add_argument("--nu", type=float, required=True)
    sim_p.add_argument("--lambda", dest="lam", type=float, required=True,
                       help="rate parameter (stored as 'lam')")
    sim_p.add_argument("--horizon", type=float, required=True)
    sim_p.add_argument("--paths", type=int, required=True)
    sim_p.add_argument("--seed", type=int, default=0)
    sim_p.add_argument("--out", type=str, default=None,
                       help="write sampled paths to this JSON-lines file")
    sim_p.add_argument("--probe", type=float, nargs="+", default=None,
                       help="probe times (default: the horizon)")

    ver_p = sub.add_parser("verify", parents=[common],
                           help="run the numerical cross-check suite")
    ver_p.add_argument("--only", type=str, default=None,
                       help="run only checks whose name contains this text")
    ver_p.add_argument("--tol", type=float, default=None,
                       help="override the default tolerance of "
                            "value-comparison checks")

    return parser


# ---------------------------------------------------------------------------
# command handlers
# ---------------------------------------------------------------------------

def _eval_ml(alpha, beta, x, policy):
    if x < 0.0 and 0.0 < alpha <= 1.0:
        return _gml_neg(alpha, beta, 1.0, -x, spolicy=policy)
    return gml_series(MLSpec(alpha, beta, 1.0), x, policy)


def _eval_gml(alpha, beta, gamma, x, policy):
    if x < 0.0 and 0.0 < alpha <= 1.0:
        return _gml_neg(alpha, beta, gamma, -x, spolicy=policy)
    return gml_series(MLSpec(alpha, beta, gamma), x, policy)


def cmd_eval(args, policy):
    """Evaluate the requested special function over the x grid."""
    records = []
    for x in args.x:
        special.reset_route_stats()
        if args.function == "ml":
            params = {"function": "ml", "alpha": args.alpha,
                      "beta": args.beta}
            y = _eval_ml(args.alpha, args.beta, x, policy)
        elif args.function == "gml":
            params = {"function": "gml", "alpha": args.alpha,
                      "beta": args.beta, "gamma": args.gamma}
            y = _eval_gml(args.alpha, args.beta, args.gamma, x, policy)
        else:
            params = {"function": "wright", "lam": args.lam,
                      "beta": args.beta}
            y = wright_series(args.lam, args.beta, x, policy)
        records.append(_make_record(x, y, "eval", params,
                                    _route_provenance()))
    return records


def cmd_dist(args):
    """Evaluate the requested distribution quantity on its grid."""
    spec = ProcessSpec(args.n, args.nu, args.lam)
    base = {"n": spec.n, "nu": spec.nu, "lam": spec.lam,
            "quantity": args.quantity}
    records = []

    def add(x, y, **extra_params):
        params = dict(base)
        params.update(extra_params)
        records.append(_make_record(x, y, "dist", params,
                                    _route_provenance()))

    if args.quantity == "pmf":
        if (args.k is None) == (args.k_max is None):
            raise InvalidParam("pmf needs exactly one of --k or --k-max")
        ks = [args.k] if args.k is not None else list(range(args.k_max + 1))
        for k in ks:
            special.reset_route_stats()
            add(k, pmf(spec, k, args.t), t=args.t)
    elif args.quantity in ("wtpdf", "wtcdf"):
        fn = waiting_time_pdf if args.quantity == "wtpdf" else waiting_time_cdf
        for t in args.t:
            special.reset_route_stats()
            add(t, fn(spec, args.k, t), k=args.k)
    elif args.quantity == "iapdf":
        for t in args.t:
            special.reset_route_stats()
            add(t, interarrival_pdf(spec, t))
    elif args.quantity == "pgf":
        for u in args.u:
            special.reset_route_stats()
            add(u, pgf(spec, u, args.t), t=args.t)
    elif args.quantity == "renewal":
        for t in args.t:
            special.reset_route_stats()
            add(t, renewal_mean(spec, t))
    else:
        for r in args.r:
            special.reset_route_stats()
            add(r, factorial_moment(spec, r, args.t), t=args.t)
    return records


def cmd_simulate(args):
    """Generate paths, optionally save them, and report probe statistics."""
    spec = ProcessSpec(args.n, args.nu, args.lam)
    config = SimConfig(seed=args.seed, n_paths=args.paths,
                       horizon=args.horizon)
    paths = generate_paths(spec, config)
    if args.out is not None:
        save_paths_jsonl(paths, args.out)
    probes = args.probe if args.probe is not None else [args.horizon]
    base = {"n": spec.n, "nu": spec.nu, "lam": spec.lam,
            "horizon": config.horizon, "paths": config.n_paths,
            "seed": config.seed, "rng": RNG_ALGORITHM}
    records = []
    n_paths = len(paths)
    for probe in probes:
        probe = float(probe)
        masses = empirical_pmf(paths, probe)
        for k, mass in enumerate(masses):
            se = math.sqrt(max(mass * (1.0 - mass), 0.0) / n_paths)
            params = dict(base)
            params.update(probe_t=probe, statistic="pmf")
            records.append(_make_record(
                k, mass, "simulate", params, "simulation",
                se=se, analytic=pmf(spec, k, probe)))
        counts = np.array([p.count_at(probe) for p in paths], dtype=float)
        se = float(counts.std(ddof=1) / math.sqrt(n_paths)) if n_paths > 1 \
            else 0.0
        params = dict(base)
        params.update(probe_t=probe, statistic="mean")
        extras = {"se": se}
        if spec.n <= 2:
            extras["analytic"] = renewal_mean(spec, probe)
        records.append(_make_record(probe, counts.mean(), "simulate",
                                    params, "simulation", **extras))
    return records


def cmd_verify(args, stream):
    """Run the cross-check suite and emit its reports."""
    reports = run_suite(only=args.only, tol=args.tol)
    rows = [rep.as_dict() for rep in reports]
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=[
            "name", "lhs", "rhs", "abs_err", "rel_err", "tol", "pass"])
        writer.writeheader()
        writer.writerows(rows)
        stream.write(buf.getvalue().rstrip("\n") + "\n")
    else:
        stream.write(json.dumps(rows, indent=2) + "\n")
    return 0 if all(rep.passed for rep in reports) else 1


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def main(argv=None):
    """Dispatch one CLI invocation; returns the process exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)

    policy = None
    saved_default = special._DEF_SERIES
    env_terms = os.environ.get("FRACPOIS_MAX_TERMS")
    if env_terms is not None:
        try:
            policy = SeriesPolicy(max_terms=int(env_terms))
        except (ValueError, InvalidParam):
            sys.stderr.write(
                f"fracpois: FRACPOIS_MAX_TERMS must be an integer >= 10, "
                f"got {env_terms!r}\n")
            return 2
        special._DEF_SERIES = policy

    try:
        if args.command == "eval":
            _emit(cmd_eval(args, policy), args.format, sys.stdout)
            return 0
        if args.command == "dist":
            _emit(cmd_dist(args), args.format, sys.stdout)
            return 0
        if args.command == "simulate":
            _emit(cmd_simulate(args), args.format, sys.stdout)
            return 0
        return cmd_verify(args, sys.stdout)
    except InvalidParam as exc:
        sys.stderr.write(f"fracpois: invalid parameter: {exc}\n")
        return 2
    except (NonConvergence, NumericalInstability, QuadratureFailure,
            RootFindingFailure, StepTooCoarse) as exc:
        sys.stderr.write(f"fracpois: numerical failure: {exc}\n")
        return 3
    except FracpoisError as exc:
        sys.stderr.write(f"fracpois: {exc}\n")
        return 3
    finally:
        special._DEF_SERIES = saved_default


if __name__ == "__main__":
    sys.exit(main())
