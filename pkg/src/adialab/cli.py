"""Command-line surface for scripted experiments and plot-data generation.

Commands: ``runtime``, ``evolve``, ``sweep``, ``mixed``, ``schedule``,
``dj``.  Records print as JSON, tables as CSV (switchable with
``--format``); CSV carries full double precision.  Exit codes: 0
success, 1 input error, 2 domain error (orthogonal states), 3 numerical
failure.  Stochastic commands are seeded (default seed 12345) so
identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import applications, evolution, schedule as sched
from .errors import AdialabError, IdenticalStates, OrthogonalStates, StepTooLarge
from .hamiltonian import build_problem
from .states import DensityMatrix, PureState

DEFAULT_SEED = 12345


class _Parser(argparse.ArgumentParser):
    # argparse's default usage-error exit code is 2, which this CLI
    # reserves for domain errors; remap to 1 (input error).
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _write_text(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _emit_record(record: dict, args) -> None:
    if args.format == "csv":
        keys = list(record)
        values = [_fmt(v) if isinstance(v, float) else str(v) for v in record.values()]
        text = ",".join(keys) + "\n" + ",".join(values) + "\n"
    else:
        text = json.dumps(record, indent=2) + "\n"
    _write_text(text, args.output)


def _emit_table(header: list[str], rows: list[tuple], args) -> None:
    if args.format == "json":
        records = [dict(zip(header, row)) for row in rows]
        text = json.dumps(records, indent=2) + "\n"
    else:
        lines = [",".join(header)]
        for row in rows:
            lines.append(",".join(_fmt(v) if isinstance(v, float) else str(v) for v in row))
        text = "\n".join(lines) + "\n"
    _write_text(text, args.output)


def _load_pure(path: str) -> PureState:
    return PureState.from_json(Path(path).read_text())


def _load_density(path: str) -> DensityMatrix:
    return DensityMatrix.from_json(Path(path).read_text())


def _add_common(p: argparse.ArgumentParser, fmt_default: str) -> None:
    p.add_argument("--epsilon", type=float, default=0.1, help="precision parameter in (0, 1]")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help="RNG seed for stochastic steps")
    p.add_argument("--format", choices=("csv", "json"), default=fmt_default)
    p.add_argument("--output", metavar="PATH", help="write output here instead of stdout")


def _parse_values(args) -> list[float]:
    if args.values:
        values = [float(v) for v in args.values.split(",") if v.strip()]
    elif args.start is not None and args.stop is not None and args.num:
        values = list(np.linspace(args.start, args.stop, args.num))
    else:
        values = []
    if not values:
        raise ValueError("empty sweep range: give --values or --start/--stop/--num")
    return values


def cmd_runtime(args) -> int:
    if args.fidelity is not None:
        report = sched.runtime_from_fidelity(args.fidelity, args.epsilon)
    elif args.alpha and args.beta:
        report = sched.runtime_pure(_load_pure(args.alpha), _load_pure(args.beta), args.epsilon)
    else:
        raise ValueError("give either --fidelity or both --alpha and --beta")
    _emit_record(report.to_dict(), args)
    return 0


def _instance_states(args) -> tuple[PureState, PureState]:
    if args.instance == "grover":
        return applications.grover_instance(args.n, args.m)
    if args.instance == "dj":
        spec = applications.BooleanFunctionSpec.from_string(args.table)
        alpha, beta, _ = applications.deutsch_jozsa_instance(spec)
        return alpha, beta
    return _load_pure(args.alpha), _load_pure(args.beta)


def cmd_evolve(args) -> int:
    alpha, beta = _instance_states(args)
    try:
        problem = build_problem(alpha, beta)
    except IdenticalStates:
        # T = 0 semantics: nothing evolves, the initial state already is
        # the target up to phase.
        success = float(abs(np.vdot(beta.amplitudes, alpha.amplitudes)) ** 2)
        _emit_record(
            {
                "success_probability": min(success, 1.0),
                "T": 0.0,
                "epsilon": args.epsilon,
                "unitarity_defect": 0.0,
            },
            args,
        )
        return 0
    if args.schedule == "local":
        schedule = sched.local_schedule(problem.a, args.epsilon)
    else:
        T = args.T if args.T is not None else sched.runtime_from_fidelity(problem.a, args.epsilon).T
        schedule = sched.linear_schedule(T)
    config = evolution.IntegratorConfig(max_step=args.max_step, samples=args.samples)
    run = evolution.evolve_effective if args.effective else evolution.evolve
    result = run(problem, schedule, config)
    if args.trajectory:
        lines = ["t,s,ground_overlap_sq"]
        lines += [",".join(_fmt(v) for v in row) for row in result.trajectory]
        Path(args.trajectory).write_text("\n".join(lines) + "\n")
    _emit_record(
        {
            "success_probability": result.success_probability,
            "T": schedule.T,
            "epsilon": args.epsilon,
            "unitarity_defect": result.unitarity_defect,
        },
        args,
    )
    return 0


def cmd_sweep(args) -> int:
    values = _parse_values(args)
    if args.axis == "fidelity":
        rows = []
        for f in sorted(values, reverse=True):
            report = sched.runtime_from_fidelity(f, args.epsilon)
            rows.append((float(f), report.T, report.angle, report.trace_distance_form))
        _emit_table(["fidelity", "T", "angle", "trace_distance"], rows, args)
    elif args.axis == "epsilon":
        alpha, beta = applications.grover_instance(args.grover_n, 1)
        problem = build_problem(alpha, beta)
        config = evolution.IntegratorConfig(max_step=args.max_step, samples=args.samples)
        points = evolution.error_scaling_sweep(problem, values, config, effective=args.effective)
        _emit_table(["epsilon", "T", "infidelity"], [tuple(p) for p in points], args)
    else:  # axis == "N"
        rows = []
        for N in sorted(int(v) for v in values):
            alpha, beta = applications.grover_instance(N, 1)
            report = sched.runtime_pure(alpha, beta, args.epsilon)
            rows.append((N, report.fidelity, report.T, report.T * args.epsilon))
        _emit_table(["N", "fidelity", "T", "T_eps"], rows, args)
    return 0


def cmd_mixed(args) -> int:
    rho = _load_density(args.rho)
    sigma = _load_density(args.sigma)
    report = sched.runtime_mixed(rho, sigma, args.epsilon)
    sampled = sched.runtime_mixed_by_purification(
        rho, sigma, args.epsilon, args.budget, seed=args.seed
    )
    _emit_record(
        {
            "exact": report.to_dict(),
            "sampled_T": sampled,
            "budget": args.budget,
            "seed": args.seed,
        },
        args,
    )
    return 0


def cmd_schedule(args) -> int:
    if args.kind == "local":
        schedule = sched.local_schedule(args.fidelity, args.epsilon)
    else:
        T = args.T if args.T is not None else sched.runtime_from_fidelity(args.fidelity, args.epsilon).T
        schedule = sched.linear_schedule(T)
    rows = sched.sample_schedule(schedule, a=args.fidelity, n=args.grid)
    _emit_table(["t", "s", "gap", "ds_dt"], rows, args)
    return 0


def cmd_dj(args) -> int:
    spec = applications.BooleanFunctionSpec.from_string(args.table)
    alpha, beta, classification = applications.deutsch_jozsa_instance(spec)
    report = applications.predicted_runtime((alpha, beta), args.epsilon)
    record = {"classification": classification, "n": spec.n, "N": spec.size}
    record.update(report.to_dict())
    _emit_record(record, args)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="adialab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("runtime", help="minimal runtime report for a state pair")
    p.add_argument("--fidelity", type=float, help="overlap shortcut instead of state files")
    p.add_argument("--alpha", metavar="FILE", help="initial pure state (JSON)")
    p.add_argument("--beta", metavar="FILE", help="final pure state (JSON)")
    _add_common(p, "json")
    p.set_defaults(func=cmd_runtime)

    p = sub.add_parser("evolve", help="simulate an adiabatic evolution")
    p.add_argument("instance", choices=("grover", "dj", "custom"))
    p.add_argument("--n", type=int, default=4, help="database size N (grover)")
    p.add_argument("--m", type=int, default=1, help="marked item, 1-based (grover)")
    p.add_argument("--table", default="00", help="truth table bits (dj)")
    p.add_argument("--alpha", metavar="FILE", help="initial state file (custom)")
    p.add_argument("--beta", metavar="FILE", help="final state file (custom)")
    p.add_argument("--schedule", choices=("local", "linear"), default="local")
    p.add_argument("--T", type=float, help="total time for linear schedules")
    p.add_argument("--effective", action="store_true", help="integrate the 2x2 block only")
    p.add_argument("--max-step", type=float, default=0.02)
    p.add_argument("--samples", type=int, default=65)
    p.add_argument("--trajectory", metavar="PATH", help="write trajectory CSV here")
    _add_common(p, "json")
    p.set_defaults(func=cmd_evolve)

    p = sub.add_parser("sweep", help="tabulate runtime/infidelity along an axis")
    p.add_argument("--axis", choices=("epsilon", "fidelity", "N"), required=True)
    p.add_argument("--values", help="comma-separated axis values")
    p.add_argument("--start", type=float)
    p.add_argument("--stop", type=float)
    p.add_argument("--num", type=int)
    p.add_argument("--grover-n", type=int, default=8, help="database size for epsilon sweeps")
    p.add_argument("--effective", action="store_true")
    p.add_argument("--max-step", type=float, default=0.02)
    p.add_argument("--samples", type=int, default=65)
    _add_common(p, "csv")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("mixed", help="mixed-state runtime, exact vs purification sampling")
    p.add_argument("--rho", metavar="FILE", required=True)
    p.add_argument("--sigma", metavar="FILE", required=True)
    p.add_argument("--budget", type=int, default=1000)
    _add_common(p, "json")
    p.set_defaults(func=cmd_mixed)

    p = sub.add_parser("schedule", help="dump s(t), gap and ds/dt samples")
    p.add_argument("--fidelity", type=float, required=True, help="overlap a of the instance")
    p.add_argument("--kind", choices=("local", "linear"), default="local")
    p.add_argument("--T", type=float, help="total time for linear schedules")
    p.add_argument("--grid", type=int, default=101)
    _add_common(p, "csv")
    p.set_defaults(func=cmd_schedule)

    p = sub.add_parser("dj", help="classify a promised boolean function and report runtime")
    p.add_argument("--table", required=True, help="truth table bits, e.g. 0011")
    _add_common(p, "json")
    p.set_defaults(func=cmd_dj)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except OrthogonalStates as exc:
        print(f"adialab: {exc}", file=sys.stderr)
        return 2
    except StepTooLarge as exc:
        print(f"adialab: {exc}", file=sys.stderr)
        return 3
    except (AdialabError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"adialab: {exc}", file=sys.stderr)
        return 1


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
