"""Command-line front end.

Machine-readable results go to stdout as JSON lines; human summaries go to
stderr. Exit codes: 0 success/PASS, 1 FAIL (counterexample or cap), 2
usage or validation error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import model, regret, structure
from .deterministic import spt_schedule
from .exact import SearchConfig, count_search_space, solve_exact
from .generate import SplitMix64, gen_random_instance
from .heuristics import local_search, midpoint_heuristic
from .model import ValidationError
from .reductions import (
    FourPPInstance,
    PartitionInstance,
    decide_3partition,
    decide_4pp,
    gen_4pp_from_3partition,
    gen_sched_from_4pp,
)
from .single_machine import detect_equal_midpoints, optimal_single_machine
from .verification import SUITES, run_suite


def _emit(payload: dict, out_path=None) -> None:
    line = json.dumps(payload, sort_keys=True)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(line + "\n")
    else:
        print(line)


def _report_dict(report: model.RegretReport) -> dict:
    return {
        "max_regret": report.max_regret,
        "worst_scenario": list(report.worst_scenario.durations),
        "worst_alternative": [list(r) for r in report.worst_alternative.machines],
    }


def _cmd_eval(args) -> int:
    inst = model.load_instance(args.instance)
    sched = model.load_schedule(args.schedule)
    report = regret.max_regret(inst, sched)
    _emit(_report_dict(report), args.out)
    print(f"max regret {report.max_regret}", file=sys.stderr)
    return 0


def _cmd_det_solve(args) -> int:
    sc = model.load_scenario(args.scenario)
    sched = spt_schedule(sc, args.machines)
    _emit(
        {
            "schedule": [list(r) for r in sched.machines],
            "flow_time": model.flow_time(sched, sc),
        },
        args.out,
    )
    return 0


def _cmd_solve(args) -> int:
    inst = model.load_instance(args.instance)
    if args.exact:
        cfg = SearchConfig(
            balanced_only=args.balanced_only,
            node_cap=args.node_cap,
            time_cap=args.time_cap,
        )
        result = solve_exact(inst, cfg)
        _emit(
            {
                "schedule": [list(r) for r in result.schedule.machines],
                "optimal": result.optimal,
                "profiles_visited": result.profiles_visited,
                **_report_dict(result.report),
            },
            args.out,
        )
        status = "optimal" if result.optimal else "incumbent (cap reached)"
        print(
            f"exact: regret {result.report.max_regret} ({status}, "
            f"{result.profiles_visited} profiles)",
            file=sys.stderr,
        )
        return 0 if result.optimal else 1
    if args.single_uniform:
        emi = detect_equal_midpoints(inst)
        sched, value = optimal_single_machine(emi)
        _emit(
            {
                "schedule": [list(r) for r in sched.machines],
                "max_regret": value,
            },
            args.out,
        )
        return 0
    if args.heuristic == "midpoint":
        sched, report = midpoint_heuristic(inst)
    else:
        start, _ = midpoint_heuristic(inst)
        sched, report = local_search(inst, start, seed=args.seed)
    _emit(
        {
            "schedule": [list(r) for r in sched.machines],
            **_report_dict(report),
        },
        args.out,
    )
    print(f"heuristic regret {report.max_regret}", file=sys.stderr)
    return 0


def _cmd_count(args) -> int:
    inst = model.load_instance(args.instance)
    cfg = SearchConfig(balanced_only=args.balanced_only)
    _emit({"profiles": count_search_space(inst, cfg)}, args.out)
    return 0


def _cmd_canonicalize(args) -> int:
    pi = model.load_schedule(args.pi)
    sigma = model.load_schedule(args.sigma)
    pi2, sigma2 = structure.canonicalize(pi, sigma)
    model.save_schedule(pi2, args.out_pi)
    model.save_schedule(sigma2, args.out_sigma)
    return 0


def _cmd_rebalance(args) -> int:
    sched = model.load_schedule(args.schedule)
    model.save_schedule(structure.rebalance(sched), args.out)
    return 0


def _load_partition(path) -> PartitionInstance:
    d = model._load_json(path)
    model._require_keys(d, {"m", "B", "values"}, "3-partition instance")
    return PartitionInstance(d["m"], d["B"], tuple(d["values"])).validate()


def _load_4pp(path) -> FourPPInstance:
    d = model._load_json(path)
    model._require_keys(d, {"values"}, "4-pp instance")
    return FourPPInstance(tuple(d["values"])).validate()


def _cmd_gen(args) -> int:
    if args.what == "random":
        inst = gen_random_instance(args.seed, args.n, args.m, args.max_width, args.max_lo)
        model.save_instance(inst, args.out)
        return 0
    if args.what == "3p-to-4pp":
        four = gen_4pp_from_3partition(_load_partition(getattr(args, "in")))
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump({"values": list(four.values)}, fh, indent=2, sort_keys=True)
            fh.write("\n")
        return 0
    # 4pp-to-sched
    red = gen_sched_from_4pp(_load_4pp(getattr(args, "in")))
    payload = {
        "instance": model.instance_to_dict(red.instance),
        "m": red.m,
        "B": red.B,
        "C": red.C,
        "threshold": red.threshold,
        "threshold_floor": red.threshold_floor,
    }
    with open(args.out, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return 0


def _cmd_decide(args) -> int:
    if args.problem == "3partition":
        witness = decide_3partition(_load_partition(getattr(args, "in")))
        if witness is None:
            _emit({"answer": "no"}, args.out)
        else:
            _emit({"answer": "yes", "triplets": [list(t) for t in witness]}, args.out)
    else:
        witness = decide_4pp(_load_4pp(getattr(args, "in")))
        if witness is None:
            _emit({"answer": "no"}, args.out)
        else:
            _emit(
                {
                    "answer": "yes",
                    "quadruplets": [list(q) for q in witness.quadruplets],
                    "pairing": list(witness.pairing),
                },
                args.out,
            )
    return 0


def _cmd_verify(args) -> int:
    result = run_suite(args.suite, args.trials, args.seed)
    for failure in result.failures:
        print(json.dumps({"suite": result.name, "counterexample": failure}, sort_keys=True))
    _emit(result.to_dict(), args.out)
    status = "PASS" if result.passed else "FAIL"
    print(
        f"{result.name}: {status} "
        f"({result.trials - len(result.failures)}/{result.trials})",
        file=sys.stderr,
    )
    return 0 if result.passed else 1


def _cmd_bench(args) -> int:
    """Compare the compiled kernel against the pure-Python fallback."""
    from itertools import islice, permutations

    from . import _purepy

    try:
        from . import _core
    except ImportError:
        _core = None

    inst = gen_random_instance(11, 9, 1, max_width=20, max_lo=20)
    lo = [iv.lo for iv in inst.jobs]
    width = [iv.width for iv in inst.jobs]
    hi = [iv.hi for iv in inst.jobs]
    profiles = list(islice(permutations(range(1, 10)), args.profiles))
    oracle_inst = gen_random_instance(12, args.oracle_n, 2, max_width=20, max_lo=20)
    olo = [iv.lo for iv in oracle_inst.jobs]
    ohi = [iv.hi for iv in oracle_inst.jobs]
    omult = list(range(1, args.oracle_n + 1))

    rows = []

    def timed(name, fn):
        start = time.perf_counter()
        value = fn()
        return name, time.perf_counter() - start, value

    def run(backend_name, mod):
        if mod is _purepy:
            prof = lambda: mod.profile_regrets(lo, width, hi, 1, profiles)
            orc = lambda: mod.oracle_best(olo, ohi, 2, omult)
        else:
            from array import array

            flat = array("q", [k for p in profiles for k in p])
            out = array("q", bytes(8 * len(profiles)))

            def prof():
                mod.profile_regrets(
                    array("q", lo), array("q", width), array("q", hi), 1, flat, out
                )
                return list(out)

            orc = lambda: mod.oracle_best(
                array("q", olo), array("q", ohi), 2, array("q", omult)
            )
        for task, fn in (("profile_regrets", prof), ("oracle_scan", orc)):
            _, elapsed, value = timed(task, fn)
            rows.append(
                {
                    "backend": backend_name,
                    "task": task,
                    "size": len(profiles) if task == "profile_regrets" else args.oracle_n,
                    "seconds": round(elapsed, 6),
                    "checksum": sum(value) if task == "profile_regrets" else value[0],
                }
            )

    run("purepy", _purepy)
    if _core is not None:
        run("compiled", _core)
    else:
        print("compiled backend not built; benchmarking fallback only", file=sys.stderr)

    if args.format == "csv":
        lines = ["backend,task,size,seconds,checksum"]
        lines += [
            f"{r['backend']},{r['task']},{r['size']},{r['seconds']},{r['checksum']}"
            for r in rows
        ]
        text = "\n".join(lines) + "\n"
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            print(text, end="")
    else:
        for r in rows:
            print(json.dumps(r, sort_keys=True))
    checksums = {}
    for r in rows:
        checksums.setdefault(r["task"], set()).add(r["checksum"])
    if any(len(v) > 1 for v in checksums.values()):
        print("backend results disagree!", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="regret-sched",
        description="Interval minmax regret scheduling toolkit",
    )
    parser.add_argument(
        "--jobs",
        type=int,
        default=int(os.environ.get("REGRET_SCHED_JOBS", "1")),
        help="worker cap (solvers currently run sequentially)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="maximum regret of a schedule")
    p.add_argument("--instance", required=True)
    p.add_argument("--schedule", required=True)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_eval)

    p = sub.add_parser("det-solve", help="deterministic SPT solve")
    p.add_argument("--scenario", required=True)
    p.add_argument("--machines", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_det_solve)

    p = sub.add_parser("solve", help="robust solvers")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--exact", action="store_true")
    mode.add_argument("--heuristic", choices=["midpoint", "local-search"])
    mode.add_argument("--single-uniform", action="store_true")
    p.add_argument("--instance", required=True)
    p.add_argument("--balanced-only", action="store_true")
    p.add_argument("--node-cap", type=int)
    p.add_argument("--time-cap", type=float)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_solve)

    p = sub.add_parser("count", help="size of the exact search space")
    p.add_argument("--instance", required=True)
    p.add_argument("--balanced-only", action="store_true")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_count)

    p = sub.add_parser("canonicalize", help="align schedule with alternative")
    p.add_argument("--pi", required=True)
    p.add_argument("--sigma", required=True)
    p.add_argument("--out-pi", required=True)
    p.add_argument("--out-sigma", required=True)
    p.set_defaults(fn=_cmd_canonicalize)

    p = sub.add_parser("rebalance", help="equalize machine loads")
    p.add_argument("--schedule", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=_cmd_rebalance)

    p = sub.add_parser("gen", help="instance generators")
    gsub = p.add_subparsers(dest="what", required=True)
    g = gsub.add_parser("random")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--max-width", type=int, default=20)
    g.add_argument("--max-lo", type=int, default=20)
    g.add_argument("--out", required=True)
    g.set_defaults(fn=_cmd_gen)
    for name in ("3p-to-4pp", "4pp-to-sched"):
        g = gsub.add_parser(name)
        g.add_argument("--in", required=True)
        g.add_argument("--out", required=True)
        g.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("decide", help="partition-problem deciders")
    p.add_argument("problem", choices=["3partition", "4pp"])
    p.add_argument("--in", required=True)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_decide)

    p = sub.add_parser("verify", help="property suites")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("bench", help="backend comparison")
    p.add_argument("--profiles", type=int, default=20000)
    p.add_argument("--oracle-n", type=int, default=14)
    p.add_argument("--format", choices=["jsonl", "csv"], default="jsonl")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.jobs < 1:
        parser.error("--jobs must be >= 1")
    try:
        return args.fn(args)
    except (ValidationError, ValueError, OSError, json.JSONDecodeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
