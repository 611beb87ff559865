"""Command-line front end.

Exit codes: 0 success, 1 invalid input, 2 verification mismatch,
3 enumeration size cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .construct import extremal_build
from .degseq import DegreeSequence, DegreeSequenceError, validate
from .forest import ForestError, read_forest, write_forest
from .formulas import extremal_values
from .oracle import (
    DEFAULT_SIZE_CAP,
    DEFAULT_SWEEP_MAX_N,
    SizeCapExceededError,
    empirical_extremes,
    swap_search_gamma,
    sweep_sequences,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_MISMATCH = 2
EXIT_CAP = 3


def _emit(args, payload: dict, human: list[str]) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        for line in human:
            print(line)


def _sequence_payload(seq: DegreeSequence) -> dict:
    stats = validate(seq)
    values = extremal_values(seq)
    return {
        "sequence": list(seq.degrees),
        "n": stats.n,
        "n0": stats.n0,
        "n1": stats.n1,
        "n_ge2": stats.n_ge2,
        "c": stats.c,
        "branch": values.branch.value,
        "gamma_max": values.gamma_max,
        "alpha_min": values.alpha_min,
    }


def cmd_eval(args) -> int:
    seq = DegreeSequence.parse(args.sequence)
    payload = _sequence_payload(seq)
    _emit(
        args,
        payload,
        [
            "n={n} n0={n0} n1={n1} n_ge2={n_ge2} c={c} branch={branch} "
            "gamma_max={gamma_max} alpha_min={alpha_min}".format(**payload)
        ],
    )
    return EXIT_OK


def cmd_build(args) -> int:
    seq = DegreeSequence.parse(args.sequence)
    cert = extremal_build(seq)
    write_forest(cert.forest, args.out)
    payload = {
        "sequence": list(seq.degrees),
        "out": args.out,
        "branch": cert.branch.value,
        "gamma": cert.gamma,
        "expected_gamma_max": cert.expected_gamma_max,
        "alpha": cert.alpha,
        "expected_alpha_min": cert.expected_alpha_min,
    }
    ok = (
        cert.gamma == cert.expected_gamma_max
        and cert.alpha == cert.expected_alpha_min
    )
    payload["match"] = ok
    _emit(
        args,
        payload,
        [
            f"wrote {args.out}",
            f"gamma={cert.gamma} expected={cert.expected_gamma_max}",
            f"alpha={cert.alpha} expected={cert.expected_alpha_min}",
            "certificate " + ("matches" if ok else "MISMATCH"),
        ],
    )
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_solve(args) -> int:
    forest = read_forest(args.path)
    gamma, gamma_set = forest.domination_number()
    alpha, alpha_set = forest.independence_number()
    seq = forest.degree_sequence()
    values = extremal_values(seq)
    payload = {
        "n": forest.n,
        "edge_count": len(forest.edges),
        "degree_sequence": list(seq.degrees),
        "gamma": gamma,
        "gamma_witness": sorted(gamma_set),
        "alpha": alpha,
        "alpha_witness": sorted(alpha_set),
        "gamma_max": values.gamma_max,
        "alpha_min": values.alpha_min,
    }
    _emit(
        args,
        payload,
        [
            f"n={forest.n} edges={len(forest.edges)}",
            f"degree_sequence={seq}",
            f"gamma={gamma} witness={sorted(gamma_set)}",
            f"alpha={alpha} witness={sorted(alpha_set)}",
            f"gamma_max={values.gamma_max} alpha_min={values.alpha_min}",
        ],
    )
    return EXIT_OK


def _verify_payload(degrees: tuple[int, ...], cap: int) -> dict:
    seq = DegreeSequence(degrees)
    report = empirical_extremes(seq, cap=cap)
    values = extremal_values(seq)
    return {
        "sequence": list(seq.degrees),
        "labeled": report.realization_count_labeled,
        "iso": report.realization_count_iso,
        "gamma_max_empirical": report.gamma_max,
        "gamma_max_formula": values.gamma_max,
        "gamma_min_empirical": report.gamma_min,
        "alpha_min_empirical": report.alpha_min,
        "alpha_min_formula": values.alpha_min,
        "alpha_max_empirical": report.alpha_max,
        "match": report.gamma_max == values.gamma_max
        and report.alpha_min == values.alpha_min,
    }


def _verify_lines(payload: dict) -> list[str]:
    return [
        "sequence={} labeled={} iso={}".format(
            ",".join(str(d) for d in payload["sequence"]),
            payload["labeled"],
            payload["iso"],
        ),
        "gamma_max empirical={} formula={}".format(
            payload["gamma_max_empirical"], payload["gamma_max_formula"]
        ),
        "alpha_min empirical={} formula={}".format(
            payload["alpha_min_empirical"], payload["alpha_min_formula"]
        ),
        "verdict " + ("match" if payload["match"] else "MISMATCH"),
    ]


def cmd_verify(args) -> int:
    seq = DegreeSequence.parse(args.sequence)
    payload = _verify_payload(seq.degrees, args.cap)
    _emit(args, payload, _verify_lines(payload))
    return EXIT_OK if payload["match"] else EXIT_MISMATCH


def cmd_sweep(args) -> int:
    sequences = [seq.degrees for seq in sweep_sequences(args.max_n)]
    if args.parallel > 1:
        with ProcessPoolExecutor(max_workers=args.parallel) as pool:
            results = list(
                pool.map(_verify_payload, sequences, [args.cap] * len(sequences))
            )
    else:
        results = [_verify_payload(degs, args.cap) for degs in sequences]
    mismatches = [r for r in results if not r["match"]]
    if args.json:
        print(
            json.dumps(
                {
                    "checked": len(results),
                    "mismatches": len(mismatches),
                    "results": results,
                }
            )
        )
    else:
        for r in results:
            line = "{} gamma_max {}={} alpha_min {}={} {}".format(
                ",".join(str(d) for d in r["sequence"]),
                r["gamma_max_empirical"],
                r["gamma_max_formula"],
                r["alpha_min_empirical"],
                r["alpha_min_formula"],
                "ok" if r["match"] else "MISMATCH",
            )
            print(line)
        print(f"checked {len(results)} sequences, {len(mismatches)} mismatches")
    return EXIT_OK if not mismatches else EXIT_MISMATCH


def cmd_swap_search(args) -> int:
    seq = DegreeSequence.parse(args.sequence)
    forest = swap_search_gamma(seq, restarts=args.restarts, seed=args.seed)
    gamma, _ = forest.domination_number()
    values = extremal_values(seq)
    if args.out:
        write_forest(forest, args.out)
    payload = {
        "sequence": list(seq.degrees),
        "gamma_found": gamma,
        "gamma_max": values.gamma_max,
        "attained": gamma == values.gamma_max,
        "restarts": args.restarts,
        "seed": args.seed,
    }
    human = [
        f"gamma_found={gamma} gamma_max={values.gamma_max} "
        f"attained={str(gamma == values.gamma_max).lower()}"
    ]
    if args.out:
        payload["out"] = args.out
        human.append(f"wrote {args.out}")
    _emit(args, payload, human)
    # exceeding the proven maximum would mean a defect somewhere
    return EXIT_OK if gamma <= values.gamma_max else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="forestdom",
        description=(
            "Extremes of domination and independence numbers over all "
            "forests with a given degree sequence."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    p = add("eval", cmd_eval, "evaluate the closed forms for a sequence")
    p.add_argument("sequence", help="degrees, e.g. '3,2,1,1,1' or '3 2 1 1 1'")

    p = add("build", cmd_build, "build a realization attaining both extremes")
    p.add_argument("sequence")
    p.add_argument("out", help="output forest file (JSON format)")

    p = add("solve", cmd_solve, "solve an existing forest file exactly")
    p.add_argument("path")

    p = add("verify", cmd_verify, "compare formulas against full enumeration")
    p.add_argument("sequence")
    p.add_argument("--cap", type=int, default=DEFAULT_SIZE_CAP)

    p = add("sweep", cmd_sweep, "verify every admissible sequence up to max-n")
    p.add_argument("--max-n", type=int, default=DEFAULT_SWEEP_MAX_N)
    p.add_argument("--cap", type=int, default=DEFAULT_SIZE_CAP)
    p.add_argument("--parallel", type=int, default=1, help="worker processes")

    p = add("swap-search", cmd_swap_search, "heuristic hill-climb on gamma")
    p.add_argument("sequence")
    p.add_argument("--restarts", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None, help="write the best forest here")

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SizeCapExceededError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (DegreeSequenceError, ForestError, OSError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
