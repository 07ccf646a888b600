"""Command-line surface.

Subcommands: classify, oracle-check, random, threshold, basis, bench.
For ``classify`` the exit code carries the physics verdict: 0 means fully
entangled, 1 means some partition is PPT (biseparable there), 2 means the
input was rejected.  JSON output is byte-deterministic for fixed inputs,
seeds and flags; bench emits CSV timings and is the one exception.
"""

from __future__ import annotations

import argparse
import json
import statistics
import sys
import time

import numpy as np

from .analytic import (
    COEFFICIENT_TOL,
    classify,
    full_entanglement_threshold,
    is_ppt,
    noise_threshold,
)
from .oracle import (
    DEFAULT_ORACLE,
    is_ppt_dense,
    pt_spectrum_vs_coefficients,
    eigenvalues_symmetric,
    partial_transpose,
)
from .basis import ghz_vector
from .state import (
    GhzDiagonalState,
    dump_state,
    load_state,
    random_state,
    state_to_json_dict,
    to_dense,
)
from .subsets import enumerate_bipartitions, enumerate_canonical_betas

EXIT_FULL_ENTANGLED = 0
EXIT_NOT_FULL_ENTANGLED = 1
EXIT_INPUT_ERROR = 2

BENCH_CSV_HEADER = "path,n,partitions,median_ms"


def _read_input(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    if source.lstrip().startswith("{"):
        return source
    try:
        with open(source, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ValueError(f"cannot read input file: {exc}") from None


def _load_state_arg(args) -> GhzDiagonalState:
    if not args.input:
        raise ValueError("missing --input (path, inline JSON, or '-' for stdin)")
    return load_state(_read_input(args.input))


def _print_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def cmd_classify(args) -> int:
    state = _load_state_arg(args)
    report = classify(state, tol=args.tol)
    if args.format == "json":
        _print_json(report.to_json_dict())
    else:
        ppt_count = len(report.ppt_partitions)
        total = len(report.partitions)
        print(f"n = {report.n}, partitions = {total}")
        for v in report.partitions:
            w = v.worst
            status = "PPT (biseparable)" if v.is_ppt else "NPT"
            print(
                f"  {v.partition.split_string():>15}  {status:<18} "
                f"worst {w.coefficient}[{w.beta.bit_string()}] = {w.value:+.12g}"
            )
        verdict = "fully entangled" if report.full_entangled else "not fully entangled"
        print(f"verdict: {verdict} ({ppt_count}/{total} partitions PPT)")
    return EXIT_FULL_ENTANGLED if report.full_entangled else EXIT_NOT_FULL_ENTANGLED


def cmd_oracle_check(args) -> int:
    n = args.n
    if n is None:
        raise ValueError("missing --n")
    if not 2 <= n <= DEFAULT_ORACLE.comparison_max_qubits:
        raise ValueError(
            f"oracle check supports 2..{DEFAULT_ORACLE.comparison_max_qubits} qubits, got n={n}"
        )
    partitions = enumerate_bipartitions(n)
    mismatches = 0
    worst_margin = float("inf")
    spectrum_deviation = 0.0
    for i in range(args.count):
        state = random_state(n, args.seed + i)
        for partition in partitions:
            analytic_verdict, _ = is_ppt(state, partition, tol=args.tol)
            pt = partial_transpose(to_dense(state), partition.alpha1)
            low = eigenvalues_symmetric(pt).min_eigenvalue
            dense_verdict = low >= -DEFAULT_ORACLE.psd_tol
            if analytic_verdict != dense_verdict:
                mismatches += 1
            worst_margin = min(worst_margin, abs(low))
            if n == 2:
                spectrum_deviation = max(
                    spectrum_deviation, pt_spectrum_vs_coefficients(state, partition)
                )
    summary = {
        "n": n,
        "count": args.count,
        "seed": args.seed,
        "partitions": len(partitions),
        "mismatches": mismatches,
        "worst_boundary_margin": worst_margin,
    }
    if n == 2:
        summary["spectrum_deviation"] = spectrum_deviation
    if args.format == "json":
        _print_json(summary)
    else:
        print(
            f"n={n} states={args.count} partitions={len(partitions)} "
            f"mismatches={mismatches} worst_boundary_margin={worst_margin:.3e}"
        )
        if n == 2:
            print(f"two-qubit spectrum deviation = {spectrum_deviation:.3e}")
    return 0 if mismatches == 0 else 1


def cmd_random(args) -> int:
    if args.n is None:
        raise ValueError("missing --n")
    states = [random_state(args.n, args.seed + i) for i in range(args.count)]
    if args.format == "json":
        if len(states) == 1:
            _print_json(state_to_json_dict(states[0]))
        else:
            _print_json([state_to_json_dict(s) for s in states])
    else:
        for s in states:
            print(dump_state(s, indent=None))
    return 0


def cmd_threshold(args) -> int:
    state = _load_state_arg(args)
    per_partition = [
        (p, noise_threshold(state, p)) for p in enumerate_bipartitions(state.n)
    ]
    overall = full_entanglement_threshold(state)
    pure = GhzDiagonalState.pure_ghz(state.n)
    ghz_closed_form = None
    if state == pure:
        dim = 1 << state.n
        ghz_closed_form = dim / (dim + 2)
    if args.format == "json":
        _print_json(
            {
                "n": state.n,
                "full_entanglement_threshold": overall,
                "ghz_closed_form": ghz_closed_form,
                "partitions": [
                    {"alpha1": p.alpha1.bit_string(), "threshold": t}
                    for p, t in per_partition
                ],
            }
        )
    else:
        print(f"n = {state.n}")
        for p, t in per_partition:
            print(f"  {p.split_string():>15}  threshold = {t:.12g}")
        print(f"full-entanglement threshold = {overall:.12g}")
        if ghz_closed_form is not None:
            print(f"pure GHZ input: closed form 2^n/(2^n+2) = {ghz_closed_form:.12g}")
    return 0


def cmd_basis(args) -> int:
    if args.n is None:
        raise ValueError("missing --n")
    rows = []
    for beta in enumerate_canonical_betas(args.n):
        for sign, label in ((+1, "+"), (-1, "-")):
            vec = ghz_vector(beta, sign)
            rows.append(
                {
                    "beta": beta.bit_string(),
                    "sign": label,
                    "support": list(vec.support),
                    "amplitudes": [amp for _, amp in vec.entries],
                }
            )
    if args.format == "json":
        _print_json(rows)
    else:
        for row in rows:
            amps = ", ".join(f"{a:+.9f}" for a in row["amplitudes"])
            print(f"  {row['beta']}  {row['sign']}  support={row['support']}  amps=[{amps}]")
    return 0


def _median_ms(fn, repetitions: int) -> float:
    times = []
    for _ in range(repetitions):
        start = time.perf_counter()
        fn()
        times.append((time.perf_counter() - start) * 1000.0)
    return statistics.median(times)


def cmd_bench(args) -> int:
    reps = max(args.count, 1)
    lines = [BENCH_CSV_HEADER]
    for n in range(8, 15):
        state = random_state(n, args.seed)
        ms = _median_ms(lambda: classify(state), reps)
        lines.append(f"analytic_classify,{n},{(1 << (n - 1)) - 1},{ms:.3f}")
    for n in range(4, 9):
        state = random_state(n, args.seed)
        partition = enumerate_bipartitions(n)[0]
        ms = _median_ms(lambda: is_ppt_dense(state, partition), reps)
        lines.append(f"dense_partition,{n},1,{ms:.3f}")
    print("\n".join(lines))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ghzent",
        description=(
            "Decide which bipartitions a GHZ-diagonal state is biseparable "
            "across and whether it is fully N-partite entangled."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--n", type=int, default=None, help="qubit count")
        p.add_argument("--seed", type=int, default=0, help="random seed")
        p.add_argument("--count", type=int, default=None, help="repetitions / sample count")
        p.add_argument("--input", type=str, default=None, help="state JSON: path, inline, or '-'")
        p.add_argument(
            "--format", choices=("json", "table"), default="table", help="output format"
        )
        p.add_argument(
            "--tol",
            type=float,
            default=COEFFICIENT_TOL,
            help="analytic coefficient tolerance",
        )
        p.set_defaults(fn=fn)
        return p

    add("classify", cmd_classify, "classify a state from JSON")
    add("oracle-check", cmd_oracle_check, "compare analytic and dense verdicts on random states")
    add("random", cmd_random, "generate random GHZ-diagonal states")
    add("threshold", cmd_threshold, "white-noise thresholds per partition")
    add("basis", cmd_basis, "print the GHZ basis for n qubits")
    add("bench", cmd_bench, "time the analytic and dense paths (CSV)")
    return parser


_DEFAULT_COUNTS = {
    "oracle-check": 200,
    "random": 1,
    "bench": 3,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.count is None:
        args.count = _DEFAULT_COUNTS.get(args.command, 1)
    if args.count < 1:
        print("error: --count must be at least 1", file=sys.stderr)
        return EXIT_INPUT_ERROR
    try:
        return args.fn(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
