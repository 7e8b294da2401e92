"""Command-line interface: nf, solve, gen, verify, attack.

Exit codes are part of the contract: 0 success or solved, 1 not conjugate
(or failed verification), 2 search aborted on the node cap, 3 bad input of
any kind (flags, files, words).  Output is machine-parseable plain text;
--pretty adds human formatting and is never used by tests.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import harness, instance_io
from .braid import word_from_text, word_to_text
from .errors import BraidError
from .normal_form import nf_key, normalize
from .solver import DEFAULT_NODE_CAP, Outcome, solve_mscp, tuple_from_words, verify_conjugator

EXIT_OK = 0
EXIT_NOT_CONJUGATE = 1
EXIT_ABORTED = 2
EXIT_INPUT = 3


class CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # reject unknown flags with the input-error code
        raise CliError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="braidmscp", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_nf = sub.add_parser("nf", help="print the left normal form of a word")
    p_nf.add_argument("-n", type=int, required=True, help="strand count")
    p_nf.add_argument("word", help="word text, e.g. '1 -2' or 'e'")
    p_nf.add_argument("--pretty", action="store_true")

    p_solve = sub.add_parser("solve", help="solve an instance file")
    p_solve.add_argument("instance", type=Path)
    p_solve.add_argument("--cap", type=int, default=DEFAULT_NODE_CAP, help="node cap")
    p_solve.add_argument("--graph", type=Path, help="write the explored graph here")
    p_solve.add_argument("--stats", action="store_true", help="print search counters")
    p_solve.add_argument("--pretty", action="store_true")

    p_gen = sub.add_parser("gen", help="generate a seeded instance with a planted key")
    p_gen.add_argument("out", type=Path, help="output instance path (key goes to <out>.key)")
    p_gen.add_argument("-n", type=int, required=True)
    p_gen.add_argument("-r", type=int, default=1)
    p_gen.add_argument("--entry-len", type=int, default=4)
    p_gen.add_argument("--conj-len", type=int, default=4)
    p_gen.add_argument("--seed", type=int, default=0)

    p_verify = sub.add_parser("verify", help="check a conjugator against an instance")
    p_verify.add_argument("instance", type=Path)
    p_verify.add_argument("conjugator", help="word text")

    p_attack = sub.add_parser("attack", help="run seeded attacks and report a table")
    p_attack.add_argument("--instance", type=Path, help="attack one existing instance file")
    p_attack.add_argument("-n", type=int, default=3)
    p_attack.add_argument("-r", type=int, default=1)
    p_attack.add_argument("--entry-len", type=int, default=4)
    p_attack.add_argument("--conj-len", type=int, default=4)
    p_attack.add_argument("--seed", type=int, default=0)
    p_attack.add_argument("--trials", type=int, default=1)
    p_attack.add_argument("--sweep-r", help="comma list of r values to sweep")
    p_attack.add_argument("--cap", type=int, default=DEFAULT_NODE_CAP)
    p_attack.add_argument("--jobs", type=int, default=1, help="parallel trials")
    p_attack.add_argument("--times", action="store_true", help="include wall-time column")
    p_attack.add_argument("--pretty", action="store_true")

    return parser


def _cmd_nf(args) -> int:
    f = normalize(word_from_text(args.word, args.n))
    if args.pretty:
        print(f"left normal form on {args.n} strands:")
    print(f"inf={f.inf} sup={f.sup} len={f.canonical_length()}")
    print(nf_key(f))
    return EXIT_OK


def _load_instance(path: Path) -> instance_io.InstanceFile:
    return instance_io.parse_instance(path.read_text())


def _cmd_solve(args) -> int:
    inst = _load_instance(args.instance)
    alpha = tuple_from_words(inst.n, inst.alpha)
    beta = tuple_from_words(inst.n, inst.beta)
    result = solve_mscp(alpha, beta, node_cap=args.cap)
    if args.graph is not None:
        fmt = "dot" if args.graph.suffix == ".dot" else "edgelist"
        args.graph.write_text(instance_io.export_graph(result.graph, fmt))
    if args.stats:
        print(instance_io.counters_report(result.graph), end="")
    if result.outcome is Outcome.FOUND:
        if args.pretty:
            print("conjugator:", word_to_text(result.conjugator))
        else:
            print(word_to_text(result.conjugator))
        return EXIT_OK
    if result.outcome is Outcome.NOT_CONJUGATE:
        print("NOT CONJUGATE")
        return EXIT_NOT_CONJUGATE
    print(f"ABORTED: {result.reason}")
    return EXIT_ABORTED


def _cmd_gen(args) -> int:
    params = harness.GenParams(
        n=args.n,
        r=args.r,
        entry_length=args.entry_len,
        conjugator_length=args.conj_len,
        seed=args.seed,
    )
    inst, planted = harness.gen_instance(params)
    args.out.write_text(instance_io.write_instance(inst))
    args.out.with_name(args.out.name + ".key").write_text(word_to_text(planted) + "\n")
    return EXIT_OK


def _cmd_verify(args) -> int:
    inst = _load_instance(args.instance)
    x = word_from_text(args.conjugator, inst.n)
    alpha = tuple_from_words(inst.n, inst.alpha)
    beta = tuple_from_words(inst.n, inst.beta)
    if verify_conjugator(alpha, beta, x):
        print("valid")
        return EXIT_OK
    print("invalid")
    return EXIT_NOT_CONJUGATE


def _attack_instance(args) -> int:
    inst = _load_instance(args.instance)
    key_path = args.instance.with_name(args.instance.name + ".key")
    planted = None
    if key_path.exists():
        planted = word_from_text(key_path.read_text().strip(), inst.n)
    report = harness.run_attack(inst, planted, node_cap=args.cap)
    header = ["instance", "found", "recovered", "matched", "nodes", "conjugations"]
    if args.times:
        header.append("ms")
    cells = [
        args.instance.name,
        str(int(report.result.outcome is Outcome.FOUND)),
        str(int(report.recovered_ok)),
        "-" if report.matches_planted is None else str(int(report.matches_planted)),
        str(report.nodes),
        str(report.conjugations),
    ]
    if args.times:
        cells.append(f"{report.wall_time * 1000:.1f}")
    print("\t".join(header))
    print("\t".join(cells))
    return EXIT_OK


def _cmd_attack(args) -> int:
    if args.instance is not None:
        return _attack_instance(args)
    if args.sweep_r:
        try:
            r_values = [int(tok) for tok in args.sweep_r.split(",") if tok.strip()]
        except ValueError:
            raise CliError(f"bad --sweep-r value {args.sweep_r!r}") from None
        if not r_values:
            raise CliError("--sweep-r lists no values")
    else:
        r_values = [args.r]
    points = [
        harness.GenParams(
            n=args.n,
            r=r,
            entry_length=args.entry_len,
            conjugator_length=args.conj_len,
            seed=args.seed,
        )
        for r in r_values
    ]
    rows = harness.batch_stats(points, args.trials, node_cap=args.cap, jobs=args.jobs)
    print(harness.format_report(rows, include_time=args.times), end="")
    return EXIT_OK


_DISPATCH = {
    "nf": _cmd_nf,
    "solve": _cmd_solve,
    "gen": _cmd_gen,
    "verify": _cmd_verify,
    "attack": _cmd_attack,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _DISPATCH[args.command](args)
    except CliError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_INPUT
    except (BraidError, OSError) as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_INPUT


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
