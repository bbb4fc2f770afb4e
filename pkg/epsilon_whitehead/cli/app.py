import argparse
import json
import logging
import sys
from collections.abc import Callable, Sequence
from pathlib import Path

from rich.console import Console

from epsilon_whitehead import __version__
from epsilon_whitehead.cli.components.tables import (
    degree_table,
    descent_table,
    epsilon_rows_table,
    status_markup,
    verdict_markup,
    verification_table,
)
from epsilon_whitehead.cli.utils import (
    EXIT_FAILURE,
    EXIT_OK,
    EXIT_UNDECIDED,
    EXIT_USAGE,
    alphabet_for_rank,
    positive_int,
    rational_arg,
    write_text,
)
from epsilon_whitehead.config import WhiteheadConfig
from epsilon_whitehead.decision.descent import DecisionError, UndecidedError, is_primitive
from epsilon_whitehead.decision.models import certificate_record
from epsilon_whitehead.free_group.models import RankGuardExceededError, WordError
from epsilon_whitehead.free_group.parsing import parse_word, serialize
from epsilon_whitehead.free_group.reduction import to_cyclic
from epsilon_whitehead.geometry.construction import build_fk, canonical_tree
from epsilon_whitehead.geometry.epsilon import chord_length, epsilon, epsilon_table
from epsilon_whitehead.geometry.models import GeometryError, InvalidParameterError
from epsilon_whitehead.geometry.records import loop_record
from epsilon_whitehead.geometry.tracing import trace_word
from epsilon_whitehead.pipeline.verify import VerificationReport, verify, verify_for_epsilon
from epsilon_whitehead.pipeline.word_family import gen_wk, wk_alphabet
from epsilon_whitehead.utils.logging import configure_logging
from epsilon_whitehead.utils.rationals import format_circle_fraction, radians, rational_record
from epsilon_whitehead.whitehead.classify import WhiteheadGraphError, classify
from epsilon_whitehead.whitehead.graph import build_whitehead_graph, to_dot, to_record

Handler = Callable[[argparse.Namespace, WhiteheadConfig, Console], int]


def create_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="epsilon-whitehead",
        description="Whitehead graphs, certified primitivity and epsilon-maps of the circle",
    )
    parser.add_argument(
        "-V",
        "--version",
        action="version",
        version=f"%(prog)s {__version__}",
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="store_true",
        help="Log descent steps and the epsilon search at debug level",
    )
    parser.add_argument(
        "--rank-guard",
        type=positive_int,
        metavar="N",
        help="Largest rank for full Whitehead enumeration (default: 11)",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    genw = sub.add_parser("genw", help="Print the word w_k")
    genw.add_argument("--k", type=positive_int, required=True)
    genw.set_defaults(handler=_cmd_genw)

    wgraph = sub.add_parser("wgraph", help="Build and classify the Whitehead graph of a word")
    wgraph.add_argument("--word", required=True, metavar="W")
    wgraph.add_argument("--rank", type=positive_int, required=True, metavar="N")
    wgraph.add_argument("--dot", type=Path, metavar="PATH", help="Write the graph as DOT")
    wgraph.add_argument("--json", action="store_true", help="Print the edge list as JSON")
    wgraph.set_defaults(handler=_cmd_wgraph)

    primitive = sub.add_parser("primitive", help="Decide whether a word is primitive")
    primitive.add_argument("--word", required=True, metavar="W")
    primitive.add_argument("--rank", type=positive_int, required=True, metavar="N")
    primitive.add_argument("--json", action="store_true")
    primitive.set_defaults(handler=_cmd_primitive)

    eps = sub.add_parser("epsilon", help="Exact epsilon of the loop f_k")
    eps.add_argument("--k", type=positive_int, required=True)
    eps.add_argument("--chord", action="store_true", help="Also report the chord length")
    eps.set_defaults(handler=_cmd_epsilon)

    trace = sub.add_parser("trace", help="Read w_k back off the loop f_k")
    trace.add_argument("--k", type=positive_int, required=True)
    trace.add_argument("--json", action="store_true", help="Print G_k and f_k as JSON")
    trace.set_defaults(handler=_cmd_trace)

    ver = sub.add_parser("verify", help="Run the full verification for w_k")
    target = ver.add_mutually_exclusive_group(required=True)
    target.add_argument("--k", type=positive_int)
    target.add_argument(
        "--eps",
        type=rational_arg,
        metavar="RATIONAL",
        help="Target epsilon as a fraction of the full circle, e.g. 1/2 for pi",
    )
    ver.add_argument("--json", action="store_true")
    ver.set_defaults(handler=_cmd_verify)

    table = sub.add_parser("table", help="Exact epsilon(f_k) for k = 1..N")
    table.add_argument("--max-k", type=positive_int, required=True, metavar="N")
    table.add_argument("--chord", action="store_true", help="Add a chord-length column")
    table.add_argument("--json", action="store_true")
    table.set_defaults(handler=_cmd_table)

    return parser


def _cmd_genw(args: argparse.Namespace, _config: WhiteheadConfig, console: Console) -> int:
    console.print(serialize(gen_wk(args.k), wk_alphabet(args.k)), soft_wrap=True, highlight=False)
    return EXIT_OK


def _cmd_wgraph(args: argparse.Namespace, _config: WhiteheadConfig, console: Console) -> int:
    alphabet = alphabet_for_rank(args.rank)
    c = to_cyclic(parse_word(args.word, alphabet))
    graph = build_whitehead_graph(c, alphabet)
    status = classify(graph)

    if args.dot:
        write_text(args.dot, to_dot(graph))
    if args.json:
        payload = to_record(graph).model_dump(mode="json")
        payload["status"] = status.kind.value
        console.print_json(json.dumps(payload))
        return EXIT_OK

    console.print(degree_table(graph, status))
    console.print(f"Status: {status_markup(status.kind)}")
    if args.dot:
        console.print(f"DOT written to [blue]{args.dot}[/blue]")
    return EXIT_OK


def _cmd_primitive(args: argparse.Namespace, config: WhiteheadConfig, console: Console) -> int:
    alphabet = alphabet_for_rank(args.rank)
    result = is_primitive(parse_word(args.word, alphabet), alphabet, config)
    record = certificate_record(result, alphabet)

    if args.json:
        console.print_json(record.model_dump_json())
        return EXIT_OK

    console.print(f"Verdict: {verdict_markup(result.primitive)} ({result.method.value})")
    if record.trace or record.minimal_word is not None:
        console.print(descent_table(record))
    if record.minimal_word is not None:
        console.print(f"Minimal word: {record.minimal_word}", highlight=False)
    if record.graph_status is not None:
        console.print(f"Whitehead graph: {record.graph_status}")
    return EXIT_OK


def _cmd_epsilon(args: argparse.Namespace, _config: WhiteheadConfig, console: Console) -> int:
    value = epsilon(build_fk(args.k))
    console.print(f"epsilon(f_{args.k}) = {format_circle_fraction(value)} = {radians(value):.6f} rad")
    if args.chord:
        console.print(f"chord: {chord_length(value):.6f}")
    return EXIT_OK


def _cmd_trace(args: argparse.Namespace, _config: WhiteheadConfig, console: Console) -> int:
    loop = build_fk(args.k)
    if args.json:
        console.print_json(loop_record(loop).model_dump_json())
        return EXIT_OK

    alphabet = wk_alphabet(args.k)
    traced = trace_word(loop, canonical_tree(args.k), alphabet)
    console.print(serialize(traced, alphabet), soft_wrap=True, highlight=False)
    if traced != gen_wk(args.k):
        Console(stderr=True).print("[red]Error:[/red] traced word differs from w_k")
        return EXIT_FAILURE
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace, config: WhiteheadConfig, console: Console) -> int:
    report: VerificationReport
    if args.eps is not None:
        report = verify_for_epsilon(args.eps, config)
    else:
        report = verify(args.k, config)

    if args.json:
        console.print_json(report.model_dump_json())
    else:
        console.print(verification_table(report))
    return EXIT_OK if report.is_consistent() else EXIT_FAILURE


def _cmd_table(args: argparse.Namespace, _config: WhiteheadConfig, console: Console) -> int:
    rows = epsilon_table(args.max_k)
    if args.json:
        payload: list[dict[str, object]] = []
        for k, v in rows:
            row: dict[str, object] = {
                "k": k,
                "epsilon": rational_record(v, unit="2pi", with_decimal=True).model_dump(),
            }
            if args.chord:
                row["chord"] = chord_length(v)
            payload.append(row)
        console.print_json(json.dumps(payload))
        return EXIT_OK
    console.print(epsilon_rows_table(rows, chord=args.chord))
    return EXIT_OK


def run(argv: Sequence[str] | None = None) -> int:
    parser = create_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    config = WhiteheadConfig().with_rank_guard(args.rank_guard)
    configure_logging(logging.DEBUG if args.verbose else config.log_level.value)

    console = Console()
    err_console = Console(stderr=True)
    handler: Handler = args.handler

    try:
        return handler(args, config, console)
    except (UndecidedError, RankGuardExceededError) as e:
        err_console.print(f"[yellow]Undecided:[/yellow] {e}")
        return EXIT_UNDECIDED
    except (WordError, InvalidParameterError) as e:
        err_console.print(f"[red]Error:[/red] {e}")
        return EXIT_USAGE
    except (DecisionError, GeometryError, WhiteheadGraphError, OSError) as e:
        err_console.print(f"[red]Error:[/red] {e}")
        return EXIT_FAILURE
    except KeyboardInterrupt:
        err_console.print("\n[yellow]Interrupted.[/yellow]")
        return 130


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
