"""Command line front end.

Exit codes: 0 success, 1 verification failed, 2 usage error, 3 resource limit.
Group orders are always printed as exact decimal integers.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from . import cayley
from .errors import ParameterError, ResourceLimitError
from .group import DEFAULT_BFS_CAP, bfs_enumerate, schreier_sims
from .perm import element_order
from .shuffles import DeckParams, PowerDeckParams, ShuffleKind, in_shuffle, out_shuffle, power_shuffle
from .structure import SCHEMA_VERSION, VERIFY_MAX_DEGREE, predict, verify

EXIT_OK = 0
EXIT_VERDICT_FALSE = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class TableRow:
    deck_size: int
    m: int
    order: int


def shuffle_group_order(deck: int, m: int, engine: str = "chain",
                        cap: int = DEFAULT_BFS_CAP) -> int:
    """Order of ``<I_m, O_m>`` on ``deck`` cards."""
    p = DeckParams.for_deck(deck, m)
    gens = [in_shuffle(p.m, p.n), out_shuffle(p.m, p.n)]
    if engine == "bfs":
        e = bfs_enumerate(gens, cap=cap)
        if not e.complete:
            raise ResourceLimitError(f"BFS exceeded {cap} elements; use --engine chain")
        return e.order
    if engine == "chain":
        return schreier_sims(gens).order
    raise ParameterError(f"unknown engine {engine!r}")


def table_rows(max_deck: int) -> list[TableRow]:
    """Every deck size ``4..max_deck`` and every ``m | N`` with ``2 <= m <= N/2``."""
    rows = []
    for n in range(4, max_deck + 1):
        for m in range(2, n // 2 + 1):
            if n % m == 0:
                rows.append(TableRow(n, m, shuffle_group_order(n, m)))
    return rows


def table_csv(rows: list[TableRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["deck", "m", "order"])
    for r in rows:
        w.writerow([r.deck_size, r.m, r.order])
    return buf.getvalue()


def trace_positions(deck: int, m: int, seq: str, card: int) -> list[int]:
    """Position of ``card`` after each prefix of ``seq`` (read left to right)."""
    p = DeckParams.for_deck(deck, m)
    if not 0 <= card < deck:
        raise ParameterError(f"card {card} out of range for a deck of {deck}")
    shuffles = {"O": out_shuffle(p.m, p.n), "I": in_shuffle(p.m, p.n)}
    bad = set(seq) - set(shuffles)
    if bad:
        raise ParameterError(f"shuffle sequence may only contain O and I, got {''.join(sorted(bad))!r}")
    pos, out = card, []
    for ch in seq:
        pos = shuffles[ch](pos)
        out.append(pos)
    return out


def _dump(doc: dict) -> None:
    print(json.dumps(doc, indent=2))


def cmd_order(args) -> int:
    p = DeckParams.for_deck(args.deck, args.m)
    order = shuffle_group_order(args.deck, args.m, args.engine)
    i_ord = element_order(in_shuffle(p.m, p.n))
    o_ord = element_order(out_shuffle(p.m, p.n))
    if args.json:
        _dump({"schema_version": SCHEMA_VERSION, "deck": args.deck, "m": args.m,
               "engine": args.engine, "order": str(order),
               "in_order": i_ord, "out_order": o_ord})
    else:
        print(f"deck={args.deck} m={args.m} engine={args.engine}")
        print(f"order of <I,O>: {order}")
        print(f"order of I: {i_ord}")
        print(f"order of O: {o_ord}")
    return EXIT_OK


def cmd_table(args) -> int:
    if args.max_deck < 4:
        raise UsageError("--max-deck must be at least 4")
    rows = table_rows(args.max_deck)
    if args.json:
        _dump({"schema_version": SCHEMA_VERSION, "max_deck": args.max_deck,
               "rows": [{"deck": r.deck_size, "m": r.m, "order": str(r.order)} for r in rows]})
    elif args.csv:
        sys.stdout.write(table_csv(rows))
    else:
        width = max([len(str(r.order)) for r in rows] + [5])
        print(f"{'deck':>4}  {'m':>2}  {'order':>{width}}")
        for r in rows:
            print(f"{r.deck_size:>4}  {r.m:>2}  {r.order:>{width}}")
    return EXIT_OK


def cmd_predict(args) -> int:
    pred = predict(args.m, args.k, args.y)
    if args.json:
        _dump(pred.to_dict())
    else:
        p = pred.params
        r = p.reduced()
        print(f"m={p.m} k={p.k} y={p.y} c={p.c} (reduces to m={r.m} k={r.k} y={r.y})")
        print(f"structure: {pred.describe()}")
        print(f"rank: {pred.abelian_rank}")
        print(f"action: {pred.action}")
        print(f"order: {pred.predicted_order}")
    return EXIT_OK


def cmd_verify(args) -> int:
    report = verify(args.m, args.k, args.y, max_degree=args.max_degree)
    if args.json:
        _dump(report.to_dict())
    else:
        p = report.params
        r = p.reduced()
        print(f"m={p.m} k={p.k} y={p.y} c={p.c} (reduces to m={r.m} k={r.k} y={r.y})")
        print(f"predicted order: {report.predicted_order}")
        print(f"computed order:  {report.computed_order}")
        for g in report.generator_checks:
            print(f"  {g.label}: involution={g.involution} digit_action={g.digit_action_matches}")
        print(f"commutation: {report.commutation_ok}")
        print(f"conjugation: {report.conjugation_ok}")
        if report.product_relation_ok is not None:
            print(f"product relation: {report.product_relation_ok}")
        print(f"complement: {report.complement_ok}")
        print(f"verdict: {report.verdict}")
    return EXIT_OK if report.verdict else EXIT_VERDICT_FALSE


def cmd_cayley(args) -> int:
    p = PowerDeckParams(args.m, args.k, args.y)
    label = "" if p.y == 1 else f"_{p.m ** p.y}"
    gens = [(f"O{label}", power_shuffle(p.m, p.k, p.y, ShuffleKind.OUT)),
            (f"I{label}", power_shuffle(p.m, p.k, p.y, ShuffleKind.IN))]
    graph = cayley.build(gens, cap=args.cap)
    dot = cayley.to_dot(graph)
    summary = f"vertices={graph.num_vertices} edges={graph.num_edges}"
    if args.out and args.out != "-":
        with open(args.out, "w") as f:
            f.write(dot)
        print(summary)
    else:
        sys.stdout.write(dot)
        print(summary, file=sys.stderr)
    return EXIT_OK


def cmd_trace(args) -> int:
    positions = trace_positions(args.deck, args.m, args.seq, args.card)
    if args.json:
        _dump({"schema_version": SCHEMA_VERSION, "deck": args.deck, "m": args.m,
               "card": args.card, "sequence": args.seq, "positions": positions})
    else:
        print(f"start {args.card}")
        for ch, pos in zip(args.seq, positions):
            print(f"{ch} {pos}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="shufflegroups",
                                     description="Generalized perfect shuffle groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("order", help="order of <I_m, O_m> on a deck")
    p.add_argument("--deck", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--engine", choices=["bfs", "chain"], default="chain")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("table", help="orders of <I_m, O_m> for all small decks")
    p.add_argument("--max-deck", type=int, required=True)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--csv", action="store_true")
    fmt.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_table)

    for name, func, text in [("predict", cmd_predict, "predicted structure for m^k cards"),
                             ("verify", cmd_verify, "check the predicted structure")]:
        p = sub.add_parser(name, help=text)
        p.add_argument("--m", type=int, required=True)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--y", type=int, required=True)
        p.add_argument("--json", action="store_true")
        if name == "verify":
            p.add_argument("--max-degree", type=int, default=VERIFY_MAX_DEGREE)
        p.set_defaults(func=func)

    p = sub.add_parser("cayley", help="write the Cayley graph as DOT")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--y", type=int, required=True)
    p.add_argument("--out", help="output path (default: standard output)")
    p.add_argument("--cap", type=int, default=cayley.DEFAULT_VERTEX_CAP)
    p.set_defaults(func=cmd_cayley)

    p = sub.add_parser("trace", help="follow one card through a shuffle sequence")
    p.add_argument("--deck", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--seq", required=True, help="shuffles to apply, e.g. OOIO")
    p.add_argument("--card", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_trace)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParameterError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"{parser.prog} {args.command}: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
