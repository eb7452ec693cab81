"""Command-line front end.

Graph files: first line "n m", then m lines "u v" with 0-based ids.  Order
files use the same layout with "u v" meaning u < v.  Lines starting with '#'
and blank lines are ignored.  Exit status is 0 on acceptance, 1 on refusal
and 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import os
import statistics
import sys
import time

from . import oracle
from .conflict import assign_literals, conflict_graph, two_color
from .domination import build_context
from .errors import InputError, NotComparability, OddCycle, PiError, TooLarge
from .formulas import build_phi1, build_phi2, to_dimacs
from .graphs import Graph, StrictOrder, complement
from .orientation import transitive_orientation
from .pipeline import recognize_graph, recognize_order
from .representation import PiRepresentation, interval_realization, verify_representation

EXIT_OK, EXIT_REFUSED, EXIT_INPUT = 0, 1, 2


class ParseError(InputError):
    def __init__(self, line: int, col: int, message: str):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


def _tokens(text: str):
    """Yield (line number, [(column, token), ...]) for every non-comment line."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip() or raw.lstrip().startswith("#"):
            continue
        toks = []
        col = 0
        for part in raw.split():
            col = raw.index(part, col)
            toks.append((col + 1, part))
            col += len(part)
        yield lineno, toks


def _ints(lineno, toks, count, what):
    if len(toks) != count:
        col = toks[count][0] if len(toks) > count else len(" ".join(t for _, t in toks)) + 1
        raise ParseError(lineno, col, f"expected {count} integers ({what}), got {len(toks)} fields")
    out = []
    for col, tok in toks:
        try:
            out.append(int(tok))
        except ValueError:
            raise ParseError(lineno, col, f"not an integer: {tok!r}") from None
        if out[-1] < 0:
            raise ParseError(lineno, col, f"negative value {tok}")
    return out


def parse_pairs(text: str) -> tuple[int, list[tuple[int, int]]]:
    lines = list(_tokens(text))
    if not lines:
        raise ParseError(1, 1, "empty file, expected header 'n m'")
    lineno, toks = lines[0]
    n, m = _ints(lineno, toks, 2, "n m")
    body = lines[1:]
    if len(body) < m:
        last = text.count("\n") + 1
        raise ParseError(last, 1, f"file ends after {len(body)} of {m} pairs")
    if len(body) > m:
        lineno, toks = body[m]
        raise ParseError(lineno, toks[0][0], f"more than the declared {m} pairs")
    pairs = []
    seen = set()
    for lineno, toks in body:
        u, v = _ints(lineno, toks, 2, "u v")
        for col, x in zip((toks[0][0], toks[1][0]), (u, v)):
            if x >= n:
                raise ParseError(lineno, col, f"id {x} out of range for n = {n}")
        if u == v:
            raise ParseError(lineno, toks[1][0], f"self-loop on {u}")
        if (u, v) in seen:
            raise ParseError(lineno, 1, f"duplicate pair {u} {v}")
        seen.add((u, v))
        pairs.append((u, v))
    return n, pairs


def parse_graph(text: str) -> Graph:
    n, pairs = parse_pairs(text)
    if len({frozenset(p) for p in pairs}) != len(pairs):
        raise InputError("duplicate edge given in both directions")
    return Graph.from_edges(n, pairs)


def parse_order(text: str) -> StrictOrder:
    n, pairs = parse_pairs(text)
    if any((v, u) in set(pairs) for u, v in pairs):
        raise InputError("relation is not antisymmetric")
    return StrictOrder.from_pairs(n, pairs)


def format_graph(g: Graph, header: str = "") -> str:
    edges = g.edges()
    lines = [f"# {header}"] if header else []
    lines.append(f"{g.n} {len(edges)}")
    lines += [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def format_order(p: StrictOrder, header: str = "") -> str:
    pairs = p.pairs()
    lines = [f"# {header}"] if header else []
    lines.append(f"{p.n} {len(pairs)}")
    lines += [f"{u} {v}" for u, v in pairs]
    return "\n".join(lines) + "\n"


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _emit(obj) -> None:
    print(json.dumps(obj))


# ---------------------------------------------------------------------------
# commands


def cmd_recognize(args) -> int:
    g = parse_graph(_read(args.path))
    out = recognize_graph(g)
    if args.cnf:
        _write_cnf(g, args.cnf)
    if out.accepted and not verify_representation(out.representation, g):
        raise PiError("internal error: representation failed re-verification")
    _emit(out.to_json())
    return EXIT_OK if out.accepted else EXIT_REFUSED


def _write_cnf(g: Graph, path: str) -> None:
    """Write phi1 & phi2 in DIMACS form; nothing is written if the formulas are never built."""
    try:
        p = transitive_orientation(complement(g))
        ctx = build_context(p)
        la = assign_literals(cg := conflict_graph(ctx.H), two_color(cg))
    except (NotComparability, OddCycle):
        return
    text = to_dimacs(build_phi1(ctx, la), build_phi2(ctx, la), la.k)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def cmd_recognize_order(args) -> int:
    p = parse_order(_read(args.path))
    out = recognize_order(p)
    if not out.accepted:
        _emit({"status": "not_linear_interval", "stage": out.stage, "witness": out.witness})
        return EXIT_REFUSED
    rp = out.realizer
    _emit({
        "status": "linear_interval",
        "P1": rp.P1.sequence(),
        "P2": [list(iv) for iv in interval_realization(rp.P2)],
    })
    return EXIT_OK


def cmd_verify(args) -> int:
    g = parse_graph(_read(args.graph))
    try:
        rep = PiRepresentation.from_json(json.loads(_read(args.representation)))
    except json.JSONDecodeError as exc:
        raise ParseError(exc.lineno, exc.colno, exc.msg) from None
    ok = verify_representation(rep, g)
    _emit({"status": "match" if ok else "mismatch"})
    return EXIT_OK if ok else EXIT_REFUSED


def cmd_oracle(args) -> int:
    text = _read(args.path)
    if args.order:
        verdict = oracle.oracle_is_linear_interval(parse_order(text))
        _emit({"linear_interval": verdict})
    else:
        report = oracle.oracle_pi_report(parse_graph(text))
        verdict = report.verdict
        _emit({"pi": verdict, "orientations": report.orientations, "orientations_agree": report.all_agree})
    return EXIT_OK if verdict else EXIT_REFUSED


def _default_seed() -> int:
    raw = os.environ.get("PI_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"PI_SEED must be an integer, got {raw!r}") from None


def cmd_gen(args) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    header = f"kind={args.kind} n={args.n} seed={seed}"
    if args.kind == "pi":
        g, _ = oracle.random_pi_instance(args.n, seed)
        text = format_graph(g, header)
    elif args.kind == "graph":
        text = format_graph(oracle.random_graph(args.n, args.p, seed), header + f" p={args.p}")
    elif args.kind == "permutation":
        text = format_graph(oracle.random_permutation_graph(args.n, seed), header)
    elif args.kind == "interval":
        text = format_graph(oracle.random_interval_graph(args.n, seed), header)
    else:
        text = format_order(oracle.random_poset(args.n, seed), header)
    if args.output and args.output != "-":
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def selftest(max_n: int = 5, log=print) -> list[str]:
    """Exhaustive agreement with the oracle; returns the list of disagreements."""
    failures = []
    for n in range(max_n + 1):
        count = 0
        for g in oracle.all_graphs(n):
            count += 1
            if recognize_graph(g).accepted != oracle.oracle_is_pi_graph(g):
                failures.append(f"graph n={n} edges={g.edges()}")
        log(f"graphs n={n}: {count} checked")
        count = 0
        for p in oracle.all_posets(n):
            count += 1
            if recognize_order(p).accepted != oracle.oracle_is_linear_interval(p):
                failures.append(f"order n={n} pairs={p.pairs()}")
        log(f"orders n={n}: {count} checked")
    return failures


def cmd_selftest(args) -> int:
    failures = selftest(args.max_n, log=lambda s: print(s, file=sys.stderr))
    _emit({"status": "pass" if not failures else "fail", "disagreements": failures})
    return EXIT_OK if not failures else EXIT_REFUSED


def bench(sizes, reps: int, seed: int) -> list[dict]:
    rows = []
    for n in sizes:
        walls = []
        stages: dict[str, list[float]] = {}
        m = []
        for r in range(reps):
            g, _ = oracle.random_pi_instance(n, seed + r)
            t0 = time.perf_counter()
            out = recognize_graph(g)
            walls.append(time.perf_counter() - t0)
            m.append(g.edge_count)
            for k, v in out.timings.items():
                stages.setdefault(k, []).append(v)
        rows.append({
            "n": n,
            "m_median": statistics.median(m),
            "wall_median": statistics.median(walls),
            "stages_median": {k: statistics.median(v) for k, v in stages.items()},
        })
    return rows


def cmd_bench(args) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    _emit(bench(args.sizes, args.reps, seed))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pirecog", description="PI graph and linear-interval order recognition")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("recognize", help="decide whether a graph is a PI graph")
    s.add_argument("path")
    s.add_argument("--cnf", metavar="FILE", help="also write the 2/3-CNF formulas in DIMACS form")
    s.set_defaults(func=cmd_recognize)

    s = sub.add_parser("recognize-order", help="decide whether an order is linear-interval")
    s.add_argument("path")
    s.set_defaults(func=cmd_recognize_order)

    s = sub.add_parser("verify", help="check a representation against a graph")
    s.add_argument("graph")
    s.add_argument("representation")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("oracle", help="brute-force verdict for small inputs")
    s.add_argument("path")
    s.add_argument("--order", action="store_true", help="input is an order file")
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("gen", help="write a random instance")
    s.add_argument("kind", choices=["pi", "graph", "poset", "permutation", "interval"])
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--seed", type=int, default=None, help="defaults to $PI_SEED or 0")
    s.add_argument("--p", type=float, default=0.5, help="edge probability for 'graph'")
    s.add_argument("-o", "--output", default=None)
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("selftest", help="exhaustive agreement with the oracle")
    s.add_argument("--max-n", type=int, default=5)
    s.set_defaults(func=cmd_selftest)

    s = sub.add_parser("bench", help="time recognition on random PI instances")
    s.add_argument("--sizes", type=int, nargs="+", default=[50, 100, 200])
    s.add_argument("--reps", type=int, default=3)
    s.add_argument("--seed", type=int, default=None)
    s.set_defaults(func=cmd_bench)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, TooLarge, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
