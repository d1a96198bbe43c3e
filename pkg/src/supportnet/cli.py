"""Command-line interface: ``supportnet [--input FILE] [--json] COMMAND ...``.

Exit codes: 0 success, 1 domain error (invalid network, failed check,
oversized search), 2 usage error.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from typing import Sequence, TextIO

from .experiment import ExperimentConfig, rows_to_csv, run_experiment
from .families import EmptyFamilyError, Family, count_family, enumerate_family
from .formats import ParseError, ValidationFailed, export_dot, parse_network, write_network
from .network import EdgeSelection, NetworkError, PhyloNetwork, induce_subgraph, smooth
from .optimize import DEFAULT_MAX_SPACE, min_level_exact, min_level_heuristic, min_tier
from .randgen import GenParams, random_network
from .zigzag import decompose


def _common(defaults: bool) -> argparse.ArgumentParser:
    # global flags are accepted both before and after the subcommand
    p = argparse.ArgumentParser(add_help=False)
    d = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
    p.add_argument("--input", "-i", default=d("-"), metavar="FILE", help="network file, '-' for stdin")
    p.add_argument("--json", action="store_true", default=d(False), help="machine-readable output")
    p.add_argument(
        "--almost-binary",
        action="store_true",
        default=d(False),
        help="accept vertices of in- and outdegree at most 2, including passthroughs",
    )
    return p


def parse_int_list(text: str) -> list[int]:
    out: list[int] = []
    for part in text.split(","):
        if "-" in part:
            lo, hi = part.split("-")
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="supportnet", parents=[_common(True)], description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common(False)
    families = [f.value for f in Family]

    sub.add_parser("validate", parents=[common], help="check the network axioms")
    sub.add_parser("decompose", parents=[common], help="maximal zig-zag trails")

    p = sub.add_parser("count", parents=[common], help="exact family size")
    p.add_argument("--family", choices=families, required=True)

    p = sub.add_parser("list", parents=[common], help="list family members")
    p.add_argument("--family", choices=families, required=True)
    p.add_argument("--limit", type=int, default=None)

    sub.add_parser("min-tier", parents=[common], help="support network with fewest reticulations")

    p = sub.add_parser("min-level", parents=[common], help="support network of least level")
    p.add_argument("--method", choices=["exact", "heuristic"], default="exact")
    p.add_argument("--max-space", type=int, default=DEFAULT_MAX_SPACE, help="refuse larger search spaces")

    p = sub.add_parser("generate", parents=[common], help="random network")
    p.add_argument("-n", type=int, required=True, help="leaf count")
    p.add_argument("-r", type=int, required=True, help="reticulation count")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("-o", "--output", default=None)

    p = sub.add_parser("oracle", parents=[common], help="brute-force cross-checks")
    p.add_argument("--check", choices=["counts", "min-level", "lemma1"], required=True)
    p.add_argument("--cap", type=int, default=24)

    p = sub.add_parser("export-dot", parents=[common], help="Graphviz DOT output")
    p.add_argument("--selection", default="none", help="'none', 'min-tier', or comma-separated edge indices")
    p.add_argument("--trails", action="store_true", help="colour edges by zig-zag trail")

    p = sub.add_parser("experiment", parents=[common], help="batch runs over random networks (CSV)")
    p.add_argument("--n", type=parse_int_list, default=parse_int_list("3-10"), help="leaf counts, e.g. 3-10 or 4,8")
    p.add_argument("--r", type=parse_int_list, default=None, help="reticulation counts (default 2(n-1))")
    p.add_argument("--seeds", type=int, default=100)
    p.add_argument("--seed-offset", type=int, default=0)
    p.add_argument("--no-levels", action="store_true", help="skip level minimisation")
    p.add_argument("--max-space", type=int, default=10**6)
    p.add_argument("--timings", action="store_true", help="append runtime columns (not byte-stable)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("-o", "--output", default=None)
    return parser


def _load(args, stdin: TextIO) -> PhyloNetwork:
    if args.input == "-":
        text = stdin.read()
    else:
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
    return parse_network(text, almost_binary=args.almost_binary)


def _fmt_edges(sel: EdgeSelection) -> str:
    return " ".join(str(e) for e in sel.indices())


def _emit(out: TextIO, args, text_lines: list[str], payload: dict) -> None:
    if args.json:
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        out.write("".join(line + "\n" for line in text_lines))


def run(argv: Sequence[str] | None = None, stdin: TextIO | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _dispatch(args, stdin, stdout)
    except ValidationFailed as err:
        if args.json:
            stdout.write(json.dumps({"valid": False, "violations": [str(v) for v in err.report.violations]}) + "\n")
        stderr.write(f"error: {err}\n")
        return 1
    except (NetworkError, OSError) as err:
        stderr.write(f"error: {err}\n")
        return 1


def _dispatch(args, stdin: TextIO, out: TextIO) -> int:
    cmd = args.command
    if cmd == "generate":
        net = random_network(GenParams(args.n, args.r, args.seed))
        text = write_network(net)
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            out.write(text)
        return 0
    if cmd == "experiment":
        config = ExperimentConfig(
            n_values=args.n,
            r_values=args.r,
            seeds=args.seeds,
            seed_offset=args.seed_offset,
            levels=not args.no_levels,
            max_space=args.max_space,
            jobs=args.jobs,
        )
        text = rows_to_csv(run_experiment(config), timings=args.timings)
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            out.write(text)
        return 0

    net = _load(args, stdin)
    if cmd == "validate":
        _emit(
            out,
            args,
            [f"valid: |V|={net.num_vertices} |E|={net.num_edges} leaves={len(net.leaf_labels)} reticulations={len(net.reticulations)}"],
            {
                "valid": True,
                "vertices": net.num_vertices,
                "edges": net.num_edges,
                "leaves": len(net.leaf_labels),
                "reticulations": len(net.reticulations),
            },
        )
        return 0
    if cmd == "decompose":
        dec = decompose(net)
        lines = []
        trails = []
        for t in dec.trails:
            lines.append(f"Z{t.index + 1} {t.kind.value} {t.size}: " + " ".join(f"e{e}" for e in t.edges))
            trails.append({"id": t.index + 1, "type": t.kind.value, "size": t.size, "edges": list(t.edges)})
        _emit(out, args, lines, {"trails": trails})
        return 0
    if cmd == "count":
        value = count_family(net, Family(args.family))
        _emit(out, args, [str(value)], {"family": args.family, "count": str(value)})
        return 0
    if cmd == "list":
        family = Family(args.family)
        lines, items = [], []
        try:
            for sel in enumerate_family(net, family, limit=args.limit):
                items.append(sel.indices())
                lines.append(_fmt_edges(sel))
        except EmptyFamilyError:
            pass
        lines.append(f"emitted: {len(items)}")
        _emit(out, args, lines, {"family": args.family, "selections": items, "emitted": len(items)})
        return 0
    if cmd == "min-tier":
        sel, rstar = min_tier(net)
        parallel = smooth(induce_subgraph(net, sel)).has_parallel_edges
        _emit(
            out,
            args,
            [f"r*={rstar}", f"edges: {_fmt_edges(sel)}", f"parallel-edges: {'yes' if parallel else 'no'}"],
            {"rstar": rstar, "edges": sel.indices(), "parallel_edges": parallel},
        )
        return 0
    if cmd == "min-level":
        solve = min_level_exact if args.method == "exact" else min_level_heuristic
        res = solve(net, max_space=args.max_space)
        parallel = smooth(induce_subgraph(net, res.selection)).has_parallel_edges
        rs = res.block_reticulations
        _emit(
            out,
            args,
            [
                f"level={res.level}",
                f"method={res.method}",
                f"edges: {_fmt_edges(res.selection)}",
                "blocks: " + " ".join(str(r) for r in rs),
                f"parallel-edges: {'yes' if parallel else 'no'}",
            ],
            {
                "level": res.level,
                "method": res.method,
                "optimal": res.optimal,
                "edges": res.selection.indices(),
                "block_reticulations": rs,
                "parallel_edges": parallel,
            },
        )
        return 0
    if cmd == "oracle":
        return _oracle(net, args, out)
    if cmd == "export-dot":
        if args.selection == "none":
            sel = None
        elif args.selection == "min-tier":
            sel, _ = min_tier(net)
        else:
            sel = EdgeSelection.from_indices(net, parse_int_list(args.selection))
        out.write(export_dot(net, sel, decompose(net) if args.trails else None))
        return 0
    raise AssertionError(cmd)


def _oracle(net: PhyloNetwork, args, out: TextIO) -> int:
    from . import oracle

    results: list[tuple[str, bool, str]] = []
    if args.check == "counts":
        for fam in Family:
            fast = count_family(net, fam)
            slow = oracle.brute_force_count(net, fam, cap=args.cap)
            results.append((fam.value, fast == slow, f"formula={fast} brute={slow}"))
    elif args.check == "min-level":
        exact = min_level_exact(net).level
        slow, _ = oracle.brute_force_min_level(net, cap=args.cap)
        results.append(("min-level", exact == slow, f"exact={exact} brute={slow}"))
    else:
        rep = oracle.lemma1_check(net, cap=args.cap)
        results.append(
            (
                "lemma1",
                rep.ok,
                f"checked={rep.checked} discrepancies={len(rep.discrepancies)} parallel={rep.parallel_flagged}",
            )
        )
    ok = all(r[1] for r in results)
    lines = [f"{'PASS' if good else 'FAIL'} {name}: {detail}" for name, good, detail in results]
    _emit(
        out,
        args,
        lines,
        {"check": args.check, "pass": ok, "results": [{"name": n, "pass": g, "detail": d} for n, g, d in results]},
    )
    return 0 if ok else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
