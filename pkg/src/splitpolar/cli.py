"""Command-line front end: ``splitpolar <command> [options] < graphs.g6``.

Exit status is 0 when every input was decided (and, for yes/no commands,
answered yes), 1 when some answer was no, 2 on an input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from typing import IO, Iterable, Iterator

from .coloring import ColoringProfile, ps_coloring_profile
from .graph import Graph, Graph6Error, GraphError, from_graph6, to_graph6
from .oracle import (COLORING_MAX_ORDER, POLAR_MAX_ORDER, UNIPOLAR, PolarPartition, PolarityParams,
                     oracle_bichromatic, oracle_chromatic, oracle_clique_cover, oracle_cochromatic,
                     oracle_polar, parse_count)
from .pseudosplit import ps_catalog, ps_witness
from .recognition import recognize_h_split, recognize_pseudo_split, recognize_split, split_witness
from .search import FamilySpec, find_minimal_obstructions
from .twok2 import c4_witness, twok2_catalog, twok2_witness

EXIT_OK, EXIT_NO, EXIT_INPUT = 0, 1, 2

PS_NAMES = ("G_s0", "G_s1", "H_sk", "F_s", "K1_join_C5")
TWOK2_NAMES = ("one_I_full", "one_I_miss2", "one_I_miss1", "H_s", "K2_join_2K2",
               "K1_join_2K2_plus_K", "star_k", "tight_k", "twin_left", "twin_right")


class InputError(Exception):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(message)
        self.line = line

    def __str__(self) -> str:
        msg = super().__str__()
        return msg if self.line is None else f"line {self.line}: {msg}"


# --------------------------------------------------------------------------
# library-level helpers the commands share

def class_ladder(g: Graph) -> dict:
    """Membership in split / pseudo-split / 2K2-split / C4-split with partitions."""
    out: dict = {}
    sp = recognize_split(g)
    out["split"] = None if sp is None else {"clique": sorted(sp.clique), "independent": sorted(sp.independent)}
    ps = recognize_pseudo_split(g)
    for name, part in (("pseudo-split", ps.partition if ps.is_pseudo_split else None),
                       ("2K2-split", recognize_h_split(g, "2K2")),
                       ("C4-split", recognize_h_split(g, "C4"))):
        out[name] = None if part is None else {
            "C": sorted(part.C), "S": sorted(part.S), "I": sorted(part.I), "strict": part.strict}
    return out


def ladder_class(ladder: dict) -> str:
    for name in ("split", "pseudo-split", "2K2-split", "C4-split"):
        if ladder[name] is not None:
            return name
    return "none"


def decide_polarity(g: Graph, p) -> tuple[PolarPartition | None, str]:
    """Witness (or ``None``) and the method used: the class decider, else the oracle."""
    p = p if isinstance(p, PolarityParams) else PolarityParams(*p)
    if p.s == 0 and p.k == 0:
        raise GraphError("(0,0) is excluded: s + k must be at least 1")
    if recognize_split(g) is not None:
        return split_witness(g, p), "split"
    if recognize_pseudo_split(g).is_pseudo_split:
        return ps_witness(g, p), "pseudo-split"
    if recognize_h_split(g, "2K2") is not None:
        return twok2_witness(g, p), "2K2-split"
    if recognize_h_split(g, "C4") is not None:
        return c4_witness(g, p), "C4-split"
    if g.n > POLAR_MAX_ORDER:
        raise GraphError(f"graph is in no supported class and has order {g.n} > {POLAR_MAX_ORDER}")
    return oracle_polar(g, p), "oracle"


def coloring_profile(g: Graph) -> ColoringProfile:
    if recognize_pseudo_split(g).is_pseudo_split:
        return ps_coloring_profile(g)
    if g.n > COLORING_MAX_ORDER:
        raise GraphError(f"coloring of non-pseudo-split graphs supports n <= {COLORING_MAX_ORDER}")
    return ColoringProfile(oracle_chromatic(g), oracle_clique_cover(g), oracle_cochromatic(g),
                           oracle_bichromatic(g), "oracle")


def catalog_graph(name: str, s=None, k=None) -> Graph:
    if name in PS_NAMES:
        return ps_catalog(name, s, k)
    if name in TWOK2_NAMES:
        return twok2_catalog(name, s, k)
    raise GraphError(f"unknown catalog name {name!r}")


# --------------------------------------------------------------------------
# input and output

def read_graphs(stream: IO[str]) -> Iterator[tuple[int, str, Graph | None, str | None]]:
    """Yield ``(line number, text, graph or None, error or None)`` for each nonblank line."""
    for lineno, raw in enumerate(stream, start=1):
        text = raw.strip()
        if not text:
            continue
        try:
            yield lineno, text, from_graph6(text), None
        except Graph6Error:
            yield lineno, text, None, "malformed graph6"
        except GraphError as exc:
            yield lineno, text, None, str(exc)


def strict_graphs(stream: IO[str]) -> Iterator[tuple[int, Graph]]:
    for lineno, _, g, err in read_graphs(stream):
        if err is not None:
            raise InputError(err, lineno)
        yield lineno, g


def _fmt_parts(parts) -> str:
    return "[" + ", ".join("{" + ",".join(map(str, sorted(x))) + "}" for x in parts) + "]"


class Emitter:
    def __init__(self, fmt: str, out: IO[str]):
        self.fmt, self.out = fmt, out

    def record(self, rec: dict, text: str) -> None:
        if self.fmt == "json-lines":
            self.out.write(json.dumps(rec, sort_keys=True) + "\n")
        else:
            self.out.write(text + "\n")


def _count(value: str):
    try:
        return parse_count(value)
    except GraphError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


# --------------------------------------------------------------------------
# commands

def cmd_recognize(args, stream, em: Emitter) -> int:
    for _, g in strict_graphs(stream):
        ladder = class_ladder(g)
        verdict = ladder_class(ladder)
        lines = [f"{to_graph6(g)}: {verdict}"]
        for name, part in ladder.items():
            if part is None:
                lines.append(f"  {name}: no")
            elif name == "split":
                lines.append(f"  split: K={part['clique']} I={part['independent']}")
            else:
                tag = "strict" if part["strict"] else "split"
                lines.append(f"  {name}: C={part['C']} S={part['S']} I={part['I']} ({tag})")
        em.record({"graph6": to_graph6(g), "command": "recognize", "verdict": verdict,
                   "profile": ladder}, "\n".join(lines))
    return EXIT_OK


def cmd_polarity(args, stream, em: Emitter) -> int:
    p = PolarityParams(args.s, args.k)
    status = EXIT_OK
    for lineno, g in strict_graphs(stream):
        try:
            w, method = decide_polarity(g, p)
        except GraphError as exc:
            raise InputError(str(exc), lineno) from None
        g6 = to_graph6(g)
        if w is None:
            status = EXIT_NO
            em.record({"graph6": g6, "command": "polarity", "verdict": f"non-polar{p}",
                       "method": method}, f"{g6}: non-polar{p}")
        else:
            em.record({"graph6": g6, "command": "polarity", "verdict": f"polar{p}",
                       "method": method, "witness": w.as_lists()},
                      f"{g6}: polar{p} A={_fmt_parts(w.A_parts)} B={_fmt_parts(w.B_cliques)}")
    return status


def cmd_coloring(args, stream, em: Emitter) -> int:
    for lineno, g in strict_graphs(stream):
        try:
            prof = coloring_profile(g)
        except GraphError as exc:
            raise InputError(str(exc), lineno) from None
        g6 = to_graph6(g)
        em.record({"graph6": g6, "command": "coloring", "verdict": "computed", "profile": asdict(prof)},
                  f"{g6}: chi={prof.chi} theta={prof.theta} cochromatic={prof.cochromatic} "
                  f"bichromatic={prof.bichromatic} ({prof.source})")
    return EXIT_OK


def cmd_obstructions(args, stream, em: Emitter) -> int:
    target = UNIPOLAR if args.unipolar else PolarityParams(args.s, args.k)
    try:
        spec = FamilySpec(args.cls, (0, args.max_c), (0, args.max_i))
        report = find_minimal_obstructions(spec, target, args.order_cap)
    except GraphError as exc:
        raise InputError(str(exc)) from None
    for rec in report.records:
        em.record({"graph6": rec.graph6, "command": "obstructions", "verdict": "minimal",
                   "code": rec.code.hex(), "order": rec.order, "params": rec.params,
                   "class": args.cls, "c": rec.c, "i": rec.i}, rec.line())
    if em.fmt == "text":
        em.out.write(f"# {len(report.records)} minimal obstruction(s) to {report.params} in "
                     f"{args.cls}, c<={args.max_c}, i<={args.max_i}, order<={args.order_cap}\n")
    return EXIT_OK


def cmd_catalog(args, stream, em: Emitter) -> int:
    try:
        g = catalog_graph(args.name, args.s, args.k)
    except GraphError as exc:
        raise InputError(str(exc)) from None
    g6 = to_graph6(g)
    em.record({"graph6": g6, "command": "catalog", "verdict": args.name, "order": g.n}, g6)
    return EXIT_OK


def batch_records(stream: IO[str]) -> Iterator[dict]:
    for lineno, text, g, err in read_graphs(stream):
        if err is not None:
            yield {"line": lineno, "input": text, "command": "batch", "verdict": "error", "error": err}
            continue
        ladder = class_ladder(g)
        rec = {"graph6": to_graph6(g), "line": lineno, "command": "batch",
               "verdict": ladder_class(ladder), "classes": {k: v is not None for k, v in ladder.items()}}
        if ladder["pseudo-split"] is not None:
            try:
                rec["profile"] = asdict(ps_coloring_profile(g))
            except GraphError as exc:
                rec["profile_error"] = str(exc)
        yield rec


def cmd_batch(args, stream, em: Emitter) -> int:
    for rec in batch_records(stream):
        if rec["verdict"] == "error":
            text = f"line {rec['line']}: error: {rec['error']}"
        else:
            text = f"{rec['graph6']}: {rec['verdict']}"
        em.record(rec, text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="splitpolar", description="Polarity of split-like graphs.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--in", dest="infile", help="graph6 input file (default: standard input)")
    common.add_argument("--format", choices=("text", "json-lines"), default=None,
                        help="output format (default: text, json-lines for batch)")
    sub = ap.add_subparsers(dest="command", required=True)

    sub.add_parser("recognize", parents=[common], help="class ladder with partitions")
    pp = sub.add_parser("polarity", parents=[common], help="decide (s,k)-polarity with a witness")
    pp.add_argument("--s", type=_count, required=True)
    pp.add_argument("--k", type=_count, required=True)
    sub.add_parser("coloring", parents=[common], help="chi, theta, cochromatic and bichromatic numbers")

    po = sub.add_parser("obstructions", parents=[common], help="minimal obstructions in a family")
    po.add_argument("--class", dest="cls", choices=("pseudo-split", "2K2-split", "C4-split"), required=True)
    po.add_argument("--s", type=_count, default=None)
    po.add_argument("--k", type=_count, default=None)
    po.add_argument("--unipolar", action="store_true", help="target unipolarity instead of (s,k)")
    po.add_argument("--max-c", type=int, default=3)
    po.add_argument("--max-i", type=int, default=3)
    po.add_argument("--order-cap", type=int, default=POLAR_MAX_ORDER)

    pc = sub.add_parser("catalog", parents=[common], help="emit a named graph as graph6")
    pc.add_argument("--name", required=True, choices=PS_NAMES + TWOK2_NAMES)
    pc.add_argument("--s", type=int, default=None)
    pc.add_argument("--k", type=int, default=None)

    sub.add_parser("batch", parents=[common], help="per-line json records of every recognizer")
    return ap


COMMANDS = {"recognize": cmd_recognize, "polarity": cmd_polarity, "coloring": cmd_coloring,
            "obstructions": cmd_obstructions, "catalog": cmd_catalog, "batch": cmd_batch}


def main(argv: Iterable[str] | None = None, stdin: IO[str] | None = None,
         stdout: IO[str] | None = None, stderr: IO[str] | None = None) -> int:
    stdin, stdout, stderr = stdin or sys.stdin, stdout or sys.stdout, stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(None if argv is None else list(argv))
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if args.command == "obstructions" and not args.unipolar and (args.s is None or args.k is None):
        stderr.write("splitpolar: obstructions needs --s and --k, or --unipolar\n")
        return EXIT_INPUT
    if args.format is None:
        args.format = "json-lines" if args.command == "batch" else "text"
    em = Emitter(args.format, stdout)
    stream = None
    try:
        if args.command not in ("obstructions", "catalog"):
            stream = open(args.infile, encoding="ascii", errors="replace") if args.infile else stdin
        return COMMANDS[args.command](args, stream, em)
    except InputError as exc:
        stderr.write(f"splitpolar: {exc}\n")
        return EXIT_INPUT
    except OSError as exc:
        stderr.write(f"splitpolar: {exc}\n")
        return EXIT_INPUT
    finally:
        if stream is not None and stream is not stdin:
            stream.close()


if __name__ == "__main__":
    sys.exit(main())
