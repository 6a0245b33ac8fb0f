"""Command-line front end.

Exit status: 0 success, 1 usage error or infeasible parameters, 2 a claim
came back COUNTEREXAMPLE or FAIL, 3 unreadable input or malformed graph6.
"""

from __future__ import annotations

import argparse
import sys
from typing import Iterator, Optional, TextIO

from .enumerator import EnumerationError, EnumSpec, enumerate_graphs
from .exact_radical import to_decimal
from .families import FAMILY_NAMES, FamilyError, FamilySpec, construct_member, enumerate_members
from .graph6 import Graph6Error
from .graph_core import Graph, GraphError, degree_profile, edge_type_signature
from .randic import randic_exact
from .transforms import KINDS, TransformError, apply_transform, delta_randic, find_sites
from .verifier import CLAIMS, ClaimError, extremal_search, verify_claim

EXIT_OK, EXIT_USAGE, EXIT_CLAIM, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a value >= 1, got {text!r}")
    return v


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a value >= 0, got {text!r}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--out", metavar="FILE", help="write output here instead of stdout")
    common.add_argument("--digits", type=_positive, default=12, help="decimal places shown (default 12)")
    common.add_argument("--workers", type=_positive, default=1, help="parallel enumeration workers")

    p = _Parser(prog="randic-extremal", description="Randić index tools for k-cyclic graphs.")
    sub = p.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    s = sub.add_parser("randic", parents=[common], help="exact and decimal Randić index of graph6 input")
    s.add_argument("--in", dest="infile", metavar="FILE")

    s = sub.add_parser("signature", parents=[common], help="edge-type counts and degree profile")
    s.add_argument("--in", dest="infile", metavar="FILE")

    s = sub.add_parser("construct", parents=[common], help="build a member of a named family")
    s.add_argument("--family", required=True, choices=FAMILY_NAMES, metavar="NAME")
    s.add_argument("--n", type=_positive, required=True)
    s.add_argument("--k", type=_nonneg)
    s.add_argument("--all", action="store_true", help="list every member up to isomorphism (small n)")

    s = sub.add_parser("transform", parents=[common], help="list or apply transformation sites")
    s.add_argument("--kind", required=True, type=str.upper, choices=KINDS)
    g = s.add_mutually_exclusive_group()
    g.add_argument("--site", type=_nonneg, metavar="INDEX")
    g.add_argument("--list", action="store_true")
    s.add_argument("--in", dest="infile", metavar="FILE")

    s = sub.add_parser("enumerate", parents=[common], help="one graph6 line per isomorphism class")
    s.add_argument("--n", type=_nonneg, required=True)
    s.add_argument("--m", type=_nonneg, required=True)
    s.add_argument("--max-degree", type=_nonneg)
    s.add_argument("--connected", action="store_true")

    s = sub.add_parser("extremal", parents=[common], help="exact top Randić values of a class")
    s.add_argument("--n", type=_positive, required=True)
    s.add_argument("--k", type=_nonneg, required=True)
    s.add_argument("--top", type=_positive, default=1)
    s.add_argument("--max-degree", type=_nonneg)
    s.add_argument("--json", action="store_true")

    s = sub.add_parser("verify", parents=[common], help="check one claim exhaustively")
    s.add_argument("--claim", required=True, metavar="ID", help="one of: " + ", ".join(CLAIMS))
    s.add_argument("--n", type=_positive)
    s.add_argument("--k", type=_nonneg)
    s.add_argument("--json", action="store_true")
    return p


def _read_graphs(path: Optional[str], stdin: TextIO) -> Iterator[Graph]:
    try:
        fh = open(path, encoding="ascii") if path else stdin
    except OSError as e:
        raise InputError(f"cannot open {path!r}: {e.strerror}")
    try:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            try:
                yield Graph.from_graph6(line)
            except (Graph6Error, GraphError) as e:
                raise InputError(f"line {lineno}: malformed graph6 {line!r}: {e}")
    except UnicodeDecodeError:
        raise InputError("input is not ASCII graph6 text")
    finally:
        if path:
            fh.close()


def _cmd_randic(a, out, stdin):
    for g in _read_graphs(a.infile, stdin):
        r = randic_exact(g)
        out.write(f"{r}\t{to_decimal(r, a.digits)}\n")
    return EXIT_OK


def _cmd_signature(a, out, stdin):
    for g in _read_graphs(a.infile, stdin):
        sig = " ".join(f"m{i},{j}={c}" for (i, j), c in edge_type_signature(g).items())
        prof = " ".join(f"n{i}={c}" for i, c in degree_profile(g).items())
        out.write(f"{sig or '-'}\t{prof or '-'}\n")
    return EXIT_OK


def _cmd_construct(a, out, stdin):
    spec = FamilySpec.of(a.family, a.n, a.k)
    graphs = enumerate_members(spec) if a.all else [construct_member(spec)]
    for g in graphs:
        out.write(g.to_graph6() + "\n")
    return EXIT_OK


def _cmd_transform(a, out, stdin):
    for g in _read_graphs(a.infile, stdin):
        sites = find_sites(g, a.kind)
        if a.site is None:
            for i, s in enumerate(sites):
                d = delta_randic(g, s)
                out.write(f"{i}\t{s}\t{d}\t{to_decimal(d, a.digits)}\n")
            continue
        if a.site >= len(sites):
            raise UsageError(f"--site {a.site}: graph {g.to_graph6()} has {len(sites)} {a.kind} sites")
        out.write(apply_transform(g, sites[a.site]).to_graph6() + "\n")
    return EXIT_OK


def _cmd_enumerate(a, out, stdin):
    spec = EnumSpec(a.n, a.m, a.max_degree, a.connected)
    for g in enumerate_graphs(spec, a.workers):
        out.write(g.to_graph6() + "\n")
    return EXIT_OK


def _cmd_extremal(a, out, stdin):
    rep = extremal_search(a.n, a.k, a.top, a.max_degree, a.workers)
    if a.json:
        import json

        out.write(json.dumps(rep.to_dict(a.digits), indent=2, sort_keys=True) + "\n")
    else:
        out.write(rep.to_text(a.digits) + "\n")
    return EXIT_OK


def _cmd_verify(a, out, stdin):
    res = verify_claim(a.claim, a.n, a.k, a.workers)
    out.write((res.to_json(a.digits) if a.json else res.to_text(a.digits)) + "\n")
    return EXIT_OK if res.passed else EXIT_CLAIM


_COMMANDS = {
    "randic": _cmd_randic,
    "signature": _cmd_signature,
    "construct": _cmd_construct,
    "transform": _cmd_transform,
    "enumerate": _cmd_enumerate,
    "extremal": _cmd_extremal,
    "verify": _cmd_verify,
}


def run(argv=None, stdin: TextIO = None, stdout: TextIO = None, stderr: TextIO = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except UsageError as e:
        stderr.write(f"usage error: {e}\n")
        return EXIT_USAGE
    except SystemExit as e:  # --help
        return EXIT_OK if not e.code else EXIT_USAGE
    try:
        out = open(a.out, "w", encoding="ascii") if a.out else stdout
    except OSError as e:
        stderr.write(f"error: cannot write {a.out!r}: {e.strerror}\n")
        return EXIT_IO
    try:
        return _COMMANDS[a.command](a, out, stdin)
    except InputError as e:
        stderr.write(f"error: {e}\n")
        return EXIT_IO
    except UsageError as e:
        stderr.write(f"usage error: {e}\n")
        return EXIT_USAGE
    except (FamilyError, EnumerationError, ClaimError, TransformError, GraphError) as e:
        stderr.write(f"error: {e}\n")
        return EXIT_USAGE
    except OSError as e:
        stderr.write(f"error: {e}\n")
        return EXIT_IO
    finally:
        if a.out:
            out.close()


def main() -> None:
    sys.exit(run())
