"""Command-line interface.

Exit codes: 0 success, 2 unreadable or invalid input, 3 input outside the
requested class (or too large for any exact method), 4 a verification failed.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import catalog
from .core import Tournament, is_transitive, weight_map
from .decompose import is_prime, prime_reduction
from .errors import NotInClass, TooLarge, TournamentError, Unsupported
from .fileio import (
    ParseError,
    format_rational,
    format_tournament,
    read_graph,
    read_tournament,
    read_weights,
)
from .pattern import (
    MAX_PATTERN,
    find_induced,
    is_1_in_degenerate,
    is_1_out_degenerate,
)
from .reductions import Gadget, build_misp_instance, verify_reduction
from .solvers import METHODS, solve

EXIT_OK, EXIT_PARSE, EXIT_CLASS, EXIT_VERIFY = 0, 2, 3, 4

PATTERNS = {
    "k4": catalog.K4, "b4": catalog.B4, "c4": catalog.C4, "d4": catalog.D4,
    "t5": catalog.T5, "u5": catalog.U5, "w5": catalog.W5,
}


@dataclass
class Result:
    out: str = ""
    err: str = ""
    code: int = EXIT_OK


def yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _indices(vertices) -> str:
    return " ".join(map(str, vertices))


# -- commands ----------------------------------------------------------------

def cmd_solve(args, path: str) -> Result:
    T, w = read_tournament(path)
    if args.weights:
        w = read_weights(args.weights, T.n)
    sol, trace = solve(T, w, method=args.method, verify=not args.unsafe)
    lines = [f"value={format_rational(sol.weight)}"]
    if args.certificate:
        lines += [f"set={_indices(sol.vertices)}", f"method={trace}"]
    return Result("\n".join(lines) + "\n")


def recognize(T: Tournament) -> str:
    if is_transitive(T):
        return f"I{T.n}"
    if T.n % 2 and catalog.recognize_tn(T) is not None:
        return f"T{T.n}"
    if T.n % 2 and catalog.recognize_un(T) is not None:
        return f"U{T.n}"
    if T.n == 7 and catalog.is_isomorphic_small(T, catalog.q7()) is not None:
        return "Q7"
    if T.n == 6 and catalog.is_isomorphic_small(T, catalog.q7_minus_v()) is not None:
        return "Q7-v"
    return "none"


def classify(T: Tournament) -> list[tuple[str, str]]:
    props = [("transitive", yes(is_transitive(T))), ("prime", yes(is_prime(T)))]
    for name in ("w5", "u5", "b4", "c4", "d4", "k4"):
        props.append((f"{name}free", yes(find_induced(T, PATTERNS[name]) is None)))
    props.append(("1-in-degenerate", yes(is_1_in_degenerate(T)[0])))
    props.append(("1-out-degenerate", yes(is_1_out_degenerate(T)[0])))
    props.append(("recognized", recognize(T)))
    return props


def cmd_classify(args, path: str) -> Result:
    T, _ = read_tournament(path)
    return Result("".join(f"{k}={v}\n" for k, v in classify(T)))


def cmd_decompose(args, path: str) -> Result:
    T, w = read_tournament(path)
    w = weight_map(T.n, w)
    red = prime_reduction(T, w, lambda G, gw: solve(G, gw)[0])
    if not red.steps:
        return Result("prime (0 steps)\n")
    covers = {v: (v,) for v in range(T.n)}
    lines = []
    for k, step in enumerate(red.steps, 1):
        covered = tuple(sorted(x for label in step.module_set for x in covers[label]))
        covers[step.representative] = covered
        lines.append(f"step {k}: size={len(step.module_set)} covers={_indices(covered)} "
                     f"value={format_rational(step.inner_solution.weight)}")
    lines.append(f"final prime size={red.final.n} ({len(red.steps)} steps)")
    return Result("\n".join(lines) + "\n")


def parse_pattern(text: str) -> Tournament:
    if text in PATTERNS:
        return PATTERNS[text]
    if text.startswith("snake:"):
        try:
            k = int(text[len("snake:"):])
        except ValueError:
            raise ParseError(f"bad snake length in {text!r}") from None
        H = catalog.snake(k)
    elif text.startswith("file:"):
        H, _ = read_tournament(text[len("file:"):])
    else:
        raise ParseError(f"unknown pattern {text!r}")
    if H.n > MAX_PATTERN:
        raise ParseError(f"pattern has {H.n} vertices, limit is {MAX_PATTERN}")
    return H


def cmd_check_free(args, path: str) -> Result:
    T, _ = read_tournament(path)
    hit = find_induced(T, parse_pattern(args.pattern))
    if hit is None:
        return Result("free=yes\n")
    return Result(f"free=no witness={_indices(hit.vertices)}\n")


def cmd_verify_reduction(args, path: str) -> Result:
    G = read_graph(path)
    r = build_misp_instance(G, args.gadget)
    rep = verify_reduction(r, strict=False)
    identity = rep.mis == rep.offset - rep.tau
    lines = [f"mis={rep.mis} offset={rep.offset} tau={rep.tau} {'OK' if identity else 'FAIL'}"]
    if rep.in_degenerate is not None:
        lines.append(f"1-in-degenerate={yes(rep.in_degenerate)}")
        lines.append(f"1-out-degenerate={yes(rep.out_degenerate)}")
    if rep.snake7_free is not None:
        line = f"snake7free={yes(rep.snake7_free)}"
        if rep.snake_witness:
            line += " witness=" + " ".join(r.names[v] for v in rep.snake_witness)
        lines.append(line)
    return Result("\n".join(lines) + "\n", code=EXIT_OK if rep.ok else EXIT_VERIFY)


def generate(kind: str, params: list[str]) -> str:
    def one_int() -> int:
        if len(params) != 1:
            raise ParseError(f"'{kind}' takes one integer parameter")
        try:
            return int(params[0])
        except ValueError:
            raise ParseError(f"not an integer: {params[0]!r}") from None

    makers = {"tn": catalog.circulant, "un": catalog.un, "wn": catalog.wn,
              "in": catalog.transitive, "snake": catalog.snake}
    if kind in makers:
        return format_tournament(makers[kind](one_int()))
    if kind in ("q7", "q7mv"):
        if params:
            raise ParseError(f"'{kind}' takes no parameters")
        return format_tournament(catalog.q7() if kind == "q7" else catalog.q7_minus_v())
    if kind == "misp-hard":
        if len(params) != 2:
            raise ParseError("'misp-hard' takes a graph file and a gadget")
        try:
            gadget = Gadget(params[1])
        except ValueError:
            raise ParseError(f"unknown gadget {params[1]!r}") from None
        r = build_misp_instance(read_graph(params[0]), gadget)
        meta = [
            f"gadget={gadget.value}",
            f"ordering={_indices(r.ordering)}",
            f"vc_offset={r.vc_offset}",
            f"names={' '.join(r.names)}",
        ]
        return format_tournament(r.tournament, comments=meta)
    raise ParseError(f"unknown kind {kind!r}")


# -- driver ------------------------------------------------------------------

COMMANDS = {
    "solve": cmd_solve,
    "classify": cmd_classify,
    "decompose": cmd_decompose,
    "check-free": cmd_check_free,
    "verify-reduction": cmd_verify_reduction,
}


def run_one(args, path: str) -> Result:
    try:
        return COMMANDS[args.command](args, path)
    except OSError as e:
        return Result(err=f"error: {e}\n", code=EXIT_PARSE)
    except (NotInClass, Unsupported, TooLarge) as e:
        return Result(err=f"error: {e}\n", code=EXIT_CLASS)
    except TournamentError as e:
        return Result(err=f"error: {e}\n", code=EXIT_PARSE)


def _run_batch(args) -> int:
    names = sorted(f for f in os.listdir(args.dir) if os.path.isfile(os.path.join(args.dir, f)))
    paths = [os.path.join(args.dir, f) for f in names]
    with ProcessPoolExecutor(max_workers=args.jobs) as pool:
        results = list(pool.map(run_one, [args] * len(paths), paths))
    code = EXIT_OK
    for name, res in zip(names, results):
        sys.stdout.write(f"== {name} ==\n{res.out}")
        sys.stderr.write(res.err)
        code = max(code, res.code)
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tournament-fvs",
        description="Maximum transitive subtournaments (minimum feedback vertex sets) of tournaments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(p, what="tournament file"):
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("file", nargs="?", help=what)
        src.add_argument("--dir", help="run on every file in this directory")
        p.add_argument("--jobs", type=int, default=None, help="worker processes for --dir")
        return p

    p = with_input(sub.add_parser("solve", help="maximum-weight transitive vertex set"))
    p.add_argument("--weights", help="file of n rationals overriding the file's weights")
    p.add_argument("--method", choices=METHODS, default="auto")
    p.add_argument("--certificate", action="store_true", help="also print the set and method")
    p.add_argument("--unsafe", action="store_true", help="skip class-membership checks")

    with_input(sub.add_parser("classify", help="class memberships and recognized family"))
    with_input(sub.add_parser("decompose", help="print the quotient chain"))

    p = with_input(sub.add_parser("check-free", help="search for an induced pattern"))
    p.add_argument("--pattern", required=True,
                   help="k4, b4, c4, d4, t5, u5, w5, snake:K or file:PATH")

    p = with_input(sub.add_parser("verify-reduction", help="check a vertex-cover reduction instance"),
                   what="graph file")
    p.add_argument("--gadget", choices=[g.value for g in Gadget], default="plain")

    p = sub.add_parser("generate", help="write a named tournament to stdout")
    p.add_argument("kind", help="tn N | un N | wn N | q7 | q7mv | in N | snake K | misp-hard GRAPH GADGET")
    p.add_argument("params", nargs="*")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "generate":
        try:
            sys.stdout.write(generate(args.kind, args.params))
        except (TournamentError, OSError) as e:
            sys.stderr.write(f"error: {e}\n")
            return EXIT_PARSE
        return EXIT_OK
    if args.dir:
        return _run_batch(args)
    res = run_one(args, args.file)
    sys.stdout.write(res.out)
    sys.stderr.write(res.err)
    return res.code


if __name__ == "__main__":
    sys.exit(main())
