"""Plain-text tournament and graph files.

Tournament file::

    # comment lines may appear anywhere
    3
    010
    001
    100
    weights: 1 1/2 0.25

The first line is n, then n rows of '0'/'1' where row u column v is '1' iff
u -> v.  The weights line is optional (default all 1); entries are exact
rationals written as integers, ``p/q`` or decimals.

Graph file: a line ``n m`` then m lines ``u v`` with 0-based endpoints.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .core import Tournament, WeightMap, from_adjacency, weight_map
from .errors import BadWeights, TournamentError
from .reductions import GraphInstance


class ParseError(TournamentError):
    pass


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append((lineno, line))
    return out


def parse_rational(token: str) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a rational number: {token!r}") from None


def parse_weights(tokens: Sequence[str], n: int) -> WeightMap:
    return weight_map(n, [parse_rational(t) for t in tokens])


def parse_tournament(text: str) -> tuple[Tournament, WeightMap | None]:
    """Tournament and its weights (None when the file has no weights line)."""
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty tournament file")
    lineno, first = lines[0]
    try:
        n = int(first)
    except ValueError:
        raise ParseError(f"line {lineno}: expected vertex count, got {first!r}") from None
    if n < 0:
        raise ParseError(f"line {lineno}: negative vertex count")
    rows = lines[1:n + 1]
    if len(rows) < n:
        raise ParseError(f"expected {n} matrix rows, found {len(rows)}")
    matrix = []
    for lineno, row in rows:
        if len(row) != n or set(row) - {"0", "1"}:
            raise ParseError(f"line {lineno}: expected {n} characters of 0/1, got {row!r}")
        matrix.append([c == "1" for c in row])
    weights = None
    for lineno, line in lines[n + 1:]:
        if not line.startswith("weights:") or weights is not None:
            raise ParseError(f"line {lineno}: unexpected content {line!r}")
        try:
            weights = parse_weights(line[len("weights:"):].split(), n)
        except BadWeights as e:
            raise ParseError(f"line {lineno}: {e}") from None
    return from_adjacency(matrix), weights


def read_tournament(path: str) -> tuple[Tournament, WeightMap | None]:
    with open(path) as f:
        return parse_tournament(f.read())


def read_weights(path: str, n: int) -> WeightMap:
    """Weights file: whitespace-separated rationals, optionally after ``weights:``."""
    with open(path) as f:
        tokens = []
        for _, line in _content_lines(f.read()):
            if line.startswith("weights:"):
                line = line[len("weights:"):]
            tokens += line.split()
    try:
        return parse_weights(tokens, n)
    except BadWeights as e:
        raise ParseError(str(e)) from None


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_tournament(T: Tournament, weights: WeightMap | None = None,
                      comments: Sequence[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(str(T.n))
    for u in range(T.n):
        lines.append("".join("1" if T.has_arc(u, v) else "0" for v in range(T.n)))
    if weights is not None:
        lines.append("weights: " + " ".join(format_rational(x) for x in weights))
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> GraphInstance:
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty graph file")
    lineno, first = lines[0]
    parts = first.split()
    try:
        n, m = map(int, parts)
    except ValueError:
        raise ParseError(f"line {lineno}: expected 'n m', got {first!r}") from None
    if n < 0 or m < 0:
        raise ParseError(f"line {lineno}: negative count")
    if len(lines) - 1 != m:
        raise ParseError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for lineno, line in lines[1:]:
        try:
            u, v = map(int, line.split())
        except ValueError:
            raise ParseError(f"line {lineno}: expected 'u v', got {line!r}") from None
        edges.append((u, v))
    try:
        return GraphInstance.from_edges(n, edges)
    except TournamentError as e:
        raise ParseError(str(e)) from None


def read_graph(path: str) -> GraphInstance:
    with open(path) as f:
        return parse_graph(f.read())


def format_graph(G: GraphInstance) -> str:
    lines = [f"{G.n} {G.m}"] + [f"{u} {v}" for u, v in G.sorted_edges()]
    return "\n".join(lines) + "\n"
