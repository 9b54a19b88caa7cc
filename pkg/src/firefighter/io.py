"""Text format for graphs with fire sources.

One record per line::

    p ff <n>                 header, must come first
    e <u> <v> [weight] [edge_value]
    v <id> <vertex_value>
    l <id> <label>           display name
    s <id> ...               fire sources
    # comment

Ids are integers ``0..n-1``.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path
from typing import Optional, Union

from .errors import InputError, ParseError
from .graph import Graph, edge_key

FIXTURES = ("P4", "STAR4", "SPIDER", "UNI6", "C4")


def _int_field(tok: str, line: int, col: int, what: str) -> int:
    try:
        val = int(tok)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {tok!r}", line, col) from None
    if val < 0:
        raise ParseError(f"{what} must be non-negative", line, col)
    return val


def parse_graph_text(text: str) -> tuple[Graph, frozenset]:
    n: Optional[int] = None
    edges: dict = {}
    weights: dict = {}
    evalues: dict = {}
    values: dict = {}
    labels: dict = {}
    sources: list = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        toks = []
        pos = 0
        for tok in line.split():
            pos = line.index(tok, pos)
            toks.append((tok, pos + 1))
            pos += len(tok)
        kind, kcol = toks[0]

        def vertex(i, what="vertex id"):
            tok, col = toks[i]
            v = _int_field(tok, lineno, col, what)
            if v >= n:
                raise ParseError(f"dangling {what} {v} (n={n})", lineno, col)
            return v

        if kind == "p":
            if n is not None:
                raise ParseError("duplicate header", lineno, kcol)
            if len(toks) != 3 or toks[1][0] != "ff":
                raise ParseError("expected 'p ff <n>'", lineno, kcol)
            n = _int_field(toks[2][0], lineno, toks[2][1], "vertex count")
            continue
        if n is None:
            raise ParseError("record before 'p ff <n>' header", lineno, kcol)
        if kind == "e":
            if not 3 <= len(toks) <= 5:
                raise ParseError("expected 'e <u> <v> [weight] [edge_value]'", lineno, kcol)
            u, v = vertex(1), vertex(2)
            if u == v:
                raise ParseError(f"self-loop at vertex {u}", lineno, toks[2][1])
            key = edge_key(u, v)
            if key in edges:
                raise ParseError(f"duplicate edge ({u}, {v}); first seen on line {edges[key]}", lineno, kcol)
            edges[key] = lineno
            if len(toks) >= 4:
                weights[key] = _int_field(toks[3][0], lineno, toks[3][1], "weight")
            if len(toks) == 5:
                evalues[key] = _int_field(toks[4][0], lineno, toks[4][1], "edge value")
        elif kind == "v":
            if len(toks) != 3:
                raise ParseError("expected 'v <id> <value>'", lineno, kcol)
            values[vertex(1)] = _int_field(toks[2][0], lineno, toks[2][1], "vertex value")
        elif kind == "l":
            if len(toks) != 3:
                raise ParseError("expected 'l <id> <label>'", lineno, kcol)
            v = vertex(1)
            if toks[2][0] in labels.values() and labels.get(v) != toks[2][0]:
                raise ParseError(f"duplicate label {toks[2][0]!r}", lineno, toks[2][1])
            labels[v] = toks[2][0]
        elif kind == "s":
            if len(toks) < 2:
                raise ParseError("expected 's <id> ...'", lineno, kcol)
            for i in range(1, len(toks)):
                tok, col = toks[i]
                v = _int_field(tok, lineno, col, "source id")
                if v >= n:
                    raise ParseError(f"unknown source {v} (n={n})", lineno, col)
                sources.append(v)
        else:
            raise ParseError(f"unknown record type {kind!r}", lineno, kcol)
    if n is None:
        raise ParseError("missing 'p ff <n>' header", 1)
    names = [labels.get(i, str(i)) for i in range(n)]
    try:
        g = Graph(
            n,
            list(edges),
            weights=weights,
            vertex_values=[values.get(i, 1) for i in range(n)],
            edge_values=evalues,
            labels=names,
        )
    except InputError as exc:
        raise ParseError(str(exc), 1) from None
    return g, frozenset(sources)


def parse_graph_file(path: Union[str, Path]) -> tuple[Graph, frozenset]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_graph_text(text)


def format_graph(g: Graph, sources=()) -> str:
    lines = [f"p ff {g.n}"]
    for v, name in enumerate(g.labels):
        if name != str(v):
            lines.append(f"l {v} {name}")
    for v, z in enumerate(g.vertex_values):
        if z != 1:
            lines.append(f"v {v} {z}")
    for u, v in g.edges():
        w, z = g.weight(u, v), g.edge_value(u, v)
        if z:
            lines.append(f"e {u} {v} {w} {z}")
        elif w != 1:
            lines.append(f"e {u} {v} {w}")
        else:
            lines.append(f"e {u} {v}")
    if sources:
        lines.append("s " + " ".join(str(v) for v in sorted(sources)))
    return "\n".join(lines) + "\n"


def fixture_text(name: str) -> str:
    if name not in FIXTURES:
        raise InputError(f"unknown fixture {name!r} (known: {', '.join(FIXTURES)})")
    return resources.files("firefighter").joinpath("fixtures", f"{name}.ff").read_text()


def load_fixture(name: str) -> tuple[Graph, frozenset]:
    return parse_graph_text(fixture_text(name))


def load_graph(ref: Union[str, Path]) -> tuple[Graph, frozenset]:
    """A fixture name or a path to a graph file."""
    if isinstance(ref, str) and ref in FIXTURES and not Path(ref).exists():
        return load_fixture(ref)
    return parse_graph_file(ref)
