"""Graph files: ``p edge <n> <m>`` then ``e <u> <v>`` lines, 1-based ids,
``c`` lines are comments.  Inflations also get a vertex-map sidecar with
lines ``v <index> <owner> <partner>``."""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, TextIO

from .errors import GraphFormatError
from .graph import Graph
from .inflation import InflatedGraph


def parse_graph(lines: Iterable[str]) -> Graph:
    n = declared = None
    edges = []
    seen_edges = 0
    last = 0
    for lineno, raw in enumerate(lines, 1):
        last = lineno
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise GraphFormatError("duplicate problem line", lineno)
            if len(parts) != 4 or parts[1] != "edge":
                raise GraphFormatError("expected 'p edge <n> <m>'", lineno)
            n, declared = _ints(parts[2:], lineno)
            if n < 1 or declared < 0:
                raise GraphFormatError("vertex count must be positive", lineno)
        elif tag == "e":
            if n is None:
                raise GraphFormatError("edge line before 'p edge' line", lineno)
            if len(parts) != 3:
                raise GraphFormatError("expected 'e <u> <v>'", lineno)
            u, v = _ints(parts[1:], lineno)
            for x in (u, v):
                if not 1 <= x <= n:
                    raise GraphFormatError(f"vertex {x} outside 1..{n}", lineno)
            if u == v:
                raise GraphFormatError(f"loop at vertex {u}", lineno)
            edges.append((u - 1, v - 1))
            seen_edges += 1
        else:
            raise GraphFormatError(f"unknown line type {tag!r}", lineno)
    if n is None:
        raise GraphFormatError("missing 'p edge' line", last)
    if seen_edges != declared:
        raise GraphFormatError(f"header declares {declared} edges, found {seen_edges}", last)
    return Graph(n, tuple(sorted({(min(u, v), max(u, v)) for u, v in edges})))


def _ints(tokens, lineno):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise GraphFormatError(f"non-integer field in {' '.join(tokens)!r}", lineno) from None


def read_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh)


def format_graph(n: int, edges, comment: str | None = None) -> str:
    out = []
    if comment:
        out.extend(f"c {c}" for c in comment.splitlines())
    edges = list(edges)
    out.append(f"p edge {n} {len(edges)}")
    out.extend(f"e {u + 1} {v + 1}" for u, v in edges)
    return "\n".join(out) + "\n"


def write_graph(G: Graph, out: TextIO | str | Path, comment: str | None = None):
    text = format_graph(G.n, G.edges, comment)
    _emit(text, out)


def format_vertex_map(GI: InflatedGraph) -> str:
    return "".join(f"v {idx + 1} {i + 1} {j + 1}\n" for idx, (i, j) in enumerate(GI.vertices))


def write_inflated(GI: InflatedGraph, graph_out, map_out):
    _emit(format_graph(GI.n, GI.edges(), comment="inflated graph; see vertex map"), graph_out)
    _emit(format_vertex_map(GI), map_out)


def parse_vertex_map(lines: Iterable[str]) -> list[tuple[int, int]]:
    out = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] != "v" or len(parts) != 4:
            raise GraphFormatError("expected 'v <index> <owner> <partner>'", lineno)
        idx, owner, partner = _ints(parts[1:], lineno)
        if idx != len(out) + 1:
            raise GraphFormatError(f"vertex index {idx} out of sequence", lineno)
        out.append((owner - 1, partner - 1))
    return out


def _emit(text: str, out):
    if isinstance(out, (str, Path)):
        Path(out).write_text(text, encoding="utf-8")
    else:
        out.write(text)
