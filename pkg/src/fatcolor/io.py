"""Edge-list text format and graph-source resolution for the command line."""

from __future__ import annotations

import os
import re
from typing import Optional

from .families import FamilySpec, InvalidParams, generate, part_labels
from .graph import Graph, GraphError

_FAMILY_RE = re.compile(r"^[A-Za-z]+:[0-9,\s]+$")


class ParseError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


def parse_edge_list(text: str) -> Graph:
    """``#`` comments, then ``N M``, then ``M`` lines ``u v``."""
    header = None
    edges = []
    last = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        last = lineno
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected two integers, got {line!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer token in {line!r}", lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise ParseError("N and M must be nonnegative", lineno)
            header = (a, b)
            continue
        if not (0 <= a < header[0] and 0 <= b < header[0]):
            raise ParseError(f"vertex out of range 0..{header[0] - 1}", lineno)
        if a == b:
            raise ParseError(f"loop edge at vertex {a}", lineno)
        edges.append((a, b, lineno))
    if header is None:
        raise ParseError("missing 'N M' header line")
    n, m = header
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges, found {len(edges)}", last)
    seen = set()
    for a, b, lineno in edges:
        key = (min(a, b), max(a, b))
        if key in seen:
            raise ParseError(f"duplicate edge ({a}, {b})", lineno)
        seen.add(key)
    try:
        return Graph.from_edge_list(n, [(a, b) for a, b, _ in edges])
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def format_edge_list(g: Graph, comment: Optional[str] = None) -> str:
    lines = [f"# {comment}"] if comment else []
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_graph_input(source: str) -> tuple[Graph, Optional[tuple[tuple[int, ...], ...]]]:
    """Resolve a file path or a family string like ``turan:13,4``.

    Returns the graph and, for multipartite families, its parts.
    """
    if os.path.isfile(source):
        with open(source, encoding="utf-8") as fh:
            return parse_edge_list(fh.read()), None
    if _FAMILY_RE.match(source.strip()):
        spec = FamilySpec.parse(source)
        return generate(spec), part_labels(spec)
    if ":" in source:
        # malformed family strings are parameter errors, not missing files
        raise InvalidParams(f"cannot parse family spec {source!r}")
    raise ParseError(f"no such file: {source!r}")
