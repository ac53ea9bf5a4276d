"""Text formats.

``.sc``: one facet per line as whitespace-separated vertex labels, ``#``
starts a comment. ``.g``: one edge ``u v`` per line, optional
``vertices N`` header declaring labels ``0 .. N-1``.
"""
from __future__ import annotations

import warnings
from pathlib import Path

from .core import Complex, _canon, dominated_faces, from_facets
from .errors import FlagcombWarning, FormatError, MalformedFaceError
from .flag import Graph, clique_complex


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_sc(text: str) -> Complex:
    faces = []
    for lineno, line in _lines(text):
        try:
            faces.append(_canon(int(tok) for tok in line.split()))
        except MalformedFaceError as exc:
            raise FormatError(f"line {lineno}: {exc}") from exc
        except ValueError as exc:
            raise FormatError(f"line {lineno}: bad vertex label in {line!r}") from exc
    dropped = dominated_faces(faces)
    if dropped:
        warnings.warn(f"ignoring {len(dropped)} dominated line(s), e.g. {dropped[0]}",
                      FlagcombWarning, stacklevel=2)
    return from_facets(faces)


def format_sc(c: Complex, comment: str | None = None) -> str:
    lines = [f"# {comment}"] if comment else []
    lines += [" ".join(str(v) for v in f) for f in c.facets]
    return "\n".join(lines) + "\n"


def read_sc(path) -> Complex:
    return parse_sc(Path(path).read_text(encoding="utf-8"))


def write_sc(c: Complex, path, comment: str | None = None) -> None:
    Path(path).write_text(format_sc(c, comment), encoding="utf-8")


def parse_g(text: str) -> Graph:
    edges = []
    vertices: list[int] = []
    for lineno, line in _lines(text):
        toks = line.split()
        try:
            if toks[0] == "vertices" and len(toks) == 2:
                vertices = list(range(int(toks[1])))
                continue
            if len(toks) != 2:
                raise ValueError
            u, v = int(toks[0]), int(toks[1])
        except ValueError as exc:
            raise FormatError(f"line {lineno}: expected 'u v', got {line!r}") from exc
        if u < 0 or v < 0 or u == v:
            raise FormatError(f"line {lineno}: invalid edge {line!r}")
        edges.append((u, v))
    return Graph.from_edges(edges, vertices)


def format_g(g: Graph) -> str:
    edges = g.edges()
    covered = {x for e in edges for x in e}
    lines = []
    if covered != set(g.labels):
        if g.labels != tuple(range(g.order)):
            raise FormatError("isolated vertices need labels 0..N-1 to be representable")
        lines.append(f"vertices {g.order}")
    lines += [f"{u} {v}" for u, v in sorted(edges)]
    return "\n".join(lines) + "\n"


def read_g(path) -> Graph:
    return parse_g(Path(path).read_text(encoding="utf-8"))


def write_g(g: Graph, path) -> None:
    Path(path).write_text(format_g(g), encoding="utf-8")


def load_complex(path) -> Complex:
    """Read a ``.sc`` file, or a ``.g`` file as the clique complex of the graph."""
    path = Path(path)
    if path.suffix == ".g":
        return clique_complex(read_g(path))
    return read_sc(path)
