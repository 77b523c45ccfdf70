"""Plain-text edge-list parsing and formatting.

One edge per line as two whitespace-separated labels. Isolated vertices are
declared as `vertex <label>` lines. `#` starts a comment that runs to the end
of the line. Blank lines are skipped.
"""

from __future__ import annotations

from .graph import Graph, canon_edge


class ParseError(ValueError):
    """Raised when edge-list text is malformed, with the line number."""


def parse_edge_list(text: str) -> Graph:
    vertices: list[str] = []
    seen: set[str] = set()
    edges: list[tuple[str, str]] = []
    edge_seen: set[tuple[str, str]] = set()

    def declare(label: str) -> None:
        if label not in seen:
            seen.add(label)
            vertices.append(label)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "vertex":
            if len(tokens) != 2:
                raise ParseError(
                    f"line {lineno}: vertex line needs exactly one label"
                )
            declare(tokens[1])
            continue
        if len(tokens) != 2:
            raise ParseError(
                f"line {lineno}: expected two labels, got {len(tokens)}"
            )
        u, v = tokens
        if u == v:
            raise ParseError(f"line {lineno}: self-loop on {u!r}")
        e = canon_edge(u, v)
        if e in edge_seen:
            raise ParseError(f"line {lineno}: duplicate edge {u} {v}")
        edge_seen.add(e)
        declare(u)
        declare(v)
        edges.append((u, v))

    return Graph(vertices, edges)


def format_edge_list(g: Graph) -> str:
    isolated = sorted(v for v in g.vertices if g.degree(v) == 0)
    lines = [f"vertex {v}" for v in isolated]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + ("\n" if lines else "")
