"""Text serialisation for graphs: edge list, graph6 and DOT."""
from __future__ import annotations

from .graph import Graph

GRAPH_FORMATS = ("edgelist", "graph6", "dot")


def to_edgelist(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.edges)


def from_edgelist(text: str) -> Graph:
    """Parse ``u v`` lines (0-indexed); blank lines and ``#`` comments are skipped."""
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer vertex in {line!r}") from None
    return Graph.from_edges(edges)


def to_graph6(g: Graph) -> str:
    import networkx as nx

    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges)
    return nx.to_graph6_bytes(nxg, nodes=list(range(g.n)), header=False).decode("ascii")


def from_graph6(text: str) -> Graph:
    import networkx as nx

    data = text.strip()
    if data.startswith(">>graph6<<"):
        data = data[len(">>graph6<<"):]
    nxg = nx.from_graph6_bytes(data.encode("ascii"))
    return Graph(nxg.number_of_nodes(), tuple(nxg.edges()))


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(g.n)]
    lines += [f"  {u} -- {v};" for u, v in g.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_graph(g: Graph, fmt: str) -> str:
    if fmt == "edgelist":
        return to_edgelist(g)
    if fmt == "graph6":
        return to_graph6(g)
    if fmt == "dot":
        return to_dot(g)
    raise ValueError(f"unknown graph format {fmt!r}; expected one of {GRAPH_FORMATS}")


def read_graph(text: str) -> Graph:
    """Read an edge list or a graph6 string, detected from the content."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        return Graph(0)
    if len(lines) == 1 and len(lines[0].split()) == 1:
        return from_graph6(lines[0])
    return from_edgelist(text)
