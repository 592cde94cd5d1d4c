"""Graph representation, JSON/DOT I/O and cactus recognition."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence, Union

Weight = Union[int, Fraction]
Edge = tuple[int, int]


class GraphError(ValueError):
    """Base class for invalid graph input."""


class GraphFormatError(GraphError):
    """Malformed graph text; ``location`` names the offending JSON path."""

    def __init__(self, message: str, location: str = "$"):
        super().__init__(f"{location}: {message}")
        self.location = location


class DisconnectedGraphError(GraphError):
    pass


class NotCactusError(GraphError):
    def __init__(self, witness: Edge | None = None):
        msg = "graph is not a cactus"
        if witness is not None:
            msg += f" (edge {witness[0]}-{witness[1]} lies on two cycles)"
        super().__init__(msg)
        self.witness = witness


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def _exact(value, location: str, *, positive: bool) -> Weight:
    if isinstance(value, bool):
        raise GraphFormatError("weight must be a number", location)
    if isinstance(value, int):
        w: Weight = value
    elif isinstance(value, Fraction):
        w = value if value.denominator != 1 else int(value)
    elif isinstance(value, Rational):
        w = Fraction(value.numerator, value.denominator)
    elif isinstance(value, str):
        try:
            w = Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise GraphFormatError(f"cannot read {value!r} as an exact rational", location) from None
        if w.denominator == 1:
            w = int(w)
    else:
        raise GraphFormatError(
            f"weight {value!r} must be an integer or a rational string like '3/2'", location
        )
    if positive and w <= 0:
        raise GraphFormatError(f"edge weight must be positive, got {value!r}", location)
    if not positive and w < 0:
        raise GraphFormatError(f"vertex weight must be non-negative, got {value!r}", location)
    return w


class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    Edge weights are positive and vertex weights non-negative; both are exact
    (``int`` or ``Fraction``) and default to 1.  Instances are treated as
    immutable once built.
    """

    __slots__ = ("n", "edges", "adj", "_edge_weight", "vertex_weights", "names", "unit_edges")

    def __init__(
        self,
        n: int,
        edges: Iterable[Sequence],
        vertex_weights: Sequence | None = None,
        names: Sequence[str] | None = None,
    ):
        if isinstance(n, bool) or not isinstance(n, int) or n < 0:
            raise GraphFormatError(f"vertex count must be a non-negative integer, got {n!r}", "$.n")
        self.n = n
        adj: list[list[int]] = [[] for _ in range(n)]
        weights: dict[Edge, Weight] = {}
        edge_list: list[Edge] = []
        unit = True
        for i, item in enumerate(edges):
            loc = f"$.edges[{i}]"
            if not isinstance(item, (list, tuple)) or len(item) not in (2, 3):
                raise GraphFormatError("edge must be [u, v] or [u, v, w]", loc)
            u, v = item[0], item[1]
            for j, x in enumerate((u, v)):
                if isinstance(x, bool) or not isinstance(x, int):
                    raise GraphFormatError(f"vertex id {x!r} is not an integer", f"{loc}[{j}]")
                if not 0 <= x < n:
                    raise GraphFormatError(f"unknown vertex id {x}", f"{loc}[{j}]")
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}", loc)
            key = edge_key(u, v)
            if key in weights:
                raise GraphFormatError(f"duplicate edge {key[0]}-{key[1]}", loc)
            w = _exact(item[2], f"{loc}[2]", positive=True) if len(item) == 3 else 1
            if w != 1:
                unit = False
            weights[key] = w
            edge_list.append(key)
            adj[u].append(v)
            adj[v].append(u)
        self.edges: tuple[Edge, ...] = tuple(edge_list)
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(a) for a in adj)
        self._edge_weight = weights
        self.unit_edges = unit
        if vertex_weights is None:
            self.vertex_weights: tuple[Weight, ...] = (1,) * n
        else:
            if len(vertex_weights) != n:
                raise GraphFormatError(
                    f"expected {n} vertex weights, got {len(vertex_weights)}", "$.vertex_weights"
                )
            self.vertex_weights = tuple(
                _exact(w, f"$.vertex_weights[{i}]", positive=False)
                for i, w in enumerate(vertex_weights)
            )
        if names is not None:
            if len(names) != n or len(set(names)) != n:
                raise GraphFormatError("names must be n distinct strings", "$.names")
            self.names: tuple[str, ...] | None = tuple(str(s) for s in names)
        else:
            self.names = None

    @property
    def m(self) -> int:
        return len(self.edges)

    def weight(self, u: int, v: int) -> Weight:
        return self._edge_weight[edge_key(u, v)]

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self._edge_weight

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edge_weights(self) -> Mapping[Edge, Weight]:
        return dict(self._edge_weight)

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        seen = bytearray(self.n)
        seen[0] = 1
        queue = deque([0])
        count = 1
        while queue:
            u = queue.popleft()
            for v in self.adj[u]:
                if not seen[v]:
                    seen[v] = 1
                    count += 1
                    queue.append(v)
        return count == self.n

    def require_connected(self) -> None:
        if not self.is_connected():
            raise DisconnectedGraphError("graph must be connected with at least one vertex")

    def subgraph_without(self, removed: Iterable[int]) -> "Graph":
        """Return the graph with ``removed`` vertices deleted, ids re-densified."""
        gone = set(removed)
        keep = [v for v in range(self.n) if v not in gone]
        index = {v: i for i, v in enumerate(keep)}
        edges = [
            (index[u], index[v], self._edge_weight[(u, v)])
            for u, v in self.edges
            if u in index and v in index
        ]
        return Graph(len(keep), edges, [self.vertex_weights[v] for v in keep])

    def with_edges_removed(self, removed: Iterable[Edge]) -> "Graph":
        gone = {edge_key(*e) for e in removed}
        edges = [(u, v, self._edge_weight[(u, v)]) for u, v in self.edges if (u, v) not in gone]
        return Graph(self.n, edges, self.vertex_weights)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and self._edge_weight == other._edge_weight
            and self.vertex_weights == other.vertex_weights
            and self.names == other.names
        )

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._edge_weight.items()), self.vertex_weights))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# ---------------------------------------------------------------- JSON / DOT


def _json_number(w: Weight):
    if isinstance(w, Fraction):
        return str(w)
    return w


def parse_graph(text: Union[str, bytes]) -> Graph:
    """Parse the graph JSON format ``{"n", "edges", "vertex_weights"?, "names"?}``."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise GraphFormatError(f"input is not UTF-8: {exc}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"malformed JSON: {exc.msg}", f"line {exc.lineno} column {exc.colno}") from None
    return graph_from_dict(data)


def graph_from_dict(data) -> Graph:
    if not isinstance(data, dict):
        raise GraphFormatError("top level must be an object")
    if "n" not in data:
        raise GraphFormatError("missing key 'n'")
    edges = data.get("edges", [])
    if not isinstance(edges, list):
        raise GraphFormatError("'edges' must be a list", "$.edges")
    vw = data.get("vertex_weights")
    if vw is not None and not isinstance(vw, list):
        raise GraphFormatError("'vertex_weights' must be a list", "$.vertex_weights")
    return Graph(data["n"], edges, vw, data.get("names"))


def graph_to_dict(g: Graph) -> dict:
    edges = []
    for u, v in g.edges:
        w = g.weight(u, v)
        edges.append([u, v] if w == 1 else [u, v, _json_number(w)])
    out: dict = {"n": g.n, "edges": edges}
    if any(w != 1 for w in g.vertex_weights):
        out["vertex_weights"] = [_json_number(w) for w in g.vertex_weights]
    if g.names is not None:
        out["names"] = list(g.names)
    return out


def serialize_graph(g: Graph) -> str:
    return json.dumps(graph_to_dict(g))


def to_dot(g: Graph, highlight: Iterable[int] = ()) -> str:
    """Render ``g`` as Graphviz DOT (emit only)."""
    marked = set(highlight)
    lines = ["graph G {"]
    for v in range(g.n):
        label = g.names[v] if g.names else str(v)
        attrs = [f'label="{label}"']
        if v in marked:
            attrs.append("style=filled")
        lines.append(f"  {v} [{', '.join(attrs)}];")
    for u, v in g.edges:
        w = g.weight(u, v)
        suffix = f' [label="{w}"]' if w != 1 else ""
        lines.append(f"  {u} -- {v}{suffix};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- recognition


@dataclass(frozen=True)
class CactusReport:
    is_cactus: bool
    witness: Edge | None = None

    def __post_init__(self):
        if self.is_cactus == (self.witness is not None):
            raise ValueError("witness must be present exactly when the graph is not a cactus")


def biconnected_components(g: Graph) -> tuple[list[list[Edge]], set[int]]:
    """Edge sets of the blocks of a connected graph, and its cut vertices.

    Iterative Hopcroft-Tarjan; linear in n + m.
    """
    n = g.n
    adj = g.adj
    disc = [-1] * n
    low = [0] * n
    components: list[list[Edge]] = []
    cut: set[int] = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        edge_stack: list[Edge] = []
        # frames: (vertex, parent, next neighbour index)
        stack = [[root, -1, 0]]
        while stack:
            frame = stack[-1]
            u, parent, i = frame
            nbrs = adj[u]
            if i < len(nbrs):
                frame[2] = i + 1
                v = nbrs[i]
                if disc[v] == -1:
                    edge_stack.append((u, v))
                    disc[v] = low[v] = timer
                    timer += 1
                    if u == root:
                        root_children += 1
                    stack.append([v, u, 0])
                elif v != parent and disc[v] < disc[u]:
                    edge_stack.append((u, v))
                    if disc[v] < low[u]:
                        low[u] = disc[v]
                continue
            stack.pop()
            if parent == -1:
                continue
            if low[u] < low[parent]:
                low[parent] = low[u]
            if low[u] >= disc[parent]:
                if parent != root:
                    cut.add(parent)
                comp = []
                while True:
                    e = edge_stack.pop()
                    comp.append(e)
                    if e == (parent, u):
                        break
                components.append(comp)
        if root_children > 1:
            cut.add(root)
    return components, cut


def is_cactus(g: Graph) -> CactusReport:
    """Decide whether ``g`` is a cactus: every block is a single edge or a cycle."""
    g.require_connected()
    components, _ = biconnected_components(g)
    for comp in components:
        verts = {x for e in comp for x in e}
        if len(comp) > 1 and len(comp) != len(verts):
            return CactusReport(False, edge_key(*comp[0]))
    return CactusReport(True)


def max_degree(g: Graph) -> int:
    return max((len(a) for a in g.adj), default=0)
