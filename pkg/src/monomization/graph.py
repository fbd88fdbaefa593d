"""Rooted multigraphs, subset arithmetic, forests and functional subgraphs.

Vertices are ``0..n`` with ``0`` the root.  Subsets of the non-root vertices
``[n] = {1..n}`` are bitmasks: vertex ``i`` is bit ``i - 1``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence


class GraphFormatError(ValueError):
    """Raised for malformed graph files; carries the 1-based line number."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class Edge(NamedTuple):
    """One undirected edge instance; ``u < v`` and ``idx`` tells parallel copies apart."""

    u: int
    v: int
    idx: int = 0


class Arc(NamedTuple):
    target: int
    idx: int = 0


# ---------------------------------------------------------------- subsets

def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        if v < 1:
            raise ValueError(f"vertex {v} cannot be a subset member (root or negative)")
        m |= 1 << (v - 1)
    return m


def members(mask: int) -> list[int]:
    """Vertices of a subset mask, increasing."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def min_vertex(mask: int) -> int:
    if not mask:
        raise ValueError("empty subset has no minimal vertex")
    return (mask & -mask).bit_length()


def contains(mask: int, i: int) -> bool:
    return i >= 1 and bool(mask >> (i - 1) & 1)


def nonempty_subsets(n: int) -> range:
    """All nonempty subsets of [n] in canonical (increasing bitmask) order."""
    return range(1, 1 << n)


def format_subset(mask: int) -> str:
    return "{" + ",".join(map(str, members(mask))) + "}"


# ------------------------------------------------------------------ graph

@dataclass(frozen=True)
class RootedMultigraph:
    """A (multi)graph on ``0..n`` rooted at 0.

    ``arcs[u][v]`` counts directed edges ``u -> v``.  Undirected graphs are
    stored symmetrically, one arc each way per edge.
    """

    n: int
    arcs: tuple[tuple[int, ...], ...]
    undirected: bool = True
    _outdeg: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = self.n
        if n < 1:
            raise ValueError("need at least one non-root vertex")
        arcs = tuple(tuple(int(x) for x in row) for row in self.arcs)
        if len(arcs) != n + 1 or any(len(row) != n + 1 for row in arcs):
            raise ValueError(f"arc matrix must be {n + 1}x{n + 1}")
        for u in range(n + 1):
            if arcs[u][u]:
                raise ValueError(f"self-loop at vertex {u}")
            for v in range(n + 1):
                if arcs[u][v] < 0:
                    raise ValueError(f"negative multiplicity on {u}->{v}")
                if self.undirected and arcs[u][v] != arcs[v][u]:
                    raise ValueError("undirected graph needs a symmetric arc matrix")
        object.__setattr__(self, "arcs", arcs)
        object.__setattr__(self, "_outdeg", tuple(sum(row) for row in arcs))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], directed: bool = False):
        """Build from ``(u, v)`` or ``(u, v, mult)`` tuples."""
        arcs = [[0] * (n + 1) for _ in range(n + 1)]
        for e in edges:
            u, v = e[0], e[1]
            mult = e[2] if len(e) > 2 else 1
            if not (0 <= u <= n and 0 <= v <= n):
                raise ValueError(f"edge {u}-{v} out of range 0..{n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if mult < 0:
                raise ValueError(f"negative multiplicity on {u}-{v}")
            arcs[u][v] += mult
            if not directed:
                arcs[v][u] += mult
        return cls(n, tuple(map(tuple, arcs)), undirected=not directed)

    @classmethod
    def complete(cls, vertices: int, mult: int = 1):
        """K_{vertices}: the complete graph on ``0..vertices-1``."""
        if vertices < 2:
            raise ValueError("complete graph needs at least 2 vertices")
        n = vertices - 1
        return cls.from_edges(n, [(u, v, mult) for u, v in itertools.combinations(range(n + 1), 2)])

    # -- basic queries

    def outdeg(self, i: int) -> int:
        return self._outdeg[i]

    def d(self, I: int, i: int) -> int:
        """Edges from ``i`` to vertices outside ``I`` (the root is always outside)."""
        if not I:
            raise ValueError("subset must be nonempty")
        if not contains(I, i):
            raise ValueError(f"vertex {i} is not in {format_subset(I)}")
        row = self.arcs[i]
        inside = 0
        for v in members(I):
            inside += row[v]
        return self._outdeg[i] - inside

    def D(self, I: int) -> int:
        """Total number of edges leaving ``I``."""
        if not I:
            raise ValueError("subset must be nonempty")
        return sum(self.d(I, i) for i in members(I))

    def edges(self) -> list[Edge]:
        """Undirected edge instances in canonical ``(u, v, idx)`` order."""
        self._require_undirected()
        n = self.n
        return [
            Edge(u, v, k)
            for u in range(n + 1)
            for v in range(u + 1, n + 1)
            for k in range(self.arcs[u][v])
        ]

    def num_edges(self) -> int:
        if self.undirected:
            return sum(self._outdeg) // 2
        return sum(self._outdeg)

    def is_connected(self) -> bool:
        """Weak connectivity of the underlying graph."""
        n = self.n
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for v in range(n + 1):
                if v not in seen and (self.arcs[u][v] or self.arcs[v][u]):
                    seen.add(v)
                    stack.append(v)
        return len(seen) == n + 1

    def _require_undirected(self):
        if not self.undirected:
            raise ValueError("forest-based operations need an undirected graph")

    # -- text format

    def to_text(self) -> str:
        lines = [f"graph {self.n}" + ("" if self.undirected else " directed")]
        n = self.n
        for u in range(n + 1):
            for v in range(n + 1):
                m = self.arcs[u][v]
                if not m or (self.undirected and v < u):
                    continue
                lines.append(f"{u} {v}" + ("" if m == 1 else f" {m}"))
        return "\n".join(lines) + "\n"


def parse_graph(text: str) -> RootedMultigraph:
    """Parse the ``graph <n> [directed]`` text format."""
    n = None
    directed = False
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if parts[0] != "graph" or len(parts) not in (2, 3):
                raise GraphFormatError("expected header 'graph <n> [directed]'", lineno)
            try:
                n = int(parts[1])
            except ValueError:
                raise GraphFormatError(f"bad vertex count {parts[1]!r}", lineno) from None
            if n < 1:
                raise GraphFormatError("vertex count must be at least 1", lineno)
            if len(parts) == 3:
                if parts[2] != "directed":
                    raise GraphFormatError(f"unknown header flag {parts[2]!r}", lineno)
                directed = True
            continue
        if len(parts) not in (2, 3):
            raise GraphFormatError("expected '<u> <v> [mult]'", lineno)
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise GraphFormatError(f"non-integer field in {line!r}", lineno) from None
        u, v = nums[0], nums[1]
        mult = nums[2] if len(nums) == 3 else 1
        if not (0 <= u <= n and 0 <= v <= n):
            raise GraphFormatError(f"vertex out of range 0..{n}", lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        if mult < 1:
            raise GraphFormatError("multiplicity must be positive", lineno)
        edges.append((u, v, mult))
    if n is None:
        raise GraphFormatError("missing 'graph <n>' header")
    return RootedMultigraph.from_edges(n, edges, directed=directed)


def load_graph(path) -> RootedMultigraph:
    with open(path) as fh:
        return parse_graph(fh.read())


# ---------------------------------------------------------------- forests

Forest = frozenset  # of Edge


def enumerate_forests(g: RootedMultigraph) -> list[frozenset]:
    """All acyclic sets of edge instances, the empty forest included.

    Two parallel instances together form a cycle, so a forest uses at most
    one instance per endpoint pair.
    """
    g._require_undirected()
    edges = g.edges()
    out = []
    chosen = []
    parent = list(range(g.n + 1))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    # Backtracking without path compression so unions can be undone.
    def rec(pos):
        if pos == len(edges):
            out.append(frozenset(chosen))
            return
        rec(pos + 1)
        e = edges[pos]
        ru, rv = find(e.u), find(e.v)
        if ru != rv:
            parent[ru] = rv
            chosen.append(e)
            rec(pos + 1)
            chosen.pop()
            parent[ru] = ru

    rec(0)
    return out


def _forest_adjacency(n, forest):
    adj = [[] for _ in range(n + 1)]
    for e in forest:
        adj[e.u].append((e.v, e))
        adj[e.v].append((e.u, e))
    return adj


def external_activity(g: RootedMultigraph, forest, order: Sequence[Edge]) -> int:
    """Count edges outside ``forest`` that are the smallest edge of the cycle they close."""
    g._require_undirected()
    rank = {e: r for r, e in enumerate(order)}
    if len(rank) != len(order) or set(rank) != set(g.edges()):
        raise ValueError("order must be a permutation of the graph's edge instances")
    adj = _forest_adjacency(g.n, forest)
    active = 0
    for e in order:
        if e in forest:
            continue
        path = _tree_path(adj, e.u, e.v)
        if path is None:
            continue
        if all(rank[e] < rank[f] for f in path):
            active += 1
    return active


def _tree_path(adj, s, t) -> Optional[list[Edge]]:
    """Edges on the forest path from ``s`` to ``t``, or None when disconnected."""
    prev = {s: None}
    stack = [s]
    while stack:
        u = stack.pop()
        if u == t:
            break
        for v, e in adj[u]:
            if v not in prev:
                prev[v] = (u, e)
                stack.append(v)
    if t not in prev:
        return None
    path = []
    while prev[t] is not None:
        t, e = prev[t]
        path.append(e)
    return path


def activity_polynomial(g: RootedMultigraph, order: Optional[Sequence[Edge]] = None) -> list[int]:
    """Coefficients of sum over forests of t^(|E| - |F| - ea(F))."""
    if order is None:
        order = g.edges()
    m = g.num_edges()
    coeffs = [0] * (m + 1)
    for f in enumerate_forests(g):
        coeffs[m - len(f) - external_activity(g, f, order)] += 1
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


# ---------------------------------------------------- functional subgraphs

@dataclass(frozen=True)
class FunctionalSubgraph:
    """At most one out-edge per non-root vertex; the root has none.

    ``out[i]`` is an :class:`Arc` or None for ``i`` in ``1..n``; ``out[0]`` is
    always None so indices line up with vertex labels.
    """

    out: tuple

    @property
    def n(self) -> int:
        return len(self.out) - 1

    def target(self, i: int) -> Optional[int]:
        a = self.out[i]
        return None if a is None else a.target

    def validate(self, g: RootedMultigraph) -> None:
        if len(self.out) != g.n + 1:
            raise ValueError("subgraph size does not match graph")
        if self.out[0] is not None:
            raise ValueError("root cannot have an out-edge")
        for i in range(1, g.n + 1):
            a = self.out[i]
            if a is not None and not (0 <= a.idx < g.arcs[i][a.target]):
                raise ValueError(f"out-edge {i}->{a.target}#{a.idx} is not an arc of the graph")

    @classmethod
    def from_targets(cls, n: int, targets: dict):
        """Convenience: ``{i: j}`` or ``{i: (j, idx)}``."""
        out = [None] * (n + 1)
        for i, t in targets.items():
            out[i] = Arc(*t) if isinstance(t, tuple) else Arc(t, 0)
        return cls(tuple(out))

    def __str__(self):
        parts = [f"{i}->{a.target}" + (f"#{a.idx}" if a.idx else "")
                 for i, a in enumerate(self.out) if a is not None]
        return "{" + ", ".join(parts) + "}"


def out_choices(g: RootedMultigraph, i: int) -> list:
    """None plus every arc leaving ``i``."""
    return [None] + [Arc(v, k) for v in range(g.n + 1) for k in range(g.arcs[i][v])]


def iter_functional_subgraphs(g: RootedMultigraph) -> Iterator[FunctionalSubgraph]:
    choices = [out_choices(g, i) for i in range(1, g.n + 1)]
    for combo in itertools.product(*choices):
        yield FunctionalSubgraph((None,) + combo)


def enumerate_functional_subgraphs(g: RootedMultigraph) -> list[FunctionalSubgraph]:
    return list(iter_functional_subgraphs(g))


def canonical_orientation(g: RootedMultigraph, forest) -> FunctionalSubgraph:
    """Point every forest edge toward the minimal vertex of its component."""
    g._require_undirected()
    n = g.n
    adj = _forest_adjacency(n, forest)
    out = [None] * (n + 1)
    seen = [False] * (n + 1)
    for root in range(n + 1):  # increasing, so each component is first hit at its minimum
        if seen[root]:
            continue
        seen[root] = True
        stack = [root]
        while stack:
            u = stack.pop()
            for v, e in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    out[v] = Arc(u, e.idx)
                    stack.append(v)
    return FunctionalSubgraph(tuple(out))
