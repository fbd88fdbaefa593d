"""Test graphs: named examples and an exhaustive small-graph corpus."""

from __future__ import annotations

import itertools

from .graph import RootedMultigraph


def k(vertices: int) -> RootedMultigraph:
    return RootedMultigraph.complete(vertices)


def example4() -> RootedMultigraph:
    """Four non-root vertices, seven edges; its I_{G,1} has 15 listed generators."""
    return RootedMultigraph.from_edges(
        4, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 3), (2, 4), (3, 4)])


def connected_multigraphs(n: int, max_mult: int = 2) -> list[RootedMultigraph]:
    """One representative per root-preserving isomorphism class.

    Connected undirected multigraphs on ``0..n`` with every multiplicity at
    most ``max_mult``, sorted by edge count then canonical code.
    """
    pairs = list(itertools.combinations(range(n + 1), 2))
    pos = {p: j for j, p in enumerate(pairs)}
    perms = [(0,) + p for p in itertools.permutations(range(1, n + 1))]
    relabel = [[pos[tuple(sorted((p[u], p[v])))] for u, v in pairs] for p in perms]
    found = {}
    for mv in itertools.product(range(max_mult + 1), repeat=len(pairs)):
        code = min(tuple(mv[j] for j in r) for r in relabel)
        if code in found:
            continue
        g = RootedMultigraph.from_edges(n, [(u, v, m) for (u, v), m in zip(pairs, code) if m])
        found[code] = g if g.is_connected() else None
    graphs = [g for g in found.values() if g is not None]
    graphs.sort(key=lambda g: (g.num_edges(), g.arcs))
    return graphs


def sweep_corpus(max_mult: int = 2) -> list[RootedMultigraph]:
    """Every class with at most 3 non-root vertices, plus 4-vertex classes with at most 5 edges.

    201 graphs for ``max_mult=2``.
    """
    out = []
    for n in (1, 2, 3):
        out += connected_multigraphs(n, max_mult)
    out += [g for g in connected_multigraphs(4, max_mult) if g.num_edges() <= 5]
    return out
