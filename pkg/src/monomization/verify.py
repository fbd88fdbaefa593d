"""Cross-checks between the independent routes, run on a single graph.

Each check returns a :class:`Check`; ``run_checks`` collects them all.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass
from math import comb
from typing import Callable, Optional

from .graph import (
    RootedMultigraph,
    activity_polynomial,
    canonical_orientation,
    enumerate_forests,
    format_subset,
    iter_functional_subgraphs,
    members,
    nonempty_subsets,
)
from .ideals import NonPositiveExponent, build_power_ideal, check_monotone_family, minimal_generators, monomize
from .oracles import (
    NONSPECIAL,
    alternating_sum_dimension,
    chain_str,
    chain_term,
    hilbert_series_A,
    is_compatible,
    iter_chains,
    kappa,
    label_special,
    path_end,
)
from .standard import (
    HilbertSeries,
    InfiniteQuotient,
    hilbert_series_B,
    hilbert_series_from_monomials,
    is_classical_parking,
    is_g_parking,
    orbit_count,
    standard_monomials,
    variable_bounds,
)

PASS, FAIL, SKIP = "pass", "fail", "skip"


@dataclass
class Check:
    name: str
    status: str
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def __str__(self):
        line = f"[{self.status.upper()}] {self.name}"
        return f"{line}: {self.detail}" if self.detail else line


def _run(name: str, fn: Callable[[], Optional[str]]) -> Check:
    """``fn`` returns None on success or a failure message; SkipCheck skips."""
    try:
        msg = fn()
    except SkipCheck as exc:
        return Check(name, SKIP, str(exc))
    if msg is None:
        return Check(name, PASS)
    return Check(name, FAIL, msg)


class SkipCheck(Exception):
    pass


# ------------------------------------------------------- ideal checks

def check_generators(g: RootedMultigraph, k: int) -> Optional[str]:
    J = monomize(g, k)
    expected = (1 << g.n) - 1
    if len(J.generators) != expected:
        return f"{len(J.generators)} monomial generators, expected {expected}"
    for gen in J.generators:
        if gen.degree != g.D(gen.support) + k:
            return f"deg m_{format_subset(gen.support)} = {gen.degree} != D_I + k"
    try:
        P = build_power_ideal(g, k)
    except NonPositiveExponent:
        return None
    if len(P.generators) != expected:
        return f"{len(P.generators)} power generators, expected {expected}"
    return None


def check_monotone(g: RootedMultigraph, k: int) -> Optional[str]:
    v = check_monotone_family(monomize(g, k))
    return None if v is None else str(v)


def check_d_monotone(g: RootedMultigraph) -> Optional[str]:
    for I in nonempty_subsets(g.n):
        for J in nonempty_subsets(g.n):
            if I & J != I:
                continue
            for i in members(I):
                if g.d(J, i) > g.d(I, i):
                    return f"d_J({i}) > d_I({i}) for I={format_subset(I)}, J={format_subset(J)}"
    return None


# ---------------------------------------------------- parking checks

def _standard(g, k):
    try:
        return standard_monomials(monomize(g, k))
    except InfiniteQuotient as exc:
        raise SkipCheck(str(exc)) from None


def check_parking_equivalence(g: RootedMultigraph, k: int) -> Optional[str]:
    """Subset-by-subset test agrees with divisibility by the generators, on a padded box."""
    std = set(_standard(g, k))
    bounds = variable_bounds(minimal_generators(monomize(g, k)))
    for a in itertools.product(*(range(b + 1) for b in bounds)):
        if is_g_parking(g, a, k) != (a in std):
            return f"{a}: subset test says {is_g_parking(g, a, k)}, basis says {a in std}"
    return None


def check_reduced_matches_full(g: RootedMultigraph, k: int) -> Optional[str]:
    J = monomize(g, k)
    try:
        if standard_monomials(J, reduce=True) != standard_monomials(J, reduce=False):
            return "minimal and full generator sets give different bases"
    except InfiniteQuotient as exc:
        raise SkipCheck(str(exc)) from None
    return None


def check_down_closed(g: RootedMultigraph, k: int) -> Optional[str]:
    std = set(_standard(g, k))
    for a in std:
        for i, x in enumerate(a):
            if x:
                b = a[:i] + (x - 1,) + a[i + 1:]
                if b not in std:
                    return f"{a} is parking but {b} is not"
    return None


def is_complete_simple(g: RootedMultigraph) -> bool:
    n = g.n
    return all(g.arcs[u][v] == 1 for u in range(n + 1) for v in range(n + 1) if u != v)


def check_classical(g: RootedMultigraph) -> Optional[str]:
    """K_{n+1}, k=0: graph parking = classical parking, (n+1)^(n-1) of them, Catalan orbits."""
    if not is_complete_simple(g):
        raise SkipCheck("graph is not a simple complete graph")
    n = g.n
    std = _standard(g, 0)
    box = list(itertools.product(range(n + 1), repeat=n))
    for a in box:
        if is_g_parking(g, a, 0) != is_classical_parking(a):
            return f"{a}: G-parking and classical parking disagree"
    if len(std) != (n + 1) ** (n - 1):
        return f"{len(std)} parking functions, expected {(n + 1) ** (n - 1)}"
    catalan = _catalan(n)
    if orbit_count(std) != catalan:
        return f"orbit count {orbit_count(std)} != Catalan {catalan}"
    return None


def _catalan(n):
    return comb(2 * n, n) // (n + 1)


# ---------------------------------------------------- Hilbert checks

def hilbert_pair(g: RootedMultigraph, k: int, workers: int = 1):
    try:
        A = hilbert_series_A(g, k, workers=workers)
    except NonPositiveExponent as exc:
        raise SkipCheck(str(exc)) from None
    B = hilbert_series_from_monomials(_standard(g, k))
    return A, B


def check_hilbert_equal(g: RootedMultigraph, k: int, workers: int = 1) -> Optional[str]:
    """Standard monomials span A, so Hilb_A <= Hilb_B always; equality is expected when undirected.

    Directed graphs can have a strict inequality (see tests), so only the
    inequality is enforced for them.
    """
    A, B = hilbert_pair(g, k, workers)
    if not A <= B:
        return f"Hilb_A = {A} is not <= Hilb_B = {B}"
    if A != B and g.undirected:
        return f"Hilb_A = {A} but Hilb_B = {B}"
    return None


# ------------------------------------------------ forest-based checks

def _undirected(g):
    if not g.undirected:
        raise SkipCheck("forest checks need an undirected graph")


def check_dimension_routes(g: RootedMultigraph) -> Optional[str]:
    _undirected(g)
    forests = len(enumerate_forests(g))
    alt = alternating_sum_dimension(g)
    dim_b = len(_standard(g, 1))
    if not forests == alt == dim_b:
        return f"forests={forests}, alternating sum={alt}, dim B={dim_b}"
    return None


def random_orders(g: RootedMultigraph, count: int = 3, seed: int = 0):
    rng = random.Random(seed)
    orders = []
    for _ in range(count):
        order = g.edges()
        rng.shuffle(order)
        orders.append(order)
    return orders


def check_external_activity(g: RootedMultigraph, orders=None) -> Optional[str]:
    _undirected(g)
    B = hilbert_series_B(monomize(g, 1))
    for order in orders if orders is not None else random_orders(g):
        poly = HilbertSeries(tuple(activity_polynomial(g, order)))
        if poly != B:
            return f"activity polynomial {poly} != Hilb_B {B} for order {order}"
    return None


def check_canonical_forests(g: RootedMultigraph) -> Optional[str]:
    _undirected(g)
    for f in enumerate_forests(g):
        h = canonical_orientation(g, f)
        lab = label_special(g, h)
        if lab.special_set:
            return f"canonical orientation {h} has special vertices {format_subset(lab.special_set)}"
    return None


def labeling_claim(h, label) -> Optional[str]:
    """No edge joins special and nonspecial vertices; nonspecial parts are trees sinking at their minimum."""
    n = len(label) - 1
    for i in range(1, n + 1):
        t = h.target(i)
        if t is not None and label[i] != label[t]:
            return f"edge {i}->{t} crosses the special/nonspecial boundary"
    for i in range(n + 1):
        if label[i] is NONSPECIAL:
            end = path_end(h, i)
            if end is None:
                return f"nonspecial vertex {i} lies on a cycle"
    # a component's sink must be its minimum: every vertex reaching end e is >= e
    for i in range(n + 1):
        if label[i] is NONSPECIAL and path_end(h, i) > i:
            return f"nonspecial vertex {i} drains to the larger vertex {path_end(h, i)}"
    return None


@dataclass
class InvolutionStats:
    pairs: int = 0
    fixed: int = 0
    failure: Optional[str] = None


def involution_stats(g: RootedMultigraph) -> InvolutionStats:
    """Exhaustively run kappa over every compatible (subgraph, chain) pair."""
    _undirected(g)
    chains = list(iter_chains(g.n))
    canon = {canonical_orientation(g, f) for f in enumerate_forests(g)}
    counts = Counter()
    fixed = set()
    stats = InvolutionStats()

    def fail(msg):
        stats.failure = msg
        return stats

    for h in iter_functional_subgraphs(g):
        lab = label_special(g, h)
        msg = labeling_claim(h, lab.label)
        if msg:
            return fail(f"{h}: {msg}")
        S = lab.special_set
        for chain in chains:
            if not is_compatible(h, chain):
                continue
            counts[chain] += 1
            stats.pairs += 1
            for I in chain:
                if I & ~S:
                    return fail(f"{h}, {chain_str(chain)}: chain member outside special set")
            image = kappa(g, h, chain)
            if image == chain:
                if chain:
                    return fail(f"{h}, {chain_str(chain)}: fixed point with nonempty chain")
                fixed.add(h)
                continue
            if abs(len(image) - len(chain)) != 1:
                return fail(f"{h}, {chain_str(chain)}: length did not change by one")
            if not is_compatible(h, image):
                return fail(f"{h}, {chain_str(chain)}: image {chain_str(image)} is not compatible")
            if kappa(g, h, image) != chain:
                return fail(f"{h}, {chain_str(chain)}: kappa is not an involution here")
    stats.fixed = len(fixed)
    if fixed != canon:
        return fail(f"{len(fixed)} fixed points vs {len(canon)} canonically oriented forests")
    for chain in chains:
        if counts[chain] != chain_term(g, chain):
            return fail(f"chain {chain_str(chain)}: {counts[chain]} compatible subgraphs, "
                        f"product formula gives {chain_term(g, chain)}")
    return stats


def check_involution(g: RootedMultigraph) -> Optional[str]:
    return involution_stats(g).failure


# ----------------------------------------------------------- driver

def run_checks(g: RootedMultigraph, ks=(0, 1), workers: int = 1) -> list[Check]:
    checks = [_run("d_I decreases along inclusion", lambda: check_d_monotone(g))]
    for k in ks:
        checks += [
            _run(f"k={k}: generator counts and degrees", lambda k=k: check_generators(g, k)),
            _run(f"k={k}: monotone monomial family", lambda k=k: check_monotone(g, k)),
            _run(f"k={k}: parking test agrees with standard basis",
                 lambda k=k: check_parking_equivalence(g, k)),
            _run(f"k={k}: reduced and full generators agree",
                 lambda k=k: check_reduced_matches_full(g, k)),
            _run(f"k={k}: parking set is down-closed", lambda k=k: check_down_closed(g, k)),
            _run(f"k={k}: Hilb_A = Hilb_B (rank vs monomial)" if g.undirected
                 else f"k={k}: Hilb_A <= Hilb_B (rank vs monomial)",
                 lambda k=k: check_hilbert_equal(g, k, workers)),
        ]
    if 0 in ks:
        checks.append(_run("k=0: classical parking and Catalan orbits", lambda: check_classical(g)))
    if 1 in ks:
        checks += [
            _run("k=1: forests = alternating sum = dim B", lambda: check_dimension_routes(g)),
            _run("k=1: external activity matches Hilb_B (3 random orders)",
                 lambda: check_external_activity(g)),
            _run("canonical orientations are all nonspecial", lambda: check_canonical_forests(g)),
            _run("involution on compatible pairs", lambda: check_involution(g)),
        ]
    return checks
