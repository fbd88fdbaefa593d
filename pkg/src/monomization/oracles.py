"""Independent routes to the dimension and Hilbert series of A_{G,k}.

* exact rank of each graded piece of the power ideal,
* the alternating sum over subset chains for the k=1 monomial family,
* the functional-subgraph model of that sum and the sign-reversing
  involution that cancels everything except canonically oriented forests.
"""

from __future__ import annotations

import itertools
from itertools import islice
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb, factorial, gcd
from typing import Iterator, NamedTuple, Optional, Sequence

from .graph import (
    FunctionalSubgraph,
    RootedMultigraph,
    contains,
    format_subset,
    iter_functional_subgraphs,
    members,
    min_vertex,
    nonempty_subsets,
)
from .ideals import build_power_ideal, nu
from .standard import HilbertSeries

# ------------------------------------------------------------ exact rank


RANK_METHODS = ("bareiss", "content")


def exact_rank(m, method: str = "bareiss") -> int:
    """Rank over Q of an integer matrix, computed exactly on Python ints.

    ``bareiss`` is fraction-free elimination with the exact Bareiss
    division: every intermediate entry is a minor of ``m``, so sizes stay
    within the Hadamard bound.  ``content`` cross-multiplies and then divides
    each new row by the gcd of its entries, which is usually faster on the
    binomial-coefficient matrices built here.
    """
    if method not in RANK_METHODS:
        raise ValueError(f"unknown rank method {method!r}")
    bareiss = method == "bareiss"
    # rows are kept as suffixes starting at the current column
    active = [list(r) for r in m if any(r)]
    rank = 0
    prev = 1
    while active and active[0]:
        piv = next((i for i, r in enumerate(active) if r[0]), None)
        if piv is None:
            active = [r[1:] for r in active]
            continue
        prow = active.pop(piv)
        p = prow[0]
        tail = prow[1:]
        nxt = []
        for row in active:
            a = row[0]
            rest = islice(row, 1, None)
            if bareiss:
                if a:
                    new = [(p * x - a * y) // prev for x, y in zip(rest, tail)]
                else:
                    new = [(p * x) // prev for x in rest]
                if any(new):
                    nxt.append(new)
                continue
            if a:
                c = gcd(p, a)
                pp, aa = p // c, a // c
                new = [pp * x - aa * y for x, y in zip(rest, tail)]
            else:
                new = list(rest)
            c = gcd(*new)
            if c:
                nxt.append(new if c == 1 else [x // c for x in new])
        active = nxt
        prev = p
        rank += 1
    return rank


# ------------------------------------------------------- graded pieces


def monomials_of_degree(n: int, d: int) -> list[tuple[int, ...]]:
    """Exponent vectors of total degree d, lexicographically increasing."""
    out = []
    for bars in itertools.combinations(range(d + n - 1), n - 1):
        prev = -1
        a = []
        for b in bars:
            a.append(b - prev - 1)
            prev = b
        a.append(d + n - 2 - prev)
        out.append(tuple(a))
    return out


def multinomial(ks: Sequence[int]) -> int:
    r = factorial(sum(ks))
    for k in ks:
        r //= factorial(k)
    return r


def power_expansion(n: int, support: int, e: int) -> list[tuple[tuple[int, ...], int]]:
    """Terms of (sum_{i in support} x_i)^e as (exponent vector, coefficient)."""
    idx = [i - 1 for i in members(support)]
    terms = []
    for part in monomials_of_degree(len(idx), e):
        a = [0] * n
        for j, p in zip(idx, part):
            a[j] = p
        terms.append((tuple(a), multinomial(part)))
    return terms


@dataclass
class GradedPieceMatrix:
    """Coefficients of p_I * x^u in the degree-d monomial basis.

    ``row_labels[r] = (I, u)`` and ``columns[c]`` is an exponent vector.
    """

    degree: int
    columns: list
    row_labels: list
    rows: list

    def dump(self) -> str:
        lines = [f"{len(self.rows)} {len(self.columns)}"]
        lines += [" ".join(map(str, r)) for r in self.rows]
        return "\n".join(lines) + "\n"


def graded_piece_matrix(g: RootedMultigraph, k: int, d: int, ideal=None) -> GradedPieceMatrix:
    n = g.n
    if ideal is None:
        ideal = build_power_ideal(g, k)
    columns = monomials_of_degree(n, d)
    col = {a: c for c, a in enumerate(columns)}
    labels, rows = [], []
    for gen in ideal.generators:
        if gen.exponent > d:
            continue
        terms = power_expansion(n, gen.support, gen.exponent)
        for u in monomials_of_degree(n, d - gen.exponent):
            row = [0] * len(columns)
            for w, coeff in terms:
                row[col[tuple(x + y for x, y in zip(u, w))]] = coeff
            labels.append((gen.support, u))
            rows.append(row)
    return GradedPieceMatrix(d, columns, labels, rows)


def graded_dimension(g: RootedMultigraph, k: int, d: int, ideal=None,
                     rank_method: str = "bareiss") -> int:
    """dim of the degree-d piece of A_{G,k}."""
    m = graded_piece_matrix(g, k, d, ideal)
    return len(m.columns) - exact_rank(m.rows, rank_method)


def hilbert_series_A(g: RootedMultigraph, k: int, workers: int = 1,
                     rank_method: str = "bareiss") -> HilbertSeries:
    """Hilbert series of C[x]/I_{G,k} from exact ranks of the graded pieces.

    Stops at the first degree whose piece vanishes; the quotient is
    generated in degree 1, so nothing survives above it.  With
    ``workers > 1`` degrees are evaluated in batches across processes.
    """
    ideal = build_power_ideal(g, k)
    coeffs = []
    d = 0
    if workers <= 1:
        while True:
            c = graded_dimension(g, k, d, ideal, rank_method)
            if c == 0:
                break
            coeffs.append(c)
            d += 1
        return HilbertSeries(tuple(coeffs))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        while True:
            batch = list(range(d, d + workers))
            dims = list(pool.map(graded_dimension, [g] * workers, [k] * workers, batch,
                                 [ideal] * workers, [rank_method] * workers))
            for c in dims:
                if c == 0:
                    return HilbertSeries(tuple(coeffs))
                coeffs.append(c)
            d += workers


# ---------------------------------------------------- alternating sum


def iter_chains(n: int) -> Iterator[tuple[int, ...]]:
    """Strictly increasing chains of nonempty subsets of [n], the empty chain first."""
    def rec(chain, last):
        yield chain
        for S in nonempty_subsets(n):
            if S != last and S & last == last:
                yield from rec(chain + (S,), S)

    yield from rec((), 0)


def chain_term(g: RootedMultigraph, chain: Sequence[int]) -> int:
    """Unsigned product attached to a chain in the alternating sum (k=1)."""
    n = g.n
    bound = [0] + [nu(g, 1 << (i - 1), i, 1) for i in range(1, n + 1)]
    prod = 1
    prev = 0
    for I in chain:
        for i in members(I & ~prev):
            prod *= bound[i] - nu(g, I, i, 1)
            if not prod:
                return 0
        prev = I
    for i in range(1, n + 1):
        if not contains(prev, i):
            prod *= bound[i]
    return prod


def alternating_sum_terms(g: RootedMultigraph) -> Iterator[tuple[tuple[int, ...], int]]:
    for chain in iter_chains(g.n):
        yield chain, (-1) ** len(chain) * chain_term(g, chain)


def alternating_sum_dimension(g: RootedMultigraph, k: int = 1) -> int:
    if k != 1:
        raise ValueError("the alternating-sum oracle is instantiated for k=1 only")
    return sum(t for _, t in alternating_sum_terms(g))


# ------------------------------------------- subgraphs, labels, involution


def is_compatible(h: FunctionalSubgraph, chain: Sequence[int]) -> bool:
    """Edges from a chain member stay inside it; each member's minimum has an edge."""
    for I in chain:
        for i in members(I):
            t = h.target(i)
            if t is None:
                if i == min_vertex(I):
                    return False
            elif not contains(I, t):
                return False
    return True


def compatible_subgraphs(g: RootedMultigraph, chain: Sequence[int]) -> list[FunctionalSubgraph]:
    return [h for h in iter_functional_subgraphs(g) if is_compatible(h, chain)]


def count_compatible_pairs(g: RootedMultigraph, chain: Sequence[int]) -> int:
    return sum(1 for h in iter_functional_subgraphs(g) if is_compatible(h, chain))


SPECIAL = True
NONSPECIAL = False


class LabeledVertices(NamedTuple):
    label: tuple  # indexed 0..n, SPECIAL / NONSPECIAL
    special_set: int

    def special(self) -> list[int]:
        return [v for v, lab in enumerate(self.label) if lab is SPECIAL]


def path_end(h: FunctionalSubgraph, u: int) -> Optional[int]:
    """Vertex where the out-edge path from ``u`` stops, or None if it cycles."""
    seen = set()
    while True:
        t = h.out[u]
        if t is None:
            return u
        if u in seen:
            return None
        seen.add(u)
        u = t.target


def label_special(g: RootedMultigraph, h: FunctionalSubgraph) -> LabeledVertices:
    n = g.n
    h.validate(g)
    label = [None] * (n + 1)
    unlabeled = set(range(n + 1))
    while unlabeled:
        v = min(unlabeled)
        if h.out[v] is not None:
            for u in unlabeled:
                label[u] = SPECIAL
            break
        for u in [u for u in unlabeled if path_end(h, u) == v]:
            label[u] = NONSPECIAL
            unlabeled.discard(u)
    special = 0
    for v in range(1, n + 1):
        if label[v] is SPECIAL:
            special |= 1 << (v - 1)
    return LabeledVertices(tuple(label), special)


def kappa(g: RootedMultigraph, h: FunctionalSubgraph, chain: Sequence[int]) -> tuple[int, ...]:
    """Toggle the special set at the top of the chain."""
    chain = tuple(chain)
    if not is_compatible(h, chain):
        raise ValueError(f"{h} is not compatible with chain "
                         + " < ".join(format_subset(I) for I in chain))
    S = label_special(g, h).special_set
    if chain and chain[-1] == S:
        return chain[:-1]
    if not chain and not S:
        return chain
    if chain and (S & chain[-1] != chain[-1]):
        raise ValueError("special set does not contain the top of the chain")
    return chain + (S,)


def chain_str(chain: Sequence[int]) -> str:
    return "()" if not chain else " < ".join(format_subset(I) for I in chain)


def chain_count(n: int) -> int:
    """Number of chains including the empty one: sum_m C(n,m) * ordered-partitions(m)."""
    fubini = [1]
    for m in range(1, n + 1):
        fubini.append(sum(comb(m, j) * fubini[m - j] for j in range(1, m + 1)))
    return sum(comb(n, m) * fubini[m] for m in range(n + 1))
