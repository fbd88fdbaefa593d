"""Parking functions, standard monomials and Hilbert series of monomial quotients."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import RootedMultigraph, members, nonempty_subsets
from .ideals import MonomialIdeal, divides, minimal_generators, monomize, nu


class InfiniteQuotient(ValueError):
    pass


@dataclass(frozen=True)
class HilbertSeries:
    """Graded dimensions c_0, c_1, ... with trailing zeros trimmed."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def dimension(self) -> int:
        return sum(self.coeffs)

    def __getitem__(self, d):
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else 0

    def __le__(self, other: "HilbertSeries") -> bool:
        """Coefficientwise comparison."""
        top = max(len(self.coeffs), len(other.coeffs))
        return all(self[d] <= other[d] for d in range(top))

    def __str__(self):
        terms = []
        for d, c in enumerate(self.coeffs):
            if not c:
                continue
            if d == 0:
                terms.append(str(c))
                continue
            mono = "t" if d == 1 else f"t^{d}"
            terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms) if terms else "0"


def is_classical_parking(a: Sequence[int]) -> bool:
    # increasing rearrangement b has b_i < i, 1-based i
    return all(b <= j for j, b in enumerate(sorted(a)))


def is_g_parking(g: RootedMultigraph, a: Sequence[int], k: int) -> bool:
    """Every nonempty I has some i in I with a_i below its bound nu_I(i)."""
    if len(a) != g.n:
        raise ValueError(f"vector length {len(a)} != n = {g.n}")
    for I in nonempty_subsets(g.n):
        if not any(a[i - 1] < nu(g, I, i, k) for i in members(I)):
            return False
    return True


def variable_bounds(gens) -> list[int]:
    """Per-variable exclusive bound from pure powers; InfiniteQuotient if one is missing."""
    n = len(gens[0].exponents) if gens else 0
    bounds = [None] * n
    for gen in gens:
        nz = [i for i, e in enumerate(gen.exponents) if e]
        if not nz:
            return [0] * n  # the ideal contains 1
        if len(nz) == 1:
            i = nz[0]
            e = gen.exponents[i]
            if bounds[i] is None or e < bounds[i]:
                bounds[i] = e
    missing = [i + 1 for i, b in enumerate(bounds) if b is None]
    if missing:
        raise InfiniteQuotient(f"infinite quotient: no pure power of x{missing[0]} in the ideal")
    return bounds


def standard_monomials(ideal: MonomialIdeal, reduce: bool = True) -> list[tuple[int, ...]]:
    """Exponent vectors of monomials outside ``ideal``, sorted by degree then lex.

    Scans the box cut out by the pure-power generators.  ``reduce=False``
    tests divisibility against the full generator list instead of the
    minimal one (same answer, slower).
    """
    if not ideal.generators:
        raise InfiniteQuotient("infinite quotient: the ideal has no generators")
    gens = minimal_generators(ideal) if reduce else list(ideal.generators)
    bounds = variable_bounds(gens)
    exps = [gen.exponents for gen in gens]
    out = [a for a in itertools.product(*(range(b) for b in bounds))
           if not any(divides(e, a) for e in exps)]
    out.sort(key=lambda a: (sum(a), a))
    return out


def hilbert_series_from_monomials(monomials: Iterable[Sequence[int]]) -> HilbertSeries:
    counts = {}
    for a in monomials:
        d = sum(a)
        counts[d] = counts.get(d, 0) + 1
    top = max(counts, default=-1)
    return HilbertSeries(tuple(counts.get(d, 0) for d in range(top + 1)))


def hilbert_series_B(ideal: MonomialIdeal) -> HilbertSeries:
    return hilbert_series_from_monomials(standard_monomials(ideal))


def parking_functions(g: RootedMultigraph, k: int) -> list[tuple[int, ...]]:
    """(G,k)-parking functions, i.e. the standard monomials of the monomization."""
    return standard_monomials(monomize(g, k))


def classical_parking_functions(n: int) -> list[tuple[int, ...]]:
    return [a for a in itertools.product(range(n), repeat=n) if is_classical_parking(a)]


def orbit_count(parking_set: Iterable[Sequence[int]]) -> int:
    """Number of distinct multisets among the vectors."""
    return len({tuple(sorted(a)) for a in parking_set})


def format_listing(monomials, n: int, k) -> str:
    lines = [f"# n={n} k={k} dim={len(monomials)}"]
    lines += [" ".join(map(str, a)) for a in monomials]
    return "\n".join(lines) + "\n"
