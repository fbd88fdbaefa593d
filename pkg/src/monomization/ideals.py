"""Power ideals I_{G,k} and their monomial counterparts J_{G,k}.

Polynomials are never expanded here; a power generator is just its support
and exponent.  Generator lists follow the canonical subset order (increasing
bitmask), one entry per nonempty subset of [n].
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .graph import RootedMultigraph, contains, format_subset, members, min_vertex, nonempty_subsets


class PowerGenerator(NamedTuple):
    support: int
    exponent: int


class MonomialGenerator(NamedTuple):
    support: int
    exponents: tuple[int, ...]

    @property
    def degree(self) -> int:
        return sum(self.exponents)


@dataclass(frozen=True)
class PowerIdeal:
    n: int
    k: int
    generators: tuple[PowerGenerator, ...]


@dataclass(frozen=True)
class MonomialIdeal:
    n: int
    generators: tuple[MonomialGenerator, ...]
    k: Optional[int] = None

    @classmethod
    def from_exponents(cls, n, exponent_vectors, k=None):
        """Hand-built ideal; supports are read off the nonzero exponents."""
        gens = []
        for a in exponent_vectors:
            a = tuple(a)
            if len(a) != n:
                raise ValueError(f"exponent vector {a} does not have length {n}")
            gens.append(MonomialGenerator(sum(1 << i for i, e in enumerate(a) if e), a))
        return cls(n, tuple(gens), k)


class NonPositiveExponent(ValueError):
    def __init__(self, support: int, exponent: int):
        self.support = support
        self.exponent = exponent
        super().__init__(f"D_I + k = {exponent} <= 0 for I = {format_subset(support)}")


def build_power_ideal(g: RootedMultigraph, k: int) -> PowerIdeal:
    gens = []
    for I in nonempty_subsets(g.n):
        e = g.D(I) + k
        if e <= 0:
            raise NonPositiveExponent(I, e)
        gens.append(PowerGenerator(I, e))
    return PowerIdeal(g.n, k, tuple(gens))


def nu(g: RootedMultigraph, I: int, i: int, k: int) -> int:
    """Exponent of x_i in m_I: d_I(i), plus k at the minimal vertex of I."""
    if k not in (0, 1):
        raise ValueError("monomization is defined for k in {0, 1}")
    if not contains(I, i):
        return 0
    d = g.d(I, i)
    if k == 1 and i == min_vertex(I):
        return d + 1
    return d


def monomize(g: RootedMultigraph, k: int) -> MonomialIdeal:
    if k not in (0, 1):
        raise ValueError("monomization is defined for k in {0, 1}")
    n = g.n
    gens = []
    for I in nonempty_subsets(n):
        gens.append(MonomialGenerator(I, tuple(nu(g, I, i, k) for i in range(1, n + 1))))
    return MonomialIdeal(n, tuple(gens), k)


def divides(a, b) -> bool:
    """x^a | x^b."""
    return all(x <= y for x, y in zip(a, b))


def minimal_generators(ideal: MonomialIdeal) -> list[MonomialGenerator]:
    """Generators not divisible by any other generator; duplicates collapse to the first."""
    unique = []
    seen = set()
    for gen in ideal.generators:
        if gen.exponents not in seen:
            seen.add(gen.exponents)
            unique.append(gen)
    return [
        gen for gen in unique
        if not any(other is not gen and divides(other.exponents, gen.exponents) for other in unique)
    ]


class MonotoneViolation(NamedTuple):
    """``J`` is None when ``m_I`` uses a variable outside ``I``."""

    I: int
    J: Optional[int]
    i: int

    def __str__(self):
        if self.J is None:
            return f"m_{format_subset(self.I)} involves x{self.i} outside its support"
        return (f"deg of x{self.i} grows from m_{format_subset(self.I)} "
                f"to m_{format_subset(self.J)}")


def check_monotone_family(ideal: MonomialIdeal) -> Optional[MonotoneViolation]:
    """Return the first violation of the monotone-family axioms, or None.

    Checks that each m_I only involves variables in I and that for I a proper
    subset of J the x_i-degree of m_J never exceeds that of m_I, i in I.
    """
    gens = sorted(ideal.generators, key=lambda gen: gen.support)
    for gen in gens:
        for i, e in enumerate(gen.exponents, 1):
            if e and not contains(gen.support, i):
                return MonotoneViolation(gen.support, None, i)
    for a in gens:
        for b in gens:
            I, J = a.support, b.support
            if I == J or I & J != I:
                continue
            for i in members(I):
                if b.exponents[i - 1] > a.exponents[i - 1]:
                    return MonotoneViolation(I, J, i)
    return None


# ------------------------------------------------------------- formatting

def monomial_str(exponents, sep="*") -> str:
    parts = []
    for i, e in enumerate(exponents, 1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return sep.join(parts) if parts else "1"


def power_str(gen: PowerGenerator) -> str:
    vs = [f"x{i}" for i in members(gen.support)]
    base = vs[0] if len(vs) == 1 else "(" + "+".join(vs) + ")"
    return base if gen.exponent == 1 else f"{base}^{gen.exponent}"
