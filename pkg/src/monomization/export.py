"""Macaulay2 and Singular text for power and monomial ideals."""

from __future__ import annotations

from .ideals import MonomialIdeal, PowerIdeal, monomial_str, power_str

FORMATS = ("m2", "singular")


def _lines(ideal):
    if isinstance(ideal, PowerIdeal):
        return "I", "power", [power_str(gen) for gen in ideal.generators]
    return "J", "monomial", [monomial_str(gen.exponents) for gen in ideal.generators]


def to_macaulay2(ideal) -> str:
    name, kind, gens = _lines(ideal)
    variables = ",".join(f"x{i}" for i in range(1, ideal.n + 1))
    out = [f"-- {kind} ideal, n={ideal.n}, k={ideal.k}, {len(gens)} generators",
           f"R = QQ[{variables}];",
           f"{name} = ideal("]
    out += [f"    {g}," for g in gens[:-1]]
    out.append(f"    {gens[-1]}")
    out.append("    );")
    return "\n".join(out) + "\n"


def to_singular(ideal) -> str:
    name, kind, gens = _lines(ideal)
    variables = ",".join(f"x{i}" for i in range(1, ideal.n + 1))
    out = [f"// {kind} ideal, n={ideal.n}, k={ideal.k}, {len(gens)} generators",
           f"ring R = 0, ({variables}), dp;",
           f"ideal {name} ="]
    out += [f"    {g}," for g in gens[:-1]]
    out.append(f"    {gens[-1]};")
    return "\n".join(out) + "\n"


def export(ideal, fmt: str) -> str:
    if fmt == "m2":
        return to_macaulay2(ideal)
    if fmt == "singular":
        return to_singular(ideal)
    raise ValueError(f"unknown export format {fmt!r}; expected one of {FORMATS}")
