"""Command-line front end.

Exit codes: 0 success, 1 mismatch or failed verification, 2 usage, parse
or precondition errors.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from .export import FORMATS, export
from .graph import (
    GraphFormatError,
    RootedMultigraph,
    activity_polynomial,
    enumerate_forests,
    format_subset,
    load_graph,
)
from .ideals import NonPositiveExponent, build_power_ideal, minimal_generators, monomial_str, monomize
from .oracles import RANK_METHODS, alternating_sum_terms, graded_piece_matrix, hilbert_series_A
from .standard import HilbertSeries, InfiniteQuotient, format_listing, hilbert_series_B, is_g_parking, standard_monomials
from .verify import run_checks

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    opts = argparse.ArgumentParser(add_help=False)
    opts.add_argument("--complete", type=int, metavar="V",
                      help="use the complete graph K_V instead of a file")
    opts.add_argument("--k", type=int, choices=(0, 1), default=None, help="k (default 1)")
    opts.add_argument("--json", action="store_true", help="machine-readable output")
    common = argparse.ArgumentParser(add_help=False, parents=[opts])
    common.add_argument("graph", nargs="?", help="graph file ('graph <n> [directed]' format)")

    p = argparse.ArgumentParser(prog="monomization", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)

    h = sub.add_parser("hilbert", parents=[common], help="Hilbert series of the quotient")
    h.add_argument("--method", choices=("monomial", "rank", "both"), default="both")
    h.add_argument("--threads", type=int, default=1, help="processes for the rank route")
    h.add_argument("--rank-method", choices=RANK_METHODS, default="bareiss")
    h.add_argument("--dump-matrices", metavar="DIR", help="write each graded-piece matrix to DIR")

    m = sub.add_parser("monomize", parents=[common], help="generators of the monomial ideal")
    m.add_argument("--minimal", action="store_true", help="only the minimal generators")

    pk = sub.add_parser("parking", parents=[opts], help="(G,k)-parking functions")
    pk.add_argument("action", choices=("enumerate", "test"))
    pk.add_argument("operands", nargs="*", metavar="ARG",
                    help="graph file (unless --complete), then a1,...,an for 'test'")

    f = sub.add_parser("forests", parents=[common], help="forest count")
    f.add_argument("--by-activity", action="store_true",
                   help="distribution of |E| - |F| - external activity")
    f.add_argument("--seed", type=int, default=None,
                   help="shuffle the edge order with this seed (default: canonical order)")

    sub.add_parser("altsum", parents=[common], help="alternating sum over subset chains (k=1)")

    v = sub.add_parser("verify", parents=[common], help="run every cross-check on the graph")
    v.add_argument("--threads", type=int, default=1)

    e = sub.add_parser("export", parents=[common], help="Macaulay2 / Singular text")
    e.add_argument("--format", choices=FORMATS, required=True)
    e.add_argument("--ideal", choices=("power", "monomial"), default="power")
    return p


def _graph(args) -> RootedMultigraph:
    if args.complete is not None and args.graph is not None:
        raise UsageError("give either a graph file or --complete, not both")
    if args.complete is not None:
        if args.complete < 2:
            raise UsageError("--complete needs at least 2 vertices")
        return RootedMultigraph.complete(args.complete)
    if args.graph is None:
        raise UsageError("missing graph file (or --complete V)")
    try:
        return load_graph(args.graph)
    except OSError as exc:
        raise UsageError(f"cannot read {args.graph}: {exc.strerror}") from None
    except ValueError as exc:
        raise GraphFormatError(f"{args.graph}: {exc}") from None


def _emit(args, data: dict, text: str, out):
    if args.json:
        out.write(json.dumps(data, sort_keys=True) + "\n")
    else:
        out.write(text if text.endswith("\n") else text + "\n")


def _series_json(s: HilbertSeries) -> dict:
    return {"coeffs": list(s.coeffs), "dim": s.dimension, "text": str(s)}


def cmd_hilbert(args, g, k, out) -> int:
    data, lines = {"k": k, "n": g.n}, []
    series = {}
    if args.method in ("monomial", "both"):
        series["monomial"] = hilbert_series_B(monomize(g, k))
    if args.method in ("rank", "both"):
        series["rank"] = hilbert_series_A(g, k, workers=args.threads, rank_method=args.rank_method)
        if args.dump_matrices:
            _dump_matrices(args.dump_matrices, g, k, len(series["rank"].coeffs))
    for name, s in series.items():
        data[name] = _series_json(s)
        lines.append(f"{name}: {s}" if args.method == "both" else str(s))
    dims = {s.dimension for s in series.values()}
    match = len(set(series.values())) == 1
    data["match"] = match
    lines.append(f"dim = {' / '.join(str(s.dimension) for s in series.values()) if len(dims) > 1 else dims.pop()}")
    if not match:
        lines.append("MISMATCH between monomial and rank routes")
    _emit(args, data, "\n".join(lines), out)
    return EXIT_OK if match else EXIT_MISMATCH


def _dump_matrices(directory, g, k, top):
    os.makedirs(directory, exist_ok=True)
    for d in range(top + 1):
        with open(os.path.join(directory, f"degree{d}.txt"), "w") as fh:
            fh.write(graded_piece_matrix(g, k, d).dump())


def cmd_monomize(args, g, k, out) -> int:
    J = monomize(g, k)
    gens = minimal_generators(J) if args.minimal else list(J.generators)
    data = {"k": k, "n": g.n, "minimal": args.minimal,
            "generators": [{"support": format_subset(gen.support), "exponents": list(gen.exponents),
                            "monomial": monomial_str(gen.exponents)} for gen in gens]}
    lines = [f"# n={g.n} k={k} generators={len(gens)}" + (" (minimal)" if args.minimal else "")]
    lines += [f"{format_subset(gen.support)} {monomial_str(gen.exponents)}" for gen in gens]
    _emit(args, data, "\n".join(lines), out)
    return EXIT_OK


def cmd_parking(args, g, k, out) -> int:
    if args.action == "enumerate":
        if args.vector is not None:
            raise UsageError("'parking enumerate' takes no vector")
        std = standard_monomials(monomize(g, k))
        data = {"k": k, "n": g.n, "dim": len(std), "vectors": [list(a) for a in std]}
        _emit(args, data, format_listing(std, g.n, k), out)
        return EXIT_OK
    if args.vector is None:
        raise UsageError("'parking test' needs a vector a1,...,an")
    try:
        a = tuple(int(x) for x in args.vector.split(","))
    except ValueError:
        raise UsageError(f"bad vector {args.vector!r}") from None
    if len(a) != g.n or min(a) < 0:
        raise UsageError(f"vector must have {g.n} nonnegative entries")
    ok = is_g_parking(g, a, k)
    data = {"k": k, "vector": list(a), "parking": ok}
    text = f"{','.join(map(str, a))} is {'' if ok else 'not '}a (G,{k})-parking function"
    _emit(args, data, text, out)
    return EXIT_OK


def cmd_forests(args, g, k, out) -> int:
    count = len(enumerate_forests(g))
    data = {"forests": count, "edges": g.num_edges()}
    lines = [str(count)]
    if args.by_activity:
        order = g.edges()
        if args.seed is not None:
            random.Random(args.seed).shuffle(order)
        coeffs = activity_polynomial(g, order)
        data["by_activity"] = coeffs
        lines += [f"{d} {c}" for d, c in enumerate(coeffs)]
    _emit(args, data, "\n".join(lines), out)
    return EXIT_OK


def cmd_altsum(args, g, k, out) -> int:
    if k != 1:
        raise UsageError("altsum is defined for k=1 only")
    total, nonzero, chains = 0, 0, 0
    for _, term in alternating_sum_terms(g):
        chains += 1
        total += term
        nonzero += term != 0
    data = {"value": total, "nonzero_chains": nonzero, "chains": chains}
    _emit(args, data, f"alternating sum = {total}\nnonzero chains = {nonzero} of {chains}", out)
    return EXIT_OK


def cmd_verify(args, g, k, out) -> int:
    ks = (0, 1) if k is None else (k,)
    checks = run_checks(g, ks, workers=args.threads)
    failed = [c for c in checks if not c.ok]
    data = {"checks": [{"name": c.name, "status": c.status, "detail": c.detail} for c in checks],
            "ok": not failed}
    lines = [str(c) for c in checks]
    lines.append(f"{len(checks) - len(failed)}/{len(checks)} checks passed or skipped")
    _emit(args, data, "\n".join(lines), out)
    return EXIT_MISMATCH if failed else EXIT_OK


def cmd_export(args, g, k, out) -> int:
    ideal = build_power_ideal(g, k) if args.ideal == "power" else monomize(g, k)
    text = export(ideal, args.format)
    _emit(args, {"format": args.format, "ideal": args.ideal, "k": k, "text": text}, text, out)
    return EXIT_OK


COMMANDS = {
    "hilbert": cmd_hilbert,
    "monomize": cmd_monomize,
    "parking": cmd_parking,
    "forests": cmd_forests,
    "altsum": cmd_altsum,
    "verify": cmd_verify,
    "export": cmd_export,
}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = _parser()
    try:
        args, extra = parser.parse_known_args(argv)
        if extra and (args.verb != "parking" or any(x.startswith("-") for x in extra)):
            parser.error(f"unrecognized arguments: {' '.join(extra)}")
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if args.verb == "parking":
        ops = args.operands + extra
        if args.complete is None and ops:
            args.graph = ops.pop(0)
        else:
            args.graph = None
        if len(ops) > 1:
            err.write(f"monomization parking: too many arguments: {' '.join(ops)}\n")
            return EXIT_USAGE
        args.vector = ops[0] if ops else None
    k = args.k
    if k is None and args.verb != "verify":
        k = 1
    try:
        g = _graph(args)
        if args.verb == "hilbert" and args.threads < 1:
            raise UsageError("--threads must be at least 1")
        return COMMANDS[args.verb](args, g, k, out)
    except (UsageError, GraphFormatError, NonPositiveExponent, InfiniteQuotient) as exc:
        err.write(f"monomization {args.verb}: {exc}\n")
        return EXIT_USAGE
    except ValueError as exc:  # e.g. forest operations on a directed graph
        err.write(f"monomization {args.verb}: {exc}\n")
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
