"""Command-line interface: ``steklov-orb <subcommand> ...``, JSON on stdout.

Exit codes: 0 success, 1 usage error, 2 PeelInconsistency, 3 InfeasibleCounts,
4 any other domain error, 10 a demo case failed.
JSON arguments accept inline JSON, a file path, or ``-`` for stdin.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib.metadata import PackageNotFoundError, version as pkg_version
from pathlib import Path

from . import demo as demo_mod
from . import io
from .ball_quotients import dtn_cone, dtn_disk, invariant_harmonic_dims, quotient_ball_spectrum
from .ball_quotients import steklov_isospectral_quotients
from .bounds import (
    BoundRegimeInput,
    ConformalFlag,
    LensParams,
    bound_regime,
    euler_characteristic,
    lens_first_invariant_degree,
    sharpness_table,
    shortest_l1_vector,
)
from .errors import InfeasibleCounts, PeelInconsistency, StekError
from .inverse import (
    data_equivalent,
    enumerate_class_members,
    peel_progressions,
    recover_boundary_class,
)
from .spectra import as_rational, canonical_spectrum, enumerate_spectrum, spectra_equal
from .sunada import (
    matrix_action,
    permutation_character,
    sunada_ball_check,
    sunada_condition,
)

EXIT_USAGE, EXIT_PEEL, EXIT_INFEASIBLE, EXIT_DOMAIN, EXIT_DEMO = 1, 2, 3, 4, 10

# input schemas per subcommand, for --schema
SUBCOMMAND_SCHEMAS = {
    "spectrum": {"--boundary": "boundary"},
    "invert": {"--view": "view"},
    "equivalent": {"--a": "boundary", "--b": "boundary"},
    "quotient-ball": {"--group": "orthogonal_group"},
    "cone": {},
    "isospectral": {"--group1": "orthogonal_group", "--group2": "orthogonal_group"},
    "sunada": {"--group": "finite_group", "--collections": "collections",
               "--matrix-group": "matrix_action"},
    "lens-sigma2": {},
    "sharpness": {},
    "euler": {"--cells": "cells"},
    "regime": {},
    "demo": {},
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sub = self.prog.split()[-1]
        schemas = SUBCOMMAND_SCHEMAS.get(sub)
        if schemas:
            print(f"{self.prog}: JSON inputs: " + ", ".join(f"{k} ({v})" for k, v in schemas.items()),
                  file=sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _load(arg: str):
    if arg == "-":
        text = sys.stdin.read()
    elif arg.lstrip().startswith(("{", "[")):
        text = arg
    else:
        path = Path(arg)
        if not path.exists():
            raise UsageError(f"no such file: {arg}")
        text = path.read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON in {arg[:40]!r}: {exc}") from exc


def _version() -> str:
    try:
        return pkg_version("steklov-orb")
    except PackageNotFoundError:
        return "0.1.0"


# -- subcommands -------------------------------------------------------------------

def cmd_spectrum(args):
    bd = io.boundary_from_json(_load(args.boundary))
    spec = canonical_spectrum(bd, pi_lengths=args.pi_lengths)
    out = {"boundary": io.boundary_to_json(bd), "spectrum": io.spectrum_to_json(spec)}
    if spec.zeros or spec.progressions:
        out["view"] = io.view_to_json(enumerate_spectrum(spec, args.n), args.float)
    else:
        out["view"] = {"unit": spec.unit.value, "values": []}
    return out


def cmd_invert(args):
    view = io.view_from_json(_load(args.view))
    dec = peel_progressions(view)
    cls = recover_boundary_class(dec)
    return {"r": cls.r, "s": cls.s,
            "merged_lengths": [io.rat(x) for x in cls.merged_lengths],
            "members": [io.boundary_to_json(m) for m in enumerate_class_members(cls)],
            "decomposition": io.spectrum_to_json(dec)}


def cmd_equivalent(args):
    a = io.boundary_from_json(_load(args.a))
    b = io.boundary_from_json(_load(args.b))
    return {"data_equivalent": data_equivalent(a, b),
            "spectra_equal": spectra_equal(canonical_spectrum(a), canonical_spectrum(b))}


def cmd_quotient_ball(args):
    group = io.group_from_json(_load(args.group))
    view = quotient_ball_spectrum(group, as_rational(args.radius), args.max_degree)
    table = invariant_harmonic_dims(group, args.max_degree)
    return {"group_order": group.order, "radius": io.rat(as_rational(args.radius)),
            "max_degree": args.max_degree, "dims": list(table.dims),
            **io.view_to_json(view, args.float)}


def cmd_cone(args):
    c, d = dtn_cone(args.k, args.modes), dtn_disk(1, args.modes)
    return {"cone": io.dtn_to_json(c), "disk": io.dtn_to_json(d),
            "verdict": "IDENTICAL" if c.same_operator(d) else "DIFFERENT"}


def cmd_isospectral(args):
    g1 = io.group_from_json(_load(args.group1))
    g2 = io.group_from_json(_load(args.group2))
    v = steklov_isospectral_quotients(g1, g2, args.max_degree)
    return {"isospectral_up_to_degree": v.max_degree, "equal": v.equal,
            "first_mismatch": v.first_mismatch, "dims_1": list(v.dims_1), "dims_2": list(v.dims_2),
            "verdict": v.describe()}


def cmd_sunada(args):
    group = io.finite_group_from_json(_load(args.group))
    H, K = io.collections_from_json(_load(args.collections))
    rep = sunada_condition(group, H, K)
    chi_h, chi_k = permutation_character(group, H), permutation_character(group, K)
    out = {"sunada_condition": rep.holds,
           "per_class": [{"representative": r.representative,
                          "class": [group.labels[i] for i in r.conjugacy_class],
                          "H": io.rat(r.h_side), "K": io.rat(r.k_side), "equal": r.ok}
                         for r in rep.rows],
           "permutation_character_H": list(chi_h), "permutation_character_K": list(chi_k),
           "permutation_characters_equal": chi_h == chi_k}
    if args.matrix_group:
        if args.max_degree is None:
            raise UsageError("--matrix-group requires --max-degree")
        action = matrix_action(group, io.action_images_from_json(_load(args.matrix_group)))
        check = sunada_ball_check(action, H, K, args.max_degree)
        out["ball_spectra_equal"] = check.equal
        out["max_degree"] = args.max_degree
    return out


def cmd_lens_sigma2(args):
    try:
        p = tuple(int(x) for x in args.p.split(","))
    except ValueError as exc:
        raise UsageError(f"--p must be comma-separated integers, got {args.p!r}") from exc
    params = LensParams(args.q, p)
    sv = shortest_l1_vector(params)
    return {"sigma2": sv.norm, "witness": list(sv.witness),
            "first_invariant_degree": lens_first_invariant_degree(params)}


def cmd_sharpness(args):
    rows = sharpness_table(args.m, args.jmax)
    return {"m": args.m, "rows": rows, "all_sharp": all(r["sharp"] for r in rows)}


def cmd_euler(args):
    return {"chi": io.rat(euler_characteristic(io.cells_from_json(_load(args.cells))))}


def cmd_regime(args):
    inp = BoundRegimeInput(as_rational(args.chi), args.r, args.s)
    rep = bound_regime(inp, args.k, args.A, args.B, ConformalFlag(args.conformal))
    return {"regime": rep.regime.value, "rhs": io.rat(rep.rhs), "excess": io.rat(rep.excess),
            "k": rep.k, "A": io.rat(rep.A), "B": io.rat(rep.B), "conformal": rep.conformal.value}


def cmd_demo(args):
    names = [args.name] if args.name and args.name != "all" else None
    kwargs = {"k": args.k} if args.k else {}
    return demo_mod.run(names, **kwargs)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="steklov-orb", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {_version()}")
    parser.add_argument("--schema", metavar="SUBCOMMAND", choices=sorted(SUBCOMMAND_SCHEMAS),
                        help="print the JSON schemas of a subcommand's inputs and exit")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=func)
        return p

    p = add("spectrum", cmd_spectrum, "canonical spectrum of boundary data")
    p.add_argument("--boundary", required=True)
    p.add_argument("--n", type=int, default=20)
    p.add_argument("--pi-lengths", action="store_true", help="lengths are coefficients of pi")
    p.add_argument("--float", action="store_true", help="add approximate decimal values")

    p = add("invert", cmd_invert, "recover the boundary-data class from a spectrum prefix")
    p.add_argument("--view", default="-")

    p = add("equivalent", cmd_equivalent, "compare two boundary data")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)

    p = add("quotient-ball", cmd_quotient_ball, "spectrum of a finite-group quotient of a ball")
    p.add_argument("--group", required=True)
    p.add_argument("--radius", default="1")
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--float", action="store_true")

    p = add("cone", cmd_cone, "cone vs unit disk Dirichlet-to-Neumann tables")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--modes", type=int, default=10)

    p = add("isospectral", cmd_isospectral, "compare two ball quotients up to a degree")
    p.add_argument("--group1", required=True)
    p.add_argument("--group2", required=True)
    p.add_argument("--max-degree", type=int, required=True)

    p = add("sunada", cmd_sunada, "check the Sunada condition for subgroup collections")
    p.add_argument("--group", required=True)
    p.add_argument("--collections", required=True)
    p.add_argument("--matrix-group")
    p.add_argument("--max-degree", type=int)

    p = add("lens-sigma2", cmd_lens_sigma2, "sigma_2 of a lens-type ball quotient")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--p", required=True)

    p = add("sharpness", cmd_sharpness, "sigma_2 along the family q = j^m")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--jmax", type=int, required=True)

    p = add("euler", cmd_euler, "orbifold Euler characteristic of a cell division")
    p.add_argument("--cells", required=True)

    p = add("regime", cmd_regime, "case split of the two-dimensional eigenvalue bound")
    p.add_argument("--chi", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--A", required=True)
    p.add_argument("--B", required=True)
    p.add_argument("--conformal", choices=[f.value for f in ConformalFlag],
                   default=ConformalFlag.UNSPECIFIED.value)

    p = add("demo", cmd_demo, "run the worked examples")
    p.add_argument("name", nargs="?", default="all", choices=["all", *demo_mod.CASES])
    p.add_argument("--k", type=int)
    return parser


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.schema:
        schemas = {flag: {"$schema": "https://json-schema.org/draft/2020-12/schema",
                          **io.SCHEMAS[name]}
                   for flag, name in SUBCOMMAND_SCHEMAS[args.schema].items()}
        print(json.dumps({"subcommand": args.schema, "inputs": schemas}, indent=2), file=stdout)
        return 0
    if not args.command:
        parser.print_help(sys.stderr)
        return EXIT_USAGE
    try:
        out = args.func(args)
    except UsageError as exc:
        print(f"steklov-orb {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except StekError as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        if isinstance(exc, PeelInconsistency):
            return EXIT_PEEL
        if isinstance(exc, InfeasibleCounts):
            return EXIT_INFEASIBLE
        return EXIT_DOMAIN
    print(json.dumps(out, indent=2), file=stdout)
    if args.command == "demo" and not out["all_ok"]:
        return EXIT_DEMO
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
