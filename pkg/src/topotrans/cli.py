"""Command line front end; every command prints one JSON document.

Exit status: 0 when the computation ran (whatever the verdict), 2 for usage
errors, 3 for malformed input data.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import charclasses, checkers, mult
from .geometry import (
    ColoredFamily,
    GeometryError,
    Polytope,
    build_Leta_family,
    check_heterochromatic,
    check_semintersecting,
    find_point_transversal,
    flat_search,
    intersects,
    plant_family,
    random_leta_coords,
    verify_theorem_on_instance,
)
from .geometry.polytope import fraction_json
from .schubert import (
    CohClass,
    GrassmannContext,
    SchubertError,
    affine_embed,
    all_symbols,
    check_symbol,
    enumerate_basis,
    poincare_dual,
    transpose_symbol,
)

EXIT_USAGE = 2
EXIT_DATA = 3


class InputError(ValueError):
    pass


def int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def spec_list(text: str) -> list[tuple]:
    """'2,1;2,1' -> [(2, 1), (2, 1)]."""
    out = []
    for chunk in text.split(";"):
        vals = int_list(chunk)
        if len(vals) not in (2, 3):
            raise argparse.ArgumentTypeError(f"color spec must be rho,k[,count], got {chunk!r}")
        out.append(tuple(vals))
    return out


def _load_json(path: Optional[str]):
    if path is None:
        return None
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read JSON from {path}: {exc}") from exc


def _ctx(args) -> GrassmannContext:
    if args.d is None or args.m is None:
        raise InputError("--d and --m are required")
    return GrassmannContext(args.d, args.m, args.ring)


def _class_arg(args, name="symbol", json_key=None) -> CohClass:
    data = _load_json(args.json_in)
    if data is not None:
        if json_key is not None:
            if json_key not in data:
                raise InputError(f"JSON input lacks key {json_key!r}")
            data = data[json_key]
        return CohClass.from_json(data)
    sym = getattr(args, name)
    if sym is None:
        raise InputError(f"--{name} or --json-in is required")
    return CohClass.from_symbol(sym, _ctx(args))


# --- schubert ---------------------------------------------------------------


def cmd_schubert(args):
    if args.action == "mul":
        a = _class_arg(args, "a", "a")
        b = _class_arg(args, "b", "b")
        return mult.multiply(a, b).to_json()
    if args.action == "power":
        if args.n is None:
            raise InputError("--n is required")
        return mult.power(_class_arg(args), args.n).to_json()
    ctx = _ctx(args)
    if args.action == "basis":
        degrees = [args.degree] if args.degree is not None else range(ctx.dim + 1)
        return {"d": ctx.d, "m": ctx.m,
                "basis": {str(g): [list(s) for s in enumerate_basis(ctx, g)] for g in degrees},
                "total": len(all_symbols(ctx)) if args.degree is None else None}
    if args.symbol is None:
        raise InputError("--symbol is required")
    sym = check_symbol(args.symbol, ctx)
    if args.action == "dual":
        return {"d": ctx.d, "m": ctx.m, "symbol": list(sym), "dual": list(poincare_dual(sym, ctx))}
    if args.action == "embed":
        out, octx = affine_embed(sym, ctx)
    else:
        out, octx = transpose_symbol(sym, ctx)
    return {"d": octx.d, "m": octx.m, "symbol": list(out)}


# --- classes ----------------------------------------------------------------


def cmd_classes(args):
    if args.action == "w1-height":
        if args.d is None or args.m is None:
            raise InputError("--d and --m are required")
        return charclasses.w1_height_closed_form(args.d, args.m).to_json()
    ctx = _ctx(args)
    if args.action in ("sw", "dual-sw"):
        if args.i is None:
            raise InputError("--i is required")
        fn = charclasses.stiefel_whitney if args.action == "sw" else charclasses.dual_stiefel_whitney
        return fn(ctx, args.i).to_json()
    if args.action == "cat-bound":
        b = charclasses.ls_category_bounds(ctx)
        return {"d": ctx.d, "m": ctx.m, "height": b.height, "bound": b.sharp,
                "unconditional": b.unconditional}
    if args.l is None or args.r is None:
        raise InputError("--l and --r are required")
    n_bundle = args.n_bundle if args.n_bundle is not None else ctx.m
    res = charclasses.rank_locus_class(args.l, args.r, n_bundle, ctx)
    return {"class": res.cls.to_json(), "in_box": res.in_box}


# --- check ------------------------------------------------------------------


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise InputError("missing " + ", ".join("--" + n.replace("_", "-") for n in missing))


def cmd_check(args):
    a = args.action
    if a == "colorful":
        _need(args, "d", "m", "rho", "k")
        rep = checkers.check_colorful_trans(args.d, args.m, args.rho, args.k)
    elif a in ("colorful-multi", "semi", "complex"):
        _need(args, "d", "m", "specs")
        fn = {"colorful-multi": checkers.check_colorful_trans_multi,
              "semi": checkers.check_semi_trans,
              "complex": checkers.check_complex_trans}[a]
        rep = fn(args.d, args.m, args.specs)
    elif a in ("ineq", "semi-ineq"):
        _need(args, "d", "k", "rhos")
        fn = checkers.check_ineq_corollary if a == "ineq" else checkers.check_semi_ineq
        rep = fn(args.d, args.k, args.rhos)
    elif a in ("ls", "semi-ls"):
        _need(args, "n", "rho")
        fn = checkers.check_ls_trans if a == "ls" else checkers.check_semi_ls
        rep = fn(args.n, args.rho)
    else:
        _need(args, "eta", "d")
        rep = checkers.check_linear_map(args.eta, args.d)
    return rep.to_json()


# --- geom -------------------------------------------------------------------


def _sets_from_json(data) -> list[Polytope]:
    if data is None:
        raise InputError("--json-in is required")
    if isinstance(data, dict) and "sets" in data:
        d = data.get("d")
        return [Polytope.from_json(p, d) for p in data["sets"]]
    if isinstance(data, dict) and "colors" in data:
        fam = ColoredFamily.from_json(data)
        return [p for c in fam.colors for p in c]
    raise InputError("expected {'d':..,'sets':[..]} or a family document")


def _point_json(x):
    return None if x is None else [fraction_json(v) for v in x]


def cmd_geom(args):
    a = args.action
    if a == "plant":
        _need(args, "d", "rho")
        specs = args.specs if args.specs is not None else args.sizes
        if specs is None:
            raise InputError("--specs or --sizes is required")
        return plant_family(args.d, args.target, args.rho, specs, args.seed).to_json()
    if a == "leta":
        _need(args, "eta")
        data = _load_json(args.json_in)
        if data is not None:
            coords = {tuple(int(i) for i in k.split(",")): v for k, v in data["coords"].items()}
        else:
            _need(args, "d")
            coords = random_leta_coords(args.eta, args.d, args.seed)
        return build_Leta_family(args.eta, coords).to_json()
    data = _load_json(args.json_in)
    if a == "hetero":
        fam = ColoredFamily.from_json(data or {})
        return {"heterochromatic": check_heterochromatic(fam)}
    if a == "verify":
        _need(args, "theorem", "params")
        fam = ColoredFamily.from_json(data or {})
        try:
            params = json.loads(args.params)
        except json.JSONDecodeError as exc:
            raise InputError(f"--params is not JSON: {exc}") from exc
        return verify_theorem_on_instance(fam, args.theorem, params, args.budget,
                                          seed=args.seed).to_json()
    sets = _sets_from_json(data)
    if a == "intersects":
        return {"intersects": intersects(sets)}
    if a == "semi":
        return {"semintersecting": check_semintersecting(sets)}
    if a == "point-transversal":
        return {"point": _point_json(find_point_transversal(sets))}
    _need(args, "rho")
    out = flat_search(sets, args.rho, args.budget, seed=args.seed)
    return {"found": out.candidate is not None,
            "flat": None if out.candidate is None else out.candidate.to_json(),
            "exhaustive": out.exhaustive, "method": out.method,
            "tried": out.directions_tried}


# --- parser -----------------------------------------------------------------


def _common(p: argparse.ArgumentParser):
    p.add_argument("--d", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--ring", choices=["Z2", "Z"], default="Z2")
    p.add_argument("--json-in", dest="json_in", metavar="FILE")
    p.add_argument("--out", metavar="FILE", help="write JSON here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="topotrans", description=__doc__.splitlines()[0])
    groups = parser.add_subparsers(dest="group", required=True)

    sch = groups.add_parser("schubert", help="Schubert symbols and products")
    sch.add_argument("action", choices=["mul", "power", "dual", "basis", "embed", "transpose"])
    _common(sch)
    sch.add_argument("--symbol", type=int_list)
    sch.add_argument("--a", type=int_list)
    sch.add_argument("--b", type=int_list)
    sch.add_argument("--n", type=int)
    sch.add_argument("--degree", type=int)
    sch.set_defaults(func=cmd_schubert)

    cls = groups.add_parser("classes", help="characteristic classes and bounds")
    cls.add_argument("action", choices=["sw", "dual-sw", "w1-height", "cat-bound", "rank-locus"])
    _common(cls)
    cls.add_argument("--i", type=int)
    cls.add_argument("--l", type=int)
    cls.add_argument("--r", type=int)
    cls.add_argument("--n-bundle", dest="n_bundle", type=int)
    cls.set_defaults(func=cmd_classes)

    chk = groups.add_parser("check", help="theorem applicability")
    chk.add_argument("action", choices=["colorful", "colorful-multi", "ineq", "ls", "semi",
                                        "semi-ineq", "semi-ls", "complex", "linear-map"])
    _common(chk)
    chk.add_argument("--rho", type=int)
    chk.add_argument("--k", type=int)
    chk.add_argument("--n", type=int)
    chk.add_argument("--specs", type=spec_list, help="rho,k pairs separated by ';'")
    chk.add_argument("--rhos", type=int_list)
    chk.add_argument("--eta", type=int_list)
    chk.set_defaults(func=cmd_check)

    geo = groups.add_parser("geom", help="exact polytope computations")
    geo.add_argument("action", choices=["intersects", "hetero", "semi", "point-transversal",
                                        "flat-transversal", "plant", "leta", "verify"])
    _common(geo)
    geo.add_argument("--rho", type=int)
    geo.add_argument("--budget", type=int, default=400)
    geo.add_argument("--seed", type=int, default=0)
    geo.add_argument("--target", type=int, default=0)
    geo.add_argument("--specs", type=spec_list)
    geo.add_argument("--sizes", type=int_list)
    geo.add_argument("--eta", type=int_list)
    geo.add_argument("--theorem")
    geo.add_argument("--params", help="theorem parameters as a JSON object")
    geo.set_defaults(func=cmd_geom)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else 0
    try:
        result = args.func(args)
    except (InputError, SchubertError, GeometryError, KeyError, TypeError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return EXIT_DATA
    text = json.dumps(result)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
