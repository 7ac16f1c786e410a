"""Command-line entry point: ``mixedcayley <subcommand> ...``.

JSON goes to stdout (sorted keys, so identical runs are byte-identical) and
CSV carries a header row.  Search progress goes to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import bounds, families, search, tiles
from .errors import MixedCayleyError
from .group import AbelianGroup
from .mixedgraph import CayleyMixedGraph

EXIT_INVALID = 1
EXIT_NOT_EXHAUSTED = 2


def parse_ints(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.replace("(", "").replace(")", "").split(",") if x.strip())


def parse_generators(text: str) -> list[tuple[int, ...]]:
    """``"(1,0);(1,1);(0,-2)"`` or ``"1;4;9"`` into integer tuples."""
    out = [parse_ints(part) for part in text.split(";") if part.strip()]
    if not out:
        raise ValueError("no generators given")
    return out


def parse_matrix(text: str) -> tuple[tuple[int, ...], ...]:
    return tuple(parse_ints(row) for row in text.split(";") if row.strip())


def _emit_json(data) -> None:
    sys.stdout.write(json.dumps(data, sort_keys=True) + "\n")


def _cmd_bounds(args) -> int:
    print(bounds.ac_bound(args.r1, args.r2, args.z, args.k, form=args.form))
    return 0


def _cmd_table1(args) -> int:
    sys.stdout.write(bounds.table1_csv(args.k, args.r1_max, args.z_max))
    return 0


def _cmd_construct(args) -> int:
    group = AbelianGroup(parse_ints(args.group))
    graph = CayleyMixedGraph.from_generators(group, parse_generators(args.gens))
    _emit_json(graph.report())
    return 0


def _cmd_diameter(args) -> int:
    text = sys.stdin.read() if args.spec == "-" else open(args.spec, encoding="utf-8").read()
    data = json.loads(text)
    if isinstance(data.get("group"), list):
        data["group"] = {"factors": data["group"]}
    _emit_json(CayleyMixedGraph.from_dict(data).report())
    return 0


def _cmd_families(args) -> int:
    if args.name == "table2":
        _require(args, "k")
        rows = families.family_table2(args.k, include_inapplicable=args.include_inapplicable)
        _emit_json([row.report() for row in rows])
        return 0
    if args.name == "r1z1":
        _require(args, "k")
        inst = families.family_r1z1(args.k, args.variant)
    elif args.name == "circulant_power":
        _require(args, "n", "z")
        inst = families.family_circulant_power(args.n, args.z)
    else:
        _require(args, "z", "m")
        inst = families.family_dense(args.z, args.m)
    _emit_json(inst.report())
    return 0


def _require(args, *names: str) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise ValueError(f"families --name {args.name} needs {' '.join(missing)}")


def _cmd_tiles(args) -> int:
    if args.matrix:
        tile = tiles.tile_from_matrix(parse_matrix(args.matrix))
    else:
        tile = tiles.LTile(*parse_ints(args.dims))
    out = {
        "tile": {"ell": tile.ell, "h": tile.h, "x": tile.x, "y": tile.y},
        "matrix": [list(r) for r in tiles.tile_to_matrix(tile)],
        "area": tile.area,
        "tessellates": tiles.tile_tessellates(tile),
    }
    if out["tessellates"]:
        out["diameter"] = tiles.tile_diameter(tile)
        out["formula_diameter"] = tiles.tile_diameter_formula(tile)
        out["is_distance_diagram"] = tiles.is_distance_diagram(tile)
    _emit_json(out)
    return 0


def _progress(line: str) -> None:
    print(line, file=sys.stderr, flush=True)


def _cmd_search(args) -> int:
    spec = search.SearchSpec(
        args.r1, args.r2, args.z, args.k,
        n_min=args.n_min, n_max=args.n_max,
        budget_candidates=args.budget_candidates, budget_seconds=args.budget_seconds,
        jobs=args.jobs, all_witnesses=args.all_witnesses,
    )
    result = search.exhaustive_search(spec, progress=None if args.quiet else _progress)
    _emit_json(result.to_dict())
    return 0 if result.exhausted else EXIT_NOT_EXHAUSTED


def _cmd_nonexistence(args) -> int:
    result = search.verify_moore_nonexistence(args.z, args.k, budget_seconds=args.budget_seconds, jobs=args.jobs)
    _emit_json(result.to_dict())
    return 0 if result.conclusive else EXIT_NOT_EXHAUSTED


def fig7_rows(z: int, k_max: int, k_min: int = 1) -> list[tuple[int, int, float, float]]:
    return [
        (k, bounds.ac_bound(1, 0, z, k), bounds.dense_family_order(z, k), bounds.circulant_power_order(z, k))
        for k in range(k_min, k_max + 1)
    ]


def _cmd_fig7(args) -> int:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["k", "moore_bound", "dense_family", "circulant_power"])
    for k, b, dense, circ in fig7_rows(args.z, args.k_max, args.k_min):
        writer.writerow([k, b, repr(dense), repr(circ)])
    sys.stdout.write(buf.getvalue())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mixedcayley", description="Mixed Abelian Cayley graphs: bounds, constructions, search.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", help="Moore-like bound for mixed Abelian Cayley graphs")
    for name in ("r1", "r2", "z", "k"):
        p.add_argument(name, type=int)
    p.add_argument("--form", default="eq5", choices=bounds.AC_FORMS)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("table1", help="CSV of bounds with r2 = 0; rows z, columns r1",
                       description="CSV columns: z, r1=0 .. r1=R1_MAX.")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r1-max", type=int, default=5)
    p.add_argument("--z-max", type=int, default=5)
    p.set_defaults(func=_cmd_table1)

    p = sub.add_parser("construct", help="build a Cayley mixed graph and report its distance profile")
    p.add_argument("--group", required=True, help='cyclic factors, e.g. "2,16"')
    p.add_argument("--gens", required=True, help='e.g. "(1,0);(1,1);(0,10)"')
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("diameter", help="report for a graph given as JSON {group, generators}")
    p.add_argument("spec", help="path to a JSON file, or - for stdin")
    p.set_defaults(func=_cmd_diameter)

    p = sub.add_parser("families", help="build a named family and check its predicted order and diameter")
    p.add_argument("--name", required=True, choices=["table2", "r1z1", "circulant_power", "dense"])
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--z", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--variant", default="a", choices=["a", "b"])
    p.add_argument("--include-inapplicable", action="store_true")
    p.set_defaults(func=_cmd_families)

    p = sub.add_parser("tiles", help="L-shaped tile of a two-arc circulant digraph")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--matrix", help='e.g. "4,-1;-3,3"')
    g.add_argument("--dims", help='"l,h,x,y"')
    p.set_defaults(func=_cmd_tiles)

    p = sub.add_parser("search", help="exhaustive search; exit 2 if the budget ran out")
    p.add_argument("--r1", type=int, default=0)
    p.add_argument("--r2", type=int, default=0)
    p.add_argument("--z", type=int, default=0)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--n-max", type=int)
    p.add_argument("--budget-candidates", type=int)
    p.add_argument("--budget-seconds", type=float)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--all-witnesses", action="store_true")
    p.add_argument("--quiet", action="store_true", help="no progress lines on stderr")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("nonexistence", help="is the bound with one involution and z arcs attained?")
    p.add_argument("--z", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--budget-seconds", type=float)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_nonexistence)

    p = sub.add_parser("fig7-data", help="CSV comparing the bound with the two dense constructions",
                       description="CSV columns: k, moore_bound (r1=1, r2=0), dense_family, circulant_power.")
    p.add_argument("--z", type=int, required=True)
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--k-min", type=int, default=1)
    p.set_defaults(func=_cmd_fig7)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (MixedCayleyError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
