"""Command-line frontend.

One binary, subcommand style:

    antichains construct --n 12 --K 2,4 --l4
    antichains check --family fam.txt --K 2,3,4
    antichains canonical --graph g.json --K 2,4
    antichains dual --family fam.txt
    antichains search --n 7 --K 2,4 --jobs 4
    antichains bounds --constants
    antichains table --nmax 8 --deep
    antichains verify --graph g.json --antichain fam.txt --K 2,4

Family files hold the compact/braced text format or family JSON; graph
files hold graph JSON.  Every subcommand takes --json for machine-readable
output.  Exit codes: 0 when the command's boolean verdicts (if any) all
hold, 1 when some verdict is false, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bounds as bounds_mod
from . import duality
from .construct import general_graph, l4_graph
from .graph import Graph, count_k_cliques, graph_from_json, graph_to_json, to_dot
from .search import search_exact, table_reproduce, table_rows, verify_witness
from .setfam import (
    KSpec,
    SetFamily,
    dual,
    family_from_json,
    family_to_json,
    format_family,
    is_antichain,
    is_css,
    is_k_antichain,
    parse_family,
    profile,
)


def _read_text(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}") from exc


def _load_family(path: str, n: int | None) -> SetFamily:
    text = _read_text(path).strip()
    if text.startswith("{") and '"sets"' in text:
        return family_from_json(text)
    if n is None:
        # infer the ground size from the largest point mentioned
        probe = parse_family(text, 10**6)
        n = max((max(m.points(), default=1) for m in probe), default=2)
        n = max(n, 2)
    return parse_family(text, n)


def _load_graph(path: str) -> Graph:
    text = _read_text(path)
    try:
        return graph_from_json(text)
    except (json.JSONDecodeError, ValueError) as exc:
        raise ValueError(f"{path} is not graph JSON: {exc}") from exc


def _emit(data: dict, as_json: bool, lines: list[str]) -> None:
    if as_json:
        print(json.dumps(data, indent=2, default=str))
    else:
        for line in lines:
            print(line)


def _cmd_construct(args) -> int:
    if args.l4:
        ks = KSpec.parse(args.K) if args.K else KSpec.of((2, 4))
        if ks.l != 4:
            raise ValueError("--l4 builds the largest-level-4 variant; use K with max 4")
        g = l4_graph(args.n)
    else:
        if not args.K:
            raise ValueError("construct needs --K (or --l4)")
        ks = KSpec.parse(args.K)
        g = general_graph(args.n, ks)
    l = ks.l
    e = g.edge_count()
    cl = count_k_cliques(g, l)
    obj = e - cl
    size = args.n * (args.n - 1) // 2 - obj
    data = {
        "n": args.n,
        "K": list(ks.levels),
        "variant": "l4" if args.l4 else "general",
        "edges": e,
        "top_cliques": cl,
        "objective": obj,
        "antichain_size": size,
        "graph": graph_to_json(g),
    }
    lines = [
        f"n={args.n} K={ks} variant={'l4' if args.l4 else 'general'}",
        f"edges={e} {l}-cliques={cl} objective={obj} antichain size={size}",
    ]
    if args.dot:
        _emit(data, args.json, lines)
        sys.stdout.write(to_dot(g))
        return 0
    _emit(data, args.json, lines)
    return 0


def _cmd_check(args) -> int:
    ks = KSpec.parse(args.K)
    fam = _load_family(args.family, args.n)
    anti = is_antichain(fam)
    kanti = anti and is_k_antichain(fam, ks)
    maximal = kanti and duality.is_maximal_k_antichain(fam, ks)
    strong = anti and duality.is_strongly_maximal(fam)
    data = {
        "n": fam.ground,
        "K": list(ks.levels),
        "members": len(fam),
        "profile": {str(k): v for k, v in profile(fam).items()},
        "antichain": anti,
        "k_antichain": kanti,
        "maximal": maximal,
        "strongly_maximal": strong,
    }
    lines = [
        f"family: {len(fam)} members on [{fam.ground}], profile {profile(fam)}",
        f"antichain: {anti}",
        f"K-antichain (K={ks}): {kanti}",
        f"maximal: {maximal}",
        f"strongly maximal: {strong}",
    ]
    _emit(data, args.json, lines)
    return 0 if (anti and kanti and maximal and strong) else 1


def _cmd_canonical(args) -> int:
    ks = KSpec.parse(args.K)
    g = _load_graph(args.graph)
    adm = duality.canonical_antichain(g, ks)
    sparse = duality.is_k_sparse(g, ks)
    criterion = duality.strong_maximality_criterion(g, ks)
    data = {
        "canonical": adm.to_json(),
        "size": adm.size(),
        "profile": {str(k): v for k, v in adm.profile().items()},
        "k_sparse": sparse,
        "strong_maximality_criterion": criterion,
    }
    lines = [
        f"canonical antichain: {format_family(adm.family)}",
        f"size={adm.size()} profile={adm.profile()}",
        f"K-sparse: {sparse} (canonical is then a minimum for this graph)",
        f"strong-maximality criterion: {criterion}",
    ]
    _emit(data, args.json, lines)
    return 0


def _cmd_dual(args) -> int:
    fam = _load_family(args.family, args.n)
    d = dual(fam)
    css = is_css(d)
    data = {
        "dual": family_to_json(d),
        "css": css,
    }
    lines = [
        f"dual: {format_family(d)} (ground {d.ground})",
        f"completely separating system: {css}",
    ]
    _emit(data, args.json, lines)
    return 0 if css else 1


def _cmd_search(args) -> int:
    ks = KSpec.parse(args.K)
    res = search_exact(
        args.n,
        ks,
        deep=args.deep,
        jobs=args.jobs,
        prune=not args.no_prune,
        sym_cut=args.sym_cut,
        engine=args.engine,
    )
    data = res.to_json()
    lines = [
        f"n={res.n} K={ks}: min maximal-antichain size {res.min_antichain_size} "
        f"(objective {res.best_objective})",
        f"witness profile {res.profile}; optimal profiles found: {res.optimal_profiles}",
        f"witness antichain: {format_family(res.witness_antichain)}",
        f"scanned {res.graphs_scanned} encodings in {res.elapsed:.2f}s",
    ]
    _emit(data, args.json, lines)
    if args.dot:
        sys.stdout.write(to_dot(res.witness_graph))
    return 0


def _cmd_bounds(args) -> int:
    chosen = [bool(args.constants), args.l is not None, args.gamma is not None]
    if sum(chosen) != 1:
        raise ValueError("pick exactly one of --constants, --l, --gamma")
    if args.constants:
        data = {
            "upper_bound_constant": bounds_mod.upper_bound_constant(),
            "critical_density": bounds_mod.critical_density(),
            "antichain_lower_coeff": bounds_mod.antichain_lower_coeff(),
        }
        lines = [
            f"objective coefficient bound ({{2,4}}): {data['upper_bound_constant']:.9f}",
            f"critical edge density: {data['critical_density']:.9f}",
            f"antichain-size lower coefficient: {data['antichain_lower_coeff']:.9f}",
        ]
    elif args.l is not None:
        oc = bounds_mod.objective_coeff(args.l)
        ac = bounds_mod.antichain_coeff(args.l)
        data = {
            "l": args.l,
            "objective_coeff": [oc.numerator, oc.denominator],
            "antichain_coeff": [ac.numerator, ac.denominator],
        }
        lines = [
            f"l={args.l}: objective coeff {oc} (~{float(oc):.6f}), "
            f"antichain coeff {ac} (~{float(ac):.6f})",
        ]
    else:
        gamma = args.gamma
        data = {
            "gamma": gamma,
            "first_bound": bounds_mod.first_bound(gamma),
            "triangle_lower": bounds_mod.triangle_lower(gamma),
        }
        lines = [
            f"gamma={gamma}: removal-type bound {data['first_bound']:.9f}, "
            f"triangle density lower bound {data['triangle_lower']:.9f}",
        ]
        if gamma <= 1 / 3:
            data["second_bound"] = bounds_mod.second_bound(gamma)
            lines.append(f"triangle-derived bound {data['second_bound']:.9f}")
    _emit(data, args.json, lines)
    return 0


def _cmd_table(args) -> int:
    if args.json:
        print(json.dumps(table_rows(args.nmax, deep=args.deep), indent=2, default=str))
    else:
        sys.stdout.write(table_reproduce(args.nmax, deep=args.deep))
    return 0


def _cmd_verify(args) -> int:
    ks = KSpec.parse(args.K)
    g = _load_graph(args.graph)
    fam = _load_family(args.antichain, g.n)
    rep = verify_witness(g, fam, ks)
    data = rep.to_json()
    lines = [
        f"n={rep.n} K={ks}: certificate {'VALID' if rep.ok else 'INVALID'}",
        f"edges={rep.edges} objective={rep.objective} size={rep.antichain_size} "
        f"profile={rep.profile}",
        f"regular={rep.regular} degrees={sorted(set(rep.degrees))}",
        f"per-edge clique counts: {rep.per_edge_clique_counts}",
        f"per-vertex clique counts: {rep.per_vertex_clique_counts}",
    ]
    if rep.problems:
        lines += [f"problem: {p}" for p in rep.problems]
    _emit(data, args.json, lines)
    return 0 if rep.ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="antichains",
        description="Minimum-size maximal K-antichains via saturated graphs",
    )
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("construct", help="build a saturated graph with few cliques")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--K", type=str, default=None, help="levels, e.g. 2,4")
    p.add_argument("--l4", action="store_true", help="use the sharpened largest-level-4 variant")
    p.add_argument("--dot", action="store_true", help="also print DOT")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_construct)

    p = sub.add_parser("check", help="antichain / maximality verdicts for a family file")
    p.add_argument("--family", type=str, required=True)
    p.add_argument("--K", type=str, required=True)
    p.add_argument("--n", type=int, default=None, help="ground size (inferred if omitted)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("canonical", help="canonical antichain of a saturated graph")
    p.add_argument("--graph", type=str, required=True)
    p.add_argument("--K", type=str, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_canonical)

    p = sub.add_parser("dual", help="dual family and separating-system verdict")
    p.add_argument("--family", type=str, required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_dual)

    p = sub.add_parser("search", help="exact search over all graphs on n vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--K", type=str, required=True)
    p.add_argument("--jobs", type=int, default=None, help="default: $ANTICHAIN_JOBS or 1")
    p.add_argument("--no-prune", action="store_true", help="disable sound edge-count pruning")
    p.add_argument("--sym-cut", action="store_true", help="restrict to max-degree-first encodings")
    p.add_argument("--deep", action="store_true", help="allow the n=8 scan (2^28 graphs)")
    p.add_argument("--engine", choices=("fast", "reference"), default="fast")
    p.add_argument("--dot", action="store_true", help="also print the witness graph as DOT")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_search)

    p = sub.add_parser("bounds", help="asymptotic coefficients and constants")
    p.add_argument("--constants", action="store_true")
    p.add_argument("--l", type=int, default=None)
    p.add_argument("--gamma", type=float, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_bounds)

    p = sub.add_parser("table", help="small-n summary table")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--deep", action="store_true", help="search-back the n=8 row")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_table)

    p = sub.add_parser("verify", help="certify a (graph, antichain) pair")
    p.add_argument("--graph", type=str, required=True)
    p.add_argument("--antichain", type=str, required=True)
    p.add_argument("--K", type=str, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_verify)

    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
