"""``dtcurves`` command line.

Exit codes: 0 pass, 2 verification failure, 3 input error, 4 resource limit.
Files go to ``--out`` (default cwd) unless DTCURVES_OUT is set.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import io, oracle, verify
from .config import RunConfig
from .dt_coords import DTError, DTVector
from .intersection_map import (IV_SCHEMA, NegativeReduced, NotInImage, PreconditionViolated, f_full, f_reduced,
                               h_full, invert, iota_C)
from .intersection_map import to_json_obj as iota_to_json_obj
from .pl_cones import (NotInAnyCone, ResourceLimit, build_complex, complex_to_json_obj, cones_from_json_obj,
                       cones_to_json_obj, enumerate_cones, poset_csv)
from .skein_graded import ProductContext, Term, filtration_census, graded_product
from .surface_datum import DatumError, generate_standard_datum

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_RESOURCE = 0, 2, 3, 4


def _emit(args, text: str, default_name=None):
    if getattr(args, "output", None) or (default_name and getattr(args, "out", None)):
        name = args.output or default_name
        path = io.output_dir(getattr(args, "out", None)) / name
        io.write_text(path, text)
        print(path, file=sys.stderr)
    else:
        sys.stdout.write(text)


def cmd_datum_gen(args):
    d = generate_standard_datum(args.genus, args.style)
    _emit(args, io.dumps(d.to_json_obj()))
    return EXIT_OK


def cmd_embed(args):
    d = io.load_datum(args.datum)
    v = io.dt_from_json_obj(io.read_json(args.vector))
    _emit(args, io.dumps(iota_to_json_obj(iota_C(d, v, strategy=args.strategy))))
    return EXIT_OK


def cmd_invert(args):
    d = io.load_datum(args.datum)
    w = io.iota_from_json_obj(io.read_json(args.iota))
    _emit(args, io.dumps(io.dt_to_json_obj(invert(d, w, strategy=args.strategy))))
    return EXIT_OK


def cmd_product(args):
    d = io.load_datum(args.datum)
    m = io.dt_from_json_obj(io.read_json(args.left))
    mp = io.dt_from_json_obj(io.read_json(args.right))
    ctx = ProductContext(d, _cones(args, d))
    g = graded_product(d, ctx, m, mp)
    out = {"schema": io.PRODUCT_SCHEMA, "zero": not isinstance(g, Term)}
    if isinstance(g, Term):
        out.update(result=io.dt_to_json_obj(g.coords), degree=g.degree)
    _emit(args, io.dumps(out))
    return EXIT_OK


def _cones(args, d):
    if getattr(args, "cones", None):
        o = io.check_schema(io.read_json(args.cones), io.CONES_SCHEMA)
        return cones_from_json_obj(o)
    return enumerate_cones(d)


def cmd_cones(args):
    if args.action == "enumerate":
        d = generate_standard_datum(2, "chain") if args.genus2_chain else io.load_datum(args.datum)
        if d.genus > 2 and not args.allow_large:
            raise ResourceLimit(f"genus {d.genus} enumeration is gated; pass --allow-large")
        cones = enumerate_cones(d)
        _emit(args, io.dumps(cones_to_json_obj(d, cones)), "cones.json")
        return EXIT_OK
    o = io.check_schema(io.read_json(args.cones), io.CONES_SCHEMA)
    d = io.datum_from_json_obj(o["datum"])
    cones = cones_from_json_obj(o)
    if args.action == "export":
        cx = build_complex(cones, max_cells=args.max_cells)
        if args.format == "csv":
            _emit(args, poset_csv(cx), "complex.csv")
        else:
            _emit(args, io.dumps(complex_to_json_obj(cx, cones)), "complex.json")
        return EXIT_OK
    results = verify.check_cones(d, cones, n_random=args.samples, per_cone=args.per_cone, seed=args.seed,
                                 complex_pairs=args.pairs)
    return _report(args, results, {"command": "cones check", "cones": args.cones})


def cmd_oracle(args):
    if args.action == "point":
        ni = args.ni
        if args.case == 1:
            if len(ni) != 4:
                raise ValueError("--ni needs four values for case 1")
            if args.general:
                o = oracle.oracle_case1_general(args.n, args.t, *ni)
                f = f_full(args.n, args.t, *ni)
            else:
                o = oracle.oracle_case1_reduced(args.n, args.t, *ni)
                f = f_reduced(args.n, args.t, *ni)
        else:
            if len(ni) != 1:
                raise ValueError("--ni needs one value for case 2")
            o, f = oracle.oracle_case2(args.n, args.t, ni[0]), h_full(args.n, args.t, ni[0])
        sys.stdout.write(io.dumps({"oracle": o, "formula": f, "agree": o == f}))
        return EXIT_OK if o == f else EXIT_FAIL
    if args.case == 1:
        r = (verify.check_general(args.max, args.parallelism) if args.general
             else verify.check_reduced(args.max, args.parallelism))
    else:
        r = verify.check_case2(args.max)
    return _report(args, [r], {"command": "oracle verify", "case": args.case, "max": args.max,
                               "general": args.general})


def cmd_census(args):
    d = io.load_datum(args.datum)
    try:
        counts = filtration_census(d, args.degree, args.max_n_vectors)
    except ResourceLimit as e:
        _emit(args, io.dumps({"schema": io.CENSUS_SCHEMA, "partial": True, **e.partial}))
        raise
    if args.format == "csv":
        _emit(args, "degree,count\n" + "".join(f"{i},{c}\n" for i, c in enumerate(counts)))
    else:
        _emit(args, io.dumps({"schema": io.CENSUS_SCHEMA, "partial": False, "cumulative_counts": counts}))
    return EXIT_OK


def run_verification(cfg: RunConfig):
    """All acceptance checks for ``cfg``.  Returns (report, timing)."""
    checks, timing = [], {}

    def add(key, fn):
        t0 = time.perf_counter()
        res = fn()
        timing[key] = round(time.perf_counter() - t0, 3)
        for r in res if isinstance(res, list) else [res]:
            checks.append({"group": key, **r.to_json_obj()})

    add("formula.reduced", lambda: verify.check_reduced(cfg.reduced_box, cfg.parallelism))
    add("formula.general", lambda: verify.check_general(cfg.general_box, cfg.parallelism))
    add("formula.case2", lambda: verify.check_case2(cfg.case2_box))
    for style in cfg.styles:
        d = generate_standard_datum(cfg.genus, style)
        t0 = time.perf_counter()
        cones = enumerate_cones(d)
        timing[f"{style}.enumerate"] = round(time.perf_counter() - t0, 3)
        pre = f"{style}."
        add(pre + "injectivity", lambda: verify.check_injectivity(d, cfg.injectivity_box))
        add(pre + "cones", lambda: verify.check_cones(d, cones, cfg.cover_samples, cfg.per_cone_samples,
                                                      cfg.seed, cfg.complex_pairs))
        add(pre + "saturation", lambda: [verify.check_saturation(d, cones, cfg.saturation_sum),
                                         verify.check_saturation_wide(d, cfg.saturation_wide_box,
                                                                      cfg.saturation_wide_box)])
        add(pre + "product", lambda: verify.check_product_additivity(d, cones, cfg.product_samples,
                                                                     cfg.product_box, cfg.seed,
                                                                     cfg.product_box_pairs))
        add(pre + "vanishing", lambda: verify.check_vanishing(d, cones, cfg.vanishing_pairs, cfg.seed))
        add(pre + "monoid", lambda: verify.check_monoid(d, cones, cfg.monoid_triples, cfg.seed))
    report = {"schema": io.REPORT_SCHEMA, "config": cfg.to_json_obj(), "checks": checks,
              "passed": all(c["passed"] for c in checks)}
    return report, timing


def cmd_verify(args):
    cfg = RunConfig.from_file(args.config) if args.config else (RunConfig.quick() if args.quick else RunConfig())
    if args.parallelism is not None:
        cfg.parallelism = args.parallelism
    out = io.output_dir(args.out or cfg.out_dir)
    report, timing = run_verification(cfg)
    for c in report["checks"]:
        print(("[PASS] " if c["passed"] else "[FAIL] ") + f"{c['group']}: {c['name']}", file=sys.stderr)
    io.write_text(out / "report.json", io.dumps(report))
    # wall-clock data lives apart from the report so reports stay byte-identical
    io.write_text(out / "timing.json", io.dumps({"metadata": {"seconds": timing,
                                                              "parallelism": cfg.parallelism}}))
    print(out / "report.json")
    return EXIT_OK if report["passed"] else EXIT_FAIL


def _report(args, results, meta):
    report = {"schema": io.REPORT_SCHEMA, "meta": meta, "checks": [r.to_json_obj() for r in results],
              "passed": all(r.passed for r in results)}
    for r in results:
        print(r.line(), file=sys.stderr)
    _emit(args, io.dumps(report), "report.json")
    return EXIT_OK if report["passed"] else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dtcurves", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, datum=True):
        if datum:
            sp.add_argument("--datum", default="chain:2", help="datum file, or STYLE:GENUS (default chain:2)")
        sp.add_argument("-o", "--output", help="file name inside the output directory")
        sp.add_argument("--out", help="output directory (DTCURVES_OUT overrides)")

    dg = sub.add_parser("datum", help="coordinate data").add_subparsers(dest="action", required=True)
    g = dg.add_parser("gen")
    g.add_argument("--genus", type=int, required=True)
    g.add_argument("--style", choices=["chain", "handles"], default="chain")
    common(g, datum=False)
    g.set_defaults(fn=cmd_datum_gen)

    for name, fn, arg in (("embed", cmd_embed, "vector"), ("invert", cmd_invert, "iota")):
        sp = sub.add_parser(name)
        sp.add_argument(f"--{arg}", required=True, help="JSON file or inline JSON")
        sp.add_argument("--strategy", choices=["arc-count", "literal"], default="arc-count")
        common(sp)
        sp.set_defaults(fn=fn)

    sp = sub.add_parser("product", help="graded product of two multicurves")
    sp.add_argument("--left", required=True)
    sp.add_argument("--right", required=True)
    sp.add_argument("--cones", help="precomputed cones file")
    common(sp)
    sp.set_defaults(fn=cmd_product)

    sp = sub.add_parser("cones")
    sp.add_argument("action", choices=["enumerate", "check", "export"])
    sp.add_argument("--genus2-chain", action="store_true", help="shorthand for --datum chain:2")
    sp.add_argument("--allow-large", action="store_true", help="permit genus > 2 enumeration")
    sp.add_argument("--cones", default="cones.json")
    sp.add_argument("--format", choices=["json", "csv"], default="json")
    sp.add_argument("--max-cells", type=int)
    sp.add_argument("--samples", type=int, default=2000)
    sp.add_argument("--per-cone", type=int, default=20)
    sp.add_argument("--pairs", default="all", help="'all' or a number of sampled cell pairs")
    sp.add_argument("--seed", type=int, default=0)
    common(sp)
    sp.set_defaults(fn=cmd_cones)

    sp = sub.add_parser("oracle")
    sp.add_argument("action", choices=["verify", "point"])
    sp.add_argument("--case", type=int, choices=[1, 2], default=1)
    sp.add_argument("--max", type=int, default=8)
    sp.add_argument("--general", action="store_true")
    sp.add_argument("--parallelism", type=int, default=1)
    sp.add_argument("--n", type=int)
    sp.add_argument("--t", type=int)
    sp.add_argument("--ni", type=int, nargs="+")
    common(sp, datum=False)
    sp.set_defaults(fn=cmd_oracle)

    sp = sub.add_parser("census", help="number of multicurves of degree <= d")
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("--max-n-vectors", type=int)
    sp.add_argument("--format", choices=["json", "csv"], default="csv")
    common(sp)
    sp.set_defaults(fn=cmd_census)

    sp = sub.add_parser("verify", help="full acceptance run")
    sp.add_argument("--config", help="RunConfig JSON")
    sp.add_argument("--quick", action="store_true", help="small sizes for a smoke test")
    sp.add_argument("--parallelism", type=int)
    sp.add_argument("--out")
    sp.set_defaults(fn=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "action", None) == "point" and (args.n is None or args.t is None or not args.ni):
        print("error: oracle point needs --n, --t and --ni", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.fn(args)
    except ResourceLimit as e:
        print(f"resource limit: {e}", file=sys.stderr)
        return EXIT_RESOURCE
    except (DatumError, DTError, PreconditionViolated, NegativeReduced, NotInImage, NotInAnyCone,
            io.SchemaError, ValueError, KeyError, OSError, json.JSONDecodeError) as e:
        msg = str(e)
        if not msg.startswith(type(e).__name__):
            msg = f"{type(e).__name__}: {msg}"
        print(f"input error: {msg}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
