"""Linearity cones and the projectivized complex for the genus-2 data."""
import argparse
import time

from dtcurves import io
from dtcurves.pl_cones import build_complex, complex_to_json_obj, enumerate_cones, enumerate_sign_cells
from dtcurves.surface_datum import generate_standard_datum

ap = argparse.ArgumentParser()
ap.add_argument("--styles", nargs="+", default=["chain", "handles"])
ap.add_argument("--export", help="directory for complex JSON files")
args = ap.parse_args()

for style in args.styles:
    d = generate_standard_datum(2, style)
    t0 = time.perf_counter()
    fine = enumerate_sign_cells(d)
    cones = enumerate_cones(d)
    cx = build_complex(cones)
    dt = time.perf_counter() - t0
    nodes, edges = cx.dual_graph()
    print(f"{style}: {len(fine)} sign cells -> {len(cones)} maximal cones; cells by dim {cx.cells_by_dim()}; "
          f"euler {cx.euler_characteristic()}; dual graph {len(nodes)} nodes / {len(edges)} edges [{dt:.1f}s]")
    merged = sum(1 for c in cones if len(c.pieces) > 1)
    print(f"  {merged} cones are unions of several sign cells; largest has "
          f"{max(len(c.pieces) for c in cones)} pieces")
    if args.export:
        io.write_text(f"{args.export}/complex_{style}.json", io.dumps(complex_to_json_obj(cx, cones)))
