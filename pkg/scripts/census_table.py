"""Cumulative number of multicurves by degree for standard data."""
import argparse
import time

from dtcurves.skein_graded import filtration_census
from dtcurves.surface_datum import generate_standard_datum

ap = argparse.ArgumentParser()
ap.add_argument("--genus", type=int, default=2)
ap.add_argument("--degree", type=int, default=16)
args = ap.parse_args()

print("degree," + ",".join(["chain", "handles"]))
cols = []
for style in ("chain", "handles"):
    t0 = time.perf_counter()
    cols.append(filtration_census(generate_standard_datum(args.genus, style), args.degree))
    print(f"# {style}: {time.perf_counter() - t0:.1f}s")
for dgr, row in enumerate(zip(*cols)):
    print(f"{dgr}," + ",".join(map(str, row)))
