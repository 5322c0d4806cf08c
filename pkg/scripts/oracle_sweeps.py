"""Sweep the intersection formulas against the chord oracle and dump a JSON
summary, including where the literal reduction breaks down."""
import argparse
import json
import time

from dtcurves import io
from dtcurves.verify import check_case2, check_general, check_reduced

ap = argparse.ArgumentParser()
ap.add_argument("--reduced-box", type=int, default=10)
ap.add_argument("--general-box", type=int, default=8)
ap.add_argument("--case2-box", type=int, default=8)
ap.add_argument("--parallelism", type=int, default=1)
ap.add_argument("--out", default="oracle_sweeps.json")
args = ap.parse_args()

results = {}
for key, fn in (("reduced", lambda: check_reduced(args.reduced_box, args.parallelism)),
                ("general", lambda: check_general(args.general_box, args.parallelism)),
                ("case2", lambda: check_case2(args.case2_box))):
    t0 = time.perf_counter()
    r = fn()
    print(r.line(), f"[{time.perf_counter() - t0:.1f}s]")
    results[key] = r.to_json_obj()

lit = results["general"]["info"]
print(f"literal strategy: {lit['literal_negative_reduced']} inputs raise NegativeReduced, "
      f"{lit['literal_value_mismatch']} give a wrong value")
io.write_text(args.out, io.dumps(results))
