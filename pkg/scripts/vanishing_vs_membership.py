"""How often do two multicurves with no common cone still have a sum of images
that is itself an image?  Pairs are drawn from a small box of DT vectors."""
import argparse
import random

import numpy as np

from dtcurves.intersection_map import invert_batch, iota_batch
from dtcurves.pl_cones import enumerate_cones
from dtcurves.skein_graded import ProductContext
from dtcurves.dt_coords import DTVector
from dtcurves.surface_datum import generate_standard_datum
from dtcurves.verify import valid_box

ap = argparse.ArgumentParser()
ap.add_argument("--style", default="chain")
ap.add_argument("--box", type=int, default=3)
ap.add_argument("--pairs", type=int, default=50_000)
ap.add_argument("--seed", type=int, default=0)
args = ap.parse_args()

d = generate_standard_datum(2, args.style)
ctx = ProductContext(d, enumerate_cones(d))
N, T = valid_box(d, args.box, args.box)
W = iota_batch(d, N, T)
rng = random.Random(args.seed)
k = d.n_curves

idx = [(rng.randrange(len(N)), rng.randrange(len(N))) for _ in range(args.pairs)]
apart = []
for i, j in idx:
    a = DTVector(tuple(map(int, N[i])), tuple(map(int, T[i])))
    b = DTVector(tuple(map(int, N[j])), tuple(map(int, T[j])))
    if not ctx.common(a, b):
        apart.append((i, j))
I = np.array(apart)
_, _, ok = invert_batch(d, W[I[:, 0]] + W[I[:, 1]])
print(f"{args.style}: {len(apart)} of {args.pairs} sampled pairs share no cone; "
      f"the sum of images is still an image for {int(ok.sum())} of them")
for i, j in I[ok][:5]:
    print("  ", (N[i].tolist(), T[i].tolist()), "+", (N[j].tolist(), T[j].tolist()))
