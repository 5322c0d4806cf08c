from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path
from typing import Optional, Tuple


@dataclass
class RunConfig:
    """Knobs for a full verification run.  Defaults reproduce the acceptance
    sizes; everything is seeded so two runs give identical reports."""
    genus: int = 2
    styles: Tuple[str, ...] = ("chain", "handles")
    seed: int = 0
    reduced_box: int = 10
    general_box: int = 8
    case2_box: int = 8
    injectivity_box: int = 6
    cover_samples: int = 10_000
    per_cone_samples: int = 1000
    complex_pairs: str = "all"
    saturation_sum: int = 24
    saturation_wide_box: int = 12
    product_samples: int = 10_000
    product_box: int = 4
    product_box_pairs: int = 20_000
    vanishing_pairs: int = 1000
    monoid_triples: int = 1000
    census_degree: int = 8
    parallelism: int = 1
    out_dir: Optional[str] = None
    extra: dict = field(default_factory=dict)

    @classmethod
    def from_file(cls, path) -> "RunConfig":
        raw = json.loads(Path(path).read_text())
        known = {f.name for f in fields(cls)}
        unknown = set(raw) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        if "styles" in raw:
            raw["styles"] = tuple(raw["styles"])
        return cls(**raw)

    @classmethod
    def quick(cls) -> "RunConfig":
        # smoke-test sizes, a few seconds per datum
        return cls(reduced_box=4, general_box=3, case2_box=4, injectivity_box=3, cover_samples=300,
                   per_cone_samples=5, complex_pairs="200", saturation_sum=12, saturation_wide_box=4, product_samples=300,
                   product_box=2, product_box_pairs=300, vanishing_pairs=50, monoid_triples=50, census_degree=4)

    def to_json_obj(self):
        o = asdict(self)
        o["styles"] = list(self.styles)
        return o
