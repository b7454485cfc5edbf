import json
import os
from dataclasses import dataclass, fields

from . import combinatorics, hull, optimize

CONFIG_ENV = "POLYCOMB_CONFIG"

K_POLICIES = ("paper-d-cubed", "minimal-valid")
OUTPUT_FORMATS = ("json", "text")


@dataclass
class Config:
    hull_vertex_cap: int = hull.LATTICE_VERTEX_CAP
    skeleton_vertex_cap: int = hull.SKELETON_VERTEX_CAP
    facet_dim_cap: int = hull.FACET_DIM_CAP
    rc_cell_cap: int = combinatorics.RC_CELL_CAP
    clique_vertex_cap: int = combinatorics.CLIQUE_VERTEX_CAP
    bqp_n_cap: int = optimize.BQP_N_CAP
    k_exponent_policy: str = "paper-d-cubed"
    output: str = "json"
    seed: int = 0

    def __post_init__(self):
        for f in fields(self):
            if f.name.endswith("_cap") and getattr(self, f.name) < 1:
                raise ValueError(f"{f.name} must be positive")
        if self.k_exponent_policy not in K_POLICIES:
            raise ValueError(f"k_exponent_policy must be one of {K_POLICIES}")
        if self.output not in OUTPUT_FORMATS:
            raise ValueError(f"output must be one of {OUTPUT_FORMATS}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 bits")

    @classmethod
    def load(cls, path=None):
        """Defaults, overridden by the JSON file at ``path`` or $POLYCOMB_CONFIG."""
        path = path or os.environ.get(CONFIG_ENV)
        if not path:
            return cls()
        with open(path) as fh:
            data = json.load(fh)
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        return cls(**data)
