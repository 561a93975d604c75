"""Reference models and finite sector families used by the checks.

For cascades and general models the sectors with a given r are infinite
(the Nvec entries not forced below n_l are unbounded), so families are cut
off by ``max_excess``: every Nvec_l ranges over 0 .. n_l - 1 + max_excess.
"""

from __future__ import annotations

from itertools import product

from .model import Model, validate
from .sectors import SectorLabel, make_sector

STANDARD_MODELS = {
    "shg": {"nu": ["1/2"], "mu": ["1"], "n": [2], "m": [1], "g": 1.0},
    "thg": {"nu": ["1/3"], "mu": ["1"], "n": [3], "m": [1], "g": 1.0},
    "5hg": {"nu": ["1/5"], "mu": ["1"], "n": [5], "m": [1], "g": 1.0},
    "cascade2": {"nu": ["1", "2"], "mu": ["3"], "n": [1, 1], "m": [1], "g": 1.0},
    "cascade3": {"nu": ["1", "2", "4"], "mu": ["7"], "n": [1, 1, 1], "m": [1], "g": 1.0},
    "general": {"nu": ["1", "1"], "mu": ["1"], "n": [2, 1], "m": [3], "g": 1.0},
}


def standard_models() -> dict[str, Model]:
    return {name: validate(raw) for name, raw in STANDARD_MODELS.items()}


def sectors_with_r(model: Model, r: int, max_excess: int = 2) -> list[SectorLabel]:
    """Sectors of exactly this r with Nvec_l <= n_l - 1 + max_excess."""
    n_ranges = [range(nl + max_excess) for nl in model.n]
    # Mvec_k = m_k r + (0 .. m_k - 1) keeps floor(Mvec_k/m_k) = r; modes with
    # M > 1 may also sit higher as long as one of them attains the minimum
    m_ranges = [range(mk * r, mk * (r + 1) + (max_excess * mk if model.M > 1 else 0))
                for mk in model.m]
    out = []
    for Nvec in product(*n_ranges):
        if not any(a < nl for a, nl in zip(Nvec, model.n)):
            continue
        for Mvec in product(*m_ranges):
            if min(b // mk for b, mk in zip(Mvec, model.m)) != r:
                continue
            out.append(make_sector(model, Nvec, Mvec))
    return out


def sector_family(model: Model, max_r: int, max_excess: int = 2) -> list[SectorLabel]:
    out = []
    for r in range(max_r + 1):
        out.extend(sectors_with_r(model, r, max_excess))
    return out
