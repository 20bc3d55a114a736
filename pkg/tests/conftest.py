import time

import pytest

from subthzsim.config import preset
from subthzsim.simulation import run_scenario

ACCEPTANCE_UE_COUNT = 20_000
ACCEPTANCE_SEED = 7


@pytest.fixture(scope="session")
def preset_runs():
    """Both named scenarios at acceptance scale, with wall-clock timings."""
    out = {}
    for name in ("table1-single", "table1-seven"):
        cfg = preset(name)
        cfg.ue_count = ACCEPTANCE_UE_COUNT
        cfg.seed = ACCEPTANCE_SEED
        start = time.perf_counter()
        result = run_scenario(cfg)
        out[name] = (result, time.perf_counter() - start)
    return out
