import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

DATA = Path(__file__).parent / "data"


@pytest.fixture
def rng():
    return np.random.default_rng(20261018)


def random_subluminal(rng, n, margin=0.0):
    """Uniform samples of velocities with all four cone factors > margin."""
    from h4space import Velocity3

    out = []
    while sum(len(o) for o in out) < n:
        v = rng.uniform(-1, 1, size=(3, 4 * n))
        f = np.asarray(Velocity3(*v).cone_factors())
        out.append(v[:, np.all(f > margin, axis=0)].T)
    return np.concatenate(out)[:n].T
