import pytest

from singquad import SweepConfig, example_integrand, run_sweep

_cache = {}


def _sweep(key, integrand, n_min=10, n_max=600):
    if key not in _cache:
        cfg = SweepConfig(integrand=integrand, n_min=n_min, n_max=n_max)
        _cache[key] = (run_sweep(cfg), cfg)
    return _cache[key]


@pytest.fixture(scope="session")
def sweep():
    """Cached full sweeps of the stock examples, shared across modules."""
    def get(example_id, **kw):
        rng = {k: kw.pop(k) for k in ("n_min", "n_max") if k in kw}
        key = (example_id, tuple(sorted(kw.items())), tuple(sorted(rng.items())))
        return _sweep(key, example_integrand(example_id, **kw), **rng)
    return get
