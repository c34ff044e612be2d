"""Real-argument gamma and Riemann zeta.

Only what the closed-form coefficient bounds need: gamma on (0, inf) and
zeta on (1, inf), both in double precision.
"""

import math

__all__ = ["gamma_fn", "zeta_fn"]

# Euler-Maclaurin tail: fixed cutoff and four Bernoulli corrections give
# ~1e-15 relative error anywhere on s in (1.05, 10].
_EM_CUTOFF = 20
_BERNOULLI_OVER_FACT = (
    (1.0 / 6.0) / 2.0,            # B2/2!
    (-1.0 / 30.0) / 24.0,         # B4/4!
    (1.0 / 42.0) / 720.0,         # B6/6!
    (-1.0 / 30.0) / 40320.0,      # B8/8!
)


def gamma_fn(s: float) -> float:
    """Gamma(s) for s > 0.

    Backed by the C library's Lanczos-quality implementation; the wrapper
    only enforces the positive-axis domain this package relies on.
    """
    if not s > 0.0:
        raise ValueError(f"gamma_fn requires s > 0, got {s}")
    return math.gamma(s)


def zeta_fn(s: float) -> float:
    """Riemann zeta(s) for s > 1, by Euler-Maclaurin summation."""
    if not s > 1.0:
        raise ValueError(f"zeta_fn requires s > 1, got {s}")
    n = _EM_CUTOFF
    total = sum(j ** -s for j in range(1, n))
    total += n ** (1.0 - s) / (s - 1.0) + 0.5 * n ** -s
    # tail terms B_{2i}/(2i)! * s(s+1)...(s+2i-2) * n^{-s-2i+1}
    rising = s
    power = n ** (-s - 1.0)
    for i, coeff in enumerate(_BERNOULLI_OVER_FACT, start=1):
        total += coeff * rising * power
        rising *= (s + 2 * i - 1) * (s + 2 * i)
        power /= n * n
    return total
