"""Gauss-Legendre rules: construction, application, true remainders.

Nodes come from Newton iteration on P_n seeded with the cosine
approximation of the roots, computed on the positive half interval and
mirrored so the symmetry x_j = -x_{n+1-j} holds exactly.  Weights use
2 / ((1-x^2) P_n'(x)^2).  apply_rule uses Kahan compensated summation:
error signals of order n^-4.5 sit close to accumulation noise by n ~ 600.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field

import numpy as np

from .legendre import _legendre_pair

__all__ = ["QuadratureRule", "compute_rule", "apply_rule", "remainder"]

_MAX_POINTS = 2000
_NEWTON_MAX_STEPS = 50


@dataclass(frozen=True)
class QuadratureRule:
    """Immutable n-point Gauss-Legendre rule on [-1, 1]."""

    n: int
    nodes: np.ndarray = field(repr=False)
    weights: np.ndarray = field(repr=False)

    def __post_init__(self):
        x, w = self.nodes, self.weights
        if len(x) != self.n or len(w) != self.n:
            raise ValueError("rule arrays do not match n")
        if self.n > 1 and np.min(np.diff(x)) <= 0:
            raise ValueError("nodes must be strictly increasing")
        if np.max(np.abs(x + x[::-1])) > 1e-13:
            raise ValueError("nodes must be symmetric about 0")
        if np.any(w <= 0):
            raise ValueError("weights must be positive")
        if abs(math.fsum(w) - 2.0) > 1e-13 * self.n:
            raise ValueError("weights must sum to 2")
        # even perfectly rounded nodes leave |P_n| up to |P_n'| ulp/2,
        # about 4e-12 at the extreme nodes near n = 600
        tol = max(1e-11, 100.0 * self.n * 2.2e-16)
        resid = np.max(np.abs(_legendre_pair(self.n, x)[0]))
        if resid > tol:
            raise ValueError(f"nodes are not roots of P_n (resid {resid:.2e})")
        x.setflags(write=False)
        w.setflags(write=False)


def compute_rule(n: int) -> QuadratureRule:
    """The n-point rule; results are cached and safe to share."""
    if not 1 <= n <= _MAX_POINTS:
        raise ValueError(f"n must be in [1, {_MAX_POINTS}], got {n}")
    return _compute_rule_cached(n)


@functools.lru_cache(maxsize=None)
def _compute_rule_cached(n: int) -> QuadratureRule:
    if n == 1:
        return QuadratureRule(1, np.zeros(1), np.full(1, 2.0))
    half = n // 2 + (n % 2)
    j = np.arange(1, half + 1)
    # positive-half roots in descending order, from the cosine approximation
    x = np.cos((4 * j - 1) * np.pi / (4 * n + 2))
    converged = False
    for _ in range(_NEWTON_MAX_STEPS):
        p, pm = _legendre_pair(n, x)
        dp = n * (x * p - pm) / (x * x - 1.0)
        dx = p / dp
        x -= dx
        if np.max(np.abs(dx)) < 1e-15:
            converged = True
            break
    if not converged:
        raise RuntimeError(f"Newton did not converge for n = {n}")
    for _ in range(2):  # polish to the last ulp
        p, pm = _legendre_pair(n, x)
        dp = n * (x * p - pm) / (x * x - 1.0)
        x -= p / dp
    if n % 2 == 1:
        x[-1] = 0.0
    nodes = np.concatenate([-x, x[::-1][(n % 2):]])
    p, pm = _legendre_pair(n, nodes)
    dp = n * (nodes * p - pm) / (nodes * nodes - 1.0)
    weights = 2.0 / ((1.0 - nodes * nodes) * dp * dp)
    # mirror weights exactly as well
    weights = 0.5 * (weights + weights[::-1])
    return QuadratureRule(n, nodes, weights)


def apply_rule(rule: QuadratureRule, f) -> float:
    """Sum w_j f(x_j) in node order with Kahan compensation.

    f may be vectorized over numpy arrays or a plain scalar function.
    """
    try:
        vals = np.asarray(f(rule.nodes), dtype=float)
        if vals.shape != rule.nodes.shape:
            raise TypeError
    except (TypeError, ValueError):
        vals = np.array([float(f(x)) for x in rule.nodes])
    if not np.all(np.isfinite(vals)):
        raise ValueError("integrand returned a non-finite value at a node")
    total = 0.0
    comp = 0.0
    for w, v in zip(rule.weights.tolist(), vals.tolist()):
        y = w * v - comp
        t = total + y
        comp = (t - total) - y
        total = t
    return total


def remainder(rule: QuadratureRule, f, exact: float) -> float:
    """R_n[f] = exact integral minus the quadrature value."""
    return exact - apply_rule(rule, f)
