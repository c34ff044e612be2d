"""Leading-order Gauss-quadrature error for singular integrands.

Implements the leading error term as a single real integral of the jump
against the closed-form phase kernel, the parity-reduced forms for the
power and power-log families, closed-form envelope bounds for the scaled
coefficient n^(k+alpha+1) R_n, the phase equation whose root marks
anomalously small errors, and quadrature-size recommendations.

Inner integrals use composite 32-point Gauss panels graded geometrically
toward y = 0, where the integrand behaves like y^(k+alpha) (and like
y^(k+alpha-1) at the cos Psi = -1 phase): a power substitution flattens
that endpoint so each panel sees an analytic integrand and the dropped
stub is negligible at every admissible exponent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .singularity_model import (GeneralJump, Power, PowerLog,
                                SingularIntegrand, jump, phase)
from .special_functions import gamma_fn, zeta_fn

__all__ = [
    "PredictorConfig",
    "ErrorPrediction",
    "CoefficientBounds",
    "LogEnvelope",
    "leading_term",
    "power_case_leading",
    "log_case_leading",
    "coefficient_bounds",
    "log_envelope_constants",
    "psi0_solve",
    "psi0_residual",
    "recommend_n",
    "predicted_order",
]

_GL_X, _GL_W = np.polynomial.legendre.leggauss(32)


@dataclass(frozen=True)
class PredictorConfig:
    """Truncation M (upper limit M log n), total inner-quadrature budget,
    and whether closed-form families integrate on [0, inf) instead."""

    M: float = 10.0
    quad_points: int = 1920          # 60 geometric panels x 32 nodes
    extend_to_infinity: bool = True

    def __post_init__(self):
        if self.M <= 0:
            raise ValueError("M must be positive")
        if self.quad_points < 64:
            raise ValueError("quad_points too small for a graded rule")


DEFAULT_CONFIG = PredictorConfig()


@dataclass(frozen=True)
class CoefficientBounds:
    """Envelope of the scaled coefficient n^(k+alpha+1) R_n.

    attained=True: both ends are reached along subsequences (k = 0, 2
    mod 4).  attained=False: symmetric strict bound (k = 1, 3 mod 4).
    """

    lower: float
    upper: float
    attained: bool


@dataclass(frozen=True)
class ErrorPrediction:
    leading: Optional[float]
    order_exponent: float
    order_log_factor: bool
    regime_exponent: float
    regime_log_factor: bool
    coefficient_bounds: Optional[CoefficientBounds] = None


@dataclass(frozen=True)
class LogEnvelope:
    """Affine-in-log-n envelope A log n + B of the scaled coefficient for
    power-log integrands."""

    upper: tuple[float, float]
    lower: tuple[float, float]
    attained: bool


def _graded_nodes(y_max: float, quad_points: int, sigma: float = 2.0):
    """Nodes/weights of the composite rule on (0, y_max].

    Geometric halving toward 0 in the variable u, with y = y_max * u^p and
    p = max(1, 2/sigma): near cos Psi = -1 the integrand behaves like
    y^(sigma-1), and the substitution turns that into at least u^1 while
    reducing the dropped stub to 2^(-60 p sigma).
    """
    # p capped so u^p cannot underflow to an exact zero node
    p = min(16.0, max(1.0, 2.0 / max(sigma, 1e-3)))
    panels = max(2, quad_points // len(_GL_X))
    edges = 0.5 ** np.arange(panels + 1)
    hi, lo = edges[:-1], edges[1:]
    mid = 0.5 * (hi + lo)
    half = 0.5 * (hi - lo)
    u = (mid[:, None] + half[:, None] * _GL_X[None, :]).ravel()
    wu = (half[:, None] * _GL_W[None, :]).ravel()
    nodes = y_max * u ** p
    weights = wu * y_max * p * u ** (p - 1.0)
    return nodes, weights


def _kernel_complex(y: np.ndarray, sin_phi: float, cos_psi: float,
                    sin_psi: float) -> np.ndarray:
    """(i e^{-x} + i cos Psi + sin Psi) / (cosh x + cos Psi), x = 2y/sin phi.

    Written in expm1/sinh^2 form so the cos Psi -> -1 limit stays finite
    down to the smallest graded panel.
    """
    x = 2.0 * y / sin_phi
    cp1 = 1.0 + cos_psi
    den = 2.0 * np.sinh(0.5 * x) ** 2 + cp1
    num = 1j * (np.expm1(-x) + cp1) + sin_psi
    return num / den


def _y_cap(f: SingularIntegrand, n: int, cfg: PredictorConfig) -> float:
    sigma = f.singular_exponent
    sin_phi = math.sin(f.phi)
    truncated = cfg.M * math.log(n)
    if not cfg.extend_to_infinity or f.envelope is not None \
            or isinstance(f.family, GeneralJump):
        return truncated
    # e^{-2y/sin phi} tail below 1e-26 of scale
    return sin_phi * (30.0 + 3.0 * max(sigma, 0.0))


def leading_term(f: SingularIntegrand, n: int,
                 cfg: PredictorConfig = DEFAULT_CONFIG) -> float:
    """Leading error term: (1/n) int Re([f](b+iy/n) K(y)) dy.

    Integrates on [0, M log n], or on the equivalent of [0, inf) for
    closed-form families without an envelope.
    """
    if n < 10:
        raise ValueError("leading_term needs n >= 10")
    info = phase(f, n)
    sin_phi = math.sin(info.phi)
    y_max = _y_cap(f, n, cfg)
    sigma = f.singular_exponent

    def integrate(points: int) -> float:
        y, w = _graded_nodes(y_max, points, sigma)
        vals = np.real(jump(f, y, n)
                       * _kernel_complex(y, sin_phi, info.cos_psi, info.sin_psi))
        return float(np.dot(w, vals)) / n

    full = integrate(cfg.quad_points)
    check = integrate(cfg.quad_points // 2)
    if abs(full - check) > 1e-3 * max(abs(full), 1e-13):
        raise RuntimeError(
            f"inner quadrature did not converge (refinement gap "
            f"{abs(full - check):.2e} vs value {full:.2e})")
    return full


def _parity_sign(k: int) -> float:
    # sign of the reduced integral: -1 for k = 0, 1 (mod 4), +1 for 2, 3
    return -1.0 if k % 4 in (0, 1) else 1.0


def _reduced_kernel(k: int, y: np.ndarray, sin_phi: float, cos_psi: float,
                    sin_psi: float) -> np.ndarray:
    x = 2.0 * y / sin_phi
    den = 2.0 * np.sinh(0.5 * x) ** 2 + (1.0 + cos_psi)
    if k % 2 == 0:
        return (np.expm1(-x) + (1.0 + cos_psi)) / den
    return sin_psi / den


def power_case_leading(f: SingularIntegrand, n: int,
                       cfg: PredictorConfig = DEFAULT_CONFIG) -> float:
    """Parity-reduced leading term for the power family:

        -+ (2 sin(alpha pi/2) / n^(k+alpha+1)) *
           int_0^inf y^(k+alpha) N_k(y) / (cosh(2y/sin phi) + cos Psi) dy

    with N_k = e^{-2y/sin phi} + cos Psi for k = 0, 2 (mod 4) and
    N_k = sin Psi for k = 1, 3 (mod 4).  Agrees with leading_term to
    machine accuracy; the envelope, if any, is not part of this route.
    """
    fam = f.family
    if not isinstance(fam, Power):
        raise TypeError("power_case_leading requires a Power family")
    if f.envelope is not None:
        raise TypeError("parity reduction does not cover envelopes")
    info = phase(f, n)
    sin_phi = math.sin(info.phi)
    sigma = fam.k + fam.alpha
    y, w = _graded_nodes(sin_phi * (30.0 + 3.0 * sigma), cfg.quad_points,
                         sigma)
    vals = y ** sigma * _reduced_kernel(fam.k, y, sin_phi,
                                        info.cos_psi, info.sin_psi)
    integral = float(np.dot(w, vals))
    return (_parity_sign(fam.k) * 2.0 * math.sin(fam.alpha * math.pi / 2)
            * integral / n ** (sigma + 1.0))


def log_case_leading(f: SingularIntegrand, n: int,
                     cfg: PredictorConfig = DEFAULT_CONFIG) -> float:
    """Parity-reduced leading term for the power-log family, keeping the
    exact log(y) - log(n) bracket."""
    fam = f.family
    if not isinstance(fam, PowerLog):
        raise TypeError("log_case_leading requires a PowerLog family")
    if f.envelope is not None:
        raise TypeError("parity reduction does not cover envelopes")
    info = phase(f, n)
    sin_phi = math.sin(info.phi)
    sigma = fam.k + fam.beta
    y, w = _graded_nodes(sin_phi * (32.0 + 3.0 * max(sigma, 0.0)),
                         cfg.quad_points, max(sigma, 0.25))
    bracket = (2.0 * math.sin(fam.beta * math.pi / 2)
               * (np.log(y) - math.log(n))
               + math.pi * math.sin((fam.beta + 1.0) * math.pi / 2))
    vals = (y ** sigma * bracket
            * _reduced_kernel(fam.k, y, sin_phi, info.cos_psi, info.sin_psi))
    integral = float(np.dot(w, vals))
    return _parity_sign(fam.k) * integral / n ** (sigma + 1.0)


def coefficient_bounds(f: SingularIntegrand) -> CoefficientBounds:
    """Closed-form envelope of n^(k+alpha+1) R_n for the power family.

    k = 0, 2 (mod 4): the one-sided extremes
        U = sin(alpha pi/2) (sin phi)^(s+1) Gamma(s+1) zeta(s+1) / 2^(s-1),
        L = -(1 - 2^-s) U,  s = k + alpha,
    attained along subsequences with cos Psi -> -1 / +1 (roles swap for
    k = 2 mod 4).  k = 1, 3 (mod 4): the strict symmetric bound carrying
    (1 - 2^-(s+1)), which the oscillating coefficient never reaches.
    """
    fam = f.family
    if not isinstance(fam, Power):
        raise TypeError("coefficient_bounds requires a Power family")
    s = fam.k + fam.alpha
    sin_phi = math.sin(f.phi)
    base = (math.sin(fam.alpha * math.pi / 2) * sin_phi ** (s + 1.0)
            * gamma_fn(s + 1.0) / 2.0 ** (s - 1.0) * zeta_fn(s + 1.0))
    if fam.k % 2 == 0:
        hi, lo = base, -(1.0 - 2.0 ** -s) * base
        if fam.k % 4 == 2:
            hi, lo = -lo, -hi
        return CoefficientBounds(lower=min(lo, hi), upper=max(lo, hi),
                                 attained=True)
    w = abs(base) * (1.0 - 2.0 ** -(s + 1.0))
    return CoefficientBounds(lower=-w, upper=w, attained=False)


def _scaled_kernel_integral(g, sin_phi: float, sigma: float,
                            quad_points: int = 1920) -> float:
    y, w = _graded_nodes(sin_phi * (34.0 + 3.0 * max(sigma, 0.0)),
                         quad_points, max(sigma, 0.25))
    return float(np.dot(w, g(y)))


def log_envelope_constants(f: SingularIntegrand) -> LogEnvelope:
    """Affine envelopes A log n + B of n^(k+beta+1) R_n for power-log
    integrands.

    k = 0, 2 (mod 4): attained envelopes from cos Psi = +/-1.
    k = 1, 3 (mod 4): strict symmetric bound from |sin Psi kernel| <=
    1/sinh; for beta = 0 this is the constant pi int y^k / sinh dy.
    """
    fam = f.family
    if not isinstance(fam, PowerLog):
        raise TypeError("log_envelope_constants requires a PowerLog family")
    sp = math.sin(f.phi)
    sigma = fam.k + fam.beta
    s_beta = math.sin(fam.beta * math.pi / 2)
    s_beta1 = math.sin((fam.beta + 1.0) * math.pi / 2)
    sign = _parity_sign(fam.k)

    if fam.k % 2 == 0:
        def at(cos_psi: float):
            cp1 = 1.0 + cos_psi  # grouped: adding 1.0 first would absorb

            def kern(y):
                x = 2.0 * y / sp
                return (y ** sigma * (np.expm1(-x) + cp1)
                        / (2.0 * np.sinh(0.5 * x) ** 2 + cp1))
            base = _scaled_kernel_integral(kern, sp, sigma)

            def kern_log(y):
                x = 2.0 * y / sp
                return (y ** sigma * np.log(y) * (np.expm1(-x) + cp1)
                        / (2.0 * np.sinh(0.5 * x) ** 2 + cp1))
            base_log = _scaled_kernel_integral(kern_log, sp, sigma)
            # scaled = sign * [2 s_beta (log y - log n) + pi s_beta1] * kernel
            a = -sign * 2.0 * s_beta * base
            b = sign * (2.0 * s_beta * base_log + math.pi * s_beta1 * base)
            return a, b

        cand = [at(1.0), at(-1.0)]
        # upper envelope: larger A (log n dominates eventually)
        cand.sort(key=lambda ab: ab[0])
        return LogEnvelope(upper=cand[1], lower=cand[0], attained=True)

    def inv_sinh(y):
        x = 2.0 * y / sp
        return y ** sigma / np.sinh(x)

    def inv_sinh_log(y):
        x = 2.0 * y / sp
        return y ** sigma * np.abs(np.log(y)) / np.sinh(x)

    a_sym = abs(2.0 * s_beta) * _scaled_kernel_integral(inv_sinh, sp, sigma)
    b_sym = (math.pi * abs(s_beta1) * _scaled_kernel_integral(inv_sinh, sp, sigma)
             + abs(2.0 * s_beta) * _scaled_kernel_integral(inv_sinh_log, sp, sigma))
    return LogEnvelope(upper=(a_sym, b_sym), lower=(-a_sym, -b_sym),
                       attained=False)


def psi0_residual(k: int, alpha: float, cos_psi0: float,
                  quad_points: int = 2560) -> float:
    """Value of int_0^inf x^(k+alpha) (e^-x + c)/(cosh x + c) dx at
    c = cos_psi0; the recommendation root is its zero."""
    sigma = k + alpha
    y, w = _graded_nodes(70.0 + 3.0 * sigma, quad_points, sigma)
    cp1 = 1.0 + cos_psi0
    vals = y ** sigma * (np.expm1(-y) + cp1) / (2.0 * np.sinh(0.5 * y) ** 2 + cp1)
    return float(np.dot(w, vals))


def psi0_solve(k: int, alpha: float) -> float:
    """cos Psi0 where the k = 0, 2 (mod 4) leading coefficient vanishes.

    The defining integral is strictly increasing in cos Psi0, so bisection
    on (-1 + 1e-9, 1) is safe; the endpoints have opposite signs because
    the attained envelope extremes do.
    """
    if k % 4 not in (0, 2):
        raise ValueError("psi0_solve applies to k = 0, 2 (mod 4) only")
    lo, hi = -1.0 + 1e-9, 1.0
    flo = psi0_residual(k, alpha, lo)
    fhi = psi0_residual(k, alpha, hi)
    if flo >= 0.0 or fhi <= 0.0:
        raise RuntimeError("no sign change for the phase-root integral")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        fmid = psi0_residual(k, alpha, mid)
        if abs(fmid) <= 1e-10:
            return mid
        if fmid > 0.0:
            hi = mid
        else:
            lo = mid
    raise RuntimeError("phase-root bisection did not converge")


def _predicted_coefficient(f: SingularIntegrand, n: int,
                           cfg: PredictorConfig) -> float:
    fam = f.family
    if isinstance(fam, Power) and f.envelope is None:
        lead = power_case_leading(f, n, cfg)
    elif isinstance(fam, PowerLog) and f.envelope is None:
        lead = log_case_leading(f, n, cfg)
    else:
        lead = leading_term(f, n, cfg)
    return lead * n ** (f.singular_exponent + 1.0)


def recommend_n(f: SingularIntegrand, n_min: int, n_max: int,
                cfg: PredictorConfig = DEFAULT_CONFIG) -> list[int]:
    """Quadrature sizes in [n_min, n_max] sorted by ascending magnitude of
    the predicted leading coefficient (ties: smaller n first).

    For k = 0, 2 (mod 4) this favors cos Psi near the phase root; for
    k = 1, 3 (mod 4) it favors cos((2n+1) phi) near 0.
    """
    if n_min > n_max or n_min < 10:
        raise ValueError("need 10 <= n_min <= n_max")
    sizes = list(range(n_min, n_max + 1))
    return sorted(sizes, key=lambda n: (abs(_predicted_coefficient(f, n, cfg)), n))


def predicted_order(f: SingularIntegrand) -> ErrorPrediction:
    """Order fields of the error prediction: leading exponent k+alpha+1
    (log factor for power-log with beta != 0) and the higher-order regime
    from the three-way split on k + alpha versus 1."""
    sigma = f.singular_exponent
    order_log = isinstance(f.family, PowerLog) and f.family.beta != 0.0
    if sigma < 1.0:
        regime, regime_log = 2.0 * sigma + 1.0, False
    elif sigma == 1.0:
        regime, regime_log = sigma + 2.0, True
    else:
        regime, regime_log = sigma + 2.0, False
    bounds = None
    if isinstance(f.family, Power):
        bounds = coefficient_bounds(f)
    return ErrorPrediction(leading=None,
                           order_exponent=sigma + 1.0,
                           order_log_factor=order_log,
                           regime_exponent=regime,
                           regime_log_factor=regime_log,
                           coefficient_bounds=bounds)
