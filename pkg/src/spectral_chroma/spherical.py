"""Eigenvalues of the circle-averaging operator on the hyperbolic plane.

The rotation-invariant eigenfunctions attach to each spectral parameter an
eigenvalue equal to the conical Legendre value P_{-1/2+is}(cosh r).  This
module evaluates it three independent ways:

* ``eigenvalue``           -- singular integral representation
                              sqrt(2)/pi * int_0^r k(x)/sqrt(cosh r - cosh x) dx
                              with kernel k(x) = cos(s x) on the principal
                              series and cosh(sigma x) on the complementary
                              series, desingularized by x = r - u^2 and
                              integrated with adaptive Gauss-Kronrod panels;
* ``eigenvalue_ode``       -- the radial differential equation
                              u'' + coth(t) u' + lam u = 0, u(0) = 1, u'(0) = 0;
* ``eigenvalue_scaled_form`` -- the rescaled integral over [0, 1], left in
                              singular form and handed to extrapolating QAGS.

It also provides the uniform envelope (r+1) exp(-r/2) that bounds every
principal-series eigenvalue.  Evaluation is stateless; grid sweeps are safe
to run unsynchronized in parallel.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad as _qags
from scipy.integrate import solve_ivp

from .errors import DomainError, StepSizeUnderflow
from .quadrature import (
    _NODES,
    _WEIGHTS_GAUSS,
    _WEIGHTS_KRONROD,
    DEFAULT_QUADRATURE,
    QuadratureSpec,
    integrate,
)

_SQRT2_OVER_PI = math.sqrt(2.0) / math.pi

PRINCIPAL = "principal"
COMPLEMENTARY = "complementary"

# sinh overflows past ~710, where the eigenvalues are below 1e-150 anyway
MAX_EVAL_RADIUS = 700.0

# supported window of the ODE route
ODE_MAX_S = 100.0
ODE_MAX_R = 30.0
_ODE_SEED_T = 1e-4


@dataclass(frozen=True)
class SpectralParameter:
    """A point of the unitary dual.

    ``principal`` carries a real parameter s (eigenvalue may oscillate in
    sign), ``complementary`` a real shift sigma with |sigma| <= 1/2
    (eigenvalue strictly positive).  The stored value is canonicalized to
    be non-negative -- both kernels are even -- with the original sign kept
    as metadata only.
    """

    kind: str
    value: float
    sign: int = 1

    def __post_init__(self):
        if self.kind not in (PRINCIPAL, COMPLEMENTARY):
            raise DomainError(f"unknown spectral parameter kind {self.kind!r}")
        if not math.isfinite(self.value):
            raise DomainError(f"spectral parameter must be finite, got {self.value}")
        if self.value < 0.0:
            object.__setattr__(self, "sign", -1)
            object.__setattr__(self, "value", -self.value)
        if self.kind == COMPLEMENTARY and self.value > 0.5:
            raise DomainError(f"complementary parameter needs |sigma| <= 1/2, got {self.sign * self.value}")

    @classmethod
    def principal(cls, s: float) -> "SpectralParameter":
        return cls(PRINCIPAL, s)

    @classmethod
    def complementary(cls, sigma: float) -> "SpectralParameter":
        return cls(COMPLEMENTARY, sigma)


def envelope(r: float) -> float:
    """Uniform principal-series bound (r+1) exp(-r/2)."""
    if not (math.isfinite(r) and r >= 0.0):
        raise DomainError(f"envelope needs r >= 0, got {r}")
    if r > 700.0:
        # exp underflows first; go through log space
        return math.exp(log_envelope(r))
    return (r + 1.0) * math.exp(-0.5 * r)


def log_envelope(r: float) -> float:
    """log of the envelope, usable far past the underflow point."""
    if not (math.isfinite(r) and r >= 0.0):
        raise DomainError(f"log_envelope needs r >= 0, got {r}")
    return math.log1p(r) - 0.5 * r


def _sinhc(w: np.ndarray) -> np.ndarray:
    """sinh(w)/w, smooth through w = 0."""
    small = w < 1e-4
    safe = np.where(small, 1.0, w)
    return np.where(small, 1.0 + w * w / 6.0, np.sinh(safe) / safe)


def _smooth_weight(u: np.ndarray, r: float) -> np.ndarray:
    """Weight of the desingularized integrand.

    After x = r - u^2, dx/sqrt(cosh r - cosh x) becomes w(u) du with
    w(u) = 2 / sqrt(sinh(r - u^2/2) * sinhc(u^2/2)), using
    cosh r - cosh x = 2 sinh((r+x)/2) sinh((r-x)/2) to dodge cancellation.
    """
    w = 0.5 * u * u
    return 2.0 / np.sqrt(np.sinh(r - w) * _sinhc(w))


def _check_radius(r: float):
    if not (math.isfinite(r) and r >= 0.0):
        raise DomainError(f"radius must be a finite non-negative real, got {r}")
    if r > MAX_EVAL_RADIUS:
        raise DomainError(
            f"radius {r} exceeds the supported range r <= {MAX_EVAL_RADIUS}; "
            "eigenvalues there are below 1e-150"
        )


def eigenvalue(param: SpectralParameter, r: float, quad: QuadratureSpec = DEFAULT_QUADRATURE) -> float:
    """Averaging-operator eigenvalue at spectral parameter ``param``, radius r.

    Absolute error is bounded by quad.abs_tol.  The limit value 1 is
    returned for r = 0 (degenerate circle).  Panel widths are capped at
    oscillation_panel_factor * pi / max(s, 1) so each panel sees a bounded
    stretch of the oscillation; the budget is policed by quad.
    """
    _check_radius(r)
    if r == 0.0:
        return 1.0
    if param.kind == PRINCIPAL:
        s = param.value
        kernel = lambda x: np.cos(s * x)
        h_max = quad.oscillation_panel_factor * math.pi / max(s, 1.0)
    else:
        sigma = param.value
        kernel = lambda x: np.cosh(sigma * x)
        h_max = quad.oscillation_panel_factor * math.pi

    def integrand(u):
        return _SQRT2_OVER_PI * kernel(r - u * u) * _smooth_weight(u, r)

    value, _, _ = integrate(integrand, 0.0, math.sqrt(r), quad.abs_tol, quad.max_subdivisions, h_max)
    return value


def principal_grid(s_values, r: float, quad: QuadratureSpec = DEFAULT_QUADRATURE) -> np.ndarray:
    """Principal-series eigenvalues for a whole grid of s at one radius.

    The non-oscillatory weight is shared across the grid on panels sized
    for the largest s; any grid point whose Kronrod-Gauss estimate misses
    quad.abs_tol falls back to the fully adaptive single-point path.
    """
    s = np.atleast_1d(np.asarray(s_values, dtype=float))
    if s.ndim != 1:
        raise DomainError("s_values must be one-dimensional")
    if not np.all(np.isfinite(s)) or np.any(s < 0.0):
        raise DomainError("s grid must be finite and non-negative")
    _check_radius(r)
    if r == 0.0:
        return np.ones_like(s)

    sqrt_r = math.sqrt(r)
    h_max = quad.oscillation_panel_factor * math.pi / max(float(s.max()), 1.0)
    n_panels = max(1, int(math.ceil(sqrt_r / h_max)))
    edges = np.linspace(0.0, sqrt_r, n_panels + 1)
    mids = 0.5 * (edges[:-1] + edges[1:])
    halves = 0.5 * (edges[1:] - edges[:-1])
    u_nodes = (mids[:, None] + halves[:, None] * _NODES[None, :]).ravel()
    x_nodes = r - u_nodes * u_nodes
    weight = _SQRT2_OVER_PI * _smooth_weight(u_nodes, r)

    values = np.empty_like(s)
    errors = np.empty_like(s)
    eps = float(np.finfo(float).eps)
    block = max(1, int(2_000_000 // max(x_nodes.size, 1)))
    for start in range(0, s.size, block):
        sb = s[start:start + block]
        fv = np.cos(sb[:, None] * x_nodes[None, :]) * weight[None, :]
        fv = fv.reshape(sb.size, n_panels, _NODES.size)
        kron = (fv @ _WEIGHTS_KRONROD) * halves[None, :]
        gauss = (fv @ _WEIGHTS_GAUSS) * halves[None, :]
        kron_abs = (np.abs(fv) @ _WEIGHTS_KRONROD) * halves[None, :]
        raw = np.abs(kron - gauss)
        err = np.maximum(np.minimum(raw, (200.0 * raw) ** 1.5), 50.0 * eps * kron_abs)
        errors[start:start + block] = err.sum(axis=1)
        values[start:start + block] = kron.sum(axis=1)

    for i in np.nonzero(errors > quad.abs_tol)[0]:
        values[i] = eigenvalue(SpectralParameter.principal(s[i]), r, quad)
    return values


def _series_seed(lam: float, t: float) -> tuple[float, float]:
    # even Taylor series of the regular solution about t = 0
    a1 = -lam / 4.0
    a2 = lam * (lam + 2.0 / 3.0) / 64.0
    a3 = (-a2 * (lam + 4.0 / 3.0) + 2.0 * a1 / 45.0) / 36.0
    t2 = t * t
    u = 1.0 + t2 * (a1 + t2 * (a2 + t2 * a3))
    du = t * (2.0 * a1 + t2 * (4.0 * a2 + t2 * 6.0 * a3))
    return u, du


def eigenvalue_ode(param: SpectralParameter, r: float) -> float:
    """Same eigenvalue through the radial differential equation.

    The regular solution of u'' + coth(t) u' + lam u = 0, u(0) = 1,
    u'(0) = 0 is evaluated at t = r, with lam = s^2 + 1/4 on the principal
    series and 1/4 - sigma^2 on the complementary one.  The solution is
    Taylor-seeded just off the coordinate singularity at t = 0 and carried
    to r by an 8th-order adaptive Runge-Kutta scheme.  Supported window:
    s <= 100, r <= 30.
    """
    if not (math.isfinite(r) and r >= 0.0):
        raise DomainError(f"radius must be a finite non-negative real, got {r}")
    if r > ODE_MAX_R:
        raise StepSizeUnderflow(f"r = {r} outside the supported ODE range r <= {ODE_MAX_R}")
    if param.kind == PRINCIPAL:
        if param.value > ODE_MAX_S:
            raise StepSizeUnderflow(f"s = {param.value} outside the supported ODE range s <= {ODE_MAX_S}")
        lam = param.value * param.value + 0.25
    else:
        lam = 0.25 - param.value * param.value

    if r <= _ODE_SEED_T:
        return _series_seed(lam, r)[0]
    u0, du0 = _series_seed(lam, _ODE_SEED_T)

    def rhs(t, y):
        return (y[1], -y[1] / math.tanh(t) - lam * y[0])

    sol = solve_ivp(rhs, (_ODE_SEED_T, r), (u0, du0), method="DOP853", rtol=1e-12, atol=1e-14)
    if not sol.success:
        raise StepSizeUnderflow(f"radial integration failed: {sol.message}")
    return float(sol.y[0, -1])


def eigenvalue_scaled_form(param: SpectralParameter, r: float) -> float:
    """Cross-check route: the rescaled representation on [0, 1].

    Evaluates sqrt(2)/pi * r * int_0^1 k(r x)/sqrt(cosh r - cosh(r x)) dx
    without desingularizing, relying on QAGS endpoint extrapolation.
    Intended for moderate oscillation (s * r up to a few tens).
    """
    _check_radius(r)
    if r == 0.0:
        return 1.0
    if param.kind == PRINCIPAL:
        s = param.value
        kernel = lambda x: math.cos(s * x)
    else:
        sigma = param.value
        kernel = lambda x: math.cosh(sigma * x)

    def integrand(x):
        rx = r * x
        gap = 2.0 * math.sinh(0.5 * (r + rx)) * math.sinh(0.5 * (r - rx))
        return kernel(rx) / math.sqrt(gap)

    value, _ = _qags(integrand, 0.0, 1.0, epsabs=1e-12, epsrel=1e-12, limit=500)
    return _SQRT2_OVER_PI * r * value
