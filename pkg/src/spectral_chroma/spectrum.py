"""Numerical-range data of the circle-averaging operator.

Scans the principal series for its minimum (the quantity that drives the
independence-ratio bound), reports the certified analytic floor, and checks
the eigenfunction identity directly by discrete circle averaging.  Grid
evaluations are independent of each other; summaries are assembled by a
single reducer with no shared mutable state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .geometry import ORIGIN, Point, circle_point, distance
from .quadrature import DEFAULT_QUADRATURE, QuadratureSpec
from .spherical import SpectralParameter, eigenvalue, envelope, principal_grid

# below this, scanned values are indistinguishable from quadrature noise
_DEGENERATE_FLOOR = 1e-12

#: golden-section refinement width in s
REFINE_XTOL = 1e-9


@dataclass(frozen=True)
class SpectrumSummary:
    """Scan result for one radius.

    M is assigned, not scanned: on a finite-volume quotient the constant
    function is an eigenfunction with eigenvalue 1, while the plane itself
    has sup strictly below 1; the bound pipeline uses the quotient value.
    m_numeric is the scanned (uncertified) minimum; m_analytic the
    certified floor -(r+1)exp(-r/2).
    """

    r: float
    M: float
    m_numeric: float
    m_analytic: float
    argmin_s: float
    s_max_scanned: float
    grid_step: float
    degenerate: bool = False


def default_s_max(r: float) -> float:
    """Scan window wide enough for several oscillation lobes: max(100, 40/r)."""
    return max(100.0, 40.0 / r)


def _golden_min(f, a: float, b: float, xtol: float) -> tuple[float, float]:
    inv_phi = (math.sqrt(5.0) - 1.0) / 2.0
    c = b - inv_phi * (b - a)
    d = a + inv_phi * (b - a)
    fc, fd = f(c), f(d)
    while (b - a) > xtol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - inv_phi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + inv_phi * (b - a)
            fd = f(d)
    return (c, fc) if fc < fd else (d, fd)


def scan_principal(
    r: float,
    s_max: float | None = None,
    grid_step: float = 0.05,
    quad: QuadratureSpec = DEFAULT_QUADRATURE,
) -> SpectrumSummary:
    """Scan the principal series on [0, s_max] and refine the minimum.

    The grid minimum is refined by golden-section search inside its
    bracketing cell to REFINE_XTOL in s.  When the envelope is already
    below the quadrature noise scale the scan is skipped and the summary
    is flagged degenerate with m_numeric = 0.
    """
    if not (math.isfinite(r) and r > 0.0):
        raise DomainError(f"scan needs r > 0, got {r}")
    if s_max is None:
        s_max = default_s_max(r)
    if not (math.isfinite(s_max) and s_max >= 1.0):
        raise DomainError(f"s_max < 1 would make the scan vacuous, got {s_max}")
    if not (math.isfinite(grid_step) and grid_step > 0.0):
        raise DomainError(f"grid_step must be positive, got {grid_step}")

    env = envelope(r)
    m_analytic = -env
    if env < max(10.0 * quad.abs_tol, _DEGENERATE_FLOOR):
        return SpectrumSummary(
            r=r, M=1.0, m_numeric=0.0, m_analytic=m_analytic, argmin_s=0.0,
            s_max_scanned=s_max, grid_step=grid_step, degenerate=True,
        )

    grid = np.arange(0.0, s_max + 0.5 * grid_step, grid_step)
    values = principal_grid(grid, r, quad)
    i = int(np.argmin(values))
    lo = grid[max(i - 1, 0)]
    hi = grid[min(i + 1, grid.size - 1)]
    f = lambda s: eigenvalue(SpectralParameter.principal(s), r, quad)
    argmin_s, m_refined = _golden_min(f, float(lo), float(hi), REFINE_XTOL)
    if values[i] < m_refined:
        argmin_s, m_refined = float(grid[i]), float(values[i])

    return SpectrumSummary(
        r=r, M=1.0, m_numeric=m_refined, m_analytic=m_analytic, argmin_s=argmin_s,
        s_max_scanned=float(s_max), grid_step=float(grid_step),
    )


def full_range_floor(r: float) -> float:
    """Certified lower bound -(r+1)exp(-r/2) for the whole numerical range.

    Complementary-series values are strictly positive, so the principal
    envelope floors every value the operator can attain on a quotient.
    """
    if not (math.isfinite(r) and r > 0.0):
        raise DomainError(f"full_range_floor needs r > 0, got {r}")
    return -envelope(r)


def verify_eigenfunction(
    param: SpectralParameter,
    r: float,
    base: Point,
    n_points: int,
    quad: QuadratureSpec = DEFAULT_QUADRATURE,
) -> float:
    """Residual of the eigenfunction identity at one base point.

    phi(z) = eigenvalue(param, distance(z, i)) is averaged over n_points
    equally spaced points of the radius-r circle around base, and the
    result is compared with eigenvalue(param, r) * phi(base).  Equal angle
    steps realize the rotation-invariant measure, so this is a trapezoid
    rule on a smooth periodic integrand and the residual decays spectrally
    in n_points.
    """
    if n_points < 8:
        raise DomainError(f"n_points must be at least 8, got {n_points}")
    if not (math.isfinite(r) and r > 0.0):
        raise DomainError(f"verification needs r > 0, got {r}")

    step = 2.0 * math.pi / n_points
    total = 0.0
    for j in range(n_points):
        z = circle_point(base, r, j * step)
        total += eigenvalue(param, distance(z, ORIGIN), quad)
    average = total / n_points
    expected = eigenvalue(param, r, quad) * eigenvalue(param, distance(base, ORIGIN), quad)
    return abs(average - expected)
