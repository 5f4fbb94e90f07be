"""Adaptive Gauss-Kronrod quadrature, vectorized over panels.

The engine below drives every production integral in this package.  It is a
global-adaptive (7, 15)-point Gauss-Kronrod scheme: the Kronrod value is the
panel estimate, |K15 - G7| the (conservative) error estimate, and the worst
panels are bisected in batches until the summed error estimate meets the
absolute tolerance.  Integrands are evaluated on whole node arrays at once,
so callers must accept numpy arrays.

Unit-interval helpers handle integrals of quantile-style integrands over
(0, 1).  Both tails are mapped through u = s**4 (resp. 1 - u = s**4), which
flattens every algebraic endpoint singularity appearing here (the worst is
(1-u)**(-3/2) from heavy-tailed quantile densities) into a bounded integrand.
Truncating the transformed variable at ``tail_eps`` therefore leaves a
genuinely negligible tail, and the collar run that halves the effective
truncation verifies this at run time: a collar contribution at or above
``abs_tol`` signals a divergent or tail-dominated integral and raises.
"""

from __future__ import annotations

import heapq
from collections.abc import Callable

import numpy as np

from .errors import NumericalError

# (7, 15) Gauss-Kronrod nodes and weights on [-1, 1]; the Gauss-7 nodes are
# the odd-indexed Kronrod nodes.
_XGK_HALF = np.array(
    [
        0.991455371120812639206854697526329,
        0.949107912342758524526189684047851,
        0.864864423359769072789712788640926,
        0.741531185599394439863864773280788,
        0.586087235467691130294144838258730,
        0.405845151377397166906606412076961,
        0.207784955007898467600689403773245,
        0.0,
    ]
)
_WGK_HALF = np.array(
    [
        0.022935322010529224963732008058970,
        0.063092092629978553290700663189204,
        0.104790010322250183839876322541518,
        0.140653259715525918745189590510238,
        0.169004726639267902826583426598550,
        0.190350578064785409913256402421014,
        0.204432940075298892414161999234649,
        0.209482141084727828012999174891714,
    ]
)
_WG7_HALF = np.array(
    [
        0.129484966168869693270611432679082,
        0.279705391489276667901467771423780,
        0.381830050505118944950369775488975,
        0.417959183673469387755102040816327,
    ]
)

XGK = np.concatenate([-_XGK_HALF[:-1], _XGK_HALF[::-1]])  # 15 ascending nodes
WGK = np.concatenate([_WGK_HALF[:-1], _WGK_HALF[::-1]])
WG7 = np.concatenate([_WG7_HALF[:-1], _WG7_HALF[::-1]])  # weights of nodes 1,3,..,13

_TAIL_POWER = 4


def _eval_panels(f, a: np.ndarray, b: np.ndarray):
    """Kronrod value and |K15 - G7| error estimate for a batch of panels."""
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    x = mid[:, None] + half[:, None] * XGK[None, :]
    y = np.asarray(f(x.reshape(-1)), dtype=float).reshape(x.shape)
    if not np.all(np.isfinite(y)):
        raise NumericalError("integrand returned a non-finite value")
    kron = half * (y @ WGK)
    gauss = half * (y[:, 1::2] @ WG7)
    return kron, np.abs(kron - gauss)


def _geometric_edges(a: float, b: float, n: int) -> np.ndarray:
    """Panel edges for [a, b]; geometric when the interval spans decades."""
    if a > 0.0 and b / a > 100.0:
        return np.geomspace(a, b, n + 1)
    return np.linspace(a, b, n + 1)


def integrate(
    f: Callable[[np.ndarray], np.ndarray],
    a: float,
    b: float,
    abs_tol: float,
    *,
    max_panels: int = 4096,
    init: int = 8,
    strict: bool = True,
) -> tuple[float, float]:
    """Integrate ``f`` over [a, b] to absolute tolerance ``abs_tol``.

    Returns (value, error_estimate).  With ``strict`` (default) a panel
    budget overrun raises :class:`NumericalError`; otherwise the best
    available estimate is returned.
    """
    if not b > a:
        return 0.0, 0.0
    edges = _geometric_edges(a, b, min(init, max_panels))
    lo, hi = list(edges[:-1]), list(edges[1:])
    vals, errs = _eval_panels(f, np.array(lo), np.array(hi))
    vals, errs = list(vals), list(errs)
    heap = [(-errs[i], i) for i in range(len(lo))]
    heapq.heapify(heap)
    span = b - a

    while sum(errs) > abs_tol:
        batch = []
        worst = None
        while heap and len(batch) < 32:
            negerr, i = heapq.heappop(heap)
            if worst is None:
                worst = -negerr
            elif -negerr < worst / 8.0:
                heapq.heappush(heap, (negerr, i))
                break
            if hi[i] - lo[i] > 1e-15 * span:
                batch.append(i)
        if not batch:
            if strict:
                raise NumericalError("quadrature did not converge (panel floor)")
            break
        if len(lo) + 2 * len(batch) > max_panels:
            if strict:
                raise NumericalError("quadrature did not converge (panel budget)")
            break
        mids = [0.5 * (lo[i] + hi[i]) for i in batch]
        na = np.array([lo[i] for i in batch] + mids)
        nb = np.array(mids + [hi[i] for i in batch])
        nv, ne = _eval_panels(f, na, nb)
        for i in batch:
            vals[i] = 0.0
            errs[i] = 0.0
        for j in range(len(na)):
            lo.append(na[j])
            hi.append(nb[j])
            vals.append(nv[j])
            errs.append(ne[j])
            heapq.heappush(heap, (-ne[j], len(lo) - 1))
    return float(sum(vals)), float(sum(errs))


def _eval_cells(f, ax, bx, ay, by):
    """Tensor K15xK15 value and error estimate for a batch of cells."""
    hx = 0.5 * (bx - ax)
    hy = 0.5 * (by - ay)
    x = (0.5 * (ax + bx))[:, None] + hx[:, None] * XGK[None, :]
    y = (0.5 * (ay + by))[:, None] + hy[:, None] * XGK[None, :]
    xx = np.broadcast_to(x[:, :, None], (x.shape[0], 15, 15))
    yy = np.broadcast_to(y[:, None, :], (y.shape[0], 15, 15))
    z = np.asarray(f(xx.reshape(-1), yy.reshape(-1)), dtype=float).reshape(xx.shape)
    if not np.all(np.isfinite(z)):
        raise NumericalError("integrand returned a non-finite value")
    area = hx * hy
    kron = area * np.einsum("cij,i,j->c", z, WGK, WGK)
    gauss = area * np.einsum("cij,i,j->c", z[:, 1::2, 1::2], WG7, WG7)
    return kron, np.abs(kron - gauss)


def integrate_2d(
    f: Callable[[np.ndarray, np.ndarray], np.ndarray],
    ax: float,
    bx: float,
    ay: float,
    by: float,
    abs_tol: float,
    *,
    max_cells: int = 150_000,
    init: int = 4,
    strict: bool = True,
) -> tuple[float, float]:
    """Integrate ``f(x, y)`` over [ax, bx] x [ay, by] adaptively.

    Cells are split across their longer side; ``f`` receives flat arrays.
    """
    if not (bx > ax and by > ay):
        return 0.0, 0.0
    ex = _geometric_edges(ax, bx, init)
    ey = _geometric_edges(ay, by, init)
    cax, cbx, cay, cby = [], [], [], []
    for i in range(init):
        for j in range(init):
            cax.append(ex[i])
            cbx.append(ex[i + 1])
            cay.append(ey[j])
            cby.append(ey[j + 1])
    vals, errs = _eval_cells(f, np.array(cax), np.array(cbx), np.array(cay), np.array(cby))
    vals, errs = list(vals), list(errs)
    heap = [(-errs[i], i) for i in range(len(cax))]
    heapq.heapify(heap)
    span_x, span_y = bx - ax, by - ay

    while sum(errs) > abs_tol:
        batch = []
        worst = None
        while heap and len(batch) < 64:
            negerr, i = heapq.heappop(heap)
            if worst is None:
                worst = -negerr
            elif -negerr < worst / 8.0:
                heapq.heappush(heap, (negerr, i))
                break
            if (cbx[i] - cax[i]) > 1e-14 * span_x or (cby[i] - cay[i]) > 1e-14 * span_y:
                batch.append(i)
        if not batch:
            if strict:
                raise NumericalError("quadrature did not converge (cell floor)")
            break
        if len(cax) + 2 * len(batch) > max_cells:
            if strict:
                raise NumericalError("quadrature did not converge (cell budget)")
            break
        nax, nbx, nay, nby = [], [], [], []
        for i in batch:
            wx, wy = cbx[i] - cax[i], cby[i] - cay[i]
            if wx >= wy:
                mx = 0.5 * (cax[i] + cbx[i])
                nax += [cax[i], mx]
                nbx += [mx, cbx[i]]
                nay += [cay[i], cay[i]]
                nby += [cby[i], cby[i]]
            else:
                my = 0.5 * (cay[i] + cby[i])
                nax += [cax[i], cax[i]]
                nbx += [cbx[i], cbx[i]]
                nay += [cay[i], my]
                nby += [my, cby[i]]
            vals[i] = 0.0
            errs[i] = 0.0
        nv, ne = _eval_cells(f, np.array(nax), np.array(nbx), np.array(nay), np.array(nby))
        for j in range(len(nax)):
            cax.append(nax[j])
            cbx.append(nbx[j])
            cay.append(nay[j])
            cby.append(nby[j])
            vals.append(nv[j])
            errs.append(ne[j])
            heapq.heappush(heap, (-ne[j], len(cax) - 1))
    return float(sum(vals)), float(sum(errs))


# ---------------------------------------------------------------------------
# Unit-interval integrals of quantile-style integrands
# ---------------------------------------------------------------------------

_S_HALF = 0.5 ** (1.0 / _TAIL_POWER)  # s value mapping to u = 1/2


def _half_integrand(g, upper: bool):
    def f(s: np.ndarray) -> np.ndarray:
        p = s**_TAIL_POWER
        return g(p, upper) * (_TAIL_POWER * s ** (_TAIL_POWER - 1))

    return f


def unit_integral(
    g: Callable[[np.ndarray, bool], np.ndarray],
    abs_tol: float,
    tail_eps: float,
) -> float:
    """Integrate ``g`` over the unit interval with tail substitution.

    ``g(p, upper)`` must return the integrand at u = p when ``upper`` is
    False and at u = 1 - p when True, so callers can evaluate both tails
    without forming 1 - u in floating point.  The effective truncation is
    u within [tail_eps**4, 1 - tail_eps**4]; the collar that would halve
    that truncation is integrated separately and must stay below
    ``abs_tol`` (otherwise the integral is declared tail-sensitive).
    """
    s0 = tail_eps
    s_collar = s0 * 0.5 ** (1.0 / _TAIL_POWER)
    total = 0.0
    collar = 0.0
    collar_err = 0.0
    for upper in (False, True):
        f = _half_integrand(g, upper)
        val, _ = integrate(f, s0, _S_HALF, abs_tol / 2.0)
        cval, cerr = integrate(
            f, s_collar, s0, abs_tol / 4.0, max_panels=64, init=2, strict=False
        )
        total += val
        collar += cval
        collar_err += cerr
    if abs(collar) + collar_err >= abs_tol:
        raise NumericalError(
            "integral is tail-sensitive: halving the tail truncation moved "
            f"the result by ~{abs(collar) + collar_err:.3e} (>= abs_tol)"
        )
    return total + collar


def _quadrant_integrand(g2, upper_u: bool, upper_v: bool):
    jac = float(_TAIL_POWER * _TAIL_POWER)

    def f(s: np.ndarray, t: np.ndarray) -> np.ndarray:
        pu = s**_TAIL_POWER
        pv = t**_TAIL_POWER
        w = jac * s ** (_TAIL_POWER - 1) * t ** (_TAIL_POWER - 1)
        return g2(pu, upper_u, pv, upper_v) * w

    return f


def unit_integral_2d(
    g2: Callable[[np.ndarray, bool, np.ndarray, bool], np.ndarray],
    abs_tol: float,
    tail_eps: float,
) -> float:
    """Integrate ``g2`` over the unit square with per-axis tail substitution.

    ``g2(pu, upper_u, pv, upper_v)`` mirrors :func:`unit_integral`: each
    axis is evaluated from whichever end is numerically exact.  The square
    splits into four quadrants at (1/2, 1/2); each runs with budget
    abs_tol / 4.  Collar frames (the region a halved truncation would add)
    are integrated cheaply and gate the same tail-sensitivity check.
    """
    s0 = tail_eps
    s1 = s0 * 0.5 ** (1.0 / _TAIL_POWER)
    total = 0.0
    collar = 0.0
    collar_err = 0.0
    for upper_u in (False, True):
        for upper_v in (False, True):
            f = _quadrant_integrand(g2, upper_u, upper_v)
            val, _ = integrate_2d(f, s0, _S_HALF, s0, _S_HALF, abs_tol / 4.0)
            total += val
            for rect in (
                (s1, s0, s0, _S_HALF),
                (s0, _S_HALF, s1, s0),
                (s1, s0, s1, s0),
            ):
                cval, cerr = integrate_2d(
                    f, *rect, abs_tol / 8.0, max_cells=128, init=1, strict=False
                )
                collar += cval
                collar_err += cerr
    if abs(collar) + collar_err >= abs_tol:
        raise NumericalError(
            "double integral is tail-sensitive: halving the tail truncation "
            f"moved the result by ~{abs(collar) + collar_err:.3e} (>= abs_tol)"
        )
    return total + collar
