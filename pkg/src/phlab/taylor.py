"""Truncated Taylor-series arithmetic used for exact jet transport of curves.

A series is a 1-D float array c with c[k] the coefficient of t^k, truncated
at a fixed order. Curve jets (unit tangent plus arclength-derivative scalars)
convert to and from position series, so pushing a jet through a smooth map is
plain series composition followed by re-arclength-parameterization. No finite
differences are involved anywhere; finite differences appear only in tests as
an independent oracle.
"""

from __future__ import annotations

import math

import numpy as np

__all__ = [
    "series_mul",
    "series_compose",
    "series_recip",
    "series_sqrt",
    "series_deriv",
    "series_integ",
    "series_revert",
    "series_eval",
    "jets_to_position_series",
    "position_series_to_jets",
]


def series_mul(a: np.ndarray, b: np.ndarray, order: int) -> np.ndarray:
    """Product of two series truncated at t^order."""
    out = np.convolve(a[: order + 1], b[: order + 1])[: order + 1]
    if len(out) < order + 1:
        out = np.pad(out, (0, order + 1 - len(out)))
    return out


def series_compose(a: np.ndarray, b: np.ndarray, order: int) -> np.ndarray:
    """Composition a(b(t)) truncated at t^order; requires b[0] == 0."""
    if abs(b[0]) > 1e-14:
        raise ValueError("series_compose requires inner series with zero constant term")
    # Horner evaluation in the ring of truncated series.
    acc = np.zeros(order + 1)
    for k in range(min(len(a) - 1, order), 0, -1):
        acc[0] += a[k]
        acc = series_mul(acc, b, order)
    acc[0] += a[0]
    return acc


def series_recip(a: np.ndarray, order: int) -> np.ndarray:
    """Reciprocal 1/a(t) truncated at t^order; requires a[0] != 0."""
    if a[0] == 0.0:
        raise ZeroDivisionError("series_recip requires nonzero constant term")
    out = np.zeros(order + 1)
    out[0] = 1.0 / a[0]
    for k in range(1, order + 1):
        s = 0.0
        for j in range(1, min(k, len(a) - 1) + 1):
            s += a[j] * out[k - j]
        out[k] = -s / a[0]
    return out


def series_sqrt(a: np.ndarray, order: int) -> np.ndarray:
    """Square root of a series with positive constant term."""
    if a[0] <= 0.0:
        raise ValueError("series_sqrt requires positive constant term")
    out = np.zeros(order + 1)
    out[0] = math.sqrt(a[0])
    for k in range(1, order + 1):
        s = a[k] if k < len(a) else 0.0
        for j in range(1, k):
            s -= out[j] * out[k - j]
        out[k] = s / (2.0 * out[0])
    return out


def series_deriv(a: np.ndarray) -> np.ndarray:
    if len(a) <= 1:
        return np.zeros(1)
    return a[1:] * np.arange(1, len(a))


def series_integ(a: np.ndarray) -> np.ndarray:
    out = np.zeros(len(a) + 1)
    out[1:] = a / np.arange(1, len(a) + 1)
    return out


def series_revert(s: np.ndarray, order: int) -> np.ndarray:
    """Compositional inverse t(s) of s(t) with s[0] = 0, s[1] != 0.

    Newton iteration on t -> t - (s(t) - id)/s'(t) in the truncated ring,
    doubling the correct order each pass.
    """
    if abs(s[0]) > 1e-14 or s[1] == 0.0:
        raise ValueError("series_revert requires s(0)=0 and s'(0) != 0")
    t = np.zeros(order + 1)
    t[1] = 1.0 / s[1]
    ds = series_deriv(s)
    ident = np.zeros(order + 1)
    if order >= 1:
        ident[1] = 1.0
    for _ in range(max(1, math.ceil(math.log2(order + 1)) + 1)):
        err = series_compose(s, t, order) - ident
        slope = series_compose(np.pad(ds, (0, 1)), t, order)
        t = t - series_mul(err, series_recip(slope, order), order)
    return t


def series_eval(a: np.ndarray, t: float) -> float:
    """Horner evaluation of the truncated series at t."""
    v = 0.0
    for c in a[::-1]:
        v = v * t + c
    return v


def jets_to_position_series(
    point: np.ndarray, tangent: np.ndarray, scalars: np.ndarray, order: int
) -> np.ndarray:
    """Position series of the arclength curve with given jets at t=0.

    `scalars` holds (d^2, d^3, ..., d^q): the signed curvature and its
    arclength derivatives. Returns an array of shape (order+1, 2). Solves
    T' = kappa * perp(T), gamma' = T order by order; the result is exact to
    the truncation order given the jets.
    """
    kappa = np.zeros(order + 1)
    for i, s in enumerate(scalars):
        if i <= order:
            kappa[i] = s / math.factorial(i)
    tx = np.zeros(order + 1)
    ty = np.zeros(order + 1)
    tx[0], ty[0] = tangent
    # each pass fixes one more order of T
    for _ in range(order):
        ptx = -ty  # perp(T) = (-Ty, Tx)
        pty = tx
        dtx = series_mul(kappa, ptx, order - 1 if order > 0 else 0)
        dty = series_mul(kappa, pty, order - 1 if order > 0 else 0)
        ntx = series_integ(dtx)[: order + 1]
        nty = series_integ(dty)[: order + 1]
        ntx[0], nty[0] = tangent
        tx, ty = ntx, nty
    gx = series_integ(tx)[: order + 1]
    gy = series_integ(ty)[: order + 1]
    gx[0], gy[0] = point
    return np.column_stack([gx, gy])


def position_series_to_jets(c: np.ndarray, order: int):
    """Arclength jets of a regular curve given by a position series.

    Returns (point, unit_tangent, scalars, arclength_series) where scalars is
    (d^2, ..., d^order) of the re-parameterized-by-length curve and
    arclength_series is s(t) with s(0)=0. The top scalar orders are exact to
    the information content of the input series.
    """
    m = len(c) - 1
    vx = series_deriv(c[:, 0])
    vy = series_deriv(c[:, 1])
    vx = np.pad(vx, (0, m - len(vx) + 1))[: m + 1]
    vy = np.pad(vy, (0, m - len(vy) + 1))[: m + 1]
    speed2 = series_mul(vx, vx, m) + series_mul(vy, vy, m)
    if speed2[0] <= 0.0:
        raise ValueError("position series is not regular at t=0")
    speed = series_sqrt(speed2, m)
    s_of_t = series_integ(speed)[: m + 1]
    point = c[0].copy()
    sp0 = speed[0]
    tangent = np.array([vx[0] / sp0, vy[0] / sp0])

    # signed curvature as a series in t: (v x a) / |v|^3
    ax = series_deriv(vx)
    ay = series_deriv(vy)
    ax = np.pad(ax, (0, m - len(ax) + 1))[: m + 1]
    ay = np.pad(ay, (0, m - len(ay) + 1))[: m + 1]
    cross = series_mul(vx, ay, m) - series_mul(vy, ax, m)
    inv_sp3 = series_recip(series_mul(speed, speed2, m), m)
    kappa_t = series_mul(cross, inv_sp3, m)

    # compose with t(s) to get curvature in the arclength parameter
    t_of_s = series_revert(s_of_t, m)
    kappa_s = series_compose(kappa_t, t_of_s, m)

    scalars = np.array(
        [kappa_s[k] * math.factorial(k) for k in range(0, max(order - 1, 0))]
    )
    return point, tangent, scalars, s_of_t
